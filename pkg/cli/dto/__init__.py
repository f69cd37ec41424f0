from .report_dto import (
    TimeClassDto,
    TimeIndependentDto,
    PolynomialDto,
    QuasipolynomialDto,
    OtherTimeDto,
    ReportDto,
)
from .corpus_dto import (
    CandidateDto,
    CaseDto,
    AnsatzCaseDto,
    CorpusEntryDto,
)

__all__ = [
    "TimeClassDto",
    "TimeIndependentDto",
    "PolynomialDto",
    "QuasipolynomialDto",
    "OtherTimeDto",
    "ReportDto",
    "CandidateDto",
    "CaseDto",
    "AnsatzCaseDto",
    "CorpusEntryDto",
]
