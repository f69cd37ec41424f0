import asyncio
import io
import json
from pathlib import Path

import pytest

from base_cls import CorpusFormatError
from cli import run, build_parser, runtime_config, parse_corpus, run_entry, run_corpus, EXIT_OK, EXIT_MISMATCH, EXIT_USAGE
from cli import commands, reports
from cli.reports import structure_failures
from context import RuntimeConfig
from symmetry import is_symmetry, representation_decompose
from cli.dto import TimeClassDto, PolynomialDto, QuasipolynomialDto, ReportDto


CORPUS = Path(__file__).resolve().parent.parent / "corpus" / "equations.corpus"
KDV = "u3 + 6*u*u1"


def invoke(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


class TestCommands:

    def test_check_symmetry(self):
        code, text = invoke("check", "--equation", KDV, "--candidate", "1 + 6*t*u1")
        assert code == EXIT_OK
        assert text.splitlines()[0] == "SYMMETRY, order 1, time dependence: polynomial degree 1"

    def test_check_not_symmetry(self):
        code, text = invoke("check", "--equation", KDV, "--candidate", "u2")
        assert code == EXIT_MISMATCH
        assert text.startswith("NOT A SYMMETRY, order 2")
        assert "residual: 12*u1*u2" in text

    def test_check_json_matches_text(self):
        argv = ("check", "--equation", KDV, "--candidate", "x*u1 + 2*u + 3*t*u3 + 18*t*u*u1")
        _, text = invoke(*argv)
        code, raw = invoke(*argv, "--format", "json")
        data = json.loads(raw)
        assert code == EXIT_OK
        assert data["verdict"] == "SYMMETRY"
        assert data["order"] == 3
        assert data["time_class"] == {"kind": "polynomial", "degree": 1}
        assert data["flags"]["kdv_like"] is True
        assert data["summary"] == text.splitlines()[0]

    def test_classify_with_constants(self):
        code, text = invoke("classify", "--equation", "u3 + u1^3 + c*u1 + d", "--const", "c,d")
        assert code == EXIT_OK
        assert text.splitlines()[0] == "constant separant: yes; KdV-like: yes"

    def test_determine(self):
        code, text = invoke("determine", "--equation", KDV, "--candidate", "1 + 6*t*u1")
        assert code == EXIT_OK
        assert text.startswith("VANISHES, 4 equations")

    def test_timedep(self):
        code, text = invoke("timedep", "--candidate", "t*exp(2*t)*u1")
        assert code == EXIT_OK
        assert "time dependence: quasipolynomial {(2, 1)}" in text
        assert "annihilator: (∂/∂t - 2)^2" in text

    def test_timedep_closure(self):
        code, text = invoke("timedep", "--equation", KDV, "--candidate", "1 + 6*t*u1")
        assert code == EXIT_OK
        assert "closure: PASS" in text

    def test_scaling(self):
        code, text = invoke("scaling", "--equation", "u2", "--q0", "exp(x)")
        assert code == EXIT_OK
        assert text.splitlines()[0] == "lambda = 1"

    def test_master(self):
        code, text = invoke("master", "--equation", KDV, "--g0", "x*u1 + 2*u", "--format", "json")
        data = json.loads(text)
        assert code == EXIT_OK
        assert data["verdict"] == "MASTERSYMMETRY"
        assert data["details"]["mu"] == "3"

    def test_predict(self):
        code, text = invoke("predict", "--equation", KDV, "--basis", "u1; 1 + 6*t*u1", "--mode", "corollary")
        assert code == EXIT_OK
        assert text.splitlines()[0] == "prediction: all symmetries polynomial in t"

    def test_dim(self):
        code, text = invoke("dim", "--k", "1", "--n", "3", "--dim-phi", "3", "--nonlinearizable")
        assert code == EXIT_OK
        assert text.splitlines()[0] == "dim S^(1) ≤ 6"

    def test_dim_requires_declaration(self):
        code, _ = invoke("dim", "--k", "1", "--n", "3", "--dim-phi", "3")
        assert code == EXIT_USAGE

    @pytest.mark.slow
    def test_find(self):
        code, text = invoke("find", "--equation", KDV, "--order", "1", "--t-degree", "1")
        assert code == EXIT_OK
        assert text.splitlines()[0] == "2 symmetries found"

    @pytest.mark.parametrize("argv", [
        ("check", "--equation", "6uu1", "--candidate", "u1"),
        ("check", "--equation", "u1 + u", "--candidate", "u1"),
        ("check", "--equation", KDV, "--candidate", "c*u1"),
        ("scaling", "--equation", KDV, "--q0", "t*u1"),
        ("frobnicate",),
        ("check", "--equation", KDV),
        ("corpus", "run", "/nonexistent/file.corpus"),
    ])
    def test_usage_errors(self, argv):
        code, out = invoke(*argv)
        assert code == EXIT_USAGE
        assert out == ""

    def test_find_pool_too_large(self):
        code, _ = invoke("find", "--equation", KDV, "--order", "5", "--max-pool", "3")
        assert code == EXIT_USAGE

    def test_flags_override_runtime_config(self, monkeypatch):
        monkeypatch.setattr(commands, "DEFAULT_CONFIG", RuntimeConfig(max_pool=50, corpus_workers=3, progress=False))
        args = build_parser().parse_args(["find", "--equation", KDV, "--order", "1", "--max-pool", "7"])
        assert runtime_config(args).get_config("max_pool") == 7
        args = build_parser().parse_args(["find", "--equation", KDV, "--order", "1"])
        assert runtime_config(args).get_config("max_pool") == 50
        args = build_parser().parse_args(["corpus", "run", "x.corpus", "--workers", "2"])
        assert runtime_config(args).get_config("corpus_workers") == 2
        assert runtime_config(args).get_config("progress") is False

    def test_find_uses_runtime_pool_cap(self, monkeypatch):
        monkeypatch.setattr(commands, "DEFAULT_CONFIG", RuntimeConfig(max_pool=3, corpus_workers=1, progress=False))
        code, out = invoke("find", "--equation", KDV, "--order", "5")
        assert code == EXIT_USAGE
        assert out == ""


class TestReportDto:

    def test_time_class_dispatch(self):
        dto = TimeClassDto.from_dict({"kind": "polynomial", "degree": 2})
        assert isinstance(dto, PolynomialDto)
        assert dto.describe() == "polynomial degree 2"
        dto = TimeClassDto.from_dict({"kind": "quasipolynomial", "spectrum": [["1", 0]]})
        assert isinstance(dto, QuasipolynomialDto)
        assert dto.describe() == "quasipolynomial {(1, 0)}"

    def test_time_class_dispatch_errors(self):
        with pytest.raises(ValueError):
            TimeClassDto.from_dict({"degree": 1})
        with pytest.raises(ValueError):
            TimeClassDto.from_dict({"kind": "sinusoidal"})

    def test_text(self):
        report = ReportDto(entry="kdv", command="check", verdict="SYMMETRY", summary="SYMMETRY", details={"a": [1, 2]})
        assert report.to_text() == "[kdv] SYMMETRY\n  a:\n    1\n    2"


class TestStructureFailures:

    def test_linear_second_power_passes(self, linear3, p):
        G = p("x^2*u + 6*t*x*u2 + 6*t*u1 + 9*t^2*u4")
        assert structure_failures(linear3, is_symmetry(linear3, G)) == []

    def test_checks_both_representation_bounds(self, kdv, p, monkeypatch):
        calls = []

        def record(eq, report, refine=True):
            calls.append(refine)
            return representation_decompose(eq, report, refine=refine)

        monkeypatch.setattr(reports, "representation_decompose", record)
        G = p("x*u1 + 2*u + 3*t*u3 + 18*t*u*u1")
        assert structure_failures(kdv, is_symmetry(kdv, G)) == []
        assert calls == [True, False]


SMALL_CORPUS = """\
# 注释
[entry]
name = kdv
equation = u3 + 6*u*u1
constant_separant = yes
candidate = 1 + 6*t*u1 ; symmetry ; polynomial 1
candidate = u2 ; not-symmetry
basis = u1 ; 1 + 6*t*u1
basis_mode = corollary
prediction = polynomial
scaling = u2 ; none
master = x*u1 + 2*u ; 3*u3 + 18*u*u1

[entry]
name = heat
equation = u2
candidate = exp(x + t) ; symmetry ; quasipolynomial 1:0
"""


class TestCorpus:

    def test_parse(self):
        entries = parse_corpus(SMALL_CORPUS)
        assert [e.name for e in entries] == ["kdv", "heat"]
        kdv = entries[0]
        assert kdv.line == 2
        assert len(kdv.candidates) == 2
        assert kdv.candidates[0].time_class == "polynomial 1"
        assert not kdv.candidates[1].expect_symmetry
        assert kdv.basis == ["u1", "1 + 6*t*u1"]
        assert kdv.scaling[0].expected is None

    @pytest.mark.parametrize("text, line", [
        ("name = x\n", 1),
        ("[entry]\nname = a\nequation = u2\ncolour = red\n", 4),
        ("[entry]\nname = a\nequation = u2\ncandidate = u1\n", 4),
        ("[entry]\nname = a\nequation = u2\ncandidate = u1 ; symmetry ; sinusoidal\n", 4),
        ("[entry]\nname = a\nequation = u2\nconstant_separant = maybe\n", 4),
        ("[entry]\nname = a\nequation = u2\nansatz = t_degree=1\n", 4),
        ("[entry]\nname = a\nequation = u2\nansatz = order=two\n", 4),
        ("[entry]\nname = a\nequation = u2\nname = b\n", 4),
        ("[entry]\nname = a\n", 1),
        ("[entry]\nname = a\nequation = u2 + c\n", 1),
        ("[entry]\nname = a\nequation = u2\ncandidate = 6uu1 ; symmetry\n", 4),
        ("[entry]\nname = a\nequation = u2\nbasis_mode = lemma\n", 1),
        ("[entry]\nname = a\nequation = u2\njust text\n", 4),
    ])
    def test_format_errors(self, text, line):
        with pytest.raises(CorpusFormatError) as info:
            parse_corpus(text)
        assert info.value.line == line

    def test_duplicate_names(self):
        with pytest.raises(CorpusFormatError):
            parse_corpus("[entry]\nname = a\nequation = u2\n[entry]\nname = a\nequation = u3\n")

    def test_run_entry_agrees_with_library(self):
        entry = parse_corpus(SMALL_CORPUS)[0]
        reports = run_entry(entry)
        assert [r.command for r in reports] == ["classify", "check", "check", "predict", "scaling", "master"]
        assert all(r.ok for r in reports)
        assert all(r.entry == "kdv" for r in reports)
        assert reports[1].details["reduced"] == "6*t*u1 + 1"

    def test_run_entry_reports_mismatch(self):
        entry = parse_corpus("[entry]\nname = a\nequation = u3 + 6*u*u1\ncandidate = u2 ; symmetry\n")[0]
        reports = run_entry(entry)
        assert not reports[1].ok

    def test_run_entry_invalid_equation(self):
        entry = parse_corpus("[entry]\nname = a\nequation = u1\n")[0]
        [report] = run_entry(entry)
        assert report.verdict == "ERROR"
        assert not report.ok

    def test_run_corpus_is_sorted(self):
        entries = parse_corpus(SMALL_CORPUS)
        reports = asyncio.run(run_corpus(entries, workers=2))
        names = [r.entry for r in reports]
        assert names == sorted(names)
        assert all(r.ok for r in reports)

    @pytest.mark.slow
    def test_shipped_corpus(self):
        code, text = invoke("corpus", "run", str(CORPUS))
        assert code == EXIT_OK, text
        assert "INVARIANT VIOLATION" not in text
