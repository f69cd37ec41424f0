"""语料文件: 解析 ``[entry]`` 段落并并发运行全部检查.

格式::

    # 注释
    [entry]
    name = kdv
    equation = u3 + 6*u*u1
    constants = a, b
    constant_separant = yes
    kdv_like = yes
    nonlinearizable = yes
    candidate = 1 + 6*t*u1 ; symmetry ; polynomial 1
    basis = u1 ; 1 + 6*t*u1
    basis_mode = corollary
    prediction = polynomial
    scaling = u1 ; 0
    master = x*u1 + 2*u ; 3*u3 + 18*u*u1
    ansatz = order=1 t_degree=1 ; u1 ; 1 + 6*t*u1

candidate / scaling / master / ansatz 可以重复出现。
"""
import asyncio
from logging import getLogger
from pathlib import Path
from typing import Callable

import sympy as sp

from base_cls import (
    CorpusFormatError,
    ExprError,
    PreconditionError,
    InvariantViolation,
)
from context import DEFAULT_CONFIG
from expr import DiffExpr
from search import AnsatzConfig, find_symmetries, find_linear_t_symmetries, span_contains
from symmetry import classify, is_symmetry
from timedep import (
    HypothesisMode,
    annihilator,
    reduce_to_simple,
    conjecture_survey,
)
from utils import tqdm
from .dto import CorpusEntryDto, CandidateDto, CaseDto, AnsatzCaseDto, ReportDto
from .parser import ExprParser
from .reports import (
    classify_report,
    check_report,
    structure_failures,
    scaling_report,
    master_report,
    predict_report,
)


_log = getLogger(__name__)

_SCALAR_KEYS = {
    "name", "equation", "constants", "constant_separant", "kdv_like",
    "nonlinearizable", "basis", "basis_mode", "prediction",
}
_REPEATED_KEYS = {"candidate", "scaling", "master", "ansatz"}
_ANSATZ_PARAMS = {"order", "t_degree", "x_degree", "max_weight", "base_weight", "exp_lambda", "max_pool", "linear_t"}
_TIME_CLASS_WORDS = {"time-independent", "polynomial", "quasipolynomial", "other"}


def _parse_bool(value: str, line: int) -> bool:
    lowered = value.strip().lower()
    if lowered in ("yes", "true", "1"):
        return True
    if lowered in ("no", "false", "0"):
        return False
    raise CorpusFormatError(f"无法解析布尔值 {value!r}", line)


def _split(value: str) -> list[str]:
    return [part.strip() for part in value.split(";")]


def _parse_candidate(value: str, line: int) -> CandidateDto:
    parts = _split(value)
    if len(parts) not in (2, 3) or parts[1] not in ("symmetry", "not-symmetry"):
        raise CorpusFormatError("candidate 格式应为 'expr ; symmetry|not-symmetry [; 形态]'", line)
    time_class = parts[2] if len(parts) == 3 else None
    if time_class is not None and time_class.split(" ", 1)[0] not in _TIME_CLASS_WORDS:
        raise CorpusFormatError(f"未知的 t 依赖形态 {time_class!r}", line)
    return CandidateDto(expr=parts[0], expect_symmetry=parts[1] == "symmetry", time_class=time_class, line=line)


def _parse_case(key: str, value: str, line: int) -> CaseDto:
    parts = _split(value)
    if len(parts) != 2:
        raise CorpusFormatError(f"{key} 格式应为 'expr ; expected|none'", line)
    expected = None if parts[1] == "none" else parts[1]
    return CaseDto(expr=parts[0], expected=expected, line=line)


def _parse_ansatz(value: str, line: int) -> AnsatzCaseDto:
    head, *expected = _split(value)
    params = {}
    for item in head.split():
        key, sep, raw = item.partition("=")
        if not sep or key not in _ANSATZ_PARAMS:
            raise CorpusFormatError(f"未知的拟设参数 {item!r}", line)
        if key == "linear_t":
            _parse_bool(raw, line)
        elif key != "exp_lambda" and not raw.isdigit():
            raise CorpusFormatError(f"拟设参数 {key} 必须是非负整数: {raw!r}", line)
        params[key] = raw
    if "order" not in params:
        raise CorpusFormatError("拟设必须给出 order", line)
    return AnsatzCaseDto(params=params, expected=[e for e in expected if e], line=line)


def _finish(raw: dict, start: int) -> CorpusEntryDto:
    for required in ("name", "equation"):
        if required not in raw:
            raise CorpusFormatError(f"条目缺少 {required}", start)
    return CorpusEntryDto.from_dict({**raw, "line": start})


def parse_corpus(text: str) -> list[CorpusEntryDto]:
    """解析语料文本，并校验所有表达式都能在声明的常量下解析.

    Raises:
        CorpusFormatError: 格式错误或表达式无法解析(携带行号)
    """
    entries: list[CorpusEntryDto] = []
    raw: dict | None = None
    start = 0
    for number, original in enumerate(text.splitlines(), start=1):
        line = original.strip()
        if not line or line.startswith("#"):
            continue
        if line == "[entry]":
            if raw is not None:
                entries.append(_finish(raw, start))
            raw, start = {}, number
            continue
        if raw is None:
            raise CorpusFormatError("键值对出现在第一个 [entry] 之前", number)
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep:
            raise CorpusFormatError(f"无法解析的行 {original!r}", number)
        if key in _REPEATED_KEYS:
            if key == "candidate":
                item = _parse_candidate(value, number)
            elif key == "ansatz":
                item = _parse_ansatz(value, number)
            else:
                item = _parse_case(key, value, number)
            raw.setdefault("candidates" if key == "candidate" else key, []).append(item)
        elif key in _SCALAR_KEYS:
            if key in raw:
                raise CorpusFormatError(f"重复的键 {key}", number)
            if key in ("constant_separant", "kdv_like", "nonlinearizable"):
                raw[key] = _parse_bool(value, number)
            elif key == "constants":
                raw[key] = [c.strip() for c in value.split(",") if c.strip()]
            elif key == "basis":
                raw[key] = [b for b in _split(value) if b]
            else:
                raw[key] = value
        else:
            raise CorpusFormatError(f"未知的键 {key!r}", number)
    if raw is not None:
        entries.append(_finish(raw, start))

    names = [entry.name for entry in entries]
    duplicated = {name for name in names if names.count(name) > 1}
    if duplicated:
        raise CorpusFormatError(f"条目名重复: {sorted(duplicated)}")
    for entry in entries:
        _validate(entry)
    return entries


def _validate(entry: CorpusEntryDto) -> None:
    try:
        parser = ExprParser(entry.constants)
    except ExprError as e:
        raise CorpusFormatError(str(e), entry.line) from e
    sources = [(entry.equation, entry.line)]
    sources += [(c.expr, c.line) for c in entry.candidates]
    sources += [(b, entry.line) for b in entry.basis]
    for case in (*entry.scaling, *entry.master):
        sources.append((case.expr, case.line))
        if case.expected is not None:
            sources.append((case.expected, case.line))
    for case in entry.ansatz:
        sources += [(e, case.line) for e in case.expected]
        if "exp_lambda" in case.params:
            sources.append((case.params["exp_lambda"], case.line))
    for source, line in sources:
        try:
            parser.parse(source)
        except ExprError as e:
            raise CorpusFormatError(f"条目 {entry.name}: {e}", line) from e
    if entry.basis_mode not in ("theorem", "corollary"):
        raise CorpusFormatError(f"basis_mode 只能是 theorem 或 corollary: {entry.basis_mode}", entry.line)
    if entry.prediction not in (None, "polynomial", "quasipolynomial", "none"):
        raise CorpusFormatError(f"未知的 prediction: {entry.prediction}", entry.line)


def load_corpus(path: str | Path) -> list[CorpusEntryDto]:
    return parse_corpus(Path(path).read_text(encoding="utf-8"))


# ---------- 运行 ----------

def _guarded(entry: str, command: str, build: Callable[[], ReportDto]) -> ReportDto:
    """InvariantViolation 与前置条件错误都记为不符合预期的报告."""
    try:
        return build().model_copy(update={"entry": entry})
    except InvariantViolation as e:
        _log.critical(f"[{entry}] {command}: {e}")
        verdict, message = "INVARIANT VIOLATION", str(e)
    except (PreconditionError, ExprError) as e:
        _log.error(f"[{entry}] {command}: {e}")
        verdict, message = "ERROR", str(e)
    return ReportDto(entry=entry, command=command, verdict=verdict, summary=f"{verdict}: {message}", ok=False)


def _ansatz_config(params: dict[str, str], parser: ExprParser) -> tuple[AnsatzConfig, bool]:
    values = {k: int(v) for k, v in params.items() if k not in ("exp_lambda", "linear_t")}
    if "exp_lambda" in params:
        values["exp_lambda"] = parser.parse(params["exp_lambda"]).expr
    linear_t = params.get("linear_t", "no").lower() in ("yes", "true", "1")
    return AnsatzConfig(**values), linear_t


def run_entry(entry: CorpusEntryDto) -> list[ReportDto]:
    """逐项运行一个条目的全部检查，结论与直接调用库函数一致."""
    parser = ExprParser(entry.constants)
    try:
        eq = classify(parser.parse(entry.equation), nonlinearizable=entry.nonlinearizable)
    except (PreconditionError, ExprError) as e:
        _log.error(f"[{entry.name}] 方程无效: {e}")
        return [ReportDto(entry=entry.name, command="classify", verdict="ERROR", summary=f"ERROR: {e}", ok=False)]
    reports = []

    def classified() -> ReportDto:
        report = classify_report(eq)
        ok = (entry.constant_separant in (None, eq.constant_separant)) and (entry.kdv_like in (None, eq.kdv_like))
        return report.model_copy(update={"ok": ok})

    reports.append(_guarded(entry.name, "classify", classified))

    verified: list[DiffExpr] = []
    for candidate in entry.candidates:
        def checked(candidate=candidate) -> ReportDto:
            G = parser.parse(candidate.expr)
            report = check_report(eq, G)
            symmetric = report.verdict == "SYMMETRY"
            ok = symmetric == candidate.expect_symmetry
            details = dict(report.details)
            if symmetric:
                verified.append(G)
                failures = structure_failures(eq, is_symmetry(eq, G))
                if not annihilator(G).apply(G).is_zero:
                    failures.append("消去算子作用后不为零")
                if eq.time_independent:
                    details["reduced"] = str(reduce_to_simple(G, eq))
                if failures:
                    details["structure"] = failures
                    ok = False
                if candidate.time_class is not None and report.time_class.describe() != _describe(candidate.time_class):
                    details["expected time class"] = candidate.time_class
                    ok = False
            return report.model_copy(update={"ok": ok, "details": details})

        reports.append(_guarded(entry.name, "check", checked))

    if entry.basis:
        def predicted() -> ReportDto:
            mode = HypothesisMode.from_state(entry.basis_mode)
            report = predict_report(eq, [parser.parse(b) for b in entry.basis], mode)
            expected = entry.prediction
            ok = expected is None or report.verdict == _prediction_verdict(expected)
            return report.model_copy(update={"ok": ok})

        reports.append(_guarded(entry.name, "predict", predicted))

    for case in entry.scaling:
        def scaled(case=case) -> ReportDto:
            report = scaling_report(eq, parser.parse(case.expr))
            if case.expected is None:
                ok = report.verdict == "NONE"
            else:
                expected = parser.parse(case.expected)
                ok = report.details.get("lambda") == str(expected)
            return report.model_copy(update={"ok": ok})

        reports.append(_guarded(entry.name, "scaling", scaled))

    for case in entry.master:
        def mastered(case=case) -> ReportDto:
            report = master_report(eq, parser.parse(case.expr))
            if case.expected is None:
                ok = report.verdict != "MASTERSYMMETRY"
            else:
                ok = report.verdict == "MASTERSYMMETRY" and report.details["G1"] == str(parser.parse(case.expected))
            return report.model_copy(update={"ok": ok})

        reports.append(_guarded(entry.name, "master", mastered))

    for case in entry.ansatz:
        def searched(case=case) -> ReportDto:
            cfg, linear_t = _ansatz_config(case.params, parser)
            if linear_t:
                found = [pair.G1 for pair in find_linear_t_symmetries(eq, cfg)]
            else:
                found = find_symmetries(eq, cfg)
            missing = [e for e in case.expected if not span_contains(found, parser.parse(e))]
            details = {"basis": [str(G) for G in found]}
            if missing:
                details["missing"] = missing
            verdict = "FOUND" if found else "EMPTY"
            return ReportDto(
                command="find",
                verdict=verdict,
                summary=f"{verdict}, {len(found)} elements, {len(case.expected) - len(missing)}/{len(case.expected)} expected recovered",
                ok=not missing,
                details=details,
            )

        reports.append(_guarded(entry.name, "find", searched))

    if entry.nonlinearizable and verified:
        def surveyed() -> ReportDto:
            conjecture = conjecture_survey(eq, verified)
            return ReportDto(
                command="conjecture",
                verdict=conjecture.kind.label,
                summary=f"observed: {conjecture.kind.state} over {len(verified)} symmetries (not a decision)",
                details={"classes": [c.describe() for c in conjecture.classes]},
            )

        reports.append(_guarded(entry.name, "conjecture", surveyed))
    return reports


def _describe(time_class: str) -> str:
    """把语料中的形态写法化为 describe() 的文本."""
    word, _, rest = time_class.partition(" ")
    if word == "polynomial":
        return f"polynomial degree {rest.strip()}"
    if word == "quasipolynomial":
        pairs = []
        for item in rest.split(","):
            lam, _, m = item.strip().partition(":")
            pairs.append((sp.Rational(lam), int(m)))
        pairs.sort(key=lambda p: sp.default_sort_key(p[0]))
        return "quasipolynomial {" + ", ".join(f"({lam}, {m})" for lam, m in pairs) + "}"
    return word


def _prediction_verdict(expected: str) -> str:
    return {
        "polynomial": "ALL SYMMETRIES POLYNOMIAL IN T",
        "quasipolynomial": "ALL SYMMETRIES QUASIPOLYNOMIAL IN T",
    }.get(expected, "NO PREDICTION")


async def run_corpus(entries: list[CorpusEntryDto], workers: int | None = None) -> list[ReportDto]:
    """并发运行各条目；报告按条目名排序，条目内部保持检查顺序."""
    workers = workers or DEFAULT_CONFIG.get_config("corpus_workers", 4)
    semaphore = asyncio.Semaphore(workers)
    disable = None if DEFAULT_CONFIG.get_config("progress", True) else True
    bar = tqdm(total=len(entries), desc="语料", disable=disable)

    async def evaluate(entry: CorpusEntryDto) -> tuple[str, list[ReportDto]]:
        async with semaphore:
            reports = await asyncio.to_thread(run_entry, entry)
        bar.update(1)
        return entry.name, reports

    try:
        results = await asyncio.gather(*(evaluate(entry) for entry in entries))
    finally:
        bar.close()
    return [report for _, reports in sorted(results, key=lambda r: r[0]) for report in reports]


def run_corpus_file(path: str | Path, workers: int | None = None) -> list[ReportDto]:
    entries = load_corpus(path)
    _log.info(f"语料 {path}: {len(entries)} 个条目")
    return asyncio.run(run_corpus(entries, workers))
