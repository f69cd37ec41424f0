"""命令行入口: 子命令解析、报告输出与退出码.

退出码: 0 = 全部符合预期；1 = 结论不符(包括不变量被违反)；2 = 用法、解析或前置条件错误。
"""
import argparse
import sys
from logging import getLogger
from typing import Sequence, TextIO

from base_cls import (
    ExprError,
    CorpusFormatError,
    PreconditionError,
    InvariantViolation,
    PoolTooLargeError,
)
from context import DEFAULT_CONFIG, RuntimeConfig
from search import AnsatzConfig
from symmetry import classify
from timedep import HypothesisMode
from utils import setup_logging
from .corpus import run_corpus_file
from .dto import ReportDto
from .parser import ExprParser
from .reports import (
    classify_report,
    check_report,
    determine_report,
    timedep_report,
    scaling_report,
    master_report,
    find_report,
    predict_report,
    dim_report,
)


_log = getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class _ArgumentParser(argparse.ArgumentParser):
    """用法错误统一以退出码 2 结束."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="输出格式")
    common.add_argument("--const", default="", help="逗号分隔的具名常量")
    common.add_argument("--log-level", default=None, help="控制台日志级别，缺省读取 LOG_LEVEL")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _ArgumentParser(prog="evosym", description="标量发展方程的对称性计算")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("check", parents=[common], help="对称性检验 + 首项结构 + x 多项式分解")
    p.add_argument("--equation", required=True)
    p.add_argument("--candidate", required=True)
    p.add_argument("--no-refine", action="store_true", help="分解时不按 ∂F/∂u_{n-i} 的深度收紧")

    p = sub.add_parser("classify", parents=[common], help="方程分类标记")
    p.add_argument("--equation", required=True)

    p = sub.add_parser("determine", parents=[common], help="逐层输出定解方程组")
    p.add_argument("--equation", required=True)
    p.add_argument("--candidate", required=True)

    p = sub.add_parser("timedep", parents=[common], help="t 依赖形态与消去算子")
    p.add_argument("--candidate", required=True)
    p.add_argument("--equation", default=None, help="给出时同时做 ∂/∂t 封闭性校验")

    p = sub.add_parser("scaling", parents=[common], help="{F, Q0} = λQ0 检验")
    p.add_argument("--equation", required=True)
    p.add_argument("--q0", required=True)

    p = sub.add_parser("master", parents=[common], help="{F, G0} = G1, {F, G1} = 0 检验")
    p.add_argument("--equation", required=True)
    p.add_argument("--g0", required=True)

    p = sub.add_parser("find", parents=[common], help="有限拟设搜索")
    p.add_argument("--equation", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--t-degree", type=int, default=0)
    p.add_argument("--x-degree", type=int, default=0)
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--base-weight", type=int, default=2)
    p.add_argument("--exp-lambda", default=None)
    p.add_argument("--max-pool", type=int, default=None)
    p.add_argument("--linear-t", action="store_true", help="搜索 G0 + t·G1 型对称性")

    p = sub.add_parser("predict", parents=[common], help="按低阶对称性基预测 t 依赖")
    p.add_argument("--equation", required=True)
    p.add_argument("--basis", required=True, help="分号分隔的低阶对称性")
    p.add_argument("--mode", choices=("theorem", "corollary"), default="theorem")

    p = sub.add_parser("dim", parents=[common], help="不可线性化 KdV 型方程的维数上界")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim-phi", type=int, required=True)
    p.add_argument("--nonlinearizable", action="store_true", help="声明方程不可线性化")

    corpus = sub.add_parser("corpus", help="语料")
    corpus_sub = corpus.add_subparsers(dest="corpus_command", required=True, parser_class=_ArgumentParser)
    p = corpus_sub.add_parser("run", parents=[common], help="运行语料文件")
    p.add_argument("file")
    p.add_argument("--workers", type=int, default=None)
    return parser


def runtime_config(args: argparse.Namespace) -> RuntimeConfig:
    """环境变量给出的运行时配置，命令行参数优先."""
    return DEFAULT_CONFIG.with_overrides(
        max_pool=getattr(args, "max_pool", None),
        corpus_workers=getattr(args, "workers", None),
    )


def _execute(args: argparse.Namespace) -> list[ReportDto]:
    config = runtime_config(args)
    parser = ExprParser([c.strip() for c in args.const.split(",") if c.strip()])

    def equation():
        return classify(parser.parse(args.equation))

    if args.command == "check":
        return [check_report(equation(), parser.parse(args.candidate), refine=not args.no_refine)]
    if args.command == "classify":
        return [classify_report(equation())]
    if args.command == "determine":
        return [determine_report(equation(), parser.parse(args.candidate))]
    if args.command == "timedep":
        eq = equation() if args.equation else None
        return [timedep_report(parser.parse(args.candidate), eq)]
    if args.command == "scaling":
        return [scaling_report(equation(), parser.parse(args.q0))]
    if args.command == "master":
        return [master_report(equation(), parser.parse(args.g0))]
    if args.command == "find":
        cfg = AnsatzConfig(
            order=args.order,
            t_degree=args.t_degree,
            x_degree=args.x_degree,
            max_weight=args.max_weight,
            base_weight=args.base_weight,
            exp_lambda=parser.parse(args.exp_lambda).expr if args.exp_lambda else None,
            max_pool=config.get_config("max_pool"),
        )
        return [find_report(equation(), cfg, linear_t=args.linear_t)]
    if args.command == "predict":
        basis = [parser.parse(b) for b in args.basis.split(";") if b.strip()]
        return [predict_report(equation(), basis, HypothesisMode.from_state(args.mode))]
    if args.command == "dim":
        if not args.nonlinearizable:
            raise PreconditionError("维数上界只对不可线性化方程成立，请用 --nonlinearizable 声明")
        return [dim_report(args.k, args.n, args.dim_phi)]
    return run_corpus_file(args.file, workers=config.get_config("corpus_workers"))


def _emit(reports: list[ReportDto], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        if len(reports) == 1:
            out.write(reports[0].to_json() + "\n")
        else:
            out.write("[\n" + ",\n".join(r.to_json() for r in reports) + "\n]\n")
        return
    for report in reports:
        out.write(report.to_text() + "\n")
    if len(reports) > 1:
        passed = sum(r.ok for r in reports)
        out.write(f"{passed}/{len(reports)} checks met expectations\n")


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    """执行命令行并返回退出码."""
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    setup_logging(args.log_level)

    try:
        reports = _execute(args)
    except InvariantViolation as e:
        _log.critical(f"不变量被违反: {e}")
        return EXIT_MISMATCH
    except (ExprError, CorpusFormatError, PreconditionError, PoolTooLargeError) as e:
        _log.error(str(e))
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE

    _emit(reports, args.format, out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


def main() -> None:
    sys.exit(run())
