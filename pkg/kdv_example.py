"""KdV 方程 u_t = u3 + 6uu1 的使用示例

1. 解析并分类方程
2. 检验对称性与结构推论
3. t 依赖、主对称与拟设搜索
"""
from logging import getLogger

from cli import parse
from search import AnsatzConfig, find_symmetries
from symmetry import (
    classify,
    is_symmetry,
    determining_system,
    leading_structure_check,
    x_descent,
    representation_decompose,
    lead1_check,
)
from timedep import classify_time, annihilator, mastersymmetry_test, hypothesis_report, HypothesisMode
from utils import setup_logging


setup_logging("INFO")
_log = getLogger("KDV")


# ============ 方程 ============ #

kdv = classify(parse("u3 + 6*u*u1"))
_log.info(f"常数分离项: {kdv.constant_separant}, KdV 型: {kdv.kdv_like}, 深度: {kdv.deriv_depth}")


# ============ 对称性 ============ #

galilean = parse("1 + 6*t*u1")
scaling = parse("x*u1 + 2*u + 3*t*(u3 + 6*u*u1)")

for G in (parse("u1"), galilean, scaling, parse("u2")):
    report = is_symmetry(kdv, G)
    _log.info(f"{G}: {report.verdict.label}, order {report.k}, {classify_time(G)}")

report = is_symmetry(kdv, scaling)
_log.info(f"首项结构: {leading_structure_check(kdv, report)}")
_log.info(f"x 降阶: {x_descent(kdv, report)}")
_log.info(f"分解: {representation_decompose(kdv, report)}")
_log.info(f"首项时间导数: {lead1_check(kdv, report)}")
_log.info(f"定解方程组非零层: {determining_system(kdv, parse('u2')).nonzero_levels()}")


# ============ t 依赖 ============ #

_log.info(f"消去算子: {annihilator(galilean)}")
master = mastersymmetry_test(kdv, parse("x*u1 + 2*u"))
_log.info(f"G1 = {master.G1}, μ = {master.mu}, 对称: {master.certified}")
prediction = hypothesis_report(kdv, [parse("u1"), galilean], HypothesisMode.COROLLARY)
_log.info(f"预测: {prediction.prediction.label}")


# ============ 拟设搜索 ============ #

for G in find_symmetries(kdv, AnsatzConfig(order=5)):
    _log.info(f"找到对称: {G}")
