import pytest

from cli import parse
from symmetry import classify


@pytest.fixture
def kdv():
    """u_t = u3 + 6uu1"""
    return classify(parse("u3 + 6*u*u1"), nonlinearizable=True)


@pytest.fixture
def heat():
    return classify(parse("u2"))


@pytest.fixture
def linear3():
    return classify(parse("u3"))


@pytest.fixture
def p():
    """解析表达式的简写，可带常量."""
    def _parse(source: str, *constants: str):
        return parse(source, constants)
    return _parse
