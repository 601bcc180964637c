from fractions import Fraction

import pytest

from crsym.parser import parse_expression
from crsym.zoo import get


def F(x):
    return Fraction(x)


def real(s, n=None):
    return parse_expression(s, n=n, kind="real")


def mixed(s, n=None):
    return parse_expression(s, n=n, kind="mixed")


def holo(s, n=None):
    return parse_expression(s, n=n, kind="holo")


@pytest.fixture(scope="session")
def zoo_models():
    from crsym.zoo import ZOO

    return {z.name: z.model() for z in ZOO}


def zoo(name):
    return get(name).model()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
