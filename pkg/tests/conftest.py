import pytest
from hypothesis import strategies as st

from unilink.laurent import LaurentPoly

VARS = ("d", "y", "x1", "x2", "u1")


@st.composite
def polys(draw, variables=VARS, max_terms=4, max_exp=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        mono = tuple(
            (v, e) for v in variables if (e := draw(st.integers(-max_exp, max_exp)))
        )
        terms[mono] = terms.get(mono, 0) + draw(st.integers(-5, 5))
    return LaurentPoly.from_dict(terms)


@pytest.fixture(scope="session")
def trefoil():
    from unilink.braid import BraidWord
    return BraidWord(2, (1, 1, 1))


@pytest.fixture(scope="session")
def hopf():
    from unilink.braid import BraidWord
    return BraidWord(2, (1, 1))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORTS
    except ImportError:
        return
    if not REPORTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(REPORTS):
        terminalreporter.write_line(REPORTS[k].line())
