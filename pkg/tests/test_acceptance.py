"""The twelve acceptance criteria, one test each.

A summary line per criterion is printed at the end of the run (see conftest).
Running this file directly prints the same lines without pytest.
"""

import pytest

from unilink.acceptance import CRITERIA, Budget, _Memo, run_criterion

REPORTS: dict[int, object] = {}


@pytest.fixture(scope="module")
def memo():
    return _Memo()


@pytest.mark.parametrize("criterion", sorted(CRITERIA), ids=lambda k: f"{k:02d}-{CRITERIA[k][1].__name__}")
def test_criterion(criterion, memo):
    report = run_criterion(criterion, memo, Budget())
    REPORTS[criterion] = report
    print(report.line())
    assert report.checks, "criterion ran no checks"
    failed = [c.name + (f": expected {c.expected}, got {c.actual}" if c.expected or c.actual else "")
              for c in report.failures()]
    assert not failed, "\n".join(failed)


if __name__ == "__main__":
    shared = _Memo()
    for k in sorted(CRITERIA):
        print(run_criterion(k, shared).line())
