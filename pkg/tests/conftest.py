import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from moncurve.blowup import ElementaryMove  # noqa: E402
from moncurve.series import MultiSeries  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_q = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))
nonzero_q = small_q.filter(bool)


def exponents(n, max_deg):
    return st.lists(st.integers(0, max_deg), min_size=n, max_size=n).map(tuple).filter(lambda a: sum(a) <= max_deg)


@st.composite
def series(draw, n=None, max_deg=4, max_terms=5, trunc=None, unit=False):
    n = n if n is not None else draw(st.integers(1, 4))
    terms = draw(st.dictionaries(exponents(n, max_deg), small_q, max_size=max_terms))
    if unit:
        terms[(0,) * n] = draw(nonzero_q)
    return MultiSeries(n, terms, trunc)


@st.composite
def moves(draw, n):
    perm = draw(st.permutations(range(n)))
    r = draw(st.integers(2, n))
    return ElementaryMove(tuple(perm), r)


curves = lambda n, hi=9: st.lists(st.integers(1, hi), min_size=n, max_size=n).map(tuple)  # noqa: E731


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
