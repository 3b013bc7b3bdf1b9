from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from hopfforge.complex import SimplicialComplex

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def simplex_boundary(d: int, offset: int = 0) -> SimplicialComplex:
    """Boundary of the d-simplex on the labels offset..offset+d."""
    verts = range(offset, offset + d + 1)
    return SimplicialComplex(combinations(verts, d))


def octahedron() -> SimplicialComplex:
    return SimplicialComplex([(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)])


@st.composite
def complexes(draw, max_vertex: int = 8, max_facets: int = 8, max_size: int = 4):
    facets = draw(st.lists(
        st.frozensets(st.integers(0, max_vertex - 1), min_size=1, max_size=max_size),
        min_size=1, max_size=max_facets))
    return SimplicialComplex(sorted(f) for f in facets)


@pytest.fixture(scope="session")
def p12() -> SimplicialComplex:
    from hopfforge.datasets import load_complex

    return load_complex("p12")


@pytest.fixture(scope="session")
def s5_15() -> SimplicialComplex:
    from hopfforge.constructions.projective import s5_15

    return s5_15()


# -- acceptance criteria summary ---------------------------------------------------

_CRITERIA = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config.stash[_CRITERIA] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, title = mark.args
        item.config.stash[_CRITERIA][number] = (title, rep.passed, rep.duration)


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_CRITERIA, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, ok, secs = results[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}  {title}  ({secs:.1f}s)")
