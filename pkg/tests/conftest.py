import hypothesis.strategies as st
import pytest

from countsys.counting import C3, N5, ONE, R5, S4, CountingSystem, chain_system


@st.composite
def systems(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    f = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    x0 = draw(st.integers(0, n - 1))
    return CountingSystem(n, tuple(f), x0)


@st.composite
def minimal_systems(draw, max_n=8):
    """A minimal system: a canonical chain, relabeled by a random permutation."""
    n = draw(st.integers(1, max_n))
    tail = draw(st.integers(0, n - 1))
    perm = draw(st.permutations(range(n)))
    cs = chain_system(tail, n - tail)
    f = [0] * n
    for x in range(n):
        f[perm[x]] = perm[cs.f[x]]
    return CountingSystem(n, tuple(f), perm[0])


@pytest.fixture(params=["ONE", "C3", "S4", "R5"])
def minimal_fixture(request):
    return {"ONE": ONE, "C3": C3, "S4": S4, "R5": R5}[request.param]


@pytest.fixture
def all_fixtures():
    return {"ONE": ONE, "C3": C3, "S4": S4, "R5": R5, "N5": N5}
