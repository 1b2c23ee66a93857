import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from contactlab.boolean import FiniteBooleanAlgebra
from contactlab.precontact import pca_from_pairs
from contactlab.topology import discrete_space, space_from_closed_base


@pytest.fixture
def b2():
    return FiniteBooleanAlgebra(1)


@pytest.fixture
def b4():
    return FiniteBooleanAlgebra(2)


@pytest.fixture
def b8():
    return FiniteBooleanAlgebra(3)


@pytest.fixture
def path_pca():
    """Three atoms, kernel {(0,1), (1,2)}: not symmetric, not transitive."""
    return pca_from_pairs(3, {(0, 1), (1, 2)})


@pytest.fixture
def xl_space():
    """Three points g1, g2, g3 with closed sets {}, {g3}, {g1,g3},
    {g2,g3} and the whole space."""
    return space_from_closed_base(("g1", "g2", "g3"), [0b101, 0b110])


@pytest.fixture
def disc2():
    return discrete_space(("a", "b"))


@pytest.fixture
def sierpinski():
    # closed sets: {}, {s0}, whole space
    return space_from_closed_base(("s0", "s1"), [0b01])


def all_kernels(n):
    pairs = [(p, q) for p in range(n) for q in range(n)]
    for r in range(len(pairs) + 1):
        for chosen in itertools.combinations(pairs, r):
            yield frozenset(chosen)


@pytest.fixture(scope="session")
def kernels_upto_2():
    return [(n, k) for n in (1, 2) for k in all_kernels(n)]


@pytest.fixture(scope="session")
def kernels_3():
    return list(all_kernels(3))
