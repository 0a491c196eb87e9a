from __future__ import annotations

import pytest

from cycdet import CyclicMatrix

# Three recurring 5x5 class members.
#
# POSDET_5X5: one closed SCC {2,3,4}, det = 12 > 0; its gap graph and the
#   fundamental solution (0, 1/2, 1/4, 1/4, 0) are pinned in golden tests.
# SINGULAR_5X5: closed SCCs {3,5} and {4}, det = 0.
# NEC_NOT_P_5X5: satisfies the necessary P-matrix condition yet has a zero
#   principal minor on {1,2,3,4}.
POSDET_5X5 = [
    [2, 1, 1, 1, 0],
    [0, 1, 1, 0, 0],
    [2, 1, 2, 2, 2],
    [2, 1, 0, 2, 2],
    [1, 1, 1, 0, 2],
]
SINGULAR_5X5 = [
    [2, 2, 2, 1, 1],
    [1, 3, 3, 2, 2],
    [0, 0, 1, 1, 0],
    [2, 2, 2, 2, 2],
    [1, 1, 0, 0, 1],
]
NEC_NOT_P_5X5 = [
    [2, 2, 1, 1, 0],
    [0, 1, 1, 0, 0],
    [0, 0, 1, 1, 1],
    [1, 0, 0, 1, 1],
    [1, 0, 0, 0, 1],
]


@pytest.fixture
def posdet5() -> CyclicMatrix:
    return CyclicMatrix.from_rows(POSDET_5X5)


@pytest.fixture
def singular5() -> CyclicMatrix:
    return CyclicMatrix.from_rows(SINGULAR_5X5)


@pytest.fixture
def nec_not_p5() -> CyclicMatrix:
    return CyclicMatrix.from_rows(NEC_NOT_P_5X5)
