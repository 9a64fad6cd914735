"""Shared fixtures: pinned small algebras and the doubling chain."""

from fractions import Fraction as F

import pytest

from homalg.algebra import Algebra
from homalg.constructions import cayley_dickson_chain
from homalg.fields import GF, QQ


def q(v):
    return F(v)


def qalg(tensor, labels=None):
    """Algebra over Q from an integer structure tensor."""
    return Algebra(
        QQ,
        [[[F(v) for v in col] for col in row] for row in tensor],
        labels=labels,
    )


def fpalg(p, tensor, labels=None):
    field = GF(p)
    return Algebra(
        field,
        [[[field.from_int(v) for v in col] for col in row] for row in tensor],
        labels=labels,
    )


def projection_tensor(dim):
    return [
        [[1 if k == j else 0 for k in range(dim)] for j in range(dim)]
        for _ in range(dim)
    ]


NIL2 = [[[0, 1], [0, 0]], [[0, 0], [0, 0]]]  # e0 e0 = e1
LEIB2 = [[[0, 0], [0, 0]], [[0, 0], [1, 0]]]  # [y, y] = x


def matrix_algebra_tensor(k):
    """Structure constants of k x k matrices: E_ab E_cd = delta_bc E_ad."""
    n = k * k
    idx = lambda a, b: a * k + b
    tensor = [[[0] * n for _ in range(n)] for _ in range(n)]
    for a in range(k):
        for b in range(k):
            for c in range(k):
                for d in range(k):
                    if b == c:
                        tensor[idx(a, b)][idx(c, d)][idx(a, d)] = 1
    return tensor


@pytest.fixture(scope="session")
def cd_chain():
    """Doubling chain over Q up to dimension 16 (shared: it is the most
    expensive fixture)."""
    return cayley_dickson_chain(4)


@pytest.fixture(scope="session")
def complexes(cd_chain):
    return cd_chain[1].base


@pytest.fixture(scope="session")
def quaternions(cd_chain):
    return cd_chain[2].base


@pytest.fixture(scope="session")
def octonions(cd_chain):
    return cd_chain[3].base


@pytest.fixture(scope="session")
def sedenions(cd_chain):
    return cd_chain[4].base


@pytest.fixture()
def proj2():
    return qalg(projection_tensor(2))


@pytest.fixture()
def nil2():
    return qalg(NIL2)


@pytest.fixture()
def leib2():
    return qalg(LEIB2)


@pytest.fixture()
def mat2():
    return qalg(matrix_algebra_tensor(2))
