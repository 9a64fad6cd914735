"""Structure-constant algebras and the elementary (hom-)operators.

An algebra of dimension n over an exact field is a tensor c[i][j][k] with
e_i * e_j = sum_k c[i][j][k] e_k.  Elements are coordinate tuples; linear maps
are matrices with column j the image of e_j (one convention everywhere,
including serialized files).
"""

from __future__ import annotations

import os

from homalg.errors import DimensionMismatch, InvariantViolation
from homalg.fields import Field
from homalg.linalg import (
    Matrix,
    basis_vector,
    check_same_field,
    vec_is_zero,
    vec_sub,
    zero_vector,
)


def max_dim() -> int:
    """Dimension guard for accidental huge solves (twist systems are n^4 x n^2)."""
    try:
        return int(os.environ.get("HOMALG_MAX_DIM", "32"))
    except ValueError:
        return 32


class Algebra:
    """Finite-dimensional algebra given by its structure tensor."""

    __slots__ = (
        "field",
        "dim",
        "tensor",
        "labels",
        "_products",
        "_left_mats",
        "_right_mats",
        "_hash",
    )

    def __init__(self, field: Field, tensor, labels=None):
        tensor = tuple(tuple(tuple(col) for col in row) for row in tensor)
        n = len(tensor)
        if n > max_dim():
            raise DimensionMismatch(
                f"dimension {n} exceeds HOMALG_MAX_DIM={max_dim()}"
            )
        for row in tensor:
            if len(row) != n or any(len(col) != n for col in row):
                raise InvariantViolation(f"structure tensor is not {n}x{n}x{n}")
        self.field = field
        self.dim = n
        self.tensor = tensor
        self.labels = tuple(labels) if labels else None
        if self.labels and len(self.labels) != n:
            raise InvariantViolation("label list length != dim")
        self._products = None
        self._left_mats = None
        self._right_mats = None
        self._hash = None

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.tensor == other.tensor
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.tensor))
        return self._hash

    def __repr__(self):
        return f"Algebra(dim {self.dim} over {self.field})"

    # -- basics ----------------------------------------------------------------

    def zero(self) -> tuple:
        return zero_vector(self.field, self.dim)

    def basis(self, i: int) -> tuple:
        if not 0 <= i < self.dim:
            raise DimensionMismatch(f"basis index {i} out of range for dim {self.dim}")
        return basis_vector(self.field, self.dim, i)

    def basis_elements(self):
        return [self.basis(i) for i in range(self.dim)]

    @property
    def products(self):
        """products[i][j] = e_i * e_j as a coordinate tuple."""
        if self._products is None:
            self._products = tuple(
                tuple(
                    tuple(self.tensor[i][j][k] for k in range(self.dim))
                    for j in range(self.dim)
                )
                for i in range(self.dim)
            )
        return self._products

    def _check_elem(self, x):
        if len(x) != self.dim:
            raise DimensionMismatch(f"element length {len(x)} vs dim {self.dim}")

    def multiply(self, x, y) -> tuple:
        self._check_elem(x)
        self._check_elem(y)
        f = self.field
        acc = [f.zero] * self.dim
        tensor = self.tensor
        for i, xi in enumerate(x):
            if not xi:
                continue
            ti = tensor[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                coef = f.mul(xi, yj)
                row = ti[j]
                for k in range(self.dim):
                    c = row[k]
                    if c:
                        acc[k] = f.add(acc[k], f.mul(coef, c))
        return tuple(acc)

    def left_op(self, x) -> Matrix:
        """Matrix of y -> x * y (column j = x * e_j)."""
        self._check_elem(x)
        f = self.field
        n = self.dim
        out = [[f.zero] * n for _ in range(n)]
        for i, xi in enumerate(x):
            if not xi:
                continue
            ti = self.tensor[i]
            for j in range(n):
                row = ti[j]
                for k in range(n):
                    c = row[k]
                    if c:
                        out[k][j] = f.add(out[k][j], f.mul(xi, c))
        return Matrix(f, out)

    def right_op(self, x) -> Matrix:
        """Matrix of y -> y * x (column j = e_j * x)."""
        self._check_elem(x)
        f = self.field
        n = self.dim
        out = [[f.zero] * n for _ in range(n)]
        for j, xj in enumerate(x):
            if not xj:
                continue
            for i in range(n):
                row = self.tensor[i][j]
                for k in range(n):
                    c = row[k]
                    if c:
                        out[k][i] = f.add(out[k][i], f.mul(xj, c))
        return Matrix(f, out)

    @property
    def left_basis_ops(self):
        if self._left_mats is None:
            self._left_mats = tuple(self.left_op(self.basis(i)) for i in range(self.dim))
        return self._left_mats

    @property
    def right_basis_ops(self):
        if self._right_mats is None:
            self._right_mats = tuple(
                self.right_op(self.basis(i)) for i in range(self.dim)
            )
        return self._right_mats

    # -- derived operators -------------------------------------------------------

    def commutator(self, x, y) -> tuple:
        return vec_sub(self.field, self.multiply(x, y), self.multiply(y, x))

    def anticommutator(self, x, y) -> tuple:
        f = self.field
        xy = self.multiply(x, y)
        yx = self.multiply(y, x)
        return tuple(f.add(a, b) for a, b in zip(xy, yx))

    def associator(self, x, y, z) -> tuple:
        return vec_sub(
            self.field,
            self.multiply(self.multiply(x, y), z),
            self.multiply(x, self.multiply(y, z)),
        )

    # -- predicates ---------------------------------------------------------------

    def commutativity_witness(self):
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.products[i][j] != self.products[j][i]:
                    return (i, j)
        return None

    def is_commutative(self) -> bool:
        return self.commutativity_witness() is None

    def is_skew_symmetric(self) -> bool:
        """c[i][j] = -c[j][i] on all pairs (the identity [x,y] = -[y,x];
        in characteristic 2 this does not force the diagonal to vanish)."""
        f = self.field
        for i in range(self.dim):
            for j in range(i, self.dim):
                pij = self.products[i][j]
                pji = self.products[j][i]
                if any(f.add(a, b) for a, b in zip(pij, pji)):
                    return False
        return True

    def associativity_witness(self):
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    if not vec_is_zero(
                        self.associator(self.basis(i), self.basis(j), self.basis(k))
                    ):
                        return (i, j, k)
        return None

    def is_associative(self) -> bool:
        return self.associativity_witness() is None

    def is_zero_algebra(self) -> bool:
        return all(
            vec_is_zero(self.products[i][j])
            for i in range(self.dim)
            for j in range(self.dim)
        )


class HomAlgebra:
    """An algebra with a twisting linear map."""

    __slots__ = ("base", "twist", "_hash")

    def __init__(self, base: Algebra, twist: Matrix):
        check_same_field(base.field, twist.field)
        if twist.nrows != base.dim or twist.ncols != base.dim:
            raise DimensionMismatch(
                f"twist is {twist.nrows}x{twist.ncols}, algebra dim {base.dim}"
            )
        self.base = base
        self.twist = twist
        self._hash = None

    def __eq__(self, other):
        return (
            isinstance(other, HomAlgebra)
            and self.base == other.base
            and self.twist == other.twist
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.base, self.twist))
        return self._hash

    def __repr__(self):
        return f"HomAlgebra(dim {self.base.dim} over {self.base.field})"

    def hom_associator(self, x, y, z) -> tuple:
        """(x*y) * twist(z) - twist(x) * (y*z)."""
        a = self.base
        return vec_sub(
            a.field,
            a.multiply(a.multiply(x, y), self.twist.apply(z)),
            a.multiply(self.twist.apply(x), a.multiply(y, z)),
        )

    def hom_associativity_witness(self):
        """Lexicographically first basis triple with nonzero hom-associator."""
        a = self.base
        tw = self.twist
        twisted = [tw.apply(a.basis(i)) for i in range(a.dim)]
        for i in range(a.dim):
            for j in range(a.dim):
                uij = a.products[i][j]
                for k in range(a.dim):
                    lhs = a.multiply(uij, twisted[k])
                    rhs = a.multiply(twisted[i], a.products[j][k])
                    if lhs != rhs:
                        return (i, j, k)
        return None

    def is_hom_associative(self) -> bool:
        return self.hom_associativity_witness() is None

    def multiplicativity_witness(self):
        """First basis pair with twist(x*y) != twist(x)*twist(y)."""
        a = self.base
        tw = self.twist
        twisted = [tw.apply(a.basis(i)) for i in range(a.dim)]
        for i in range(a.dim):
            for j in range(a.dim):
                if tw.apply(a.products[i][j]) != a.multiply(twisted[i], twisted[j]):
                    return (i, j)
        return None

    def is_multiplicative(self) -> bool:
        return self.multiplicativity_witness() is None


class InvolutiveAlgebra:
    """An algebra with an involutive conjugation (checked at construction)."""

    __slots__ = ("base", "conj")

    def __init__(self, base: Algebra, conj: Matrix):
        check_same_field(base.field, conj.field)
        if conj.nrows != base.dim or conj.ncols != base.dim:
            raise DimensionMismatch("conjugation shape does not match the algebra")
        if conj.matmul(conj) != Matrix.identity(base.field, base.dim):
            raise InvariantViolation("conjugation is not an involution")
        self.base = base
        self.conj = conj

    def __eq__(self, other):
        return (
            isinstance(other, InvolutiveAlgebra)
            and self.base == other.base
            and self.conj == other.conj
        )

    def __hash__(self):
        return hash((self.base, self.conj))

    def __repr__(self):
        return f"InvolutiveAlgebra(dim {self.base.dim} over {self.base.field})"


def is_idempotent_map(f: Matrix) -> bool:
    if not f.is_square():
        raise DimensionMismatch("idempotency needs a square matrix")
    return f.matmul(f) == f


def is_idempotent_elem(a: Algebra, x) -> bool:
    return a.multiply(x, x) == tuple(x)


def hom_algebra_with_left_mult(a: Algebra, x) -> HomAlgebra:
    return HomAlgebra(a, a.left_op(x))


def hom_algebra_with_right_mult(a: Algebra, x) -> HomAlgebra:
    return HomAlgebra(a, a.right_op(x))
