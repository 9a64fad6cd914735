"""Exact linear algebra over Q and prime fields.

Matrices are dense and immutable; subspaces are kept in a canonical form
(reduced row-echelon basis, ascending pivots) so that subspace equality is
entry-wise equality of the canonical bases.  All arithmetic is exact; there is
no floating point anywhere in this package.

Vectors are plain tuples of raw scalars (``Fraction`` over Q, ``int`` residues
over F_p); see ``fields`` for the scalar conventions.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from homalg import kernels
from homalg.errors import DimensionMismatch, FieldMismatch
from homalg.fields import Field, PrimeField, QQ

# modulus for the rank certificate used to short-circuit rational elimination
_CERT_PRIME = 2147483647


def check_same_field(f1: Field, f2: Field):
    if f1 != f2:
        raise FieldMismatch(f"{f1} vs {f2}")


def zero_vector(field: Field, n: int) -> tuple:
    return (field.zero,) * n


def basis_vector(field: Field, n: int, i: int) -> tuple:
    return tuple(field.one if j == i else field.zero for j in range(n))


def vec_add(field: Field, u, v):
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field: Field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field: Field, lam, u):
    return tuple(field.mul(lam, a) for a in u)


def vec_is_zero(u) -> bool:
    return all(not a for a in u)


class Matrix:
    """Immutable dense matrix over an exact field.

    The column convention used across the package: for a linear map, column
    ``j`` is the image of the j-th basis vector.
    """

    __slots__ = ("field", "nrows", "ncols", "rows", "_hash")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise DimensionMismatch("ragged rows")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        self._hash = None

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [[field.zero] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, field: Field, cols) -> "Matrix":
        cols = [tuple(c) for c in cols]
        n = len(cols[0]) if cols else 0
        return cls(field, [[c[i] for c in cols] for i in range(n)])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.rows))
        return self._hash

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols})"

    def is_zero(self) -> bool:
        return all(vec_is_zero(r) for r in self.rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, zip(*self.rows)) if self.rows else self

    def add(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        f = self.field
        return Matrix(f, [vec_add(f, a, b) for a, b in zip(self.rows, other.rows)])

    def sub(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        f = self.field
        return Matrix(f, [vec_sub(f, a, b) for a, b in zip(self.rows, other.rows)])

    def scale(self, lam) -> "Matrix":
        f = self.field
        return Matrix(f, [vec_scale(f, lam, r) for r in self.rows])

    def matmul(self, other: "Matrix") -> "Matrix":
        check_same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.ncols} vs {other.nrows}")
        f = self.field
        ocols = other.ncols
        out = []
        for row in self.rows:
            acc = [f.zero] * ocols
            for k, a in enumerate(row):
                if not a:
                    continue
                orow = other.rows[k]
                for j in range(ocols):
                    b = orow[j]
                    if b:
                        acc[j] = f.add(acc[j], f.mul(a, b))
            out.append(acc)
        return Matrix(f, out)

    __matmul__ = matmul

    def apply(self, vec) -> tuple:
        """Matrix times column vector."""
        if len(vec) != self.ncols:
            raise DimensionMismatch(f"{self.ncols} vs {len(vec)}")
        f = self.field
        out = []
        for row in self.rows:
            s = f.zero
            for a, x in zip(row, vec):
                if a and x:
                    s = f.add(s, f.mul(a, x))
            out.append(s)
        return tuple(out)

    def flatten(self) -> tuple:
        """Row-major flattening, used to view n x n maps as n^2 vectors."""
        return tuple(v for row in self.rows for v in row)

    def _check_shape(self, other: "Matrix"):
        check_same_field(self.field, other.field)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch(
                f"{self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}"
            )


def unflatten_matrix(field: Field, n: int, vec) -> Matrix:
    if len(vec) != n * n:
        raise DimensionMismatch(f"expected {n * n} entries, got {len(vec)}")
    return Matrix(field, [vec[i * n : (i + 1) * n] for i in range(n)])


# -- raw row <-> integer row conversion (Q path) ------------------------------


def _q_row_to_int(row) -> list:
    """Clear denominators of a Fraction row.  Scaling a row by a positive
    integer changes neither row space nor nullspace."""
    mult = 1
    for v in row:
        d = v.denominator
        if d != 1:
            mult = lcm(mult, d)
    if mult == 1:
        return [v.numerator for v in row]
    return [int(v * mult) for v in row]


def _int_rref_to_q(rows, pivots):
    """Primitive integer RREF rows -> rational rows with pivot entries 1."""
    out = []
    for row, c in zip(rows, pivots):
        p = row[c]
        if p == 1:
            out.append(tuple(Fraction(v) for v in row))
        else:
            out.append(tuple(Fraction(v, p) for v in row))
    return out


class NullspaceSolver:
    """Accumulates homogeneous constraint rows and solves for the exact right
    nullspace.

    Rows may be fed densely or sparsely and in any order; exact duplicates
    (after primitive normalization over Q) are dropped.  Over Q a modular
    rank certificate short-circuits everything once full column rank is
    certain: rank mod p never exceeds the rational rank, so a full-rank
    reduction mod p proves the rational nullspace is zero.  The exact
    elimination only runs when the certificate leaves room for a kernel.
    """

    def __init__(self, field: Field, ncols: int, chunk: int = 384):
        self.field = field
        self.ncols = ncols
        self.chunk = chunk
        self._rational = field == QQ
        self._seen: set = set()
        self._pending: list = []
        self._active: list = []
        self._pivots: list = []
        self._pool: list = []  # Q only: unique integer rows for the exact pass
        self.full_rank = ncols == 0

    def add_dense(self, row):
        if self.full_rank:
            return
        if self._rational:
            irow = _q_row_to_int(row)
            kernels.row_primitive_int(irow)
            self._push_int(irow)
        else:
            p = self.field.p
            self._push_fp([v % p for v in row])

    def add_sparse(self, pairs):
        """pairs: iterable of (column, raw value); columns may repeat."""
        if self.full_rank:
            return
        if self._rational:
            row = [Fraction(0)] * self.ncols
        else:
            row = [0] * self.ncols
        f = self.field
        for c, v in pairs:
            row[c] = f.add(row[c], v)
        self.add_dense(row)

    def _push_int(self, irow):
        if not any(irow):
            return
        key = tuple(irow)
        if key in self._seen:
            return
        self._seen.add(key)
        self._pool.append(irow)
        self._pending.append([v % _CERT_PRIME for v in irow])
        if len(self._pending) >= self.chunk:
            self._flush()

    def _push_fp(self, row):
        if not any(row):
            return
        key = tuple(row)
        if key in self._seen:
            return
        self._seen.add(key)
        self._pending.append(row)
        if len(self._pending) >= self.chunk:
            self._flush()

    def _flush(self):
        if not self._pending:
            return
        rows = self._active + self._pending
        self._pending = []
        p = _CERT_PRIME if self._rational else self.field.p
        self._active, self._pivots = kernels.rref_fp(rows, p)
        if len(self._pivots) == self.ncols:
            self.full_rank = True
            self._pool = []
            self._pending = []

    def solve(self) -> "Subspace":
        self._flush()
        if self.full_rank:
            return Subspace.zero(self.field, self.ncols)
        if self._rational:
            active: list = []
            pivots: list = []
            n = len(self._pool)
            for start in range(0, n, self.chunk):
                rows = active + [list(r) for r in self._pool[start : start + self.chunk]]
                active, pivots = kernels.rref_int(rows)
                if len(pivots) == self.ncols:
                    return Subspace.zero(self.field, self.ncols)
            basis = _nullspace_from_rref_q(active, pivots, self.ncols)
        else:
            basis = _nullspace_from_rref_fp(
                self.field, self._active, self._pivots, self.ncols
            )
        return Subspace.from_rows(self.field, self.ncols, basis)


def _nullspace_from_rref_q(int_rows, pivots, ncols):
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(int_rows, pivots):
            if row[f]:
                v[c] = Fraction(-row[f], row[c])
        basis.append(v)
    return basis


def _nullspace_from_rref_fp(field, rows, pivots, ncols):
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = field.one
        for row, c in zip(rows, pivots):
            if row[f]:
                v[c] = field.neg(row[f])
        basis.append(v)
    return basis


# -- public operations ---------------------------------------------------------


def rref(m: Matrix):
    """Unique reduced row-echelon form, preserving the input shape.

    Returns ``(Matrix, pivots)``.  Idempotent: ``rref(rref(m)[0])`` equals
    ``rref(m)[0]``.
    """
    field = m.field
    if m.nrows == 0 or m.ncols == 0:
        return m, ()
    if isinstance(field, PrimeField):
        rows = [[v % field.p for v in r] for r in m.rows]
        red, pivots = kernels.rref_fp(rows, field.p)
    else:
        rows = [_q_row_to_int(r) for r in m.rows]
        red_int, pivots = kernels.rref_int(rows)
        red = _int_rref_to_q(red_int, pivots)
    pad = [[field.zero] * m.ncols for _ in range(m.nrows - len(red))]
    return Matrix(field, [list(r) for r in red] + pad), tuple(pivots)


def kernel(m: Matrix) -> "Subspace":
    """Canonical basis of the right nullspace ``{v : m v = 0}``."""
    solver = NullspaceSolver(m.field, m.ncols)
    for row in m.rows:
        solver.add_dense(list(row))
    return solver.solve()


def solve_affine(m: Matrix, b) -> "AffineSet":
    """All solutions of ``m x = b`` as particular + direction subspace.

    The particular solution is canonical: free coordinates are zero.
    """
    if len(b) != m.nrows:
        raise DimensionMismatch(f"{m.nrows} rows vs rhs of length {len(b)}")
    field = m.field
    n = m.ncols
    aug_rows = [list(r) + [bv] for r, bv in zip(m.rows, b)]
    if isinstance(field, PrimeField):
        rows = [[v % field.p for v in r] for r in aug_rows]
        red, pivots = kernels.rref_fp(rows, field.p)
        rational = False
    else:
        rows = [_q_row_to_int(r) for r in aug_rows]
        red, pivots = kernels.rref_int(rows)
        rational = True
    if n in pivots:
        return AffineSet.empty_set(field, n)
    particular = [field.zero] * n
    for row, c in zip(red, pivots):
        if rational:
            particular[c] = Fraction(row[n], row[c])
        else:
            particular[c] = field.div(row[n], row[c])
    return AffineSet(field, n, tuple(particular), kernel(m))


def eigenspace(m: Matrix, lam) -> "Subspace":
    if not m.is_square():
        raise DimensionMismatch("eigenspace needs a square matrix")
    shifted = m.sub(Matrix.identity(m.field, m.nrows).scale(lam))
    return kernel(shifted)


class Subspace:
    """A linear subspace in canonical form.

    ``basis`` is a Matrix in reduced row-echelon form whose rows span the
    subspace; ``pivots`` are the ascending pivot columns.  Two subspaces are
    equal iff their canonical bases are entry-wise equal.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots", "_hash")

    def __init__(self, field: Field, ambient_dim: int, basis: Matrix, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)
        self._hash = None

    @classmethod
    def from_rows(cls, field: Field, ambient_dim: int, rows) -> "Subspace":
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionMismatch(
                    f"row length {len(r)} vs ambient {ambient_dim}"
                )
        if not rows:
            return cls.zero(field, ambient_dim)
        if isinstance(field, PrimeField):
            red, pivots = kernels.rref_fp(
                [[v % field.p for v in r] for r in rows], field.p
            )
        else:
            red_int, pivots = kernels.rref_int([_q_row_to_int(r) for r in rows])
            red = _int_rref_to_q(red_int, pivots)
        return cls(field, ambient_dim, Matrix(field, red), pivots)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix(field, []), ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(
            field,
            ambient_dim,
            Matrix.identity(field, ambient_dim),
            range(ambient_dim),
        )

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def basis_rows(self):
        return self.basis.rows

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis.rows == other.basis.rows
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.ambient_dim, self.basis.rows))
        return self._hash

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.field}^{self.ambient_dim})"

    def contains(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(
                f"vector length {len(v)} vs ambient {self.ambient_dim}"
            )
        f = self.field
        r = list(v)
        for row, c in zip(self.basis.rows, self.pivots):
            coef = r[c]
            if coef:
                for i in range(c, self.ambient_dim):
                    if row[i]:
                        r[i] = f.sub(r[i], f.mul(coef, row[i]))
        return vec_is_zero(r)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains(r) for r in other.basis.rows)

    def image_under(self, m: Matrix) -> "Subspace":
        """Span of the images of the basis vectors under the map ``m``."""
        return Subspace.from_rows(
            self.field, m.nrows, [m.apply(r) for r in self.basis.rows]
        )

    def perp(self) -> "Subspace":
        """Orthogonal complement for the standard dot product (nondegenerate
        on the full coordinate space over any field)."""
        if self.dim == 0:
            return Subspace.full(self.field, self.ambient_dim)
        return kernel(self.basis)

    def _check_compatible(self, other: "Subspace"):
        check_same_field(self.field, other.field)
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"ambient {self.ambient_dim} vs {other.ambient_dim}"
            )


def join(s1: Subspace, s2: Subspace) -> Subspace:
    s1._check_compatible(s2)
    return Subspace.from_rows(
        s1.field, s1.ambient_dim, list(s1.basis.rows) + list(s2.basis.rows)
    )


def meet(s1: Subspace, s2: Subspace) -> Subspace:
    """Intersection, computed as the kernel of the stacked complements:
    (U meet V) is the perp of (perp U join perp V)."""
    s1._check_compatible(s2)
    if s1.is_full():
        return s2
    if s2.is_full():
        return s1
    return join(s1.perp(), s2.perp()).perp()


def meet_all(spaces) -> Subspace:
    spaces = list(spaces)
    out = spaces[0]
    for s in spaces[1:]:
        out = meet(out, s)
    return out


def is_direct_sum(s1: Subspace, s2: Subspace, whole: Subspace) -> bool:
    return meet(s1, s2).is_zero() and join(s1, s2) == whole


class AffineSet:
    """Solution set of a linear system: a particular point plus a direction
    subspace, or the empty set.

    The particular point is the canonical representative (free coordinates
    zero under the pivot convention of the defining system).
    """

    __slots__ = ("field", "ambient_dim", "particular", "direction", "is_empty")

    def __init__(self, field: Field, ambient_dim: int, particular, direction):
        self.field = field
        self.ambient_dim = ambient_dim
        self.particular = particular
        self.direction = direction
        self.is_empty = particular is None

    @classmethod
    def empty_set(cls, field: Field, ambient_dim: int) -> "AffineSet":
        return cls(field, ambient_dim, None, None)

    def contains(self, v) -> bool:
        if self.is_empty:
            return False
        return self.direction.contains(vec_sub(self.field, v, self.particular))

    def is_singleton(self) -> bool:
        return not self.is_empty and self.direction.is_zero()

    def member(self, coeffs=()) -> tuple:
        """particular + sum(coeff_i * direction basis vector i)."""
        if self.is_empty:
            raise ValueError("empty affine set has no members")
        v = self.particular
        for lam, row in zip(coeffs, self.direction.basis.rows):
            v = vec_add(self.field, v, vec_scale(self.field, lam, row))
        return v

    def __eq__(self, other):
        return (
            isinstance(other, AffineSet)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.is_empty == other.is_empty
            and self.particular == other.particular
            and self.direction == other.direction
        )

    def __repr__(self):
        if self.is_empty:
            return "AffineSet(empty)"
        return f"AffineSet(dim {self.direction.dim} of {self.field}^{self.ambient_dim})"


def intersect_affine(a1: AffineSet, a2: AffineSet) -> AffineSet:
    """Intersection of two affine sets, by re-solving the stacked constraint
    systems x = p_i + dir_i expressed as perp(dir_i) x = perp(dir_i) p_i."""
    check_same_field(a1.field, a2.field)
    if a1.ambient_dim != a2.ambient_dim:
        raise DimensionMismatch("ambient dims differ")
    if a1.is_empty or a2.is_empty:
        return AffineSet.empty_set(a1.field, a1.ambient_dim)
    rows = []
    rhs = []
    for a in (a1, a2):
        c = a.direction.perp().basis
        for row in c.rows:
            rows.append(list(row))
            s = a.field.zero
            for x, y in zip(row, a.particular):
                if x and y:
                    s = a.field.add(s, a.field.mul(x, y))
            rhs.append(s)
    if not rows:
        return a1  # both full-space
    return solve_affine(Matrix(a1.field, rows), tuple(rhs))
