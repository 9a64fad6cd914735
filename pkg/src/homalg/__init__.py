"""homalg: exact workbench for hom-associative structures and hom-unities on
finite-dimensional nonassociative algebras over Q and prime fields.

Everything is exact (arbitrary-precision rationals or prime-field residues);
all subspaces are reported in canonical reduced row-echelon form, so equal
subspaces are entry-wise equal and reports are byte-reproducible.
"""

__version__ = "0.1.0"

from homalg.algebra import (  # noqa: F401
    Algebra,
    HomAlgebra,
    InvolutiveAlgebra,
    is_idempotent_elem,
    is_idempotent_map,
)
from homalg.fields import GF, QQ  # noqa: F401
from homalg.linalg import (  # noqa: F401
    AffineSet,
    Matrix,
    Subspace,
    eigenspace,
    is_direct_sum,
    join,
    kernel,
    meet,
    rref,
    solve_affine,
)
