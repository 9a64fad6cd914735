"""Import-time selection of the row-reduction kernels.

The compiled extension is preferred when present; setting the environment
variable ``HOMALG_PURE_PYTHON`` (to any non-empty value) forces the pure
backend.  Both backends implement the same contracts and return identical
canonical output.
"""

import os

from homalg import _pykernels

if os.environ.get("HOMALG_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "pure-python"
else:
    try:
        from homalg import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _pykernels
        BACKEND = "pure-python"

rref_fp = _impl.rref_fp
rref_int = _impl.rref_int
row_primitive_int = _impl.row_primitive_int
