"""Hot numeric kernels with a numba backend and a pure-numpy fallback.

The backend is chosen once at import time. Set ``PERRONMAX_DISABLE_NUMBA=1``
in the environment to force the numpy path (useful for debugging and for
platforms without numba). Both backends expose the same functions with the
same signatures:

``power_iteration(indptr, indices, tol, max_iter)``
    Power iteration on ``A + I`` for a CSR adjacency structure. Returns
    ``(lam, f, residual, iterations, converged)``.
``matvec(indptr, indices, x)``
    ``A @ x`` for a CSR adjacency structure.
``fill_permutations(state, out)``
    Write successive distinct permutations of ``state`` into the rows of
    ``out`` (lexicographic order), advancing ``state`` in place. Returns
    ``(rows_written, exhausted)``.
``prufer_decode_batch(codes, n)``
    Decode every row of ``codes`` into an ``(n - 1, 2)`` edge array.
``tree_codes_batch(edges, n)``
    Canonical int64 code of each tree in an ``(m, n - 1, 2)`` edge batch:
    equal codes iff isomorphic trees. Needs ``n <= 31``.
"""

import os

DISABLE_ENV = "PERRONMAX_DISABLE_NUMBA"


def numba_requested():
    return os.environ.get(DISABLE_ENV, "").strip().lower() not in {"1", "true", "yes", "on"}


if numba_requested():
    try:
        from . import _numba as _impl
    except ImportError:  # numba missing or broken
        from . import _numpy as _impl
else:
    from . import _numpy as _impl

BACKEND = _impl.NAME

power_iteration = _impl.power_iteration
matvec = _impl.matvec
fill_permutations = _impl.fill_permutations
prufer_decode_batch = _impl.prufer_decode_batch
tree_codes_batch = _impl.tree_codes_batch

__all__ = [
    "BACKEND",
    "DISABLE_ENV",
    "fill_permutations",
    "matvec",
    "power_iteration",
    "prufer_decode_batch",
    "tree_codes_batch",
]
