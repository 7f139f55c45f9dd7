"""Dense Gaussian elimination over GF(2^m) on integer matrices.

Matrices are numpy int64 arrays of field elements.  The hot loops are
numba-compiled; a pure-numpy fallback with identical pivoting order keeps
results bit-for-bit reproducible when numba is unavailable.
"""

from __future__ import annotations

import numpy as np

from rsw.gf import Field

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


@njit(cache=True)
def _forward_eliminate(mat, log, exp2, qm1):
    """In-place row echelon form; returns pivot row index per column (-1 = free).

    Pivoting is deterministic: columns left to right, first nonzero row.
    """
    rows, cols = mat.shape
    piv_of_col = np.full(cols, -1, np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if mat[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(c, cols):
                t = mat[r, j]
                mat[r, j] = mat[pr, j]
                mat[pr, j] = t
        inv_l = qm1 - log[mat[r, c]]
        for j in range(c, cols):
            v = mat[r, j]
            if v != 0:
                mat[r, j] = exp2[inv_l + log[v]]
        for i in range(r + 1, rows):
            fac = mat[i, c]
            if fac != 0:
                lf = log[fac]
                mat[i, c] = 0
                for j in range(c + 1, cols):
                    v = mat[r, j]
                    if v != 0:
                        mat[i, j] ^= exp2[lf + log[v]]
        piv_of_col[c] = r
        r += 1
    return piv_of_col


def _forward_eliminate_np(mat, log, exp2, qm1):
    """Vectorized fallback with the same pivoting order as the jitted kernel."""
    rows, cols = mat.shape
    piv_of_col = np.full(cols, -1, np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(mat[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            mat[[r, pr], c:] = mat[[pr, r], c:]
        inv_l = qm1 - log[mat[r, c]]
        row = exp2[inv_l + log[mat[r, c:]]]
        mat[r, c:] = row
        facs = mat[r + 1 :, c]
        live = np.nonzero(facs)[0]
        if live.size:
            upd = exp2[log[facs[live, None]] + log[row[None, :]]]
            mat[r + 1 + live, c:] ^= upd
        piv_of_col[c] = r
        r += 1
    return piv_of_col


def _echelon(mat: np.ndarray, field: Field) -> np.ndarray:
    if HAVE_NUMBA:
        return _forward_eliminate(mat, field.np_log, field.np_exp2, field.q - 1)
    return _forward_eliminate_np(mat, field.np_log, field.np_exp2, field.q - 1)


def nullspace_vector(mat: np.ndarray, field: Field) -> np.ndarray | None:
    """One kernel vector of mat, or None if the kernel is trivial.

    Deterministic choice: the kernel basis vector attached to the leftmost
    free column, i.e. the vector whose highest-index nonzero entry is as far
    left as possible.  That entry is normalized to 1.
    """
    mat = np.ascontiguousarray(mat, dtype=np.int64).copy()
    rows, cols = mat.shape
    piv = _echelon(mat, field)
    free = np.nonzero(piv < 0)[0]
    if free.size == 0:
        return None
    c_star = int(free[0])
    x = np.zeros(cols, np.int64)
    x[c_star] = 1
    lg, e2 = field.np_log, field.np_exp2
    # back-substitute pivot columns left of c_star, bottom-up
    for c in range(c_star - 1, -1, -1):
        r = piv[c]
        seg = mat[r, c + 1 : c_star + 1]
        acc = np.bitwise_xor.reduce(e2[lg[seg] + lg[x[c + 1 : c_star + 1]]])
        x[c] = acc  # pivot normalized to 1; char 2 makes negation a no-op
    return x


def solve_linear(mat: np.ndarray, rhs: np.ndarray, field: Field) -> np.ndarray | None:
    """One solution of mat @ x = rhs over the field, or None if inconsistent.

    Free variables are set to zero.
    """
    mat = np.ascontiguousarray(mat, dtype=np.int64)
    rhs = np.ascontiguousarray(rhs, dtype=np.int64).reshape(-1, 1)
    aug = np.hstack([mat, rhs])
    piv = _echelon(aug, field)
    rows, cols = mat.shape
    if piv[cols] >= 0:  # pivot in the rhs column: inconsistent system
        return None
    x = np.zeros(cols, np.int64)
    lg, e2 = field.np_log, field.np_exp2
    for c in range(cols - 1, -1, -1):
        r = piv[c]
        if r < 0:
            continue
        seg = aug[r, c + 1 : cols]
        acc = int(aug[r, cols])
        if seg.size:
            acc ^= int(np.bitwise_xor.reduce(e2[lg[seg] + lg[x[c + 1 : cols]]]))
        x[c] = acc
    return x
