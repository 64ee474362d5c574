"""Dense exact linear algebra over small finite fields.

Matrices hold element indices (see ``field``) in read-only int64 arrays.  All
elimination uses the same pivot rule: the leftmost unresolved column, first
row with a nonzero entry.  The subset scans at the bottom are the hot path of
the distance oracle and the census and are compiled with numba.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

import numpy as np
from numba import njit

from .field import FieldElement, FieldSpec, field_tables


class BudgetExceeded(RuntimeError):
    """A combinatorial search would exceed its configured budget."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate


@dataclass(frozen=True, eq=False)
class GFMatrix:
    field: FieldSpec
    data: np.ndarray

    def __post_init__(self):
        arr = np.array(self.data, dtype=np.int64, copy=True)
        if arr.ndim != 2:
            arr = arr.reshape(len(arr), -1) if arr.size else np.zeros((0, 0), dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.field.order):
            raise ValueError("matrix entries out of range for the field")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @classmethod
    def from_elements(cls, rows) -> GFMatrix:
        rows = [list(r) for r in rows]
        spec = rows[0][0].spec
        if any(x.spec != spec for r in rows for x in r):
            raise ValueError("mixed fields in matrix")
        return cls(spec, np.array([[x.idx for x in r] for r in rows], dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, int(self.data[i, j]))

    @property
    def T(self) -> GFMatrix:
        return GFMatrix(self.field, self.data.T)

    def __eq__(self, other):
        return (
            isinstance(other, GFMatrix)
            and self.field == other.field
            and np.array_equal(self.data, other.data)
        )

    def __repr__(self) -> str:
        return f"GFMatrix({self.field.name}, {self.rows}x{self.cols})"

    def to_json(self) -> dict:
        return {
            "cols": self.cols,
            "entries": [int(v) for v in self.data.ravel()],
            "field": self.field.name,
            "rows": self.rows,
        }


def transpose(M: GFMatrix) -> GFMatrix:
    return M.T


def rref(M: GFMatrix) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    T = field_tables(M.field)
    A = M.data.copy()
    rows, cols = A.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = T.mul[T.inv[A[r, c]], A[r]]
        factors = A[:, c].copy()
        factors[r] = 0
        if factors.any():
            A = T.add[A, T.neg[T.mul[factors[:, None], A[r][None, :]]]]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M: GFMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(rref(M)[1])


def nullspace(M: GFMatrix) -> list[np.ndarray]:
    """Basis of the right kernel, one vector per free column (increasing).

    Each basis vector has a 1 at its free column and is zero on the other
    free columns.
    """
    R, pivots = rref(M)
    T = field_tables(M.field)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = np.zeros(M.cols, dtype=np.int64)
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = T.neg[R[row, f]]
        v.setflags(write=False)
        basis.append(v)
    return basis


def column_submatrix(M: GFMatrix, cols) -> GFMatrix:
    cols = [int(c) for c in cols]
    if any(c < 0 or c >= M.cols for c in cols):
        raise IndexError(f"column index out of range 0..{M.cols - 1}")
    if any(b <= a for a, b in zip(cols, cols[1:])):
        raise ValueError("column indices must be strictly increasing")
    return GFMatrix(M.field, M.data[:, cols].reshape(M.rows, len(cols)))


def mat_vec(M: GFMatrix, v) -> np.ndarray:
    """M @ v over the field."""
    T = field_tables(M.field)
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (M.cols,):
        raise ValueError(f"vector length {v.shape} does not match {M.cols} columns")
    out = np.zeros(M.rows, dtype=np.int64)
    prods = T.mul[M.data, v[None, :]]
    for j in range(M.cols):
        out = T.add[out, prods[:, j]]
    return out


def scale(field: FieldSpec, c: int, v) -> np.ndarray:
    return field_tables(field).mul[c, np.asarray(v, dtype=np.int64)]


def normalize_first_nonzero(field: FieldSpec, v) -> np.ndarray:
    """Scalar multiple of v whose first nonzero entry is 1."""
    v = np.asarray(v, dtype=np.int64)
    nz = np.flatnonzero(v)
    if nz.size == 0:
        return v.copy()
    return scale(field, field_tables(field).inv[v[nz[0]]], v)


# ---------------------------------------------------------------------------
# compiled subset scans
# ---------------------------------------------------------------------------


@njit(cache=True, nogil=True)
def _reduce_prefix(H, idx, start, add_t, mul_t, inv_t, neg_t, basis, pivcol):
    """Extend an echelon basis of H[:, idx[:start]] by the remaining columns.

    Rows ``basis[:start]`` must already hold the reduced prefix.  Returns the
    number of independent leading columns; a value below ``len(idx)`` means
    the columns are dependent.
    """
    r = H.shape[0]
    s = idx.shape[0]
    for k in range(start, s):
        if k >= r:
            return k
        v = basis[k]
        for t in range(r):
            v[t] = H[t, idx[k]]
        for b in range(k):
            coef = v[pivcol[b]]
            if coef != 0:
                w = basis[b]
                for t in range(r):
                    if w[t] != 0:
                        v[t] = add_t[v[t], neg_t[mul_t[coef, w[t]]]]
        lead = -1
        for t in range(r):
            if v[t] != 0:
                lead = t
                break
        if lead < 0:
            return k
        a = inv_t[v[lead]]
        for t in range(r):
            v[t] = mul_t[a, v[t]]
        pivcol[k] = lead
    return s


@njit(cache=True, nogil=True)
def _scan_dependent(H, s, lo, hi, first_only, add_t, mul_t, inv_t, neg_t):
    """Size-s column subsets with first index in [lo, hi) that are dependent.

    Subsets are visited in lexicographic order; the echelon basis of the
    unchanged prefix is reused between neighbours.  Returns a flat array of
    indices (s per hit).
    """
    n = H.shape[1]
    r = H.shape[0]
    out = []
    if s == 0 or lo + s > n or lo >= hi:
        return np.zeros(0, dtype=np.int64)
    c = np.empty(s, dtype=np.int64)
    for k in range(s):
        c[k] = lo + k
    basis = np.zeros((s, max(r, 1)), dtype=np.int64)
    pivcol = np.zeros(s, dtype=np.int64)
    valid = 0
    while c[0] < hi:
        valid = _reduce_prefix(H, c, valid, add_t, mul_t, inv_t, neg_t, basis, pivcol)
        if valid < s:
            for k in range(s):
                out.append(c[k])
            if first_only:
                break
        k = s - 1
        while k >= 0 and c[k] == n - s + k:
            k -= 1
        if k < 0:
            break
        c[k] += 1
        for j in range(k + 1, s):
            c[j] = c[j - 1] + 1
        if valid > k:
            valid = k
    res = np.empty(len(out), dtype=np.int64)
    for i in range(len(out)):
        res[i] = out[i]
    return res


def _stripes(n: int, s: int, jobs: int) -> list[tuple[int, int]]:
    """Partition first indices 0..n-s into contiguous stripes of similar work."""
    last = n - s + 1
    if last <= 0:
        return []
    weights = [comb(n - f - 1, s - 1) for f in range(last)]
    total = sum(weights)
    jobs = max(1, min(jobs, last))
    bounds, acc, lo = [], 0, 0
    for f, w in enumerate(weights):
        acc += w
        if len(bounds) < jobs - 1 and acc >= total * (len(bounds) + 1) / jobs:
            bounds.append((lo, f + 1))
            lo = f + 1
    bounds.append((lo, last))
    return [b for b in bounds if b[0] < b[1]]


def dependent_column_subsets(
    M: GFMatrix, s: int, *, first_only: bool = False, jobs: int = 1
) -> np.ndarray:
    """All size-s column subsets of M that are linearly dependent.

    Returns an array of shape (hits, s) in lexicographic order; with
    ``first_only`` at most the lexicographically first hit.  The result does
    not depend on ``jobs``.
    """
    if s < 1:
        raise ValueError("subset size must be positive")
    T = field_tables(M.field)
    H = np.ascontiguousarray(M.data)
    args = (T.add, T.mul, T.inv, T.neg)
    stripes = _stripes(M.cols, s, jobs)

    def run(stripe):
        return _scan_dependent(H, s, stripe[0], stripe[1], first_only, *args)

    if jobs > 1 and len(stripes) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(run, stripes))
    else:
        parts = []
        for stripe in stripes:
            parts.append(run(stripe))
            if first_only and parts[-1].size:
                break
    hits = np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)
    hits = hits.reshape(-1, s)
    if first_only:
        hits = hits[:1]
    return hits


def columns_dependent(M: GFMatrix, cols) -> bool:
    T = field_tables(M.field)
    idx = np.asarray(cols, dtype=np.int64)
    s = idx.shape[0]
    basis = np.zeros((max(s, 1), max(M.rows, 1)), dtype=np.int64)
    pivcol = np.zeros(max(s, 1), dtype=np.int64)
    H = np.ascontiguousarray(M.data)
    return _reduce_prefix(H, idx, 0, T.add, T.mul, T.inv, T.neg, basis, pivcol) < s


def check_budget(n: int, sizes, budget: int) -> int:
    """Number of subsets to test; raises BudgetExceeded above ``budget``."""
    estimate = sum(comb(n, s) for s in sizes)
    if estimate > budget:
        raise BudgetExceeded(
            f"search needs {estimate} rank tests, budget is {budget}", estimate
        )
    return estimate
