"""Small-weight codewords of the dual Hermitian codes.

``exhaustive_census`` ranks every column subset and is complete.  The line and
conic searches only look at points of D on one line (resp. conic) and are
checked against it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .code import CodeSpec, is_codeword, parity_check_matrix
from .field import field_tables
from .funcspace import max_included_degree
from .geometry import SupportReport, all_plane_lines, classify, form_monomials, n_plane_lines
from .gflinalg import (
    BudgetExceeded,
    GFMatrix,
    check_budget,
    column_submatrix,
    dependent_column_subsets,
    normalize_first_nonzero,
    nullspace,
)

DEFAULT_BUDGET = 10**9
MAX_KERNEL_DIM = 4


@dataclass
class CensusEntry:
    support: list[int]
    weight: int
    representative: list[int]
    support_report: SupportReport | None = None

    def key(self) -> tuple:
        return (self.weight, self.support, self.representative)

    def to_json(self) -> dict:
        return {
            "representative": self.representative,
            "support": self.support,
            "support_report": None if self.support_report is None else self.support_report.to_json(),
            "weight": self.weight,
        }


@dataclass
class CensusReport:
    q: int
    rho: int
    w_min: int
    w_max: int
    mode: str
    m: int
    entries: list[CensusEntry]
    stats: dict = field(default_factory=dict)

    @property
    def counts(self) -> dict[int, dict[str, int]]:
        order = None
        out: dict[int, dict[str, int]] = {}
        for e in self.entries:
            out.setdefault(e.weight, {"classes": 0, "vectors": 0})["classes"] += 1
        order = self.q * self.q
        for w in out:
            out[w]["vectors"] = out[w]["classes"] * (order - 1)
        return dict(sorted(out.items()))

    def supports(self, w: int | None = None) -> set[tuple[int, ...]]:
        return {tuple(e.support) for e in self.entries if w is None or e.weight == w}

    def at_weight(self, w: int) -> list[CensusEntry]:
        return [e for e in self.entries if e.weight == w]

    def to_json(self) -> dict:
        return {
            "counts": {str(w): c for w, c in self.counts.items()},
            "entries": [e.to_json() for e in self.entries],
            "m": self.m,
            "mode": self.mode,
            "q": self.q,
            "rho": self.rho,
            "stats": self.stats,
            "w_max": self.w_max,
            "w_min": self.w_min,
        }

    def to_csv_rows(self) -> list[list]:
        rows = [["support", "weight", "collinear", "on_conic"]]
        for e in self.entries:
            rep = e.support_report
            rows.append(
                [
                    " ".join(str(i) for i in e.support),
                    e.weight,
                    "" if rep is None else int(rep.collinear),
                    "" if rep is None or rep.on_conic is None else int(rep.on_conic),
                ]
            )
        return rows


def full_support_classes(H: GFMatrix, cols) -> list[np.ndarray]:
    """Projective classes of kernel vectors of H[:, cols] with no zero entry.

    Each class is given by its representative whose first entry is 1, in
    increasing coefficient order over the nullspace basis.
    """
    sub = column_submatrix(H, cols)
    basis = nullspace(sub)
    k = len(basis)
    if k == 0:
        return []
    if k > MAX_KERNEL_DIM:
        raise BudgetExceeded(f"kernel of dimension {k} on support {list(cols)}", H.field.order**k)
    T = field_tables(H.field)
    Q = H.field.order
    B = np.array(basis, dtype=np.int64)
    out = []
    for lead in range(k):
        for tail in itertools.product(range(Q), repeat=k - lead - 1):
            lam = (0,) * lead + (1,) + tail
            v = np.zeros(len(cols), dtype=np.int64)
            for c, b in zip(lam, B):
                if c:
                    v = T.add[v, T.mul[c, b]]
            if np.all(v != 0):
                out.append(normalize_first_nonzero(H.field, v))
    out.sort(key=lambda v: tuple(v))
    return out


def _entries_for_support(
    spec: CodeSpec, H: GFMatrix, cols, m: int, report: bool, curve_pair: bool, pts
) -> list[CensusEntry]:
    cols = [int(c) for c in cols]
    out = []
    for v in full_support_classes(H, cols):
        rep = np.zeros(H.cols, dtype=np.int64)
        rep[cols] = v
        sr = None
        if report:
            sr = classify([pts[c] for c in cols], m, curve_pair=curve_pair)
        out.append(CensusEntry(cols, len(cols), [int(x) for x in rep], sr))
    return out


def _finish(entries: list[CensusEntry]) -> list[CensusEntry]:
    uniq = {}
    for e in entries:
        uniq.setdefault((e.weight, tuple(e.support), tuple(e.representative)), e)
    return [uniq[k] for k in sorted(uniq)]


def exhaustive_census(
    spec: CodeSpec,
    w_max: int,
    *,
    w_min: int = 1,
    m: int | None = None,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
    report: bool = True,
    curve_pair: bool = False,
) -> CensusReport:
    """Every codeword class of weight in [w_min, w_max], by ranking all supports."""
    if w_max < 1 or w_min < 1:
        raise ValueError("weights must be positive")
    H = parity_check_matrix(spec)
    w_max = min(w_max, spec.n)
    sizes = range(w_min, w_max + 1)
    tested = check_budget(spec.n, sizes, budget)
    if m is None:
        m = max_included_degree(spec.q, spec.rho)
    pts = spec.D.projective()
    entries: list[CensusEntry] = []
    dependent = 0
    for s in sizes:
        hits = dependent_column_subsets(H, s, jobs=jobs)
        dependent += len(hits)
        for cols in hits:
            entries.extend(_entries_for_support(spec, H, cols, m, report, curve_pair, pts))
    return CensusReport(
        spec.q, spec.rho, w_min, w_max, "exhaustive", m, _finish(entries),
        {"dependent_supports": dependent, "supports_tested": tested},
    )


def _points_on(spec: CodeSpec, coeffs, k: int) -> np.ndarray:
    """Indices of D on the degree-k form with the given coefficients."""
    T = field_tables(spec.field)
    X = np.array([(p.x.idx, p.y.idx, 1) for p in spec.D], dtype=np.int64)
    return np.flatnonzero(_evaluate_forms(T, X, np.asarray(coeffs)[:, None], k)[:, 0] == 0)


def _evaluate_forms(T, X: np.ndarray, C: np.ndarray, k: int) -> np.ndarray:
    """Values (n x N) of N degree-k forms (columns of C) at n points X."""
    monos = form_monomials(k)
    Q = T.add.shape[0]
    pw = np.ones((Q, k + 1), dtype=np.int64)
    for e in range(1, k + 1):
        pw[:, e] = T.mul[pw[:, e - 1], np.arange(Q)]
    vals = np.zeros((X.shape[0], C.shape[1]), dtype=np.int64)
    for row, exps in enumerate(monos):
        mono = np.ones(X.shape[0], dtype=np.int64)
        for var, e in enumerate(exps):
            mono = T.mul[mono, pw[X[:, var], e]]
        vals = T.add[vals, T.mul[mono[:, None], C[row][None, :]]]
    return vals


def _subset_entries(spec, H, members, w, m, report, curve_pair, pts, seen) -> list[CensusEntry]:
    out = []
    for sub in itertools.combinations([int(i) for i in members], w):
        if sub in seen:
            continue
        seen.add(sub)
        out.extend(_entries_for_support(spec, H, sub, m, report, curve_pair, pts))
    return out


def line_search(
    spec: CodeSpec, m: int, *, report: bool = True, budget: int = DEFAULT_BUDGET
) -> CensusReport:
    """Weight-(m+2) codewords supported on D intersected with a line."""
    H = parity_check_matrix(spec)
    pts = spec.D.projective()
    T = field_tables(spec.field)
    X = np.array([p.idx for p in pts], dtype=np.int64)
    lines = np.array(list(all_plane_lines(spec.field)), dtype=np.int64).T
    vals = _evaluate_forms(T, X, lines, 1)
    w = m + 2
    work = sum(comb(int(c), w) for c in (vals == 0).sum(axis=0))
    if work > budget:
        raise BudgetExceeded(f"line search needs {work} rank tests", work)
    seen: set = set()
    entries: list[CensusEntry] = []
    for j in range(lines.shape[1]):
        members = np.flatnonzero(vals[:, j] == 0)
        if len(members) >= w:
            entries.extend(_subset_entries(spec, H, members, w, m, report, False, pts, seen))
    return CensusReport(
        spec.q, spec.rho, w, w, "lines", m, _finish(entries),
        {"lines_enumerated": lines.shape[1], "expected_lines": n_plane_lines(spec.field),
         "supports_tested": len(seen)},
    )


def _all_conics(Q: int) -> np.ndarray:
    """Every nonzero ternary quadratic form up to scalars (6 x N)."""
    cols = []
    for lead in range(6):
        for tail in itertools.product(range(Q), repeat=5 - lead):
            cols.append((0,) * lead + (1,) + tail)
    return np.array(cols, dtype=np.int64).T


def conic_search(
    spec: CodeSpec,
    m: int,
    *,
    restricted: bool | None = None,
    report: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> CensusReport:
    """Weight-(2m+2) codewords supported on D intersected with a conic.

    Full mode walks every conic of the plane and is only allowed for q <= 3.
    Restricted mode takes the conics through 5-point subsets of D that fix a
    unique conic.
    """
    H = parity_check_matrix(spec)
    pts = spec.D.projective()
    T = field_tables(spec.field)
    Q = spec.field.order
    if restricted is None:
        restricted = spec.q > 3
    if not restricted and spec.q > 3:
        raise BudgetExceeded("full conic enumeration is refused for q > 3", (Q**6 - 1) // (Q - 1))
    X = np.array([p.idx for p in pts], dtype=np.int64)
    if restricted:
        check_budget(spec.n, [5], budget)
        from .geometry import vanishing_forms

        found = {}
        for five in itertools.combinations(range(spec.n), 5):
            forms = vanishing_forms([pts[i] for i in five], 2)
            if len(forms) == 1:
                f = tuple(int(v) for v in normalize_first_nonzero(spec.field, forms[0]))
                found[f] = None
        conics = np.array(sorted(found), dtype=np.int64).reshape(-1, 6).T
    else:
        conics = _all_conics(Q)
        if conics.shape[1] > budget:
            raise BudgetExceeded("too many conics", conics.shape[1])
    w = 2 * m + 2
    seen: set = set()
    entries: list[CensusEntry] = []
    chunk = 4096
    for start in range(0, conics.shape[1], chunk):
        C = conics[:, start:start + chunk]
        vals = _evaluate_forms(T, X, C, 2)
        counts = (vals == 0).sum(axis=0)
        for j in np.flatnonzero(counts >= w):
            members = np.flatnonzero(vals[:, j] == 0)
            entries.extend(_subset_entries(spec, H, members, w, m, report, False, pts, seen))
    out = CensusReport(
        spec.q, spec.rho, w, w, "conics-restricted" if restricted else "conics", m,
        _finish(entries), {"conics_enumerated": conics.shape[1], "supports_tested": len(seen)},
    )
    for e in out.entries:
        if not is_codeword(H, e.representative):
            raise AssertionError(f"conic search produced a non-codeword on {e.support}")
    return out
