"""Predicates on finite point configurations in projective space.

Points carry homogeneous coordinates over a tabled finite field.  Plane
curve tests (conics, curve pairs) need r = 2; collinearity and the linkage
tests work in any P^r, evaluating affine monomials in the chart where the
last coordinate is nonzero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _poly
from .field import FieldElement, FieldSpec, field_tables, power_table
from .funcspace import full_degree_basis
from .gflinalg import GFMatrix, normalize_first_nonzero, nullspace, rank


class UnsupportedPoint(ValueError):
    """A point outside the affine chart z != 0."""


@dataclass(frozen=True)
class ProjectivePoint:
    """Homogeneous coordinates, normalized so the first nonzero one is 1."""

    coords: tuple[FieldElement, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        if not coords:
            raise ValueError("empty coordinate vector")
        spec = coords[0].spec
        if any(c.spec != spec for c in coords):
            raise ValueError("coordinates from different fields")
        raw = np.array([c.idx for c in coords], dtype=np.int64)
        if not raw.any():
            raise ValueError("all-zero coordinates do not define a point")
        norm = normalize_first_nonzero(spec, raw)
        object.__setattr__(self, "coords", tuple(FieldElement(spec, int(v)) for v in norm))

    @classmethod
    def from_indices(cls, field: FieldSpec, idx: Sequence[int]) -> ProjectivePoint:
        return cls(tuple(FieldElement(field, int(i)) for i in idx))

    @property
    def field(self) -> FieldSpec:
        return self.coords[0].spec

    @property
    def r(self) -> int:
        return len(self.coords) - 1

    @property
    def idx(self) -> tuple[int, ...]:
        return tuple(c.idx for c in self.coords)

    def affine(self) -> tuple[int, ...]:
        """Dehomogenized coordinates (indices) in the chart last != 0."""
        T = field_tables(self.field)
        last = self.coords[-1].idx
        if last == 0:
            raise UnsupportedPoint(f"{self} lies on the hyperplane at infinity")
        s = int(T.inv[last])
        return tuple(int(T.mul[s, c.idx]) for c in self.coords[:-1])

    def to_json(self) -> list[int]:
        return list(self.idx)

    def __repr__(self) -> str:
        return "(" + ":".join(str(i) for i in self.idx) + ")"


@dataclass
class SupportReport:
    size: int
    collinear: bool
    max_collinear_subset_size: int
    max_collinear_witness: list[int]
    on_conic: bool | None = None
    conic_witness: list[int] | None = None
    conic_degenerate: bool | None = None
    curve_pair_witness: tuple[list[int], list[int]] | None = None
    m: int | None = None
    linked: bool | None = None
    minimally_linked: bool | None = None
    kernel: list[int] | None = None

    def to_json(self) -> dict:
        return {
            "collinear": self.collinear,
            "conic_degenerate": self.conic_degenerate,
            "conic_witness": self.conic_witness,
            "curve_pair_witness": (
                None
                if self.curve_pair_witness is None
                else {"cubic": self.curve_pair_witness[0], "other": self.curve_pair_witness[1]}
            ),
            "kernel": self.kernel,
            "linked": self.linked,
            "m": self.m,
            "max_collinear_subset_size": self.max_collinear_subset_size,
            "max_collinear_witness": self.max_collinear_witness,
            "minimally_linked": self.minimally_linked,
            "on_conic": self.on_conic,
            "size": self.size,
        }


def _field_of(points: Sequence[ProjectivePoint]) -> FieldSpec:
    spec = points[0].field
    if any(p.field != spec or p.r != points[0].r for p in points):
        raise ValueError("points must share field and ambient dimension")
    return spec


def _coords(points: Sequence[ProjectivePoint]) -> np.ndarray:
    return np.array([p.idx for p in points], dtype=np.int64)


def _require_plane(points: Sequence[ProjectivePoint]) -> None:
    if points and points[0].r != 2:
        raise ValueError("plane-curve predicates need points in P^2")


# ---------------------------------------------------------------------------
# lines
# ---------------------------------------------------------------------------


def line_through(a: ProjectivePoint, b: ProjectivePoint) -> tuple[int, int, int]:
    """Coefficients (l0, l1, l2) of the line through two distinct points of P^2."""
    T = field_tables(a.field)
    x, y = a.idx, b.idx

    def minor(i, j):
        return int(T.add[T.mul[x[i], y[j]], T.neg[T.mul[x[j], y[i]]]])

    line = np.array([minor(1, 2), minor(2, 0), minor(0, 1)], dtype=np.int64)
    if not line.any():
        raise ValueError("points coincide")
    return tuple(int(v) for v in normalize_first_nonzero(a.field, line))


def on_line(line: Sequence[int], pt: ProjectivePoint) -> bool:
    T = field_tables(pt.field)
    acc = 0
    for l, c in zip(line, pt.idx):
        acc = T.add[acc, T.mul[l, c]]
    return acc == 0


def are_collinear(points: Sequence[ProjectivePoint]) -> bool:
    """Whether all points lie on one line.

    In the plane this goes through the cross product of two distinct points;
    in higher dimension it is the rank test on the coordinate matrix.
    """
    if not points:
        raise ValueError("need at least one point")
    spec = _field_of(points)
    distinct = list(dict.fromkeys(points))
    if len(distinct) <= 2:
        return True
    if points[0].r == 2:
        line = line_through(distinct[0], distinct[1])
        return all(on_line(line, p) for p in distinct[2:])
    return rank(GFMatrix(spec, _coords(distinct))) <= 2


def max_collinear_subset(points: Sequence[ProjectivePoint]) -> tuple[int, list[int]]:
    """Largest subset on a common line, found among lines through point pairs."""
    if len(points) < 2:
        return len(points), list(range(len(points)))
    _field_of(points)
    best: list[int] = []
    seen: set = set()
    for i, j in itertools.combinations(range(len(points)), 2):
        if points[i] == points[j]:
            continue
        if points[0].r == 2:
            key = line_through(points[i], points[j])
            if key in seen:
                continue
            seen.add(key)
            members = [k for k, p in enumerate(points) if on_line(key, p)]
        else:
            members = [
                k for k, p in enumerate(points) if are_collinear([points[i], points[j], p])
            ]
        if len(members) > len(best):
            best = members
    return len(best), best


# ---------------------------------------------------------------------------
# plane forms
# ---------------------------------------------------------------------------


def form_monomials(k: int) -> list[tuple[int, int, int]]:
    """Exponents (a, b, c) of x^a y^b z^c with a+b+c = k, lex descending."""
    return sorted(
        ((a, b, k - a - b) for a in range(k + 1) for b in range(k + 1 - a)), reverse=True
    )


def veronese_matrix(points: Sequence[ProjectivePoint], k: int) -> GFMatrix:
    """Rows: all degree-k monomials of each point's homogeneous coordinates."""
    spec = _field_of(points)
    T = field_tables(spec)
    pw = power_table(spec, k)
    monos = form_monomials(k)
    X = _coords(points)
    rows = np.ones((len(points), len(monos)), dtype=np.int64)
    for col, exps in enumerate(monos):
        for var, e in enumerate(exps):
            rows[:, col] = T.mul[rows[:, col], pw[X[:, var], e]]
    return GFMatrix(spec, rows)


def vanishing_forms(points: Sequence[ProjectivePoint], k: int) -> list[np.ndarray]:
    """Basis of the degree-k forms vanishing at every point (see form_monomials)."""
    _require_plane(points)
    if not points:
        raise ValueError("need at least one point")
    return nullspace(veronese_matrix(points, k))


def form_value(field: FieldSpec, coeffs: Sequence[int], k: int, pt: ProjectivePoint) -> int:
    """Value of a degree-k form at the given homogeneous coordinates."""
    return _dot(field, veronese_matrix([pt], k).data[0], coeffs)


def _dot(field: FieldSpec, u, v) -> int:
    T = field_tables(field)
    acc = 0
    for a, b in zip(u, v):
        acc = T.add[acc, T.mul[int(a), int(b)]]
    return int(acc)


def conic_is_degenerate(field: FieldSpec, coeffs: Sequence[int]) -> bool:
    """Characteristic-free degeneracy test via the half-discriminant.

    For a x^2 + b y^2 + c z^2 + d xy + e xz + f yz the conic is singular iff
    4abc + def - a f^2 - b e^2 - c d^2 vanishes.
    """
    T = field_tables(field)
    monos = form_monomials(2)
    get = dict(zip(monos, (int(v) for v in coeffs)))
    a, b, c = get[(2, 0, 0)], get[(0, 2, 0)], get[(0, 0, 2)]
    d, e, f = get[(1, 1, 0)], get[(1, 0, 1)], get[(0, 1, 1)]

    def m(*xs):
        out = 1
        for x in xs:
            out = int(T.mul[out, x])
        return out

    four = 0
    for _ in range(4):
        four = int(T.add[four, 1])
    terms = [m(four, a, b, c), m(d, e, f)]
    neg_terms = [m(a, f, f), m(b, e, e), m(c, d, d)]
    acc = 0
    for t in terms:
        acc = int(T.add[acc, t])
    for t in neg_terms:
        acc = int(T.add[acc, T.neg[t]])
    return acc == 0


def on_common_conic(points: Sequence[ProjectivePoint]) -> bool:
    return bool(vanishing_forms(points, 2))


def _as_poly(coeffs, k: int) -> dict:
    return {e: int(c) for e, c in zip(form_monomials(k), coeffs) if c}


def curve_pair_witness(
    points: Sequence[ProjectivePoint], m: int
) -> tuple[list[int], list[int]] | None:
    """A cubic and a degree-m form through all points with no common factor.

    Only pairs of basis vectors of the two vanishing spaces are tried, in
    basis order, so ``None`` means no witness was found among them.
    """
    _require_plane(points)
    if m < 1:
        raise ValueError("m must be positive")
    spec = _field_of(points)
    cubics = vanishing_forms(points, 3)
    others = vanishing_forms(points, m)
    ring = _poly.PolyRing(spec)
    for f in cubics:
        for g in others:
            if _poly.coprime(ring, _as_poly(f, 3), _as_poly(g, m)):
                return [int(v) for v in f], [int(v) for v in g]
    return None


def forms_coprime(field: FieldSpec, f, df: int, g, dg: int) -> bool:
    return _poly.coprime(_poly.PolyRing(field), _as_poly(f, df), _as_poly(g, dg))


# ---------------------------------------------------------------------------
# linked configurations
# ---------------------------------------------------------------------------


def evaluation_matrix(points: Sequence[ProjectivePoint], m: int) -> GFMatrix:
    """Columns: evaluation of all affine monomials of degree <= m at each point."""
    spec = _field_of(points)
    T = field_tables(spec)
    basis = full_degree_basis(points[0].r, m)
    pw = power_table(spec, m)
    A = np.array([p.affine() for p in points], dtype=np.int64).reshape(len(points), -1)
    out = np.ones((len(basis), len(points)), dtype=np.int64)
    for row, mono in enumerate(basis):
        for var, e in enumerate(mono.exponents):
            if e:
                out[row] = T.mul[out[row], pw[A[:, var], e]]
    return GFMatrix(spec, out)


def is_m_linked(
    points: Sequence[ProjectivePoint], m: int
) -> tuple[bool, np.ndarray | None]:
    """Whether the degree-<=m evaluation functionals at the points are dependent.

    When the dependency is unique up to scalar, it is returned normalized to
    first nonzero entry 1.
    """
    if len(set(points)) != len(points):
        raise ValueError("points must be pairwise distinct")
    E = evaluation_matrix(points, m)
    rk = rank(E)
    s = len(points)
    if rk == s:
        return False, None
    kernel = None
    if rk == s - 1:
        (v,) = nullspace(E)
        kernel = normalize_first_nonzero(E.field, v)
    return True, kernel


def is_minimally_m_linked(points: Sequence[ProjectivePoint], m: int) -> bool:
    """Linked, with no proper linked subset.

    Decided twice: by the support of the (unique) dependency and by ranking
    every subset of size s-1.  The two must agree.
    """
    linked, kernel = is_m_linked(points, m)
    if not linked or kernel is None:
        return False
    by_kernel = bool(np.all(kernel != 0))
    s = len(points)
    E = evaluation_matrix(points, m)
    by_subsets = all(
        rank(GFMatrix(E.field, E.data[:, [j for j in range(s) if j != drop]])) == s - 1
        for drop in range(s)
    )
    if by_kernel != by_subsets:
        raise AssertionError("kernel-support and subset-rank tests disagree")
    return by_kernel


@dataclass
class HyperplaneSplit:
    line: tuple[int, int, int]
    inside: list[int]
    outside: list[int]
    outside_linked: bool
    outside_kernel: list[int] | None


def hyperplane_split(points: Sequence[ProjectivePoint], m: int) -> HyperplaneSplit | None:
    """First line through two points that misses at least one other point.

    The points off the line are then tested for (m-1)-linkage.
    """
    _require_plane(points)
    if m < 1:
        raise ValueError("m must be positive")
    s = len(points)
    if s < 3 or are_collinear(points):
        return None
    for i, j in itertools.combinations(range(s), 2):
        line = line_through(points[i], points[j])
        inside = [k for k, p in enumerate(points) if on_line(line, p)]
        if 2 <= len(inside) <= s - 1:
            outside = [k for k in range(s) if k not in inside]
            linked, kernel = is_m_linked([points[k] for k in outside], m - 1)
            return HyperplaneSplit(
                line,
                inside,
                outside,
                linked,
                None if kernel is None else [int(v) for v in kernel],
            )
    return None


def subsets_on_conic(points: Sequence[ProjectivePoint], size: int) -> list[int] | None:
    """First subset of the given size lying on a common conic, if any."""
    if size > len(points):
        return None
    if size <= 5:
        return list(range(size))
    for sub in itertools.combinations(range(len(points)), size):
        if on_common_conic([points[k] for k in sub]):
            return list(sub)
    return None


def classify(
    points: Sequence[ProjectivePoint],
    m: int | None = None,
    *,
    conic: bool = True,
    curve_pair: bool = False,
) -> SupportReport:
    """Recompute every predicate for one point configuration."""
    s = len(points)
    size, witness = max_collinear_subset(points)
    report = SupportReport(
        size=s,
        collinear=are_collinear(points),
        max_collinear_subset_size=size,
        max_collinear_witness=witness,
    )
    plane = points[0].r == 2
    if plane and conic:
        forms = vanishing_forms(points, 2)
        report.on_conic = bool(forms)
        if forms:
            report.conic_witness = [int(v) for v in forms[0]]
            report.conic_degenerate = conic_is_degenerate(points[0].field, forms[0])
    if m is not None:
        report.m = m
        linked, kernel = is_m_linked(points, m)
        report.linked = linked
        report.kernel = None if kernel is None else [int(v) for v in kernel]
        report.minimally_linked = is_minimally_m_linked(points, m) if linked else False
        if plane and curve_pair and m >= 1:
            report.curve_pair_witness = curve_pair_witness(points, m)
    return report


def n_plane_lines(field: FieldSpec) -> int:
    Q = field.order
    return Q * Q + Q + 1


def all_plane_lines(field: FieldSpec):
    """Every line of P^2 as normalized coefficients, in index order."""
    Q = field.order
    yield (0, 0, 1)
    for b in range(Q):
        yield (0, 1, b)
    for b in range(Q):
        for c in range(Q):
            yield (1, b, c)
