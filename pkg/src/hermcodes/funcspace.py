"""Monomial bases for L(rho * P0) on the Hermitian curve and for plane forms.

On the curve ``x^(q+1) = y^q + y`` the functions with poles only at the point
at infinity are spanned by ``x^i y^j`` with ``j < q``; ``x`` has pole order
``q`` and ``y`` has pole order ``q+1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def pole_order(self, q: int) -> int:
        i, j = self.exponents
        return i * q + j * (q + 1)

    def __repr__(self) -> str:
        names = "xyzw"
        parts = [
            names[k] + (f"^{e}" if e > 1 else "")
            for k, e in enumerate(self.exponents)
            if e
        ]
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class MonomialBasis:
    monomials: tuple[Monomial, ...]
    kind: str  # "LG" or "FullDegree"
    params: tuple[int, int]  # (q, rho) or (r, m)

    def __post_init__(self):
        if len(set(self.monomials)) != len(self.monomials):
            raise ValueError("duplicate monomials in basis")

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    @property
    def nvars(self) -> int:
        return len(self.monomials[0].exponents) if self.monomials else 0

    def exponent_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(mono.exponents for mono in self.monomials)

    def to_json(self) -> list[dict]:
        if self.kind == "LG":
            q = self.params[0]
            return [
                {"i": mono.exponents[0], "j": mono.exponents[1], "pole": mono.pole_order(q)}
                for mono in self.monomials
            ]
        return [{"exponents": list(mono.exponents)} for mono in self.monomials]


def lg_basis(q: int, rho: int) -> MonomialBasis:
    """Basis of L(rho * P0), ordered by pole order (then j)."""
    if rho < 0:
        raise ValueError("rho must be nonnegative")
    pairs = [
        (i, j)
        for j in range(q)
        for i in range((rho - j * (q + 1)) // q + 1)
        if i * q + j * (q + 1) <= rho
    ]
    pairs.sort(key=lambda ij: (ij[0] * q + ij[1] * (q + 1), ij[1]))
    return MonomialBasis(tuple(Monomial(p) for p in pairs), "LG", (q, rho))


def full_degree_basis(r: int, m: int) -> MonomialBasis:
    """All monomials in r variables of total degree <= m, graded-lex order."""
    if r < 1 or m < 0:
        raise ValueError("need r >= 1 and m >= 0")
    monos = []
    for deg in range(m + 1):
        layer = [
            e for e in itertools.product(range(deg + 1), repeat=r) if sum(e) == deg
        ]
        layer.sort(reverse=True)
        monos.extend(Monomial(e) for e in layer)
    return MonomialBasis(tuple(monos), "FullDegree", (r, m))


def includes_full_degree(q: int, rho: int, k: int) -> bool:
    """Whether L(rho * P0) contains every bivariate polynomial of degree <= k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return k <= q - 1 and k * (q + 1) <= rho


def max_included_degree(q: int, rho: int) -> int:
    if rho < 0:
        raise ValueError("rho must be nonnegative")
    k = 0
    while includes_full_degree(q, rho, k + 1):
        k += 1
    return k


def lg_dimension(q: int, rho: int) -> int:
    return len(lg_basis(q, rho))


def genus(q: int) -> int:
    return q * (q - 1) // 2


def is_corner_space(q: int, rho: int) -> tuple[bool, int | None]:
    """Whether L(rho * P0) is exactly the degree <= m polynomials, with m."""
    exps = lg_basis(q, rho).exponent_set()
    top = max(sum(e) for e in exps)
    if exps == full_degree_basis(2, top).exponent_set():
        return True, top
    return False, None
