"""Exact arithmetic in GF(p^e) for small prime powers.

Elements are stored as integer indices ``sum(coeffs[i] * p**i)`` where
``coeffs`` is the little-endian coefficient vector of the polynomial
representative modulo a fixed monic irreducible polynomial.  The moduli
used for the Hermitian base fields GF(q^2) are pinned in ``MODULI``:

    GF(4)  : t^2 + t + 1
    GF(9)  : t^2 + 1
    GF(16) : t^4 + t + 1
    GF(25) : t^2 + t + 1

Fields of order at most 256 get dense add/mul tables (numpy arrays) which the
linear algebra kernels index directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_ORDER = 1 << 16
TABLE_ORDER = 256

# (p, e) -> little-endian coefficients of the monic modulus.
MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (0, 1),
    (3, 1): (0, 1),
    (5, 1): (0, 1),
    (7, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (3, 2): (1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (5, 2): (1, 1, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
}


class FieldError(ValueError):
    """Raised on malformed field specs or mixing elements of different fields."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m`` over GF(p)."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            for i in range(dm + 1):
                a[k - dm + i] = (a[k - dm + i] - c * m[i]) % p
    return (a + [0] * dm)[:dm]


def _is_irreducible(m: tuple[int, ...], p: int) -> bool:
    e = len(m) - 1
    for deg in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            divisor = tuple(low) + (1,)
            if not any(_poly_mod(list(m), divisor, p)):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^e) presented as GF(p)[t] / (modulus)."""

    p: int
    e: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not _is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.e < 1 or len(self.modulus) != self.e + 1 or self.modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree e")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise FieldError("modulus coefficients must lie in [0, p)")
        if self.p**self.e > MAX_ORDER:
            raise FieldError(f"field order {self.p}^{self.e} exceeds {MAX_ORDER}")
        if not _is_irreducible(self.modulus, self.p):
            raise FieldError(f"modulus {self.modulus} is reducible over GF({self.p})")

    @property
    def order(self) -> int:
        return self.p**self.e

    @property
    def name(self) -> str:
        return f"GF({self.p}^{self.e})"

    def __repr__(self) -> str:
        return self.name

    # index <-> coefficient vector

    def coeffs(self, idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            idx, c = divmod(idx, self.p)
            out.append(c)
        return tuple(out)

    def index(self, coeffs) -> int:
        idx = 0
        for c in reversed(list(coeffs)):
            idx = idx * self.p + c % self.p
        return idx

    # scalar arithmetic on indices

    def add_idx(self, a: int, b: int) -> int:
        if self.order <= TABLE_ORDER:
            return int(field_tables(self).add[a, b])
        return self.index(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg_idx(self, a: int) -> int:
        return self.index(-c for c in self.coeffs(a))

    def mul_idx(self, a: int, b: int) -> int:
        if self.order <= TABLE_ORDER:
            return int(field_tables(self).mul[a, b])
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return self.index(_poly_mod(prod, self.modulus, self.p))

    def pow_idx(self, a: int, k: int) -> int:
        if k < 0:
            raise FieldError("negative exponent")
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul_idx(result, base)
            base = self.mul_idx(base, base)
            k >>= 1
        return result

    def inv_idx(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        if self.order <= TABLE_ORDER:
            return int(field_tables(self).inv[a])
        return self.pow_idx(a, self.order - 2)

    # element constructors

    def __call__(self, value) -> FieldElement:
        """Element from an index or a coefficient sequence."""
        if isinstance(value, (int, np.integer)):
            idx = int(value)
            if not 0 <= idx < self.order:
                raise FieldError(f"index {idx} out of range for {self.name}")
            return FieldElement(self, idx)
        return FieldElement(self, self.index(value))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The class of t."""
        return self((0, 1) if self.e > 1 else (0,))


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    idx: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.coeffs(self.idx)

    def _check(self, other) -> FieldElement:
        if isinstance(other, (int, np.integer)):
            return self.spec.one * int(other) if other else self.spec.zero
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise FieldError(f"cannot combine {self.spec.name} element with {other!r}")
        return other

    def __add__(self, other):
        return add(self, self._check(other))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg_idx(self.idx))

    def __sub__(self, other):
        return add(self, -self._check(other))

    def __rsub__(self, other):
        return add(self._check(other), -self)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            acc = self.spec.zero
            for _ in range(int(other) % self.spec.p):
                acc = acc + self
            return acc
        return mul(self, self._check(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return mul(self, inv(self._check(other)))

    def __pow__(self, k: int):
        return power(self, k)

    def __bool__(self):
        return self.idx != 0

    def __repr__(self) -> str:
        return f"{self.spec.name}[{self.idx}]"

    def to_json(self) -> dict:
        return {"field": self.spec.name, "idx": self.idx}


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    if a.spec != b.spec:
        raise FieldError(f"field mismatch: {a.spec.name} vs {b.spec.name}")
    return FieldElement(a.spec, a.spec.add_idx(a.idx, b.idx))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    if a.spec != b.spec:
        raise FieldError(f"field mismatch: {a.spec.name} vs {b.spec.name}")
    return FieldElement(a.spec, a.spec.mul_idx(a.idx, b.idx))


def inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, a.spec.inv_idx(a.idx))


def power(a: FieldElement, k: int) -> FieldElement:
    """Square-and-multiply; ``0**0 == 1``."""
    return FieldElement(a.spec, a.spec.pow_idx(a.idx, k))


def elements(spec: FieldSpec) -> list[FieldElement]:
    """All elements in lexicographic coefficient order (i.e. by index)."""
    return [FieldElement(spec, i) for i in range(spec.order)]


def element_from_json(obj: dict) -> FieldElement:
    spec = field_by_name(obj["field"])
    return spec(int(obj["idx"]))


@lru_cache(maxsize=None)
def gf(p: int, e: int = 1) -> FieldSpec:
    """The field GF(p^e) with its pinned modulus."""
    try:
        modulus = MODULI[(p, e)]
    except KeyError:
        raise FieldError(f"no pinned modulus for GF({p}^{e})") from None
    return FieldSpec(p, e, modulus)


def hermitian_field(q: int) -> FieldSpec:
    """GF(q^2) for a prime power q."""
    for p in range(2, q + 1):
        if _is_prime(p):
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r == 1 and e:
                return gf(p, 2 * e)
    raise FieldError(f"{q} is not a prime power")


def field_by_name(name: str) -> FieldSpec:
    inner = name.strip()[3:-1]
    p, _, e = inner.partition("^")
    return gf(int(p), int(e or 1))


@dataclass(frozen=True)
class FieldTables:
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray  # inv[0] is 0 and never read


@lru_cache(maxsize=None)
def field_tables(spec: FieldSpec) -> FieldTables:
    """Dense operation tables, built from the polynomial definitions."""
    if spec.order > TABLE_ORDER:
        raise FieldError(f"no tables for fields larger than {TABLE_ORDER}")
    q = spec.order
    coeff = np.array([spec.coeffs(i) for i in range(q)], dtype=np.int64)
    weights = spec.p ** np.arange(spec.e, dtype=np.int64)
    add_t = (((coeff[:, None, :] + coeff[None, :, :]) % spec.p) @ weights).astype(np.int64)
    neg_t = (((-coeff) % spec.p) @ weights).astype(np.int64)
    mul_t = np.empty((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(a, q):
            mul_t[a, b] = mul_t[b, a] = spec._mul_poly(a, b)
    inv_t = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        (b,) = np.nonzero(mul_t[a] == 1)[0]
        inv_t[a] = b
    for t in (add_t, mul_t, neg_t, inv_t):
        t.setflags(write=False)
    return FieldTables(add_t, mul_t, neg_t, inv_t)


@lru_cache(maxsize=None)
def power_table(spec: FieldSpec, max_exp: int) -> np.ndarray:
    """``table[a, k] = a**k`` for 0 <= k <= max_exp (with 0**0 = 1)."""
    T = field_tables(spec)
    out = np.empty((spec.order, max_exp + 1), dtype=np.int64)
    out[:, 0] = 1
    for k in range(1, max_exp + 1):
        out[:, k] = T.mul[out[:, k - 1], np.arange(spec.order)]
    out.setflags(write=False)
    return out
