"""Arithmetic in Z[zeta]/(M) with zeta a primitive 2p-th root of unity.

Elements are coefficient vectors over the power basis 1, zeta, ..., zeta^(p-2),
reduced modulo Phi_2p(x) = x^(p-1) - x^(p-2) + ... - x + 1.  Reduction uses
zeta^p = -1 for high powers, then folds the zeta^(p-1) term through Phi_2p.

An element with ``modulus=None`` carries exact integer coefficients; that mode
is only used for seed validation (norms), never inside a test run.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional

from .errors import (
    BadAutomorphismIndex,
    BasisMismatch,
    DegenerateElement,
    FactorFound,
    NonRationalNorm,
    NotInvertible,
    NotRational,
)
from .residue_ring import Residue, inverse_int


@dataclass(frozen=True)
class CycBasis:
    p: int

    @property
    def degree(self) -> int:
        return self.p - 1

    @property
    def order(self) -> int:
        return 2 * self.p

    @property
    def reduction_poly(self) -> tuple[int, ...]:
        """Coefficients of Phi_2p, lowest degree first."""
        return tuple((-1) ** k for k in range(self.p))

    def units(self) -> list[int]:
        """Representatives c of (Z/2pZ)*, i.e. the indices of the Galois group."""
        return [c for c in range(1, 2 * self.p) if gcd(c, 2 * self.p) == 1]


@lru_cache(maxsize=None)
def basis(p: int) -> CycBasis:
    return CycBasis(p)


@dataclass(frozen=True)
class CycElem:
    basis: CycBasis
    coeffs: tuple[int, ...]
    modulus: Optional[int] = None

    def __post_init__(self):
        if len(self.coeffs) != self.basis.degree:
            raise ValueError(f"expected {self.basis.degree} coefficients, got {len(self.coeffs)}")

    @property
    def residues(self) -> tuple[Residue, ...]:
        return tuple(Residue(c, self.modulus) for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def __add__(self, other):
        return cyc_add(self, other)

    def __sub__(self, other):
        return cyc_sub(self, other)

    def __neg__(self):
        return _finish(self.basis, [-c for c in self.coeffs], self.modulus)

    def __mul__(self, other):
        return cyc_mul(self, other)

    def __pow__(self, e):
        return cyc_pow(self, e)


def _finish(b: CycBasis, vals: list[int], modulus: Optional[int]) -> CycElem:
    if modulus is not None:
        vals = [v % modulus for v in vals]
    return CycElem(b, tuple(vals), modulus)


def _fold(p: int, raw: list[int]) -> list[int]:
    """Reduce a raw zeta-power coefficient list to the p-1 basis coordinates."""
    t = [0] * p
    two_p = 2 * p
    for k, c in enumerate(raw):
        if not c:
            continue
        k %= two_p
        if k >= p:
            t[k - p] -= c
        else:
            t[k] += c
    top = t.pop()
    if top:
        # zeta^(p-1) = -sum_{k<p-1} (-1)^k zeta^k
        for k in range(p - 1):
            t[k] += top if k % 2 else -top
    return t


def from_coeffs(b: CycBasis, raw: Iterable[int], modulus: Optional[int] = None) -> CycElem:
    """Element sum raw[k] * zeta^k for any number of raw powers."""
    return _finish(b, _fold(b.p, list(raw)), modulus)


def from_zeta_p_terms(
    b: CycBasis, terms: Iterable[tuple[int, int]], modulus: Optional[int] = None
) -> CycElem:
    """Encode sum coeff * zeta_p^k, using zeta_p = zeta^2."""
    raw = [0] * (2 * b.p)
    for coeff, k in terms:
        raw[(2 * k) % (2 * b.p)] += coeff
    return from_coeffs(b, raw, modulus)


def constant(b: CycBasis, c: int, modulus: Optional[int] = None) -> CycElem:
    return _finish(b, [c] + [0] * (b.degree - 1), modulus)


def one(b: CycBasis, modulus: Optional[int] = None) -> CycElem:
    return constant(b, 1, modulus)


def reduce_mod(a: CycElem, modulus: int) -> CycElem:
    """Image of an exact element in Z[zeta]/(modulus)."""
    return _finish(a.basis, list(a.coeffs), modulus)


def _check(a: CycElem, b: CycElem):
    if a.basis != b.basis:
        raise BasisMismatch(f"p={a.basis.p} vs p={b.basis.p}")
    if a.modulus != b.modulus:
        raise BasisMismatch(f"modulus mismatch: {a.modulus} vs {b.modulus}")


def cyc_add(a: CycElem, b: CycElem) -> CycElem:
    _check(a, b)
    return _finish(a.basis, [x + y for x, y in zip(a.coeffs, b.coeffs)], a.modulus)


def cyc_sub(a: CycElem, b: CycElem) -> CycElem:
    _check(a, b)
    return _finish(a.basis, [x - y for x, y in zip(a.coeffs, b.coeffs)], a.modulus)


def cyc_scale(a: CycElem, k: int) -> CycElem:
    return _finish(a.basis, [k * x for x in a.coeffs], a.modulus)


def _mul_raw(p: int, A: tuple[int, ...], B: tuple[int, ...]) -> list[int]:
    d = p - 1
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(A):
        if x:
            for j, y in enumerate(B):
                prod[i + j] += x * y
    return _fold_product(p, prod)


def _sqr_raw(p: int, A: tuple[int, ...]) -> list[int]:
    d = p - 1
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(A):
        if x:
            prod[2 * i] += x * x
            x2 = 2 * x
            for j in range(i + 1, d):
                y = A[j]
                if y:
                    prod[i + j] += x2 * y
    return _fold_product(p, prod)


def _fold_product(p: int, prod: list[int]) -> list[int]:
    # degrees reach 2p-4 < 2p, so a single zeta^p = -1 pass suffices
    for k in range(len(prod) - 1, p - 1, -1):
        prod[k - p] -= prod[k]
    t = prod[: p]
    t += [0] * (p - len(t))
    top = t.pop()
    if top:
        for k in range(p - 1):
            t[k] += top if k % 2 else -top
    return t


def cyc_mul(a: CycElem, b: CycElem) -> CycElem:
    _check(a, b)
    if a is b:
        return cyc_square(a)
    return _finish(a.basis, _mul_raw(a.basis.p, a.coeffs, b.coeffs), a.modulus)


def cyc_square(a: CycElem) -> CycElem:
    return _finish(a.basis, _sqr_raw(a.basis.p, a.coeffs), a.modulus)


def cyc_pow(a: CycElem, e: int) -> CycElem:
    """Square-and-multiply; e >= 0."""
    if e < 0:
        raise ValueError("negative exponent; invert first")
    if e == 0:
        return one(a.basis, a.modulus)
    result = a
    for bit in bin(e)[3:]:
        result = cyc_square(result)
        if bit == "1":
            result = cyc_mul(result, a)
    return result


def galois(a: CycElem, c: int) -> CycElem:
    """sigma_c: zeta -> zeta^c."""
    p = a.basis.p
    two_p = 2 * p
    if gcd(c, two_p) != 1:
        raise BadAutomorphismIndex(f"gcd({c}, {two_p}) != 1")
    c %= two_p
    if c == 1:
        return a
    raw = [0] * two_p
    for i, x in enumerate(a.coeffs):
        raw[(i * c) % two_p] += x
    return from_coeffs(a.basis, raw, a.modulus)


def conj(a: CycElem) -> CycElem:
    return galois(a, -1)


# --- inversion over (Z/M)[x] -------------------------------------------------


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _lead_inverse(c: int, m: int) -> int:
    try:
        return inverse_int(c, m)
    except NotInvertible as exc:
        raise FactorFound(exc.g, m) from None


def _poly_divmod(f: list[int], g: list[int], m: int) -> tuple[list[int], list[int]]:
    f = f[:]
    dg = len(g) - 1
    inv = _lead_inverse(g[-1], m)
    q = [0] * max(len(f) - dg, 1)
    for k in range(len(f) - 1 - dg, -1, -1):
        coef = f[k + dg] * inv % m
        if coef:
            q[k] = coef
            for i, gi in enumerate(g):
                f[k + i] = (f[k + i] - coef * gi) % m
    return _trim(q), _trim(f[:dg] if dg else [])


def _poly_mul(f: list[int], g: list[int], m: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] += x * y
    return _trim([v % m for v in out])


def _poly_sub(f: list[int], g: list[int], m: int) -> list[int]:
    n = max(len(f), len(g))
    f = f + [0] * (n - len(f))
    g = g + [0] * (n - len(g))
    return _trim([(x - y) % m for x, y in zip(f, g)])


def cyc_inverse(a: CycElem) -> CycElem:
    """Inverse in Z[zeta]/(M) by extended Euclid on (a, Phi_2p) over Z/M.

    Raises FactorFound when a leading coefficient is a zero divisor mod M.
    """
    m = a.modulus
    if m is None:
        raise ValueError("inversion needs a modulus")
    if a.is_zero():
        raise DegenerateElement("zero has no inverse")
    b = a.basis
    r0 = [c % m for c in b.reduction_poly]
    r1 = _trim(list(a.coeffs))
    s0: list[int] = []
    s1 = [1]
    while len(r1) > 1:
        q, rem = _poly_divmod(r0, r1, m)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, m), m)
    if not r1:
        # the last nonzero remainder r0 is a nonconstant common factor
        raise DegenerateElement("element shares a factor with Phi_2p modulo M")
    inv_c = _lead_inverse(r1[0], m)
    return from_coeffs(b, [x * inv_c for x in s1], m)


# --- group ring -----------------------------------------------------------------


@dataclass(frozen=True)
class GroupRingExponent:
    """Formal sum of k_c * sigma_c, stored as sorted (k_c, c) pairs with c in [1, 2p)."""

    p: int
    terms: tuple[tuple[int, int], ...]

    @classmethod
    def from_terms(cls, p: int, terms: Iterable[tuple[int, int]]) -> GroupRingExponent:
        merged: dict[int, int] = {}
        for k, c in terms:
            if gcd(c, 2 * p) != 1:
                raise BadAutomorphismIndex(f"gcd({c}, {2 * p}) != 1")
            c %= 2 * p
            merged[c] = merged.get(c, 0) + k
        return cls(p, tuple(sorted((k, c) for c, k in merged.items() if k)))

    def as_dict(self) -> dict[int, int]:
        return {c: k for k, c in self.terms}

    def __str__(self):
        parts = []
        for k, c in sorted(self.terms, key=lambda t: t[0]):
            s = c if c < self.p else c - 2 * self.p
            parts.append(str(k) if s == 1 else f"{k}*sigma_{s}")
        return " + ".join(parts)


def compute_gamma(p: int) -> GroupRingExponent:
    """sum_{i=1}^{(p-1)/2} (2i-1) * sigma_{(2i-1)^-1}, inverses taken in (Z/2pZ)*."""
    terms = []
    for i in range(1, (p - 1) // 2 + 1):
        k = 2 * i - 1
        terms.append((k, pow(k, -1, 2 * p)))
    return GroupRingExponent.from_terms(p, terms)


def apply_group_ring(a: CycElem, e: GroupRingExponent) -> CycElem:
    if e.p != a.basis.p:
        raise BasisMismatch(f"exponent for p={e.p} applied to p={a.basis.p}")
    result = one(a.basis, a.modulus)
    for k, c in e.terms:
        if k < 0:
            raise ValueError("negative group-ring coefficients are not supported")
        result = cyc_mul(result, cyc_pow(galois(a, c), k))
    return result


# --- exact helpers -------------------------------------------------------------------


def norm_exact(seed: CycElem) -> int:
    """Absolute norm: product of all Galois conjugates, in exact arithmetic."""
    if seed.modulus is not None:
        raise ValueError("norm_exact needs an exact-integer element")
    prod = one(seed.basis)
    for c in seed.basis.units():
        prod = cyc_mul(prod, galois(seed, c))
    if any(prod.coeffs[1:]):
        raise NonRationalNorm(f"norm has irrational part {prod.coeffs}")
    return prod.coeffs[0]


def rational_value(a: CycElem) -> Residue:
    for i, c in enumerate(a.coeffs[1:], start=1):
        if c:
            raise NotRational(i, c)
    return Residue(a.coeffs[0], a.modulus)
