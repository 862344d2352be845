"""The tested modulus M = (2p)^(2^n) + 1 and arithmetic in Z/mZ."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadN, ModulusMismatch, NotInvertible, UnsupportedP

SUPPORTED_P = (3, 5, 7, 11, 13, 17, 19)


@dataclass(frozen=True)
class TestParams:
    p: int
    n: int
    r: int = field(init=False)
    M: int = field(init=False, repr=False)

    __test__ = False  # keep pytest from collecting this as a test class

    def __post_init__(self):
        object.__setattr__(self, "r", 1 << self.n)
        object.__setattr__(self, "M", (2 * self.p) ** self.r + 1)

    @property
    def digits(self) -> int:
        return _digit_count(self.M)


def _digit_count(x: int) -> int:
    # str() on huge ints is quadratic and capped by the interpreter's digit limit
    d = int(x.bit_length() * 0.30102999566398120) + 1
    if 10 ** (d - 1) > x:
        d -= 1
    return d


def build_params(p: int, n: int) -> TestParams:
    if p not in SUPPORTED_P:
        raise UnsupportedP(f"p must be one of {SUPPORTED_P}, got {p}")
    if n < 1:
        raise BadN(f"n must be >= 1, got {n}")
    return TestParams(p, n)


@dataclass(frozen=True)
class Residue:
    """Canonical residue ``value`` in [0, modulus). Negative inputs are reduced."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus <= 1:
            raise ValueError("modulus must exceed 1")
        object.__setattr__(self, "value", self.value % self.modulus)

    def __int__(self):
        return self.value

    def __add__(self, other):
        return mod_add(self, self._coerce(other))

    def __sub__(self, other):
        return mod_sub(self, self._coerce(other))

    def __mul__(self, other):
        return mod_mul(self, self._coerce(other))

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, e):
        return mod_pow(self, e)

    def _coerce(self, other):
        if isinstance(other, int):
            return Residue(other, self.modulus)
        return other


def _check(a: Residue, b: Residue) -> int:
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"moduli differ: {a.modulus} vs {b.modulus}")
    return a.modulus


def mod_add(a: Residue, b: Residue) -> Residue:
    m = _check(a, b)
    return Residue(a.value + b.value, m)


def mod_sub(a: Residue, b: Residue) -> Residue:
    m = _check(a, b)
    return Residue(a.value - b.value, m)


def mod_mul(a: Residue, b: Residue) -> Residue:
    m = _check(a, b)
    return Residue(a.value * b.value, m)


def mod_pow(a: Residue, e: int) -> Residue:
    """Left-to-right binary exponentiation, one squaring per exponent bit."""
    if e < 0:
        raise ValueError("negative exponent; use mod_inverse")
    m = a.modulus
    base = a.value
    result = 1 % m
    for bit in bin(e)[2:] if e else "":
        result = result * result % m
        if bit == "1":
            result = result * base % m
    return Residue(result, m)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, rem = divmod(a, b)
        a, b = b, rem
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def inverse_int(a: int, m: int) -> int:
    """Inverse of a modulo m as a plain int; raises NotInvertible with the gcd."""
    g, x, _ = ext_gcd(a % m, m)
    if g != 1:
        raise NotInvertible(a % m, m, g)
    return x % m


def mod_inverse(a: Residue) -> Residue:
    return Residue(inverse_int(a.value, a.modulus), a.modulus)
