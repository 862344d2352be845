"""The polynomials G_n, their partial sums F and the acceptance constants a_j.

G_n is defined by G_0 = 1, G_1 = x and, for n >= 2,

    G_n = G_{(n-1)/2} * G_{(n+1)/2} - x   (n odd)
    G_n = G_{n/2}^2 - 2                   (n even)

so that G_n(x + 1/x) = x^n + x^-n for n > 0.  F(x) = G_0 + ... + G_{(p-1)/2}
is the minimal polynomial of zeta_p + zeta_p^-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .residue_ring import SUPPORTED_P, Residue
from .errors import UnsupportedP


@dataclass(frozen=True)
class IntPoly:
    """Exact integer polynomial, lowest degree first, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + IntPoly(tuple(-c for c in other.coeffs))

    def __mul__(self, other: IntPoly) -> IntPoly:
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPoly(tuple(out))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = mono if (mag == 1 and k) else (f"{mag}{mono}")
            terms.append(("-" if c < 0 else "+") + body)
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s[0] == "+" else s


X = IntPoly((0, 1))


def constant(c: int) -> IntPoly:
    return IntPoly((c,))


@lru_cache(maxsize=None)
def g_poly(n: int) -> IntPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return constant(1)
    if n == 1:
        return X
    if n % 2:
        return g_poly((n - 1) // 2) * g_poly((n + 1) // 2) - X
    half = g_poly(n // 2)
    return half * half - constant(2)


@lru_cache(maxsize=None)
def f_poly(p: int) -> IntPoly:
    if p not in SUPPORTED_P:
        raise UnsupportedP(f"unsupported p={p}")
    total = IntPoly(())
    for k in range((p - 1) // 2 + 1):
        total = total + g_poly(k)
    return total


def acceptance_constants(p: int) -> tuple[int, ...]:
    """a_1..a_h (h = (p-1)/2) where F(x) = sum_j (-1)^j a_j x^(h-j)."""
    f = f_poly(p)
    h = f.degree
    return tuple((-1) ** j * f.coeffs[h - j] for j in range(1, h + 1))


def eval_poly(f: IntPoly, x: Residue) -> Residue:
    m = x.modulus
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * x.value + c) % m
    return Residue(acc, m)
