"""The 2p-th power residue symbol (M / pi) for the tabulated seeds pi.

Each seed pi has prime norm q = 1 (mod 2p), so Z[zeta]/(pi) is the field F_q and
zeta reduces to a primitive 2p-th root of unity t there.  The symbol is the power
of zeta congruent to M^((q-1)/2p) modulo pi, found by a discrete log in <t>.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

from .cyclotomic import CycElem, GroupRingExponent, basis, from_zeta_p_terms
from .errors import NoEmbedding, SeedDividesM, SymbolIsPlusMinusOne, UnlistedResidue
from .residue_ring import TestParams


@dataclass(frozen=True)
class SeedRecord:
    p: int
    pi_terms: tuple[tuple[int, int], ...]  # (coefficient, power of zeta_p)
    tau_terms: tuple[tuple[int, int], ...]  # (k, c) for k * sigma_c, c signed as written
    q: int
    n_min: int

    @property
    def pi(self) -> CycElem:
        return from_zeta_p_terms(basis(self.p), self.pi_terms)

    @property
    def tau(self) -> GroupRingExponent:
        return GroupRingExponent.from_terms(self.p, self.tau_terms)


SEEDS: dict[int, SeedRecord] = {
    3: SeedRecord(3, ((2, 0), (3, 1)), ((1, 1),), 7, 1),
    5: SeedRecord(5, ((1, 0), (-1, 1), (-1, 3)), ((1, 1), (3, -3)), 11, 1),
    7: SeedRecord(7, ((1, 0), (-1, 1), (1, 4)), ((1, 1), (3, 5), (5, 3)), 29, 2),
    11: SeedRecord(
        11, ((1, 0), (1, 7), (1, 8)),
        ((1, 1), (3, -7), (5, 9), (7, -3), (9, 5)), 23, 1,
    ),
    13: SeedRecord(
        13, ((1, 0), (1, 2), (1, 5)),
        ((1, 1), (3, 9), (5, -5), (7, -11), (9, 3), (11, -7)), 53, 2,
    ),
    17: SeedRecord(
        17, ((1, 0), (1, 2), (1, 9)),
        ((1, 1), (3, -11), (5, 7), (7, 5), (9, -15), (11, -3), (13, -13), (15, -9)), 103, 1,
    ),
    19: SeedRecord(
        19, ((-1, 0), (-1, 2), (1, 15)),
        ((1, 1), (3, 13), (5, -15), (7, 11), (9, 17), (11, 7), (13, 3), (15, -5), (17, 9)),
        229, 2,
    ),
}


@dataclass(frozen=True)
class SymbolValue:
    """sign * zeta_p^l, with l reduced mod p."""

    sign: int
    l: int
    p: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "l", self.l % self.p)

    @classmethod
    def from_exponent(cls, i: int, p: int) -> SymbolValue:
        """Decode zeta_2p^i; odd i uses zeta_2p^p = -1."""
        i %= 2 * p
        if i % 2 == 0:
            return cls(1, i // 2, p)
        return cls(-1, (i + p) // 2, p)

    @property
    def exponent(self) -> int:
        """The i in [0, 2p) with zeta_2p^i equal to this value."""
        i = (2 * self.l) % (2 * self.p)
        return i if self.sign == 1 else (i + self.p) % (2 * self.p)

    def __str__(self):
        s = "-" if self.sign < 0 else ""
        return f"{s}zeta_{self.p}^{self.l}"


class Case(enum.Enum):
    I = "I"  # final S^(j) = a_j
    II = "II"  # final S^(j) = (-1)^j a_j


def case_of(v: SymbolValue) -> Case:
    if v.l == 0:
        raise SymbolIsPlusMinusOne(v.sign)
    return Case.I if v.sign == 1 else Case.II


@lru_cache(maxsize=None)
def embed_root(seed: SeedRecord) -> int:
    """The image t of zeta in F_q = Z[zeta]/(pi)."""
    p, q = seed.p, seed.q
    phi = basis(p).reduction_poly
    coeffs = seed.pi.coeffs
    for t in range(2, q):
        if _horner(phi, t, q) == 0 and _horner(coeffs, t, q) == 0:
            return t
    raise NoEmbedding(f"no root of Phi_{2 * p} mod {q} annihilates the seed for p={p}")


def _horner(coeffs, x: int, q: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % q
    return acc


def symbol_of_residue(seed: SeedRecord, m_mod_q: int) -> SymbolValue:
    """(m / pi)_{2p} for an integer m given by its residue mod q. No applicability check."""
    p, q = seed.p, seed.q
    m_mod_q %= q
    if m_mod_q == 0:
        raise SeedDividesM(q)
    v = pow(m_mod_q, (q - 1) // (2 * p), q)
    t = embed_root(seed)
    power = 1
    for i in range(2 * p):
        if power == v:
            return SymbolValue.from_exponent(i, p)
        power = power * t % q
    raise AssertionError(f"{v} is not a 2p-th root of unity mod {q}")


def compute_symbol(params: TestParams, seed: SeedRecord) -> SymbolValue:
    if seed.p != params.p:
        raise ValueError(f"seed for p={seed.p} used with p={params.p}")
    v = symbol_of_residue(seed, params.M % seed.q)
    if v.l == 0:
        raise SymbolIsPlusMinusOne(v.sign)
    return v


# Published residue lists: the classes of M mod q reached by the family, and the
# values M^((q-1)/2p) mod q paired in order with the symbol they represent.
_TABLE_DATA = {
    3: ((2,), {2: (1, 2)}),
    5: ((2,), {2: (-1, 1)}),
    7: ((8, -8, -5), {6: (-1, 3), -4: (1, 1)}),
    11: ((2,), {2: (1, 2)}),
    13: (
        (25, 16, -16, -6, 11, -24, -5, -10, 17, 14, -8, -3),
        dict(zip(
            (-11, -9, -17, 15, -7, 25, -6, 24, -16, 11, 9),
            ((1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10),
             (-1, 2), (-1, 3), (-1, 4)),
        )),
    ),
    17: (
        (-21, 15, 35, 24, -2, -9, 10, -30),
        dict(zip(
            (9, -24, 27, 22, -8, -30, -14),
            ((1, 2), (1, 7), (-1, 3), (-1, 4), (-1, 6), (-1, 10), (-1, 13)),
        )),
    ),
    19: (
        (-48, -44, 15, -4, 56, -55, -45, -61, 26, 49, -98, 38, 92, -69, 112, -35, -77, -32),
        dict(zip(
            (-4, 16, -64, -26, 42, -15, 60, -68, 43, 4, -42, 15, -60, -44, -53, -17),
            ((1, 1), (1, 2), (1, 3), (1, 6), (1, 8), (1, 10), (1, 11), (1, 16), (1, 17),
             (-1, 1), (-1, 8), (-1, 10), (-1, 11), (-1, 13), (-1, 14), (-1, 15)),
        )),
    ),
}


@dataclass(frozen=True)
class CaseTable:
    p: int
    q: int
    entries: dict[int, SymbolValue] = field(hash=False)


def _build_table(p: int) -> CaseTable:
    q = SEEDS[p].q
    e = (q - 1) // (2 * p)
    classes, powers = _TABLE_DATA[p]
    powers = {k % q: SymbolValue(s, l, p) for k, (s, l) in powers.items()}
    entries = {}
    for cls in classes:
        entries[cls % q] = powers[pow(cls, e, q)]
    return CaseTable(p, q, entries)


CASE_TABLES: dict[int, CaseTable] = {p: _build_table(p) for p in _TABLE_DATA}


def table_lookup(p: int, M: int) -> SymbolValue:
    table = CASE_TABLES[p]
    cls = M % table.q
    try:
        return table.entries[cls]
    except KeyError:
        raise UnlistedResidue(f"M = {cls} (mod {table.q}) is not tabulated for p={p}") from None
