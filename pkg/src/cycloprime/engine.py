"""Primality test for M = (2p)^(2^n) + 1 via cyclotomic Lucas-type sequences.

The general path works in Z[zeta_2p]/(M): alpha = (pi / conj(pi))^gamma is raised to
the power 2p exactly r-1 times, and the elementary symmetric functions of the real
conjugates alpha_i = sigma_{2i-1}(beta + conj(beta)) are compared against the
coefficients a_j of F(x).  For p = 3 and p = 5 the same sequences are advanced by
integer recurrences in Z/MZ instead.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from . import bigint
from . import cyclotomic as cyc
from .chebyshev import acceptance_constants
from .cyclotomic import CycElem
from .errors import FactorFound, SeedDividesM, SymbolIsPlusMinusOne
from .residue_ring import TestParams, inverse_int
from .symbol import SEEDS, Case, SeedRecord, SymbolValue, case_of, compute_symbol


class Outcome(enum.Enum):
    PRIME = "prime"
    COMPOSITE = "composite"
    INAPPLICABLE = "inapplicable"


class Mode(enum.Enum):
    GENERAL = "general"
    RECURRENCE_P3 = "recurrence-p3"
    RECURRENCE_P5 = "recurrence-p5"


@dataclass(frozen=True)
class FactorWitness:
    factor: int
    source: str  # "precondition", "seed-norm" or "inversion"


@dataclass(frozen=True)
class CongruenceWitness:
    j: int
    observed: int
    expected: int


Witness = Union[FactorWitness, CongruenceWitness, str]


@dataclass
class Verdict:
    outcome: Outcome
    mode: Mode
    params: TestParams
    witness: Optional[Witness] = None
    symbol: Optional[SymbolValue] = None
    s_values: Optional[tuple[int, ...]] = None
    elapsed: float = 0.0
    note: str = ""
    trace: Optional[list[tuple[int, ...]]] = field(default=None, repr=False)

    @property
    def is_prime(self) -> bool:
        return self.outcome is Outcome.PRIME

    @property
    def iterations(self) -> int:
        return self.params.r - 1


# --- precondition ---------------------------------------------------------------


def _primitive_root_mod_p(p: int) -> int:
    factors = [f for f in range(2, p) if (p - 1) % f == 0 and all(f % d for d in range(2, f))]
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise AssertionError(f"no primitive root mod {p}")


def _teichmuller_lift(a: int, p: int, r: int) -> int:
    """The unique x = a (mod p) with x^(p-1) = 1 (mod p^r), by Newton iteration.

    Same value as g^(p^(r-1)) for a primitive root g mod p^2 with g = a (mod p), but
    with O(log r) steps instead of an exponent of r log p bits.
    """
    x, k = a % p, 1
    while k < r:
        k = min(2 * k, r)
        mod = p**k
        f = pow(x, p - 1, mod) - 1
        df = (p - 1) * pow(x, p - 2, mod)
        x = (x - f * pow(df, -1, mod)) % mod
    return x


def precondition_solutions(p: int, r: int) -> list[int]:
    """All x with x^(p-1) = 1 (mod p^r) and 1 < x < p^r, in increasing order."""
    mod = p**r
    h = _teichmuller_lift(_primitive_root_mod_p(p), p, r)  # generates the order-(p-1) subgroup
    out = []
    x = 1
    for _ in range(p - 2):
        x = x * h % mod
        out.append(x)
    return sorted(out)


def precondition_check(params: TestParams) -> Optional[int]:
    """Return a solution x dividing M (a proper factor), or None if the hypothesis holds."""
    for x in precondition_solutions(params.p, params.r):
        if params.M % x == 0:
            return x
    return None


# --- sequences -------------------------------------------------------------------


def real_conjugates(beta: CycElem) -> list[CycElem]:
    """alpha_i = sigma_{2i-1}(beta + conj(beta)) for i = 1..(p-1)/2."""
    trace = beta + cyc.conj(beta)
    h = (beta.basis.p - 1) // 2
    return [cyc.galois(trace, 2 * i - 1) for i in range(1, h + 1)]


def elementary_symmetric(values: list[CycElem]) -> tuple[int, ...]:
    """f^(1..h)(values) as residues mod M, via the coefficients of prod (X - v).

    Every coefficient must be rational; NotRational propagates as a hard error.
    """
    b, m = values[0].basis, values[0].modulus
    poly = [cyc.one(b, m)]  # lowest degree first
    for v in values:
        nxt = [cyc.cyc_scale(cyc.cyc_mul(v, poly[0]), -1)]
        for k in range(1, len(poly)):
            nxt.append(poly[k - 1] - cyc.cyc_mul(v, poly[k]))
        nxt.append(poly[-1])
        poly = nxt
    h = len(values)
    out = []
    for j in range(1, h + 1):
        c = cyc.rational_value(poly[h - j]).value
        out.append(c if j % 2 == 0 else (-c) % m)
    return tuple(out)


def s_vector(beta: CycElem) -> tuple[int, ...]:
    return elementary_symmetric(real_conjugates(beta))


def expected_vector(p: int, case: Case, M: int) -> tuple[int, ...]:
    a = acceptance_constants(p)
    if case is Case.I:
        return tuple(x % M for x in a)
    return tuple(((-1) ** j * x) % M for j, x in enumerate(a, start=1))


def _judge(verdict: Verdict, s: tuple[int, ...], case: Case) -> Verdict:
    p, M = verdict.params.p, verdict.params.M
    s = tuple(int(x) for x in s)
    verdict.s_values = s
    for j, (obs, exp) in enumerate(zip(s, expected_vector(p, case, M)), start=1):
        if obs != exp:
            verdict.outcome = Outcome.COMPOSITE
            verdict.witness = CongruenceWitness(j, obs, exp)
            return verdict
    verdict.outcome = Outcome.PRIME
    return verdict


class _Stop(Exception):
    def __init__(self, verdict: Verdict):
        self.verdict = verdict


def _prologue(params: TestParams, seed: SeedRecord, mode: Mode) -> tuple[Verdict, Case]:
    """Precondition, then symbol and case; raises _Stop carrying an early verdict."""
    verdict = Verdict(Outcome.COMPOSITE, mode, params)
    x = precondition_check(params)
    if x is not None:
        verdict.witness = FactorWitness(x, "precondition")
        raise _Stop(verdict)
    try:
        sym = compute_symbol(params, seed)
    except SeedDividesM as exc:
        verdict.witness = FactorWitness(exc.q, "seed-norm")
        raise _Stop(verdict) from None
    except SymbolIsPlusMinusOne as exc:
        verdict.outcome = Outcome.INAPPLICABLE
        verdict.witness = f"power residue symbol is {exc.sign:+d}"
        raise _Stop(verdict) from None
    verdict.symbol = sym
    if params.n < seed.n_min:
        verdict.note = f"n < {seed.n_min}: outside the tabulated residue classes; symbol computed"
    return verdict, case_of(sym)


def initial_alpha(params: TestParams, seed: SeedRecord) -> CycElem:
    """alpha = (pi / conj(pi))^gamma in Z[zeta]/(M); may raise FactorFound."""
    pi = cyc.reduce_mod(seed.pi, bigint.big(params.M))
    ratio = pi * cyc.cyc_inverse(cyc.conj(pi))
    return cyc.apply_group_ring(ratio, cyc.compute_gamma(params.p))


def run_general(
    params: TestParams,
    seed: Optional[SeedRecord] = None,
    *,
    verbose: bool = False,
    observer: Optional[Callable[[int, CycElem], None]] = None,
) -> Verdict:
    """Full test in the cyclotomic ring.  ``observer(k, beta)`` sees alpha^((2p)^k)."""
    start = time.perf_counter()
    seed = seed or SEEDS[params.p]
    if seed.p != params.p:
        raise ValueError(f"seed for p={seed.p} used with p={params.p}")
    try:
        verdict, case = _prologue(params, seed, Mode.GENERAL)
        try:
            beta = initial_alpha(params, seed)
        except FactorFound as exc:
            verdict.witness = FactorWitness(exc.factor, "inversion")
            raise _Stop(verdict) from None
    except _Stop as stop:
        stop.verdict.elapsed = time.perf_counter() - start
        return stop.verdict

    two_p = 2 * params.p
    trace = [] if verbose else None
    for k in range(params.r - 1):
        if observer:
            observer(k, beta)
        if trace is not None:
            trace.append(tuple(map(int, s_vector(beta))))
        beta = cyc.cyc_pow(beta, two_p)
    if observer:
        observer(params.r - 1, beta)
    s = s_vector(beta)
    if trace is not None:
        trace.append(tuple(map(int, s)))
    verdict.trace = trace
    _judge(verdict, s, case)
    verdict.elapsed = time.perf_counter() - start
    return verdict


# --- p = 3 ------------------------------------------------------------------------

# alpha + conj(alpha) for pi = 2 + 3 zeta_3: alpha = pi^2 / 7 and Re(pi^2) = -13/2
P3_SEED_NUMERATOR = -13
P3_SEED_DENOMINATOR = 7


def run_recurrence_p3(params: TestParams, *, verbose: bool = False) -> Verdict:
    """S_0 = -13/7, S_{k+1} = G_6(S_k); prime iff S_{r-1} = -1 (mod M)."""
    if params.p != 3:
        raise ValueError("p=3 recurrence needs p=3")
    start = time.perf_counter()
    M = bigint.big(params.M)
    verdict = Verdict(Outcome.COMPOSITE, Mode.RECURRENCE_P3, params)
    verdict.symbol = compute_symbol(params, SEEDS[3])
    s = P3_SEED_NUMERATOR * inverse_int(P3_SEED_DENOMINATOR, M) % M
    trace = [] if verbose else None
    for _ in range(params.r - 1):
        if trace is not None:
            trace.append((int(s),))
        s2 = s * s % M
        s = (((s2 - 6) * s2 + 9) % M * s2 - 2) % M
    if trace is not None:
        trace.append((int(s),))
    verdict.trace = trace
    _judge(verdict, (s,), case_of(verdict.symbol))
    verdict.elapsed = time.perf_counter() - start
    return verdict


# --- p = 5 ------------------------------------------------------------------------

# S_{k+1}^(1) and S_{k+1}^(2) as polynomials in (S_k^(1), S_k^(2)): {(i, j): c} means
# c * (S^(1))^i * (S^(2))^j.
P5_NEXT_S1 = {
    (10, 0): 1, (8, 1): -10, (6, 2): 35, (4, 3): -50, (2, 4): 25,
    (8, 0): -10, (6, 1): 80, (4, 2): -200, (2, 3): 160, (0, 4): -20,
    (6, 0): 35, (4, 1): -210, (2, 2): 315, (0, 3): -70,
    (4, 0): -50, (2, 1): 200, (0, 2): -100, (0, 5): -2,
    (2, 0): 25, (0, 1): -50, (0, 0): -4,
}
P5_NEXT_S2 = {
    (0, 10): 1, (0, 9): 20, (2, 8): -10, (0, 8): 170, (2, 7): -140,
    (0, 7): 800, (4, 6): 35, (2, 6): -800, (0, 6): 2275,
    (4, 5): 300, (2, 5): -2400, (0, 5): 4004, (6, 4): -50,
    (4, 4): 1000, (2, 4): -4050, (0, 4): 4290, (6, 3): -200,
    (4, 3): 1600, (2, 3): -3820, (0, 3): 2640, (8, 2): 25,
    (6, 2): -320, (4, 2): 1275, (2, 2): -1880, (0, 2): 825,
    (8, 1): 20, (6, 1): -160, (4, 1): 420, (2, 1): -400, (10, 0): -2,
    (8, 0): 20, (6, 0): -70, (4, 0): 100, (2, 0): -50, (0, 1): 100, (0, 0): 4,
}


def _by_y_power(coeffs: dict[tuple[int, int], int]) -> list[dict[int, int]]:
    """Group terms by the power of S^(2); keys become half the (even) power of S^(1)."""
    top = max(j for _, j in coeffs)
    rows: list[dict[int, int]] = [{} for _ in range(top + 1)]
    for (i, j), c in coeffs.items():
        if i % 2:
            raise ValueError("odd power of S^(1) in a p=5 recurrence")
        rows[j][i // 2] = c
    return rows


_P5_ROWS = (_by_y_power(P5_NEXT_S1), _by_y_power(P5_NEXT_S2))


def _eval_rows(rows: list[dict[int, int]], up: list[int], y: int, M: int) -> int:
    # Horner in y; each row is a small-integer combination of powers of u = x^2
    acc = 0
    for row in reversed(rows):
        inner = sum(c * up[i] for i, c in row.items())
        acc = (acc * y + inner) % M
    return acc


def p5_step(s1: int, s2: int, M: int) -> tuple[int, int]:
    u = s1 * s1 % M
    up = [1, u]
    for _ in range(4):
        up.append(up[-1] * u % M)
    return _eval_rows(_P5_ROWS[0], up, s2, M), _eval_rows(_P5_ROWS[1], up, s2, M)


def run_recurrence_p5(params: TestParams, *, verbose: bool = False) -> Verdict:
    """Seeds S_0 from one ring evaluation, then the two integer recurrences."""
    if params.p != 5:
        raise ValueError("p=5 recurrence needs p=5")
    start = time.perf_counter()
    seed = SEEDS[5]
    M = bigint.big(params.M)
    try:
        verdict, case = _prologue(params, seed, Mode.RECURRENCE_P5)
        try:
            alpha = initial_alpha(params, seed)
        except FactorFound as exc:
            verdict.witness = FactorWitness(exc.factor, "inversion")
            raise _Stop(verdict) from None
    except _Stop as stop:
        stop.verdict.elapsed = time.perf_counter() - start
        return stop.verdict

    s1, s2 = s_vector(alpha)
    trace = [] if verbose else None
    for _ in range(params.r - 1):
        if trace is not None:
            trace.append((int(s1), int(s2)))
        s1, s2 = p5_step(s1, s2, M)
    if trace is not None:
        trace.append((int(s1), int(s2)))
    verdict.trace = trace
    _judge(verdict, (s1, s2), case)
    verdict.elapsed = time.perf_counter() - start
    return verdict


# --- dispatch and cross-checks -----------------------------------------------------


def run_test(params: TestParams, mode: str = "auto", *, verbose: bool = False) -> Verdict:
    """mode: "auto" (recurrence for p in {3, 5}), "general" or "recurrence"."""
    if mode not in ("auto", "general", "recurrence"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "general" or (mode == "auto" and params.p not in (3, 5)):
        return run_general(params, verbose=verbose)
    if params.p == 3:
        return run_recurrence_p3(params, verbose=verbose)
    if params.p == 5:
        return run_recurrence_p5(params, verbose=verbose)
    raise ValueError(f"no recurrence path for p={params.p}")


def baseline_correction_check(general: Verdict, recurrence: Verdict) -> bool:
    """True iff both runs reached the same final S-vector (and the same trace, if recorded)."""
    if general.params != recurrence.params:
        return False
    if general.s_values != recurrence.s_values:
        return False
    if general.trace is not None and recurrence.trace is not None:
        return general.trace == recurrence.trace
    return True

