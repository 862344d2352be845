"""Classical reference tests and an independent probable-prime oracle.

The oracle is only ever used to cross-check the cyclotomic engine; it plays no
part in the engine's own verdicts.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .engine import Outcome

# Jaeschke / Sorenson-Webster: the first 13 prime bases decide every N below this bound.
DETERMINISTIC_LIMIT = 3317044064679887385961981
DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class OracleConfig:
    rounds: int = 20
    seed: int = 0
    deterministic_bases: tuple[int, ...] = DETERMINISTIC_BASES
    deterministic_limit: int = DETERMINISTIC_LIMIT

    def __post_init__(self):
        if self.rounds < 1:
            raise ValueError("rounds must be positive")


@dataclass(frozen=True)
class BaselineResult:
    kind: str
    index: int
    N: int
    outcome: Outcome
    residue: int  # final value of the test sequence, reduced mod N
    elapsed: float

    @property
    def is_prime(self) -> bool:
        return self.outcome is Outcome.PRIME


def lucas_lehmer(p: int) -> BaselineResult:
    """2^p - 1 is prime iff u_{p-2} = 0, where u_0 = 4 and u_k = u_{k-1}^2 - 2."""
    if p < 3 or p % 2 == 0:
        raise ValueError("Lucas-Lehmer needs an odd prime exponent")
    start = time.perf_counter()
    N = (1 << p) - 1
    u = 4
    for _ in range(p - 2):
        u = (u * u - 2) % N
    outcome = Outcome.PRIME if u == 0 else Outcome.COMPOSITE
    return BaselineResult("lucas-lehmer", p, N, outcome, u, time.perf_counter() - start)


def pepin(n: int) -> BaselineResult:
    """F_n = 2^(2^n) + 1 is prime iff 3^((F_n - 1)/2) = -1 (mod F_n)."""
    if n < 1:
        raise ValueError("Pepin's test needs n >= 1")
    start = time.perf_counter()
    F = (1 << (1 << n)) + 1
    x = pow(3, (F - 1) // 2, F)
    outcome = Outcome.PRIME if x == F - 1 else Outcome.COMPOSITE
    return BaselineResult("pepin", n, F, outcome, x, time.perf_counter() - start)


def _strong_probable_prime(N: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, N)
    if x == 1 or x == N - 1:
        return True
    for _ in range(s - 1):
        x = x * x % N
        if x == N - 1:
            return True
    return False


def miller_rabin(N: int, cfg: OracleConfig = OracleConfig()) -> bool:
    """True for a probable prime, False for a proven composite."""
    if N < 2:
        return False
    for sp in cfg.deterministic_bases:
        if N % sp == 0:
            return N == sp
    d, s = N - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if N < cfg.deterministic_limit:
        bases = cfg.deterministic_bases
    else:
        rng = random.Random(cfg.seed)
        bases = [rng.randrange(2, N - 1) for _ in range(cfg.rounds)]
    return all(_strong_probable_prime(N, a, d, s) for a in bases)


def trial_division(N: int, bound: int):
    """Smallest prime factor of N not exceeding bound, or None."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    if N < 2:
        return None
    d = 2
    while d <= bound and d * d <= N:
        if N % d == 0:
            return d
        d += 1 if d == 2 else 2
    # no factor up to sqrt(N): N itself is prime
    return N if N <= bound else None
