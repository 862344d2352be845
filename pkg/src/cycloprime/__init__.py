"""Primality tests for M = (2p)^(2^n) + 1, odd prime p <= 19, via cyclotomic sequences."""

from .engine import Outcome, Verdict, run_general, run_recurrence_p3, run_recurrence_p5, run_test
from .residue_ring import SUPPORTED_P, TestParams, build_params

__all__ = [
    "Outcome",
    "SUPPORTED_P",
    "TestParams",
    "Verdict",
    "build_params",
    "run_general",
    "run_recurrence_p3",
    "run_recurrence_p5",
    "run_test",
]
