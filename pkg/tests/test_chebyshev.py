import random

import pytest
import sympy

from cycloprime.chebyshev import (
    X,
    IntPoly,
    acceptance_constants,
    constant,
    eval_poly,
    f_poly,
    g_poly,
)
from cycloprime.errors import UnsupportedP
from cycloprime.residue_ring import SUPPORTED_P, Residue

x = sympy.symbols("x")

G_LISTED = {
    0: 1,
    1: x,
    2: x**2 - 2,
    3: x**3 - 3 * x,
    4: x**4 - 4 * x**2 + 2,
    5: x**5 - 5 * x**3 + 5 * x,
    6: x**6 - 6 * x**4 + 9 * x**2 - 2,
    7: x**7 - 7 * x**5 + 14 * x**3 - 7 * x,
    8: x**8 - 8 * x**6 + 20 * x**4 - 16 * x**2 + 2,
    9: x**9 - 9 * x**7 + 27 * x**5 - 30 * x**3 + 9 * x,
}

F_LISTED = {
    3: x + 1,
    5: x**2 + x - 1,
    7: x**3 + x**2 - 2 * x - 1,
    11: x**5 + x**4 - 4 * x**3 - 3 * x**2 + 3 * x + 1,
    13: x**6 + x**5 - 5 * x**4 - 4 * x**3 + 6 * x**2 + 3 * x - 1,
    17: x**8 + x**7 - 7 * x**6 - 6 * x**5 + 15 * x**4 + 10 * x**3 - 10 * x**2 - 4 * x + 1,
    19: x**9 + x**8 - 8 * x**7 - 7 * x**6 + 21 * x**5 + 15 * x**4 - 20 * x**3 - 10 * x**2 + 5 * x + 1,
}

A_LISTED = {
    3: (-1,),
    5: (-1, -1),
    7: (-1, -2, 1),
    11: (-1, -4, 3, 3, -1),
    13: (-1, -5, 4, 6, -3, -1),
    17: (-1, -7, 6, 15, -10, -10, 4, 1),
    19: (-1, -8, 7, 21, -15, -20, 10, 5, -1),
}


def as_coeffs(expr):
    return tuple(reversed(sympy.Poly(expr, x).all_coeffs()))


@pytest.mark.parametrize("n", sorted(G_LISTED))
def test_g_poly_listed(n):
    assert g_poly(n).coeffs == as_coeffs(G_LISTED[n])


@pytest.mark.parametrize("p", SUPPORTED_P)
def test_f_poly_listed(p):
    assert f_poly(p).coeffs == as_coeffs(F_LISTED[p])


@pytest.mark.parametrize("p", SUPPORTED_P)
def test_acceptance_constants_listed(p):
    assert acceptance_constants(p) == A_LISTED[p]


@pytest.mark.parametrize("p", SUPPORTED_P)
def test_f_is_minimal_polynomial(p):
    t = sympy.symbols("t")
    expected = sympy.minimal_polynomial(2 * sympy.cos(2 * sympy.pi / p), t)
    assert f_poly(p).coeffs == as_coeffs(expected.subs(t, x))


def test_f_poly_rejects_unsupported():
    with pytest.raises(UnsupportedP):
        f_poly(23)


def test_g_poly_rejects_negative():
    with pytest.raises(ValueError):
        g_poly(-1)


@pytest.mark.parametrize("n", range(1, 13))
def test_laurent_identity_symbolic(n):
    y = sympy.symbols("y")
    g = sum(c * (y + 1 / y) ** k for k, c in enumerate(g_poly(n).coeffs))
    assert sympy.expand(g - y**n - y**-n) == 0


def test_laurent_identity_numeric():
    rng = random.Random(64)
    q = sympy.randprime(2**63, 2**64)
    for n in range(1, 65):
        y = rng.randrange(2, q - 1)
        yinv = pow(y, -1, q)
        got = eval_poly(g_poly(n), Residue((y + yinv) % q, q))
        assert got.value == (pow(y, n, q) + pow(yinv, n, q)) % q


@pytest.mark.parametrize("n", range(0, 65))
def test_monic_degree(n):
    g = g_poly(n)
    assert g.degree == n
    assert g.coeffs[-1] == 1


@pytest.mark.parametrize("m", range(2, 17))
def test_recursion_branches_agree(m):
    # even index from its odd neighbours: G_2m = x G_{2m-1} - G_{2m-2}
    assert g_poly(2 * m) == X * g_poly(2 * m - 1) - g_poly(2 * m - 2)
    # odd index from its even neighbour: G_{2m+1} = x G_2m - G_{2m-1}
    assert g_poly(2 * m + 1) == X * g_poly(2 * m) - g_poly(2 * m - 1)
    assert g_poly(2 * m) == g_poly(m) * g_poly(m) - constant(2)


def test_eval_examples():
    assert eval_poly(g_poly(6), Residue(14, 37)).value == 36
    assert eval_poly(g_poly(1), Residue(23, 37)).value == 23
    M = 37
    assert eval_poly(f_poly(3), Residue(M - 1, M)).value == 0


def test_intpoly_basics():
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPoly(()).degree == -1
    assert (X - X).coeffs == ()
    assert str(g_poly(6)) == "x^6-6x^4+9x^2-2"
    assert str(f_poly(3)) == "x+1"
    assert g_poly(4)(3) == 81 - 36 + 2
