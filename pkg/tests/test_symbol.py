import pytest

from cycloprime.cyclotomic import norm_exact
from cycloprime.errors import SeedDividesM, SymbolIsPlusMinusOne, UnlistedResidue
from cycloprime.residue_ring import SUPPORTED_P, build_params
from cycloprime.symbol import (
    CASE_TABLES,
    SEEDS,
    Case,
    SymbolValue,
    case_of,
    compute_symbol,
    embed_root,
    symbol_of_residue,
    table_lookup,
)

# The one tabulated (p, n <= 12) pair whose printed symbol disagrees with the
# computed one: class -5 (mod 53) is printed as zeta_13^8 but is -zeta_13^8.
P13_MISPRINT_N = 3


def _m_mod_q(p, n):
    q = SEEDS[p].q
    return (pow(2 * p, 2**n, q) + 1) % q


@pytest.mark.parametrize("p", SUPPORTED_P)
def test_seed_invariants(p):
    s = SEEDS[p]
    assert norm_exact(s.pi) == s.q
    assert s.q % (2 * p) == 1
    assert any(s.pi.coeffs[1:])
    assert s.n_min == (2 if p in (7, 13, 19) else 1)


def test_embed_root_examples():
    assert embed_root(SEEDS[3]) == 5
    assert embed_root(SEEDS[5]) == 8


@pytest.mark.parametrize("p", SUPPORTED_P)
def test_embed_root_is_primitive(p):
    s = SEEDS[p]
    t = embed_root(s)
    assert pow(t, 2 * p, s.q) == 1
    assert pow(t, p, s.q) == s.q - 1
    assert pow(t, 2, s.q) != 1


@pytest.mark.parametrize("p", SUPPORTED_P)
def test_decode_round_trip(p):
    seen = set()
    for i in range(2 * p):
        v = SymbolValue.from_exponent(i, p)
        assert v.exponent == i
        seen.add((v.sign, v.l))
    assert len(seen) == 2 * p


def test_decode_examples():
    assert SymbolValue.from_exponent(4, 3) == SymbolValue(1, 2, 3)
    assert SymbolValue.from_exponent(1, 5) == SymbolValue(-1, 3, 5)
    assert SymbolValue.from_exponent(5, 5) == SymbolValue(-1, 0, 5)
    assert str(SymbolValue(-1, 1, 5)) == "-zeta_5^1"
    with pytest.raises(ValueError):
        SymbolValue(0, 1, 5)


@pytest.mark.parametrize("n", range(1, 8))
def test_compute_symbol_p3_p5(n):
    assert compute_symbol(build_params(3, n), SEEDS[3]) == SymbolValue(1, 2, 3)
    assert compute_symbol(build_params(5, n), SEEDS[5]) == SymbolValue(-1, 1, 5)


def test_compute_symbol_p7_n2():
    P = build_params(7, 2)
    assert P.M % 29 == 29 - 8
    assert compute_symbol(P, SEEDS[7]) == SymbolValue(-1, 3, 7)


def test_compute_symbol_rejects_wrong_seed():
    with pytest.raises(ValueError):
        compute_symbol(build_params(3, 2), SEEDS[5])


def test_symbol_errors():
    with pytest.raises(SeedDividesM) as exc:
        symbol_of_residue(SEEDS[7], 29)
    assert exc.value.q == 29
    # 1 is a 2p-th power: symbol +1
    assert symbol_of_residue(SEEDS[5], 1) == SymbolValue(1, 0, 5)
    assert symbol_of_residue(SEEDS[5], 10) == SymbolValue(-1, 0, 5)


def test_case_of():
    assert case_of(SymbolValue(1, 2, 3)) is Case.I
    assert case_of(SymbolValue(-1, 1, 5)) is Case.II
    with pytest.raises(SymbolIsPlusMinusOne):
        case_of(SymbolValue(1, 0, 5))


def test_table_lookup_examples():
    assert table_lookup(17, -21) == SymbolValue(1, 2, 17)
    assert table_lookup(19, -98) == SymbolValue(-1, 1, 19)
    assert table_lookup(11, 2) == SymbolValue(1, 2, 11)
    assert table_lookup(7, 8) == table_lookup(7, -8) == SymbolValue(-1, 3, 7)
    assert table_lookup(7, -5) == SymbolValue(1, 1, 7)
    with pytest.raises(UnlistedResidue):
        table_lookup(7, 1)


def test_table_sizes():
    sizes = {p: len(t.entries) for p, t in CASE_TABLES.items()}
    assert sizes == {3: 1, 5: 1, 7: 3, 11: 1, 13: 12, 17: 8, 19: 18}


@pytest.mark.parametrize("p", SUPPORTED_P)
def test_table_agrees_with_computed(p):
    """Computed symbols vs the printed residue lists, n_min <= n <= 12."""
    seed = SEEDS[p]
    checked = 0
    for n in range(seed.n_min, 13):
        if (p, n) == (13, P13_MISPRINT_N):
            continue
        P = build_params(p, n)
        assert table_lookup(p, P.M) == compute_symbol(P, seed), n
        checked += 1
    assert checked >= 10


def test_p13_printed_entry_disagrees():
    """Class -5 (mod 53): printed as zeta_13^8, computed as -zeta_13^8."""
    P = build_params(13, P13_MISPRINT_N)
    assert P.M % 53 == 53 - 5
    assert compute_symbol(P, SEEDS[13]) == SymbolValue(-1, 8, 13)
    assert table_lookup(13, P.M) == SymbolValue(1, 8, 13)
    # M^((q-1)/2p) = (-5)^2 = 25 = -t^16, which decodes to -zeta_13^8
    t = embed_root(SEEDS[13])
    assert pow(-5, 2, 53) == (-pow(t, 16, 53)) % 53


@pytest.mark.parametrize("p", (7, 13, 19))
def test_n1_outside_tables_is_still_applicable(p):
    P = build_params(p, 1)
    with pytest.raises(UnlistedResidue):
        table_lookup(p, P.M)
    assert compute_symbol(P, SEEDS[p]).l != 0


@pytest.mark.parametrize("p", (3, 5))
def test_symbol_n_independent(p):
    assert {_m_mod_q(p, n) for n in range(1, 60)} == {2}


@pytest.mark.parametrize("p", SUPPORTED_P)
def test_symbol_eventually_periodic(p):
    seed = SEEDS[p]
    seq = [symbol_of_residue(seed, _m_mod_q(p, n)) for n in range(1, 80)]
    assert seq[0] == compute_symbol(build_params(p, 1), seed)
    # 2^n mod (q - 1) is eventually periodic, hence so is M mod q
    period = next(T for T in range(1, 40) if seq[10:50] == seq[10 + T:50 + T])
    assert all(seq[k] == seq[k + period] for k in range(2, len(seq) - period))


@pytest.mark.parametrize("p", SUPPORTED_P)
def test_no_family_member_hits_plus_minus_one(p):
    seed = SEEDS[p]
    for n in range(1, 40):
        assert symbol_of_residue(seed, _m_mod_q(p, n)).l != 0


def test_p13_sign_parity_is_embedding_free():
    # v in <t> is +zeta_13^l iff v^13 = 1 and -zeta_13^l iff v^13 = -1, whatever t is
    printed = dict(zip(
        (-11, -9, -17, 15, -7, 25, -6, 24, -16, 11, 9),
        (1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1),
    ))
    wrong = [v for v, sign in printed.items() if pow(v % 53, 13, 53) != sign % 53]
    assert wrong == [25]
