import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fcone.moduli import (
    FullDivisor,
    FullFCurve,
    SymDivisor,
    SymFCurve,
    canonical_side,
    delta_range,
    enumerate_full_fcurves,
    enumerate_sym_fcurves,
    fcurve_class_vector,
    format_divisor,
    full_pairing,
    parse_divisor,
    proportional,
    psi_expand,
    standard_full_fcurve,
    sym_divisor_from_vector,
    sym_pairing,
    symmetrize,
    tk_pairing,
)

# the n=10 coordinate table, D2..D5 per curve type
N10_TABLE = {
    (7, 1, 1, 1): (3, -1, 0, 0),
    (6, 2, 1, 1): (0, 2, -1, 0),
    (5, 3, 1, 1): (1, -1, 2, -1),
    (5, 2, 2, 1): (-2, 2, 1, -1),
    (4, 4, 1, 1): (1, 0, -2, 2),
    (4, 3, 2, 1): (-1, 0, 0, 1),
    (4, 2, 2, 2): (-3, 0, 2, 0),
    (3, 3, 3, 1): (0, -3, 3, 0),
    (3, 3, 2, 2): (-2, -2, 1, 2),
}

PSI_EXPANSIONS = {
    6: ("8/5", "9/5"),
    7: ("5/3", "2"),
    8: ("12/7", "15/7", "16/7"),
    9: ("7/4", "9/4", "5/2"),
    10: ("16/9", "7/3", "8/3", "25/9"),
    15: ("13/7", "18/7", "22/7", "25/7", "27/7", "4"),
}


def sym_to_full(d: SymDivisor) -> FullDivisor:
    """Spread a symmetric class evenly over markings and boundary classes."""
    n = d.n
    delta = {}
    for size in range(2, n - 1):
        from itertools import combinations

        for side in combinations(range(1, n), size):
            delta[frozenset(side)] = d.delta(min(size, n - size))
    return FullDivisor(n, (d.psi,) * n, delta)


def test_delta_range():
    assert list(delta_range(6)) == [2, 3]
    assert list(delta_range(7)) == [2, 3]
    assert list(delta_range(10)) == [2, 3, 4, 5]


def test_sym_divisor_validation():
    with pytest.raises(ValueError):
        SymDivisor(3)
    with pytest.raises(ValueError):
        SymDivisor(6, 0, {4: 1})
    d = SymDivisor(6, 1, {2: "1/2"})
    with pytest.raises(AttributeError):
        d.psi = 2
    with pytest.raises(ValueError):
        d.delta(9)


def test_psi_identity_defines_equality():
    # (n-1) psi and sum k(n-k) Delta_k are the same class
    for n in range(4, 13):
        lhs = SymDivisor(n, n - 1)
        rhs = SymDivisor(n, 0, {k: k * (n - k) for k in delta_range(n)})
        assert lhs == rhs
        assert (lhs - rhs).is_zero()
        assert hash(lhs) == hash(rhs)


def test_psi_expansions():
    for n, expected in PSI_EXPANSIONS.items():
        got = psi_expand(SymDivisor(n, 1)).delta_vector()
        assert got == tuple(Fraction(x) for x in expected)


def test_sym_divisor_arithmetic():
    a = SymDivisor(8, 1, {2: 3, 4: "1/2"})
    b = SymDivisor(8, "2/3", {3: -1})
    assert a + b - b == a
    assert 2 * a == a + a
    assert (a - a).is_zero()
    assert -a == -1 * a
    with pytest.raises(ValueError):
        a + SymDivisor(6, 1)


def test_sym_divisor_from_vector():
    d = sym_divisor_from_vector(10, (1, 3, 6, 10))
    assert d.psi == 0 and d.delta(5) == 10
    with pytest.raises(ValueError):
        sym_divisor_from_vector(10, (1, 2, 3))


def test_fcurve_type_normalization():
    f = SymFCurve((1, 2, 8, 1))
    assert f.parts == (8, 2, 1, 1)
    assert f.n == 12
    assert str(f) == "F_{8,2,1,1}"
    with pytest.raises(ValueError):
        SymFCurve((0, 1, 1, 2))
    with pytest.raises(ValueError):
        SymFCurve((1, 1, 1))


def test_enumerate_sym_fcurves_counts_and_order():
    assert [len(enumerate_sym_fcurves(n)) for n in range(5, 11)] == [1, 2, 3, 5, 6, 9]
    tens = [f.parts for f in enumerate_sym_fcurves(10)]
    assert tens == sorted(N10_TABLE, reverse=True)


def test_fcurve_class_vectors_n10():
    for parts, expected in N10_TABLE.items():
        vec = fcurve_class_vector(SymFCurve(parts))
        assert vec == tuple(Fraction(x) for x in expected)


def test_psi_minus_delta_has_degree_one_on_every_fcurve():
    for n in range(5, 14):
        d = SymDivisor(n, 1, {k: -1 for k in delta_range(n)})
        for f in enumerate_sym_fcurves(n):
            assert sym_pairing(d, f) == 1


def test_tk_pairing_table():
    n = 12
    for k in range(3, n // 2 + 1):
        dk = SymDivisor(n, 0, {k: 1})
        assert tk_pairing(dk, k) == 2 - k
        assert tk_pairing(SymDivisor(n, 0, {k - 1: 1}), k) == k
        for m in delta_range(n):
            if m not in (k, k - 1):
                assert tk_pairing(SymDivisor(n, 0, {m: 1}), k) == 0
    with pytest.raises(ValueError):
        tk_pairing(SymDivisor(12, 1), 2)
    with pytest.raises(ValueError):
        tk_pairing(SymDivisor(12, 1), 7)


def test_proportional():
    a = sym_divisor_from_vector(6, (2, 1))
    assert proportional(3 * a, a) == 3
    assert proportional(a, 3 * a) == Fraction(1, 3)
    assert proportional(-1 * a, a) is None
    assert proportional(a, sym_divisor_from_vector(6, (1, 3))) is None
    zero = SymDivisor(6)
    assert proportional(zero, zero) == 1
    assert proportional(a, zero) is None
    assert proportional(zero, a) is None


def test_canonical_side():
    assert canonical_side({1, 2}, 6) == frozenset({1, 2})
    # the side containing the last marking is replaced by its complement
    assert canonical_side({4, 5, 6}, 6) == frozenset({1, 2, 3})
    with pytest.raises(ValueError):
        canonical_side({1}, 6)
    with pytest.raises(ValueError):
        canonical_side({1, 7}, 6)


def test_full_divisor_boundary_keys_merge():
    d = FullDivisor(6, (), {frozenset({1, 2}): 1, frozenset({3, 4, 5, 6}): 2})
    assert d.delta({1, 2}) == 3
    assert d.delta({3, 4}) == 0


def test_full_divisor_json_roundtrip():
    d = FullDivisor(6, (1, 0, "1/2", 0, 0, 0), {frozenset({1, 2}): "2/3"})
    assert FullDivisor.from_json(d.to_json()) == d


def test_enumerate_full_fcurves_counts():
    # Stirling numbers of the second kind S(n, 4)
    assert len(enumerate_full_fcurves(5)) == 10
    assert len(enumerate_full_fcurves(6)) == 65
    assert len(enumerate_full_fcurves(7)) == 350
    for f in enumerate_full_fcurves(6):
        assert f.n == 6
        assert sum(f.sym_type().parts) == 6


def test_full_fcurve_validation():
    with pytest.raises(ValueError):
        FullFCurve((frozenset({1}), frozenset({2}), frozenset({3}), frozenset({3, 4})))
    with pytest.raises(ValueError):
        FullFCurve((frozenset({1}), frozenset({2}), frozenset({3}), frozenset({5})))


def test_standard_full_fcurve_blocks():
    f = standard_full_fcurve(SymFCurve((3, 2, 2, 1)))
    assert f.blocks == (
        frozenset({1, 2, 3}),
        frozenset({4, 5}),
        frozenset({6, 7}),
        frozenset({8}),
    )
    assert f.sym_type() == SymFCurve((3, 2, 2, 1))


def test_full_pairing_rules():
    blocks = (frozenset({1}), frozenset({2}), frozenset({3, 4}), frozenset({5, 6}))
    f = FullFCurve(blocks)
    psi1 = FullDivisor(6, (1, 0, 0, 0, 0, 0))
    psi3 = FullDivisor(6, (0, 0, 1, 0, 0, 0))
    assert full_pairing(psi1, f) == 1  # {1} is a block
    assert full_pairing(psi3, f) == 0  # 3 sits in a 2-element block
    two_blocks = FullDivisor(6, (), {frozenset({1, 2}): 1})
    one_block = FullDivisor(6, (), {frozenset({3, 4}): 1})
    crossing = FullDivisor(6, (), {frozenset({1, 3}): 1})
    assert full_pairing(two_blocks, f) == 1
    assert full_pairing(one_block, f) == -1
    assert full_pairing(crossing, f) == 0


def test_full_pairing_matches_symmetric_pairing():
    # a divisor spread evenly over the markings pairs identically with
    # every realization of a given curve type
    rng = random.Random(5)
    n = 8
    realizations = enumerate_full_fcurves(n)
    for _ in range(5):
        vec = [rng.randint(-4, 4) for _ in delta_range(n)]
        d = sym_divisor_from_vector(n, vec)
        full = sym_to_full(d)
        for f in enumerate_sym_fcurves(n):
            expected = sym_pairing(d, f)
            matching = [g for g in realizations if g.sym_type() == f]
            sample = rng.sample(matching, min(3, len(matching)))
            sample.append(standard_full_fcurve(f))
            for g in sample:
                assert full_pairing(full, g) == expected


def test_symmetrize_closed_form():
    d = FullDivisor(6, (), {frozenset({1, 2}): 1})
    s = symmetrize(d)
    assert s.delta(2) == Fraction(1, 15)  # 15 classes of side size 2
    d = FullDivisor(6, (), {frozenset({1, 2, 3}): 1})
    assert symmetrize(d).delta(3) == Fraction(1, 10)  # 20 sides, 10 classes
    d = FullDivisor(6, (2, 0, 0, 0, 0, 4))
    assert symmetrize(d).psi == 1


def test_symmetrize_inverts_even_spreading():
    d = SymDivisor(9, "1/3", {2: 1, 4: "-5/7"})
    assert symmetrize(sym_to_full(d)) == d


def test_parse_divisor_examples():
    d = parse_divisor("2*psi - 2*D2 - 3*D3", 6)
    assert d.psi == 2 and d.delta(2) == -2 and d.delta(3) == -3
    assert parse_divisor("0", 6).is_zero()
    assert parse_divisor("-D2 + D2", 6).is_zero()
    assert parse_divisor("1/2*psi", 6).psi == Fraction(1, 2)
    assert parse_divisor("D2", 6).delta(2) == 1


def test_parse_divisor_rejects_garbage():
    for text in ("", "2*D9", "psi + + D2", "psi 3*D2", "2*psi + 1", "D2 -"):
        with pytest.raises(ValueError):
            parse_divisor(text, 6)


def test_format_divisor_examples():
    assert format_divisor(SymDivisor(6)) == "0"
    d = SymDivisor(6, 0, {2: Fraction(2, 15), 3: Fraction(6, 15)})
    assert format_divisor(d) == "2/15*D2 + 6/15*D3"
    d = SymDivisor(6, Fraction(3, 2), {2: -2})
    assert format_divisor(d) == "3/2*psi - 4/2*D2"


divisor_strategy = st.builds(
    lambda n, psi, coeffs: SymDivisor(
        n, psi, dict(zip(delta_range(n), coeffs))
    ),
    st.integers(5, 12),
    st.fractions(min_value=-9, max_value=9, max_denominator=8),
    st.lists(
        st.fractions(min_value=-9, max_value=9, max_denominator=8),
        min_size=6,
        max_size=6,
    ),
)


@given(divisor_strategy)
def test_format_parse_roundtrip(d):
    assert parse_divisor(format_divisor(d), d.n) == d


@given(divisor_strategy, st.fractions(min_value=Fraction(1, 7), max_value=9, max_denominator=7))
def test_proportional_recovers_scale(d, c):
    if not d.is_zero():
        assert proportional(c * d, d) == c
