from fractions import Fraction

import pytest

from fcone.covers import (
    WeightData,
    conformal_blocks_class,
    eigen_det_class,
    exceptional_genus,
    genus,
    hodge_class,
    log_canonical_class,
    p5_class,
    pullback_boundary,
    pullback_combo,
    residue,
    weighted_pullbacks,
)
from fcone.moduli import (
    SymDivisor,
    SymFCurve,
    delta_range,
    enumerate_sym_fcurves,
    proportional,
    sym_divisor_from_vector,
    sym_pairing,
    symmetrize,
    tk_pairing,
)

PRIME_PAIRS = ((6, 2), (6, 3), (9, 3), (10, 2), (10, 5), (12, 2), (12, 3),
               (14, 7), (15, 3), (15, 5), (16, 2))


def frac_vec(*entries):
    return tuple(Fraction(x) for x in entries)


def test_residue():
    assert residue(7, 5) == 2
    assert residue(-1, 5) == 4
    assert residue(10, 5) == 0
    with pytest.raises(ValueError):
        residue(1, 0)


def test_weight_data_validation():
    w = WeightData((1, 1, 1, 1, 1, 1), 3)
    assert w.n == 6
    with pytest.raises(ValueError):
        WeightData((1, 1, 1), 1)
    with pytest.raises(ValueError):
        WeightData((1, -1, 0), 2)
    with pytest.raises(ValueError):
        WeightData((1, 1, 1), 2)  # sum not divisible
    with pytest.raises(ValueError):
        WeightData((1, 1, 1, 1), 2, j=2)


def test_genus_values():
    assert genus(WeightData((1, 1, 1, 1), 2)) == 1
    assert genus(WeightData((1,) * 6, 2)) == 2
    assert genus(WeightData((1,) * 6, 3)) == 4
    assert genus(WeightData((1,) * 12, 2)) == 5
    assert genus(WeightData((1, 1, 2), 2)) == 0
    # weights all sharing a factor with p leave the cover disconnected
    assert genus(WeightData((2, 2), 2)) == -1


def test_exceptional_genus():
    assert exceptional_genus(1, 1, 2) == 0
    assert exceptional_genus(1, 2, 3) == 0
    assert exceptional_genus(1, 1, 3) == 1
    assert exceptional_genus(2, 3, 6) == 1
    with pytest.raises(ValueError):
        exceptional_genus(1, 1, 1)


def test_hodge_class_coefficients():
    lam = hodge_class(6, 3)
    assert lam.psi == Fraction(8, 36)
    assert lam.delta(2) == -Fraction(8, 36)
    assert lam.delta(3) == 0
    with pytest.raises(ValueError):
        hodge_class(5, 2)
    with pytest.raises(ValueError):
        hodge_class(6, 1)


def test_hodge_class_vectors():
    cases = {
        (6, 2): frac_vec("1/5", "1/10"),
        (6, 3): frac_vec("2/15", "2/5"),
        (9, 3): frac_vec("1/6", "1/2", "1/3"),
        (10, 2): frac_vec("2/9", "1/6", "1/3", "2/9"),
    }
    for (n, p), expected in cases.items():
        assert hodge_class(n, p).class_vector() == expected


def test_hodge_rays():
    assert proportional(hodge_class(6, 2), sym_divisor_from_vector(6, (2, 1)))
    assert proportional(hodge_class(6, 3), sym_divisor_from_vector(6, (1, 3)))
    assert proportional(hodge_class(9, 3), sym_divisor_from_vector(9, (1, 3, 2)))
    assert proportional(hodge_class(10, 2), sym_divisor_from_vector(10, (4, 3, 6, 4)))


def test_pullback_boundary_supports():
    irr, red = pullback_boundary(12, 3)
    assert irr.delta_map() == {3: 3, 6: 3}
    assert red.delta_map() == {2: Fraction(1, 3), 4: Fraction(1, 3), 5: Fraction(1, 3)}


def test_triple_cover_class_identity():
    for n in (6, 9, 12, 15):
        combo = pullback_combo(n, 3, 9, -1, 0)
        delta = {k: -2 - (1 if k % 3 == 0 else 0) for k in delta_range(n)}
        assert combo == SymDivisor(n, 2, delta)


def test_triple_cover_zero_curves_mod_three():
    for n in (9, 12, 15):
        div = pullback_combo(n, 3, 9, -1, 0)
        for f in enumerate_sym_fcurves(n):
            deg = sym_pairing(div, f)
            balanced = sorted(v % 3 for v in f.parts) == [1, 1, 2, 2]
            if balanced:
                assert deg == 0
            else:
                assert deg > 0


def test_unit_weights_reduce_to_plain_pullbacks():
    for n, p in ((6, 2), (6, 3), (9, 3), (10, 2), (10, 5)):
        w = WeightData((1,) * n, p)
        lam, irr, red = (symmetrize(d) for d in weighted_pullbacks(w))
        assert lam == hodge_class(n, p)
        plain_irr, plain_red = pullback_boundary(n, p)
        assert irr == plain_irr
        assert red == plain_red


def test_weighted_pullbacks_single_heavy_marking():
    w = WeightData((1, 1, 1, 1, 1, 1, 1, 1, 2), 2)
    lam, irr, red = (symmetrize(d) for d in weighted_pullbacks(w))
    assert lam.class_vector() == frac_vec("1/6", "1/6", "2/9")
    combo = 10 * lam - irr - 2 * red
    assert combo.class_vector() == frac_vec("1/9", "1/3", "2/3")
    assert proportional(combo, sym_divisor_from_vector(9, (1, 3, 6))) == Fraction(1, 9)


def test_weighted_pullbacks_dropped_marking():
    # weight 0 on a marking forgets it before taking the cover
    w = WeightData((1, 1, 1, 1, 1, 1, 0), 2)
    lam = symmetrize(weighted_pullbacks(w)[0])
    assert lam.class_vector() == frac_vec("1/7", "1/7")
    lam3 = symmetrize(weighted_pullbacks(WeightData((1, 1, 1, 1, 1, 1, 0), 3))[0])
    assert lam3.class_vector() == frac_vec("2/21", "2/7")


def test_eigen_det_sums_to_hodge():
    for d, p in (((1,) * 6, 2), ((1,) * 6, 3), ((1,) * 9, 3),
                 ((1, 1, 1, 1, 1, 1, 0), 3), ((1, 1, 1, 1, 1, 1, 1, 1, 2), 5)):
        w = WeightData(d, p)
        total = eigen_det_class(w, 1)
        for j in range(2, p):
            total = total + eigen_det_class(w, j)
        assert total == weighted_pullbacks(w)[0]


def test_eigen_det_character_symmetry():
    w = WeightData((1,) * 10, 5)
    assert eigen_det_class(w, 1) == eigen_det_class(w, 4)
    assert eigen_det_class(w, 2) == eigen_det_class(w, 3)
    with pytest.raises(ValueError):
        eigen_det_class(w, 0)
    with pytest.raises(ValueError):
        eigen_det_class(w, 5)
    with pytest.raises(ValueError):
        eigen_det_class(WeightData((1,) * 10, 5))  # no character anywhere


def test_eigen_det_known_rays():
    e1 = symmetrize(eigen_det_class(WeightData((1,) * 10, 5), 1))
    assert e1.class_vector() == frac_vec("1/45", "1/15", "2/15", "2/9")
    e3 = symmetrize(eigen_det_class(WeightData((1,) * 10, 10), 3))
    assert proportional(e3, sym_divisor_from_vector(10, (2, 6, 6, 5))) == Fraction(1, 30)


def test_conformal_blocks_class():
    d = (1,) * 10
    assert conformal_blocks_class(5, d) == 5 * eigen_det_class(WeightData(d, 5), 1)
    sym = symmetrize(conformal_blocks_class(5, d))
    assert sym.class_vector() == frac_vec("1/9", "1/3", "2/3", "10/9")


def test_p5_class_expansions():
    assert p5_class(10, 1).class_vector() == frac_vec("10/9", "30/9", "60/9", "55/9")
    assert proportional(
        p5_class(10, 2), sym_divisor_from_vector(10, (4, 6, 6, 7))
    ) == Fraction(15, 9)
    with pytest.raises(ValueError):
        p5_class(12, 1)
    with pytest.raises(ValueError):
        p5_class(10, 3)


def test_p5_class_fnef():
    for n in (10, 15):
        for j in (1, 2):
            div = p5_class(n, j)
            assert all(sym_pairing(div, f) >= 0 for f in enumerate_sym_fcurves(n))


def test_p5_class_from_eigen_dets():
    for n in (10, 15):
        irr = pullback_boundary(n, 5)[0]
        for j in (1, 2):
            e = symmetrize(eigen_det_class(WeightData((1,) * n, 5), j))
            assert 50 * e - irr == p5_class(n, j)


def test_log_canonical_coefficients():
    lc = log_canonical_class(6, 2)
    assert lc.psi == 1
    assert lc.delta(2) == -Fraction(3, 2)
    assert lc.delta(3) == -1


def test_log_canonical_fnef_for_odd_degree():
    for n, p in ((6, 3), (9, 3), (10, 5), (15, 3), (15, 5)):
        lc = log_canonical_class(n, p)
        assert all(sym_pairing(lc, f) >= 0 for f in enumerate_sym_fcurves(n))


def test_log_canonical_fails_for_even_degree():
    cases = ((6, 2, (3, 1, 1, 1)), (8, 2, (5, 1, 1, 1)), (12, 4, (6, 2, 2, 2)))
    for n, p, parts in cases:
        lc = log_canonical_class(n, p)
        assert sym_pairing(lc, SymFCurve(parts)) == -Fraction(1, 2)


def test_hodge_vanishing_iff_part_divisible():
    # for prime degree the Hodge pullback kills exactly the F-curves with a
    # part divisible by the degree
    for n, p in PRIME_PAIRS:
        lam = hodge_class(n, p)
        for f in enumerate_sym_fcurves(n):
            vanishes = sym_pairing(lam, f) == 0
            assert vanishes == any(v % p == 0 for v in f.parts)


def test_hodge_vanishing_on_test_curves():
    for n, p in PRIME_PAIRS:
        lam = hodge_class(n, p)
        for k in range(3, n // 2 + 1):
            deg = tk_pairing(lam, k)
            assert (deg == 0) == (k % p == 0)
