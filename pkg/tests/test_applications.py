from fractions import Fraction
from math import factorial

import pytest

from todatau.applications import (
    b_series_coeff,
    compose,
    constellation_count,
    cycle_type,
    defect,
    genus_factor_count,
    hciz_coeff,
    hciz_family,
    hciz_specialized_phi,
    hciz_theta_tilde,
    hurwitz_number,
    hurwitz_oracle,
    invert,
    maya_contains,
    maya_contains_by_prefix,
    schur_measure_g,
    symmetric_group,
    verify_application,
)
from todatau.content import theta
from todatau.partitions import Partition, partitions_of, partitions_up_to

F = Fraction
P = Partition


def test_permutation_helpers():
    s3 = symmetric_group(3)
    assert len(s3) == 6
    types = sorted(str(cycle_type(p)) for p in s3)
    assert types.count("1,1,1") == 1
    assert types.count("2,1") == 3
    assert types.count("3") == 2
    for p in s3:
        assert compose(p, invert(p)) == (0, 1, 2)
        assert defect(p) == 3 - cycle_type(p).length


def test_constellation_examples():
    assert constellation_count(P((1, 1)), P((1, 1)), [1]) == 0
    assert constellation_count(P((2,)), P((1, 1)), [1]) == 1
    assert constellation_count(P((1,)), P((1,)), []) == 1


def test_constellation_limit():
    with pytest.raises(ValueError):
        constellation_count(P((6,)), P((6,)), [])
    with pytest.raises(ValueError):
        constellation_count(P((2,)), P((2,)), [1, 1, 1])


def test_b_series_examples():
    assert b_series_coeff(P((1,)), P((1,)), []) == 1
    assert b_series_coeff(P((2,)), P((1, 1)), [1]) == F(1, 2)


def test_constellation_oracle_equivalence_small():
    for d in (1, 2, 3):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for defects in ([], [1], [2], [1, 1], [0, 2]):
                    series = b_series_coeff(alpha, beta, defects)
                    count = constellation_count(alpha, beta, defects)
                    assert factorial(d) * series == count, (
                        alpha, beta, defects)


def test_hurwitz_frozen_values():
    assert hurwitz_oracle(P((2,)), P((2,)), 0) == F(1, 2)
    assert hurwitz_number(P((2,)), P((2,)), 0) == F(1, 2)
    assert hurwitz_number(P((1,)), P((1,)), 0) == 1
    assert hurwitz_oracle(P((1, 1)), P((1, 1)), 0) == 2
    assert hurwitz_number(P((1, 1)), P((1, 1)), 0) == 2


def test_hurwitz_series_matches_oracle():
    for d in (1, 2, 3):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for genus in (0, 1):
                    assert hurwitz_number(alpha, beta, genus) == \
                        hurwitz_oracle(alpha, beta, genus), (alpha, beta, genus)


def test_genus_factor_count():
    assert genus_factor_count(P((2,)), P((2,)), 0) == 0
    assert genus_factor_count(P((1, 1)), P((1, 1)), 1) == 4


def test_maya_containment():
    lam = P((1,))
    assert maya_contains(lam, 0)
    assert not maya_contains(P(), 0)
    assert maya_contains(P(), -1)
    for lam in partitions_up_to(5):
        members = {lam.part(k) - k for k in range(1, lam.length + 6)}
        for x in range(-9, 7):
            want = x in members or x <= -lam.length - 6
            assert maya_contains(lam, x) == want
            assert maya_contains_by_prefix(lam, [x + 2], 2) == want


def test_schur_measure_examples():
    assert schur_measure_g({0}, 0, P((1,))) == 1
    assert schur_measure_g({0}, 0, P()) == 0
    for n in (-2, 0, 3):
        for lam in partitions_up_to(3):
            assert schur_measure_g(set(), n, lam) == 1


def test_schur_measure_sweeps():
    for X in (set(), {0}, {1, -1}, {-2}):
        rep = verify_application("schur-measure", size_bound=3,
                                 window=(-1, 1), X=X)
        assert rep.ok, (X, rep.failures[:1])
        assert rep.total > 0


def test_hciz_coeff_examples():
    assert hciz_coeff(5, P()) == 1
    assert hciz_coeff(-2, P()) == 0
    assert hciz_coeff(2, P((1, 1, 1))) == 0
    assert hciz_coeff(2, P((2, 1))) == F(1, 6)
    assert hciz_theta_tilde(3) == F(1, 2)
    assert hciz_theta_tilde(0) == 1
    assert hciz_theta_tilde(1) == 1


def test_hciz_specialization_pipeline():
    for n in range(0, 7):
        for lam in partitions_up_to(4):
            assert hciz_specialized_phi(n, lam) == \
                hciz_theta_tilde(n) * hciz_coeff(n, lam)
    # skipping the b substitution leaves a stray half power at odd levels
    from todatau.coeffring import ZERO, Assignment, FractionalExponent, \
        PolyRing, specialize
    from todatau.content import phi_coeff
    ring = PolyRing([], 0)
    asg = Assignment(y=lambda i: F(1, i) if i > 0 else ZERO, a=1, b=1)
    with pytest.raises(FractionalExponent):
        specialize(phi_coeff(1, P((1,))), asg, ring)


def test_hciz_prefactor_from_symbolic_theta():
    # theta with b -> y_0^(-1/2) and y_i -> 1/i collapses to 1/(1!...(n-1)!)
    from todatau.coeffring import ZERO, Assignment, PolyRing, specialize
    ring = PolyRing([], 0)
    asg = Assignment(y=lambda i: F(1, i) if i > 0 else ZERO, a=1)
    for n in range(0, 7):
        got = specialize(theta(n).sub_b_with_y0_pow(-1), asg, ring).constant()
        assert got == hciz_theta_tilde(n)


def test_hciz_family_zero_levels():
    fam = hciz_family()
    for lam in partitions_up_to(3):
        assert fam.diag(-1, lam) == 0
        assert fam.diag(-3, lam) == 0
    assert fam.diag(0, P()) == 1
    assert fam.diag(0, P((1,))) == 0  # one row > n = 0
    # the numeric pipeline agrees: after eliminating b, negative levels carry
    # positive powers of the zeroed symbols and so specialize to exact zeros
    for n in (-1, -2, -3):
        for lam in partitions_up_to(2):
            assert hciz_specialized_phi(n, lam) == 0


def test_hciz_sweep_small():
    rep = verify_application("hciz", size_bound=3, window=(0, 3))
    assert rep.ok and rep.total > 0


def test_constellation_and_hurwitz_sweeps_small():
    rep = verify_application("constellations", size_bound=2, window=(-1, 1),
                             cap=3)
    assert rep.ok and rep.total > 0
    rep = verify_application("hurwitz", size_bound=2, window=(-1, 1), cap=3)
    assert rep.ok and rep.total > 0


def test_verify_application_rejects_unknown():
    with pytest.raises(ValueError):
        verify_application("nope")


def test_containment_step_records_present():
    rep = verify_application("schur-measure", size_bound=2, window=(-1, 1),
                             X={0})
    assert rep.ok
    # the report combines criterion tuples and containment-step tuples
    assert rep.total > 0
