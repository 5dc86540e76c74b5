from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from hodgediv.extremality import (
    NonPositiveDenominator,
    Partition,
    TeichParamsAbelian,
    TeichParamsQuadratic,
    certificate_check,
    double_zero_partition,
    kappa_mu,
    psi_degree,
    teich_vector_abelian,
    teich_vector_quadratic,
    threshold_abelian,
    threshold_quadratic,
)
from hodgediv.picard import (
    DivisorClass,
    class_stratum_abelian,
    class_stratum_quadratic,
    pair,
)

pos_rationals = st.fractions(min_value=Q(1, 8), max_value=Q(8), max_denominator=12)


def test_partition_validation():
    Partition((2, 1, 1), "abelian", 3)
    with pytest.raises(ValueError):
        Partition((2, 1), "abelian", 3)
    with pytest.raises(ValueError):
        Partition((2, 2), "quadratic", 3)
    with pytest.raises(ValueError):
        Partition((2,), "cubic", 2)


def test_kappa_mu_values():
    assert kappa_mu(Partition((2, 1, 1), "abelian", 3)) == Q(17, 36)
    assert kappa_mu(Partition((2, 1, 1), "quadratic", 2)) == Q(19, 72)
    assert kappa_mu(Partition((2,), "abelian", 2)) == Q(2, 9)


def test_kappa_mu_closed_forms():
    for g in range(2, 51):
        abelian = double_zero_partition("abelian", g)
        quadratic = double_zero_partition("quadratic", g)
        assert kappa_mu(abelian) == Q(9 * g - 10, 36)
        assert kappa_mu(quadratic) == Q(20 * g - 21, 72)


def test_teich_params_validation():
    with pytest.raises(ValueError):
        TeichParamsAbelian(Q(0), Q(1), 3)
    with pytest.raises(ValueError):
        TeichParamsAbelian(Q(2), Q(4), 3)
    with pytest.raises(ValueError):
        TeichParamsQuadratic(Q(1), Q(-1))


def test_abelian_vector_entries():
    p = double_zero_partition("abelian", 3)
    km = kappa_mu(p)
    t = TeichParamsAbelian(Q(2), km, 3)
    rec = teich_vector_abelian(3, p, t)
    assert rec.entry("delta_0") == 0          # L = kappa_mu kills delta_0
    t2 = TeichParamsAbelian(Q(2), Q(3), 3)
    assert teich_vector_abelian(3, p, t2).entry("lambda") == 3  # chi=2, L=g


def test_abelian_stratum_pairing_is_L_independent():
    for g in range(2, 13):
        p = double_zero_partition("abelian", g)
        stratum = class_stratum_abelian(g)
        for chi in (Q(2), Q(7, 2)):
            values = [pair(teich_vector_abelian(g, p, TeichParamsAbelian(chi, L, g)), stratum)
                      for L in (Q(0), Q(1), Q(g), Q(g, 3))]
            # the pairing is affine in L; equality at distinct L means the
            # L-coefficient cancels identically
            assert len(set(values)) == 1
            assert values[0] == -chi / 3


def test_quadratic_stratum_pairing_is_carea_independent():
    for g in range(2, 13):
        p = double_zero_partition("quadratic", g)
        stratum = class_stratum_quadratic(g)
        for chi in (Q(2), Q(5)):
            values = [pair(teich_vector_quadratic(g, p, TeichParamsQuadratic(chi, c)), stratum)
                      for c in (Q(0), Q(1), Q(7, 3))]
            assert len(set(values)) == 1
            assert values[0] == -chi / 2


def test_quadratic_vector_entries():
    p = double_zero_partition("quadratic", 2)
    rec = teich_vector_quadratic(2, p, TeichParamsQuadratic(Q(2), Q(0)))
    assert rec.entry("lambda") == kappa_mu(p)  # chi/2 * kappa with chi = 2
    rec2 = teich_vector_quadratic(2, p, TeichParamsQuadratic(Q(2), Q(1)))
    assert rec2.entry("lambda") == Q(91, 72)


def test_psi_degree():
    p = double_zero_partition("abelian", 3)
    assert psi_degree(TeichParamsAbelian(Q(6), Q(1), 3), p, 2) == 1
    assert psi_degree(TeichParamsAbelian(Q(4), Q(2), 3), p, 1) == 1
    with pytest.raises(ValueError):
        psi_degree(TeichParamsAbelian(Q(4), Q(2), 3), p, 5)


@given(pos_rationals, st.fractions(min_value=Q(0), max_value=Q(3), max_denominator=8))
def test_psi_identity_random_samples(chi, L):
    # the quotient form is checked against the closed form inside psi_degree
    p = double_zero_partition("abelian", 3)
    t = TeichParamsAbelian(chi, L, 3)
    for m in (1, 2):
        assert psi_degree(t, p, m) == chi / (2 * (m + 1))


def test_threshold_abelian_endpoint():
    assert threshold_abelian(Q(1), Q(1), Q(0), 3) == Q(1, 6)


def test_threshold_abelian_L_independent():
    # a = -12 c0 makes the L-coefficient vanish
    p = double_zero_partition("abelian", 4)
    km = kappa_mu(p)
    d = threshold_abelian(Q(-12) * Q(1, 4), Q(5), Q(1, 4), 4)
    assert d == Q(2) / (3 * (5 - 12 * Q(1, 4) * km))


def test_threshold_abelian_decreasing_slope():
    # slope a + 12 c0 = -1/2 < 0: the quotient increases in L, so the
    # infimum sits at L = 0
    p = Partition((2,), "abelian", 2)
    d = threshold_abelian(Q(0), Q(1), Q(-1, 24), 2, p)
    assert d == Q(3, 5)


def test_threshold_abelian_nonpositive_denominator():
    with pytest.raises(NonPositiveDenominator) as exc:
        threshold_abelian(Q(-1), Q(1), Q(0), 3)
    assert exc.value.endpoint == 3


def test_threshold_quadratic():
    assert threshold_quadratic(Q(0), Q(3), Q(0), 2, Q(1)) == Q(1, 6)
    assert threshold_quadratic(Q(1), Q(1), Q(0), 2, Q(1)) == Q(72, 235)
    # 12c + a < 0: denominator decreasing, infimum at c_area = 0
    p = double_zero_partition("quadratic", 2)
    km = kappa_mu(p)
    d = threshold_quadratic(Q(-1), Q(2), Q(0), 2, Q(1))
    assert d == Q(1) / (4 - km)


def _abelian_grid(g, chi_values=(1, 2, 3, 4, 5)):
    p = double_zero_partition("abelian", g)
    km = kappa_mu(p)
    return [teich_vector_abelian(g, p, TeichParamsAbelian(Q(2 * chi), L, g))
            for chi in chi_values for L in (Q(0), km, Q(g, 2), Q(g))]


def test_certificate_pass_at_threshold():
    g = 3
    a, b, c0 = Q(1), Q(2), Q(1, 3)
    d = threshold_abelian(a, b, c0, g)
    assert d > 0
    stratum = class_stratum_abelian(g)
    ample = DivisorClass.from_map(stratum.basis, {"lambda": a, "eta": b, "delta_0": c0})
    report = certificate_check(stratum, ample, d, _abelian_grid(g))
    assert report.passed


def test_certificate_fails_beyond_threshold():
    g = 3
    a, b, c0 = Q(1), Q(2), Q(1, 3)
    d = threshold_abelian(a, b, c0, g)
    stratum = class_stratum_abelian(g)
    ample = DivisorClass.from_map(stratum.basis, {"lambda": a, "eta": b, "delta_0": c0})
    report = certificate_check(stratum, ample, 2 * d, _abelian_grid(g))
    assert not report.passed
    # with a + 12 c0 > 0 the infimum sits at L = g, so an L = g sample violates
    p = double_zero_partition("abelian", g)
    witness = teich_vector_abelian(g, p, TeichParamsAbelian(Q(2), Q(g), g))
    assert pair(witness, stratum + (2 * d) * ample) > 0


def test_certificate_vacuous():
    stratum = class_stratum_abelian(3)
    report = certificate_check(stratum, stratum, Q(1), [])
    assert report.passed and report.vacuous


def test_certificate_rejects_nonpositive_d():
    stratum = class_stratum_abelian(3)
    with pytest.raises(ValueError):
        certificate_check(stratum, stratum, Q(0), [])


@given(st.fractions(min_value=Q(0), max_value=Q(3), max_denominator=6),
       pos_rationals,
       st.fractions(min_value=Q(0), max_value=Q(2), max_denominator=6))
def test_threshold_certificate_soundness_randomized(a, b, c0):
    """For positive-denominator samples the threshold is positive and the
    certificate holds on the whole grid."""
    g = 3
    try:
        d = threshold_abelian(a, b, c0, g)
    except NonPositiveDenominator:
        return
    assert d > 0
    stratum = class_stratum_abelian(g)
    ample = DivisorClass.from_map(stratum.basis, {"lambda": a, "eta": b, "delta_0": c0})
    assert certificate_check(stratum, ample, d, _abelian_grid(g, (1, 2))).passed
