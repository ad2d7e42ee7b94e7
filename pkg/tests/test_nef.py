"""Nef criterion, both routes: spec validation, type decomposition,
the closed pairing form, the box scan, and the derived reports."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from osculant import (
    AnticanonicalDegreeTooSmall,
    CharPExcluded,
    Decomposition,
    DomainError,
    LambdaSpec,
    NotNef,
    ParityViolation,
    RationalImageViolation,
    RhoEven,
    RhoOutOfRange,
    closed_conditions,
    decompose_type,
    lambda_class,
    lambda_dot_exceptional_closed,
    linear_system_dims,
    moduli_dimension,
    n_for_type,
    nef_check,
    scan_box,
    thresholds,
    verify_minimizer_claim,
    z_divisor,
)
from osculant.catalog import exceptional_class


REF = LambdaSpec(4, 2, (3, 2, 2, 2))


def test_spec_validation():
    with pytest.raises(RhoEven):
        LambdaSpec(4, 2, (3, 2, 2, 2), rho=2)
    with pytest.raises(RhoOutOfRange):
        LambdaSpec(4, 2, (3, 2, 2, 2), rho=5)
    with pytest.raises(ParityViolation):
        LambdaSpec(4, 2, (2, 2, 2, 2))
    with pytest.raises(ParityViolation):
        LambdaSpec(4, 2, (3, 1, 2, 2))
    # right parity, wrong square sum
    with pytest.raises(RationalImageViolation):
        LambdaSpec(4, 2, (3, 2, 2, 4))
    with pytest.raises(DomainError):
        LambdaSpec(0, 2, (3, 2, 2, 2))


def test_n_for_type():
    assert n_for_type(2, (3, 2, 2, 2)) == 4
    assert n_for_type(3, (5, 4, 4, 4)) == 8
    assert n_for_type(2, (1, 0, 0, 0)) is None       # square sum below 3
    assert n_for_type(2, (3, 2, 2, 0)) is None       # no integral solution


def test_lambda_class_invariants():
    lam = lambda_class(REF)
    assert lam.self_intersection() == 2 * REF.d - 3
    assert lam.genus() == 0


def test_decompose_reference():
    dec = decompose_type((3, 2, 2, 2), 2)
    assert dec.mu == (1, 0, 0, 0)
    assert dec.eps == (0, 1, 1, 1)
    assert dec.nat_mu == (2, 1, 1, 1)
    assert dec.flat_mu_set == ((1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0))
    assert dec.eps_sq == 3
    assert dec.eps_abs_sum == 3
    assert dec.max_pair_sum == 2


def test_decompose_degree_three():
    dec = decompose_type((7, 2, 0, 0), 3)
    assert dec.mu == (1, 0, 0, 0)
    assert dec.eps == (1, 1, 0, 0)
    assert dec.nat_mu == (2, 1, 1, 1)
    assert dec.flat_mu_set == ((2, 1, 0, 0),)


def test_decompose_exact_multiple_has_zero_eps():
    assert decompose_type((3, 0, 0, 0), 2).eps == (0, 0, 0, 0)
    assert decompose_type((5, 10, 0, 5), 3).eps == (0, 0, 0, 0)


def test_decompose_rejects_bad_input():
    with pytest.raises(DomainError):
        decompose_type((3, 2, 2, 2), 0)
    with pytest.raises(DomainError):
        decompose_type((3, -2, 2, 2), 2)


def test_closed_pairing_frozen_values():
    assert lambda_dot_exceptional_closed(2, (3, 2, 2, 2), (1, 0, 0, 0)) == 0
    assert lambda_dot_exceptional_closed(2, (3, 2, 2, 2), (0, 1, 0, 0)) == 1
    # d = 1 pins gamma = mu, and the pairing is always -1 there
    assert lambda_dot_exceptional_closed(1, (1, 2, 0, 0), (1, 2, 0, 0)) == -1
    assert lambda_dot_exceptional_closed(3, (7, 2, 0, 0), (1, 0, 0, 0)) \
        == Fraction(-1)


def test_closed_pairing_matches_direct_dot():
    lam = lambda_class(REF)
    for alpha in ((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 1, 0), (2, 1, 1, 1),
                  (3, 0, 0, 0), (1, 2, 2, 2)):
        direct = Fraction(
            lam.pullback.dot(exceptional_class(alpha).pullback), 2)
        assert lambda_dot_exceptional_closed(2, REF.gamma, alpha) == direct


def test_thresholds():
    assert thresholds(1) == (4, 2)
    assert thresholds(2) == (12, 6)
    assert thresholds(3) == (28, 18)


def test_scan_box_reference():
    scan = scan_box((3, 2, 2, 2), 2, (1, 0, 0, 0))
    assert scan.min_k0 == 12
    assert scan.argmin_k0 == ((0, 1, 1, 1), (1, 0, 0, 0), (2, 1, 1, 1))
    assert scan.min_other == 6
    assert scan.argmin_other == ((1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0))


def test_scan_box_radius_floor():
    with pytest.raises(DomainError):
        scan_box((3, 2, 2, 2), 2, (1, 0, 0, 0), radius=1)


def test_scan_box_engines_agree():
    for gamma, d, mu in (((3, 2, 2, 2), 2, (1, 0, 0, 0)),
                         ((7, 2, 0, 0), 3, (1, 0, 0, 0)),
                         ((5, 4, 4, 4), 3, (1, 0, 0, 0))):
        fast = scan_box(gamma, d, mu, engine="numpy")
        pure = scan_box(gamma, d, mu, engine="pure")
        assert fast == pure


def test_scan_box_huge_entries_use_pure_path():
    # residuals near 2**31 overflow int64 squares; the scan must not
    big = 1 << 31
    gamma = (big + 1, big, big, big)
    d = 1
    scan = scan_box(gamma, d, gamma, radius=2)
    assert scan.min_k0 == 0 or scan.min_other == 0


def test_nef_check_mode_validation():
    with pytest.raises(DomainError):
        nef_check(REF, mode="fast")


def test_nef_reference_spec():
    report = nef_check(REF, mode="both")
    assert report.is_nef()
    assert report.agreement is True
    assert report.failing_constraint is None
    assert report.witness is None
    assert report.boundary_contacts == (
        (0, 1, 1, 1), (1, 0, 0, 0), (1, 0, 1, 1),
        (1, 1, 0, 1), (1, 1, 1, 0), (2, 1, 1, 1))
    assert all(c.passed for c in report.conditions)
    assert [c.id for c in report.conditions] == \
        ["eps-norm", "eps-sum", "eps-pair"]


def test_not_nef_spec():
    spec = LambdaSpec(6, 3, (7, 2, 0, 0))
    report = nef_check(spec, mode="both")
    assert not report.is_nef()
    assert report.agreement is True
    assert report.failing_constraint == "eps-norm"
    assert report.witness == (1, 0, 0, 0)


def test_degree_one_is_never_nef():
    spec = LambdaSpec(2, 1, (1, 2, 0, 0))
    report = nef_check(spec, mode="both")
    assert not report.is_nef()
    assert report.witness == (1, 2, 0, 0)


def test_single_modes():
    closed = nef_check(REF, mode="closed")
    assert closed.is_nef() and closed.agreement is None
    assert closed.boundary_contacts == ()
    brute = nef_check(REF, mode="brute")
    assert brute.is_nef() and brute.conditions == ()


def test_pair_readings_differ_on_synthetic_decomposition():
    # eps would need gamma with a coordinate residue of 4, impossible at
    # d = 3 through decompose_type, so build the record by hand
    dec = Decomposition(mu=(1, 0, 0, 0), eps=(2, 2, 0, 0),
                        nat_mu=(2, 1, 1, 1), flat_mu_set=((2, 1, 0, 0),))
    factored = closed_conditions(dec, 3, pair_reading="factored")
    literal = closed_conditions(dec, 3, pair_reading="literal")
    f_pair = next(c for c in factored if c.id == "eps-pair")
    l_pair = next(c for c in literal if c.id == "eps-pair")
    assert not f_pair.passed and f_pair.lhs == 20 and f_pair.rhs == 16
    assert l_pair.passed and l_pair.lhs == 4
    with pytest.raises(DomainError):
        closed_conditions(dec, 3, pair_reading="loose")


def test_char_p_boundary_and_exclusion():
    REF.check_char_p(3)          # gamma^(1) = 9 = p * w exactly
    with pytest.raises(CharPExcluded):
        LambdaSpec(6, 2, (3, 4, 2, 2)).check_char_p(3)
    # at p = 3 the contact (2,1,1,1) has alpha^(1) = 5 > p and drops out
    report = nef_check(REF, mode="brute", p=3)
    assert report.is_nef()
    assert (2, 1, 1, 1) not in report.boundary_contacts
    assert (1, 0, 0, 0) in report.boundary_contacts


def test_minimizer_claim_reference():
    rep = verify_minimizer_claim(REF)
    assert rep.holds
    assert rep.min_value == 0
    assert rep.counterexamples == ()
    names = {name for name, _, _ in rep.candidates}
    assert "mu" in names and "nat_mu" in names
    assert rep.to_dict()["min_value"] == 0


def test_z_divisor_reference():
    zd = z_divisor(REF)
    assert zd.anomalies == ()
    assert [(c.alpha, c.k) for c in zd.components] == [
        ((1, 0, 1, 1), 1), ((1, 1, 0, 1), 2), ((1, 1, 1, 0), 3)]


def test_z_divisor_requires_nef():
    with pytest.raises(NotNef):
        z_divisor(LambdaSpec(6, 3, (7, 2, 0, 0)))


def test_linear_system_dims():
    assert linear_system_dims(REF) == (2, 0)
    assert linear_system_dims(LambdaSpec(8, 3, (5, 4, 4, 4))) == (4, 1)
    with pytest.raises(AnticanonicalDegreeTooSmall):
        linear_system_dims(LambdaSpec(2, 1, (1, 2, 0, 0)))
    with pytest.raises(NotNef):
        linear_system_dims(LambdaSpec(6, 3, (7, 2, 0, 0)))


def test_moduli_dimension():
    assert moduli_dimension(LambdaSpec(2, 1, (1, 2, 0, 0))) == 0
    assert moduli_dimension(REF) == 1
    assert moduli_dimension(LambdaSpec(8, 3, (5, 4, 4, 4))) == 2
    with pytest.raises(NotNef):
        moduli_dimension(LambdaSpec(6, 3, (7, 2, 0, 0)))


@st.composite
def valid_specs(draw):
    """A valid rho = 1 spec from free (d, mu) plus a congruent eps.

    gamma_i = w*mu_i + 2*eps_i shares the parity of mu_i, so the type
    parity law is imposed on mu directly; draws that miss the square-sum
    congruence or force n < 1 come back as None and are skipped.
    """
    d = draw(st.integers(1, 4))
    w = 2 * d - 1
    t = draw(st.integers(0, 1))
    mu = tuple(2 * draw(st.integers(0, 2))
               + ((1 - t) if i == 0 else t) for i in range(4))
    eps = []
    for i in range(4):
        lo = -min(d - 1, (w * mu[i]) // 2)
        e = draw(st.integers(lo, d - 1))
        eps.append(e)
    gamma = tuple(w * m + 2 * e for m, e in zip(mu, eps))
    if any(g < 0 for g in gamma):
        return None
    if (4 * sum(e * e for e in eps) - 3) % w:
        return None
    n = n_for_type(d, gamma)
    if n is None or n < 1:
        return None
    return LambdaSpec(n, d, gamma)


@given(valid_specs())
@settings(max_examples=200, deadline=None)
def test_decomposition_reconstructs_gamma(spec):
    if spec is None:
        return
    dec = decompose_type(spec.gamma, spec.d)
    w = spec.w
    assert tuple(w * m + 2 * e for m, e in zip(dec.mu, dec.eps)) == spec.gamma
    assert all(abs(e) <= spec.d - 1 for e in dec.eps)
    assert all(m >= 0 for m in dec.mu)


@given(valid_specs(), st.tuples(st.integers(0, 4), st.integers(0, 4),
                                st.integers(0, 4), st.integers(0, 4)))
@settings(max_examples=200, deadline=None)
def test_closed_pairing_is_half_pullback_dot(spec, alpha):
    if spec is None or sum(alpha) % 2 == 0:
        return
    direct = Fraction(
        lambda_class(spec).pullback.dot(exceptional_class(alpha).pullback), 2)
    assert lambda_dot_exceptional_closed(spec.d, spec.gamma, alpha) == direct


@given(valid_specs())
@settings(max_examples=60, deadline=None)
def test_routes_agree_on_random_specs(spec):
    if spec is None:
        return
    report = nef_check(spec, mode="both")
    assert report.agreement is True


@given(valid_specs())
@settings(max_examples=40, deadline=None)
def test_scan_is_radius_stable(spec):
    if spec is None:
        return
    dec = decompose_type(spec.gamma, spec.d)
    a = scan_box(spec.gamma, spec.d, dec.mu, radius=2)
    b = scan_box(spec.gamma, spec.d, dec.mu, radius=5)
    assert (a.min_k0, a.min_other) == (b.min_k0, b.min_other)
