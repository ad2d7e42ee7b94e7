"""Cover invariants: the parity law, quotient genus, the full report,
factorization, and the degree/genus bounds."""

import json

import pytest
from hypothesis import given, strategies as st

from osculant import (
    CoverInvariants,
    DomainError,
    NegativeGenus,
    NotDivisible,
    RhoEven,
    RhoOutOfRange,
    factorization_relations,
    genus_tilde,
    max_genus_dominated,
    osculating_bound,
    perp_genus_identity,
    validate_cover,
    validate_type,
)
from osculant.errors import DegreeTooSmall


def test_type_parity():
    assert validate_type(4, (3, 2, 2, 2)) == []
    assert validate_type(2, (1, 0, 0, 2)) == []
    violations = validate_type(2, (2, 0, 0, 2))
    assert len(violations) == 1 and "gamma_0" in violations[0]


def test_genus_tilde_values():
    assert genus_tilde(4, 2, 1, 1, (3, 2, 2, 2)) == 0
    # gamma^(2) = 25+12 = 37, right side 18+3-37 < 0
    with pytest.raises(NegativeGenus):
        genus_tilde(4, 2, 1, 1, (5, 2, 2, 2))
    # right side 24+3-21 = 6 is not a multiple of 4
    with pytest.raises(NotDivisible):
        genus_tilde(5, 2, 1, 1, (3, 2, 2, 2))


def test_full_report_passes_on_reference_cover():
    inv = CoverInvariants(n=4, d=2, g=4, g_tilde=0, rho=1, m=1,
                          gamma=(3, 2, 2, 2))
    report = validate_cover(inv)
    assert report.ok
    assert report.minimal
    assert report.failed() == []
    ids = [c.id for c in report.checks]
    for expected in ("rho-odd", "rho-range", "m-divides", "type-parity",
                     "genus-le-type-sum", "quotient-genus",
                     "type-norm-bound", "genus-square", "unramified-m",
                     "unramified-genus-square", "max-genus"):
        assert expected in ids


def test_report_json_shape():
    inv = CoverInvariants(n=4, d=2, g=4, g_tilde=0, rho=1, m=1,
                          gamma=(3, 2, 2, 2))
    payload = validate_cover(inv).to_dict()
    text = json.dumps(payload)
    assert json.loads(text)["minimal"] is True
    row = payload["checks"][0]
    assert set(row) >= {"id", "pass", "lhs", "rhs"}


def test_report_flags_violations_as_data():
    inv = CoverInvariants(n=4, d=2, g=9, g_tilde=0, rho=1, m=1,
                          gamma=(3, 2, 2, 2))
    report = validate_cover(inv)
    assert not report.ok
    failed = {c.id for c in report.failed()}
    assert "genus-le-type-sum" in failed
    assert "max-genus" in failed


def test_informational_row_never_rejects():
    inv = CoverInvariants(n=4, d=2, g=4, g_tilde=0, rho=1, m=1,
                          gamma=(3, 2, 2, 2))
    report = validate_cover(inv)
    weak = next(c for c in report.checks if c.id == "genus-square-weak")
    assert weak.informational
    assert weak.to_dict().get("informational") is True


def test_char_p_row_only_when_configured():
    inv = CoverInvariants(n=4, d=2, g=4, g_tilde=0, rho=1, m=1,
                          gamma=(3, 2, 2, 2))
    ids = {c.id for c in validate_cover(inv).checks}
    assert "char-p-type-sum" not in ids
    with_p = validate_cover(inv, p=3)
    row = next(c for c in with_p.checks if c.id == "char-p-type-sum")
    assert row.passed and row.lhs == 9 and row.rhs == 9


def test_stored_quotient_genus_is_cross_checked():
    inv = CoverInvariants(n=4, d=2, g=4, g_tilde=1, rho=1, m=1,
                          gamma=(3, 2, 2, 2))
    report = validate_cover(inv)
    row = next(c for c in report.checks if c.id == "quotient-genus")
    assert not row.passed


def test_factorization():
    assert factorization_relations(5, 7, 3) == (2, 2)
    assert factorization_relations(5, 7, 1) == (5, 7)
    with pytest.raises(NotDivisible):
        factorization_relations(5, 7, 2)
    with pytest.raises(NotDivisible):
        factorization_relations(4, 7, 3)
    with pytest.raises(NotDivisible):
        factorization_relations(5, 6, 3)


def test_osculating_bound():
    assert osculating_bound(4, 4) == 2
    assert osculating_bound(2, 3) == 3
    assert osculating_bound(2, 0) == 1
    with pytest.raises(DegreeTooSmall):
        osculating_bound(1, 3)


def test_max_genus_dominated():
    assert max_genus_dominated(4, 1) == 7
    assert max_genus_dominated(3, 5) == 3
    with pytest.raises(RhoEven):
        max_genus_dominated(4, 2)
    with pytest.raises(RhoOutOfRange):
        max_genus_dominated(4, -1)


def test_perp_genus_identity_reference():
    lhs, rhs = perp_genus_identity(4, 2, 1, (3, 2, 2, 2))
    assert lhs == rhs == 4


@given(st.integers(1, 6), st.integers(0, 3), st.integers(0, 3),
       st.integers(0, 3), st.integers(0, 3))
def test_parity_law_characterization(n, a, b, c, e):
    gamma = (2 * a + (n + 1) % 2, 2 * b + n % 2, 2 * c + n % 2,
             2 * e + n % 2)
    assert validate_type(n, gamma) == []


def test_genus_tilde_requires_positive_m():
    with pytest.raises(DomainError):
        genus_tilde(4, 2, 1, 0, (3, 2, 2, 2))
