"""Acceptance battery: one test per criterion, in battery order.

Each test evaluates its criterion exactly (integer and rational
arithmetic throughout, so the stated tolerance is zero everywhere),
prints the criterion's own PASS/FAIL line, and asserts the result.
Five criteria share the grid sweep, built once per session.
"""

import pytest

from osculant.verify import (
    build_sweep,
    criterion_adjunction,
    criterion_census_determinism,
    criterion_construction_kit,
    criterion_contacts,
    criterion_decomposition,
    criterion_dimensions,
    criterion_exceptional_catalog,
    criterion_expression_round_trip,
    criterion_family_generators,
    criterion_minimizer,
    criterion_negative_curve_catalog,
    criterion_nef_agreement,
    criterion_pairing_closed_form,
)


@pytest.fixture(scope="session")
def sweep():
    return build_sweep()


def check(result):
    print(result.line())
    assert result.passed, result.detail


def test_01_exceptional_catalog():
    check(criterion_exceptional_catalog())


def test_02_negative_curve_catalog():
    check(criterion_negative_curve_catalog())


def test_03_pairing_closed_form():
    check(criterion_pairing_closed_form())


def test_04_nef_criterion_agreement(sweep):
    check(criterion_nef_agreement(sweep))


def test_05_family_generators():
    check(criterion_family_generators())


def test_06_adjunction_consistency(sweep):
    check(criterion_adjunction(sweep))


def test_07_dimension_formulas(sweep):
    check(criterion_dimensions(sweep))


def test_08_minimizer_claim(sweep):
    check(criterion_minimizer(sweep))


def test_09_contact_uniqueness(sweep):
    check(criterion_contacts(sweep))


def test_10_construction_kit():
    check(criterion_construction_kit())


def test_11_decomposition_uniqueness():
    check(criterion_decomposition())


def test_12_expression_round_trip():
    check(criterion_expression_round_trip())


def test_13_census_determinism():
    check(criterion_census_determinism())
