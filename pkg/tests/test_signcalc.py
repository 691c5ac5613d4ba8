"""Pure sign-table calculus: grids, annotations, scenarios, consistency scans."""

import pytest

from kocalc.products import ProductMode
from kocalc.signcalc import (
    MATRIX_REPRESENTATIVES,
    additivity_scan,
    case_annotations,
    enumerate_compatible,
    matrix_calculus_agreement,
    scenario_check,
)
from kocalc.triples import SignTriple

EVEN = (0, 2, 4, 6)
ODD = (1, 3, 5, 7)


def entry_map(sigma1, mode):
    return {e.sigma2: e for e in enumerate_compatible(sigma1, mode)}


# --- natural-mode grid -----------------------------------------------------------


@pytest.mark.parametrize("sigma1", EVEN)
def test_natural_even_grid(sigma1):
    entries = entry_map(sigma1, ProductMode.NATURAL)
    for sigma2 in EVEN:
        e = entries[sigma2]
        if sigma1 in (0, 4):
            assert e.compatible and not e.without_chirality
            assert e.sigma_product == (sigma1 + sigma2) % 8
            assert e.signs is not None and e.signs.eps_dprime is not None
        else:
            assert not e.compatible and not e.undefined
            assert "eps1' = eps1''*eps2'" in e.violated_relation


@pytest.mark.parametrize("sigma1", EVEN)
def test_natural_odd_grid(sigma1):
    entries = entry_map(sigma1, ProductMode.NATURAL)
    expected = {0: (1, 5), 4: (1, 5), 2: (3, 7), 6: (3, 7)}[sigma1]
    compatible = tuple(s for s in ODD if entries[s].compatible)
    assert compatible == expected
    for sigma2 in compatible:
        e = entries[sigma2]
        # an odd second factor removes the product chirality
        assert e.without_chirality
        assert e.status == "compatible-without-chirality"
        assert e.signs.eps_dprime is None
        assert e.sigma_product == (sigma1 + sigma2) % 8


# --- modified-mode grid ------------------------------------------------------------


@pytest.mark.parametrize("sigma1", EVEN)
def test_modified_even_grid(sigma1):
    entries = entry_map(sigma1, ProductMode.MODIFIED)
    for sigma2 in EVEN:
        e = entries[sigma2]
        if sigma1 in (2, 6):
            assert e.compatible
            assert e.sigma_product == (sigma1 + sigma2) % 8
        else:
            assert not e.compatible and not e.undefined


@pytest.mark.parametrize("sigma1", EVEN)
def test_modified_odd_second_factor_is_undefined(sigma1):
    entries = entry_map(sigma1, ProductMode.MODIFIED)
    for sigma2 in ODD:
        e = entries[sigma2]
        assert e.undefined
        assert e.status == "undefined"
        assert not e.compatible
        assert "chirality" in e.violated_relation


@pytest.mark.parametrize("mode", [ProductMode.NATURAL, ProductMode.MODIFIED])
@pytest.mark.parametrize("sigma1", ODD)
def test_odd_first_factor_is_undefined(sigma1, mode):
    for e in enumerate_compatible(sigma1, mode):
        assert e.undefined and not e.compatible


def test_enumerate_is_deterministic():
    a = enumerate_compatible(4, ProductMode.NATURAL)
    b = enumerate_compatible(4, ProductMode.NATURAL)
    assert a == b
    assert [e.sigma2 for e in a] == list(range(8))


def test_enumerate_rejects_out_of_range_sigma():
    with pytest.raises(ValueError):
        enumerate_compatible(8, ProductMode.NATURAL)
    with pytest.raises(ValueError):
        enumerate_compatible(-1, ProductMode.NATURAL)


# --- published-case annotations ------------------------------------------------------


def test_divergence_annotations_natural_sigma6():
    notes = case_annotations(6, ProductMode.NATURAL)
    assert len(notes) == 2
    odd_note = next(n for n in notes if "{1, 5}" in n)
    assert "{3, 7}" in odd_note
    assert "divergence" in odd_note
    sign_note = next(n for n in notes if "eps = +eps2" in n)
    assert "-eps2" in sign_note


def test_divergence_annotation_modified_sigma2():
    notes = case_annotations(2, ProductMode.MODIFIED)
    assert len(notes) == 1
    assert "-eps2*eps2''" in notes[0] or "-eps2*eps2″" in notes[0]
    assert "divergence" in notes[0]


def test_no_annotations_elsewhere():
    assert case_annotations(0, ProductMode.NATURAL) == ()
    assert case_annotations(4, ProductMode.NATURAL) == ()
    assert case_annotations(6, ProductMode.MODIFIED) == ()
    assert case_annotations(2, ProductMode.NATURAL) == ()


# --- scenarios -------------------------------------------------------------------------


def test_connes_scenario():
    report = scenario_check("connes")
    assert report.mode is ProductMode.NATURAL
    assert report.target_sigma == 6
    assert report.target_signs == SignTriple(-1, 1, -1)
    assert report.expected == {4: (2,)}


def test_barrett_scenario():
    report = scenario_check("barrett")
    assert report.mode is ProductMode.MODIFIED
    assert report.target_sigma == 0
    assert report.target_signs == SignTriple(1, 1, 1)
    assert report.expected == {2: (6,), 6: (2,)}


def test_unknown_scenario_rejected():
    with pytest.raises(ValueError):
        scenario_check("nonesuch")


# --- global scans -------------------------------------------------------------------------


def test_additivity_scan_covers_grid():
    entries = additivity_scan()  # raises AdditivityViolation on failure
    assert len(entries) == 128
    compatible = [e for e in entries if e.compatible]
    # natural: sigma1 in {0,4} x (4 even + 2 odd) = 12; modified: {2,6} x 4 even = 8
    assert len(compatible) == 20 + 4
    for e in compatible:
        assert e.sigma_product == (e.sigma1 + e.sigma2) % 8


def test_matrix_calculus_agreement_rows():
    rows = matrix_calculus_agreement()
    assert len(rows) == 32
    assert all(r.consistent for r in rows)
    statuses = {(r.mode, r.sigma1, r.sigma2): r.verification_status for r in rows}
    assert statuses[(ProductMode.NATURAL, 4, 2)] == "confirmed-compatible"
    assert statuses[(ProductMode.NATURAL, 2, 0)] == "confirmed-incompatible"
    # sigma2 = 6 representative has D = 0, so refutation cannot be concrete
    assert statuses[(ProductMode.NATURAL, 2, 6)] == "not-falsifiable"
    assert statuses[(ProductMode.MODIFIED, 2, 6)] == "confirmed-compatible"


def test_representatives_have_small_dimension():
    assert set(MATRIX_REPRESENTATIVES) == {0, 2, 4, 6}
    for sigma, (p, q) in MATRIX_REPRESENTATIVES.items():
        assert (p - q) % 8 == sigma
        assert 2 ** ((p + q) // 2) <= 4
