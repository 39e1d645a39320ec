"""Acceptance gate: one test per criterion, each printing its PASS/FAIL line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines,
or `nc report-all` for the same suite through the CLI.
"""

import pytest

from qpainleve import acceptance


def _check(fn):
    res = fn()
    print(res.line())
    assert res.passed, res.details
    return res


def test_criterion_01_casimir_all_types():
    _check(acceptance.criterion_1)


def test_criterion_02_pbw_confluence_and_dims():
    _check(acceptance.criterion_2)


def test_criterion_03_potential_consistency():
    _check(acceptance.criterion_3)


def test_criterion_04_compatibility_identities():
    _check(acceptance.criterion_4)


def test_criterion_05_deformed_cubic_casimir():
    _check(acceptance.criterion_5)


def test_criterion_06_embedding_limit():
    _check(acceptance.criterion_6)


def test_criterion_07_generalized_and_conformal_casimirs():
    _check(acceptance.criterion_7)


def test_criterion_08_sklyanin_type_algebra():
    _check(acceptance.criterion_8)


def test_criterion_09_shear_realizations():
    _check(acceptance.criterion_9)


def test_criterion_10_confluence_rescaling():
    _check(acceptance.criterion_10)


def test_criterion_11_semiclassical_limits():
    _check(acceptance.criterion_11)


def test_criterion_12_hilbert_series_classification():
    _check(acceptance.criterion_12)


def test_criterion_13_vertex_quantizations():
    _check(acceptance.criterion_13)


def test_criterion_14_rescaling_degenerations():
    _check(acceptance.criterion_14)


def test_criterion_15_poisson_structural_suite():
    _check(acceptance.criterion_15)
