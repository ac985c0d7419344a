"""Acceptance suite: one test per criterion, each printing a pass/fail line.

All checks are exact (arbitrary-precision rationals throughout), so the
tolerance everywhere is exact equality.  The same checks back the
``skewmori verify`` command.
"""

import pytest

from skewmori import verify

CONFIG = {"n": None, "seed": 0, "bound": 100, "trials": 5}


def _criterion(number, name, check):
    ok, detail = check(CONFIG)
    print(f"{'PASS' if ok else 'FAIL'}  criterion {number:>2} ({name}): {detail}")
    assert ok, f"criterion {number} ({name}): {detail}"


def test_criterion_01_chamber_counts():
    _criterion(1, "chamber counts 2,3,5,9,15", verify.check_chamber_counts)


def test_criterion_02_sbl_region_counts():
    _criterion(2, "SBL regions 4,8,9 with the A(8) merge pattern", verify.check_sbl_regions)


def test_criterion_03_a8_chamber_ray_lists():
    _criterion(3, "explicit A(8) movable/nef chamber rays", verify.check_a8_chamber_rays)


def test_criterion_04_movable_cones():
    _criterion(4, "movable rays for n=6,7,8 and counts for n=4..13", verify.check_movable)


def test_criterion_05_cone_dualities():
    _criterion(5, "Nef=dual(Mori), Eff=dual(mov curves), sandwich", verify.check_dualities)


def test_criterion_06_fano_table():
    _criterion(6, "Fano indices and -K data", verify.check_fano)


def test_criterion_07_multiplicity_grid():
    _criterion(7, "vanishing-order grid equals max(k-h+1,0)", verify.check_multiplicity)


def test_criterion_08_secant_dimensions():
    _criterion(8, "dimension formula equals the tangent-space oracle", verify.check_secant_dims)


def test_criterion_09_cox_generators():
    _criterion(9, "Cox generator totals and multiplicities", verify.check_cox)


def test_criterion_10_region_conjecture():
    _criterion(10, "region counts/labels outside the movable cone", verify.check_conjecture)


def test_criterion_11_property_suites():
    _criterion(11, "exact randomized property suites", verify.check_properties)


def test_full_verify_run_is_green():
    report = verify.run()
    assert report["passed"] == report["total"] == len(verify.CRITERIA)
