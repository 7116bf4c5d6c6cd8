"""Acceptance gate: one test per advertised guarantee, run at full size.

Each test prints as a single pass/fail line under pytest -v. The first four
share one full verification-suite run; its wall time is asserted in
criterion 1 so a slow engine fails the gate rather than the clock.
"""

import dataclasses
import itertools
import time
from fractions import Fraction

import pytest

from flagflow import (
    SuiteConfig,
    brute_nef,
    build_flag,
    build_root_system,
    check_ricci_identity,
    check_scalar_volume_identity,
    degree,
    flow_of_divisor,
    gt_count,
    invariants_of,
    make_flow,
    nef_value,
    rho,
    run_suite,
    weyl_dim,
)

FULL_FLAG_TYPES = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 3), ("C", 4), ("D", 4), ("F", 4), ("G", 2),
]


@pytest.fixture(scope="module")
def suite():
    return run_suite(SuiteConfig())


def test_criterion_01_scalar_equals_log_volume_derivative(suite):
    assert suite.instances >= 200
    assert suite.checks["scalar_volume_identity"]["fail"] == 0
    assert suite.checks["scalar_volume_identity"]["pass"] == suite.instances
    assert suite.wall_time_s < 60


def test_criterion_02_ricci_identity_exact_and_finite_difference(suite):
    assert suite.checks["ricci_identity_exact"]["fail"] == 0
    assert suite.checks["ricci_identity_fd"]["fail"] == 0
    assert suite.checks["ricci_identity_fd"]["pass"] == suite.instances


def test_criterion_03_bound_chain_with_einstein_saturation(suite):
    assert suite.checks["scalar_bounds"]["fail"] == 0
    assert suite.checks["ricci_bounds"]["fail"] == 0
    assert suite.checks["monotone_scalar"]["fail"] == 0
    assert suite.checks["einstein_closure"]["fail"] == 0
    # every flag contributes at least its Einstein instance
    assert suite.checks["einstein_closure"]["pass"] >= 61


def test_criterion_04_volume_sandwich_and_collapse(suite):
    assert suite.checks["volume_sandwich"]["fail"] == 0
    assert suite.checks["volume_zero_at_T"]["fail"] == 0


def test_criterion_05_fano_indices():
    for n in range(1, 5):
        rs = build_root_system("A", n)
        proj = build_flag(rs, tuple(range(2, n + 1)))
        assert proj.fano == (n + 1,), f"projective {n}-space"
    quadric = build_flag(build_root_system("B", 2), (2,))
    assert quadric.fano == (3,)
    for family, rank in FULL_FLAG_TYPES:
        full = build_flag(build_root_system(family, rank), ())
        assert full.fano == (2,) * rank, f"full flag {family}{rank}"


def test_criterion_06_degree_formula():
    for n in range(1, 4):
        rs = build_root_system("A", n)
        proj = build_flag(rs, tuple(range(2, n + 1)))
        for k in range(1, 4):
            assert degree(proj, (Fraction(k),)) == k ** n
    full = build_flag(build_root_system("A", 2), ())
    assert degree(full, (Fraction(2), Fraction(2))) == 48


def test_criterion_07_nef_value_brute_force_and_flow_time():
    import random

    rng = random.Random(20260813)
    tested = 0
    for family, rank in SuiteConfig().types:
        rs = build_root_system(family, rank)
        for size in range(rank):
            for theta in itertools.combinations(range(1, rank + 1), size):
                flag = build_flag(rs, theta)
                d = tuple(Fraction(rng.randint(1, 10)) for _ in flag.complement)
                tau = nef_value(flag, d)
                assert brute_nef(flag, d) == tau
                fs = flow_of_divisor(flag, d)
                assert fs.T * tau == 1
                tested += 1
    assert tested >= 50


def test_criterion_08_weyl_dimension_equals_pattern_count():
    start = time.monotonic()
    for rank in (1, 2, 3):
        rs = build_root_system("A", rank)
        for coords in itertools.product(range(4), repeat=rank):
            assert weyl_dim(rs, coords) == gt_count(rs, coords)
    a2 = build_root_system("A", 2)
    assert weyl_dim(a2, tuple(rho(a2))) == 8
    assert weyl_dim(a2, tuple(2 * c for c in rho(a2))) == 27
    assert time.monotonic() - start < 10


def test_criterion_09_line_on_the_projective_line():
    p1 = build_flag(build_root_system("A", 1), ())
    rep = invariants_of(p1, (Fraction(1),))
    assert rep.borel is not None
    assert rep.borel.seshadri_upper == 1
    assert rep.borel.gromov_width_upper == 1
    assert rep.borel.sympl_radius_upper == 1


def test_criterion_10_negative_controls_fail_loudly():
    flag = build_flag(build_root_system("A", 2), ())
    fs = make_flow(flag, (Fraction(1), Fraction(2)))

    bad_rates = dataclasses.replace(fs, a=(fs.a[0] + 1,) + fs.a[1:])
    out = check_scalar_volume_identity(bad_rates)
    assert not out.passed
    assert out.counterexample["check"] == "scalar_volume_identity"
    assert out.counterexample["family"] == "A"
    exact, _ = check_ricci_identity(bad_rates)
    assert not exact.passed
    assert exact.counterexample is not None

    bad_slopes = dataclasses.replace(fs, p_slope=(fs.p_slope[0] - 1,) + fs.p_slope[1:])
    assert not check_scalar_volume_identity(bad_slopes).passed
    exact2, fd2 = check_ricci_identity(bad_slopes)
    assert not exact2.passed
    assert not fd2.passed
    assert fd2.counterexample["check"] == "ricci_identity_fd"
