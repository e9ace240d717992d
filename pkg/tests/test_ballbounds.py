"""Radius-formula tests: recursion, closed form, corollaries, conversions."""

import math

import pytest

from sepball import ballbounds


def test_bipartite_base_case():
    assert ballbounds.recursion_radius((2, 2)) == 1.0
    assert ballbounds.recursion_radius((3, 5)) == 1.0


def test_tripartite_qubits():
    assert ballbounds.recursion_radius((2, 2, 2)) == pytest.approx(
        math.sqrt(4.0 / 5.0), abs=1e-15
    )


def test_four_qubits():
    # [DERIVED] third recursion step: a^2 = (4/5)*4 / (2*(1-1/10)+1) = 4/7
    assert ballbounds.recursion_radius((2, 2, 2, 2)) == pytest.approx(
        math.sqrt(4.0 / 7.0), abs=1e-14
    )


def test_recursion_order_sensitivity():
    # the fold is defined left to right; permuted dims may differ
    # [DERIVED] (2,3,4): 4/(2*(5/6)*3+1) = 2/3; (4,3,2): 2/(2*(11/12)+1) = 12/17
    a = ballbounds.recursion_radius((2, 3, 4))
    b = ballbounds.recursion_radius((4, 3, 2))
    assert a == pytest.approx(math.sqrt(2.0 / 3.0), abs=1e-14)
    assert b == pytest.approx(math.sqrt(12.0 / 17.0), abs=1e-14)
    assert a != b


def test_closed_form_matches_recursion_grid():
    for d0 in range(2, 7):
        for m in range(2, 13):
            rec = ballbounds.recursion_radius((d0,) * m)
            cf = ballbounds.closed_form_radius(d0, m)
            assert abs(rec - cf) <= 1e-12 * cf


def test_closed_form_three_qutrits():
    # [DERIVED] sqrt(27 / (5 * 8 + 1)) = sqrt(27/41)
    assert ballbounds.closed_form_radius(3, 3) == pytest.approx(
        math.sqrt(27.0 / 41.0), abs=1e-14
    )


def test_log_closed_form_large_m():
    # qubits: r_m = sqrt(2^m / (3^(m-1) + 1)); check the log form at m = 200
    m = 200
    want = 0.5 * (m * math.log(2.0) - math.log(3.0) * (m - 1))
    got = ballbounds.log_closed_form_radius(2, m)
    assert got == pytest.approx(want, abs=1e-12)


def test_qubit_asymptotic_exponent():
    g = ballbounds.qubit_asymptotic_exponent()
    assert g == pytest.approx(0.29248125, abs=1e-8)
    # rescaled radius increases monotonically toward sqrt(3)
    vals = [
        math.exp(ballbounds.log_closed_form_radius(2, m) + g * m * math.log(2.0))
        for m in (5, 10, 20, 40)
    ]
    assert all(x < y for x, y in zip(vals, vals[1:]))
    assert abs(vals[-1] - math.sqrt(3.0)) < 1e-12


def test_weak_radius_below_recursion():
    for d0 in (2, 3, 4):
        for m in (3, 5, 8):
            assert ballbounds.weak_radius(d0, m) <= ballbounds.closed_form_radius(
                d0, m
            ) + 1e-15


def test_gb03_baseline():
    assert ballbounds.gb03_baseline(2) == 1.0
    assert ballbounds.gb03_baseline(4) == 0.5
    # the newer bound beats the baseline strictly for m >= 3 qubits
    for m in range(3, 12):
        assert ballbounds.closed_form_radius(2, m) > ballbounds.gb03_baseline(m)


def test_normalized_radius():
    # a = 1, d = 4: 1/sqrt(4*3) = 1/(2 sqrt 3)
    assert ballbounds.normalized_radius(1.0, 4) == pytest.approx(
        1.0 / (2.0 * math.sqrt(3.0)), abs=1e-15
    )
    with pytest.raises(ValueError):
        ballbounds.normalized_radius(2.0, 4)


def test_qubit_normalized_identity():
    for m in range(2, 13):
        lhs = ballbounds.qubit_normalized_radius(m)
        rhs = ballbounds.closed_form_radius(2, m) / 2**m
        assert abs(lhs - rhs) <= 1e-12 * rhs


def test_log_normalized_radius_consistency():
    for a, d in [(1.0, 4), (0.8, 8), (0.5, 100)]:
        want = math.log(ballbounds.normalized_radius(a, d))
        got = ballbounds.log_normalized_radius(math.log(a), math.log(d))
        assert got == pytest.approx(want, abs=1e-12)


def test_gamma_lambda_bounds():
    # [DERIVED] gamma_bound(2, 4, 1) = sqrt((2*(3/4)+1)/2) = sqrt(5)/2
    assert ballbounds.gamma_bound(2, 4, 1.0) == pytest.approx(
        math.sqrt(5.0) / 2.0, abs=1e-15
    )
    # lambda at a=1, d2=4: sqrt(2*(3/4)) = sqrt(3/2)
    assert ballbounds.lambda_bound(1.0, 4) == pytest.approx(
        math.sqrt(1.5), abs=1e-15
    )
    # lambda' at a=1, d2=4: sqrt(2 - 1/4)
    assert ballbounds.lambdaprime_bound(1.0, 4) == pytest.approx(
        math.sqrt(7.0) / 2.0, abs=1e-15
    )
    # premise a > 1/d2 enforced
    with pytest.raises(ValueError):
        ballbounds.gamma_bound(2, 4, 0.25)


def test_radius_report_methods():
    rep = ballbounds.radius_report((2, 2, 2), "recursion")
    assert rep.unnormalized_radius == pytest.approx(math.sqrt(0.8), abs=1e-14)
    assert rep.normalized_radius == pytest.approx(
        ballbounds.normalized_radius(math.sqrt(0.8), 8), abs=1e-15
    )
    with pytest.raises(ValueError):
        ballbounds.radius_report((2, 3), "closed_form")
    with pytest.raises(ValueError):
        ballbounds.radius_report((2, 2), "no_such_method")
