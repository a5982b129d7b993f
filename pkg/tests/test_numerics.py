import math

import numpy as np
import pytest

from casimirgrav.errors import ConvergenceError, DivergentSeriesError, DomainError
from casimirgrav.numerics import (
    Interval,
    QuadratureSpec,
    central_diff,
    default_step,
    integrate_1d,
    integrate_nd,
    richardson_extrapolate,
    tail_bounded_power_sum,
)


def test_integrate_polynomial_exact():
    res = integrate_1d(lambda x: x * x, Interval(0.0, 1.0))
    assert res.value == pytest.approx(1.0 / 3.0, abs=1e-16)


def test_integrate_sin():
    res = integrate_1d(math.sin, Interval(0.0, math.pi))
    assert abs(res.value - 2.0) <= 1e-9
    assert abs(res.value - 2.0) <= max(res.error_bound, 1e-14)


def test_integrate_semi_infinite_bose_tail():
    # int_0^inf 2 t^3/(e^{2 pi t}-1) dt = 2 Gamma(4) zeta(4) / (2 pi)^4 = 1/120
    def f(t):
        w = 2.0 * math.pi * t
        return 2.0 * t ** 3 / math.expm1(w) if w < 700.0 else 0.0

    res = integrate_1d(f, Interval(0.0, math.inf, decay_rate=2.0 * math.pi))
    assert res.value == pytest.approx(1.0 / 120.0, rel=1e-9)


def test_semi_infinite_requires_decay_hint():
    with pytest.raises(DomainError):
        Interval(0.0, math.inf)
    with pytest.raises(DomainError):
        Interval(0.0, math.inf, decay_rate=-1.0)


def test_interval_ordering_validated():
    with pytest.raises(DomainError):
        Interval(1.0, 1.0)
    with pytest.raises(DomainError):
        Interval(2.0, 1.0)


def test_quadrature_spec_validated():
    with pytest.raises(DomainError):
        QuadratureSpec(relative_tolerance=0.5)
    with pytest.raises(DomainError):
        QuadratureSpec(relative_tolerance=-1e-9)
    with pytest.raises(DomainError):
        QuadratureSpec(base_order=2)
    with pytest.raises(DomainError):
        QuadratureSpec(max_subdivisions=0)


def test_integrand_nan_raises():
    with pytest.raises(DomainError):
        integrate_1d(lambda x: float("nan"), Interval(0.0, 1.0))


def test_nonconvergence_raises():
    spec = QuadratureSpec(relative_tolerance=1e-9, max_subdivisions=1, base_order=4)
    with pytest.raises(ConvergenceError):
        integrate_1d(lambda x: math.sin(57.0 * x) + 2.0, Interval(0.0, 10.0), spec)


def test_quadrature_linearity():
    spec = QuadratureSpec()
    iv = Interval(0.0, 2.0)
    a, b = 2.5, -1.3
    combined = integrate_1d(lambda x: a * math.sin(x) + b * math.exp(-x), iv, spec)
    parts = a * integrate_1d(math.sin, iv, spec).value + b * integrate_1d(
        lambda x: math.exp(-x), iv, spec
    ).value
    assert abs(combined.value - parts) <= 2.0 * spec.relative_tolerance * abs(parts)


def test_polynomial_exactness_up_to_rule_degree():
    rng = np.random.default_rng(7)
    order = 4
    coeffs = rng.uniform(-2.0, 2.0, size=2 * order)  # degree 2*order - 1
    lo, hi = -1.0, 2.0
    exact = sum(
        c / (k + 1) * (hi ** (k + 1) - lo ** (k + 1)) for k, c in enumerate(coeffs)
    )
    res = integrate_1d(
        lambda x: sum(c * x ** k for k, c in enumerate(coeffs)),
        Interval(lo, hi),
        QuadratureSpec(base_order=order),
    )
    np.testing.assert_allclose(res.value, exact, rtol=1e-13)


def test_integrate_nd_volume():
    res = integrate_nd(lambda x, y: 1.0, [Interval(0.0, 1.0), Interval(0.0, 1.0)])
    assert res.value == pytest.approx(1.0, abs=1e-15)


def test_integrate_nd_odd_symmetry():
    res = integrate_nd(lambda x, y: x * y, [Interval(-1.0, 1.0), Interval(-1.0, 1.0)])
    assert abs(res.value) <= 1e-14


def test_integrate_nd_hand_integrated():
    res = integrate_nd(lambda x, y: x + y, [Interval(0.0, 1.0), Interval(0.0, 2.0)])
    assert res.value == pytest.approx(3.0, rel=1e-12)


def test_integrate_nd_three_axes():
    box = [Interval(0.0, 1.0)] * 3
    res = integrate_nd(lambda x, y, z: x * y * z, box)
    assert res.value == pytest.approx(0.125, rel=1e-12)


def test_integrate_nd_rejects_bad_boxes():
    with pytest.raises(DomainError):
        integrate_nd(lambda *xs: 1.0, [Interval(0.0, 1.0)] * 4)
    with pytest.raises(DomainError):
        integrate_nd(lambda x: 1.0, [Interval(0.0, math.inf, decay_rate=1.0)])
    with pytest.raises(DomainError):
        integrate_nd(lambda: 1.0, [])


def test_central_diff_quadratic_exact():
    for h in (1.0, 0.1, 1e-4):
        assert central_diff(lambda x: x * x, 3.0, h) == pytest.approx(6.0, rel=1e-10)


def test_central_diff_constant():
    assert central_diff(lambda x: 4.2, 0.7, 1e-3) == 0.0


def test_central_diff_cubic_truncation():
    # truncation term h^2 f'''/6 = h^2 for f = x^3
    err = abs(central_diff(lambda x: x ** 3, 1.0, 1e-4) - 3.0)
    assert err == pytest.approx(1e-8, rel=1e-3)


def test_central_diff_observed_order_two():
    f = lambda x: x ** 3 - 2.0 * x ** 2 + 0.5 * x
    h = 1e-3
    e1 = abs(central_diff(f, 1.3, h) - (3 * 1.3 ** 2 - 4 * 1.3 + 0.5))
    e2 = abs(central_diff(f, 1.3, h / 2) - (3 * 1.3 ** 2 - 4 * 1.3 + 0.5))
    assert abs(math.log2(e1 / e2) - 2.0) < 0.05


def test_central_diff_default_step():
    assert default_step(0.0) == 1e-5
    assert default_step(100.0) == pytest.approx(1e-3)
    assert central_diff(lambda x: x * x, 3.0) == pytest.approx(6.0, rel=1e-9)


def test_central_diff_domain_error():
    with pytest.raises(DomainError):
        central_diff(lambda x: math.sqrt(x) if x >= 0 else float("nan"), 0.0, 0.5)
    with pytest.raises(DomainError):
        central_diff(lambda x: x, 0.0, 0.0)


def test_tail_sum_zeta4():
    target = math.pi ** 4 / 90.0
    for n in (10, 100, 1000):
        res = tail_bounded_power_sum(4.0, 1.0, n)
        assert abs(res.value - target) <= res.error_bound
    res = tail_bounded_power_sum(4.0, 1.0, 100)
    assert res.error_bound == pytest.approx(1.0 / (3.0 * 100 ** 3))


def test_tail_sum_zeta2():
    res = tail_bounded_power_sum(2.0, 1.0, 5000)
    assert abs(res.value - math.pi ** 2 / 6.0) <= res.error_bound


def test_tail_sum_zero_scale():
    res = tail_bounded_power_sum(4.0, 0.0, 17)
    assert res.value == 0.0
    assert res.error_bound == 0.0
    assert res.terms_used == 17


def test_tail_sum_divergent():
    with pytest.raises(DivergentSeriesError):
        tail_bounded_power_sum(1.0, 1.0, 10)
    with pytest.raises(DivergentSeriesError):
        tail_bounded_power_sum(0.5, 1.0, 10)


@pytest.mark.parametrize("p", [2.0, 3.0, 4.0, 5.0])
@pytest.mark.parametrize("n", [10, 100, 1000])
def test_tail_bound_honored_by_refinement(p, n):
    coarse = tail_bounded_power_sum(p, 1.0, n)
    fine = tail_bounded_power_sum(p, 1.0, 2 * n)
    assert abs(coarse.value - fine.value) <= coarse.error_bound


def test_richardson_eliminates_leading_term():
    v0, c = 3.7, -2.1
    samples = [(h, v0 + c * h ** 2) for h in (0.4, 0.1)]
    assert richardson_extrapolate(samples, 2) == pytest.approx(v0, abs=1e-14)


def test_richardson_constant_samples():
    assert richardson_extrapolate([(0.2, 5.0), (0.1, 5.0), (0.05, 5.0)], 2) == 5.0


def test_richardson_improves_on_samples():
    f = lambda h: 1.0 + h ** 2 + h ** 4
    est = richardson_extrapolate([(0.1, f(0.1)), (0.05, f(0.05))], 2)
    assert abs(est - 1.0) < abs(f(0.05) - 1.0)
    assert est == pytest.approx(1.0 - 0.1 ** 2 * 0.05 ** 2, abs=1e-15)


def test_richardson_full_tableau_is_exact_for_matching_series():
    f = lambda h: 1.0 + h ** 2 + h ** 4
    est = richardson_extrapolate([(0.2, f(0.2)), (0.1, f(0.1)), (0.05, f(0.05))], 2)
    assert est == pytest.approx(1.0, abs=1e-13)


def test_richardson_validation():
    with pytest.raises(DomainError):
        richardson_extrapolate([(0.1, 1.0)], 2)
    with pytest.raises(DomainError):
        richardson_extrapolate([(0.1, 1.0), (0.1, 2.0)], 2)
    with pytest.raises(DomainError):
        richardson_extrapolate([(0.1, 1.0), (-0.2, 2.0)], 2)
