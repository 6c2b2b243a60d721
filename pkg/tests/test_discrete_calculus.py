import numpy as np
import pytest

from gridfourier import (
    GridFunction,
    build_grid,
    derivative,
    ftc_residual,
    integrate,
    parts_residual,
    product_rule_residual,
    sample,
    shift,
)


def _random_gf(rng, n):
    return GridFunction(build_grid(n), rng.uniform(-1, 1, 2 * n) + 1j * rng.uniform(-1, 1, 2 * n))


def test_derivative_of_identity():
    out = derivative(sample(lambda x: x, build_grid(4)))
    assert np.allclose(out.values[:-1], 1.0)
    assert out.values[-1] == 0.0


def test_derivative_of_constant():
    out = derivative(sample(lambda x: 3.0 - 2.0j, build_grid(5)))
    assert out.max_abs() == 0.0


def test_derivative_of_square():
    out = derivative(sample(lambda x: x * x, build_grid(2)))
    assert out.at(-2) == pytest.approx(2 * (0.25 - 1.0))  # -3/2


def test_shift_of_identity():
    out = shift(sample(lambda x: x, build_grid(2)))
    assert np.allclose(out.values, [-0.5, 0.0, 0.5, 0.0])


def test_shift_zeros():
    out = shift(GridFunction(build_grid(3), np.zeros(6)))
    assert out.max_abs() == 0.0


def test_double_shift():
    gf = GridFunction(build_grid(2), [1.0, 2.0, 3.0, 4.0])
    out = shift(shift(gf))
    assert np.allclose(out.values, [3.0, 4.0, 0.0, 0.0])


def test_ftc_identity_by_hand():
    gf = sample(lambda x: x, build_grid(4))
    assert integrate(derivative(gf)) == pytest.approx(7 / 4)
    assert gf.at(3) - gf.at(-4) == pytest.approx(7 / 4)
    assert ftc_residual(gf) == 0


def test_ftc_constant():
    assert ftc_residual(sample(lambda x: 1.5j, build_grid(6))) == 0


@pytest.mark.parametrize("n", [2, 8, 32])
def test_ftc_random(n):
    rng = np.random.default_rng(10 + n)
    for _ in range(64):
        gf = _random_gf(rng, n)
        assert abs(ftc_residual(gf)) <= 1e-12 * n * gf.max_abs()


def test_product_rule_constants():
    u = sample(lambda x: 1.0, build_grid(3))
    assert product_rule_residual(u, u).max_abs() == 0.0


def test_product_rule_identity_function():
    u = sample(lambda x: x, build_grid(2))
    assert product_rule_residual(u, u).max_abs() == 0.0


def test_product_rule_random():
    rng = np.random.default_rng(16)
    n = 16
    for _ in range(32):
        u, v = _random_gf(rng, n), _random_gf(rng, n)
        res = product_rule_residual(u, v).max_abs()
        assert res <= 1e-11 * n * u.max_abs() * v.max_abs()


def test_alternate_product_rule_also_exact():
    # (u v)' = u' v + shift(u) v' is the equivalent expansion
    rng = np.random.default_rng(17)
    n = 16
    u, v = _random_gf(rng, n), _random_gf(rng, n)
    alt = derivative(u * v) - (derivative(u) * v + shift(u) * derivative(v))
    assert alt.max_abs() <= 1e-11 * n * u.max_abs() * v.max_abs()


def test_parts_with_constant_left_factor():
    rng = np.random.default_rng(18)
    u = sample(lambda x: 1.0, build_grid(8))
    v = _random_gf(rng, 8)
    assert abs(parts_residual(u, v)) <= 1e-12 * 8 * v.max_abs()


def test_parts_identity_function():
    u = sample(lambda x: x, build_grid(2))
    assert parts_residual(u, u) == 0


@pytest.mark.parametrize("n", [4, 64])
def test_parts_random(n):
    rng = np.random.default_rng(20 + n)
    for _ in range(32):
        u, v = _random_gf(rng, n), _random_gf(rng, n)
        res = abs(parts_residual(u, v))
        assert res <= 1e-11 * n * u.max_abs() * v.max_abs()


def test_shift_commutes_with_linear_combinations_exactly():
    rng = np.random.default_rng(21)
    n = 8
    u, v = _random_gf(rng, n), _random_gf(rng, n)
    lhs = shift(2.0 * u + 3.0 * v)
    rhs = 2.0 * shift(u) + 3.0 * shift(v)
    assert np.array_equal(lhs.values, rhs.values)


def test_derivative_commutes_with_linear_combinations():
    rng = np.random.default_rng(22)
    n = 8
    u, v = _random_gf(rng, n), _random_gf(rng, n)
    a, b = 2.5 - 1j, 0.75j
    lhs = derivative(a * u + b * v)
    rhs = a * derivative(u) + b * derivative(v)
    diff = (lhs - rhs).max_abs()
    assert diff <= 1e-13 * n * max(u.max_abs(), v.max_abs())


def test_mismatched_grids_rejected():
    u = sample(lambda x: x, build_grid(2))
    v = sample(lambda x: x, build_grid(3))
    with pytest.raises(ValueError):
        product_rule_residual(u, v)
    with pytest.raises(ValueError):
        parts_residual(u, v)
