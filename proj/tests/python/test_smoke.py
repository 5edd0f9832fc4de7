import math
import os
import sys

import pytest

_dir = os.environ.get("UNCKIT_MODULE_DIR")
if _dir:
    sys.path.insert(0, _dir)

uk = pytest.importorskip("_unckit")


def gaussian():
    return uk.parse_function_spec('{"terms":[{"coeffs":[1],"width":1}]}')


def test_parse_and_eval():
    f = gaussian()
    assert f.eval_real(0.0) == 1.0
    assert abs(f.eval_real(1.0) - math.exp(-0.5)) < 1e-15
    with pytest.raises(ValueError):
        uk.parse_function_spec('{"terms":[{"coeffs":[1],"width":-1}]}')


def test_fourier_self_dual():
    fh = uk.fourier(gaussian())
    for x in (0.0, 0.7, 2.0):
        assert abs(fh.eval_real(x) - math.exp(-0.5 * x * x)) < 1e-12


def test_uncertainty_integral():
    out = uk.uncertainty_integral(gaussian(), 0.5, tol=1e-8)
    assert not out["diverged"]
    expect = 4.0 * (math.pi / 2 + math.asin(0.5)) / math.sqrt(0.75)
    assert abs(out["value"] - expect) < 1e-6 * expect


def test_scan_growth():
    sched = [1.0 - 2.0**-k for k in range(2, 9)]
    r = uk.scan_growth(gaussian(), sched, 1e-7)
    assert r.diverged_at is None
    assert abs(r.exponent - 0.5) < 0.05


def test_autocorr_and_reflection():
    f = gaussian()
    t, u = uk.autocorr_closed(f)
    assert t == [1.0]
    assert u == [0.0]
    assert uk.reflection_residual(f, 2.5) < 1e-12


def test_theta_and_product():
    f = gaussian()
    prod = uk.theta(f, 0, 1.3) * uk.theta(f, 0, -1.3)
    assert abs(prod.real - math.sqrt(2.0) / (2.0 * math.pi)) < 1e-12
    grid = [0.5 * i for i in range(21)]
    assert uk.verify_product_identity(f, grid) < 1e-9
    assert uk.theta_hat_relation(f, 0, 0.5j) < 1e-10


def test_recovery_round_trip():
    f = uk.GaussPoly.single([1.0, 0.0, 0.5], 2.0)
    n = 257
    span = 8.0 / math.sqrt(2.0)
    xs = [-span + 2 * span * i / (n - 1) for i in range(n)]
    xs = [-x for x in reversed(xs[n // 2 + 1:])] + [0.0] + xs[n // 2 + 1:]
    ys = [f.eval_real(x) for x in xs]
    a = uk.fit_gaussian_width(xs, ys)
    assert abs(a - 2.0) < 1e-2
    c = uk.recover_polynomial(xs, ys, a)
    assert len(c) == 3
    assert abs(c[0] - 1.0) < 1e-3 and abs(c[2] - 0.5) < 1e-3
