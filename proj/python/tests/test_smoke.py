import json
import math

import pytest

import robineig as rb


def quarter_oracle():
    f = lambda s: math.tan(s / 4) - math.tanh(3 * s / 4)
    lo, hi = 0.5, 2 * math.pi - 1e-9
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (0.5 * (lo + hi)) ** 2


def test_neumann_quarter_interval():
    w = rb.BangBangWeight((0.0, 1.0), 1.0, [(0.0, 0.25)])
    r = rb.principal_eigenvalue(rb.RobinProblem1D(w, 0.0))
    assert r.lambda_ == pytest.approx(quarter_oracle(), rel=1e-11)
    assert r.zero_count == 0
    assert max(abs(u) for u in r.samples["u"]) == pytest.approx(1.0)


def test_fd_agrees():
    p = rb.RobinProblem1D(rb.BangBangWeight((0, 1), 1.0, [(0.35, 0.65)]), 1.0)
    assert rb.fd_eigenvalue(p, 20000) == pytest.approx(rb.principal_eigenvalue(p).lambda_, rel=1e-6)


def test_threshold_and_prediction():
    assert rb.beta_star(0.5, 1.0) == pytest.approx(math.pi)
    assert rb.beta_star(0.3, 4.0) == pytest.approx(1.545493, abs=1e-6)
    report = rb.classify_1d((0, 2), math.pi / 2, 0.5, 1.0)
    assert report.regime == rb.Regime.Critical
    pred = rb.predict_1d((0, 1), 10.0, 0.5, 1.0)
    assert [tuple(s) for s in pred.sets] == [pytest.approx((0.25, 0.75))]


def test_sweep_matches_prediction():
    sweep = rb.sweep_placements_1d((0, 1), 10.0, 10.0, 0.5, 1.0, 101)
    assert sweep.matches(rb.predict_1d((0, 1), 10.0, 0.5, 1.0))
    assert len(sweep.lambdas) == 101


def test_shell_reduction():
    sp = rb.ShellProblem(2, 1.0, math.e, rb.AdmissibilityParams(0.5, 1.0, 2.0), [(1.5, 2.0)])
    rp = rb.reduce(sp)
    assert rp.q == pytest.approx(0.5)
    assert rp.m0_prime == pytest.approx((math.e**2 - 1) / (2 * math.e**2))
    assert rp.beta_right == pytest.approx(2 * math.e)
    radial = rb.radial_principal_eigenvalue(sp).lambda_
    assert rp.exact_eigenvalue() / rp.lambda_factor == pytest.approx(radial, rel=1e-8)
    pred = rb.predict_shell(sp, 0.5)
    assert pred.variable == rb.Variable.R


def test_errors_carry_kind():
    sp = rb.ShellProblem(2, 1.0, 2.0, rb.AdmissibilityParams(0.5, 1.0, 1.0), [(1.2, 1.4)])
    with pytest.raises(rb.Error) as info:
        rb.reduce(sp, 0.01)
    assert info.value.kind == "QTooSmall"
    with pytest.raises(rb.Error):
        rb.BangBangWeight((0, 1), 1.0, [(0, 1)])


def test_weight_json_round_trip():
    w = rb.BangBangWeight((0, 2), 1.5, [(0.2, 0.4), (1.0, 1.5)])
    text = rb.weight_to_json(w)
    assert json.loads(text)["kappa"] == 1.5
    back = rb.weight_from_json(text)
    assert [tuple(s) for s in back.segments] == [tuple(s) for s in w.segments]
