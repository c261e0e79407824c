import json
import math

import pytest

from etastrip.verify import (
    CATALOG,
    DEFAULT_SEED,
    IDENTITY_IDS,
    GridSpec,
    IdentityResult,
    VerificationReport,
    published_figures,
    run_all,
    run_identity,
)
from oracles import ETA_HALF

HARD = [i for i in IDENTITY_IDS if not CATALOG[i].report_only]


@pytest.fixture(scope="module")
def report():
    return run_all(GridSpec(), timestamp="fixed")


def test_catalog_shape():
    assert len(IDENTITY_IDS) == 17
    assert {i for i in IDENTITY_IDS if CATALOG[i].report_only} == {"ARG_SUM", "THETA_G"}
    for ident in CATALOG.values():
        assert ident.metric in {"scaled", "relative", "absolute", "angle", "roots"}
        assert ident.threshold > 0


def test_grids_are_seeded():
    a, b = GridSpec(), GridSpec()
    assert a.strip_grid() == b.strip_grid()
    assert GridSpec(seed=1).strip_grid() != a.strip_grid()
    pts = a.strip_grid()
    assert len(pts) == 200
    assert all(0.02 <= p.real <= 0.98 and abs(p.imag) <= 60 for p in pts)
    beta = a.beta_grid()
    assert len(beta) == 500 and beta[0] == 0.05 and beta[-1] == 60.0


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("ETASTRIP_SEED", "42")
    assert GridSpec.from_env().seed == 42
    assert GridSpec.from_env(seed=7).seed == 7
    monkeypatch.delenv("ETASTRIP_SEED")
    assert GridSpec.from_env().seed == DEFAULT_SEED


def test_rho_one_example():
    grid = [0.1 + i * (59.9 / 499) for i in range(500)]
    res = run_identity("RHO_ONE", grid)
    assert res.passed and res.grid_size == 500
    assert res.max_residual < 1e-10


def test_reflection_example():
    res = run_identity("GAMMA_AUX_REFL", spec=GridSpec(n_xi=100))
    assert res.grid_size == 100 and res.max_residual < 1e-10


def test_theta_roots_identity():
    res = run_identity("THETA_ROOTS")
    assert res.passed
    assert len(res.extra["roots"]) == 3
    assert res.max_residual < 1e-6


def test_failures_are_listed_not_dropped():
    res = run_identity("RHO_ONE", [1.0, 2.0, 3.0], threshold=0.0)
    assert not res.passed
    assert [p for p, _ in res.failures] == [1.0, 2.0, 3.0]
    assert res.max_residual == max(r for _, r in res.failures)


def test_out_of_domain_points_become_errors():
    res = run_identity("FUNC_EQ", [0.5 + 1j, 1.5 + 1j, -0.2 + 0j])
    assert not res.passed
    assert len(res.errors) == 2
    assert res.grid_size == 3


def test_unknown_identity():
    with pytest.raises(KeyError):
        run_identity("NO_SUCH")
    with pytest.raises(KeyError):
        run_all(identities=["NO_SUCH"])


def test_full_report(report):
    assert [r.id for r in report.results] == list(IDENTITY_IDS)
    for rid in HARD:
        r = report.result(rid)
        assert r.passed, (rid, r.max_residual, r.failures[:3], r.errors[:3])
        assert r.max_residual < r.threshold
    assert report.verdict == "pass"
    assert report.config["grid"]["seed"] == DEFAULT_SEED


def test_omega_closed_on_50_points():
    res = run_identity("OMEGA_CLOSED", spec=GridSpec(n_strip=50))
    assert res.grid_size == 50 and res.max_residual < 1e-9


def test_report_only_identities_record_every_point(report):
    for rid in ("ARG_SUM", "THETA_G"):
        r = report.result(rid)
        assert r.report_only and not r.errors
        assert len(r.values) == r.grid_size == 500
        for v in r.values:
            assert math.isfinite(v["residual"]) and math.isfinite(v["residual_literal_sign"])
        # every point is within 1e-8 of one sign convention or the other
        matches_true_sign = r.grid_size - len(r.failures)
        assert matches_true_sign + r.extra["points_near_pi"] == 500
        assert len(r.failures) + r.extra["failures_literal_sign"] == 500
    # the component sum follows the opposite sign convention at every point
    arg_sum = report.result("ARG_SUM")
    assert arg_sum.extra["points_near_pi"] == 500
    assert arg_sum.extra["max_residual_literal_sign"] < 1e-8


def test_failing_report_only_identity_keeps_verdict(report):
    assert not report.result("ARG_SUM").passed
    assert report.verdict == "pass"


def test_hard_failure_sets_verdict():
    rep = run_all(GridSpec(), thresholds={"RHO_ONE": 0.0}, identities=["RHO_ONE", "ODD_G"])
    assert rep.verdict == "fail"
    assert [r.id for r in rep.results] == ["RHO_ONE", "ODD_G"]


def test_json_round_trip(report):
    text = report.to_json()
    again = VerificationReport.from_json(text)
    assert again.to_json() == text
    assert isinstance(again.result("FUNC_EQ").worst_point, complex)
    assert IdentityResult.from_dict(report.result("RHO_ONE").to_dict()) == report.result("RHO_ONE")


def test_parallel_run_is_identical(report):
    assert run_all(GridSpec(), jobs=4, timestamp="fixed").to_json() == report.to_json()


def test_published_figures():
    figs = published_figures()
    eta_half = figs["eta_half"]
    assert eta_half["computed"] == pytest.approx(ETA_HALF, abs=1e-10)
    assert abs(eta_half["difference"]) < 1e-3 and eta_half["discrepancy"]
    assert abs(figs["theta_root"]["difference"]) < 1e-9
    assert figs["g_at_theta_root"]["difference"] == pytest.approx(-math.pi / 4, abs=2e-4)
    assert figs["phi_half"]["phi"] == pytest.approx(1.0) and figs["phi_half"]["phi_literal_sign"] == pytest.approx(-1.0)
    json.dumps(figs)
