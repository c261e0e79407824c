import math

import pytest

from etastrip.errors import DomainError, NoSignChangeError
from etastrip.zeros import (
    ZERO_RECORD_FIELDS,
    ScanConfig,
    analyze_zero,
    find_zeros,
    hardy_like,
    refine,
    scan,
)
from oracles import ZETA_HALF, ZETA_ZEROS, dense_zero_oracle


@pytest.fixture(scope="module")
def zeros_to_100():
    return find_zeros(ScanConfig(0.0, 100.0))


def test_hardy_like_at_origin():
    assert hardy_like(0.0) == pytest.approx(ZETA_HALF, abs=1e-9)


@pytest.mark.parametrize("t", [10.0, 20.0, 50.0])
def test_hardy_like_is_real(t):
    # hardy_like raises when the imaginary part exceeds 10 * tol
    assert math.isfinite(hardy_like(t, 1e-10))


def test_sign_change_around_first_zero():
    assert hardy_like(14.0) * hardy_like(14.2) < 0


def test_scan_brackets():
    brackets = scan(ScanConfig(0.0, 30.0))
    assert len(brackets) == 3
    for (lo, hi), z in zip(brackets, ZETA_ZEROS):
        assert lo <= z <= hi
    assert scan(ScanConfig(0.0, 10.0)) == []


def test_scan_is_deterministic_and_independent_of_jobs():
    cfg = ScanConfig(10.0, 40.0)
    first = scan(cfg)
    assert scan(cfg) == first
    assert scan(cfg, jobs=3) == first


@pytest.mark.parametrize("bad", [
    dict(t_lo=5.0, t_hi=5.0),
    dict(t_lo=10.0, t_hi=0.0),
    dict(t_lo=0.0, t_hi=10.0, step=0.0),
    dict(t_lo=0.0, t_hi=10.0, refine_tol=-1.0),
    dict(t_lo=0.0, t_hi=math.inf),
])
def test_invalid_config(bad):
    with pytest.raises(DomainError):
        ScanConfig(**bad)


def test_refine_examples():
    assert abs(refine((14.0, 14.2)) - 14.134725) < 1e-6
    assert abs(refine((21.0, 21.1)) - 21.022040) < 1e-6
    assert abs(refine((14.0, 14.2)) - ZETA_ZEROS[0]) < 1e-9
    with pytest.raises(NoSignChangeError):
        refine((15.0, 16.0))


def test_analyze_first_zero():
    rec = analyze_zero(ZETA_ZEROS[0])
    assert rec.eta_abs < 1e-8
    assert rec.omega_r1 < 1e-8 and rec.omega_r2 < 1e-8
    assert rec.eq8_abs < 1e-8
    assert rec.theta_nonzero
    assert rec.bracket == (ZETA_ZEROS[0], ZETA_ZEROS[0])


def test_record_row_columns():
    row = analyze_zero(ZETA_ZEROS[1], bracket=(21.0, 21.1)).as_row()
    assert tuple(row) == ZERO_RECORD_FIELDS
    assert row["bracket_lo"] == 21.0 and row["bracket_hi"] == 21.1


def test_every_zero_to_100_meets_the_bounds(zeros_to_100):
    for rec in zeros_to_100:
        assert rec.eta_abs < 1e-8
        assert rec.omega_r1 < 1e-8 and rec.omega_r2 < 1e-8
        assert rec.eq8_abs < 1e-8
        assert rec.theta_nonzero
        lo, hi = rec.bracket
        assert lo <= rec.beta <= hi


def test_count_to_100_matches_dense_minimum_oracle(zeros_to_100):
    oracle = dense_zero_oracle(0.0, 100.0)
    assert len(zeros_to_100) == len(oracle) == 29
    for rec, z in zip(zeros_to_100, oracle):
        assert abs(rec.beta - z) < 1e-6


def test_zeros_match_reference_ordinates(zeros_to_100):
    for rec, z in zip(zeros_to_100, ZETA_ZEROS):
        assert abs(rec.beta - z) < 1e-9
