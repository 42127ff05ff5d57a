"""Semicircle performance model: radius map, formula identities, sweeps."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopilab.curve import genus
from hopilab.dqi_model import (
    DEFAULT_MODEL_Q_LIST,
    FIG1A_COLUMNS,
    FIG1B_COLUMNS,
    FIG2_COLUMNS,
    choose_t_for_rate,
    dqi_expected_fraction,
    ell_from_params,
    fig2_argmax,
    is_prime_power,
    sweep_fig1a,
    sweep_fig1b,
    sweep_fig2,
    write_fig1a_csv,
    write_fig1b_csv,
    write_fig2_csv,
)
from hopilab.errors import ParamOutOfRange, TOutOfRange
from hopilab.solvers import prange_expectation


def test_ell_examples():
    assert ell_from_params(5, 28) == 4  # g=10: d_dual = 10
    assert ell_from_params(2, 4) == 1  # g=1:  d_dual = 4
    assert ell_from_params(3, 5) == 0  # t = 2g-1: d_dual = 1, no decodable errors


def test_ell_rejects_invalid_t():
    with pytest.raises(TOutOfRange):
        ell_from_params(2, 0)
    with pytest.raises(TOutOfRange):
        ell_from_params(2, 8)


@pytest.mark.parametrize("q", [2, 3, 5, 8])
def test_ell_respects_decoding_bound(q):
    g, n = genus(q), q**3
    for t in range(2 * g - 1, n):
        ell = ell_from_params(q, t)
        d_dual = t + 2 - 2 * g
        assert 2 * ell + 1 <= d_dual


def test_fraction_at_zero_radius_is_density():
    assert dqi_expected_fraction(100, 0, 30, 10) == pytest.approx(0.3, abs=1e-12)


def test_fraction_at_branch_boundary_is_one():
    # r/q^2 = 1 - ell/n exactly
    assert dqi_expected_fraction(100, 30, 70, 10) == pytest.approx(1.0, abs=1e-12)
    assert dqi_expected_fraction(100, 50, 100, 10) == 1.0  # saturated branch


def test_balanced_case_matches_closed_form_grid():
    # general formula at r/q^2 = 1/2 vs 1/2 + sqrt(lam (1 - lam)) on [0, 1/2]
    n = 10**6
    for i in range(1000):
        lam = 0.5 * i / 999
        ell = int(lam * n)
        general = dqi_expected_fraction(n, ell, 50, 10)
        lam_exact = ell / n
        assert abs(general - (0.5 + math.sqrt(lam_exact * (1 - lam_exact)))) < 1e-12


def test_fraction_continuous_across_branch():
    n, q = 1000, 10
    for ell in (100, 250, 400):
        boundary = (1 - ell / n) * q * q
        below = dqi_expected_fraction(n, ell, boundary - 1e-9, q)
        above = dqi_expected_fraction(n, ell, boundary + 1e-9, q)
        assert abs(below - 1.0) < 1e-9
        assert above == 1.0


def test_fraction_monotone_in_ell_on_first_branch():
    n, q, r = 1000, 10, 30
    prev = -1.0
    for ell in range(0, 700, 7):  # r/q^2 = 0.3 <= 1 - ell/n throughout
        cur = dqi_expected_fraction(n, ell, r, q)
        assert cur >= prev
        prev = cur


@given(
    ell=st.integers(0, 1000),
    r=st.integers(0, 100),
)
@settings(max_examples=200, deadline=None)
def test_fraction_never_below_density(ell, r):
    assert dqi_expected_fraction(1000, ell, r, 10) >= r / 100 - 1e-12


def test_fraction_rejects_bad_params():
    with pytest.raises(ParamOutOfRange):
        dqi_expected_fraction(10, 11, 1, 2)
    with pytest.raises(ParamOutOfRange):
        dqi_expected_fraction(10, 1, 5, 2)
    with pytest.raises(ParamOutOfRange):
        dqi_expected_fraction(0, 0, 1, 2)


def test_is_prime_power():
    assert all(is_prime_power(v) for v in (2, 3, 4, 5, 7, 8, 9, 64, 81, 128))
    assert not any(is_prime_power(v) for v in (0, 1, 6, 10, 12, 15, 100))


def test_choose_t_for_rate():
    assert choose_t_for_rate(5, 0.2) == 25 + 10 - 1  # k = 25 exactly
    assert choose_t_for_rate(2, 0.05) == 1  # target 0 clamps to k = g = 1
    assert choose_t_for_rate(2, 0.99) == 7  # clamps to k = n - g = 7
    with pytest.raises(ParamOutOfRange):
        choose_t_for_rate(2, 0.0)


def test_sweep_fig1a_q5_reference_row():
    points = sweep_fig1a(5)
    by_k = {p.k: p for p in points}
    row = by_k[25]  # t = 34
    assert row.t == 34 and row.ell == 7
    assert row.dqi_frac == pytest.approx(0.5 + math.sqrt(0.056 * 0.944), abs=1e-12)
    assert row.prange_frac == pytest.approx(0.6, abs=1e-15)


def test_sweep_fig1a_dominance_and_order():
    points = sweep_fig1a(5)
    rates = [p.rate for p in points]
    assert rates == sorted(rates)
    assert all(p.ell >= 1 for p in points)
    assert all(p.dqi_frac >= p.prange_frac for p in points)
    # high-rate endpoint approaches full satisfaction for both methods
    assert points[-1].dqi_frac > 0.99 and points[-1].prange_frac > 0.95


def test_sweep_fig1a_rejects_non_prime_power():
    with pytest.raises(ParamOutOfRange):
        sweep_fig1a(6)


def test_sweep_fig1b_prange_constant_and_growth():
    points = sweep_fig1b(0.2)
    assert [p.q for p in points] == sorted(DEFAULT_MODEL_Q_LIST)
    for p in points:
        # 0.2 + 0.5 * 0.8 = 0.6 up to the floor in k = int(rate * n)
        assert p.prange_frac == pytest.approx(0.6, abs=0.01)
        assert p.prange_frac == pytest.approx(
            prange_expectation(p.n, p.k, p.q**2 / 2, p.q), abs=1e-15
        )
    fracs = [p.dqi_frac for p in points]
    assert fracs == sorted(fracs)  # nondecreasing in q
    assert all(p.dqi_frac > 0.6 for p in points)
    assert abs(points[-1].dqi_frac - 0.8) <= 0.01  # q = 64 near the g/n -> 0 limit


def test_sweep_fig2_peak_location_and_value():
    points = sweep_fig2(0.2, [64])
    peak = fig2_argmax(points)[64]
    assert 0.22 <= peak.r_frac <= 0.34
    assert abs(peak.ratio - 1.40) <= 0.02


def test_sweep_fig2_ratio_one_at_full_sets():
    points = sweep_fig2(0.2, [4, 8])
    for q in (4, 8):
        full = [p for p in points if p.q == q and p.r == q * q]
        assert len(full) == 1
        assert full[0].ratio == pytest.approx(1.0, abs=1e-12)


def test_sweep_fig2_respects_explicit_grid():
    points = sweep_fig2(0.2, [4], r_grid=[1, 8, 16, 99])
    assert [p.r for p in points] == [1.0, 8.0, 16.0]


def test_model_point_consistency_with_prange_formula():
    points = sweep_fig2(0.3, [8], r_grid=[10])
    p = points[0]
    assert p.prange_frac == pytest.approx(prange_expectation(p.n, p.k, 10, 8), abs=1e-15)
    assert p.ratio == pytest.approx(p.dqi_frac / p.prange_frac, abs=1e-15)


def _read_csv(path):
    lines = path.read_text().splitlines()
    return lines[0].split(","), [line.split(",") for line in lines[1:]]


def test_csv_schemas(tmp_path):
    fig1a = tmp_path / "fig1a.csv"
    write_fig1a_csv(fig1a, sweep_fig1a(5))
    header, rows = _read_csv(fig1a)
    assert header == list(FIG1A_COLUMNS)
    assert len(rows) == len(sweep_fig1a(5))

    fig1b = tmp_path / "fig1b.csv"
    write_fig1b_csv(fig1b, sweep_fig1b(0.2))
    header, rows = _read_csv(fig1b)
    assert header == list(FIG1B_COLUMNS)
    assert len(rows) == len(DEFAULT_MODEL_Q_LIST)

    fig2 = tmp_path / "fig2.csv"
    points = sweep_fig2(0.2, [4])
    write_fig2_csv(fig2, points)
    header, rows = _read_csv(fig2)
    assert header == list(FIG2_COLUMNS)
    assert len(rows) == 16
    # float cells carry 15 significant digits; ints stay integers
    frac_col = FIG2_COLUMNS.index("dqi_frac")
    assert all("e" in r[frac_col] and len(r[frac_col].split("e")[0]) >= 14 for r in rows)
    parsed = [float(r[frac_col]) for r in rows]
    assert parsed == pytest.approx([p.dqi_frac for p in points], rel=1e-13)
