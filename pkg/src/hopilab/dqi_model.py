"""Closed-form DQI performance model and the figure-sweep generators.

The semicircle law gives the expected satisfied fraction of DQI on a
HOPI instance as a function of the decoding radius ell and the set
density r/q^2 alone::

    <s>/n = (sqrt((ell/n)(1 - r/q^2)) + sqrt((r/q^2)(1 - ell/n)))^2
            when r/q^2 <= 1 - ell/n, and 1 otherwise.

ell comes from the designed dual distance: the dual of C_t is C_t' with
t' = n + 2g - 2 - t, so d_dual = t + 2 - 2g and ell = (d_dual - 1) // 2.
The true dual distance can only exceed the designed one, which makes
this model conservative.

Everything here is arithmetic on parameters; no field tables are built,
so sweeps accept any prime-power q (the exact-code modules cap q at 9).

CSV schemas (header row mandatory, floats printed with 15 significant
digits in scientific notation):

    fig1a: q,n,t,k,rate,ell,dqi_frac,prange_frac
    fig1b: q,n,k,rate,ell,dqi_frac,prange_frac
    fig2:  q,n,r,r_frac,dqi_frac,prange_frac,ratio
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .curve import genus
from .errors import ParamOutOfRange, TOutOfRange
from .solvers import prange_expectation

# Model-only q grid used by the growing-field sweeps by default.
DEFAULT_MODEL_Q_LIST: tuple[int, ...] = (4, 8, 16, 32, 64)

FIG1A_COLUMNS = ("q", "n", "t", "k", "rate", "ell", "dqi_frac", "prange_frac")
FIG1B_COLUMNS = ("q", "n", "k", "rate", "ell", "dqi_frac", "prange_frac")
FIG2_COLUMNS = ("q", "n", "r", "r_frac", "dqi_frac", "prange_frac", "ratio")


@dataclass(frozen=True)
class ModelPoint:
    q: int
    n: int
    t: int
    k: int
    rate: float
    ell: int
    r: float
    r_frac: float
    dqi_frac: float
    prange_frac: float
    ratio: float


def is_prime_power(value: int) -> bool:
    if value < 2:
        return False
    p = 2
    v = value
    while p * p <= v:
        if v % p == 0:
            while v % p == 0:
                v //= p
            return v == 1
        p += 1
    return True  # value itself is prime


def _check_model_q(q: int) -> None:
    if not is_prime_power(q):
        raise ParamOutOfRange(f"q={q} is not a prime power")


def ell_from_params(q: int, t: int) -> int:
    """Decoding radius floor((d_dual - 1)/2) with designed d_dual = t + 2 - 2g."""
    g = genus(q)
    n = q**3
    if not (2 * g - 2 < t < n):
        raise TOutOfRange(f"t={t} outside valid range {2 * g - 2} < t < {n} for q={q}")
    d_dual = t + 2 - 2 * g  # >= 1 throughout the valid range
    return (d_dual - 1) // 2


def dqi_expected_fraction(n: int, ell: int, r: int | float, q: int) -> float:
    """Semicircle-law expected satisfied fraction; r may be fractional."""
    if n <= 0 or q <= 0:
        raise ParamOutOfRange("need n > 0 and q > 0")
    if not 0 <= ell <= n:
        raise ParamOutOfRange(f"need 0 <= ell <= n, got ell={ell}, n={n}")
    if not 0 <= r <= q * q:
        raise ParamOutOfRange(f"need 0 <= r <= q^2, got r={r}, q^2={q * q}")
    rho = r / (q * q)
    lam = ell / n
    if rho > 1 - lam:
        return 1.0
    return (math.sqrt(lam * (1 - rho)) + math.sqrt(rho * (1 - lam))) ** 2


def choose_t_for_rate(q: int, rate: float) -> int:
    """The t whose dimension k = t + 1 - g best matches floor(rate * n).

    Every k in [g, n - g] is achievable; the target floor(rate * n) is
    used exactly when it lies in that range and clamped to the nearest
    endpoint otherwise (targets below g have no achievable k beneath
    them, so the clamp is the closest deterministic choice).
    """
    if not 0 < rate < 1:
        raise ParamOutOfRange(f"rate must lie in (0, 1), got {rate}")
    g = genus(q)
    n = q**3
    k = min(max(int(rate * n), g), n - g)
    return k + g - 1


def model_point(q: int, t: int, r: float) -> ModelPoint:
    """All model quantities for one (q, t, r) cell."""
    g = genus(q)
    n = q**3
    k = t + 1 - g
    ell = ell_from_params(q, t)
    dqi = dqi_expected_fraction(n, ell, r, q)
    prange = prange_expectation(n, k, r, q)
    return ModelPoint(
        q=q,
        n=n,
        t=t,
        k=k,
        rate=k / n,
        ell=ell,
        r=r,
        r_frac=r / (q * q),
        dqi_frac=dqi,
        prange_frac=prange,
        ratio=dqi / prange if prange > 0 else math.inf,
    )


def sweep_fig1a(q: int) -> list[ModelPoint]:
    """Balanced-case (r = q^2/2) satisfaction fractions across code rates.

    Sweeps every t in the valid range with a positive decoding radius;
    at ell = 0 the semicircle law degenerates to the random baseline and
    the model carries no decoding content, so those two edge values of t
    are not part of the advantage curve.
    """
    _check_model_q(q)
    g = genus(q)
    n = q**3
    balanced = q * q / 2
    points = []
    for t in range(2 * g - 1, n):
        if ell_from_params(q, t) < 1:
            continue
        points.append(model_point(q, t, balanced))
    points.sort(key=lambda pt: pt.rate)
    return points


def sweep_fig1b(rate: float, q_list: Sequence[int] = DEFAULT_MODEL_Q_LIST) -> list[ModelPoint]:
    """Balanced-case fractions at a fixed rate as the field grows."""
    points = []
    for q in sorted(q_list):
        _check_model_q(q)
        t = choose_t_for_rate(q, rate)
        points.append(model_point(q, t, q * q / 2))
    return points


def sweep_fig2(
    rate: float,
    q_list: Sequence[int] = DEFAULT_MODEL_Q_LIST,
    r_grid: Sequence[int] | None = None,
) -> list[ModelPoint]:
    """DQI/Prange advantage ratio over the (q, r) grid at a fixed rate.

    With ``r_grid`` None every integer r in [1, q^2] is swept per q;
    an explicit grid is filtered to the values valid for each q.
    """
    points = []
    for q in sorted(q_list):
        _check_model_q(q)
        t = choose_t_for_rate(q, rate)
        rs = range(1, q * q + 1) if r_grid is None else [r for r in r_grid if 1 <= r <= q * q]
        for r in rs:
            points.append(model_point(q, t, float(r)))
    return points


def fig2_argmax(points: Iterable[ModelPoint]) -> dict[int, ModelPoint]:
    """Per-q point of maximum advantage ratio (first grid point on ties)."""
    best: dict[int, ModelPoint] = {}
    for pt in points:
        cur = best.get(pt.q)
        if cur is None or pt.ratio > cur.ratio:
            best[pt.q] = pt
    return best


# CSV output ---------------------------------------------------------------

_INT_COLUMNS = {"q", "n", "t", "k", "ell"}


def _format_cell(column: str, value: float | int) -> str:
    if column in _INT_COLUMNS:
        return str(int(value))
    if column == "r" and float(value).is_integer():
        return str(int(value))
    return format(float(value), ".14e")


def _write_csv(path: str | Path, columns: Sequence[str], points: Iterable[ModelPoint]) -> None:
    lines = [",".join(columns)]
    for pt in points:
        lines.append(",".join(_format_cell(c, getattr(pt, c)) for c in columns))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_fig1a_csv(path: str | Path, points: Iterable[ModelPoint]) -> None:
    _write_csv(path, FIG1A_COLUMNS, points)


def write_fig1b_csv(path: str | Path, points: Iterable[ModelPoint]) -> None:
    _write_csv(path, FIG1B_COLUMNS, points)


def write_fig2_csv(path: str | Path, points: Iterable[ModelPoint]) -> None:
    _write_csv(path, FIG2_COLUMNS, points)
