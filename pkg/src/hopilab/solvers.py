"""Classical baseline solvers for HOPI instances.

Prange information-set solving, a reference simulated-annealing chain,
best-of-m repetition, and an exhaustive optimum oracle.  Every solver is
a deterministic function of (instance, seed, schedule); batch runs give
each repetition its own child stream via :func:`hopilab.rng.derive_seed`.
Ties are broken everywhere by the lowest canonical message encoding.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .agcode import encode, encode_batch
from .errors import BudgetExceeded, NoInformationSet, ParamOutOfRange
from .hopi import Assignment, HopiInstance
from .linalg import rank, solve, submatrix_rows
from .rng import Xoshiro256StarStar, derive_seed

DEFAULT_BRUTE_BUDGET = 1 << 24

# Simulated-annealing defaults: 200*n steps, geometric cooling down to
# t_final = 0.01, with t_initial calibrated from 100 probe moves so the
# initial acceptance ratio of score-decreasing moves is about 0.8.
SA_STEPS_PER_CONSTRAINT = 200
SA_T_FINAL = 0.01
SA_PROBE_MOVES = 100
SA_TARGET_ACCEPTANCE = 0.8


@dataclass(frozen=True)
class SolveResult:
    msg: Assignment
    satisfied: int
    algorithm: str
    trials: int
    seed: Optional[int]
    elapsed: float


@dataclass(frozen=True)
class AnnealSchedule:
    steps: int
    t_initial: float
    t_final: float
    cooling: float  # geometric factor applied once per step

    def __post_init__(self) -> None:
        if self.steps < 0:
            raise ParamOutOfRange("steps must be nonnegative")
        if not (self.t_initial >= self.t_final > 0):
            raise ParamOutOfRange("need t_initial >= t_final > 0")
        if not (0 < self.cooling <= 1):
            raise ParamOutOfRange("cooling must lie in (0, 1]")


def make_schedule(steps: int, t_initial: float, t_final: float) -> AnnealSchedule:
    """Geometric schedule running from t_initial to t_final over ``steps``."""
    if steps < 0:
        raise ParamOutOfRange("steps must be nonnegative")
    if not (t_initial >= t_final > 0):
        raise ParamOutOfRange("need t_initial >= t_final > 0")
    cooling = (t_final / t_initial) ** (1.0 / steps) if steps > 0 else 1.0
    return AnnealSchedule(steps=steps, t_initial=t_initial, t_final=t_final, cooling=cooling)


def prange_expectation(n: int, k: int, r: int | float, q: int) -> float:
    """Expected satisfied fraction (k + (r/q^2)(n-k)) / n of Prange's algorithm."""
    if n <= 0 or q <= 0:
        raise ParamOutOfRange("need n > 0 and q > 0")
    if not 0 <= k <= n:
        raise ParamOutOfRange(f"need 0 <= k <= n, got k={k}, n={n}")
    if not 0 <= r <= q * q:
        raise ParamOutOfRange(f"need 0 <= r <= q^2, got r={r}, q^2={q * q}")
    rho = r / (q * q)
    return (k + rho * (n - k)) / n


def prange_solve(inst: HopiInstance, seed: int) -> SolveResult:
    """Information-set solve: satisfy k constraints exactly, rest by chance.

    Samples a uniform size-k row subset until the corresponding square
    block of the evaluation matrix is invertible (whole-set resampling,
    at most 1000 attempts; rank k guarantees invertible subsets exist),
    then samples one target per chosen constraint uniformly from its
    allowed set and solves for the unique interpolating message.
    """
    start = time.perf_counter()
    rng = Xoshiro256StarStar(seed)
    n, k = inst.n, inst.k
    attempts = 0
    while True:
        attempts += 1
        if attempts > 1000:
            raise NoInformationSet("1000 consecutive singular information sets")
        info_set = rng.sample_sorted(n, k)
        block = submatrix_rows(inst.code.eval_matrix, info_set)
        if rank(block) == k:
            break
    targets = [inst.sets[i][rng.randbelow(inst.r)] for i in info_set]
    msg_vec = solve(block, targets)
    cw = encode(inst.code, msg_vec)
    assert all(int(cw[i]) == v for i, v in zip(info_set, targets))
    member = inst.membership()
    satisfied = int(member[inst._rows, cw].sum())
    return SolveResult(
        msg=[int(v) for v in msg_vec],
        satisfied=satisfied,
        algorithm="prange",
        trials=attempts,
        seed=seed,
        elapsed=time.perf_counter() - start,
    )


def _better(satisfied: int, msg: list[int], best_satisfied: int, best_msg: list[int]) -> bool:
    if satisfied != best_satisfied:
        return satisfied > best_satisfied
    return msg < best_msg


def simulated_annealing(
    inst: HopiInstance,
    seed: int,
    schedule: AnnealSchedule | None = None,
) -> SolveResult:
    """Metropolis chain over assignments, returning the best state visited.

    A move resamples one uniformly chosen message coordinate to a
    uniformly random field element; it is accepted when the score does
    not drop, else with probability exp(delta/T).  With ``schedule``
    None the documented defaults are used, with t_initial calibrated
    from probe moves drawn from this same seeded stream (the probes do
    not change the state), so the run is still a pure function of
    (instance, seed).
    """
    start = time.perf_counter()
    rng = Xoshiro256StarStar(seed)
    spec = inst.code.curve.spec
    order = spec.order
    add_t, mul_t, neg_t = spec.add_table, spec.mul_table, spec.neg_table
    ev_cols = inst.code.eval_matrix.data
    member = inst.membership()
    rows = inst._rows
    n, k = inst.n, inst.k

    msg = [rng.randbelow(order) for _ in range(k)]
    cw = encode(inst.code, msg)
    current = int(member[rows, cw].sum())

    def probe_delta() -> int:
        j = rng.randbelow(k)
        value = rng.randbelow(order)
        delta_elem = add_t[value, neg_t[msg[j]]]
        if delta_elem == 0:
            return 0
        cand = add_t[cw, mul_t[delta_elem, ev_cols[:, j]]]
        return int(member[rows, cand].sum()) - current

    if schedule is None:
        drops = [-d for d in (probe_delta() for _ in range(SA_PROBE_MOVES)) if d < 0]
        if drops:
            t_initial = (sum(drops) / len(drops)) / -math.log(SA_TARGET_ACCEPTANCE)
        else:
            t_initial = 1.0
        t_initial = max(t_initial, SA_T_FINAL)
        schedule = make_schedule(SA_STEPS_PER_CONSTRAINT * n, t_initial, SA_T_FINAL)

    best_msg = list(msg)
    best = current
    temperature = schedule.t_initial
    for _ in range(schedule.steps):
        j = rng.randbelow(k)
        value = rng.randbelow(order)
        delta_elem = add_t[value, neg_t[msg[j]]]
        if delta_elem != 0:
            cand_cw = add_t[cw, mul_t[delta_elem, ev_cols[:, j]]]
            cand = int(member[rows, cand_cw].sum())
            delta = cand - current
            if delta >= 0 or rng.random() < math.exp(delta / temperature):
                msg[j] = value
                cw = cand_cw
                current = cand
                if _better(current, msg, best, best_msg):
                    best_msg = list(msg)
                    best = current
        temperature = max(temperature * schedule.cooling, schedule.t_final)

    return SolveResult(
        msg=best_msg,
        satisfied=best,
        algorithm="sa",
        trials=1,
        seed=seed,
        elapsed=time.perf_counter() - start,
    )


def brute_force_optimum(
    inst: HopiInstance, budget: int = DEFAULT_BRUTE_BUDGET
) -> SolveResult:
    """Exact optimum by enumerating all (q^2)^k messages.

    Messages are visited in lexicographic order (first coordinate most
    significant), so keeping only strict improvements yields the
    lexicographically lowest maximizer.
    """
    order = inst.code.curve.spec.order
    k = inst.k
    total = order**k
    if total > budget:
        raise BudgetExceeded(
            f"(q^2)^k = {total} messages exceeds the enumeration budget {budget}"
        )
    start = time.perf_counter()
    member = inst.membership()
    rows = inst._rows
    powers = [order ** (k - 1 - j) for j in range(k)]
    best = -1
    best_index = 0
    batch = 1 << 13
    for begin in range(0, total, batch):
        idx = np.arange(begin, min(begin + batch, total), dtype=np.int64)
        msgs = np.empty((idx.size, k), dtype=np.int16)
        for j in range(k):
            msgs[:, j] = (idx // powers[j]) % order
        scores = member[rows[None, :], encode_batch(inst.code, msgs)].sum(axis=1)
        local = int(scores.argmax())
        if int(scores[local]) > best:
            best = int(scores[local])
            best_index = begin + local
    best_msg = [(best_index // powers[j]) % order for j in range(k)]
    return SolveResult(
        msg=best_msg,
        satisfied=best,
        algorithm="brute",
        trials=total,
        seed=None,
        elapsed=time.perf_counter() - start,
    )


Solver = Callable[[HopiInstance, int], SolveResult]


def best_of(solver: Solver, inst: HopiInstance, m: int, seed: int) -> SolveResult:
    """Best result over m runs, run i seeded with derive_seed(seed, i)."""
    if m < 1:
        raise ParamOutOfRange("repetition count must be at least 1")
    start = time.perf_counter()
    best: SolveResult | None = None
    for i in range(m):
        result = solver(inst, derive_seed(seed, i))
        if best is None or _better(result.satisfied, result.msg, best.satisfied, best.msg):
            best = result
    assert best is not None
    return SolveResult(
        msg=best.msg,
        satisfied=best.satisfied,
        algorithm=best.algorithm,
        trials=m,
        seed=seed,
        elapsed=time.perf_counter() - start,
    )
