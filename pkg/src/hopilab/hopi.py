"""HOPI instances: constraint sets over the curve points and their scoring.

An instance fixes one allowed-value set F_i of size r per curve point;
an assignment is a length-k message vector, and its score is the number
of points where the encoded codeword lands inside the local set.  All
sets have the same size r, matching the homogeneous setting of the
performance model.

Instance files are JSON, human-auditable, with canonical integer
encodings throughout::

    {"version": 1, "q": 2, "t": 4, "r": 2, "seed": 1, "sets": [[0, 2], ...]}

Serialization is canonical (sorted keys, no whitespace, trailing
newline), so identical parameters always produce byte-identical files.
Sets are sampled with the pinned generator in :mod:`hopilab.rng`, one
sequential stream per instance: for each point in order, a partial
Fisher-Yates draw of r indices out of [0, q^2), stored sorted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

from .agcode import HermitianCode, build_code, encode
from .errors import ROutOfRange, SchemaMismatch, ShapeMismatch
from .rng import Xoshiro256StarStar

INSTANCE_FORMAT_VERSION = 1

# An assignment is a length-k vector of canonical element indices.
Assignment = list[int]


@lru_cache(maxsize=None)
def _shared_code(q: int, t: int) -> HermitianCode:
    """Codes are immutable, so instances with equal (q, t) share one."""
    return build_code(q, t)


@dataclass
class HopiInstance:
    q: int
    t: int
    r: int
    seed: int
    sets: list[list[int]]
    code: HermitianCode = field(repr=False, compare=False)
    _membership: np.ndarray | None = field(
        default=None, init=False, repr=False, compare=False
    )
    _rows: np.ndarray | None = field(default=None, init=False, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    def membership(self) -> np.ndarray:
        """Boolean (n, q^2) table: membership()[i, e] iff e in F_i."""
        if self._membership is None:
            table = np.zeros((self.n, self.code.curve.spec.order), dtype=bool)
            for i, allowed in enumerate(self.sets):
                table[i, allowed] = True
            self._membership = table
            self._rows = np.arange(self.n)
        return self._membership


def _check_r(q: int, r: int) -> None:
    if not 1 <= r <= q * q:
        raise ROutOfRange(f"r={r} outside 1 <= r <= q^2 = {q * q}")


def random_instance(q: int, t: int, r: int, seed: int) -> HopiInstance:
    """Instance with each F_i an independent uniform size-r subset of GF(q^2)."""
    _check_r(q, r)
    code = _shared_code(q, t)
    order = code.curve.spec.order
    rng = Xoshiro256StarStar(seed)
    sets = [rng.sample_sorted(order, r) for _ in range(code.n)]
    return HopiInstance(q=q, t=t, r=r, seed=seed, sets=sets, code=code)


def planted_instance(q: int, t: int, r: int, seed: int, msg0: Assignment) -> HopiInstance:
    """Like random_instance, but each F_i is conditioned to contain the
    planted codeword's value at point i, so the optimum score is n.

    Sampling per point: drop the planted value from the index pool, draw
    r-1 of the remaining q^2 - 1 by partial Fisher-Yates, re-add the
    planted value, store sorted.
    """
    _check_r(q, r)
    code = _shared_code(q, t)
    order = code.curve.spec.order
    planted = encode(code, msg0)
    rng = Xoshiro256StarStar(seed)
    sets = []
    for i in range(code.n):
        forced = int(planted[i])
        pool_draw = rng.sample_sorted(order - 1, r - 1)
        # pool position j maps to element j, skipping the forced value
        others = [j if j < forced else j + 1 for j in pool_draw]
        sets.append(sorted(others + [forced]))
    return HopiInstance(q=q, t=t, r=r, seed=seed, sets=sets, code=code)


def _check_assignment(inst: HopiInstance, msg) -> np.ndarray:
    vec = np.asarray(msg, dtype=np.int16)
    if vec.ndim != 1 or vec.size != inst.k:
        raise ShapeMismatch(f"assignment must have length k={inst.k}")
    return vec


def score(inst: HopiInstance, msg: Assignment) -> int:
    """Number of points whose constraint set contains the codeword value."""
    vec = _check_assignment(inst, msg)
    cw = encode(inst.code, vec)
    member = inst.membership()
    return int(member[inst._rows, cw].sum())


def score_pm(inst: HopiInstance, msg: Assignment) -> int:
    """Satisfied minus unsatisfied constraint count, 2*score - n."""
    return 2 * score(inst, msg) - inst.n


# serialization -----------------------------------------------------------


def serialize_instance(inst: HopiInstance) -> str:
    payload = {
        "version": INSTANCE_FORMAT_VERSION,
        "q": inst.q,
        "t": inst.t,
        "r": inst.r,
        "seed": inst.seed,
        "sets": inst.sets,
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def parse_instance(text: str) -> HopiInstance:
    """Parse and fully validate an instance JSON document."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaMismatch(f"instance file is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise SchemaMismatch("instance document must be a JSON object")
    required = {"version", "q", "t", "r", "seed", "sets"}
    if set(payload) != required:
        raise SchemaMismatch(f"instance keys {sorted(payload)} != {sorted(required)}")
    if payload["version"] != INSTANCE_FORMAT_VERSION:
        raise SchemaMismatch(f"unsupported instance format version {payload['version']}")
    q, t, r, seed = payload["q"], payload["t"], payload["r"], payload["seed"]
    for name, value in (("q", q), ("t", t), ("r", r), ("seed", seed)):
        if not isinstance(value, int):
            raise SchemaMismatch(f"field {name!r} must be an integer")
    _check_r(q, r)
    code = _shared_code(q, t)
    order = code.curve.spec.order
    sets = payload["sets"]
    if not isinstance(sets, list) or len(sets) != code.n:
        raise SchemaMismatch(f"'sets' must list exactly n={code.n} constraint sets")
    for i, allowed in enumerate(sets):
        if (
            not isinstance(allowed, list)
            or len(allowed) != r
            or any(not isinstance(e, int) or not 0 <= e < order for e in allowed)
            or sorted(set(allowed)) != allowed
        ):
            raise SchemaMismatch(
                f"set {i} must be {r} distinct sorted indices in [0, {order})"
            )
    return HopiInstance(q=q, t=t, r=r, seed=seed, sets=sets, code=code)


def write_instance(inst: HopiInstance, path: str | Path) -> None:
    Path(path).write_text(serialize_instance(inst), encoding="utf-8")


def read_instance(path: str | Path) -> HopiInstance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))
