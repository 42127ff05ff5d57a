"""Render figures from sweep CSV files; no computation of its own.

The renderer consumes the CSV tables written by the ``hopilab`` CLI
(it never imports that package) and draws:

* fig1a: DQI and Prange expected satisfied fractions against code rate,
* fig1b: the same fractions against the field parameter q,
* fig2:  the DQI/Prange advantage ratio against the set density r/q^2,
  one curve per q, with each curve's argmax marked and a black line
  tracing the maximizing density across q.

Values are plotted exactly as parsed; the argmax markers reuse the CSV
rows verbatim (first row wins on ties), which the tests cross-check.
Output is deterministic for identical inputs: fixed style, scrubbed
image metadata, no timestamps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


class RenderError(Exception):
    """Base class for renderer failures."""


class MissingInput(RenderError):
    """An input CSV is absent or contains no data rows."""


class SchemaMismatch(RenderError):
    """An input CSV does not match the declared kind's schema."""


SCHEMAS: dict[str, tuple[str, ...]] = {
    "fig1a": ("q", "n", "t", "k", "rate", "ell", "dqi_frac", "prange_frac"),
    "fig1b": ("q", "n", "k", "rate", "ell", "dqi_frac", "prange_frac"),
    "fig2": ("q", "n", "r", "r_frac", "dqi_frac", "prange_frac", "ratio"),
}

_INT_COLUMNS = {"q", "n", "t", "k", "ell"}

# savefig metadata that would otherwise embed dates or tool versions
_METADATA_SCRUB = {
    "png": {"Software": "figviz"},
    "svg": {"Date": None},
    "pdf": {"CreationDate": None},
}


@dataclass(frozen=True)
class FigureJob:
    inputs: tuple[Path, ...]
    kind: str
    output: Path
    image_format: str | None = None

    @classmethod
    def make(cls, inputs, kind, output, image_format=None) -> "FigureJob":
        return cls(
            inputs=tuple(Path(p) for p in inputs),
            kind=kind,
            output=Path(output),
            image_format=image_format,
        )


@dataclass
class RenderResult:
    kind: str
    output: Path
    rows: int
    # fig2 only: per-q argmax row exactly as read from the CSV
    argmax: dict[int, dict[str, float]] = field(default_factory=dict)


def load_rows(paths, kind: str) -> list[dict[str, float]]:
    """Read and validate one or more CSVs of the given kind, concatenated."""
    if kind not in SCHEMAS:
        raise SchemaMismatch(f"unknown figure kind {kind!r}; expected one of {sorted(SCHEMAS)}")
    columns = SCHEMAS[kind]
    rows: list[dict[str, float]] = []
    for path in paths:
        path = Path(path)
        if not path.is_file():
            raise MissingInput(f"input file {path} does not exist")
        lines = path.read_text(encoding="utf-8").splitlines()
        if not lines:
            raise MissingInput(f"input file {path} is empty")
        header = tuple(lines[0].split(","))
        if header != columns:
            raise SchemaMismatch(
                f"{path}: header {list(header)} does not match {kind} schema {list(columns)}"
            )
        body = [line for line in lines[1:] if line.strip()]
        if not body:
            raise MissingInput(f"input file {path} has a header but no data rows")
        for line in body:
            cells = line.split(",")
            if len(cells) != len(columns):
                raise SchemaMismatch(f"{path}: row has {len(cells)} cells, expected {len(columns)}")
            row: dict[str, float] = {}
            for name, cell in zip(columns, cells):
                try:
                    row[name] = int(cell) if name in _INT_COLUMNS else float(cell)
                except ValueError:
                    raise SchemaMismatch(f"{path}: cell {cell!r} in column {name!r} is not numeric")
            rows.append(row)
    return rows


def _groups_by_q(rows):
    qs = sorted({int(row["q"]) for row in rows})
    return [(q, [row for row in rows if row["q"] == q]) for q in qs]


def _plot_fig1a(ax, rows) -> None:
    for q, group in _groups_by_q(rows):
        group = sorted(group, key=lambda r: r["rate"])
        suffix = f" (q={q})" if len(_groups_by_q(rows)) > 1 else ""
        ax.plot([r["rate"] for r in group], [r["dqi_frac"] for r in group],
                label="DQI" + suffix, color="tab:blue")
        ax.plot([r["rate"] for r in group], [r["prange_frac"] for r in group],
                label="Prange" + suffix, color="tab:orange", linestyle="--")
    ax.set_xlabel("code rate k/n")
    ax.set_ylabel("expected satisfied fraction <s>/n")
    ax.legend()


def _plot_fig1b(ax, rows) -> None:
    rows = sorted(rows, key=lambda r: r["q"])
    qs = [r["q"] for r in rows]
    ax.plot(qs, [r["dqi_frac"] for r in rows], marker="o", label="DQI", color="tab:blue")
    ax.plot(qs, [r["prange_frac"] for r in rows], marker="s", label="Prange",
            color="tab:orange", linestyle="--")
    ax.set_xscale("log", base=2)
    ax.set_xlabel("field parameter q")
    ax.set_ylabel("expected satisfied fraction <s>/n")
    ax.legend()


def _plot_fig2(ax, rows) -> dict[int, dict[str, float]]:
    argmax: dict[int, dict[str, float]] = {}
    for q, group in _groups_by_q(rows):
        group = sorted(group, key=lambda r: r["r_frac"])
        ax.plot([r["r_frac"] for r in group], [r["ratio"] for r in group],
                label=f"q={q} (n={group[0]['n']:.0f})")
        best = group[0]
        for row in group:
            if row["ratio"] > best["ratio"]:
                best = row
        argmax[q] = best
    peaks = [argmax[q] for q in sorted(argmax)]
    ax.plot([r["r_frac"] for r in peaks], [r["ratio"] for r in peaks],
            color="black", marker="o", linewidth=1.2, label="argmax over r")
    ax.set_xlabel("set density r/q^2")
    ax.set_ylabel("advantage ratio DQI/Prange")
    ax.legend()
    return argmax


def render(job: FigureJob) -> RenderResult:
    """Validate inputs, draw the figure, write the image file."""
    rows = load_rows(job.inputs, job.kind)
    fmt = job.image_format or (job.output.suffix.lstrip(".").lower() or "png")
    if fmt not in _METADATA_SCRUB:
        raise SchemaMismatch(f"unsupported image format {fmt!r}; use png, svg, or pdf")

    fig, ax = plt.subplots(figsize=(6.4, 4.2), dpi=150)
    try:
        argmax: dict[int, dict[str, float]] = {}
        if job.kind == "fig1a":
            _plot_fig1a(ax, rows)
        elif job.kind == "fig1b":
            _plot_fig1b(ax, rows)
        else:
            argmax = _plot_fig2(ax, rows)
        fig.tight_layout()
        fig.savefig(job.output, format=fmt, metadata=_METADATA_SCRUB[fmt])
    finally:
        plt.close(fig)
    return RenderResult(kind=job.kind, output=job.output, rows=len(rows), argmax=argmax)
