"""Figure renderer for hopilab sweep CSV outputs."""

from .render import (
    SCHEMAS,
    FigureJob,
    MissingInput,
    RenderError,
    RenderResult,
    SchemaMismatch,
    load_rows,
    render,
)

__version__ = "0.1.0"
