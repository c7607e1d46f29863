"""Read-only figure renderer for pulsedecay CSV sweep artifacts."""
from .csvdata import DataTable, SchemaError, load_table
from .render import FigureSpec, render

__version__ = "0.1.0"
