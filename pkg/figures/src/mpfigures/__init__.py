"""Offline figure scripts for the node-family CSV/JSON outputs."""

from .common import FigureSpec, SchemaError
from .growth import plot_growth
from .nodes_curve import plot_nodes_curve
from .surface import plot_surface

__version__ = "0.1.0"
