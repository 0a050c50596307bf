"""Common-neighbor Laplacian energies of graphs."""

from .bounds import BoundReport, Inapplicable, run_checks
from .closed_forms import ClosedForm, closed_form_for
from .energies import EnergyReport, HyperFlags, classify_hyperenergetic, full_report
from .families import generate, parse_family
from .graph import Graph, GraphFormatError, parse_edge_list
from .graph6 import encode_graph6, parse_graph6
from .scan import ScanSummary, scan_corpus
from .spectra import ConvergenceError, Spectrum, eigenvalues
from .tolerances import DEFAULT, Tolerances

__all__ = [
    "BoundReport", "ClosedForm", "ConvergenceError", "DEFAULT", "EnergyReport", "Graph",
    "GraphFormatError", "HyperFlags", "Inapplicable", "ScanSummary", "Spectrum", "Tolerances",
    "classify_hyperenergetic", "closed_form_for", "eigenvalues", "encode_graph6", "full_report",
    "generate", "parse_edge_list", "parse_family", "parse_graph6", "run_checks", "scan_corpus",
]
