"""The six graph energies, the first Zagreb index and hyperenergetic flags."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import spectra
from .graph import Graph
from .tolerances import DEFAULT, Tolerances

# -- degree-based invariants -------------------------------------------------


def avg_neighbor_degree(g: Graph, v: int) -> Fraction:
    """Mean degree of the neighbours of ``v``; 0 for an isolated vertex."""
    d = g.degree(v)
    if d == 0:
        return Fraction(0)
    return Fraction(sum(g.degree(u) for u in g.neighbors[v]), d)


def zagreb_m1(g: Graph) -> int:
    """First Zagreb index, cross-checked against its edge and neighbour-mean forms."""
    deg = g.degrees
    by_vertex = sum(d * d for d in deg)
    by_edge = sum(deg[u] + deg[v] for u, v in g.edges)
    by_neighbor_mean = sum(deg[v] * avg_neighbor_degree(g, v) for v in range(g.n))
    if not (by_vertex == by_edge == by_neighbor_mean):
        raise AssertionError(f"Zagreb forms disagree: {by_vertex}, {by_edge}, {by_neighbor_mean}")
    return by_vertex


def trace_cnrs(g: Graph) -> int:
    return zagreb_m1(g) - 2 * g.num_edges


# -- energies ----------------------------------------------------------------


def matrix_energy(values: np.ndarray, center: float = 0.0) -> float:
    return float(np.abs(np.asarray(values) - center).sum())


def _eigs(m: np.ndarray, tol: Tolerances, psd: bool = False) -> np.ndarray:
    return spectra.eigenvalues(m, tol, psd=psd).eigenvalues


def energy(g: Graph, tol: Tolerances = DEFAULT) -> float:
    return matrix_energy(_eigs(spectra.adjacency(g), tol))


def cn_energy(g: Graph, tol: Tolerances = DEFAULT) -> float:
    return matrix_energy(_eigs(spectra.cn_matrix(g), tol))


def _mean_degree(g: Graph) -> float:
    return 2 * g.num_edges / g.n


def laplacian_energy(g: Graph, tol: Tolerances = DEFAULT) -> float:
    _require_vertices(g)
    return matrix_energy(_eigs(spectra.laplacian(g), tol), _mean_degree(g))


def signless_laplacian_energy(g: Graph, tol: Tolerances = DEFAULT) -> float:
    _require_vertices(g)
    return matrix_energy(_eigs(spectra.signless_laplacian(g), tol), _mean_degree(g))


def _cn_center(g: Graph, cn: np.ndarray) -> float:
    # The trace of CNRS and M1 - 2|e| are the same number; both are formed and compared.
    from_trace = int(cn.sum())
    from_zagreb = trace_cnrs(g)
    if from_trace != from_zagreb:
        raise AssertionError(f"tr(CNRS)={from_trace} but M1-2|e|={from_zagreb}")
    return from_trace / g.n


def cn_laplacian_energy(g: Graph, tol: Tolerances = DEFAULT) -> float:
    _require_vertices(g)
    cn = spectra.cn_matrix(g)
    cnl = np.diag(cn.sum(axis=1)) - cn
    return matrix_energy(_eigs(cnl, tol, psd=True), _cn_center(g, cn))


def cn_signless_laplacian_energy(g: Graph, tol: Tolerances = DEFAULT) -> float:
    _require_vertices(g)
    cn = spectra.cn_matrix(g)
    cnsl = np.diag(cn.sum(axis=1)) + cn
    return matrix_energy(_eigs(cnsl, tol, psd=True), _cn_center(g, cn))


def _require_vertices(g: Graph) -> None:
    if g.n < 1:
        raise ValueError("Laplacian-type energies need at least one vertex")


# -- spectra bundle ----------------------------------------------------------


@dataclass(frozen=True)
class GraphSpectra:
    """All six spectra of one graph, computed once and shared by reports and bounds."""

    graph: Graph
    adjacency: np.ndarray
    cn: np.ndarray
    m1: int
    a: spectra.Spectrum
    l: spectra.Spectrum
    q: spectra.Spectrum
    cn_spec: spectra.Spectrum
    cnl: spectra.Spectrum
    cnsl: spectra.Spectrum

    @property
    def cnrs_diag(self) -> np.ndarray:
        return self.cn.sum(axis=1)

    @property
    def trace_cnrs(self) -> int:
        return self.m1 - 2 * self.graph.num_edges

    @property
    def cn_center(self) -> float:
        return self.trace_cnrs / self.graph.n


def graph_spectra(g: Graph, tol: Tolerances = DEFAULT) -> GraphSpectra:
    _require_vertices(g)
    a = spectra.adjacency(g)
    d = np.diag(a.sum(axis=1))
    cn = spectra.cn_matrix(g)
    r = np.diag(cn.sum(axis=1))
    m1 = zagreb_m1(g)
    _cn_center(g, cn)
    return GraphSpectra(
        graph=g,
        adjacency=a,
        cn=cn,
        m1=m1,
        a=spectra.eigenvalues(a, tol),
        l=spectra.eigenvalues(d - a, tol),
        q=spectra.eigenvalues(d + a, tol),
        cn_spec=spectra.eigenvalues(cn, tol),
        cnl=spectra.eigenvalues(r - cn, tol, psd=True),
        cnsl=spectra.eigenvalues(r + cn, tol, psd=True),
    )


# -- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class HyperFlags:
    hyper: bool
    l_hyper: bool
    q_hyper: bool
    cn_hyper: bool
    cnl_hyper: bool
    cnsl_hyper: bool

    def names(self) -> list[str]:
        return [k for k, v in asdict(self).items() if v]


@dataclass(frozen=True)
class EnergyReport:
    n: int
    m_edges: int
    zagreb_m1: int
    trace_cnrs: int
    energy: float
    laplacian_energy: float
    signless_laplacian_energy: float
    cn_energy: float
    cn_laplacian_energy: float
    cn_signless_laplacian_energy: float
    hyper_flags: HyperFlags

    def energies(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in ENERGY_FIELDS}

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "m_edges": self.m_edges,
            "zagreb_m1": self.zagreb_m1,
            "trace_cnrs": self.trace_cnrs,
        }
        out.update({k: fmt_float(v) for k, v in self.energies().items()})
        out["hyper_flags"] = asdict(self.hyper_flags)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    def csv_row(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="")
        d = self.to_dict()
        flags = d.pop("hyper_flags")
        writer.writerow([*d.values(), *(str(v).lower() for v in flags.values())])
        return buf.getvalue()


ENERGY_FIELDS = (
    "energy",
    "laplacian_energy",
    "signless_laplacian_energy",
    "cn_energy",
    "cn_laplacian_energy",
    "cn_signless_laplacian_energy",
)
CSV_HEADER = ",".join(
    ["n", "m_edges", "zagreb_m1", "trace_cnrs", *ENERGY_FIELDS, *HyperFlags.__dataclass_fields__]
)


def fmt_float(x: float) -> float:
    """Round to 12 significant digits so serialized output is reproducible."""
    r = float(f"{x:.12g}")
    return 0.0 if r == 0 else r


def _energies_from(s: GraphSpectra) -> tuple[float, ...]:
    mean_deg = _mean_degree(s.graph)
    return (
        matrix_energy(s.a.eigenvalues),
        matrix_energy(s.l.eigenvalues, mean_deg),
        matrix_energy(s.q.eigenvalues, mean_deg),
        matrix_energy(s.cn_spec.eigenvalues),
        matrix_energy(s.cnl.eigenvalues, s.cn_center),
        matrix_energy(s.cnsl.eigenvalues, s.cn_center),
    )


@lru_cache(maxsize=None)
def _complete_baselines(n: int, tol: Tolerances) -> tuple[float, ...]:
    from . import closed_forms
    from .families import Complete, generate

    e, le, le_plus, *_ = _energies_from(graph_spectra(generate(Complete(n)), tol))
    le_cn, le_plus_cn, e_cn = closed_forms.kn_hyper_baselines(n)
    return (e, le, le_plus, float(e_cn), float(le_cn), float(le_plus_cn))


def _flags(values: tuple[float, ...], n: int, tol: Tolerances) -> HyperFlags:
    baselines = _complete_baselines(n, tol)
    return HyperFlags(*(v > b + tol.cmp for v, b in zip(values, baselines)))


def classify_hyperenergetic(g: Graph, tol: Tolerances = DEFAULT) -> HyperFlags:
    """Strict comparison of each energy against the same energy of K_n."""
    return _flags(_energies_from(graph_spectra(g, tol)), g.n, tol)


def full_report(g: Graph, tol: Tolerances = DEFAULT, spectra_bundle: GraphSpectra | None = None) -> EnergyReport:
    s = spectra_bundle or graph_spectra(g, tol)
    values = _energies_from(s)
    return EnergyReport(
        n=g.n,
        m_edges=g.num_edges,
        zagreb_m1=s.m1,
        trace_cnrs=s.trace_cnrs,
        energy=values[0],
        laplacian_energy=values[1],
        signless_laplacian_energy=values[2],
        cn_energy=values[3],
        cn_laplacian_energy=values[4],
        cn_signless_laplacian_energy=values[5],
        hyper_flags=_flags(values, g.n, tol),
    )
