"""Numerical verification of the identities and bounds on CN-Laplacian energies.

Each ``check_*`` function takes a :class:`~cnenergy.graph.Graph` (or an already
computed :class:`BoundContext`) and returns a list of :class:`BoundReport`
records, or :class:`Inapplicable` markers when a class restriction such as
regularity is not met.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import closed_forms, energies, spectra
from .closed_forms import kn_hyper_baselines
from .graph import Graph, bfs_distances, derived_graph, is_quadrangle_free, is_triangle_free
from .tolerances import DEFAULT, Tolerances


@dataclass(frozen=True)
class BoundReport:
    """One evaluated statement ``lhs <relation> rhs``.

    ``slack`` is oriented so that a nonnegative value means the statement
    holds: ``rhs - lhs`` for ``<=``, ``lhs - rhs`` for ``>=`` and
    ``-|lhs - rhs|`` for ``==``.
    """

    theorem_id: str
    lhs: float
    rhs: float
    relation: str
    tol: float = DEFAULT.eq

    def __post_init__(self):
        if self.relation not in ("<=", ">=", "=="):
            raise ValueError(f"unknown relation {self.relation!r}")

    @property
    def slack(self) -> float:
        if self.relation == "<=":
            return self.rhs - self.lhs
        if self.relation == ">=":
            return self.lhs - self.rhs
        return -abs(self.lhs - self.rhs)

    @property
    def holds(self) -> bool:
        return self.slack >= -self.tol

    @property
    def equality(self) -> bool:
        return abs(self.lhs - self.rhs) <= self.tol

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "lhs": energies.fmt_float(self.lhs),
            "relation": self.relation,
            "rhs": energies.fmt_float(self.rhs),
            "slack": energies.fmt_float(self.slack),
            "holds": self.holds,
            "equality": self.equality,
        }


@dataclass(frozen=True)
class Inapplicable:
    theorem_id: str
    reason: str

    def to_dict(self) -> dict:
        return {"theorem_id": self.theorem_id, "inapplicable": self.reason}


Result = BoundReport | Inapplicable


@dataclass(frozen=True)
class BoundContext:
    spectra: energies.GraphSpectra
    report: energies.EnergyReport
    tol: Tolerances
    alpha: int
    beta: int
    s_alpha: float
    s_plus_beta: float
    delta_max: int
    delta_min: int
    cnrs_diag_sorted: np.ndarray

    @property
    def graph(self) -> Graph:
        return self.spectra.graph

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def trace(self) -> int:
        return self.spectra.trace_cnrs

    @property
    def mean(self) -> float:
        return self.spectra.cn_center

    @property
    def nu(self) -> np.ndarray:
        return self.spectra.cnl.eigenvalues

    @property
    def sigma(self) -> np.ndarray:
        return self.spectra.cnsl.eigenvalues


def threshold_index(values: np.ndarray, mean: float, tol: float) -> int:
    """Largest 1-based i with ``values[i-1] >= mean`` (ties within ``tol`` count).

    The top eigenvalue is never below the eigenvalue mean, so the result is at least 1.
    """
    return max(int(np.count_nonzero(values >= mean - tol)), 1)


def compute_context(g: Graph, tol: Tolerances = DEFAULT) -> BoundContext:
    s = energies.graph_spectra(g, tol)
    mean = s.cn_center
    alpha = threshold_index(s.cnl.eigenvalues, mean, tol.eq)
    beta = threshold_index(s.cnsl.eigenvalues, mean, tol.eq)
    deg = g.degrees
    return BoundContext(
        spectra=s,
        report=energies.full_report(g, tol, spectra_bundle=s),
        tol=tol,
        alpha=alpha,
        beta=beta,
        s_alpha=float(s.cnl.eigenvalues[:alpha].sum()),
        s_plus_beta=float(s.cnsl.eigenvalues[:beta].sum()),
        delta_max=max(deg, default=0),
        delta_min=min(deg, default=0),
        cnrs_diag_sorted=np.sort(s.cnrs_diag)[::-1],
    )


def _ctx(g: Graph | BoundContext, tol: Tolerances) -> BoundContext:
    return g if isinstance(g, BoundContext) else compute_context(g, tol)


def _variants(ctx: BoundContext):
    """(id prefix, eigenvalues, energy, alpha-or-beta) for the CNL and CNSL cases."""
    r = ctx.report
    yield "cnl", ctx.nu, r.cn_laplacian_energy, ctx.alpha
    yield "cnsl", ctx.sigma, r.cn_signless_laplacian_energy, ctx.beta


def _le_prefix(variant: str) -> str:
    return "le-cn" if variant == "cnl" else "le-plus-cn"


# -- exact identities --------------------------------------------------------


def check_identities(g: Graph | BoundContext, tol: Tolerances = DEFAULT) -> list[Result]:
    """Integer identities between CN, A, D, CNRS and M1, plus semidefiniteness."""
    ctx = _ctx(g, tol)
    graph, s = ctx.graph, ctx.spectra
    a, cn = s.adjacency, s.cn
    deg = np.array(graph.degrees, dtype=np.int64)
    cn_square_gap = int(np.abs(cn - (a @ a - np.diag(deg))).max(initial=0))

    row_sums = cn.sum(axis=1)
    by_neighbors = np.array([sum(deg[j] - 1 for j in graph.neighbors[i]) for i in range(graph.n)], dtype=np.int64)
    by_mean = [deg[i] * energies.avg_neighbor_degree(graph, i) - deg[i] for i in range(graph.n)]
    diag_gap = max(
        int(np.abs(row_sums - by_neighbors).max(initial=0)),
        max((abs(Fraction(int(r)) - m) for r, m in zip(row_sums, by_mean)), default=Fraction(0)),
    )

    m1_vertex = int((deg * deg).sum())
    m1_edge = sum(int(deg[u] + deg[v]) for u, v in graph.edges)
    m1_mean = sum(deg[i] * energies.avg_neighbor_degree(graph, i) for i in range(graph.n))
    zagreb_gap = max(abs(m1_vertex - m1_edge), abs(m1_vertex - m1_mean))

    return [
        BoundReport("identity.cn-square", cn_square_gap, 0, "==", tol=0),
        BoundReport("identity.trace-cnrs", int(row_sums.sum()), m1_vertex - 2 * graph.num_edges, "==", tol=0),
        BoundReport("identity.cnrs-diagonal", float(diag_gap), 0, "==", tol=0),
        BoundReport("identity.zagreb-forms", float(zagreb_gap), 0, "==", tol=0),
        BoundReport("psd.cnl", float(ctx.nu.min()), 0.0, ">=", tol.eq),
        BoundReport("psd.cnsl", float(ctx.sigma.min()), 0.0, ">=", tol.eq),
    ]


# -- alpha/beta lemmas -------------------------------------------------------


def check_finite_sum_identity(g: Graph | BoundContext, tol: Tolerances = DEFAULT) -> list[Result]:
    """LE_CN = 2 S_alpha - 2 alpha tr/n, and the CNSL analogue with beta."""
    ctx = _ctx(g, tol)
    out = []
    for variant, values, le, k in _variants(ctx):
        rhs = 2 * float(values[:k].sum()) - 2 * k * ctx.mean
        out.append(BoundReport(f"finite-sum.{variant}", le, rhs, "==", tol.eq))
    return out


def check_maximum_form(g: Graph | BoundContext, tol: Tolerances = DEFAULT) -> list[Result]:
    """LE_CN equals the maximum over i of 2 S_i - 2 i tr/n."""
    ctx = _ctx(g, tol)
    idx = np.arange(1, ctx.n + 1)
    out = []
    for variant, values, le, _ in _variants(ctx):
        candidates = 2 * np.cumsum(values) - 2 * idx * ctx.mean
        out.append(BoundReport(f"max-form.{variant}", le, float(candidates.max()), "==", tol.eq))
    return out


def check_majorization(g: Graph | BoundContext, tol: Tolerances = DEFAULT) -> list[Result]:
    """Sorted spectrum prefix sums dominate sorted CNRS-diagonal prefix sums.

    The report carries the prefix with the smallest margin.
    """
    ctx = _ctx(g, tol)
    diag_prefix = np.cumsum(ctx.cnrs_diag_sorted).astype(float)
    out = []
    for variant, values, _, _ in _variants(ctx):
        gaps = np.cumsum(values) - diag_prefix
        k = int(np.argmin(gaps))
        out.append(
            BoundReport(f"majorization.{variant}", float(np.cumsum(values)[k]), float(diag_prefix[k]), ">=", tol.eq)
        )
        out.append(
            BoundReport(f"majorization-total.{variant}", float(values.sum()), float(diag_prefix[-1]), "==", tol.eq)
        )
    return out


# -- relations between energies ----------------------------------------------


def check_e_cn_bounds(g: Graph | BoundContext, tol: Tolerances = DEFAULT) -> list[Result]:
    ctx = _ctx(g, tol)
    r = ctx.report
    e, e_cn, m = r.energy, r.cn_energy, r.m_edges
    return [
        BoundReport("e-cn.energy-squared", e_cn, e * e + 2 * m, "<=", tol.eq),
        BoundReport("e-cn.edges-order", e_cn, 2 * m * (ctx.n + 1), "<=", tol.eq),
        BoundReport("e-cn.four-edges", e_cn, 4 * m, "<=", tol.eq),
        BoundReport("e-cn.four-edges-energy", 4 * m, 2 * e * e, "<=", tol.eq),
    ]


def sqrt_diagonal_bound(ctx: BoundContext, include_self: bool) -> float:
    """Sum over vertices of sqrt((CNRS_ii - tr/n)^2 + sum_k CN_ik^2).

    ``include_self`` selects whether k = i enters the inner sum. CN has a zero
    diagonal, so both choices give the same number.
    """
    cn = ctx.spectra.cn.astype(float)
    sq = cn * cn
    inner = sq.sum(axis=1) if include_self else sq.sum(axis=1) - np.diag(sq)
    return float(np.sqrt((ctx.spectra.cnrs_diag - ctx.mean) ** 2 + inner).sum())


def check_le_cn_bounds(g: Graph | BoundContext, tol: Tolerances = DEFAULT) -> list[Result]:
    """Upper and lower bounds on LE_CN and LE+_CN in terms of E, E_CN, M1 and degrees."""
    ctx = _ctx(g, tol)
    r = ctx.report
    tr, mean, n = ctx.trace, ctx.mean, ctx.n
    out: list[Result] = []
    for variant, _, le, k in _variants(ctx):
        p = _le_prefix(variant)
        diag_top = float(ctx.cnrs_diag_sorted[:k].sum())
        out += [
            BoundReport(f"{p}.e-cn-trace", le, r.cn_energy + 2 * tr, "<=", tol.eq),
            BoundReport(f"{p}.energy-zagreb", le, r.energy**2 + 2 * (r.zagreb_m1 - r.m_edges), "<=", tol.eq),
            BoundReport(f"{p}.twice-trace", le, 2 * tr, "<=", tol.eq),
            BoundReport(f"{p}.order-trace", le, 2 * (1 - 1 / n) * tr, "<=", tol.eq),
            BoundReport(f"{p}.degree-lower", le, 2 * (ctx.delta_max * (ctx.delta_min - 1) - mean), ">=", tol.eq),
            BoundReport(f"{p}.diagonal-lower", le, 2 * (diag_top - k * mean), ">=", tol.eq),
            BoundReport(f"{p}.sqrt-diagonal", le, sqrt_diagonal_bound(ctx, include_self=variant == "cnsl"), "<=", tol.eq),
        ]
        if ctx.graph.is_regular():
            cn = ctx.spectra.cn.astype(float)
            regular_rhs = float(np.sqrt((cn * cn).sum(axis=1)).sum())
            out.append(BoundReport(f"{p}.regular", le, regular_rhs, "<=", tol.eq))
        else:
            out.append(Inapplicable(f"{p}.regular", "graph is not regular"))
    return out


def check_derived_graph_theorem(g: Graph | BoundContext, tol: Tolerances = DEFAULT) -> list[Result]:
    """For triangle- and quadrangle-free graphs CN(G) is the adjacency matrix of
    the distance-two graph, so the CN energies equal its (signless) Laplacian energies."""
    ctx = _ctx(g, tol)
    graph = ctx.graph
    ids = ("derived-graph.cn-adjacency", "derived-graph.cn-binary", "derived-graph.cnl", "derived-graph.cnsl")
    if not (is_triangle_free(graph) and is_quadrangle_free(graph)):
        return [Inapplicable(i, "graph contains a triangle or a quadrangle") for i in ids]
    dg = derived_graph(graph)
    cn = ctx.spectra.cn
    gap = int(np.abs(cn - spectra.adjacency(dg)).max(initial=0))
    non_binary = int(np.count_nonzero((cn != 0) & (cn != 1)) + np.count_nonzero(np.diag(cn)))
    r = ctx.report
    return [
        BoundReport(ids[0], gap, 0, "==", tol=0),
        BoundReport(ids[1], non_binary, 0, "==", tol=0),
        BoundReport(ids[2], r.cn_laplacian_energy, energies.laplacian_energy(dg, ctx.tol), "==", tol.eq),
        BoundReport(ids[3], r.cn_signless_laplacian_energy, energies.signless_laplacian_energy(dg, ctx.tol), "==", tol.eq),
    ]


def check_derived_graph_group(g: Graph | BoundContext, tol: Tolerances = DEFAULT) -> list[Result]:
    ctx = _ctx(g, tol)
    return check_derived_graph_theorem(ctx, tol) + check_cycle_corollary(ctx, tol)


def cycle_order(g: Graph) -> int | None:
    """n if ``g`` is the cycle C_n (connected and 2-regular), else None."""
    if g.n < 3 or any(d != 2 for d in g.degrees):
        return None
    return g.n if None not in bfs_distances(g, 0) else None


def check_cycle_corollary(g: Graph | BoundContext, tol: Tolerances = DEFAULT) -> list[Result]:
    """Cycle reductions: LE_CN(C_n) is LE(C_n) for odd n and 2 LE(C_(n/2)) for even n,
    with 2 LE(C_4) at n = 4; the same for LE+_CN."""
    ctx = _ctx(g, tol)
    ids = ("derived-graph.cycle-cnl", "derived-graph.cycle-cnsl")
    n = cycle_order(ctx.graph)
    if n is None:
        return [Inapplicable(i, "graph is not a cycle") for i in ids]
    le, le_plus = closed_forms.cycle_corollary(n)
    r = ctx.report
    return [
        BoundReport(ids[0], r.cn_laplacian_energy, le, "==", tol.eq),
        BoundReport(ids[1], r.cn_signless_laplacian_energy, le_plus, "==", tol.eq),
    ]


def complete_bipartite_parts(g: Graph) -> tuple[int, int] | None:
    """(m, n) if ``g`` is K_(m,n) with m <= n, else None."""
    if g.n < 2 or min(g.degrees) == 0:
        return None
    color = [-1] * g.n
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.neighbors[u]:
            if color[w] < 0:
                color[w] = 1 - color[u]
                stack.append(w)
            elif color[w] == color[u]:
                return None
    if -1 in color:
        return None
    m = color.count(0)
    k = g.n - m
    if g.num_edges != m * k:
        return None
    return (min(m, k), max(m, k))


def check_kmn_not_hyperenergetic(g: Graph | BoundContext, tol: Tolerances = DEFAULT) -> list[Result]:
    """K_(m,n) never exceeds K_(m+n) in LE_CN or LE+_CN."""
    ctx = _ctx(g, tol)
    ids = ("kmn-not-hyper.cnl", "kmn-not-hyper.cnsl")
    if complete_bipartite_parts(ctx.graph) is None:
        return [Inapplicable(i, "graph is not complete bipartite") for i in ids]
    le_kn, le_plus_kn, _ = kn_hyper_baselines(ctx.n)
    r = ctx.report
    return [
        BoundReport(ids[0], r.cn_laplacian_energy, float(le_kn), "<=", tol.eq),
        BoundReport(ids[1], r.cn_signless_laplacian_energy, float(le_plus_kn), "<=", tol.eq),
    ]


# -- registry ----------------------------------------------------------------

CHECKS: dict[str, Callable[..., list[Result]]] = {
    "identities": check_identities,
    "finite-sum": check_finite_sum_identity,
    "max-form": check_maximum_form,
    "majorization": check_majorization,
    "e-cn": check_e_cn_bounds,
    "le-cn": check_le_cn_bounds,
    "derived-graph": check_derived_graph_group,
    "kmn": check_kmn_not_hyperenergetic,
}


def normalize_selection(selection: str | Iterable[str] = "all") -> tuple[str, ...]:
    """Validate a check selection: ``"all"``, group names, or comma-separated lists of them."""
    if isinstance(selection, str):
        selection = [selection]
    names = tuple(s.strip() for item in selection for s in item.split(",") if s.strip())
    if not names:
        names = ("all",)
    unknown = [s for s in names if s != "all" and s not in CHECKS]
    if unknown:
        raise ValueError(f"unknown check(s) {', '.join(unknown)}; choose from all, {', '.join(CHECKS)}")
    return names


def run_checks(
    g: Graph | BoundContext, selection: str | Iterable[str] = "all", tol: Tolerances = DEFAULT
) -> list[Result]:
    names = normalize_selection(selection)
    ctx = _ctx(g, tol)
    groups = CHECKS if "all" in names else {k: CHECKS[k] for k in names}
    out: list[Result] = []
    for check in groups.values():
        out.extend(check(ctx, tol))
    return out


def all_hold(results: Iterable[Result]) -> bool:
    return all(r.holds for r in results if isinstance(r, BoundReport))
