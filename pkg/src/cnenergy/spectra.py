"""Graph matrices and a cyclic Jacobi eigensolver for dense symmetric matrices.

All matrix builders return ``int64`` arrays: every entry is an exact count, and
conversion to floating point happens only inside :func:`eigenvalues`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numba
import numpy as np

from .graph import Graph
from .tolerances import DEFAULT, Tolerances


class ConvergenceError(RuntimeError):
    pass


# -- matrix construction -----------------------------------------------------


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(np.array(g.degrees, dtype=np.int64)).reshape(g.n, g.n)


def laplacian(g: Graph) -> np.ndarray:
    return degree_matrix(g) - adjacency(g)


def signless_laplacian(g: Graph) -> np.ndarray:
    return degree_matrix(g) + adjacency(g)


def cn_matrix(g: Graph) -> np.ndarray:
    """Common-neighbourhood matrix: ``|N(i) & N(j)|`` off the diagonal, zero on it."""
    cn = np.zeros((g.n, g.n), dtype=np.int64)
    nbrs = g.neighbors
    for i in range(g.n):
        for j in range(i + 1, g.n):
            cn[i, j] = cn[j, i] = len(nbrs[i] & nbrs[j])
    return cn


def cnrs_matrix(g: Graph) -> np.ndarray:
    return np.diag(cn_matrix(g).sum(axis=1)).reshape(g.n, g.n)


def cn_laplacian(g: Graph) -> np.ndarray:
    cn = cn_matrix(g)
    return np.diag(cn.sum(axis=1)).reshape(g.n, g.n) - cn


def cn_signless_laplacian(g: Graph) -> np.ndarray:
    cn = cn_matrix(g)
    return np.diag(cn.sum(axis=1)).reshape(g.n, g.n) + cn


def format_matrix(m: np.ndarray) -> str:
    """Debug dump: ``n`` then one whitespace-separated row per line."""
    m = np.asarray(m)
    rows = [str(m.shape[0])]
    for row in m:
        rows.append(" ".join(str(x) if m.dtype.kind in "iu" else repr(float(x)) for x in row))
    return "\n".join(rows) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    n = int(lines[0])
    values = [[float(x) for x in ln.split()] for ln in lines[1 : n + 1]]
    m = np.array(values, dtype=float).reshape(n, n)
    if np.all(m == np.round(m)):
        return m.astype(np.int64)
    return m


# -- eigensolver -------------------------------------------------------------


@numba.njit(cache=True)
def _jacobi_kernel(a, target, max_sweeps):
    """Row-cyclic Jacobi sweeps on ``a`` in place.

    Returns the number of sweeps performed, or -1 if the off-diagonal norm
    is still above ``target`` after ``max_sweeps``.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += 2.0 * a[p, q] * a[p, q]
        if math.sqrt(off) <= target:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = a[k, p]
                    akq = a[k, q]
                    new_p = c * akp - s * akq
                    new_q = s * akp + c * akq
                    a[k, p] = new_p
                    a[p, k] = new_p
                    a[k, q] = new_q
                    a[q, k] = new_q
    return -1


def jacobi_eigenvalues(m: np.ndarray, tol: float = DEFAULT.solve, max_sweeps: int = DEFAULT.max_sweeps) -> np.ndarray:
    """All eigenvalues of the symmetric matrix ``m``, sorted nonincreasing."""
    a = np.array(m, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    if a.shape[0] == 0:
        return np.zeros(0)
    target = tol * float(np.linalg.norm(a))
    if _jacobi_kernel(a, target, max_sweeps) < 0:
        raise ConvergenceError(f"Jacobi did not converge within {max_sweeps} sweeps")
    return np.sort(np.diag(a))[::-1].copy()


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in nonincreasing order plus their (value, multiplicity) clusters."""

    eigenvalues: np.ndarray
    grouped: tuple[tuple[float, int], ...]

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def multiplicities(self) -> dict[float, int]:
        return dict(self.grouped)


def group_eigenvalues(values: np.ndarray, threshold: float) -> tuple[tuple[float, int], ...]:
    """Chain consecutive sorted values closer than ``threshold`` into clusters."""
    groups: list[list[float]] = []
    for x in values:
        if groups and abs(groups[-1][-1] - x) <= threshold:
            groups[-1].append(float(x))
        else:
            groups.append([float(x)])
    return tuple((sum(g) / len(g), len(g)) for g in groups)


def eigenvalues(m: np.ndarray, tol: Tolerances = DEFAULT, psd: bool = False) -> Spectrum:
    """Spectrum of ``m`` via cyclic Jacobi.

    With ``psd=True`` (CNL/CNSL, known positive semidefinite) eigenvalues
    within the grouping threshold of zero are clipped to exactly 0.
    """
    values = jacobi_eigenvalues(m, tol.solve, tol.max_sweeps)
    threshold = tol.group * max(1.0, float(np.linalg.norm(np.asarray(m, dtype=float))))
    if psd:
        values[np.abs(values) <= threshold] = 0.0
    return Spectrum(values, group_eigenvalues(values, threshold))
