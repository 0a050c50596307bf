"""Exact CN-Laplacian spectra and energies for the families solved analytically.

Everything is a :class:`fractions.Fraction`; floats appear only when a caller
compares against the numerical pipeline.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .families import Complete, CompleteBipartite, Cycle, Empty, GraphFamily, Join, Path, Star, generate

ExactSpectrum = tuple[tuple[Fraction, int], ...]


def _spectrum(entries: Iterable[tuple[int | Fraction, int]]) -> ExactSpectrum:
    """Merge coincident values, drop zero multiplicities, sort by value descending."""
    counts: Counter[Fraction] = Counter()
    for value, mult in entries:
        if mult > 0:
            counts[Fraction(value)] += mult
    return tuple(sorted(counts.items(), reverse=True))


@dataclass(frozen=True)
class ClosedForm:
    family: GraphFamily
    cnl_spectrum: ExactSpectrum
    cnq_spectrum: ExactSpectrum
    le_cn: Fraction
    le_plus_cn: Fraction

    @property
    def order(self) -> int:
        return sum(m for _, m in self.cnl_spectrum)

    def __post_init__(self):
        for spec in (self.cnl_spectrum, self.cnq_spectrum):
            if any(v < 0 for v, _ in spec):
                raise AssertionError(f"negative eigenvalue in closed form for {self.family}")
        if sum(m for _, m in self.cnq_spectrum) != self.order:
            raise AssertionError(f"multiplicities disagree for {self.family}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def kn_closed_form(n: int) -> ClosedForm:
    _require(n >= 1, f"K_n needs n >= 1, got {n}")
    if n == 1:
        return ClosedForm(Complete(1), _spectrum([(0, 1)]), _spectrum([(0, 1)]), Fraction(0), Fraction(0))
    energy = Fraction(2 * (n - 1) * (n - 2))
    return ClosedForm(
        Complete(n),
        cnl_spectrum=_spectrum([(0, 1), (n * (n - 2), n - 1)]),
        cnq_spectrum=_spectrum([(2 * (n - 1) * (n - 2), 1), ((n - 2) ** 2, n - 1)]),
        le_cn=energy,
        le_plus_cn=energy,
    )


def _kmn_le_plus(m: int, n: int) -> Fraction:
    if m == 1 and n == 1:
        return Fraction(0)
    if m == 1:
        return Fraction(2 * (n - 1) * (n + 2), n + 1)
    if n == 1:
        return Fraction(2 * (m - 1) * (m + 2), m + 1)
    return Fraction(4 * (m * m * (n - 1) + n * n * (m - 1)), m + n)


def kmn_closed_form(m: int, n: int, family: GraphFamily | None = None) -> ClosedForm:
    _require(m >= 1 and n >= 1, f"K_(m,n) needs m, n >= 1, got {m}, {n}")
    return ClosedForm(
        family or CompleteBipartite(m, n),
        cnl_spectrum=_spectrum([(0, 2), (m * n, m + n - 2)]),
        cnq_spectrum=_spectrum(
            [(2 * n * (m - 1), 1), (n * (m - 2), m - 1), (2 * m * (n - 1), 1), (m * (n - 2), n - 1)]
        ),
        le_cn=Fraction(4 * m * n * (m + n - 2), m + n),
        le_plus_cn=_kmn_le_plus(m, n),
    )


def star_closed_form(k: int) -> ClosedForm:
    _require(k >= 1, f"S_k needs k >= 1, got {k}")
    return ClosedForm(
        Star(k),
        cnl_spectrum=_spectrum([(0, 2), (k, k - 1)]),
        cnq_spectrum=_spectrum([(0, 1), (2 * (k - 1), 1), (k - 2, k - 1)]),
        le_cn=Fraction(4 * k * (k - 1), k + 1),
        le_plus_cn=Fraction(2 * (k - 1) * (k + 2), k + 1),
    )


def join_of_completes_closed_form(parts: Sequence[int]) -> ClosedForm:
    """K_{n1} v ... v K_{nk} is K_{n1+...+nk}."""
    _require(len(parts) > 0, "join of completes needs at least one part")
    _require(all(p >= 1 for p in parts), f"parts must be positive, got {list(parts)}")
    cf = kn_closed_form(sum(parts))
    family = Join(tuple(Complete(p) for p in parts)) if len(parts) > 1 else Complete(parts[0])
    return ClosedForm(family, cf.cnl_spectrum, cf.cnq_spectrum, cf.le_cn, cf.le_plus_cn)


def join_of_empties_closed_form(m: int, n: int) -> ClosedForm:
    """The join of edgeless graphs on m and n vertices is K_(m,n)."""
    return kmn_closed_form(m, n, family=Join((Empty(m), Empty(n))))


def kn_hyper_baselines(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """(LE_CN, LE+_CN, E_CN) of K_n; E_CN follows from CN(K_n) = (n-2) A(K_n)."""
    _require(n >= 1, f"K_n needs n >= 1, got {n}")
    cf = kn_closed_form(n)
    e_cn = Fraction(0) if n == 1 else Fraction((n - 2) * 2 * (n - 1))
    return cf.le_cn, cf.le_plus_cn, e_cn


def closed_form_for(family: GraphFamily) -> ClosedForm | None:
    """Closed form for a family instance, or None when none is known."""
    match family:
        case Complete(n):
            return kn_closed_form(n)
        case CompleteBipartite(m, n):
            return kmn_closed_form(m, n)
        case Star(k):
            return star_closed_form(k)
        case Join(parts) if all(isinstance(p, Complete) for p in _flatten_join(family)):
            return join_of_completes_closed_form([p.n for p in _flatten_join(family)])
        case Join((Empty(m), Empty(n))):
            return join_of_empties_closed_form(m, n)
    return None


def _flatten_join(family: GraphFamily) -> list[GraphFamily]:
    if isinstance(family, Join):
        return [leaf for p in family.parts for leaf in _flatten_join(p)]
    return [family]


# -- derived-graph reductions (paths and cycles) ------------------------------


def _le_pair(family: GraphFamily) -> tuple[float, float]:
    from .energies import laplacian_energy, signless_laplacian_energy

    g = generate(family)
    return laplacian_energy(g), signless_laplacian_energy(g)


def path_corollary(n: int) -> tuple[float, float]:
    """Right-hand sides LE(P_ceil) + LE(P_floor) and LE+(P_ceil) + LE+(P_floor)."""
    _require(n >= 2, f"path corollary needs n >= 2, got {n}")
    hi, lo = _le_pair(Path((n + 1) // 2)), _le_pair(Path(n // 2))
    return hi[0] + lo[0], hi[1] + lo[1]


def cycle_corollary(n: int) -> tuple[float, float]:
    """Predicted (LE_CN, LE+_CN) of C_n from the odd/even cycle reductions."""
    _require(n >= 3, f"cycle corollary needs n >= 3, got {n}")
    if n % 2:
        return _le_pair(Cycle(n))
    if n == 4:
        le, le_plus = _le_pair(Cycle(4))
        return 2 * le, 2 * le_plus
    le, le_plus = _le_pair(Cycle(n // 2))
    return 2 * le, 2 * le_plus
