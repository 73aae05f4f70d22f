"""The segment polytope of a quiver dimension and its scaling invariant.

W(d) is the Minkowski sum of the segments [0, beta] over all nonzero
torus weights beta of the edge representation, made translation-invariant
along the diagonal axis tau_d.  Membership of chi in r*W and the minimal
such r are decided by exact rational LP (no floating point, no tolerance).

For one-vertex quivers the facet normals of the zonotope part are the
level-set cocharacters, which gives an independent support-function
formula used as a cross-check oracle in the tests.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import lp
from .quiver_weights import (
    Quiver,
    Weight,
    adjoint_weights,
    cochar_classes,
    pair,
    rep_weights,
    tau,
)


class WPolytope:
    """r-scaled membership queries for the segment polytope of (quiver, d)."""

    def __init__(self, quiver: Quiver, dims: Sequence[int], *,
                 segment_source: str = "rep"):
        self.quiver = quiver
        self.dims = tuple(dims)
        self.blocks = tuple(dims)
        if segment_source == "rep":
            raw = rep_weights(quiver, dims)
        elif segment_source == "adjoint":
            raw = adjoint_weights(quiver, dims)
        else:
            raise ValueError(f"unknown segment source {segment_source!r}")
        counts: dict[tuple[Fraction, ...], int] = {}
        for w in raw:
            if not w.is_zero():
                counts[w.coords] = counts.get(w.coords, 0) + 1
        self.segments = [(Weight(c, self.blocks), mult)
                         for c, mult in sorted(counts.items())]
        self.axis = tau(dims)
        self._source = segment_source
        self._ray_data: list[tuple[Weight, Fraction]] | None = None

    # -- LP formulation ----------------------------------------------------
    #
    # chi in r*W  <=>  exists x_s in [0, mult_s * r], t free with
    #     sum_s x_s * beta_s + t * tau = chi.
    # Variables: x_s, slack_s (= mult_s * r - x_s), t+, t-, and for the
    # minimization also r itself.

    def _rows(self, chi: Weight, with_r: bool, r: Fraction | None):
        nseg = len(self.segments)
        nslots = sum(self.dims)
        # columns: x_0..x_{nseg-1}, s_0..s_{nseg-1}, t+, t- [, r]
        ncols = 2 * nseg + 2 + (1 if with_r else 0)
        A: list[list[Fraction]] = []
        b: list[Fraction] = []
        for i in range(nslots):
            row = [Fraction(0)] * ncols
            for s, (beta, _mult) in enumerate(self.segments):
                row[s] = beta.coords[i]
            row[2 * nseg] = self.axis.coords[i]
            row[2 * nseg + 1] = -self.axis.coords[i]
            A.append(row)
            b.append(chi.coords[i])
        for s, (_beta, mult) in enumerate(self.segments):
            row = [Fraction(0)] * ncols
            row[s] = Fraction(1)
            row[nseg + s] = Fraction(1)
            if with_r:
                row[-1] = Fraction(-mult)
                b.append(Fraction(0))
            else:
                b.append(Fraction(mult) * r)
            A.append(row)
        return A, b, ncols

    def contains(self, chi: Weight, r) -> bool:
        """Is chi in r*W (closed)?"""
        r = Fraction(r)
        if r < 0:
            raise ValueError("radius must be nonnegative")
        if chi.blocks != self.blocks:
            raise ValueError("weight has wrong block structure")
        A, b, ncols = self._rows(chi, with_r=False, r=r)
        return lp.feasible(A, b, ncols)

    def r_invariant(self, chi: Weight) -> Fraction:
        """Minimal r >= 0 with chi in r*W; raises if chi is not in the span.

        One-vertex quivers with at least one segment use the facet-ray
        support formula (pure arithmetic); the LP route is kept as
        r_invariant_lp and cross-checked in the tests.
        """
        if chi.blocks != self.blocks:
            raise ValueError("weight has wrong block structure")
        if len(self.dims) == 1 and (self.dims[0] == 1 or self.segments):
            return self.support_radius(chi)
        return self.r_invariant_lp(chi)

    def r_invariant_lp(self, chi: Weight) -> Fraction:
        """r_invariant via the exact two-phase simplex formulation."""
        if chi.blocks != self.blocks:
            raise ValueError("weight has wrong block structure")
        A, b, ncols = self._rows(chi, with_r=True, r=None)
        c = [Fraction(0)] * ncols
        c[-1] = Fraction(1)
        status, _x, value = lp.solve_lp(A, b, c)
        if status != lp.FEASIBLE:
            raise ValueError("weight does not lie in span(segments) + axis")
        return value

    # -- support-function route (one-vertex facet normals) -----------------

    def _rays(self) -> list[Weight]:
        if len(self.dims) != 1:
            raise NotImplementedError("facet rays implemented for one-vertex quivers")
        # Level-set cocharacters of all proper nonempty slot subsets,
        # projected to sum zero: the facet normals of the zonotope part.
        n = self.dims[0]
        out: list[Weight] = []
        for mask in range(1, (1 << n) - 1):
            coords = [Fraction(n if (mask >> i) & 1 else 0) for i in range(n)]
            shift = sum(coords) / n
            out.append(Weight(tuple(c - shift for c in coords), self.blocks))
        return out

    def _ray_supports(self) -> list[tuple[Weight, Fraction]]:
        if self._ray_data is None:
            self._ray_data = [(lam, self._support(lam)) for lam in self._rays()]
        return self._ray_data

    def support_radius(self, chi: Weight) -> Fraction:
        """max over facet rays of <lam, chi> / h(lam); agrees with the LP."""
        best = Fraction(0)
        for lam, h in self._ray_supports():
            num = pair(lam, chi)
            if h == 0:
                if num > 0:
                    raise ValueError("weight outside span")
                continue
            ratio = num / h
            if ratio > best:
                best = ratio
        return best

    def contains_interior(self, chi: Weight, r) -> bool:
        """Strict membership modulo the axis, via facet rays (one-vertex)."""
        r = Fraction(r)
        for lam, h in self._ray_supports():
            if pair(lam, chi) >= r * h:
                return False
        return True

    def _support(self, lam: Weight) -> Fraction:
        total = Fraction(0)
        for beta, mult in self.segments:
            p = pair(lam, beta)
            if p > 0:
                total += mult * p
        return total

    def face_cocharacter(self, chi: Weight, r: Fraction) -> tuple[tuple[int, ...], Weight] | None:
        """Finest cocharacter class whose canonical representative lam
        satisfies <lam, chi> = -r <lam, N^{lam>0}> exactly.

        Ties between equally fine classes break to the lexicographically
        earliest composition.  Returns None when r = 0.
        """
        if r == 0:
            return None
        source = rep_weights if self._source == "rep" else adjoint_weights
        weights = source(self.quiver, self.dims)
        best: tuple[tuple[int, ...], Weight] | None = None
        for comp, lam in cochar_classes(self.dims):
            if len(comp) < 2:
                continue
            pos = _positive_sum(weights, lam)
            h = pair(lam, pos)
            if h == 0:
                continue
            if pair(lam, chi) == -r * h:
                if best is None or len(comp) > len(best[0]) or \
                        (len(comp) == len(best[0]) and comp < best[0]):
                    best = (comp, lam)
        return best


def _positive_sum(weights, lam: Weight) -> Weight:
    acc = Weight.zero(lam.blocks)
    for beta in weights:
        if pair(lam, beta) > 0:
            acc = acc + beta
    return acc


@lru_cache(maxsize=None)
def cached_polytope(quiver: Quiver, dims: tuple[int, ...],
                    segment_source: str = "rep") -> WPolytope:
    """Shared immutable polytope instances for the enumeration hot paths."""
    return WPolytope(quiver, dims, segment_source=segment_source)
