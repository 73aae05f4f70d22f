"""Quivers, dimension vectors, and exact-rational weight arithmetic.

Weights of G(d) = prod_i GL(d_i) live on "slots": one coordinate per row of
each vertex block, ordered vertex by vertex.  Everything is a Fraction; a
cocharacter is simply an integral weight used through the pairing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Quiver:
    """A quiver with a distinguished subset of edges (the cut).

    ``edges`` are (source, target) pairs of vertex indices; ``cut`` holds
    indices into ``edges``.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    cut: frozenset[int]

    def __post_init__(self) -> None:
        nv = len(self.vertices)
        for s, t in self.edges:
            if not (0 <= s < nv and 0 <= t < nv):
                raise ValueError(f"edge ({s},{t}) out of range for {nv} vertices")
        for c in self.cut:
            if not (0 <= c < len(self.edges)):
                raise ValueError(f"cut index {c} out of range")

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @staticmethod
    def from_json(text: str) -> "Quiver":
        data = json.loads(text)
        return Quiver(
            vertices=tuple(range(len(data["vertices"]))),
            edges=tuple((int(s), int(t)) for s, t in data["edges"]),
            cut=frozenset(int(c) for c in data.get("cut", [])),
        )


def jordan() -> Quiver:
    """One vertex, one loop, no cut."""
    return Quiver(vertices=(0,), edges=(((0, 0)),), cut=frozenset())


def doubled_jordan() -> Quiver:
    """One vertex, two loops, no cut."""
    return Quiver(vertices=(0,), edges=((0, 0), (0, 0)), cut=frozenset())


def tripled_jordan() -> Quiver:
    """One vertex, three loops; the third loop is the cut."""
    return Quiver(vertices=(0,), edges=((0, 0), (0, 0), (0, 0)), cut=frozenset({2}))


_BUILTINS = {
    "jordan": jordan,
    "doubled-jordan": doubled_jordan,
    "tripled-jordan": tripled_jordan,
}


def builtin_quiver(name: str) -> Quiver:
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise ValueError(f"unknown quiver {name!r}; known: {sorted(_BUILTINS)}") from None


def block_offsets(dims: Sequence[int]) -> list[int]:
    offs = [0]
    for d in dims:
        offs.append(offs[-1] + d)
    return offs


@dataclass(frozen=True)
class Weight:
    """A weight (or cocharacter) of G(d): one Fraction per slot.

    ``blocks`` records the vertex block sizes, i.e. the dimension vector.
    """

    coords: tuple[Fraction, ...]
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        if sum(self.blocks) != len(self.coords):
            raise ValueError("coordinate count does not match block sizes")

    @staticmethod
    def make(values: Iterable, blocks: Sequence[int]) -> "Weight":
        return Weight(tuple(Fraction(v) for v in values), tuple(blocks))

    @staticmethod
    def zero(blocks: Sequence[int]) -> "Weight":
        return Weight.make([0] * sum(blocks), blocks)

    def __add__(self, other: "Weight") -> "Weight":
        if self.blocks != other.blocks:
            raise ValueError("block mismatch")
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.blocks)

    def __sub__(self, other: "Weight") -> "Weight":
        if self.blocks != other.blocks:
            raise ValueError("block mismatch")
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.blocks)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords), self.blocks)

    def scale(self, k) -> "Weight":
        k = Fraction(k)
        return Weight(tuple(k * a for a in self.coords), self.blocks)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def is_dominant(self) -> bool:
        """Non-increasing within each vertex block."""
        off = 0
        for b in self.blocks:
            for i in range(off, off + b - 1):
                if self.coords[i] < self.coords[i + 1]:
                    return False
            off += b
        return True

    def is_antidominant(self) -> bool:
        off = 0
        for b in self.blocks:
            for i in range(off, off + b - 1):
                if self.coords[i] > self.coords[i + 1]:
                    return False
            off += b
        return True

    def total(self) -> Fraction:
        return sum(self.coords, Fraction(0))

    def block_sums(self) -> tuple[Fraction, ...]:
        sums = []
        off = 0
        for b in self.blocks:
            sums.append(sum(self.coords[off:off + b], Fraction(0)))
            off += b
        return tuple(sums)

    def restrict(self, slots: Sequence[int], blocks: Sequence[int]) -> "Weight":
        return Weight(tuple(self.coords[i] for i in slots), tuple(blocks))

    def embed(self, slots: Sequence[int], blocks: Sequence[int]) -> "Weight":
        coords = [Fraction(0)] * sum(blocks)
        for local, g in enumerate(slots):
            coords[g] = self.coords[local]
        return Weight(tuple(coords), tuple(blocks))


def pair(lam: Weight, chi: Weight) -> Fraction:
    if len(lam.coords) != len(chi.coords):
        raise ValueError("slot mismatch")
    return sum((a * b for a, b in zip(lam.coords, chi.coords)), Fraction(0))


def _slot_ranges(quiver: Quiver, dims: Sequence[int]) -> list[range]:
    offs = block_offsets(dims)
    return [range(offs[i], offs[i + 1]) for i in range(len(dims))]


def _edge_weights(quiver: Quiver, dims: Sequence[int], edge_indices: Iterable[int]) -> list[Weight]:
    """Weights e^(t)_l - e^(s)_m of Hom(C^{d_s}, C^{d_t}) per edge."""
    blocks = tuple(dims)
    n = sum(dims)
    ranges = _slot_ranges(quiver, dims)
    out = []
    for e in edge_indices:
        s, t = quiver.edges[e]
        for l in ranges[t]:
            for m in ranges[s]:
                coords = [Fraction(0)] * n
                coords[l] += 1
                coords[m] -= 1
                out.append(Weight(tuple(coords), blocks))
    return out


def rep_weights(quiver: Quiver, dims: Sequence[int]) -> list[Weight]:
    """All torus weights of the edge representation R(d)."""
    return _edge_weights(quiver, dims, range(len(quiver.edges)))


def cut_weights(quiver: Quiver, dims: Sequence[int]) -> list[Weight]:
    return _edge_weights(quiver, dims, sorted(quiver.cut))


def adjoint_weights(quiver: Quiver, dims: Sequence[int]) -> list[Weight]:
    """Weights e_l - e_m (all l, m per vertex) of the adjoint g(d)."""
    blocks = tuple(dims)
    n = sum(dims)
    out = []
    for rng in _slot_ranges(quiver, dims):
        for l in rng:
            for m in rng:
                coords = [Fraction(0)] * n
                coords[l] += 1
                coords[m] -= 1
                out.append(Weight(tuple(coords), blocks))
    return out


def rho(dims: Sequence[int]) -> Weight:
    """Half-sum weight: ((n-1)/2, ..., -(n-1)/2) on each vertex block."""
    coords = []
    for b in dims:
        coords.extend(Fraction(b - 1 - 2 * j, 2) for j in range(b))
    return Weight(tuple(coords), tuple(dims))


def nu(dims: Sequence[int]) -> Weight:
    return Weight.make([1] * sum(dims), dims)


def tau(dims: Sequence[int]) -> Weight:
    n = sum(dims)
    return Weight.make([Fraction(1, n)] * n, dims)


def _signed_sum(lam: Weight, weights: Iterable[Weight], sign: int) -> Weight:
    acc = Weight.zero(lam.blocks)
    for beta in weights:
        p = pair(lam, beta)
        if sign > 0 and p > 0:
            acc = acc + beta
        elif sign < 0 and p < 0:
            acc = acc + beta
    return acc


def N_positive(quiver: Quiver, dims: Sequence[int], lam: Weight) -> Weight:
    """Sum of edge-representation weights beta with <lam, beta> > 0."""
    return _signed_sum(lam, rep_weights(quiver, dims), +1)


def adjoint_positive(quiver: Quiver, dims: Sequence[int], lam: Weight) -> Weight:
    """Sum of adjoint weights alpha with <lam, alpha> > 0."""
    return _signed_sum(lam, adjoint_weights(quiver, dims), +1)


def omega_weight(quiver: Quiver, dims: Sequence[int], lam: Weight) -> Weight:
    """Sum of cut-edge weights alpha with <lam, alpha> < 0."""
    return _signed_sum(lam, cut_weights(quiver, dims), -1)


def n_lambda(quiver: Quiver, dims: Sequence[int], lam: Weight) -> Fraction:
    """Pairing against the determinant of the lam-nonpositive cotangent part.

    Two-term model: sum of positive pairings over edge weights minus the
    same sum over adjoint weights.
    """
    total = Fraction(0)
    for beta in rep_weights(quiver, dims):
        p = pair(lam, beta)
        if p > 0:
            total += p
    for alpha in adjoint_weights(quiver, dims):
        p = pair(lam, alpha)
        if p > 0:
            total -= p
    return total


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of n into positive parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def composition_cocharacter(comp: Sequence[int]) -> Weight:
    """Canonical antidominant cocharacter attached to an ordered composition.

    Consecutive integer levels 0,1,...,k-1 rescaled by the minimal positive
    integer making a sum-zero integral shift possible.
    """
    total = sum(comp)
    if total == 0:
        raise ValueError("empty composition")
    moment = sum(c * i for i, c in enumerate(comp))
    g = gcd(moment, total) if moment else total
    s = total // g
    t = s * moment // total
    coords = []
    for i, c in enumerate(comp):
        coords.extend([s * i - t] * c)
    return Weight.make(coords, (total,))


def block_decompose(chi: Weight, lam: Weight) -> list[Weight]:
    """Split chi into consecutive segments along the level blocks of lam.

    lam must be antidominant (non-decreasing levels per block); each
    maximal run of equal levels yields one single-block segment of chi.
    """
    if chi.blocks != lam.blocks:
        raise ValueError("weight and cocharacter have different slot shapes")
    levels = lam.coords
    off = 0
    for b in lam.blocks:
        seg = levels[off:off + b]
        if any(a > c for a, c in zip(seg, seg[1:])):
            raise ValueError("cocharacter is not antidominant")
        off += b
    out = []
    off = 0
    for b in lam.blocks:
        start = off
        for i in range(off, off + b):
            if i > start and levels[i] != levels[i - 1]:
                out.append(Weight.make(chi.coords[start:i], (i - start,)))
                start = i
        out.append(Weight.make(chi.coords[start:off + b], (off + b - start,)))
        off += b
    return out


def cochar_classes(dims: Sequence[int]) -> list[tuple[tuple[int, ...], Weight]]:
    """All antidominant cocharacter classes with canonical representatives.

    Only one-vertex quivers carry a canonical enumeration here; classes are
    ordered compositions of the dimension.
    """
    if len(dims) != 1:
        raise NotImplementedError("cocharacter class enumeration needs a one-vertex quiver")
    d = dims[0]
    return [(comp, composition_cocharacter(comp)) for comp in compositions(d)]
