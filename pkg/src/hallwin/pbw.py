"""Window dimension counts and the primitive-dimension recursion."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb

from dataclasses import dataclass

from .index_sets import _all_dominant, enum_U, window_generators
from .polytope import cached_polytope
from .quiver_weights import Quiver, Weight, builtin_quiver, rho
from .standard_form import (
    DecompositionError,
    decompose,
    omega_shift,
    tree_of_partition,
)


def _quiver(quiver: Quiver | None) -> Quiver:
    return quiver if quiver is not None else builtin_quiver("tripled-jordan")


def window_count(d: int, w: int, quiver: Quiver | None = None) -> int:
    """Number of window generators m(d, w)."""
    if d <= 0:
        raise ValueError("dimension must be positive")
    q = _quiver(quiver)
    return len(window_generators(q, (d,), w))


def window_count_table(d_max: int, w_max: int,
                       quiver: Quiver | None = None) -> dict[tuple[int, int], int]:
    """m(d, w) for 1 <= d <= d_max and |w| <= w_max."""
    table = {}
    for d in range(1, d_max + 1):
        for w in range(-w_max, w_max + 1):
            table[(d, w)] = window_count(d, w, quiver)
    return table


def sym_count(p: int, ell: int) -> int:
    """Dimension of the degree-ell symmetric power of a p-dimensional space."""
    if ell < 0:
        raise ValueError("negative symmetric degree")
    if p < 0:
        raise ValueError("negative space dimension")
    return comb(p + ell - 1, ell) if ell > 0 else 1


@dataclass(frozen=True)
class BijectionReport:
    d: int
    w: int
    bound: int
    domain_size: int
    image_size: int
    target_size: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _leaf_shifts(quiver: Quiver, dims: tuple[int, ...], A, delta: Weight):
    """Per-leaf-block shift weights of the tree attached to a partition.

    Each leaf block of the tree of A sees rho + delta plus r_j N_j summed
    over its ancestor nodes, restricted to the block.
    """
    form = tree_of_partition(quiver, dims, A, delta)
    shift = rho(dims) + delta
    for node in form.nodes:
        shift = shift + node.N.scale(node.r)
    out = []
    for block in form.leaf_blocks:
        block = tuple(block)
        coords = [shift.coords[i] for i in block]
        out.append(Weight.make(coords, (len(block),)))
    return out


def verify_bijection(d: int, w: int, bound: int,
                     quiver: Quiver | None = None,
                     delta: Weight | None = None) -> BijectionReport:
    """Check the weight-level bijection chi <-> (partition, block windows).

    Domain: dominant integral chi with coordinate sum w and |coords| <=
    bound.  Each chi maps to its leaf partition together with the
    restrictions of chi to the leaf blocks.  The report checks that every
    block restriction is a window generator for the block's shifted
    window, that the map is injective, that trees depend only on the
    partition, that every (partition, generator tuple) whose concatenation
    is dominant and within bound is hit, and that the shifted partitions
    have strictly decreasing slopes.
    """
    if d <= 0:
        raise ValueError("dimension must be positive")
    if bound <= 0:
        raise ValueError("coordinate bound must be positive")
    q = quiver if quiver is not None else builtin_quiver("tripled-jordan")
    dims = (d,)
    if delta is None:
        delta = Weight.zero(dims)
    half = Fraction(1, 2)
    violations: list[str] = []
    image: dict[tuple, tuple] = {}
    shifts_by_A: dict[tuple, list[Weight]] = {}
    domain = [Weight.make(c, dims) for c in _all_dominant(d, -bound, bound)
              if sum(c) == w]
    for chi in domain:
        form = decompose(q, dims, chi, delta)
        A = form.partition
        blocks = tuple(tuple(b) for b in form.leaf_blocks)
        gens = tuple(tuple(chi.coords[i] for i in b) for b in blocks)
        key = (A, gens)
        if key in image:
            violations.append(f"not injective: {chi.coords} and "
                              f"{image[key]} share image {key}")
        image[key] = chi.coords
        if A not in shifts_by_A:
            try:
                shifts_by_A[A] = _leaf_shifts(q, dims, A, delta)
                tree = tree_of_partition(q, dims, A, delta)
                if tree.r_sequence() != form.r_sequence():
                    violations.append(
                        f"tree of {A} disagrees with decomposition of {chi.coords}")
            except DecompositionError as exc:
                violations.append(f"partition {A} of {chi.coords}: {exc}")
                shifts_by_A[A] = []
        shifts = shifts_by_A[A]
        for gen, shift in zip(gens, shifts):
            b = len(gen)
            poly = cached_polytope(q, (b,))
            if not poly.contains(Weight.make(gen, (b,)) + shift, half):
                violations.append(
                    f"block weight {gen} of {chi.coords} is outside its window")
    # Surjectivity onto the bounded sub-product.
    target = 0
    for A, shifts in shifts_by_A.items():
        if not shifts:
            continue
        combos = [()]
        for (bd, bw), shift in zip(A, shifts):
            block_delta = shift - rho((bd,))
            block_gens = [g.coords
                          for g in window_generators(q, (bd,), bw, block_delta)]
            combos = [c + (g,) for c in combos for g in block_gens]
        for combo in combos:
            flat = tuple(x for g in combo for x in g)
            if any(a < b for a, b in zip(flat, flat[1:])):
                continue
            if any(abs(x) > bound for x in flat):
                continue
            target += 1
            if (A, combo) not in image:
                violations.append(f"unreached image ({A}, {combo})")
    for A in shifts_by_A:
        shifted = omega_shift(q, dims, A)
        slopes = [Fraction(pw, pd) for pd, pw in shifted]
        if any(a <= b for a, b in zip(slopes, slopes[1:])):
            violations.append(f"omega shift of {A} has non-decreasing slopes: {shifted}")
    return BijectionReport(d=d, w=w, bound=bound, domain_size=len(domain),
                           image_size=len(image), target_size=target,
                           violations=tuple(violations))


def primitive_dims(d_max: int, w_max: int,
                   quiver: Quiver | None = None) -> dict[tuple[int, int], int]:
    """Solve m(d, w) = sum over equal-slope partitions of products of
    symmetric-power dimensions of the primitive counts p(d', w').

    Strong induction on d: the partition with a single part (d, w)
    contributes p(d, w) linearly; every other equal-slope partition
    involves strictly smaller parts only.  Values may come out negative;
    they are reported as-is.
    """
    q = _quiver(quiver)
    m = window_count_table(d_max, w_max, q)
    p: dict[tuple[int, int], int] = {}
    for d in range(1, d_max + 1):
        for w in range(-w_max, w_max + 1):
            total = 0
            for parts in enum_U(d, w):
                if len(parts) == 1:
                    continue
                groups = Counter(parts)
                term = 1
                for (pd, pw), mult in groups.items():
                    term *= sym_count(p[(pd, pw)], mult)
                total += term
            p[(d, w)] = m[(d, w)] - total
    return p
