"""Exact-rational toolkit for window categories over symmetric quivers.

Weight-lattice combinatorics for products of general linear groups attached
to a quiver with a cut: polytope membership and r-invariants via exact
simplex LP, iterated cocharacter decompositions of dominant weights,
partition index sets with a semiorthogonal-style order, window counting
with a PBW-type recursion, and an exact shuffle product with a two-parameter
kernel.  All arithmetic is in Fraction / exact symbolics; no floats.
"""

from .quiver_weights import (
    Quiver,
    Weight,
    jordan,
    doubled_jordan,
    tripled_jordan,
    builtin_quiver,
    rep_weights,
    adjoint_weights,
    cut_weights,
    rho,
    nu,
    tau,
    pair,
    n_lambda,
    N_positive,
    adjoint_positive,
    omega_weight,
    compositions,
    composition_cocharacter,
    cochar_classes,
    block_decompose,
)
from .polytope import WPolytope
from .standard_form import (
    StandardForm,
    Node,
    decompose,
    partition_of,
    tree_of_partition,
    slope_to_tree,
    chi_A,
    delta_Ai,
    omega_shift,
)
from .index_sets import (
    Truncation,
    EnumResult,
    window_generators,
    enum_V,
    enum_U,
    enum_S,
    enum_T,
    compare,
    partition_refines,
)
from .pbw import (
    BijectionReport,
    window_count,
    window_count_table,
    sym_count,
    primitive_dims,
    verify_bijection,
)
from . import shuffle

__all__ = [name for name in dir() if not name.startswith("_")]
