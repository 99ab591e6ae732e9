"""Exact dimension theory for von Neumann algebras with a finite atomic center.

An algebra is described by the types of its central atoms; a dimension
element assigns to each atom a value in the chain of nonnegative rationals
followed by the alephs.  The package computes the order, the addition, the
complete-lattice bounds, the quotient operator topology closures and a
finite-dimensional rank oracle to check them against.
"""

from __future__ import annotations

from .algebra import (
    II1,
    III,
    IFin,
    IIInf,
    IInf,
    AlgebraDesc,
    AlgebraMismatch,
    CentralPositive,
    CentralProjection,
    amplify,
    cone_domain,
    embed_class,
    projection_domain,
    unit,
)
from .chainset import NATURALS, ChainSet, EmptyChainSet, Interval, Progression, chain_glb, chain_lub
from .complattice import (
    Described,
    Explicit,
    InvalidFamily,
    empty_inf,
    empty_sup,
    family_inf,
    family_sup,
    inf_formal_sum,
    pointwise_inf,
    pointwise_sup,
    sup_formal_sum,
)
from .dimfun import (
    DimElement,
    DomainError,
    FormalSum,
    Slice,
    central_support,
    complement_in,
    d_add,
    d_leq,
    d_scale,
    from_formal_sum,
    is_cone_class,
    is_projection_class,
    pair_join,
    pair_meet,
    to_formal_sum,
    trace_collapse,
    zero,
)
from .dsl import DslError, parse, pretty_print
from .extval import Aleph, ExtValue, Fin, max_aleph, set_max_aleph
from .fdoracle import oracle_check, rep_common_sub, rep_common_super
from .qot import (
    ExplicitSet,
    ProductSet,
    UnsupportedFragment,
    closure,
    closure_singleton,
    in_closure,
    is_T0,
    is_T1,
    quotient_maps_normal,
)

__version__ = "0.1.0"

__all__ = [
    "II1",
    "III",
    "IFin",
    "IIInf",
    "IInf",
    "AlgebraDesc",
    "AlgebraMismatch",
    "CentralPositive",
    "CentralProjection",
    "amplify",
    "cone_domain",
    "embed_class",
    "projection_domain",
    "unit",
    "NATURALS",
    "ChainSet",
    "EmptyChainSet",
    "Interval",
    "Progression",
    "chain_glb",
    "chain_lub",
    "Described",
    "Explicit",
    "InvalidFamily",
    "empty_inf",
    "empty_sup",
    "family_inf",
    "family_sup",
    "inf_formal_sum",
    "pointwise_inf",
    "pointwise_sup",
    "sup_formal_sum",
    "DimElement",
    "DomainError",
    "FormalSum",
    "Slice",
    "central_support",
    "complement_in",
    "d_add",
    "d_leq",
    "d_scale",
    "from_formal_sum",
    "is_cone_class",
    "is_projection_class",
    "pair_join",
    "pair_meet",
    "to_formal_sum",
    "trace_collapse",
    "zero",
    "DslError",
    "parse",
    "pretty_print",
    "Aleph",
    "ExtValue",
    "Fin",
    "max_aleph",
    "set_max_aleph",
    "oracle_check",
    "rep_common_sub",
    "rep_common_super",
    "ExplicitSet",
    "ProductSet",
    "UnsupportedFragment",
    "closure",
    "closure_singleton",
    "in_closure",
    "is_T0",
    "is_T1",
    "quotient_maps_normal",
]
