"""Largest induced cluster subgraphs of comparability graphs of posets."""

from ._core import (
    CycleError,
    Error,
    NodeLimitExceeded,
    OutOfSpecifiedRange,
    ParseError,
    Poset,
    TooLarge,
    Unspecified,
    ao,
    ao_bounds,
    ao_graph,
    central_element,
    constructions,
    disjoint_union,
    enumeration,
    extremal,
    find_cover_cycle,
    find_n_shape,
    find_v_shape,
    height,
    invert,
    is_acyclic,
    is_connected,
    is_n_free,
    is_v_free,
    run_criterion,
    width,
)

__all__ = [name for name in dir() if not name.startswith("_")]
