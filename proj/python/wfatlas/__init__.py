"""Smooth weak Fano toric varieties of Picard rank 2 and 3."""

from ._wfatlas import (
    Error,
    Fan,
    InternalError,
    __version__,
    are_isomorphic,
    batyrev,
    blowdown,
    bott_converse_check,
    c1_top,
    c1sq_c2,
    classify,
    construct,
    enumerate_moves,
    export_table,
    find_isomorphism,
    flop,
    h0_tangent,
    h1_omega1_anticanonical,
    is_extremal,
    is_fano,
    is_weak_fano,
    kleinschmidt,
    projective_bundle,
    set_thread_limit,
    top_chern_number,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
