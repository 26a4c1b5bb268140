"""Subgroup intersection calculus for free times free-abelian groups.

Thin wrapper over the C++ core: words, exact integer lattice arithmetic,
Stallings folding, subgroup bases and completions, the multiple-intersection
decision procedure, and the configuration realizers/verifier. Documents use
the same JSON-shaped dictionaries as the `ftfa` command line tool.
"""

from ._ftfakit import (
    FtfaError,
    ball,
    completion,
    exponent_vector,
    fold_info,
    hnf,
    intersect,
    is_howson,
    kernel,
    lattice_meet,
    member,
    obstruction_bound,
    preimage,
    realize_free,
    realize_ftfa,
    reduce_word,
    solve_left,
    strong_join,
    subgroup_basis,
    verify,
    word_inverse,
    word_mul,
)

__all__ = [
    "FtfaError",
    "ball",
    "completion",
    "exponent_vector",
    "fold_info",
    "hnf",
    "intersect",
    "is_howson",
    "kernel",
    "lattice_meet",
    "member",
    "obstruction_bound",
    "preimage",
    "realize_free",
    "realize_ftfa",
    "reduce_word",
    "solve_left",
    "strong_join",
    "subgroup_basis",
    "verify",
    "word_inverse",
    "word_mul",
]
