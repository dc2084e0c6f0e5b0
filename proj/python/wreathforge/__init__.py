"""Exact computations in wreath products, graph products, and their truncations.

The heavy lifting lives in the compiled extension; this package re-exports it.
Contexts are plain dicts mirroring the CLI's JSON files, e.g.

    ctx  = {"graph": {"vertices": ["u"], "edges": []}, "spec": {"kind": "cyclic", "m": 3}}
    wctx = {"A": {"kind": "cyclic", "m": 2}, "B": {"kind": "cyclic", "m": 0}}
    lctx = {"F": {"kind": "cyclic", "m": 2}, "H": {"kind": "cyclic", "m": 0}}
"""

from wreathforge._core import (
    aut_apply,
    aut_equal,
    brute_inverse,
    cayley_clique,
    conjugate,
    factor_modulus,
    factor_through_truncation,
    free_involutive_reduce,
    grig_presentation,
    grig_presentation_text,
    irreducible,
    is_trivial_unit,
    nf,
    normalizes_base,
    qm_ball,
    qm_ball_dot,
    sigma_sub,
    support,
    trans_is_inner,
    unit_invert,
    u_word,
    v_word,
    wreath_mul,
)

__all__ = [
    "aut_apply",
    "aut_equal",
    "brute_inverse",
    "cayley_clique",
    "conjugate",
    "factor_modulus",
    "factor_through_truncation",
    "free_involutive_reduce",
    "grig_presentation",
    "grig_presentation_text",
    "irreducible",
    "is_trivial_unit",
    "nf",
    "normalizes_base",
    "qm_ball",
    "qm_ball_dot",
    "sigma_sub",
    "support",
    "trans_is_inner",
    "unit_invert",
    "u_word",
    "v_word",
    "wreath_mul",
]
