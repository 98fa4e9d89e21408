"""Partition monoid diagrams, presentations and rewriting certificates."""

from ._partmon import (
    Diagram,
    PartmonError,
    bell,
    count_Pn,
    equal,
    evaluate,
    factorize,
    gen_e,
    gen_f,
    gen_s,
    gen_t,
    normal_form,
    replay,
)

__all__ = [
    "Diagram",
    "PartmonError",
    "bell",
    "count_Pn",
    "equal",
    "evaluate",
    "factorize",
    "gen_e",
    "gen_f",
    "gen_s",
    "gen_t",
    "normal_form",
    "replay",
]
