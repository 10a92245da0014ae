"""Nochka weights for hyperplane arrangements in subgeneral position.

Thin wrapper over the C++ core. The main entry points:

    Arrangement(k, n, hyperplanes)  -- covectors as rational strings
    check_subgeneral(arr)           -- position check with violating flats
    flats(arr)                      -- the intersection lattice
    weights(arr)                    -- the full weight certificate
    verify(arr, weights, ...)       -- independent condition re-check
    generate(n, k, q, seed, ...)    -- seeded subgeneral-by-construction input
    diagram_svg(arr)                -- deterministic SVG rendering
"""

from ._nochka import (
    Arrangement,
    HypothesisError,
    ParseError,
    SubgeneralError,
    check_subgeneral,
    diagram_svg,
    emit_arrangement,
    flats,
    generate,
    parse_arrangement,
    toda,
    verify,
    weights,
)

__all__ = [
    "Arrangement",
    "HypothesisError",
    "ParseError",
    "SubgeneralError",
    "check_subgeneral",
    "diagram_svg",
    "emit_arrangement",
    "flats",
    "generate",
    "parse_arrangement",
    "toda",
    "verify",
    "weights",
]
