"""Exhaustive minimum-palette search, the independent ground truth.

The search enumerates colorings in canonical form (restricted growth
strings: the first occurrence of color c+1 never precedes the first
occurrence of color c), which prunes all palette permutations.  Intended
for tiny instances only; everything else is refused via the cap.
"""

from __future__ import annotations

from typing import Iterator

from .hypergraph import (
    Coloring,
    Hypergraph,
    InvariantViolationError,
    verify_k_colorful,
    verify_kscf,
)

DEFAULT_ORACLE_CAP = 8

_VERIFIERS = {"kscf": verify_kscf, "colorful": verify_k_colorful}


def _canonical_colorings(n: int, palette: int) -> Iterator[tuple[int, ...]]:
    """All colorings of n vertices using exactly ``palette`` colors, canonical."""
    coloring = [0] * n

    def extend(pos: int, used: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            if used == palette:
                yield tuple(coloring)
            return
        # Cannot reach the full palette with the vertices that remain.
        if used + (n - pos) < palette:
            return
        top = min(used + 1, palette)
        for c in range(1, top + 1):
            coloring[pos] = c
            yield from extend(pos + 1, max(used, c))

    yield from extend(0, 0)


def brute_force_min_colors(
    h: Hypergraph, k: int, mode: str, cap: int = DEFAULT_ORACLE_CAP
) -> tuple[int, Coloring]:
    """Least palette size admitting a valid coloring, with a witness.

    ``mode`` selects the condition: "kscf" or "colorful".  Raises if the
    instance exceeds ``cap`` vertices; the search is exponential.
    """
    if mode not in _VERIFIERS:
        raise ValueError(f"mode must be one of {sorted(_VERIFIERS)}, got {mode!r}")
    if k < 1:
        raise ValueError("k must be >= 1")
    if h.n > cap:
        raise ValueError(
            f"instance has {h.n} vertices, above the oracle cap of {cap}; "
            f"raise the cap explicitly if you really want the exhaustive search"
        )
    verifier = _VERIFIERS[mode]
    if h.n == 0:
        return 0, Coloring(())
    for palette in range(1, h.n + 1):
        for candidate in _canonical_colorings(h.n, palette):
            coloring = Coloring(candidate)
            if verifier(h, coloring, k):
                return palette, coloring
    raise InvariantViolationError(  # pragma: no cover - rainbow always works
        "no coloring found up to n colors"
    )
