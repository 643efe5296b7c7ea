"""Combinatorial hypergraphs, colorings, and definition-level verifiers.

Vertices of a hypergraph are the integers ``0 .. n-1``.  Hyperedges are
non-empty vertex subsets, deduplicated as sets: multiplicity never matters
to any of the coloring conditions checked here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable


class InvariantViolationError(RuntimeError):
    """An internally verified guarantee failed.  Indicates a library bug."""


class Hypergraph:
    """Vertex count plus a deduplicated set of non-empty hyperedges."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        for e in edges:
            fe = frozenset(e)
            if not fe:
                raise ValueError("hyperedges must be non-empty")
            if not all(isinstance(v, int) and 0 <= v < n for v in fe):
                raise ValueError(f"hyperedge {sorted(fe)} not within 0..{n - 1}")
            normalized.add(fe)
        self.n = n
        self.edges = frozenset(normalized)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={len(self.edges)})"

    def sorted_edges(self) -> list[frozenset[int]]:
        """Edges in a deterministic order (by size, then lexicographic)."""
        return sorted(self.edges, key=lambda e: (len(e), sorted(e)))


class Coloring:
    """Total assignment of positive integer colors to vertices 0..n-1."""

    __slots__ = ("colors",)

    def __init__(self, colors: Iterable[int]):
        cs = tuple(int(c) for c in colors)
        if any(c < 1 for c in cs):
            raise ValueError("colors must be positive integers")
        self.colors = cs

    @property
    def palette_size(self) -> int:
        """Number of distinct colors actually used."""
        return len(set(self.colors))

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __iter__(self):
        return iter(self.colors)

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.colors == other.colors

    def __hash__(self):
        return hash(self.colors)

    def __repr__(self):
        return f"Coloring({list(self.colors)!r})"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a coloring check; falsy when a hyperedge violates it."""

    ok: bool
    edge: frozenset | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _check_total(h: Hypergraph, coloring: Coloring) -> None:
    if len(coloring) != h.n:
        raise ValueError(
            f"coloring covers {len(coloring)} vertices, hypergraph has {h.n}"
        )


def _kscf_edge_failure(edge, colors, k):
    cs = [colors[v] for v in edge]
    if len(edge) >= k:
        unique = sum(1 for m in Counter(cs).values() if m == 1)
        if unique < k:
            return (
                f"edge of size {len(edge)} needs >= {k} uniquely colored "
                f"vertices, found {unique}"
            )
    else:
        if len(set(cs)) != len(edge):
            return (
                f"edge of size {len(edge)} < k={k} must be rainbow, "
                f"colors {sorted(cs)} repeat"
            )
    return None


def verify_kscf(h: Hypergraph, coloring: Coloring, k: int) -> Verdict:
    """Check that ``coloring`` is k-strong-conflict-free for ``h``.

    Every hyperedge of size at least k must contain at least k vertices
    whose colors have multiplicity one inside the edge; every smaller
    hyperedge must be rainbow.  On failure the reported edge is the first
    violating one in deterministic (size, lexicographic) order.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_total(h, coloring)
    colors = coloring.colors
    for edge in h.edges:
        if _kscf_edge_failure(edge, colors, k) is not None:
            # Rescan deterministically so the reported edge is stable.
            for e in h.sorted_edges():
                reason = _kscf_edge_failure(e, colors, k)
                if reason is not None:
                    return Verdict(False, e, reason)
    return Verdict(True)


def _colorful_edge_ok(edge, colors, k):
    need = min(len(edge), k)
    seen = set()
    for v in edge:
        seen.add(colors[v])
        if len(seen) >= need:
            return True
    return len(seen) >= need


def verify_k_colorful(h: Hypergraph, coloring: Coloring, k: int) -> Verdict:
    """Check that every hyperedge carries at least min(|e|, k) distinct colors."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_total(h, coloring)
    colors = coloring.colors
    for edge in h.edges:
        if not _colorful_edge_ok(edge, colors, k):
            for e in h.sorted_edges():
                if not _colorful_edge_ok(e, colors, k):
                    distinct = len({colors[v] for v in e})
                    return Verdict(
                        False,
                        e,
                        f"edge of size {len(e)} has {distinct} distinct colors, "
                        f"needs {min(len(e), k)}",
                    )
    return Verdict(True)


def induced_subhypergraph(
    h: Hypergraph, vertices: Iterable[int]
) -> tuple[Hypergraph, tuple[int, ...]]:
    """Restrict ``h`` to ``vertices``, re-indexed to 0..|S|-1.

    Returns the sub-hypergraph together with the id map: position ``new``
    of the returned tuple holds the original id of vertex ``new``.
    Intersected edges are deduplicated and empty intersections dropped.
    """
    vset = set(vertices)
    if not all(0 <= v < h.n for v in vset):
        raise ValueError("vertex subset not within hypergraph")
    old_ids = tuple(sorted(vset))
    index = {old: new for new, old in enumerate(old_ids)}
    edges = set()
    for e in h.edges:
        cut = e & vset
        if cut:
            edges.add(frozenset(index[v] for v in cut))
    return Hypergraph(len(old_ids), edges), old_ids


def interval_hypergraph(n: int) -> Hypergraph:
    """All n(n+1)/2 discrete intervals [i..j] over vertices 0..n-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    edges = [frozenset(range(i, j + 1)) for i in range(n) for j in range(i, n)]
    return Hypergraph(n, edges)


def cyclic_colorful_coloring(n: int, i: int) -> Coloring:
    """Color 0..n-1 cyclically with colors 1..i in increasing vertex order.

    For the discrete-interval hypergraph on n vertices this is i-colorful:
    any window of w consecutive vertices sees min(w, i) distinct colors.
    """
    if n < 1 or i < 1:
        raise ValueError("n and i must be >= 1")
    return Coloring((v % i) + 1 for v in range(n))


def cyclic_rank_coloring(vertices: Iterable[int], k: int) -> dict[int, int]:
    """Cyclic coloring of a vertex subset by rank order.

    This is the hereditary colorful colorer for interval hypergraphs: the
    sub-hypergraph induced by any subset is again an interval hypergraph
    over the ranks, so rank-cyclic coloring stays k-colorful.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    return {v: (rank % k) + 1 for rank, v in enumerate(sorted(vertices))}
