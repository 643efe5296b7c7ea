"""Geometric regions and the combinatorial structure they induce.

Two families are supported: closed discs and closed axis-parallel
rectangles.  Faces of the arrangement are found by testing a finite set
of candidate points chosen so that every distinct containment set is
realized by at least one candidate.

Discs use floating point with an adaptive perturbation epsilon; the
instance is rejected as degenerate when two circles are tangent or
identical within tolerance.  Rectangles are handled exactly: coordinates
are mapped to integer ranks (even ranks for input coordinates, odd ranks
for the gaps between them), where every containment and interiority test
is an integer comparison.  Shared rectangle coordinates are therefore
fine and no epsilon exists for rectangles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

import numpy as np

from .hypergraph import Hypergraph

DEFAULT_DEGENERACY_TOL = 1e-9
DEFAULT_EPSILON_FACTOR = 1e-6
_MEMBERSHIP_CHUNK = 4096


class GeometryError(ValueError):
    """Invalid geometric input (mixed families, empty instance, ...)."""


class DegenerateGeometryError(GeometryError):
    """Input violates the general-position requirements."""

    def __init__(self, kind: str, detail: str):
        super().__init__(f"degenerate geometry ({kind}): {detail}")
        self.kind = kind


@dataclass(frozen=True)
class Disc:
    cx: float
    cy: float
    r: float

    def __post_init__(self):
        object.__setattr__(self, "cx", float(self.cx))
        object.__setattr__(self, "cy", float(self.cy))
        object.__setattr__(self, "r", float(self.r))
        if not (self.r > 0 and math.isfinite(self.r)):
            raise ValueError("disc radius must be positive and finite")
        if not (math.isfinite(self.cx) and math.isfinite(self.cy)):
            raise ValueError("disc center must be finite")

    def contains(self, x: float, y: float) -> bool:
        return (x - self.cx) ** 2 + (y - self.cy) ** 2 <= self.r**2


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        return Fraction(value)  # exact binary expansion
    return Fraction(value)


@dataclass(frozen=True)
class Rect:
    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction

    def __post_init__(self):
        for name in ("x0", "x1", "y0", "y1"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name)))
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ValueError("rectangle extents must be strictly positive")

    def contains(self, x, y) -> bool:
        x = _as_fraction(x)
        y = _as_fraction(y)
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1


Region = Union[Disc, Rect]


@dataclass(frozen=True)
class ArrangementFace:
    """One realized containment set, with a witness point inside it."""

    witness: tuple
    members: frozenset
    depth: int

    def __post_init__(self):
        if self.depth != len(self.members) or self.depth < 1:
            raise ValueError("face depth must equal the member count, >= 1")


@dataclass(frozen=True)
class ConflictGraph:
    """Regions adjacent when they overlap at a point of low extra depth."""

    n: int
    k: int
    edges: frozenset

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def degree(self, v: int) -> int:
        return sum(1 for a, b in self.edges if v in (a, b))


def region_family(regions: Sequence[Region]) -> str:
    """"discs" or "rects"; mixed or empty input is an error."""
    if not regions:
        raise GeometryError("at least one region is required")
    if all(isinstance(r, Disc) for r in regions):
        return "discs"
    if all(isinstance(r, Rect) for r in regions):
        return "rects"
    raise GeometryError("regions must all be discs or all be rectangles")


# ---------------------------------------------------------------------------
# discs


def _disc_array(regions: Sequence[Disc]) -> np.ndarray:
    return np.array([[d.cx, d.cy, d.r] for d in regions], dtype=float)


def check_disc_general_position(
    regions: Sequence[Disc], tol: float = DEFAULT_DEGENERACY_TOL
) -> None:
    """Reject tangent or identical circles (within absolute tolerance)."""
    arr = _disc_array(regions)
    for i, j in combinations(range(len(regions)), 2):
        dx = arr[i, 0] - arr[j, 0]
        dy = arr[i, 1] - arr[j, 1]
        d = math.hypot(dx, dy)
        ri, rj = arr[i, 2], arr[j, 2]
        if d <= tol and abs(ri - rj) <= tol:
            raise DegenerateGeometryError(
                "identical-circles", f"discs {i} and {j} coincide"
            )
        if abs(d - (ri + rj)) <= tol:
            raise DegenerateGeometryError(
                "tangent-circles", f"discs {i} and {j} are externally tangent"
            )
        if d > tol and abs(d - abs(ri - rj)) <= tol:
            raise DegenerateGeometryError(
                "tangent-circles", f"discs {i} and {j} are internally tangent"
            )


def _disc_feature_scale(arr: np.ndarray) -> float:
    """Smallest geometric feature: radii and crossing-lens margins."""
    scale = float(arr[:, 2].min())
    n = arr.shape[0]
    for i, j in combinations(range(n), 2):
        d = math.hypot(arr[i, 0] - arr[j, 0], arr[i, 1] - arr[j, 1])
        ri, rj = arr[i, 2], arr[j, 2]
        if abs(ri - rj) < d < ri + rj:  # proper crossing
            scale = min(scale, (ri + rj) - d, d - abs(ri - rj))
    return scale


def _circle_intersections(c1, c2) -> list[tuple[float, float]]:
    (x0, y0, r0), (x1, y1, r1) = c1, c2
    dx, dy = x1 - x0, y1 - y0
    d = math.hypot(dx, dy)
    if d >= r0 + r1 or d <= abs(r0 - r1) or d == 0.0:
        return []
    a = (r0 * r0 - r1 * r1 + d * d) / (2 * d)
    h2 = r0 * r0 - a * a
    if h2 <= 0:
        return []
    h = math.sqrt(h2)
    xm, ym = x0 + a * dx / d, y0 + a * dy / d
    ox, oy = -dy * h / d, dx * h / d
    return [(xm + ox, ym + oy), (xm - ox, ym - oy)]


def disc_perturbation_epsilon(
    regions: Sequence[Disc], factor: float = DEFAULT_EPSILON_FACTOR
) -> float:
    """Adaptive candidate-point offset: ``factor`` times the feature scale."""
    return factor * _disc_feature_scale(_disc_array(regions))


def _disc_candidates(arr: np.ndarray, eps: float) -> np.ndarray:
    points: list[tuple[float, float]] = []
    n = arr.shape[0]
    for i in range(n):
        cx, cy, r = arr[i]
        points.append((cx, cy))
        points.append((cx, cy - r + eps))  # lowest boundary point, nudged in
        points.append((cx, cy - r - eps))  # and out
    for i, j in combinations(range(n), 2):
        for px, py in _circle_intersections(arr[i], arr[j]):
            # Nudge the crossing point into each of its four adjacent faces:
            # the sector bisectors are the normalized sum and difference of
            # the two outward circle normals at the point.
            ux, uy = px - arr[i, 0], py - arr[i, 1]
            nu = math.hypot(ux, uy)
            vx, vy = px - arr[j, 0], py - arr[j, 1]
            nv = math.hypot(vx, vy)
            ux, uy = ux / nu, uy / nu
            vx, vy = vx / nv, vy / nv
            for wx, wy in ((ux + vx, uy + vy), (ux - vx, uy - vy)):
                norm = math.hypot(wx, wy)
                if norm == 0.0:  # tangency; rejected earlier
                    continue
                ox, oy = eps * wx / norm, eps * wy / norm
                points.append((px + ox, py + oy))
                points.append((px - ox, py - oy))
    return np.array(points, dtype=float)


def _collect_disc_faces(
    regions: Sequence[Disc], eps: float
) -> list[ArrangementFace]:
    arr = _disc_array(regions)
    cands = _disc_candidates(arr, eps)
    centers = arr[:, :2]
    rsq = arr[:, 2] ** 2
    seen: dict[bytes, tuple[frozenset, tuple]] = {}
    for start in range(0, len(cands), _MEMBERSHIP_CHUNK):
        chunk = cands[start : start + _MEMBERSHIP_CHUNK]
        d2 = ((chunk[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        inside = d2 <= rsq[None, :]
        keys = np.packbits(inside, axis=1)
        for row in range(inside.shape[0]):
            if not inside[row].any():
                continue
            key = keys[row].tobytes()
            if key not in seen:
                members = frozenset(int(v) for v in np.nonzero(inside[row])[0])
                witness = (float(chunk[row, 0]), float(chunk[row, 1]))
                seen[key] = (members, witness)
    faces = [
        ArrangementFace(witness=w, members=m, depth=len(m))
        for m, w in seen.values()
    ]
    faces.sort(key=lambda f: (f.depth, sorted(f.members)))
    return faces


# ---------------------------------------------------------------------------
# rectangles (exact rank space)


def _rank_axis(coords: Iterable[Fraction]) -> tuple[list[Fraction], dict]:
    values = sorted(set(coords))
    return values, {v: 2 * i for i, v in enumerate(values)}


def _rect_rank_data(regions: Sequence[Rect]):
    xs, xrank = _rank_axis([c for r in regions for c in (r.x0, r.x1)])
    ys, yrank = _rank_axis([c for r in regions for c in (r.y0, r.y1)])
    spans_x = np.array([[xrank[r.x0], xrank[r.x1]] for r in regions], dtype=np.int64)
    spans_y = np.array([[yrank[r.y0], yrank[r.y1]] for r in regions], dtype=np.int64)
    return xs, ys, spans_x, spans_y


def _rank_to_coord(rank: int, values: list[Fraction]) -> Fraction:
    if rank % 2 == 0:
        return values[rank // 2]
    return (values[rank // 2] + values[rank // 2 + 1]) / 2


def _collect_rect_faces(regions: Sequence[Rect]) -> list[ArrangementFace]:
    xs, ys, spans_x, spans_y = _rect_rank_data(regions)
    xr = np.arange(0, 2 * len(xs) - 1, dtype=np.int64)
    yr = np.arange(0, 2 * len(ys) - 1, dtype=np.int64)
    inx = (xr[:, None] >= spans_x[None, :, 0]) & (xr[:, None] <= spans_x[None, :, 1])
    iny = (yr[:, None] >= spans_y[None, :, 0]) & (yr[:, None] <= spans_y[None, :, 1])
    seen: dict[bytes, tuple[frozenset, tuple]] = {}
    for xi in range(len(xr)):
        if not inx[xi].any():
            continue
        rows = iny & inx[xi][None, :]
        keys = np.packbits(rows, axis=1)
        for yi in range(len(yr)):
            if not rows[yi].any():
                continue
            key = keys[yi].tobytes()
            if key not in seen:
                members = frozenset(int(v) for v in np.nonzero(rows[yi])[0])
                witness = (
                    _rank_to_coord(int(xr[xi]), xs),
                    _rank_to_coord(int(yr[yi]), ys),
                )
                seen[key] = (members, witness)
    faces = [
        ArrangementFace(witness=w, members=m, depth=len(m))
        for m, w in seen.values()
    ]
    faces.sort(key=lambda f: (f.depth, sorted(f.members)))
    return faces


# ---------------------------------------------------------------------------
# public operations


def enumerate_faces(
    regions: Sequence[Region],
    *,
    epsilon: float | None = None,
    tol: float = DEFAULT_DEGENERACY_TOL,
) -> list[ArrangementFace]:
    """One face per distinct non-empty containment set.

    ``epsilon`` overrides the adaptive disc perturbation offset; it is
    ignored for rectangles, which are enumerated exactly.
    """
    family = region_family(regions)
    if family == "discs":
        check_disc_general_position(regions, tol)
        eps = (
            float(epsilon)
            if epsilon is not None
            else disc_perturbation_epsilon(regions)
        )
        if eps <= 0:
            raise ValueError("epsilon must be positive")
        return _collect_disc_faces(regions, eps)
    return _collect_rect_faces(regions)


def induced_hypergraph(
    regions: Sequence[Region],
    *,
    epsilon: float | None = None,
) -> Hypergraph:
    """Hypergraph whose hyperedges are the distinct containment sets."""
    faces = enumerate_faces(regions, epsilon=epsilon)
    return Hypergraph(len(regions), (f.members for f in faces))


def conflict_graph_from_faces(
    faces: Sequence[ArrangementFace], n: int, k: int
) -> ConflictGraph:
    if k < 0:
        raise ValueError("k must be >= 0")
    edges = set()
    for face in faces:
        if face.depth <= k + 2:
            for a, b in combinations(sorted(face.members), 2):
                edges.add((a, b))
    return ConflictGraph(n=n, k=k, edges=frozenset(edges))


def build_conflict_graph(
    regions: Sequence[Region],
    k: int,
    *,
    epsilon: float | None = None,
) -> ConflictGraph:
    """Regions r,s adjacent iff some point of r∩s has at most k other regions.

    Depth is constant on arrangement faces, so the pointwise condition is
    discharged face by face: an edge exists iff some face of depth at most
    k+2 contains both regions.
    """
    faces = enumerate_faces(regions, epsilon=epsilon)
    return conflict_graph_from_faces(faces, len(regions), k)


def _disc_union_complexity(regions: Sequence[Disc]) -> int:
    arr = _disc_array(regions)
    centers = arr[:, :2]
    radii = arr[:, 2]
    points = []
    for i, j in combinations(range(len(regions)), 2):
        points.extend(_circle_intersections(arr[i], arr[j]))
    if not points:
        return 0
    pts = np.array(points, dtype=float)
    d = np.sqrt(((pts[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2))
    # Strict interiority with slack: the two defining circles sit exactly on
    # the boundary up to roundoff and must not be counted as covering.
    strictly_inside = d < radii[None, :] * (1.0 - 1e-9)
    on_union_boundary = ~strictly_inside.any(axis=1)
    return int(on_union_boundary.sum())


def _rect_union_complexity(regions: Sequence[Rect]) -> int:
    xs, ys, spans_x, spans_y = _rect_rank_data(regions)
    n = len(regions)
    points = set()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            # Vertical sides of i crossing horizontal sides of j.
            for a in (spans_x[i, 0], spans_x[i, 1]):
                if not (spans_x[j, 0] <= a <= spans_x[j, 1]):
                    continue
                for b in (spans_y[j, 0], spans_y[j, 1]):
                    if spans_y[i, 0] <= b <= spans_y[i, 1]:
                        points.add((int(a), int(b)))
    count = 0
    for a, b in points:
        interior = any(
            spans_x[i, 0] < a < spans_x[i, 1] and spans_y[i, 0] < b < spans_y[i, 1]
            for i in range(n)
        )
        if not interior:
            count += 1
    return count


def union_complexity(
    regions: Sequence[Region], *, tol: float = DEFAULT_DEGENERACY_TOL
) -> int:
    """Pairwise boundary intersection points lying on the union boundary.

    A point counts when no region strictly contains it in its interior.
    Requires general position; for rectangles, boundary segments that
    overlap along shared coordinates are not counted as crossings.
    """
    family = region_family(regions)
    if family == "discs":
        check_disc_general_position(regions, tol)
        return _disc_union_complexity(regions)
    return _rect_union_complexity(regions)
