"""Branch classification: self-intersection and vertex-figure type.

Two exact finite tests stand in for questions about an infinite surface:

* Face intersection. A face spans c*h axially, so a prototype face at base k
  can only meet faces with base in [k-c, k+c]; faces exactly c apart meet the
  prototype's axial extremes in a single plane where both shrink to the shared
  vertex. Testing U_0 and D_0 against that window therefore decides the whole
  surface, by screw symmetry.

* Vertex figure. The six neighbors of a vertex, in face-adjacency cycle order,
  form a closed hexagon. Projected along the vertex normal (the sum of the six
  incident unit face normals), the hexagon either is a simple circuit or
  crosses itself; that splits the branches into the two families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .band_combinatorics import face_vertices, incident_faces, vertex_neighbor_cycle
from .closure_solver import BranchSolution, helix_points

__all__ = [
    "Classification",
    "classify",
    "classify_face_intersection",
    "vertex_figure",
    "triangles_properly_intersect",
]

MEASURE_TOL = 1e-9   # intersections thinner than this count as touching
_PLANE_EPS = 1e-12   # vertex-on-plane threshold, coordinates are O(1)

FaceId = tuple[str, int]


@dataclass
class Classification:
    """intersecting + witness pair, and the vertex figure with its polygon."""

    intersecting: bool
    witness: tuple[FaceId, FaceId] | None
    vertex_figure: str  # 'simple' | 'crossed' | 'indeterminate'
    figure_polygon: np.ndarray  # (6, 3) neighbor positions in cycle order


def _tri_interval(tri: np.ndarray, dist: np.ndarray, axis: np.ndarray) -> tuple[float, float] | None:
    """Parameter interval where a triangle meets the other one's plane.

    dist holds the triangle's signed vertex distances to that plane; axis is
    the direction of the plane-intersection line. Returns None when the
    triangle lies strictly on one side.
    """
    ts: list[float] = []
    for i in range(3):
        if abs(dist[i]) <= _PLANE_EPS:
            ts.append(float(np.dot(axis, tri[i])))
    for i in range(3):
        j = (i + 1) % 3
        if dist[i] * dist[j] < 0.0 and abs(dist[i]) > _PLANE_EPS and abs(dist[j]) > _PLANE_EPS:
            s = dist[i] / (dist[i] - dist[j])
            ts.append(float(np.dot(axis, tri[i] + s * (tri[j] - tri[i]))))
    if not ts:
        return None
    return min(ts), max(ts)


def _poly_area(poly: list[np.ndarray]) -> float:
    if len(poly) < 3:
        return 0.0
    s = 0.0
    for i in range(len(poly)):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % len(poly)]
        s += x1 * y2 - x2 * y1
    return abs(s) / 2.0


def _clip_area(sub: list[np.ndarray], clip: list[np.ndarray]) -> float:
    """Area of sub clipped to convex polygon clip (both 2D, clip CCW)."""
    poly = list(sub)
    for i in range(len(clip)):
        p, q = clip[i], clip[(i + 1) % len(clip)]
        edge = q - p
        out: list[np.ndarray] = []
        for j in range(len(poly)):
            u, v = poly[j], poly[(j + 1) % len(poly)]
            du = edge[0] * (u[1] - p[1]) - edge[1] * (u[0] - p[0])
            dv = edge[0] * (v[1] - p[1]) - edge[1] * (v[0] - p[0])
            if du >= 0.0:
                out.append(u)
            if (du > 0.0 > dv) or (du < 0.0 < dv):
                out.append(u + du / (du - dv) * (v - u))
        poly = out
        if not poly:
            return 0.0
    return _poly_area(poly)


def _coplanar_intersect(t1: np.ndarray, t2: np.ndarray, n1: np.ndarray, tol: float) -> bool:
    e1 = t1[1] - t1[0]
    e1 = e1 / np.linalg.norm(e1)
    e2 = np.cross(n1, e1)
    to2d = lambda p: np.array([np.dot(p - t1[0], e1), np.dot(p - t1[0], e2)])
    q1 = [to2d(p) for p in t1]
    q2 = [to2d(p) for p in t2]
    if _poly_area(q1) == 0.0:  # degenerate source triangle, nothing to clip against
        return False
    # orient the clip polygon CCW
    s = 0.0
    for i in range(3):
        x1, y1 = q1[i]
        x2, y2 = q1[(i + 1) % 3]
        s += x1 * y2 - x2 * y1
    if s < 0.0:
        q1 = q1[::-1]
    if _clip_area(q2, q1) > tol:
        return True
    # area can vanish while the boundaries still share a positive-length
    # segment; collinear edge overlap counts as a proper intersection too
    cross2 = lambda u, v: u[0] * v[1] - u[1] * v[0]
    for i in range(3):
        for j in range(3):
            p1, p2 = q1[i], q1[(i + 1) % 3]
            p3, p4 = q2[j], q2[(j + 1) % 3]
            d = p2 - p1
            L = float(np.linalg.norm(d))
            u = d / L
            if abs(cross2(u, p3 - p1)) > _PLANE_EPS or abs(cross2(u, p4 - p1)) > _PLANE_EPS:
                continue
            a1, a2 = sorted((0.0, L))
            b1, b2 = sorted((float(np.dot(p3 - p1, u)), float(np.dot(p4 - p1, u))))
            if min(a2, b2) - max(a1, b1) > tol:
                return True
    return False


def triangles_properly_intersect(
    t1: np.ndarray,
    t2: np.ndarray,
    shared: int = 0,
    tol: float = MEASURE_TOL,
) -> bool:
    """True when two triangles share a region of positive length or area.

    shared is the number of combinatorially identified vertices. Two faces
    sharing an edge meet exactly in that edge and never properly intersect;
    faces sharing one vertex count only when the overlap extends beyond it.
    Contacts of measure below tol are touching, not intersecting.
    """
    if shared >= 2:
        return False
    t1 = np.asarray(t1, dtype=float)
    t2 = np.asarray(t2, dtype=float)
    n1 = np.cross(t1[1] - t1[0], t1[2] - t1[0])
    n2 = np.cross(t2[1] - t2[0], t2[2] - t2[0])
    n1n = np.linalg.norm(n1)
    n2n = np.linalg.norm(n2)
    if n1n == 0.0 or n2n == 0.0:
        return False
    n1 = n1 / n1n
    n2 = n2 / n2n

    d2 = np.array([np.dot(n1, p - t1[0]) for p in t2])
    if np.all(d2 > _PLANE_EPS) or np.all(d2 < -_PLANE_EPS):
        return False
    d1 = np.array([np.dot(n2, p - t2[0]) for p in t1])
    if np.all(d1 > _PLANE_EPS) or np.all(d1 < -_PLANE_EPS):
        return False

    if np.all(np.abs(d2) <= _PLANE_EPS):
        return _coplanar_intersect(t1, t2, n1, tol)

    axis = np.cross(n1, n2)
    axis = axis / np.linalg.norm(axis)
    i1 = _tri_interval(t1, d1, axis)
    i2 = _tri_interval(t2, d2, axis)
    if i1 is None or i2 is None:
        return False
    return min(i1[1], i2[1]) - max(i1[0], i2[0]) > tol


def classify_face_intersection(
    solution: BranchSolution,
    base: int = 0,
) -> tuple[bool, tuple[FaceId, FaceId] | None]:
    """Decide self-intersection; returns the first witness pair found.

    Prototypes U_base and D_base are tested against every face with base
    index in [base-c, base+c]. The default base of 0 is exhaustive by screw
    symmetry; other bases exist so the invariance is checkable.
    """
    off = solution.offsets
    c = off.c
    params = solution.params
    cache: dict[FaceId, tuple[tuple[int, ...], np.ndarray]] = {}

    def load(fid: FaceId) -> tuple[tuple[int, ...], np.ndarray]:
        if fid not in cache:
            idx = face_vertices(fid[0], fid[1], off)
            cache[fid] = (idx, helix_points(params, idx))
        return cache[fid]

    for proto in (("U", base), ("D", base)):
        pidx, ptri = load(proto)
        for k in range(base - c, base + c + 1):
            for kind in ("U", "D"):
                other: FaceId = (kind, k)
                if other == proto:
                    continue
                oidx, otri = load(other)
                shared = len(set(pidx) & set(oidx))
                if shared >= 2:
                    continue
                if triangles_properly_intersect(ptri, otri, shared):
                    return True, (proto, other)
    return False, None


def _face_normal(params, off, fid: FaceId) -> np.ndarray:
    pts = helix_points(params, face_vertices(fid[0], fid[1], off))
    n = np.cross(pts[1] - pts[0], pts[2] - pts[0])
    return n / np.linalg.norm(n)


def _segments_cross_2d(p1, p2, q1, q2) -> bool:
    c = lambda u, v: u[0] * v[1] - u[1] * v[0]
    d1 = c(q2 - q1, p1 - q1)
    d2 = c(q2 - q1, p2 - q1)
    d3 = c(p2 - p1, q1 - p1)
    d4 = c(p2 - p1, q2 - p1)
    return d1 * d2 < 0.0 and d3 * d4 < 0.0


def _figure_kind(polygon2d: np.ndarray) -> str:
    """simple or crossed, by proper crossing of non-adjacent hexagon sides."""
    m = len(polygon2d)
    for i in range(m):
        for j in range(i + 1, m):
            if j == i + 1 or (i == 0 and j == m - 1):
                continue
            if _segments_cross_2d(
                polygon2d[i], polygon2d[(i + 1) % m],
                polygon2d[j], polygon2d[(j + 1) % m],
            ):
                return "crossed"
    return "simple"


def vertex_figure(solution: BranchSolution, base: int = 0) -> tuple[np.ndarray, str]:
    """Hexagon of the 6 neighbors in cycle order, and its figure type.

    Projection is along the vertex normal, the sum of the 6 incident unit
    face normals; when that sum degenerates (below 1e-9) the classification
    is reported indeterminate rather than guessed.
    """
    off = solution.offsets
    params = solution.params
    cycle = vertex_neighbor_cycle(off)
    polygon = helix_points(params, [base + w for w in cycle])

    axis = np.zeros(3)
    for fid in incident_faces(off, base):
        axis += _face_normal(params, off, fid)
    norm = float(np.linalg.norm(axis))
    if norm < 1e-9:
        return polygon, "indeterminate"
    axis /= norm

    center = helix_points(params, [base])[0]
    seed = np.array([1.0, 0.0, 0.0])
    if abs(np.dot(seed, axis)) > 0.9:
        seed = np.array([0.0, 1.0, 0.0])
    e1 = np.cross(axis, seed)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(axis, e1)
    rel = polygon - center
    flat = np.stack([rel @ e1, rel @ e2], axis=1)
    return polygon, _figure_kind(flat)


def classify(solution: BranchSolution) -> Classification:
    """Full classification of one branch."""
    intersecting, witness = classify_face_intersection(solution)
    polygon, kind = vertex_figure(solution)
    return Classification(
        intersecting=intersecting,
        witness=witness,
        vertex_figure=kind,
        figure_polygon=polygon,
    )
