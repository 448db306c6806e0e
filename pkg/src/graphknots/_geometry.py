"""Exact rational geometry: 3D segment predicates and regular projection.

Everything here works over Python ints and fractions.Fraction; there is no
floating point.  Edges are 3D polylines (lists of points); a straight-line
embedding is the special case of one segment per edge.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Point3 = tuple  # 3-tuple of int | Fraction
Point2 = tuple  # 2-tuple of int | Fraction


def v_sub(a: Point3, b: Point3):
    return tuple(x - y for x, y in zip(a, b))


def v_add(a: Point3, b: Point3):
    return tuple(x + y for x, y in zip(a, b))


def v_scale(a: Point3, s):
    return tuple(x * s for x in a)


def v_dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def v_cross(a: Point3, b: Point3) -> Point3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def cross2(a: Point2, b: Point2):
    return a[0] * b[1] - a[1] * b[0]


def is_zero3(a: Point3) -> bool:
    return a[0] == 0 and a[1] == 0 and a[2] == 0


# ---------------------------------------------------------------------------
# 3D segment intersection
# ---------------------------------------------------------------------------


def segments_intersect_3d(p1: Point3, p2: Point3, q1: Point3, q2: Point3):
    """Intersection of closed segments [p1,p2] and [q1,q2].

    Returns None, ("point", t, s) with rational parameters in [0,1], or
    ("overlap",) for collinear segments sharing more than a point.
    """
    u = v_sub(p2, p1)
    v = v_sub(q2, q1)
    w = v_sub(q1, p1)
    n = v_cross(u, v)
    if not is_zero3(n):
        # skew or intersecting lines: candidate parameters from the normal
        nn = v_dot(n, n)
        t = Fraction(v_dot(v_cross(w, v), n), nn)
        s = Fraction(v_dot(v_cross(w, u), n), nn)
        if not (0 <= t <= 1 and 0 <= s <= 1):
            return None
        pa = v_add(p1, v_scale(u, t))
        pb = v_add(q1, v_scale(v, s))
        if pa == pb:
            return ("point", t, s)
        return None
    # parallel lines
    if not is_zero3(v_cross(w, u)):
        return None  # distinct parallel lines
    # collinear: compare 1D intervals along u (or v when u is degenerate)
    if is_zero3(u):
        if is_zero3(v):
            return ("point", Fraction(0), Fraction(0)) if p1 == q1 else None
        lv = v_dot(v, v)
        s = Fraction(v_dot(v_sub(p1, q1), v), lv)
        return ("point", Fraction(0), s) if 0 <= s <= 1 else None
    la = v_dot(u, u)
    b0 = Fraction(v_dot(v_sub(q1, p1), u), la)
    b1 = Fraction(v_dot(v_sub(q2, p1), u), la)
    lo = max(Fraction(0), min(b0, b1))
    hi = min(Fraction(1), max(b0, b1))
    if lo > hi:
        return None
    if lo == hi:
        t = lo
        s = Fraction(t - b0, b1 - b0) if b1 != b0 else Fraction(0)
        return ("point", t, s)
    return ("overlap",)


class EmbeddingError(ValueError):
    """The given coordinates do not realize an embedding of the graph."""


def validate_polyline_embedding(
    edge_points: dict[str, list[Point3]],
    edge_ends: dict[str, tuple[str, str]],
    vertex_coords: dict[str, Point3],
):
    """Exact embedding check for polyline edges.

    Non-adjacent edges must be disjoint; adjacent edges may meet only at the
    shared vertex; an edge must not self-intersect except at consecutive
    polyline joints.  Raises EmbeddingError with a description on failure.
    """
    coords = list(vertex_coords.values())
    if len(set(coords)) != len(coords):
        raise EmbeddingError("coincident vertices")
    labels = list(edge_points)
    segs = {
        lab: [(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]
        for lab, pts in edge_points.items()
    }
    for lab, ss in segs.items():
        for a, b in ss:
            if a == b:
                raise EmbeddingError(f"degenerate segment on edge {lab}")
    # self-intersection within one edge
    for lab, ss in segs.items():
        for i in range(len(ss)):
            for j in range(i + 1, len(ss)):
                hit = segments_intersect_3d(*ss[i], *ss[j])
                if hit is None:
                    continue
                if j == i + 1 and hit[0] == "point" and hit[1] == 1 and hit[2] == 0:
                    continue  # shared joint of consecutive segments
                raise EmbeddingError(f"edge {lab} self-intersects")
    # pairwise edges
    for ia in range(len(labels)):
        for ib in range(ia + 1, len(labels)):
            la, lb = labels[ia], labels[ib]
            shared = set(edge_ends[la]) & set(edge_ends[lb])
            allowed = {vertex_coords[v] for v in shared}
            for sa in segs[la]:
                for sb in segs[lb]:
                    hit = segments_intersect_3d(*sa, *sb)
                    if hit is None:
                        continue
                    if hit[0] == "overlap":
                        raise EmbeddingError(f"edges {la},{lb} overlap")
                    t, s = hit[1], hit[2]
                    pt = v_add(sa[0], v_scale(v_sub(sa[1], sa[0]), t))
                    if pt in allowed:
                        continue
                    raise EmbeddingError(f"edges {la},{lb} intersect away from a shared vertex")


# ---------------------------------------------------------------------------
# Regular projection
# ---------------------------------------------------------------------------


class NonGenericProjectionError(ValueError):
    """Projection direction is not generic; carries a witness point."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def projection_frame(d: Point3) -> tuple[Point3, Point3]:
    """Integer plane coordinates (u, w) completing d to a positive frame."""
    a, b, c = d
    if a == 0 and b == 0:
        if c == 0:
            raise ValueError("projection direction must be nonzero")
        u = (1, 0, 0)
    else:
        u = (b, -a, 0)
    w = v_cross(d, u)
    # det[u; w; d] = |u|^2 |d|^2 - (u.d)^2 > 0, so the frame is positive
    return u, w


class ProjectedCrossing(
    tuple
):  # (edge_a, pos_a, edge_b, pos_b, over_a, sign, point2)
    __slots__ = ()


def project_polylines(
    edge_points: dict[str, list[Point3]],
    edge_ends: dict[str, tuple[str, str]],
    vertex_coords: dict[str, Point3],
    d: Point3,
) -> list[tuple]:
    """Exact regular projection along d.

    Returns crossings as tuples (edge_a, pos_a, edge_b, pos_b, over_a, sign)
    where pos is the rational polyline parameter (segment index + local t),
    over_a says whether edge_a's strand has the larger depth along d, and
    sign is the usual crossing sign for the projected oriented strands.
    Raises NonGenericProjectionError when the projection is not regular.
    """
    u, w = projection_frame(d)

    def p2(p: Point3) -> Point2:
        return (v_dot(u, p), v_dot(w, p))

    def depth(p: Point3):
        return v_dot(d, p)

    # flatten segments with bookkeeping
    seg_list = []  # (label, seg_index, a3, b3, a2, b2)
    for lab, pts in edge_points.items():
        for i in range(len(pts) - 1):
            a3, b3 = pts[i], pts[i + 1]
            a2, b2 = p2(a3), p2(b3)
            if a2 == b2:
                raise NonGenericProjectionError(
                    f"edge {lab} segment {i} projects to a point", witness=a2
                )
            seg_list.append((lab, i, a3, b3, a2, b2))

    # endpoint images: graph vertices and interior polyline joints
    special_pts: dict[Point2, str] = {}
    for vlab, p in vertex_coords.items():
        q = p2(p)
        if q in special_pts:
            raise NonGenericProjectionError(
                f"vertices {special_pts[q]} and {vlab} project together", witness=q
            )
        special_pts[q] = f"vertex {vlab}"
    for lab, pts in edge_points.items():
        for i in range(1, len(pts) - 1):
            q = p2(pts[i])
            if q in special_pts:
                raise NonGenericProjectionError(
                    f"joint of edge {lab} hits {special_pts[q]}", witness=q
                )
            special_pts[q] = f"joint {lab}:{i}"

    crossings = []
    seen_points: dict[Point2, tuple] = {}
    n = len(seg_list)
    for i in range(n):
        la, ia, a3, b3, a2, b2 = seg_list[i]
        for j in range(i + 1, n):
            lb, ib, c3, d3, c2, d2 = seg_list[j]
            same_edge = la == lb
            if same_edge and abs(ia - ib) <= 1:
                continue  # consecutive segments share a joint only
            r = v_sub(b2, a2)
            s = v_sub(d2, c2)
            den = cross2(r, s)
            qp = v_sub(c2, a2)
            if den == 0:
                if cross2(qp, r) == 0:
                    # collinear in projection: reject any overlap
                    # (distinct parallel lines are fine)
                    alen = v_dot(r, r)
                    t0 = Fraction(v_dot(qp, r), alen)
                    t1 = Fraction(v_dot(v_sub(d2, a2), r), alen)
                    lo, hi = min(t0, t1), max(t0, t1)
                    if hi >= 0 and lo <= 1:
                        raise NonGenericProjectionError(
                            f"segments of {la} and {lb} overlap in projection",
                            witness=a2,
                        )
                continue
            t = Fraction(cross2(qp, s), den)
            s_par = Fraction(cross2(qp, r), den)
            if not (0 <= t <= 1 and 0 <= s_par <= 1):
                continue
            shared = (
                not same_edge
                and set(edge_ends[la]) & set(edge_ends[lb])
            )
            boundary = t in (0, 1) or s_par in (0, 1)
            pt = v_add(a2, v_scale(r, t))
            if boundary:
                # touching at endpoints is only legal at a shared vertex image
                if shared and any(p2(vertex_coords[v]) == pt for v in shared):
                    continue
                raise NonGenericProjectionError(
                    f"segments of {la} and {lb} touch at an endpoint image",
                    witness=pt,
                )
            if pt in special_pts:
                raise NonGenericProjectionError(
                    f"crossing of {la},{lb} hits {special_pts[pt]}", witness=pt
                )
            if pt in seen_points:
                raise NonGenericProjectionError(
                    f"triple point: {la},{lb} meet a previous crossing", witness=pt
                )
            seen_points[pt] = (la, lb)
            za = depth(a3) + t * (depth(b3) - depth(a3))
            zb = depth(c3) + s_par * (depth(d3) - depth(c3))
            if za == zb:
                raise NonGenericProjectionError(
                    f"segments of {la} and {lb} intersect in space", witness=pt
                )
            over_a = za > zb
            t_over, t_under = (r, s) if over_a else (s, r)
            sign = 1 if cross2(t_over, t_under) > 0 else -1
            crossings.append((la, ia + t, lb, ib + s_par, over_a, sign))
    return crossings
