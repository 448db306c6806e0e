"""The twist-parameterised canonical K331 diagram family.

The family is realized as an honest spatial embedding: a fixed base layout
(hexagon rim, three diagonal plateaus at distinct depths, apex above) plus
one twist gadget per parameter.  Gadget i inserts 2|m| equal-sign crossings
between the two edges of its generator pair by flying a bridge from the
first edge to a cleared port on the second and zigzagging across it; the
bridge legs only add cancelling crossing pairs, so each unit twist moves
exactly one generator coordinate of the Wu group by 2.

The nine generator pairs, the subgraph index conventions, and the base
offset below were fixed once by the calibration in :func:`derive_calibration`
so that the twist-count closed forms for the 25 restricted Wu integers and
the 9 pattern linking numbers hold exactly for every parameter tuple; the
test suite re-derives them from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from graphknots import _geometry
from graphknots.diagrams import Diagram, restrict
from graphknots.graphs import (
    Graph,
    k331_graph,
    k33_reference_graph,
    _g_subgraph_edges,
    _h_subgraph_edges,
    _correspondence_from_vertex_map,
    _G_TABLE,
    _H_TABLE,
)

# generator pair twisted by each box, and the crossing handedness that gives
# the pair's weighted coefficient value +2 per unit twist
BOX_PAIRS: dict[int, tuple[str, str]] = {
    1: ("b2", "c4"),
    2: ("b1", "b2"),
    3: ("b1", "c5"),
    4: ("b1", "c2"),
    5: ("b1", "b3"),
    6: ("b3", "c3"),
    7: ("b3", "c6"),
    8: ("b2", "b3"),
    9: ("b2", "c1"),
}

BOX_HANDEDNESS: dict[int, int] = {
    1: 1, 2: 1, 3: -1, 4: 1, 5: 1, 6: -1, 7: 1, 8: 1, 9: -1,
}

# closed-form structure: box index sets and constants of the 25 restricted
# Wu integers, and of the 9 pattern linking numbers
G_FORMULA: dict[int, tuple[frozenset, int]] = {
    1: (frozenset({2, 3, 4, 9}), 1),
    2: (frozenset({3, 5, 6, 7}), 1),
    3: (frozenset({1, 6, 8, 9}), 1),
    4: (frozenset({1, 7, 8, 9}), 1),
    5: (frozenset({1, 2, 3, 4}), 1),
    6: (frozenset({4, 5, 6, 7}), 1),
    7: (frozenset({1, 2, 4, 9}), 1),
    8: (frozenset({3, 4, 5, 7}), 1),
    9: (frozenset({1, 6, 7, 8}), 1),
    10: (frozenset({6, 7, 8, 9}), 1),
    11: (frozenset({1, 2, 3, 9}), 1),
    12: (frozenset({3, 4, 5, 6}), 1),
    13: (frozenset({2, 4, 5, 6, 7, 8, 9}), 3),
    14: (frozenset({1, 2, 3, 5, 7, 8, 9}), 3),
    15: (frozenset({1, 2, 3, 4, 5, 6, 8}), 3),
    16: (frozenset({2, 3, 4, 5, 7, 8, 9}), 3),
    17: (frozenset({1, 2, 3, 5, 6, 7, 8}), 3),
    18: (frozenset({1, 2, 4, 5, 6, 8, 9}), 3),
}

H_FORMULA: dict[int, tuple[frozenset, int]] = {
    1: (frozenset({2, 4, 9}), 1),
    2: (frozenset({3, 5, 7}), 1),
    3: (frozenset({1, 6, 8}), 1),
    4: (frozenset({7, 8, 9}), 1),
    5: (frozenset({1, 2, 3}), 1),
    6: (frozenset({4, 5, 6}), 1),
}

K_FORMULA: tuple[frozenset, int] = (frozenset(range(1, 10)), 3)

# linking-number structure, keyed by the K33 edge spanned by the pattern's
# triangle: rim edges give single-box values, diagonals give 4-box runs +1
LINK_SINGLE_BOX: dict[str, int] = {
    "c1": 9, "c2": 4, "c3": 6, "c4": 1, "c5": 3, "c6": 7,
}
LINK_RUN: dict[str, tuple[frozenset, int]] = {
    "b1": (frozenset({2, 3, 4, 5}), 1),
    "b3": (frozenset({5, 6, 7, 8}), 1),
    "b2": (frozenset({8, 9, 1, 2}), 1),
}


def formula_wu(name: str, n: tuple[int, ...]) -> int:
    """Closed form for a restricted Wu integer at twist tuple n (1-based boxes)."""
    if name == "K":
        boxes, const = K_FORMULA
    elif name.startswith("G"):
        boxes, const = G_FORMULA[int(name[1:])]
    elif name.startswith("H"):
        boxes, const = H_FORMULA[int(name[1:])]
    else:
        raise ValueError(name)
    return 2 * sum(n[i - 1] for i in boxes) + const


def formula_lk_squared(tri_edge: str, n: tuple[int, ...]) -> int:
    if tri_edge in LINK_SINGLE_BOX:
        return n[LINK_SINGLE_BOX[tri_edge] - 1] ** 2
    boxes, const = LINK_RUN[tri_edge]
    return (sum(n[i - 1] for i in boxes) + const) ** 2


def formula_lk_magnitude(tri_edge: str, n: tuple[int, ...]) -> int:
    if tri_edge in LINK_SINGLE_BOX:
        return n[LINK_SINGLE_BOX[tri_edge] - 1]
    boxes, const = LINK_RUN[tri_edge]
    return sum(n[i - 1] for i in boxes) + const


# ---------------------------------------------------------------------------
# Base layout
# ---------------------------------------------------------------------------

_V = {
    "1": (1200, 0, 0),
    "2": (600, 1000, 0),
    "3": (-600, 1000, 0),
    "4": (-1200, 0, 0),
    "5": (-600, -1000, 0),
    "6": (600, -1000, 0),
    "A": (0, 60, 50),
}

# diagonals run through constant-depth plateaus (segment index 1) where the
# twist ports live; the rim stays in the base plane
_BASE_POINTS = {
    "a1": [_V["A"], _V["1"]],
    "a2": [_V["2"], _V["A"]],
    "a3": [_V["A"], _V["3"]],
    "a4": [_V["4"], _V["A"]],
    "a5": [_V["A"], _V["5"]],
    "a6": [_V["6"], _V["A"]],
    "b1": [_V["1"], (350, -140, -12), (-350, -140, -12), _V["4"]],
    "b2": [_V["3"], (40, 320, -8), (240, -240, -8), _V["6"]],
    "b3": [_V["5"], (-240, -240, -4), (-40, 320, -4), _V["2"]],
    "c1": [_V["1"], _V["2"]],
    "c2": [_V["2"], _V["3"]],
    "c3": [_V["3"], _V["4"]],
    "c4": [_V["4"], _V["5"]],
    "c5": [_V["5"], _V["6"]],
    "c6": [_V["6"], _V["1"]],
}

# gadget anchors: (carrier edge, carrier segment, excision parameter,
#                  target edge, target segment, port parameter, disk radius
#                  in parameter units)
_F = Fraction
_GADGETS: dict[int, tuple[str, int, Fraction, str, int, Fraction, Fraction]] = {
    1: ("b2", 1, _F(3, 20), "c4", 0, _F(1, 2), _F(1, 50)),
    2: ("b1", 1, _F(7, 100), "b2", 1, _F(13, 20), _F(1, 25)),
    3: ("b1", 1, _F(45, 100), "c5", 0, _F(1, 2), _F(1, 50)),
    4: ("b1", 1, _F(55, 100), "c2", 0, _F(1, 2), _F(1, 50)),
    5: ("b1", 1, _F(93, 100), "b3", 1, _F(45, 100), _F(1, 25)),
    6: ("b3", 1, _F(28, 100), "c3", 0, _F(1, 2), _F(1, 50)),
    7: ("b3", 1, _F(60, 100), "c6", 0, _F(1, 2), _F(1, 50)),
    8: ("b2", 1, _F(11, 20), "b3", 1, _F(9, 10), _F(1, 25)),
    9: ("b2", 1, _F(35, 100), "c1", 0, _F(1, 2), _F(1, 50)),
}

_WINDOW = _F(1, 50)  # excision half-width in carrier-segment parameter units
_CLIMB = _F(1, 300)  # 2D fraction of the bridge run used by each climb
_LANE_BASE = 200


def _p2(p):
    return (p[0], p[1])


def _lerp(a, b, t):
    return tuple(x + t * (y - x) for x, y in zip(a, b))


def _gadget_points(box: int, m: int) -> list[tuple]:
    """Detour polyline (excision replacement) for one twist gadget."""
    carrier, cseg, t_p, target, tseg, t_q, rho = _GADGETS[box]
    base_c = _BASE_POINTS[carrier]
    base_t = _BASE_POINTS[target]
    P0, P1 = base_c[cseg], base_c[cseg + 1]
    Q0, Q1 = base_t[tseg], base_t[tseg + 1]
    zx = P0[2]
    zy = Q0[2]
    assert P0[2] == P1[2] and Q0[2] == Q1[2], "ports live on constant-depth segments"
    u2 = (Q1[0] - Q0[0], Q1[1] - Q0[1])
    w2 = (-u2[1], u2[0])
    q2 = (_lerp(_p2(Q0), _p2(Q1), t_q))
    e = BOX_HANDEDNESS[box] * (1 if m > 0 else -1)
    am = abs(m)
    k_cross = 2 * am
    delta = Fraction(2 * rho, 2 * am + 3)
    h = delta / 2
    lane_out = _LANE_BASE + 12 * box
    lane_back = lane_out + 5

    def on_port(du, dw, z):
        return (
            q2[0] + du * u2[0] + dw * w2[0],
            q2[1] + du * u2[1] + dw * w2[1],
            z,
        )

    start = -Fraction(k_cross - 1, 2) * delta  # u-offset of crossing 0
    cross_u = [start + k * delta for k in range(k_cross)]
    pts: list[tuple] = []
    p_before = _lerp(P0, P1, t_p - _WINDOW)
    p_after = _lerp(P0, P1, t_p + _WINDOW)
    e_in = on_port(cross_u[0] - delta, e * h, lane_out)
    e_out = on_port(cross_u[-1] + delta, e * h, lane_back)
    # climbs to lane height stay within a tiny window above the ports, so
    # leg-leg crossings between different gadgets happen at full lane height
    # only, where the out/back pair cancellation is exact
    pts.append(p_before)
    pts.append((*_lerp(_p2(p_before), _p2(e_in), _CLIMB), lane_out))
    pts.append(e_in)
    for k in range(k_cross):
        side = e * (1 if k % 2 == 0 else -1)
        z = zy + (1 if k % 2 == 0 else -1)  # x over y at even k
        pts.append(on_port(cross_u[k] - delta / 3, side * h, z))
        pts.append(on_port(cross_u[k] + delta / 3, -side * h, z))
    pts.append(e_out)
    pts.append((*_lerp(_p2(p_after), _p2(e_out), _CLIMB), lane_back))
    pts.append(p_after)
    return pts


def _build_polylines(m: dict[int, int]) -> dict[str, list[tuple]]:
    pts = {lab: list(p) for lab, p in _BASE_POINTS.items()}
    by_carrier: dict[str, list[int]] = {}
    for box, mi in m.items():
        if mi:
            by_carrier.setdefault(_GADGETS[box][0], []).append(box)
    for carrier, boxes in by_carrier.items():
        boxes.sort(key=lambda b: _GADGETS[b][2])
        base = _BASE_POINTS[carrier]
        cseg = _GADGETS[boxes[0]][1]
        new_pts = list(base[: cseg + 1])
        for box in boxes:
            new_pts.extend(_gadget_points(box, m[box]))
        new_pts.extend(base[cseg + 1 :])
        pts[carrier] = new_pts
    return pts


class _HEmbedding:
    """Polyline embedding of the family member; projects along (0, 0, 1)."""

    def __init__(self, m: dict[int, int]):
        from graphknots.spatial import PolylineEmbedding

        self.graph = k331_graph()
        coords = {v: _V[v] for v in self.graph.vertices}
        self.emb = PolylineEmbedding(self.graph, coords, _build_polylines(m))
        self.emb.validate()

    def diagram(self) -> Diagram:
        from graphknots.spatial import project

        return project(self.emb, direction=(0, 0, 1))


def _family_diagram(m: dict[int, int]) -> Diagram:
    return _HEmbedding(m).diagram()


# ---------------------------------------------------------------------------
# Frozen calibration
# ---------------------------------------------------------------------------

# Base offset: the bare layout sits at this twist tuple of the family,
# so parameter n twists box i by (n_i - N0_i).  Pattern sign TAU fixes the
# orientation of every pattern's linking number relative to its closed form
# (keyed by the pattern's triangle edge).  Both are re-derived by the tests.
FROZEN_N0: tuple[int, ...] = (0, -1, 0, 0, 0, 0, 0, -1, 0)
FROZEN_TAU: dict[str, int] = {
    "b1": 1, "b2": -1, "b3": -1,
    "c1": 1, "c2": 1, "c3": 1, "c4": 1, "c5": 1, "c6": -1,
}


def build_h_embedding(n) -> Diagram:
    """Diagram of the canonical family member at twist tuple n.

    Accepts a TwistParameters or any 9-sequence of integers.  The restricted
    Wu integers and pattern linking numbers of the result obey the closed
    forms in ``formula_wu``/``formula_lk_squared`` exactly.
    """
    tup = tuple(getattr(n, "n", n))
    if len(tup) != 9 or not all(isinstance(x, int) for x in tup):
        raise ValueError("twist parameters are nine integers")
    m = {i + 1: tup[i] - FROZEN_N0[i] for i in range(9)}
    return _family_diagram(m)


# ---------------------------------------------------------------------------
# Calibration derivation (re-run by the test suite; results frozen above and
# in graphs._K331_SUBGRAPH_VERTEX_MAPS)
# ---------------------------------------------------------------------------


@dataclass
class Calibration:
    vertex_maps: dict[str, dict[str, str]]
    n0: tuple[int, ...]
    tau: dict[str, int]


def _candidate_vertex_maps(branch_parts: dict[str, int]):
    """All part-respecting bijections of branch vertices onto the reference K33."""
    import itertools

    ref_parts = {0: ["1", "3", "5"], 1: ["2", "4", "6"]}
    part0 = sorted(v for v, p in branch_parts.items() if p == 0)
    part1 = sorted(v for v, p in branch_parts.items() if p == 1)
    for flip in (False, True):
        img0, img1 = (ref_parts[0], ref_parts[1]) if not flip else (
            ref_parts[1],
            ref_parts[0],
        )
        for perm0 in itertools.permutations(img0):
            for perm1 in itertools.permutations(img1):
                yield dict(zip(part0, perm0)) | dict(zip(part1, perm1))


def _subgraph_structures(g: Graph):
    """(name, sub_edges, merged, branch_parts, box_set) for all 25 subgraphs."""
    out = []
    for i in range(1, 19):
        edges, merged = _g_subgraph_edges(g, i)
        hub = _G_TABLE[i][0]
        parts = {v: g.parts[v] for v in g.vertices if v not in ("A", hub)}
        parts["A"] = g.parts[hub]
        out.append((f"G{i}", edges, merged, parts, G_FORMULA[i][0]))
    for i in range(1, 7):
        edges = _h_subgraph_edges(g, i)
        gone = _H_TABLE[i]
        parts = {v: g.parts[v] for v in g.vertices if v not in ("A", gone)}
        parts["A"] = g.parts[gone]
        out.append((f"H{i}", edges, None, parts, H_FORMULA[i][0]))
    k_edges = [
        (e.label, e.tail, e.head) for e in g.edges if not e.label.startswith("a")
    ]
    parts = {v: g.parts[v] for v in g.vertices if v != "A"}
    out.append(("K", k_edges, None, parts, K_FORMULA[0]))
    return out


def derive_calibration() -> Calibration:
    """Recompute the frozen convention from the bare layout and unit probes.

    For every subgraph the reference labeling is the first part-respecting
    vertex map under which each unit twist of a contained generator pair
    moves the weighted Wu integer by exactly +2; the base offset solves the
    closed forms at the bare layout, over-determined and checked exactly.
    """
    from graphknots.graphs import enumerate_link_patterns
    from graphknots.invariants import wu_k33, linking_number
    from graphknots.diagrams import link_diagram

    g = k331_graph()
    ref = k33_reference_graph()
    base = _family_diagram({})
    probes = {i: _family_diagram({i: 1}) for i in range(1, 10)}

    vertex_maps: dict[str, dict[str, str]] = {}
    wu_base: dict[str, int] = {}
    for name, edges, merged, parts, box_set in _subgraph_structures(g):
        labels = [lab for lab, _t, _h in edges]
        if merged:
            labels.append(merged[0])
        chosen = None
        for vmap in _candidate_vertex_maps(parts):
            corr = _correspondence_from_vertex_map(g, ref, edges, vmap, merged)
            base_val = wu_k33(restrict(base, corr), corr)
            ok = True
            for i in range(1, 10):
                d = wu_k33(restrict(probes[i], corr), corr) - base_val
                want = 2 if i in box_set else 0
                if d != want:
                    ok = False
                    break
            if ok:
                chosen = (vmap, base_val)
                break
        if chosen is None:
            raise AssertionError(f"no admissible labeling for subgraph {name}")
        vertex_maps[name] = chosen[0]
        wu_base[name] = chosen[1]

    # pattern linking numbers: unit-probe coefficients give the sign of each
    # pattern, the base values then pin the offset
    patterns = enumerate_link_patterns(g, (3, 4))
    tau: dict[str, int] = {}
    lk_base: dict[str, int] = {}
    pattern_tri_edge: dict[str, str] = {}
    for pat in patterns:
        tri = pat.first if len(pat.first) == 3 else pat.second
        p, q = [v for v in tri.vertices if v != "A"]
        tri_edge = g.edge_between(p, q).label
        pattern_tri_edge[str(pat)] = tri_edge
        base_lk = linking_number(link_diagram(base, pat))
        boxes = (
            {LINK_SINGLE_BOX[tri_edge]}
            if tri_edge in LINK_SINGLE_BOX
            else set(LINK_RUN[tri_edge][0])
        )
        coeffs = set()
        for i in range(1, 10):
            d = linking_number(link_diagram(probes[i], pat)) - base_lk
            if i in boxes:
                coeffs.add(d)
            elif d != 0:
                raise AssertionError(f"box {i} moves pattern {pat} unexpectedly")
        if len(coeffs) != 1 or abs(next(iter(coeffs))) != 1:
            raise AssertionError(f"non-uniform twist coefficients on pattern {pat}")
        tau[tri_edge] = next(iter(coeffs))
        lk_base[tri_edge] = base_lk

    # base offset from the single-box patterns and three relation rows
    n0 = [0] * 9
    for tri_edge, box in LINK_SINGLE_BOX.items():
        n0[box - 1] = lk_base[tri_edge] * tau[tri_edge]
    for h_idx, solve_box in ((5, 2), (4, 8), (6, 5)):
        boxes, const = H_FORMULA[h_idx]
        known = sum(n0[i - 1] for i in boxes if i != solve_box)
        rem = wu_base[f"H{h_idx}"] - const - 2 * known
        if rem % 2:
            raise AssertionError("base offset is not integral")
        n0[solve_box - 1] = rem // 2
    n0t = tuple(n0)

    for name, val in wu_base.items():
        if val != formula_wu(name, n0t):
            raise AssertionError(f"base value of {name} violates its closed form")
    for tri_edge, base_lk in lk_base.items():
        if base_lk != tau[tri_edge] * formula_lk_magnitude(tri_edge, n0t):
            raise AssertionError(f"base linking of {tri_edge}-pattern violates form")

    return Calibration(vertex_maps, n0t, tau)
