"""Abstract-graph layer: cycles, link patterns, triangle-Y moves, Petersen catalog.

Graphs carry an ordered vertex list and an ordered, oriented edge list; both
orders are part of the graph's identity because they index the cochain basis
used by the invariant layer.  All values here are immutable after
construction and all operations are pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence


class Edge(NamedTuple):
    label: str
    tail: str
    head: str

    @property
    def ends(self) -> frozenset:
        return frozenset((self.tail, self.head))


class Graph:
    """Labeled simple graph with a fixed vertex order and oriented edge order."""

    def __init__(
        self,
        name: str,
        vertices: Sequence[str],
        edges: Sequence[tuple[str, str, str]],
        apex: Optional[str] = None,
        parts: Optional[dict[str, int]] = None,
        move: Optional["YDeltaMove"] = None,
    ):
        self.name = name
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        self.edges = tuple(Edge(lab, t, h) for (lab, t, h) in edges)
        self.apex = apex
        self.parts = dict(parts) if parts else None
        self.move = move

        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.edge_index = {e.label: i for i, e in enumerate(self.edges)}
        if len(self.edge_index) != len(self.edges):
            raise ValueError("duplicate edge labels")
        self._pair_to_edge: dict[frozenset, Edge] = {}
        self.adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for e in self.edges:
            if e.tail == e.head:
                raise ValueError(f"loop edge {e.label}")
            if e.tail not in self.vertex_index or e.head not in self.vertex_index:
                raise ValueError(f"edge {e.label} uses unknown vertex")
            if e.ends in self._pair_to_edge:
                raise ValueError(f"parallel edge {e.label}")
            self._pair_to_edge[e.ends] = e
            self.adj[e.tail].add(e.head)
            self.adj[e.head].add(e.tail)

    # -- basic queries -------------------------------------------------

    def edge_between(self, u: str, v: str) -> Edge:
        return self._pair_to_edge[frozenset((u, v))]

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self._pair_to_edge

    def edge(self, label: str) -> Edge:
        return self.edges[self.edge_index[label]]

    def degree(self, v: str) -> int:
        return len(self.adj[v])

    def edges_at(self, v: str) -> list[Edge]:
        return [e for e in self.edges if v in e.ends]

    def edges_disjoint(self, a: str, b: str) -> bool:
        return not (self.edge(a).ends & self.edge(b).ends)

    def disjoint_edge_pairs(self) -> list[tuple[int, int]]:
        """Index pairs (i < j) of vertex-disjoint edges, in basis order."""
        out = []
        for i, j in itertools.combinations(range(len(self.edges)), 2):
            if not (self.edges[i].ends & self.edges[j].ends):
                out.append((i, j))
        return out

    def triangles(self) -> list[tuple[str, str, str]]:
        out = []
        for trio in itertools.combinations(self.vertices, 3):
            a, b, c = trio
            if self.has_edge(a, b) and self.has_edge(b, c) and self.has_edge(a, c):
                out.append(trio)
        return out

    def __repr__(self):
        return f"Graph({self.name!r}, |V|={len(self.vertices)}, |E|={len(self.edges)})"


# ---------------------------------------------------------------------------
# Cycles and link patterns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cycle:
    """Simple cycle, canonicalized up to rotation and reversal.

    ``vertices`` is the lexicographically minimal vertex sequence (by vertex
    index) over all rotations of both traversal directions; ``edge_labels``
    and ``directions`` describe the traversal edge by edge, where direction
    +1 means the edge is traversed tail-to-head.
    """

    vertices: tuple[str, ...]
    edge_labels: tuple[str, ...]
    directions: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self.edge_labels)

    def __str__(self):
        return "-".join(self.vertices)


def make_cycle(g: Graph, vertex_seq: Sequence[str]) -> Cycle:
    """Canonicalize a vertex sequence into a Cycle of ``g``."""
    seq = list(vertex_seq)
    n = len(seq)
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    if len(set(seq)) != n:
        raise ValueError("vertex repeated in cycle")
    idx = g.vertex_index
    best = None
    for base in (seq, seq[::-1]):
        for r in range(n):
            cand = tuple(base[r:] + base[:r])
            key = tuple(idx[v] for v in cand)
            if best is None or key < best[0]:
                best = (key, cand)
    verts = best[1]
    labels, dirs = [], []
    for i in range(n):
        u, v = verts[i], verts[(i + 1) % n]
        e = g.edge_between(u, v)
        labels.append(e.label)
        dirs.append(1 if (e.tail, e.head) == (u, v) else -1)
    return Cycle(verts, tuple(labels), tuple(dirs))


@dataclass(frozen=True)
class LinkPattern:
    """Unordered pair of vertex-disjoint cycles."""

    first: Cycle
    second: Cycle

    def __post_init__(self):
        if self.first.vertex_set & self.second.vertex_set:
            raise ValueError("cycles of a link pattern must be vertex-disjoint")

    def __str__(self):
        return f"({self.first})({self.second})"


def make_link_pattern(g: Graph, c1: Cycle, c2: Cycle) -> LinkPattern:
    idx = g.vertex_index
    k1 = (len(c1), tuple(idx[v] for v in c1.vertices))
    k2 = (len(c2), tuple(idx[v] for v in c2.vertices))
    if k2 < k1:
        c1, c2 = c2, c1
    return LinkPattern(c1, c2)


def enumerate_cycles(
    g: Graph,
    *,
    length: Optional[int] = None,
    hamiltonian: bool = False,
    contains: Optional[str] = None,
    avoids: Optional[str] = None,
) -> list[Cycle]:
    """All simple cycles of ``g``, duplicate-free, in deterministic order.

    Each cycle is found once by rooting the search at its minimal vertex and
    breaking the direction symmetry with ``path[1] < path[-1]``.
    """
    idx = g.vertex_index
    n = len(g.vertices)
    found: list[Cycle] = []

    def dfs(start_i: int, path: list[str], used: set[str]):
        last = path[-1]
        for w in sorted(g.adj[last], key=idx.get):
            wi = idx[w]
            if wi < start_i:
                continue
            if w == path[0]:
                if len(path) >= 3 and idx[path[1]] < idx[path[-1]]:
                    found.append(make_cycle(g, path))
                continue
            if w in used:
                continue
            if length is not None and len(path) >= length:
                continue
            used.add(w)
            path.append(w)
            dfs(start_i, path, used)
            path.pop()
            used.remove(w)

    for s in range(n):
        v = g.vertices[s]
        dfs(s, [v], {v})

    want = n if hamiltonian else length
    out = []
    for c in found:
        if want is not None and len(c) != want:
            continue
        if contains is not None and contains not in c.vertex_set:
            continue
        if avoids is not None and avoids in c.vertex_set:
            continue
        out.append(c)
    out.sort(key=lambda c: (len(c), tuple(idx[v] for v in c.vertices)))
    return out


def enumerate_link_patterns(
    g: Graph, sizes: Optional[tuple[int, int]] = None
) -> list[LinkPattern]:
    """All unordered pairs of vertex-disjoint cycles, optionally of sizes (s, t)."""
    idx = g.vertex_index
    cycles = enumerate_cycles(g)
    out = []
    for c1, c2 in itertools.combinations(cycles, 2):
        if c1.vertex_set & c2.vertex_set:
            continue
        if sizes is not None and tuple(sorted((len(c1), len(c2)))) != tuple(
            sorted(sizes)
        ):
            continue
        out.append(make_link_pattern(g, c1, c2))
    out.sort(
        key=lambda p: (
            len(p.first),
            len(p.second),
            tuple(idx[v] for v in p.first.vertices),
            tuple(idx[v] for v in p.second.vertices),
        )
    )
    return out


# ---------------------------------------------------------------------------
# Triangle-Y moves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class YDeltaMove:
    """Record of one triangle-Y move.

    ``triangle`` is (v1, v2, v3) in increasing vertex order of the parent;
    e_i is the parent edge v_i -- v_{i+1} (indices mod 3) and f_i is the new
    edge from the new degree-3 vertex to v_i.
    """

    parent_name: str
    child_name: str
    triangle: tuple[str, str, str]
    e_labels: tuple[str, str, str]
    f_labels: tuple[str, str, str]
    new_vertex: str


def triangle_y_move(g: Graph, triangle: Iterable[str]) -> Graph:
    """Replace a triangle by a new degree-3 vertex joined to its corners.

    The child graph keeps the common edges in parent order, appends the three
    Y-edges f1, f2, f3, and records the move in ``child.move``.
    """
    tri = sorted(set(triangle), key=g.vertex_index.get)
    if len(tri) != 3:
        raise ValueError("triangle must consist of three distinct vertices")
    v1, v2, v3 = tri
    for a, b in ((v1, v2), (v2, v3), (v1, v3)):
        if not g.has_edge(a, b):
            raise ValueError(f"{{{v1},{v2},{v3}}} is not a triangle of {g.name}")
    e_labels = (
        g.edge_between(v1, v2).label,
        g.edge_between(v2, v3).label,
        g.edge_between(v3, v1).label,
    )
    new_vertex = "y" + "-".join(tri)
    f_labels = tuple(f"{new_vertex}:{v}" for v in tri)
    child_name = f"{g.name}/Y({v1},{v2},{v3})"
    edges = [
        (e.label, e.tail, e.head) for e in g.edges if e.label not in set(e_labels)
    ]
    edges.extend((f_labels[i], new_vertex, tri[i]) for i in range(3))
    move = YDeltaMove(g.name, child_name, (v1, v2, v3), e_labels, f_labels, new_vertex)
    return Graph(child_name, g.vertices + (new_vertex,), edges, move=move)


def phi_cycle_map(parent: Graph, child: Graph, cycle: Cycle, move: YDeltaMove) -> Cycle:
    """Image of a parent cycle (other than the moved triangle) in the child.

    A cycle through no triangle edge maps to the same edge set; a cycle
    through exactly e_i replaces it with {f_i, f_{i+1}}; a cycle through
    e_i, e_{i+1} replaces them with {f_i, f_{i+2}}.  The map is surjective
    onto the child's cycles.
    """
    used = [lab for lab in move.e_labels if lab in cycle.edge_set]
    if len(used) == 3:
        raise ValueError("phi is not defined on the moved triangle")
    if not used:
        return make_cycle(child, cycle.vertices)
    verts = list(cycle.vertices)
    n = len(verts)
    if len(used) == 1:
        ends = set(parent.edge(used[0]).ends)
        i = next(
            k for k in range(n) if {verts[k], verts[(k + 1) % n]} == ends
        )
        return make_cycle(child, verts[: i + 1] + [move.new_vertex] + verts[i + 1 :])
    # two triangle edges meet at a corner the cycle passes through; the new
    # vertex takes the corner's place
    shared = next(
        iter(set(parent.edge(used[0]).ends) & set(parent.edge(used[1]).ends))
    )
    return make_cycle(
        child, [move.new_vertex if v == shared else v for v in verts]
    )


def psi_link_map(
    child: Graph, parent: Graph, pattern: LinkPattern, move: YDeltaMove
) -> LinkPattern:
    """Image of a child link pattern in the parent (total on all patterns).

    A component avoiding the Y vertex maps to itself; a component through
    f_i, f_j is rerouted through the triangle edge v_i -- v_j.
    """
    tri = move.triangle

    def map_cycle(c: Cycle) -> Cycle:
        if move.new_vertex not in c.vertex_set:
            return make_cycle(parent, c.vertices)
        verts = [v for v in c.vertices if v != move.new_vertex]
        return make_cycle(parent, verts)

    return make_link_pattern(parent, map_cycle(pattern.first), map_cycle(pattern.second))


# ---------------------------------------------------------------------------
# Isomorphism (small graphs, catalog dedup)
# ---------------------------------------------------------------------------


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Backtracking isomorphism test with degree-sequence pruning (<= 10 vertices)."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    deg1 = sorted(g1.degree(v) for v in g1.vertices)
    deg2 = sorted(g2.degree(v) for v in g2.vertices)
    if deg1 != deg2:
        return False

    order = sorted(g1.vertices, key=lambda v: -g1.degree(v))
    cand = {
        v: [w for w in g2.vertices if g2.degree(w) == g1.degree(v)] for v in order
    }

    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in cand[v]:
            if w in used:
                continue
            ok = True
            for u in mapping:
                if g1.has_edge(v, u) != g2.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# Root graphs
# ---------------------------------------------------------------------------


def complete_graph_k6() -> Graph:
    verts = [str(i) for i in range(1, 7)]
    edges = [
        (f"e{u}{v}", u, v)
        for u, v in itertools.combinations(verts, 2)
    ]
    return Graph("K6", verts, edges)


def k331_graph() -> Graph:
    """K_{3,3,1}: the hexagon labeling with apex A.

    Vertex order 1..6, A; edge order a1..a6 (apex edges), b1..b3 (long
    diagonals 1-4, 3-6, 5-2), c1..c6 (hexagon rim 1-2-3-4-5-6-1).  The
    apex has degree 6.  Orientations: apex edges alternate A->odd and
    even->A; rim edges follow the hexagon; diagonals run odd->even.
    """
    verts = ["1", "2", "3", "4", "5", "6", "A"]
    edges = [
        ("a1", "A", "1"),
        ("a2", "2", "A"),
        ("a3", "A", "3"),
        ("a4", "4", "A"),
        ("a5", "A", "5"),
        ("a6", "6", "A"),
        ("b1", "1", "4"),
        ("b2", "3", "6"),
        ("b3", "5", "2"),
        ("c1", "1", "2"),
        ("c2", "2", "3"),
        ("c3", "3", "4"),
        ("c4", "4", "5"),
        ("c5", "5", "6"),
        ("c6", "6", "1"),
    ]
    parts = {"1": 0, "3": 0, "5": 0, "2": 1, "4": 1, "6": 1, "A": 2}
    return Graph("K331", verts, edges, apex="A", parts=parts)


def k33_reference_graph() -> Graph:
    """The reference K_{3,3} labeling used for the weighted Wu integer."""
    verts = ["1", "2", "3", "4", "5", "6"]
    edges = [
        ("b1", "1", "4"),
        ("b2", "3", "6"),
        ("b3", "5", "2"),
        ("c1", "1", "2"),
        ("c2", "2", "3"),
        ("c3", "3", "4"),
        ("c4", "4", "5"),
        ("c5", "5", "6"),
        ("c6", "6", "1"),
    ]
    parts = {"1": 0, "3": 0, "5": 0, "2": 1, "4": 1, "6": 1}
    return Graph("K33", verts, edges, parts=parts)


# ---------------------------------------------------------------------------
# Petersen catalog
# ---------------------------------------------------------------------------


@dataclass
class CatalogEntry:
    graph: Graph
    derivation: Optional[YDeltaMove]  # None for the two roots


@dataclass
class PetersenCatalog:
    """The seven Petersen-family graphs with their triangle-Y derivations."""

    entries: dict[str, CatalogEntry]
    arrows: list[YDeltaMove] = field(default_factory=list)

    @property
    def names(self) -> list[str]:
        return list(self.entries)

    def graph(self, name: str) -> Graph:
        return self.entries[name].graph

    def __len__(self):
        return len(self.entries)


def _canonical_family_name(g: Graph) -> str:
    n = len(g.vertices)
    if n == 6:
        return "K6"
    if n == 7:
        degs = sorted(g.degree(v) for v in g.vertices)
        return "K331" if degs[-1] == 6 else "P7"
    if n == 8:
        return "K44e" if not g.triangles() else "P8"
    if n == 9:
        return "P9"
    if n == 10:
        return "Petersen"
    raise ValueError(f"unexpected family member with {n} vertices")


def build_petersen_family() -> PetersenCatalog:
    """Close {K6, K331} under triangle-Y moves; exactly 7 isomorphism classes.

    Each non-root member stores the first derivation found; all distinct
    (parent class, child class) arrows are retained for transport tests.
    """
    roots = [complete_graph_k6(), k331_graph()]
    entries: dict[str, CatalogEntry] = {
        g.name: CatalogEntry(g, None) for g in roots
    }
    arrows: list[YDeltaMove] = []
    arrow_keys: set[tuple[str, str]] = set()
    queue = list(roots)
    while queue:
        g = queue.pop(0)
        for tri in g.triangles():
            child = triangle_y_move(g, tri)
            match = None
            for name, entry in entries.items():
                if are_isomorphic(child, entry.graph):
                    match = name
                    break
            if match is None:
                canon = _canonical_family_name(child)
                move = child.move
                move = YDeltaMove(
                    g.name, canon, move.triangle, move.e_labels, move.f_labels,
                    move.new_vertex,
                )
                child = Graph(
                    canon, child.vertices,
                    [(e.label, e.tail, e.head) for e in child.edges],
                    move=move,
                )
                entries[canon] = CatalogEntry(child, move)
                arrows.append(move)
                arrow_keys.add((g.name, canon))
                queue.append(child)
            elif (g.name, match) not in arrow_keys:
                move = child.move
                arrows.append(
                    YDeltaMove(
                        g.name, match, move.triangle, move.e_labels,
                        move.f_labels, move.new_vertex,
                    )
                )
                arrow_keys.add((g.name, match))
    if len(entries) != 7:
        raise AssertionError(f"Petersen family closure found {len(entries)} classes")
    return PetersenCatalog(entries, arrows)


# ---------------------------------------------------------------------------
# K331 subgraph decomposition (18 subdivisions, 6 K33 subgraphs, apex-deleted K33)
# ---------------------------------------------------------------------------

# Each G_i deletes the two K33 edges at a hub vertex u toward {v, w}, and the
# apex edges to the three vertices not in {u, v, w}; it is a subdivision of
# K33 whose subdivided edge is the path A - u - t (t = third neighbor of u).
# The index convention (grouped in triples, j = i mod 3) matches the twist
# formulas of the canonical diagram family; see graphknots.spatial.
_G_TABLE: dict[int, tuple[str, tuple[str, str]]] = {
    1: ("5", ("2", "4")),
    2: ("3", ("2", "6")),
    3: ("1", ("4", "6")),
    4: ("4", ("1", "3")),
    5: ("2", ("1", "5")),
    6: ("6", ("3", "5")),
    7: ("5", ("2", "6")),
    8: ("3", ("4", "6")),
    9: ("1", ("2", "4")),
    10: ("4", ("1", "5")),
    11: ("2", ("3", "5")),
    12: ("6", ("1", "3")),
    13: ("5", ("4", "6")),
    14: ("3", ("2", "4")),
    15: ("1", ("2", "6")),
    16: ("4", ("3", "5")),
    17: ("2", ("1", "3")),
    18: ("6", ("1", "5")),
}

# H_i deletes one non-apex vertex and the apex edges into that vertex's part;
# the apex then takes the deleted vertex's place in a K33.
_H_TABLE: dict[int, str] = {1: "5", 2: "3", 3: "1", 4: "4", 5: "2", 6: "6"}

# Frozen vertex maps (branch vertices -> reference-K33 vertices) fixing the
# labeling under which the weighted Wu integers of the canonical diagram
# family match their closed forms with a uniform +2 twist coefficient.
# Derived once by graphknots.hfamily.derive_calibration and re-checked by
# the test suite.
_K331_SUBGRAPH_VERTEX_MAPS: dict[str, dict[str, str]] = {
    "G1": {"1": "1", "2": "2", "3": "3", "4": "4", "6": "6", "A": "5"},
    "G2": {"1": "1", "2": "2", "4": "6", "5": "3", "6": "4", "A": "5"},
    "G3": {"2": "2", "3": "1", "4": "4", "5": "3", "6": "6", "A": "5"},
    "G4": {"1": "1", "2": "2", "3": "3", "5": "5", "6": "6", "A": "4"},
    "G5": {"1": "1", "3": "3", "4": "2", "5": "5", "6": "4", "A": "6"},
    "G6": {"1": "1", "2": "2", "3": "3", "4": "4", "5": "5", "A": "6"},
    "G7": {"1": "1", "2": "2", "3": "3", "4": "4", "6": "6", "A": "5"},
    "G8": {"1": "1", "2": "2", "4": "6", "5": "3", "6": "4", "A": "5"},
    "G9": {"2": "2", "3": "1", "4": "4", "5": "3", "6": "6", "A": "5"},
    "G10": {"1": "1", "2": "2", "3": "3", "5": "5", "6": "6", "A": "4"},
    "G11": {"1": "1", "3": "3", "4": "2", "5": "5", "6": "4", "A": "6"},
    "G12": {"1": "1", "2": "2", "3": "3", "4": "4", "5": "5", "A": "6"},
    "G13": {"1": "1", "2": "2", "3": "3", "4": "4", "6": "6", "A": "5"},
    "G14": {"1": "1", "2": "2", "4": "6", "5": "3", "6": "4", "A": "5"},
    "G15": {"2": "2", "3": "1", "4": "4", "5": "3", "6": "6", "A": "5"},
    "G16": {"1": "1", "2": "2", "3": "3", "5": "5", "6": "6", "A": "4"},
    "G17": {"1": "1", "3": "3", "4": "2", "5": "5", "6": "4", "A": "6"},
    "G18": {"1": "1", "2": "2", "3": "3", "4": "4", "5": "5", "A": "6"},
    "H1": {"1": "1", "2": "2", "3": "3", "4": "4", "6": "6", "A": "5"},
    "H2": {"1": "1", "2": "2", "4": "6", "5": "3", "6": "4", "A": "5"},
    "H3": {"2": "2", "3": "1", "4": "4", "5": "3", "6": "6", "A": "5"},
    "H4": {"1": "1", "2": "2", "3": "3", "5": "5", "6": "6", "A": "4"},
    "H5": {"1": "1", "3": "3", "4": "2", "5": "5", "6": "4", "A": "6"},
    "H6": {"1": "1", "2": "2", "3": "3", "4": "4", "5": "5", "A": "6"},
    "K": {"1": "1", "2": "2", "3": "3", "4": "4", "5": "5", "6": "6"},
}


@dataclass(frozen=True)
class SubgraphSpec:
    """One subgraph of K331 with its reference-K33 correspondence.

    ``correspondence`` maps each K331 edge label of the subgraph to a pair
    (reference K33 edge label, orientation sign); for the subdivided edge of
    a G_i both arcs map to the same reference edge.
    """

    name: str
    edge_labels: frozenset
    correspondence: dict[str, tuple[str, int]]

    @property
    def is_subdivision(self) -> bool:
        return len(self.edge_labels) == 10


def _k33_edge_between(ref: Graph, u: str, v: str) -> Edge:
    return ref.edge_between(u, v)


def _correspondence_from_vertex_map(
    g331: Graph,
    ref: Graph,
    sub_edges: list[tuple[str, str, str]],
    vmap: dict[str, str],
    merged: Optional[tuple[str, str, str]] = None,
) -> dict[str, tuple[str, int]]:
    """Edge correspondence induced by a branch-vertex map.

    ``sub_edges`` lists (label, tail, head) of the subgraph's edges with the
    apex treated as an ordinary vertex.  ``merged`` = (label_a, hub, label_t)
    names the two arcs of the subdivided edge: apex - hub - t.
    """
    corr: dict[str, tuple[str, int]] = {}
    merged_labels = set()
    if merged:
        lab_a, hub, lab_t = merged
        merged_labels = {lab_a, lab_t}
        e_a = g331.edge(lab_a)
        e_t = g331.edge(lab_t)
        t = next(iter(e_t.ends - {hub}))
        ref_e = ref.edge_between(vmap["A"], vmap[t])
        # orient both arcs along the path A -> hub -> t
        path_sign = 1 if (ref_e.tail, ref_e.head) == (vmap["A"], vmap[t]) else -1
        corr[lab_a] = (ref_e.label, path_sign * (1 if e_a.tail == "A" else -1))
        corr[lab_t] = (ref_e.label, path_sign * (1 if e_t.tail == hub else -1))
    for lab, tail, head in sub_edges:
        if lab in merged_labels:
            continue
        ref_e = ref.edge_between(vmap[tail], vmap[head])
        sign = 1 if (ref_e.tail, ref_e.head) == (vmap[tail], vmap[head]) else -1
        corr[lab] = (ref_e.label, sign)
    return corr


def _g_subgraph_edges(g: Graph, i: int) -> tuple[list[tuple[str, str, str]], tuple]:
    hub, (v, w) = _G_TABLE[i]
    kept_apex = {hub, v, w}
    deleted = {g.edge_between(hub, v).label, g.edge_between(hub, w).label}
    edges = []
    merged = None
    for e in g.edges:
        if e.label.startswith("a"):
            other = next(iter(e.ends - {"A"}))
            if other in kept_apex:
                edges.append((e.label, e.tail, e.head))
        elif e.label not in deleted:
            edges.append((e.label, e.tail, e.head))
    t = next(iter(set(g.adj[hub]) - {"A", v, w}))
    merged = (f"a{hub}", hub, g.edge_between(hub, t).label)
    return edges, merged


def _h_subgraph_edges(g: Graph, i: int) -> list[tuple[str, str, str]]:
    gone = _H_TABLE[i]
    part = g.parts[gone]
    same_part = {v for v, p in g.parts.items() if p == part and v != gone}
    edges = []
    for e in g.edges:
        if gone in e.ends:
            continue
        if e.label.startswith("a") and next(iter(e.ends - {"A"})) in same_part:
            continue
        edges.append((e.label, e.tail, e.head))
    return edges


def _require_k331(g: Graph):
    if g.name != "K331" or g.apex != "A" or len(g.edges) != 15:
        raise ValueError("k331_subgraphs expects the catalog K331 graph")


def k331_subgraphs(g: Graph) -> tuple[list[SubgraphSpec], list[SubgraphSpec], SubgraphSpec]:
    """The 18 + 6 + 1 subgraph decomposition of K331.

    Returns (G_1..G_18, H_1..H_6, K) where each spec carries the edge set and
    the frozen reference-K33 correspondence used by the weighted Wu integer.
    """
    _require_k331(g)
    ref = k33_reference_graph()
    g_specs, h_specs = [], []
    for i in range(1, 19):
        edges, merged = _g_subgraph_edges(g, i)
        vmap = _K331_SUBGRAPH_VERTEX_MAPS[f"G{i}"]
        corr = _correspondence_from_vertex_map(g, ref, edges, vmap, merged)
        g_specs.append(SubgraphSpec(f"G{i}", frozenset(corr), corr))
    for i in range(1, 7):
        edges = _h_subgraph_edges(g, i)
        vmap = _K331_SUBGRAPH_VERTEX_MAPS[f"H{i}"]
        corr = _correspondence_from_vertex_map(g, ref, edges, vmap)
        h_specs.append(SubgraphSpec(f"H{i}", frozenset(corr), corr))
    k_edges = [
        (e.label, e.tail, e.head) for e in g.edges if not e.label.startswith("a")
    ]
    vmap = _K331_SUBGRAPH_VERTEX_MAPS["K"]
    corr = _correspondence_from_vertex_map(g, ref, k_edges, vmap)
    k_spec = SubgraphSpec("K", frozenset(corr), corr)
    return g_specs, h_specs, k_spec
