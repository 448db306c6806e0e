"""Combinatorial diagram layer: crossings, sub-diagram extraction, Gauss codes.

A Diagram stores the crossing list of a regular projection of a spatial
graph; positions along edges are exact rationals, strictly interior to the
edges.  Gauss codes are the interchange and memoization currency of the
invariant layer; their canonical form minimizes over component order,
rotations, and crossing relabeling (orientation is meaningful and is not
quotiented).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from graphknots.graphs import Cycle, Graph, LinkPattern


@dataclass(frozen=True)
class Crossing:
    """One transverse double point between two strand passages.

    ``pos_a``/``pos_b`` are rational parameters along the two edges (which
    may coincide for a self-crossing); ``over_a`` says whether the first
    passage is the over-strand; ``sign`` is the crossing sign for the edges'
    own orientations.
    """

    edge_a: str
    pos_a: Fraction
    edge_b: str
    pos_b: Fraction
    over_a: bool
    sign: int


@dataclass(frozen=True)
class Diagram:
    graph: Graph
    edge_labels: frozenset
    crossings: tuple[Crossing, ...]

    def crossing_count(self) -> int:
        return len(self.crossings)

    def passages(self, edge: str) -> list[tuple[Fraction, int, bool]]:
        """(position, crossing index, is_a_side) for every passage on ``edge``."""
        out = []
        for i, c in enumerate(self.crossings):
            if c.edge_a == edge:
                out.append((c.pos_a, i, True))
            if c.edge_b == edge:
                out.append((c.pos_b, i, False))
        out.sort(key=lambda t: t[0])
        return out

    def signed_sum(self, edge_x: str, edge_y: str) -> int:
        """Sum of crossing signs between two distinct edges."""
        total = 0
        for c in self.crossings:
            if {c.edge_a, c.edge_b} == {edge_x, edge_y} and c.edge_a != c.edge_b:
                total += c.sign
        return total


def restrict(dia: Diagram, edges: Iterable[str]) -> Diagram:
    """Sub-diagram induced by a set of edges; mixed crossings vanish."""
    keep = frozenset(edges)
    unknown = keep - {e.label for e in dia.graph.edges}
    if unknown:
        raise ValueError(f"edges not in the diagram's graph: {sorted(unknown)}")
    cr = tuple(
        c for c in dia.crossings if c.edge_a in keep and c.edge_b in keep
    )
    return Diagram(dia.graph, keep, cr)


# ---------------------------------------------------------------------------
# Gauss codes
# ---------------------------------------------------------------------------

Token = tuple  # (crossing id, over: bool, sign: int)


class GaussCode:
    """Signed Gauss code: per component a cyclic token sequence.

    Every crossing id occurs exactly twice overall, once over and once
    under.  Equality and hashing go through the canonical form, which is
    computed lazily and cached (it is the memoization key of the skein
    recursion).
    """

    __slots__ = ("components", "_canon")

    def __init__(self, components):
        self.components = tuple(tuple(c) for c in components)
        self._canon = None
        seen: dict[int, list[bool]] = {}
        for comp in self.components:
            for cid, over, sign in comp:
                seen.setdefault(cid, []).append(over)
        for cid, overs in seen.items():
            if len(overs) != 2 or overs[0] == overs[1]:
                raise ValueError(f"crossing {cid} must appear once over, once under")

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def n_crossings(self) -> int:
        return sum(len(c) for c in self.components) // 2

    def crossing_ids(self) -> set[int]:
        return {t[0] for comp in self.components for t in comp}

    def _canonical_components(self) -> tuple:
        if self._canon is None:
            self._canon = canonical_components(self.components)
        return self._canon

    def canonical(self) -> "GaussCode":
        code = GaussCode(self._canonical_components())
        code._canon = code.components
        return code

    def text(self) -> str:
        return code_text(self.components)

    def canonical_text(self) -> str:
        return code_text(self._canonical_components())

    def __repr__(self):
        return f"GaussCode({self.text()!r})"

    def __eq__(self, other):
        if not isinstance(other, GaussCode):
            return NotImplemented
        return self._canonical_components() == other._canonical_components()

    def __hash__(self):
        return hash(self._canonical_components())


def code_text(components) -> str:
    parts = []
    for comp in components:
        parts.append(
            ",".join(
                f"{'+' if sign > 0 else '-'}{cid}{'O' if over else 'U'}"
                for cid, over, sign in comp
            )
        )
    return "|".join(parts)


def parse_code_text(text: str) -> GaussCode:
    comps = []
    for part in text.split("|"):
        toks = []
        if part:
            for item in part.split(","):
                sign = 1 if item[0] == "+" else -1
                over = item[-1] == "O"
                cid = int(item[1:-1])
                toks.append((cid, over, sign))
        comps.append(tuple(toks))
    return GaussCode(tuple(comps))


def _relabeled_key(components: Sequence[Sequence[Token]]) -> tuple:
    """Comparable key: relabel crossing ids by first appearance."""
    relabel: dict[int, int] = {}
    out = []
    for comp in components:
        cc = []
        for cid, over, sign in comp:
            new = relabel.setdefault(cid, len(relabel) + 1)
            cc.append((new, over, sign))
        out.append(tuple(cc))
    return tuple(out)


def canonical_components(components) -> tuple:
    """Lexicographically minimal relabeled form over component orders and rotations."""
    import itertools as _it

    comps = [tuple(c) for c in components]
    best = None
    for order in _it.permutations(range(len(comps))):
        rot_choices = []
        for i in order:
            c = comps[i]
            rot_choices.append(
                [c[r:] + c[:r] for r in range(len(c))] if c else [()]
            )
        for rotated in _it.product(*rot_choices):
            key = _relabeled_key(rotated)
            if best is None or key < best:
                best = key
    return best if best is not None else ()


def canonical_code(code: GaussCode) -> GaussCode:
    return code.canonical()


# ---------------------------------------------------------------------------
# Extraction from diagrams
# ---------------------------------------------------------------------------


def _component_tokens(dia: Diagram, cycle: Cycle, keep_ids: set[int]) -> list[Token]:
    """Walk the cycle's edges in traversal order and emit its passages."""
    tokens: list[Token] = []
    for lab, direction in zip(cycle.edge_labels, cycle.directions):
        passages = dia.passages(lab)
        if direction < 0:
            passages = passages[::-1]
        for pos, idx, is_a in passages:
            if idx not in keep_ids:
                continue
            c = dia.crossings[idx]
            over = c.over_a if is_a else not c.over_a
            tokens.append((idx, over, c.sign))
    return tokens


def cycle_diagram(dia: Diagram, cycle: Cycle) -> GaussCode:
    """Knot Gauss code of one embedded cycle (canonical form).

    Crossing signs are re-expressed for the cycle's traversal orientation:
    the sign flips when exactly one of the two strands runs against its
    edge's orientation.
    """
    edge_set = cycle.edge_set
    if not edge_set <= dia.edge_labels:
        raise ValueError("cycle uses edges outside the diagram")
    keep = {
        i
        for i, c in enumerate(dia.crossings)
        if c.edge_a in edge_set and c.edge_b in edge_set
    }
    dirs = {lab: d for lab, d in zip(cycle.edge_labels, cycle.directions)}
    tokens = []
    for cid, over, sign in _component_tokens(dia, cycle, keep):
        c = dia.crossings[cid]
        tokens.append((cid, over, sign * dirs[c.edge_a] * dirs[c.edge_b]))
    # GaussCode identity is canonical (lazy): equal for any traversal start
    return GaussCode((tuple(tokens),))


def link_diagram(dia: Diagram, pattern: LinkPattern) -> GaussCode:
    """2-component Gauss code of a link pattern (canonical form).

    Intra-component crossings are retained; they are recognizable because
    their id appears twice within one component.
    """
    c1, c2 = pattern.first, pattern.second
    edges = c1.edge_set | c2.edge_set
    if not edges <= dia.edge_labels:
        raise ValueError("pattern uses edges outside the diagram")
    keep = {
        i
        for i, c in enumerate(dia.crossings)
        if c.edge_a in edges and c.edge_b in edges
    }
    dirs = {lab: d for lab, d in zip(c1.edge_labels, c1.directions)}
    dirs.update({lab: d for lab, d in zip(c2.edge_labels, c2.directions)})
    comps = []
    for cyc in (c1, c2):
        toks = []
        for cid, over, sign in _component_tokens(dia, cyc, keep):
            c = dia.crossings[cid]
            toks.append((cid, over, sign * dirs[c.edge_a] * dirs[c.edge_b]))
        comps.append(tuple(toks))
    return GaussCode(tuple(comps))


# ---------------------------------------------------------------------------
# Skein primitives
# ---------------------------------------------------------------------------


def switch_crossing(code: GaussCode, cid: int) -> GaussCode:
    """Toggle over/under at one crossing and negate its sign (recanonicalized)."""
    if cid not in code.crossing_ids():
        raise ValueError(f"crossing {cid} not in code")
    comps = tuple(
        tuple(
            (c, (not over) if c == cid else over, -s if c == cid else s)
            for c, over, s in comp
        )
        for comp in code.components
    )
    return GaussCode(comps).canonical()


def smooth_crossing(code: GaussCode, cid: int) -> GaussCode:
    """Oriented smoothing at one crossing (recanonicalized).

    Smoothing a self-crossing splits its component in two; smoothing an
    inter-component crossing merges the two components.
    """
    if cid not in code.crossing_ids():
        raise ValueError(f"crossing {cid} not in code")
    comps = [list(c) for c in code.components]
    return GaussCode(smooth_components(comps, cid)).canonical()


def smooth_components(comps: list[list[Token]], cid: int) -> tuple:
    """Oriented smoothing on raw token lists (shared by a2 and its tests)."""
    locs = [
        (ci, ti)
        for ci, comp in enumerate(comps)
        for ti, t in enumerate(comp)
        if t[0] == cid
    ]
    (c1, t1), (c2, t2) = locs
    if c1 == c2:
        comp = comps[c1]
        i, j = sorted((t1, t2))
        half1 = comp[i + 1 : j]
        half2 = comp[j + 1 :] + comp[:i]
        out = [c for k, c in enumerate(comps) if k != c1]
        out.extend([half1, half2])
    else:
        a, b = comps[c1], comps[c2]
        merged = a[:t1] + b[t2 + 1 :] + b[:t2] + a[t1 + 1 :]
        out = [c for k, c in enumerate(comps) if k not in (c1, c2)]
        out.append(merged)
    return tuple(tuple(c) for c in out)
