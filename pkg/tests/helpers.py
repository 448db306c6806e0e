"""Shared test scaffolding: braid closures and independent invariant oracles."""

from __future__ import annotations

from graphknots.diagrams import GaussCode, smooth_components
from graphknots.graphs import Graph, enumerate_cycles
from graphknots.spatial import PolylineEmbedding, project


def braid_closure_embedding(n_strands: int, word: list[tuple[int, int]]) -> PolylineEmbedding:
    """Closure of a braid word as an explicit polyline embedding of a cycle.

    ``word`` is a list of (position i, sense +-1); the strand rising from
    position i to i+1 passes over for sense +1.  The closure permutation
    must be a single cycle so that the result is a knot.
    """

    def y(j):
        return 24 * j

    paths = {s: [(0, y(s), 0)] for s in range(n_strands)}
    at = list(range(n_strands))  # strand occupying each position
    for k, (i, sense) in enumerate(word):
        if not (0 <= i < n_strands - 1):
            raise ValueError("braid letter out of range")
        x0 = 24 * k
        sa, sb = at[i], at[i + 1]
        za = 2 if sense > 0 else -2
        paths[sa].append((x0 + 16, y(i + 1), za))
        paths[sa].append((x0 + 24, y(i + 1), 0))
        paths[sb].append((x0 + 16, y(i), -za))
        paths[sb].append((x0 + 24, y(i), 0))
        at[i], at[i + 1] = sb, sa
    xmax = 24 * len(word)
    perm = {}
    for pos, s in enumerate(at):
        if paths[s][-1] != (xmax, y(pos), 0):
            paths[s].append((xmax, y(pos), 0))
        perm[s] = pos

    verts = {}
    for j in range(n_strands):
        verts[f"L{j}"] = (0, y(j), 0)
        verts[f"R{j}"] = (xmax, y(j), 0)
    edges = []
    edge_points = {}
    for s in range(n_strands):
        lab = f"s{s}"
        edges.append((lab, f"L{s}", f"R{perm[s]}"))
        edge_points[lab] = paths[s]
    for j in range(n_strands):
        lab = f"r{j}"
        edges.append((lab, f"R{j}", f"L{j}"))
        edge_points[lab] = [
            (xmax, y(j), 0),
            (xmax + 12 + 12 * j, -24 - 24 * j, 0),
            (-12 - 12 * j, -24 - 24 * j, 0),
            (0, y(j), 0),
        ]
    g = Graph(f"braid{n_strands}", sorted(verts), edges)
    emb = PolylineEmbedding(g, verts, edge_points)
    emb.validate()
    return emb


def braid_closure_code(n_strands: int, word: list[tuple[int, int]]) -> GaussCode:
    emb = braid_closure_embedding(n_strands, word)
    dia = project(emb, direction=(0, 0, 1))
    cycles = enumerate_cycles(emb.graph, hamiltonian=True)
    assert len(cycles) == 1, "braid closure should be a single cycle"
    from graphknots.diagrams import cycle_diagram

    return cycle_diagram(dia, cycles[0])


def trefoil_code() -> GaussCode:
    return braid_closure_code(2, [(0, 1)] * 3)


def figure_eight_code() -> GaussCode:
    return braid_closure_code(3, [(0, 1), (1, -1), (0, 1), (1, -1)])


def granny_code() -> GaussCode:
    """Connected sum of two like-handed trefoils (token concatenation)."""
    t = trefoil_code().components[0]
    shift = 1 + max(tok[0] for tok in t)
    t2 = tuple((cid + shift, over, sign) for cid, over, sign in t)
    return GaussCode((t + t2,))


# ---------------------------------------------------------------------------
# Independent a2 oracle: exhaustive skein tree on the truncated Conway
# polynomial, with no memoization and no descending shortcut in the a2 sense
# (the recursion bottoms out at split descending diagrams and crossingless
# unlinks, evaluating lk through the tree as well).
# ---------------------------------------------------------------------------


def _first_violation(comps):
    """First crossing breaking the split-descending order, or None."""
    seen = set()
    for ci, comp in enumerate(comps):
        for ti, (cid, over, sign) in enumerate(comp):
            if cid in seen:
                continue
            seen.add(cid)
            other = None
            for cj, c2 in enumerate(comps):
                for tj, t in enumerate(c2):
                    if t[0] == cid and (cj, tj) != (ci, ti):
                        other = cj
            if other == ci:
                if not over:
                    return cid
            else:
                # inter-component: earlier component must be over throughout
                if not over:
                    return cid
    return None


def conway_truncated(comps) -> tuple[int, int, int]:
    """Coefficients (z^0, z^1, z^2) of the Conway polynomial, by full tree."""
    comps = [list(c) for c in comps]
    comps = [c for c in comps if True]
    if not any(comps):
        k = len(comps)
        return (1, 0, 0) if k == 1 else (0, 0, 0)
    bad = _first_violation(comps)
    if bad is None:
        k = len(comps)
        return (1, 0, 0) if k == 1 else (0, 0, 0)
    sign = None
    switched = []
    for comp in comps:
        cc = []
        for cid, over, s in comp:
            if cid == bad:
                sign = sign if sign is not None else s
                cc.append((cid, not over, -s))
            else:
                cc.append((cid, over, s))
        switched.append(cc)
    smoothed = [
        [t for t in comp if t[0] != bad] for comp in smooth_components(
            [list(c) for c in comps], bad
        )
    ]
    a = conway_truncated(switched)
    b = conway_truncated(smoothed)
    zb = (0, b[0], b[1])  # multiply by z, truncate at z^2
    if sign > 0:
        return tuple(x + y for x, y in zip(a, zb))
    return tuple(x - y for x, y in zip(a, zb))


def a2_tree_oracle(code: GaussCode) -> int:
    assert code.n_components == 1
    c0, c1, c2 = conway_truncated(code.components)
    assert c0 == 1 and c1 == 0, "knot Conway polynomial must start 1 + 0z"
    return c2
