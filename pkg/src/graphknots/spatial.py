"""Concrete spatial embeddings and exact regular projection.

A LinearEmbedding places vertices at integer points and realizes edges as
straight segments; the twist-parameterised canonical K331 family lives in
:mod:`graphknots.hfamily` and is re-exported here.  All geometric tests are
exact; determinism is part of every contract.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from graphknots import _geometry
from graphknots._geometry import (
    EmbeddingError,
    NonGenericProjectionError,
    validate_polyline_embedding,
)
from graphknots.diagrams import Crossing, Diagram
from graphknots.graphs import Graph


class EmbeddingSamplingError(RuntimeError):
    """Random sampling failed to produce an embedding within the retry limit."""


@dataclass(frozen=True)
class TwistParameters:
    """The nine full-twist counts of the canonical K331 diagram family."""

    n: tuple[int, int, int, int, int, int, int, int, int]

    def __post_init__(self):
        if len(self.n) != 9 or not all(isinstance(x, int) for x in self.n):
            raise ValueError("twist parameters are nine integers")

    @classmethod
    def zero(cls) -> "TwistParameters":
        return cls((0,) * 9)

    @classmethod
    def of(cls, *ns: int) -> "TwistParameters":
        return cls(tuple(ns))

    def __getitem__(self, i: int) -> int:
        return self.n[i]


class PolylineEmbedding:
    """Edges realized as exact 3D polylines (internal general form)."""

    def __init__(self, graph: Graph, vertex_coords: dict, edge_points: dict):
        self.graph = graph
        self.vertex_coords = dict(vertex_coords)
        self.edge_points = {k: [tuple(p) for p in v] for k, v in edge_points.items()}
        for e in graph.edges:
            pts = self.edge_points[e.label]
            if pts[0] != tuple(self.vertex_coords[e.tail]) or pts[-1] != tuple(
                self.vertex_coords[e.head]
            ):
                raise ValueError(f"edge {e.label} polyline does not join its endpoints")

    def edge_ends(self) -> dict:
        return {e.label: (e.tail, e.head) for e in self.graph.edges}

    def validate(self):
        validate_polyline_embedding(
            self.edge_points, self.edge_ends(), self.vertex_coords
        )


class LinearEmbedding(PolylineEmbedding):
    """Straight-line realization: vertex -> integer point, edges segments."""

    def __init__(self, graph: Graph, coords: dict, validate: bool = True):
        pts = {
            e.label: [tuple(coords[e.tail]), tuple(coords[e.head])]
            for e in graph.edges
        }
        super().__init__(graph, coords, pts)
        if validate:
            self.validate()

    @property
    def coords(self) -> dict:
        return self.vertex_coords


def random_linear_embedding(
    g: Graph, bound: int, seed: int, retries: int = 1000
) -> LinearEmbedding:
    """Uniform integer coordinates in [-bound, bound]^3, resampled until valid.

    Deterministic for fixed (graph, bound, seed).  Raises
    EmbeddingSamplingError after ``retries`` failed draws, which for tiny
    bounds indicates that no general-position placement exists.
    """
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    rng = random.Random(seed)
    last_err = None
    for _ in range(retries):
        coords = {
            v: (
                rng.randint(-bound, bound),
                rng.randint(-bound, bound),
                rng.randint(-bound, bound),
            )
            for v in g.vertices
        }
        try:
            return LinearEmbedding(g, coords)
        except EmbeddingError as err:
            last_err = err
    raise EmbeddingSamplingError(
        f"no embedding of {g.name} within {retries} draws at bound {bound}"
        f" (last failure: {last_err})"
    )


# ---------------------------------------------------------------------------
# Projection
# ---------------------------------------------------------------------------


def _candidate_directions():
    yield (0, 0, 1)
    k = 1
    while True:
        yield (1, k, k * k)
        k += 1


def project(
    emb: PolylineEmbedding,
    direction: Optional[Sequence[int]] = None,
    max_auto: int = 500,
) -> Diagram:
    """Exact diagram of the embedding along a generic direction.

    With ``direction`` given, a non-generic projection is rejected with a
    witness; in auto mode a deterministic candidate sequence is scanned and
    the first generic direction wins.  The over-strand at a crossing is the
    one with the larger signed depth along the direction.
    """
    ends = emb.edge_ends()
    if direction is not None:
        d = tuple(direction)
        if d == (0, 0, 0):
            raise ValueError("projection direction must be nonzero")
        raw = _geometry.project_polylines(
            emb.edge_points, ends, emb.vertex_coords, d
        )
        return _diagram_from_raw(emb, raw)
    for i, d in enumerate(_candidate_directions()):
        if i >= max_auto:
            raise NonGenericProjectionError(
                "no generic direction found in the candidate sequence"
            )
        try:
            raw = _geometry.project_polylines(
                emb.edge_points, ends, emb.vertex_coords, d
            )
        except NonGenericProjectionError:
            continue
        return _diagram_from_raw(emb, raw)


def _diagram_from_raw(emb: PolylineEmbedding, raw: list) -> Diagram:
    order = {e.label: i for i, e in enumerate(emb.graph.edges)}
    normalized = []
    for la, pa, lb, pb, over_a, sign in raw:
        if (order[la], pa) > (order[lb], pb):
            la, pa, lb, pb, over_a = lb, pb, la, pa, not over_a
        normalized.append(Crossing(la, pa, lb, pb, over_a, sign))
    normalized.sort(key=lambda c: (order[c.edge_a], c.pos_a, order[c.edge_b], c.pos_b))
    labels = frozenset(e.label for e in emb.graph.edges)
    return Diagram(emb.graph, labels, tuple(normalized))


# re-exported here because the twist family is part of the spatial surface
from graphknots.hfamily import build_h_embedding  # noqa: E402  (cycle-free)
from graphknots.diagrams import restrict  # noqa: E402,F401  (spatial surface)

__all__ = [
    "TwistParameters",
    "LinearEmbedding",
    "PolylineEmbedding",
    "EmbeddingError",
    "EmbeddingSamplingError",
    "NonGenericProjectionError",
    "random_linear_embedding",
    "project",
    "restrict",
    "build_h_embedding",
]
