"""Weighted, genus-decorated dual graphs of resolution exceptional sets.

A vertex stands for an irreducible exceptional component, its weight for
the self-intersection number and its genus for the genus of the component;
edges (with multiplicity) record intersections between distinct
components.  Loops are rejected: every component is assumed smooth, as in
the simple-normal-crossings setting all estimates in this package rely on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import ValidationError
from .exact_linalg import ExactMatrix

VertexId = int | str


def _id_key(vid: VertexId):
    return (0, vid) if isinstance(vid, int) else (1, vid)


def _norm_edge(a: VertexId, b: VertexId) -> tuple[VertexId, VertexId]:
    return (a, b) if _id_key(a) <= _id_key(b) else (b, a)


@dataclass(frozen=True)
class GraphVertex:
    id: VertexId
    self_int: int
    genus: int = 0
    labels: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if isinstance(self.id, bool) or not isinstance(self.id, (int, str)):
            raise ValidationError(f"vertex id must be an int or string, got {self.id!r}")
        if not isinstance(self.self_int, int) or isinstance(self.self_int, bool):
            raise ValidationError(f"self-intersection of {self.id!r} must be an integer")
        if not isinstance(self.genus, int) or isinstance(self.genus, bool) or self.genus < 0:
            raise ValidationError(f"genus of vertex {self.id!r} must be a non-negative integer")
        object.__setattr__(self, "labels", frozenset(self.labels))


@dataclass(frozen=True)
class DualGraph:
    """Immutable decorated multigraph; vertex order is the matrix index order."""

    vertices: tuple[GraphVertex, ...]
    edges: tuple[tuple[VertexId, VertexId], ...]

    def __post_init__(self):
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValidationError("vertex ids must be unique")
        known = set(ids)
        normed = []
        for a, b in self.edges:
            if a == b:
                raise ValidationError(f"loop edge at vertex {a!r} rejected: components are smooth")
            if a not in known or b not in known:
                raise ValidationError(f"edge ({a!r}, {b!r}) references an unknown vertex")
            normed.append(_norm_edge(a, b))
        object.__setattr__(self, "edges", tuple(sorted(normed, key=lambda e: (_id_key(e[0]), _id_key(e[1])))))

    @classmethod
    def build(cls, vertices: Iterable, edges: Iterable = ()) -> "DualGraph":
        """Build from (id, self_int[, genus[, labels]]) tuples and id pairs."""
        vs = []
        for spec in vertices:
            if isinstance(spec, GraphVertex):
                vs.append(spec)
                continue
            vid, self_int, *rest = spec
            genus = rest[0] if rest else 0
            labels = frozenset(rest[1]) if len(rest) > 1 else frozenset()
            vs.append(GraphVertex(vid, self_int, genus, labels))
        return cls(tuple(vs), tuple((a, b) for a, b in edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def ids(self) -> tuple[VertexId, ...]:
        return tuple(v.id for v in self.vertices)

    def index_of(self, vid: VertexId) -> int:
        for i, v in enumerate(self.vertices):
            if v.id == vid:
                return i
        raise ValidationError(f"unknown vertex id {vid!r}")

    def edge_multiplicity(self, a: VertexId, b: VertexId) -> int:
        e = _norm_edge(a, b)
        return sum(1 for other in self.edges if other == e)

    def adjacency_counts(self) -> dict[VertexId, dict[VertexId, int]]:
        counts: dict[VertexId, dict[VertexId, int]] = {v.id: {} for v in self.vertices}
        for a, b in self.edges:
            counts[a][b] = counts[a].get(b, 0) + 1
            counts[b][a] = counts[b].get(a, 0) + 1
        return counts

    def degree(self, vid: VertexId) -> int:
        return sum(1 for a, b in self.edges if vid in (a, b))

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = self.adjacency_counts()
        seen = {self.vertices[0].id}
        stack = [self.vertices[0].id]
        while stack:
            for nbr in adj[stack.pop()]:
                if nbr not in seen:
                    seen.add(nbr)
                    stack.append(nbr)
        return len(seen) == self.n

    def relabel(self, mapping: Mapping[VertexId, VertexId]) -> "DualGraph":
        """Rename vertex ids; decorations and adjacency travel with the vertex."""
        if set(mapping.keys()) != set(self.ids) or len(set(mapping.values())) != self.n:
            raise ValidationError("relabeling must be a bijection on the vertex ids")
        vs = tuple(
            GraphVertex(mapping[v.id], v.self_int, v.genus, v.labels) for v in self.vertices
        )
        es = tuple((mapping[a], mapping[b]) for a, b in self.edges)
        return DualGraph(vs, es)

    def with_labels(self, extra: Mapping[VertexId, Iterable[str]]) -> "DualGraph":
        vs = []
        for v in self.vertices:
            added = frozenset(extra.get(v.id, ()))
            vs.append(GraphVertex(v.id, v.self_int, v.genus, v.labels | added))
        return DualGraph(tuple(vs), self.edges)

    # -- documents -----------------------------------------------------------

    def to_doc(self) -> dict:
        return {
            "schema": GRAPH_SCHEMA,
            "vertices": [
                {
                    "id": v.id,
                    "self_int": v.self_int,
                    "genus": v.genus,
                    "labels": sorted(v.labels),
                }
                for v in self.vertices
            ],
            "edges": [[a, b] for a, b in self.edges],
        }

    def to_dot(self) -> str:
        """Export in DOT format for external renderers."""
        lines = ["graph dual_graph {"]
        for v in self.vertices:
            tags = "".join(f" {t}" for t in sorted(v.labels))
            extra = f", genus {v.genus}" if v.genus else ""
            lines.append(f'  "{v.id}" [label="{v.id}: {v.self_int}{extra}{tags}"];')
        for a, b in self.edges:
            lines.append(f'  "{a}" -- "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


GRAPH_SCHEMA = "dualgraph/1"


def validate_graph_doc(doc) -> list[str]:
    """Schema and invariant diagnostics for a graph document; empty means valid."""
    diags: list[str] = []
    if not isinstance(doc, dict):
        return ["document: expected a JSON object"]
    schema = doc.get("schema")
    if schema != GRAPH_SCHEMA:
        diags.append(f"schema: expected {GRAPH_SCHEMA!r}, got {schema!r}")
        return diags
    vertices = doc.get("vertices")
    if not isinstance(vertices, list) or not vertices:
        diags.append("vertices: expected a non-empty list")
        return diags
    seen: set = set()
    for k, v in enumerate(vertices):
        where = f"vertices[{k}]"
        if not isinstance(v, dict):
            diags.append(f"{where}: expected an object")
            continue
        vid = v.get("id")
        if isinstance(vid, bool) or not isinstance(vid, (int, str)):
            diags.append(f"{where}.id: expected an int or string")
        elif vid in seen:
            diags.append(f"{where}.id: duplicate id {vid!r}")
        else:
            seen.add(vid)
        si = v.get("self_int")
        if isinstance(si, bool) or not isinstance(si, int):
            diags.append(f"{where}.self_int: expected an integer")
        genus = v.get("genus", 0)
        if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
            diags.append(f"{where}.genus: expected a non-negative integer")
        labels = v.get("labels", [])
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            diags.append(f"{where}.labels: expected a list of strings")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        diags.append("edges: expected a list of id pairs")
        return diags
    for k, e in enumerate(edges):
        where = f"edges[{k}]"
        if not isinstance(e, list) or len(e) != 2:
            diags.append(f"{where}: expected a pair [id, id]")
            continue
        a, b = e
        if a not in seen or b not in seen:
            diags.append(f"{where}: endpoint {a!r} or {b!r} is not a declared vertex")
        elif a == b:
            diags.append(f"{where}: loop at {a!r} rejected (components are smooth)")
    return diags


def graph_from_doc(doc) -> DualGraph:
    diags = validate_graph_doc(doc)
    if diags:
        raise ValidationError("invalid graph document: " + "; ".join(diags))
    vs = tuple(
        GraphVertex(v["id"], v["self_int"], v.get("genus", 0), frozenset(v.get("labels", [])))
        for v in doc["vertices"]
    )
    return DualGraph(vs, tuple((a, b) for a, b in doc["edges"]))


def graph_from_json(text: str) -> DualGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"graph document is not valid JSON (line {exc.lineno}, column {exc.colno}): {exc.msg}") from exc
    return graph_from_doc(doc)


def intersection_matrix(graph: DualGraph) -> ExactMatrix:
    """Symmetric integer matrix: weights on the diagonal, edge counts off it."""
    n = graph.n
    index = {v.id: i for i, v in enumerate(graph.vertices)}
    rows = [[0] * n for _ in range(n)]
    for i, v in enumerate(graph.vertices):
        rows[i][i] = v.self_int
    for a, b in graph.edges:
        i, j = index[a], index[b]
        rows[i][j] += 1
        rows[j][i] += 1
    return ExactMatrix.from_rows(rows)


# -- the standard ADE fixture catalog ---------------------------------------


def _star(leg_lengths: tuple[int, ...]) -> DualGraph:
    """Genus-0, weight -2 tree: a center with legs of the given lengths."""
    vertices = [(0, -2)]
    edges = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            vertices.append((nxt, -2))
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return DualGraph.build(vertices, edges)


def standard_fixture(name: str) -> DualGraph:
    """The A_n (n <= 10), D_n (4 <= n <= 10), E_6, E_7, E_8 dual graphs.

    All vertices carry genus 0 and self-intersection -2.
    """
    key = name.strip().upper()
    if key.startswith("A") and key[1:].isdigit():
        n = int(key[1:])
        if not 1 <= n <= 10:
            raise ValidationError(f"A_n fixtures are provided for 1 <= n <= 10, got {name!r}")
        return DualGraph.build([(i, -2) for i in range(n)], [(i, i + 1) for i in range(n - 1)])
    if key.startswith("D") and key[1:].isdigit():
        n = int(key[1:])
        if not 4 <= n <= 10:
            raise ValidationError(f"D_n fixtures are provided for 4 <= n <= 10, got {name!r}")
        return _star((1, 1, n - 3))
    if key == "E6":
        return _star((1, 2, 2))
    if key == "E7":
        return _star((1, 2, 3))
    if key == "E8":
        return _star((1, 2, 4))
    raise ValidationError(f"unknown fixture {name!r}; expected A1..A10, D4..D10, E6, E7 or E8")


def fixture_names() -> tuple[str, ...]:
    return tuple(
        [f"A{n}" for n in range(1, 11)] + [f"D{n}" for n in range(4, 11)] + ["E6", "E7", "E8"]
    )
