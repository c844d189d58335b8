"""JSON document formats (schema_version 1).

Graphs travel as (vertices, tree_edges, leaf_cycle) with string labels;
embeddings as (spine, pages).  Serialization is canonical so documents are
diff- and golden-file-friendly: fixed key order, compact separators, spine
cut at the smallest label, edges sorted within each page.  Labels that are
all decimal numerals keep their numeric identity across a round trip;
anything else is numbered by declaration order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .embedding import BookEmbedding
from .exceptions import DocumentError
from .graphs import CircularOrder, Graph, edge
from .halin import HalinGraph

SCHEMA_VERSION = 1


def _check_schema(data: dict, kind: str) -> None:
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise DocumentError(f"{kind}: unsupported schema_version {version!r}")


def _check_labels(vertices: tuple[str, ...], kind: str) -> None:
    if len(set(vertices)) != len(vertices):
        raise DocumentError(f"{kind}: duplicate vertex labels")
    if not all(isinstance(v, str) and v for v in vertices):
        raise DocumentError(f"{kind}: vertex labels must be non-empty strings")


def _label_ids(vertices: tuple[str, ...]) -> tuple[dict[str, int], dict[int, str]]:
    if all(v.isdigit() for v in vertices) and len({int(v) for v in vertices}) == len(vertices):
        to_id = {v: int(v) for v in vertices}
    else:
        to_id = {v: i for i, v in enumerate(vertices)}
    return to_id, {i: v for v, i in to_id.items()}


def _pairs(data: Any, field: str, declared: set[str], kind: str) -> tuple[tuple[str, str], ...]:
    if not isinstance(data, list):
        raise DocumentError(f"{kind}: {field} must be a list of label pairs")
    out = []
    for item in data:
        if not (isinstance(item, list) and len(item) == 2):
            raise DocumentError(f"{kind}: malformed pair {item!r} in {field}")
        a, b = item
        for lab in (a, b):
            if lab not in declared:
                raise DocumentError(f"{kind}: {field} references undeclared label {lab!r}")
        out.append((a, b))
    return tuple(out)


@dataclass(frozen=True)
class GraphDocument:
    """A Halin graph as its defining tree/cycle pair."""

    vertices: tuple[str, ...]
    tree_edges: tuple[tuple[str, str], ...]
    leaf_cycle: tuple[str, ...]

    @classmethod
    def from_dict(cls, data: dict) -> "GraphDocument":
        _check_schema(data, "graph document")
        vertices = tuple(data.get("vertices", ()))
        _check_labels(vertices, "graph document")
        declared = set(vertices)
        tree_edges = _pairs(data.get("tree_edges"), "tree_edges", declared, "graph document")
        cycle = tuple(data.get("leaf_cycle", ()))
        for lab in cycle:
            if lab not in declared:
                raise DocumentError(f"graph document: leaf_cycle references undeclared label {lab!r}")
        return cls(vertices, tree_edges, cycle)

    @classmethod
    def from_json(cls, text: str) -> "GraphDocument":
        return cls.from_dict(_load(text, "graph document"))

    @classmethod
    def from_halin(cls, h: HalinGraph) -> "GraphDocument":
        ids = sorted(h.vertices)
        cycle = h.leaf_cycle
        cut = cycle.position(min(cycle.sequence))
        return cls(
            vertices=tuple(str(v) for v in ids),
            tree_edges=tuple((str(a), str(b)) for a, b in sorted(h.tree_edges)),
            leaf_cycle=tuple(str(v) for v in cycle.rotate(cut).sequence),
        )

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "vertices": list(self.vertices),
            "tree_edges": [list(e) for e in self.tree_edges],
            "leaf_cycle": list(self.leaf_cycle),
        }

    def to_json(self) -> str:
        return _dump(self.to_dict())

    def to_halin(self) -> tuple[HalinGraph, dict[int, str]]:
        """Validated HalinGraph plus the id-to-label map for later output."""
        to_id, to_label = _label_ids(self.vertices)
        tree = [(to_id[a], to_id[b]) for a, b in self.tree_edges]
        cycle = [to_id[v] for v in self.leaf_cycle]
        return HalinGraph(tree, cycle), to_label


@dataclass(frozen=True)
class GenericGraphDocument:
    """A bare vertex/edge list; input mode for the oracle commands only."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    @classmethod
    def from_dict(cls, data: dict) -> "GenericGraphDocument":
        _check_schema(data, "generic graph document")
        vertices = tuple(data.get("vertices", ()))
        _check_labels(vertices, "generic graph document")
        edges = _pairs(data.get("edges"), "edges", set(vertices), "generic graph document")
        return cls(vertices, edges)

    @classmethod
    def from_json(cls, text: str) -> "GenericGraphDocument":
        return cls.from_dict(_load(text, "generic graph document"))

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self) -> str:
        return _dump(self.to_dict())

    def to_graph(self) -> tuple[Graph, dict[int, str]]:
        to_id, to_label = _label_ids(self.vertices)
        try:
            g = Graph(to_id.values(), [(to_id[a], to_id[b]) for a, b in self.edges])
        except ValueError as exc:
            raise DocumentError(f"generic graph document: {exc}") from exc
        return g, to_label


@dataclass(frozen=True)
class EmbeddingDocument:
    """A book embedding: spine as labels, pages as sorted label pairs."""

    spine: tuple[str, ...]
    pages: tuple[tuple[tuple[str, str], ...], ...]

    @classmethod
    def from_dict(cls, data: dict) -> "EmbeddingDocument":
        _check_schema(data, "embedding document")
        spine = tuple(data.get("spine", ()))
        _check_labels(spine, "embedding document")
        declared = set(spine)
        raw_pages = data.get("pages")
        if not isinstance(raw_pages, list):
            raise DocumentError("embedding document: pages must be a list of edge lists")
        pages = tuple(
            _pairs(page, f"pages[{i}]", declared, "embedding document")
            for i, page in enumerate(raw_pages)
        )
        return cls(spine, pages)

    @classmethod
    def from_json(cls, text: str) -> "EmbeddingDocument":
        return cls.from_dict(_load(text, "embedding document"))

    @classmethod
    def from_embedding(
        cls, emb: BookEmbedding, labels: dict[int, str] | None = None
    ) -> "EmbeddingDocument":
        if labels is None:
            labels = {v: str(v) for v in emb.spine}
        spine = emb.spine.rotate(emb.spine.position(min(emb.spine.sequence)))
        return cls(
            spine=tuple(labels[v] for v in spine.sequence),
            pages=tuple(
                tuple((labels[a], labels[b]) for a, b in sorted(page)) for page in emb.pages
            ),
        )

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "spine": list(self.spine),
            "pages": [[list(e) for e in page] for page in self.pages],
        }

    def to_json(self) -> str:
        return _dump(self.to_dict())

    def to_embedding(
        self, label_to_id: dict[str, int] | None = None
    ) -> tuple[BookEmbedding, dict[int, str]]:
        """Internal embedding plus the id-to-label map.

        Pass the companion graph document's label mapping so both documents
        agree on vertex identities; without one, labels are mapped on their
        own (numeric labels keep their values).
        """
        if label_to_id is None:
            to_id, to_label = _label_ids(self.spine)
        else:
            missing = [v for v in self.spine if v not in label_to_id]
            if missing:
                raise DocumentError(
                    f"embedding document: spine labels {missing!r} unknown to the graph"
                )
            to_id = label_to_id
            to_label = {i: v for v, i in label_to_id.items()}
        try:
            pages = tuple(
                frozenset(edge(to_id[a], to_id[b]) for a, b in page) for page in self.pages
            )
            emb = BookEmbedding(CircularOrder(to_id[v] for v in self.spine), pages)
        except ValueError as exc:
            raise DocumentError(f"embedding document: {exc}") from exc
        return emb, to_label


def _load(text: str, kind: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{kind}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise DocumentError(f"{kind}: top-level JSON value must be an object")
    return data


def _dump(data: dict) -> str:
    return json.dumps(data, separators=(",", ":"))
