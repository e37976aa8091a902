"""Deterministic DOT and JSON serializations.

JSON schema for a plain graph: ``{"order": n, "edges": [[u, v], ...]}``
with u < v and edges sorted lexicographically. Derived graphs extend it
with ``"kind"`` (subset or multiset) and ``"labels"`` (the token of each
vertex index, in index order). Output is byte-stable for a given value,
so serializations can be frozen as golden strings.
"""

from __future__ import annotations

import json
from typing import Iterable

from .graphs import Graph
from .operators import DerivedGraph


def graph_to_json(g: Graph) -> str:
    return json.dumps({"order": g.order, "edges": [list(e) for e in g.sorted_edges()]})


def derived_to_json(dg: DerivedGraph) -> str:
    return json.dumps(
        {
            "order": dg.graph.order,
            "edges": [list(e) for e in dg.graph.sorted_edges()],
            "kind": dg.kind,
            "labels": [list(tok.elements) for tok in dg.labels],
        }
    )


def graph_to_dot(g: Graph, labels: dict[int, str] | None = None,
                 highlight: Iterable[int] = ()) -> str:
    """One ``graph { ... }`` block; vertex indices as node ids, optional
    label attributes, highlighted nodes drawn filled."""
    marked = set(highlight)
    lines = ["graph {"]
    for v in g.vertices:
        attrs = []
        if labels and v in labels:
            attrs.append(f'label="{labels[v]}"')
        if v in marked:
            attrs.append("style=filled")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {v}{suffix};")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def derived_to_dot(dg: DerivedGraph, highlight: Iterable[int] = ()) -> str:
    labels = {i: str(tok) for i, tok in enumerate(dg.labels, start=1)}
    return graph_to_dot(dg.graph, labels=labels, highlight=highlight)


def tokens_to_json(tokens) -> str:
    """A witness or slice as a JSON list of token element lists."""
    return json.dumps([list(tok.elements) for tok in tokens])
