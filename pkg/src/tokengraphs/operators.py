"""Derived graphs whose vertices are small subsets or multisets of a base
graph's vertices.

Three operators are provided:

* ``double_vertex(g)``: vertices are the 2-subsets of V(g); two subsets
  are adjacent when their symmetric difference is an edge of g.
* ``k_token(g, k)``: the same idea on k-subsets; adjacency when the
  symmetric difference is exactly one edge of g.
* ``pair_graph(g)``: vertices are the 2-multisets of V(g); two distinct
  multisets {a, x} and {a, y} sharing the element a (counted with
  multiplicity) are adjacent when {x, y} is an edge of g.  In particular
  {x, x} ~ {x, y} exactly when xy is an edge, and two distinct diagonal
  vertices {x, x}, {y, y} are never adjacent.

Every derived graph keeps a bijection between its 1-based vertex indices
and the token labels, so vertex sets can be moved between the two views.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, combinations_with_replacement

from .graphs import Edge, Graph

SUBSET = "subset"
MULTISET = "multiset"


@dataclass(frozen=True)
class TokenVertex:
    """A sorted tuple of base-graph vertices used as a vertex label.

    ``subset`` kind requires strictly increasing elements; ``multiset``
    allows repeats. Double vertex and pair graphs label with pairs, but
    k-token labels of any size are supported.
    """

    kind: str
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in (SUBSET, MULTISET):
            raise ValueError(f"unknown token kind {self.kind!r}")
        if not self.elements:
            raise ValueError("token needs at least one element")
        object.__setattr__(self, "elements", tuple(self.elements))
        for a, b in zip(self.elements, self.elements[1:]):
            if a > b or (a == b and self.kind == SUBSET):
                raise ValueError(f"elements {self.elements} invalid for {self.kind} token")

    @property
    def a(self) -> int:
        return self.elements[0]

    @property
    def b(self) -> int:
        return self.elements[-1]

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


def subset_token(*elements: int) -> TokenVertex:
    return TokenVertex(SUBSET, tuple(sorted(elements)))


def multiset_token(*elements: int) -> TokenVertex:
    return TokenVertex(MULTISET, tuple(sorted(elements)))


@dataclass(frozen=True)
class DerivedGraph:
    """A graph together with the token label of each vertex index."""

    graph: Graph
    labels: tuple[TokenVertex, ...]
    base_order: int

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.order:
            raise ValueError("label count must match graph order")
        for tok in self.labels:
            if tok.b > self.base_order or tok.a < 1:
                raise ValueError(f"token {tok} outside base range 1..{self.base_order}")

    @cached_property
    def _index_of(self) -> dict[TokenVertex, int]:
        table = {tok: i for i, tok in enumerate(self.labels, start=1)}
        if len(table) != len(self.labels):
            raise ValueError("token labels must be distinct")
        return table

    @property
    def order(self) -> int:
        return self.graph.order

    @property
    def kind(self) -> str:
        return self.labels[0].kind

    def __repr__(self) -> str:
        return f"DerivedGraph(order={self.graph.order}, base_order={self.base_order}, kind={self.kind})"


def token_label_of(dg: DerivedGraph, index: int) -> TokenVertex:
    """Token label of a vertex index (1-based)."""
    if not (1 <= index <= dg.graph.order):
        raise ValueError(f"vertex index {index} out of range 1..{dg.graph.order}")
    return dg.labels[index - 1]


def index_of(dg: DerivedGraph, token: TokenVertex) -> int:
    """Vertex index of a token label; unknown labels are rejected."""
    try:
        return dg._index_of[token]
    except KeyError:
        raise ValueError(f"token {token} ({token.kind}) is not a vertex label here") from None


def indices_of(dg: DerivedGraph, tokens) -> frozenset[int]:
    return frozenset(index_of(dg, tok) for tok in tokens)


# ---------------------------------------------------------------------------
# constructions


def double_vertex(g: Graph) -> DerivedGraph:
    """Graph on all 2-subsets of V(g); {x,y} ~ {u,v} iff the symmetric
    difference is an edge of g. Needs g.order >= 2."""
    return k_token(g, 2)


def k_token(g: Graph, k: int) -> DerivedGraph:
    """Graph on all k-subsets of V(g); adjacency when the symmetric
    difference of the two subsets is exactly one edge of g."""
    if not (1 <= k <= g.order):
        raise ValueError(f"k must satisfy 1 <= k <= {g.order}, got {k}")
    labels = tuple(TokenVertex(SUBSET, combo) for combo in combinations(g.vertices, k))
    index = {tok.elements: i for i, tok in enumerate(labels, start=1)}
    rest = set(g.vertices)
    edges: set[Edge] = set()
    for x, y in g.edges:
        movable = sorted(rest - {x, y})
        for stay in combinations(movable, k - 1):
            i = index[tuple(sorted(stay + (x,)))]
            j = index[tuple(sorted(stay + (y,)))]
            edges.add((i, j) if i < j else (j, i))
    return DerivedGraph(Graph(len(labels), frozenset(edges)), labels, g.order)


def pair_graph(g: Graph) -> DerivedGraph:
    """Graph on all 2-multisets of V(g); {a,x} ~ {a,y} iff xy is an edge
    of g. Needs g.order >= 2."""
    if g.order < 2:
        raise ValueError(f"pair graph needs base order >= 2, got {g.order}")
    labels = tuple(
        TokenVertex(MULTISET, combo)
        for combo in combinations_with_replacement(g.vertices, 2)
    )
    index = {tok.elements: i for i, tok in enumerate(labels, start=1)}
    edges: set[Edge] = set()
    for x, y in g.edges:
        for shared in g.vertices:
            i = index[(shared, x) if shared <= x else (x, shared)]
            j = index[(shared, y) if shared <= y else (y, shared)]
            edges.add((i, j) if i < j else (j, i))
    return DerivedGraph(Graph(len(labels), frozenset(edges)), labels, g.order)


def subset_restriction(dg: DerivedGraph):
    """Induced subgraph of a multiset-kind derived graph on its 2-subset
    vertices, as (graph, old-to-new map). Used to compare a pair graph
    against the double vertex graph of the same base."""
    from .graphs import induced_subgraph

    keep = [i for i, tok in enumerate(dg.labels, start=1) if tok.elements[0] != tok.elements[-1]]
    return induced_subgraph(dg.graph, keep)
