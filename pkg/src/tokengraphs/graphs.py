"""Simple undirected graphs on vertices 1..n, plus the family builders
and structural operations the rest of the package is built on.

Graphs are immutable values: every operation returns a new ``Graph``.
Operations that relabel vertices (deletion, induced subgraphs, component
splitting) compact labels to 1..k and return the old-to-new label map so
vertex sets can be translated back afterwards.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop edge ({u}, {v}) is not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``order`` vertices labeled 1..order and a
    set of unordered edges with distinct in-range endpoints."""

    order: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be non-negative, got {self.order}")
        normalized = frozenset(_normalize_edge(u, v) for u, v in self.edges)
        for u, v in normalized:
            if not (1 <= u <= self.order and 1 <= v <= self.order):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{self.order}")
        object.__setattr__(self, "edges", normalized)

    @property
    def vertices(self) -> range:
        return range(1, self.order + 1)

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _normalize_edge(u, v) in self.edges

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        sets: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            sets[u - 1].add(v)
            sets[v - 1].add(u)
        return tuple(frozenset(s) for s in sets)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._neighbor_sets[v - 1]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks; bit i stands for vertex i+1."""
        masks = [0] * self.order
        for u, v in self.edges:
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        return tuple(masks)

    def _check_vertex(self, v: int) -> None:
        if not (1 <= v <= self.order):
            raise ValueError(f"vertex {v} out of range 1..{self.order}")

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:  # compact, deterministic
        return f"Graph(order={self.order}, size={self.size})"


# ---------------------------------------------------------------------------
# family builders


def path(m: int) -> Graph:
    """Path P_m: vertices 1..m, edges {i, i+1}."""
    if m < 1:
        raise ValueError(f"path needs m >= 1, got {m}")
    return Graph(m, frozenset((i, i + 1) for i in range(1, m)))


def cycle(m: int) -> Graph:
    """Cycle C_m: the path edges plus {1, m}; needs m >= 3."""
    if m < 3:
        raise ValueError(f"cycle needs m >= 3, got {m}")
    return Graph(m, frozenset((i, i + 1) for i in range(1, m)) | {(1, m)})


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise ValueError(f"complete needs n >= 1, got {n}")
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def join(g: Graph, h: Graph) -> Graph:
    """Join of g and h: disjoint union (h relabeled after g) plus every
    edge between a g-vertex and an h-vertex."""
    if g.order < 1 or h.order < 1:
        raise ValueError("join needs two non-empty graphs")
    shift = g.order
    edges = set(g.edges)
    edges.update((u + shift, v + shift) for u, v in h.edges)
    edges.update((a, b + shift) for a in g.vertices for b in h.vertices)
    return Graph(g.order + h.order, frozenset(edges))


def fan(m: int) -> Graph:
    """Fan: path P_m joined with one apex vertex, labeled m+1."""
    if m < 1:
        raise ValueError(f"fan needs m >= 1, got {m}")
    return join(path(m), complete(1))


def wheel(m: int) -> Graph:
    """Wheel: cycle C_m joined with one apex vertex, labeled m+1."""
    if m < 3:
        raise ValueError(f"wheel needs m >= 3, got {m}")
    return join(cycle(m), complete(1))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union, with h relabeled to g.order+1 .. g.order+h.order."""
    shift = g.order
    edges = set(g.edges)
    edges.update((u + shift, v + shift) for u, v in h.edges)
    return Graph(g.order + h.order, frozenset(edges))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: vertex (a, b) gets label (a-1)*h.order + b;
    (a, b) ~ (a', b') iff a = a' and b ~ b', or b = b' and a ~ a'."""
    if g.order < 1 or h.order < 1:
        raise ValueError("cartesian product needs two non-empty graphs")
    edges: set[Edge] = set()
    for a in g.vertices:
        base = (a - 1) * h.order
        for u, v in h.edges:
            edges.add((base + u, base + v))
    for u, v in g.edges:
        for b in h.vertices:
            edges.add(((u - 1) * h.order + b, (v - 1) * h.order + b))
    return Graph(g.order * h.order, frozenset(edges))


# ---------------------------------------------------------------------------
# dissection


def delete_vertices(g: Graph, victims: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the vertices outside ``victims``.

    Surviving vertices are compacted to 1..k preserving relative order.
    Returns the new graph and the old-to-new label map (invert it to
    translate results back to the original labels).
    """
    victim_set = set(victims)
    for v in victim_set:
        g._check_vertex(v)
    kept = [v for v in g.vertices if v not in victim_set]
    relabel = {old: new for new, old in enumerate(kept, start=1)}
    edges = frozenset(
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u in relabel and v in relabel
    )
    return Graph(len(kept), edges), relabel


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep``; complement wrapper of delete_vertices."""
    keep_set = set(keep)
    for v in keep_set:
        g._check_vertex(v)
    return delete_vertices(g, set(g.vertices) - keep_set)


def components(g: Graph) -> list[tuple[Graph, dict[int, int]]]:
    """Connected components, each compacted with its old-to-new label map.

    Components are ordered by their smallest original vertex.
    """
    if g.order < 1:
        raise ValueError("components needs a non-empty graph")
    seen: set[int] = set()
    result: list[tuple[Graph, dict[int, int]]] = []
    for start in g.vertices:
        if start in seen:
            continue
        queue = deque([start])
        comp: set[int] = {start}
        seen.add(start)
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in comp:
                    comp.add(w)
                    seen.add(w)
                    queue.append(w)
        result.append(induced_subgraph(g, comp))
    return result


# ---------------------------------------------------------------------------
# isomorphism


def _refined_colors(g: Graph) -> list[int]:
    """Iterated neighborhood-degree refinement; stable color per vertex."""
    colors = [g.degree(v) for v in g.vertices]
    for _ in range(g.order):
        signatures = [
            (colors[v - 1], tuple(sorted(colors[w - 1] for w in g.neighbors(v))))
            for v in g.vertices
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new_colors = [palette[sig] for sig in signatures]
        if new_colors == colors:
            break
        colors = new_colors
    return colors


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by backtracking.

    Prunes on degree sequence and iterated neighborhood-degree colors,
    then searches for an edge-preserving bijection. Intended for the
    small structured graphs this package produces (order up to ~100);
    adversarial regular graphs may be slow.
    """
    if g.order != h.order or g.size != h.size:
        return False
    if g.order == 0:
        return True
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return False

    gcol = _refined_colors(g)
    hcol = _refined_colors(h)
    if sorted(gcol) != sorted(hcol):
        return False

    n = g.order
    g_adj = g.adjacency_masks
    h_adj = h.adjacency_masks
    by_color: dict[int, list[int]] = {}
    for v in h.vertices:
        by_color.setdefault(hcol[v - 1], []).append(v - 1)

    # Assign g-vertices one at a time, preferring vertices with many
    # already-assigned neighbors (keeps the partial map connected).
    assigned: dict[int, int] = {}  # g index 0-based -> h index 0-based
    used_mask = 0
    mapped_g_mask = 0

    def next_vertex() -> int:
        best, best_key = -1, (-1, -1)
        for u in range(n):
            if u in assigned:
                continue
            key = ((g_adj[u] & mapped_g_mask).bit_count(), g_adj[u].bit_count())
            if key > best_key:
                best, best_key = u, key
        return best

    def extend() -> bool:
        nonlocal used_mask, mapped_g_mask
        if len(assigned) == n:
            return True
        u = next_vertex()
        required = 0
        for w, image in assigned.items():
            if g_adj[u] >> w & 1:
                required |= 1 << image
        for v in by_color.get(gcol[u], ()):
            if used_mask >> v & 1:
                continue
            if h_adj[v] & used_mask != required:
                continue
            assigned[u] = v
            used_mask |= 1 << v
            mapped_g_mask |= 1 << u
            if extend():
                return True
            del assigned[u]
            used_mask &= ~(1 << v)
            mapped_g_mask &= ~(1 << u)
        return False

    return extend()
