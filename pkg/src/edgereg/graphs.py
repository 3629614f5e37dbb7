"""Finite simple graphs with the complement / induced-cycle / chordality toolbox.

Vertices are dense integer indices 0..n-1; optional display labels are
ingestion-layer metadata.  Adjacency is kept as one int bitmask per vertex so
the neighborhood intersections inside the cycle searches are single AND
operations.  Graph values are immutable after construction and every
operation here is pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """Finite simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj", "labels")

    def __init__(self, n: int, edges, labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        adj = [0] * n
        for u, v in norm:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(adj))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels length must equal vertex count")
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1) if u != v else False

    def neighbors(self, u: int) -> list[int]:
        return _bits(self.adj[u])

    def degree(self, u: int) -> int:
        return bin(self.adj[u]).count("1")

    def edge_count(self) -> int:
        return len(self.edges)

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1


@dataclass(frozen=True)
class Bipartition:
    """A 2-coloring: disjoint independent sides covering all vertices."""

    left: frozenset[int]
    right: frozenset[int]

    def validate(self, g: Graph) -> None:
        if self.left & self.right:
            raise ValueError("bipartition sides overlap")
        if self.left | self.right != set(range(g.n)):
            raise ValueError("bipartition does not cover the vertex set")
        for u, v in g.edges:
            if (u in self.left) == (v in self.left):
                raise ValueError(f"edge ({u},{v}) lies inside one side")

    def side_of(self, v: int) -> int:
        return 0 if v in self.left else 1


@dataclass(frozen=True)
class CycleWitness:
    """An ordered closed cycle; ``induced`` asserts it has no chord."""

    vertices: tuple[int, ...]
    induced: bool = True

    def __len__(self):
        return len(self.vertices)

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        k = len(vs)
        if k < 3 or len(set(vs)) != k:
            raise ValueError("cycle must visit at least 3 distinct vertices")
        for i in range(k):
            if not g.has_edge(vs[i], vs[(i + 1) % k]):
                raise ValueError(f"({vs[i]},{vs[(i + 1) % k]}) is not an edge")
        if self.induced:
            for i, j in itertools.combinations(range(k), 2):
                consecutive = (j - i == 1) or (i == 0 and j == k - 1)
                if not consecutive and g.has_edge(vs[i], vs[j]):
                    raise ValueError(f"chord ({vs[i]},{vs[j]}) present")


# ---------------------------------------------------------------------------
# constructors for common families

def cycle_graph(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    return Graph(k, itertools.combinations(range(k), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty_graph(k: int) -> Graph:
    return Graph(k, [])


# ---------------------------------------------------------------------------
# core operations

def is_bipartite(g: Graph) -> Optional[Bipartition]:
    """2-color by search; the lowest-index vertex of each component goes left.

    Returns None exactly when the graph contains an odd cycle.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return None
    left = frozenset(v for v in range(g.n) if color[v] == 0)
    right = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(left, right)


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(g.n), 2)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges, labels=g.labels)


def bipartite_complement(g: Graph, b: Bipartition) -> Graph:
    """Invert exactly the cross pairs of the bipartition."""
    b.validate(g)
    edges = [
        (x, y)
        for x in b.left
        for y in b.right
        if not g.has_edge(x, y)
    ]
    return Graph(g.n, edges, labels=g.labels)


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Restrict to ``vertices``, reindexed 0..|W|-1.

    Returns the subgraph together with the index map: entry i of the returned
    tuple is the original index of new vertex i.
    """
    vmap = tuple(sorted(set(vertices)))
    for v in vmap:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    back = {v: i for i, v in enumerate(vmap)}
    edges = [
        (back[u], back[v]) for u, v in g.edges if u in back and v in back
    ]
    labels = tuple(g.label_of(v) for v in vmap) if g.labels else None
    return Graph(len(vmap), edges, labels=labels), vmap


# ---------------------------------------------------------------------------
# chordality: lexicographic BFS + perfect-elimination-ordering verification

def _lex_bfs_order(g: Graph) -> list[int]:
    # Partition-refinement LexBFS, deterministic via lowest-index tie-break.
    order = []
    partitions = [list(range(g.n))]
    while partitions:
        cell = partitions[0]
        v = cell.pop(0)
        if not cell:
            partitions.pop(0)
        order.append(v)
        nb = g.adj[v]
        refined = []
        for part in partitions:
            inside = [w for w in part if nb >> w & 1]
            outside = [w for w in part if not nb >> w & 1]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        partitions = refined
    return order


def _reversed_order_is_peo(g: Graph, order: list[int]) -> bool:
    # Reversed LexBFS order is a perfect elimination ordering iff the graph
    # is chordal.  Standard verification: for each v, its predecessors in
    # ``order`` that are neighbors must, apart from the latest one ("parent"),
    # all be adjacent to that parent.
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    earlier_mask = 0
    for v in order:
        preds = g.adj[v] & earlier_mask
        if preds:
            parent = max(_bits(preds), key=lambda w: pos[w])
            rest = preds & ~(1 << parent)
            if rest & ~g.adj[parent]:
                return False
        earlier_mask |= 1 << v
    return True


def is_chordal(g: Graph) -> tuple[bool, Optional[CycleWitness]]:
    """Decide chordality; on failure also return an induced cycle >= 4."""
    order = _lex_bfs_order(g)
    if _reversed_order_is_peo(g, order):
        return True, None
    witness = find_induced_cycle_geq(g, 4)
    if witness is None:
        raise AssertionError("elimination check failed but no chordless cycle found")
    return False, witness


def find_induced_cycle_geq(g: Graph, k: int) -> Optional[CycleWitness]:
    """First chordless cycle of length >= k in deterministic search order.

    Exhaustive chordless-path extension: paths start at their minimum vertex,
    extensions are tried in increasing index order, and a path may only close
    back to its start.  Exponential worst case; fine at desk scale.
    """
    if k < 4:
        raise ValueError("minimum length must be at least 4")
    adj = g.adj

    def extend(start: int, path: list[int], used: int):
        tip = path[-1]
        start_adj = adj[start]
        for w in _bits(adj[tip] & ~used):
            if w <= start:
                continue
            wadj = adj[w]
            if any(wadj >> p & 1 for p in path[1:-1]):
                continue  # chord into the path interior
            if start_adj >> w & 1:
                if len(path) + 1 >= k:
                    return tuple(path) + (w,)
                # closing early would leave a permanent chord to the start
                continue
            found = extend(start, path + [w], used | (1 << w))
            if found is not None:
                return found
        return None

    for start in range(g.n):
        for second in _bits(adj[start]):
            if second <= start:
                continue
            cyc = extend(start, [start, second], (1 << start) | (1 << second))
            if cyc is not None:
                witness = CycleWitness(cyc, induced=True)
                witness.validate(g)
                return witness
    return None


def is_chordal_bipartite(g: Graph) -> bool:
    """Bipartite with no induced cycle of length >= 6."""
    if is_bipartite(g) is None:
        raise ValueError("graph is not bipartite")
    return find_induced_cycle_geq(g, 6) is None


# ---------------------------------------------------------------------------
# isomorphism machinery for the desk-scale enumerations

def _refine_colors(n: int, adj: Sequence[int]) -> list[int]:
    colors = [bin(adj[v]).count("1") for v in range(n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in _bits(adj[v]))))
            for v in range(n)
        ]
        relabel = {s: i for i, s in enumerate(sorted(set(sigs)))}
        fresh = [relabel[s] for s in sigs]
        if fresh == colors:
            return colors
        colors = fresh


def _relabeled_rows(n, adj, perm, best):
    # Row i holds bits for pairs (i, j), j > i, of the relabeled graph.
    # Aborts (returns None) as soon as the partial tuple exceeds ``best``.
    rows = []
    comparing = best is not None
    for i in range(n):
        ai = adj[perm[i]]
        row = 0
        for j in range(i + 1, n):
            if ai >> perm[j] & 1:
                row |= 1 << (j - i - 1)
        if comparing:
            if row > best[i]:
                return None
            if row < best[i]:
                comparing = False
        rows.append(row)
    return tuple(rows)


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Canonical (n, packed adjacency rows), invariant under isomorphism.

    Minimizes the relabeled adjacency over all permutations compatible with
    the iterated-degree color classes; exhaustive within classes.
    """
    n = g.n
    colors = _refine_colors(n, g.adj)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    ordered = [classes[c] for c in sorted(classes)]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in ordered)):
        perm = [v for part in parts for v in part]
        rows = _relabeled_rows(n, g.adj, perm, best)
        if rows is not None:
            best = rows
    return n, best


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exhaustive permutation test; oracle quality, intended for n <= 8."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    target = h.edges
    for perm in itertools.permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in target
               for u, v in g.edges):
            return True
    return False


def _matrix_min_form(rows: list[int], width: int):
    # Minimum, over column permutations, of the sorted row multiset.
    best = None
    for perm in itertools.permutations(range(width)):
        cand = tuple(sorted(
            sum(((x >> perm[i]) & 1) << i for i in range(width)) for x in rows
        ))
        if best is None or cand < best:
            best = cand
    return best


def _bipartite_canonical(rows: Sequence[int], a: int, b: int):
    # ``rows``: a cross-adjacency bitmasks over b columns, a <= b.  Connected
    # bipartite graphs have a unique bipartition up to swapping sides, so a
    # canonical form only needs row/column permutations (and the transpose
    # when the sides have equal size).  Permute the smaller side explicitly.
    transposed = [
        sum(((rows[i] >> j) & 1) << i for i in range(a)) for j in range(b)
    ]
    key = (a, b, _matrix_min_form(transposed, a))
    if a == b:
        key = min(key, (a, b, _matrix_min_form(list(rows), b)))
    return key


def enumerate_connected_bipartite(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected bipartite graphs.

    Enumerates cross-edge subsets for every split {a, n-a} with the left
    block 0..a-1, filters connected, and dedups by a canonical form of the
    cross-adjacency matrix.  Supported for 2 <= n <= 8.
    """
    if not 2 <= n <= 8:
        raise ValueError("supported range is 2 <= n <= 8")
    seen = set()
    out = []
    for a in range(1, n // 2 + 1):
        b = n - a
        for rows in itertools.product(range(1, 1 << b), repeat=a):
            covered = 0
            for r in rows:
                covered |= r
            if covered != (1 << b) - 1:
                continue
            g = Graph(n, [(i, a + j) for i in range(a) for j in range(b)
                          if rows[i] >> j & 1])
            if not g.is_connected():
                continue
            key = _bipartite_canonical(rows, a, b)
            if key not in seen:
                seen.add(key)
                out.append(g)
    out.sort(key=lambda g: (len(g.edges), sorted(g.edges)))
    yield from out


_graph_level_cache: list[list[Graph]] = []


def enumerate_graphs(n: int, connected_only: bool = False) -> list[Graph]:
    """All isomorphism classes of simple graphs on n vertices (n <= 8).

    Vertex augmentation: every class on k+1 vertices arises from a class on
    k vertices plus one vertex with some neighborhood; dedup by canonical
    form at each level.  Levels are cached per process.
    """
    if not 1 <= n <= 8:
        raise ValueError("supported range is 1 <= n <= 8")
    levels = _graph_level_cache
    if not levels:
        levels.append([Graph(1, [])])
    while len(levels) < n:
        k = len(levels)
        seen: dict = {}
        for g in levels[k - 1]:
            base = list(g.edges)
            for nb in range(1 << k):
                cand = Graph(k + 1, base + [(v, k) for v in _bits(nb)])
                key = canonical_form(cand)
                if key not in seen:
                    seen[key] = cand
        levels.append(
            sorted(seen.values(), key=lambda g: (len(g.edges), sorted(g.edges)))
        )
    result = levels[n - 1]
    if connected_only:
        return [g for g in result if g.is_connected()]
    return list(result)
