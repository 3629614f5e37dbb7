"""Even-connection search, colon graphs, and their dual-oracle verifiers.

Two vertices u, v (possibly equal) are even-connected with respect to an
s-fold product of edges when an alternating walk p_0..p_{2k+1}, k >= 1,
joins them: every consecutive pair is an edge, every odd-position pair
(p_1p_2, p_3p_4, ...) is one of the product's edge values, and each distinct
edge value is used at most as often as it occurs in the product.  Walks may
repeat vertices.

The colon ideal of a power by such a product is generated in degree two,
with generators exactly the edges of the graph plus the even-connected
pairs; ``verify_colon_generators`` checks that description against the
direct monomial-division colon on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Bipartition, Graph, is_bipartite
from .monomials import (
    Monomial,
    MonomialIdeal,
    SFoldProduct,
    colon_by_monomial,
    edge_ideal,
    ideal_equals,
    power,
)


@dataclass(frozen=True)
class EvenConnectionWitness:
    """An alternating walk plus the assignment of its interior factor edges.

    ``path`` is p_0..p_{2k+1}; ``factor_assignment[l]`` gives the index into
    the product's factor list matched by the pair (p_{2l+1}, p_{2l+2}).
    """

    path: tuple[int, ...]
    factor_assignment: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.factor_assignment)

    def to_json(self) -> dict:
        return {
            "path": list(self.path),
            "factors": list(self.factor_assignment),
        }


def validate_witness(
    g: Graph,
    product: SFoldProduct,
    witness: EvenConnectionWitness,
    u: int,
    v: int,
) -> None:
    """Re-check the even-connection conditions from scratch; raises on failure."""
    path = witness.path
    assign = witness.factor_assignment
    k = len(assign)
    if k < 1:
        raise ValueError("witness must use at least one factor edge")
    if len(path) != 2 * k + 2:
        raise ValueError("path length does not match factor count")
    if path[0] != u or path[-1] != v:
        raise ValueError("endpoints do not match")
    for r in range(2 * k + 1):
        if not g.has_edge(path[r], path[r + 1]):
            raise ValueError(f"({path[r]},{path[r + 1]}) is not an edge")
    if len(set(assign)) != k:
        raise ValueError("factor assignment reuses a product slot")
    for l in range(k):
        idx = assign[l]
        if not 0 <= idx < product.s:
            raise ValueError(f"factor index {idx} out of range")
        a, b = path[2 * l + 1], path[2 * l + 2]
        if tuple(sorted((a, b))) != product.factors[idx]:
            raise ValueError(
                f"interior pair ({a},{b}) is not factor {product.factors[idx]}"
            )


def _distinct_values(product: SFoldProduct):
    mult = product.multiplicities()
    values = sorted(mult)
    return values, tuple(mult[e] for e in values)


def find_even_connection(
    g: Graph, product: SFoldProduct, u: int, v: int
) -> Optional[EvenConnectionWitness]:
    """Witness with the fewest factor uses; lexicographically least path.

    Iterative deepening over the factor-use count k, extending walks in
    increasing vertex order, so the first hit is the canonical witness.
    """
    values, mults = _distinct_values(product)
    partners: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for t, (a, b) in enumerate(values):
        partners[a][b] = t
        partners[b][a] = t

    total = sum(mults)
    for k in range(1, total + 1):
        found = _dfs_walk(g, values, mults, partners, u, v, k)
        if found is not None:
            path, used_values = found
            assignment = _assign_slots(product, used_values)
            witness = EvenConnectionWitness(tuple(path), tuple(assignment))
            validate_witness(g, product, witness, u, v)
            return witness
    return None


def _dfs_walk(g, values, mults, partners, u, v, k):
    budget = list(mults)
    path = [u]
    used: list[int] = []

    def step():
        r = len(path) - 1  # index of the edge about to be traversed
        x = path[-1]
        if r == 2 * k + 1:
            return path[-1] == v
        if r % 2 == 1:
            # odd position: must traverse a factor value with budget left
            for w in sorted(partners[x]):
                t = partners[x][w]
                if budget[t] == 0:
                    continue
                budget[t] -= 1
                path.append(w)
                used.append(t)
                if step():
                    return True
                used.pop()
                path.pop()
                budget[t] += 1
            return False
        if r == 2 * k:
            # final position: arbitrary edge landing exactly on v
            if g.has_edge(x, v):
                path.append(v)
                if step():
                    return True
                path.pop()
            return False
        for w in g.neighbors(x):
            path.append(w)
            if step():
                return True
            path.pop()
        return False

    if step():
        return list(path), list(used)
    return None


def _assign_slots(product: SFoldProduct, used_values: list[int]) -> list[int]:
    values, _ = _distinct_values(product)
    pools: dict[tuple[int, int], list[int]] = {}
    for idx, e in enumerate(product.factors):
        pools.setdefault(e, []).append(idx)
    out = []
    for t in used_values:
        out.append(pools[values[t]].pop(0))
    return out


def even_connected_targets(g: Graph, product: SFoldProduct, u: int) -> set[int]:
    """All vertices even-connected to u, by one sweep over the state graph.

    States are (vertex, next-edge parity, remaining budget per edge value);
    a vertex is accepted when reached right after an even-position edge with
    at least one factor consumed.
    """
    values, mults = _distinct_values(product)
    partners: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for t, (a, b) in enumerate(values):
        partners[a].append((b, t))
        partners[b].append((a, t))
    start = (u, 0, mults)
    seen = {start}
    stack = [start]
    accepted: set[int] = set()
    full = mults
    while stack:
        x, parity, budget = stack.pop()
        if parity == 1:
            if budget != full:
                accepted.add(x)
            for w, t in partners[x]:
                if budget[t]:
                    nb = list(budget)
                    nb[t] -= 1
                    state = (w, 0, tuple(nb))
                    if state not in seen:
                        seen.add(state)
                        stack.append(state)
        else:
            for w in g.neighbors(x):
                state = (w, 1, budget)
                if state not in seen:
                    seen.add(state)
                    stack.append(state)
    return accepted


@dataclass(frozen=True)
class ColonGraphResult:
    """Degree-two structure of (I(G)^{s+1} : e_1...e_s).

    ``graph`` carries every original edge plus the even-connected pairs;
    ``extra_squares`` lists vertices even-connected to themselves (only
    possible when G has an odd cycle).
    """

    graph: Graph
    new_edges: frozenset[tuple[int, int]]
    extra_squares: frozenset[int]
    bipartition: Optional[Bipartition]


def colon_graph(g: Graph, product: SFoldProduct) -> ColonGraphResult:
    """Collect all pairs (u = v allowed) that are edges or even-connected.

    For bipartite input the result is structurally checked to be bipartite
    on the same bipartition with no squares; a violation would mean an
    engine bug or a genuine finding, so it raises immediately.
    """
    new_edges: set[tuple[int, int]] = set()
    squares: set[int] = set()
    for u in range(g.n):
        for v in even_connected_targets(g, product, u):
            if v == u:
                squares.add(u)
            else:
                pair = (u, v) if u < v else (v, u)
                if pair not in g.edges:
                    new_edges.add(pair)
    result = Graph(g.n, set(g.edges) | new_edges, labels=g.labels)
    bip = is_bipartite(g)
    if bip is not None:
        if squares:
            raise AssertionError(
                f"square generators {sorted(squares)} on a bipartite graph"
            )
        for u, v in new_edges:
            if bip.side_of(u) == bip.side_of(v):
                raise AssertionError(
                    f"even-connected pair ({u},{v}) inside one side"
                )
    return ColonGraphResult(
        result, frozenset(new_edges), frozenset(squares), bip
    )


def connection_ideal(g: Graph, product: SFoldProduct) -> MonomialIdeal:
    """Quadratic ideal spanned by the colon graph's pairs and squares."""
    res = colon_graph(g, product)
    gens = []
    for u, v in res.graph.edges:
        e = [0] * g.n
        e[u] = 1
        e[v] = 1
        gens.append(Monomial(e))
    for u in res.extra_squares:
        e = [0] * g.n
        e[u] = 2
        gens.append(Monomial(e))
    return MonomialIdeal(g.n, gens)


@dataclass(frozen=True)
class ColonCheck:
    """Outcome of the dual-oracle colon comparison."""

    ok: bool
    only_connection_side: tuple[Monomial, ...]
    only_division_side: tuple[Monomial, ...]

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "only_left": [str(m) for m in self.only_connection_side],
            "only_right": [str(m) for m in self.only_division_side],
        }


def verify_colon_generators(
    g: Graph,
    product: SFoldProduct,
    power_ideal: Optional[MonomialIdeal] = None,
) -> ColonCheck:
    """Compare the even-connection ideal with the direct monomial colon.

    ``power_ideal`` may carry a precomputed I(G)^{s+1} when sweeping many
    products of one graph.  A mismatch is reported, not raised.
    """
    left = connection_ideal(g, product)
    if power_ideal is None:
        power_ideal = power(edge_ideal(g), product.s + 1)
    right = colon_by_monomial(power_ideal, product.product)
    if ideal_equals(left, right):
        return ColonCheck(True, (), ())
    lset, rset = set(left.gens), set(right.gens)
    return ColonCheck(
        False,
        tuple(m for m in left.gens if m not in rset),
        tuple(m for m in right.gens if m not in lset),
    )


def verify_iterated_colon(
    g: Graph, product: SFoldProduct, position: int
) -> bool:
    """Exact identity between one-shot and two-stage colon computation.

    For bipartite G the colon of I^{s+1} by the full product equals the
    colon of (I^2 : e_i)^s by the product of the remaining factors; both
    sides are computed by direct monomial arithmetic.
    """
    if is_bipartite(g) is None:
        raise ValueError("identity requires a bipartite graph")
    s = product.s
    if not 0 <= position < s:
        raise ValueError("factor position out of range")
    ideal = edge_ideal(g)
    lhs = colon_by_monomial(power(ideal, s + 1), product.product)
    e = product.factors[position]
    e_mon = Monomial([1 if i in e else 0 for i in range(g.n)])
    base = colon_by_monomial(power(ideal, 2), e_mon)
    rest_exps = [0] * g.n
    for j, f in enumerate(product.factors):
        if j != position:
            rest_exps[f[0]] += 1
            rest_exps[f[1]] += 1
    rhs = colon_by_monomial(power(base, s), Monomial(rest_exps))
    return ideal_equals(lhs, rhs)


def verify_connection_monotonicity(
    g: Graph,
    sub: SFoldProduct,
    sup: SFoldProduct,
    u: int,
    v: int,
) -> bool:
    """Even-connection must survive enlarging the product multiset."""
    if not sup.multiset_contains(sub):
        raise ValueError("sub product is not a multisubset of the super product")
    if v not in even_connected_targets(g, sub, u):
        return True
    return v in even_connected_targets(g, sup, u)
