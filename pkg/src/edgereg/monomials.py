"""Exact monomial and monomial-ideal arithmetic.

Monomials are dense exponent vectors (variable i <-> vertex i), capped at
exponent 255 so they stay compact hashable keys.  Ideals keep their minimal
generating set, ordered graded-lexicographically, so equal ideals compare
equal structurally.  The hot kernels work on raw exponent tuples; the public
classes are thin immutable wrappers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ResourceCapError
from .graphs import Graph

_MAX_EXP = 255


def _deg(e: tuple) -> int:
    return sum(e)


def _grlex_key(e: tuple):
    # Graded lexicographic: degree first, then x0 > x1 > ... (higher leading
    # exponents sort earlier within a degree).
    return (sum(e), tuple(-x for x in e))


def _mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _gcd(a: tuple, b: tuple) -> tuple:
    return tuple(min(x, y) for x, y in zip(a, b))


def _join(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _quot(a: tuple, b: tuple) -> tuple:
    # a / gcd(a, b), the standard colon quotient for monomials.
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def _minimalize_raw(exps: Iterable[tuple]) -> tuple[tuple, ...]:
    items = sorted(set(exps), key=_grlex_key)
    if not items:
        return ()
    degrees = {sum(e) for e in items}
    if len(degrees) == 1:
        return tuple(items)  # equal-degree monomials never divide each other
    kept: list[tuple] = []
    for e in items:
        if not any(_divides(k, e) for k in kept):
            kept.append(e)
    return tuple(kept)


class Monomial:
    """A monomial as a dense exponent vector; the zero vector is 1."""

    __slots__ = ("exponents", "_deg")

    def __init__(self, exponents: Sequence[int]):
        exps = tuple(int(x) for x in exponents)
        if any(x < 0 for x in exps):
            raise ValueError("negative exponent")
        if any(x > _MAX_EXP for x in exps):
            raise ValueError(f"exponent above cap {_MAX_EXP}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "_deg", sum(exps))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @property
    def degree(self) -> int:
        return self._deg

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def is_unit(self) -> bool:
        return self._deg == 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(_mul(self.exponents, other.exponents))

    def divides(self, other: "Monomial") -> bool:
        return _divides(self.exponents, other.exponents)

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(_gcd(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(_join(self.exponents, other.exponents))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"Monomial({list(self.exponents)})"

    def __str__(self):
        if self._deg == 0:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts)

    @staticmethod
    def variable(i: int, nvars: int) -> "Monomial":
        return Monomial(tuple(1 if j == i else 0 for j in range(nvars)))

    @staticmethod
    def unit(nvars: int) -> "Monomial":
        return Monomial((0,) * nvars)

    @staticmethod
    def from_string(text: str, nvars: int) -> "Monomial":
        s = text.strip()
        if s == "1":
            return Monomial.unit(nvars)
        exps = [0] * nvars
        for factor in s.split("*"):
            m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor.strip())
            if not m:
                raise ValueError(f"bad monomial factor {factor!r}")
            i = int(m.group(1))
            if i >= nvars:
                raise ValueError(f"variable x{i} out of range for nvars={nvars}")
            exps[i] += int(m.group(2) or 1)
        return Monomial(exps)


class MonomialIdeal:
    """A monomial ideal held by its minimal generating set.

    Minimal generating sets of monomial ideals are unique, so structural
    equality is ideal equality.  The empty generator set is the zero ideal.
    """

    __slots__ = ("nvars", "gens", "_exps")

    def __init__(self, nvars: int, gens: Iterable[Monomial]):
        raw = _minimalize_raw(g.exponents for g in gens)
        for g in raw:
            if len(g) != nvars:
                raise ValueError("generator arity mismatch")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "gens", tuple(Monomial(e) for e in raw))
        object.__setattr__(self, "_exps", raw)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit()

    def min_degree(self) -> int:
        if not self.gens:
            raise ValueError("zero ideal has no generator degree")
        return self.gens[0].degree  # grlex order puts lowest degree first

    def is_squarefree(self) -> bool:
        return all(all(e <= 1 for e in g.exponents) for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        e = m.exponents
        return any(_divides(g, e) for g in self._exps)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.nvars == other.nvars
            and self._exps == other._exps
        )

    def __hash__(self):
        return hash((self.nvars, self._exps))

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        return f"MonomialIdeal({self.nvars}, {str(self)})"

    def __str__(self):
        return "{" + ", ".join(str(g) for g in self.gens) + "}"

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "generators": [list(g.exponents) for g in self.gens],
        }

    @staticmethod
    def from_json(data: dict) -> "MonomialIdeal":
        return MonomialIdeal(
            data["nvars"], [Monomial(e) for e in data["generators"]]
        )


def minimalize(nvars: int, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Reduce an arbitrary generator set to the divisibility-minimal one."""
    return MonomialIdeal(nvars, gens)


def edge_ideal(g: Graph) -> MonomialIdeal:
    """One squarefree degree-2 generator per edge; isolated vertices add none."""
    gens = []
    for u, v in g.edges:
        e = [0] * g.n
        e[u] = 1
        e[v] = 1
        gens.append(Monomial(e))
    return MonomialIdeal(g.n, gens)


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.nvars != b.nvars:
        raise ValueError("variable count mismatch")
    prods = {_mul(x, y) for x in a._exps for y in b._exps}
    return MonomialIdeal(a.nvars, (Monomial(e) for e in prods))


def power(ideal: MonomialIdeal, s: int) -> MonomialIdeal:
    """Minimal generating set of the s-fold product ideal."""
    if s < 1:
        raise ValueError("power requires s >= 1")
    result = ideal
    for _ in range(s - 1):
        result = ideal_product(result, ideal)
    return result


def colon_by_monomial(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """(I : m) via the closed form { g / gcd(g, m) : g generator of I }."""
    if m.nvars != ideal.nvars:
        raise ValueError("variable count mismatch")
    me = m.exponents
    return MonomialIdeal(
        ideal.nvars, (Monomial(_quot(g, me)) for g in ideal._exps)
    )


def add_monomial(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """(I, m): adjoin one generator and re-minimalize."""
    return MonomialIdeal(ideal.nvars, list(ideal.gens) + [m])


def ideal_equals(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    return a == b


def lcm_lattice(ideal: MonomialIdeal, cap: int = 200_000) -> set[Monomial]:
    """All joins of nonempty generator subsets, including the generators.

    Iterated closure with a worklist; raises ResourceCapError when the
    lattice would exceed ``cap`` elements.
    """
    if ideal.is_zero():
        raise ValueError("zero ideal has no lcm lattice")
    gens = ideal._exps
    seen = set(gens)
    work = list(gens)
    while work:
        x = work.pop()
        for g in gens:
            j = _join(x, g)
            if j not in seen:
                if len(seen) >= cap:
                    raise ResourceCapError(
                        f"lcm lattice cap of {cap} elements exceeded"
                    )
                seen.add(j)
                work.append(j)
    return {Monomial(e) for e in seen}


@dataclass(frozen=True)
class SFoldProduct:
    """An s-fold product of graph edges, repetition allowed."""

    factors: tuple[tuple[int, int], ...]
    product: Monomial

    @staticmethod
    def of(g: Graph, factors: Iterable[tuple[int, int]]) -> "SFoldProduct":
        norm = []
        exps = [0] * g.n
        for u, v in factors:
            if not g.has_edge(u, v):
                raise ValueError(f"({u},{v}) is not an edge of the graph")
            norm.append((u, v) if u < v else (v, u))
            exps[u] += 1
            exps[v] += 1
        if not norm:
            raise ValueError("product needs at least one factor")
        return SFoldProduct(tuple(norm), Monomial(exps))

    @property
    def s(self) -> int:
        return len(self.factors)

    def multiplicities(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for e in self.factors:
            out[e] = out.get(e, 0) + 1
        return out

    def multiset_contains(self, other: "SFoldProduct") -> bool:
        mine = self.multiplicities()
        return all(mine.get(e, 0) >= k for e, k in other.multiplicities().items())


def parse_ideal(text: str, nvars: int) -> MonomialIdeal:
    """Parse the brace-delimited comma-separated ideal text form."""
    s = text.strip()
    if s.startswith("{") and s.endswith("}"):
        s = s[1:-1]
    parts = [p for p in (q.strip() for q in s.split(",")) if p]
    return MonomialIdeal(nvars, [Monomial.from_string(p, nvars) for p in parts])


def squarefree_part_pairs(ideal: MonomialIdeal):
    """Split a quadratic ideal's generators into vertex pairs and squares.

    Returns (pairs, squares) or raises if any generator is not quadratic.
    """
    pairs = []
    squares = []
    for g in ideal.gens:
        support = [i for i, e in enumerate(g.exponents) if e]
        if g.degree != 2:
            raise ValueError(f"generator {g} is not quadratic")
        if len(support) == 2:
            pairs.append((support[0], support[1]))
        else:
            squares.append(support[0])
    return pairs, squares
