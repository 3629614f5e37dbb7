"""Simplicial complexes and exact reduced homology ranks.

Complexes are stored as sets of faces encoded as vertex bitmasks.  Two
degenerate states are distinguished throughout: the void complex (no faces at
all) and the irrelevant complex {0} containing only the empty face; the
latter has reduced homology K in dimension -1.

Rank computation is exact in both supported fields: GF(2) uses int-bitset
Gaussian elimination, the rationals use fraction-free (Bareiss) elimination
on the integer boundary matrices, which Python's big ints keep exact.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

from .graphs import Graph, _bits


class FieldChoice(enum.Enum):
    GF2 = "f2"
    RATIONALS = "q"

    @staticmethod
    def parse(text: str) -> "FieldChoice":
        t = text.strip().lower()
        if t in ("f2", "gf2", "2"):
            return FieldChoice.GF2
        if t in ("q", "qq", "rational", "rationals", "0"):
            return FieldChoice.RATIONALS
        raise ValueError(f"unknown field {text!r} (expected 'f2' or 'q')")

    def json_name(self) -> str:
        return "F2" if self is FieldChoice.GF2 else "Q"


class SimplicialComplex:
    """Abstract simplicial complex on vertices 0..vertex_count-1."""

    __slots__ = ("vertex_count", "faces")

    def __init__(self, vertex_count: int, faces: Iterable[int]):
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "faces", frozenset(faces))

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    @staticmethod
    def from_facets(vertex_count: int, facets: Iterable[Iterable[int]]):
        """Close the given faces downward."""
        faces: set[int] = set()
        stack = []
        for f in facets:
            mask = 0
            for v in f:
                mask |= 1 << v
            if mask not in faces:
                stack.append(mask)
        while stack:
            mask = stack.pop()
            if mask in faces:
                continue
            faces.add(mask)
            for v in _bits(mask):
                sub = mask & ~(1 << v)
                if sub not in faces:
                    stack.append(sub)
        return SimplicialComplex(vertex_count, faces)

    @staticmethod
    def void(vertex_count: int = 0):
        return SimplicialComplex(vertex_count, ())

    @staticmethod
    def irrelevant(vertex_count: int = 0):
        return SimplicialComplex(vertex_count, (0,))

    @staticmethod
    def full_simplex(vertex_count: int):
        return SimplicialComplex(vertex_count, range(1 << vertex_count))

    def is_void(self) -> bool:
        return not self.faces

    def dim(self) -> int:
        """Dimension; -1 for the irrelevant complex, -2 for the void complex."""
        if not self.faces:
            return -2
        return max(bin(f).count("1") for f in self.faces) - 1

    def facets(self) -> list[tuple[int, ...]]:
        masks = [
            f for f in self.faces
            if not any(g != f and f & g == f for g in self.faces)
        ]
        return sorted(tuple(_bits(m)) for m in masks)

    def euler_characteristic_reduced(self) -> int:
        """Alternating face-count sum over all faces including the empty one."""
        return sum((-1) ** (bin(f).count("1") - 1) for f in self.faces)


def independence_complex(g: Graph) -> SimplicialComplex:
    """Faces are exactly the independent vertex sets of the graph."""
    adj = g.adj
    faces = []
    for mask in range(1 << g.n):
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if adj[v] & mask:
                ok = False
                break
            m ^= low
        if ok:
            faces.append(mask)
    return SimplicialComplex(g.n, faces)


# ---------------------------------------------------------------------------
# exact rank kernels

def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) by elimination on int bitsets."""
    rank = 0
    basis: list[int] = []
    for row in rows:
        for b in basis:
            low = b & -b
            if row & low:
                row ^= b
        if row:
            basis.append(row)
            rank += 1
    return rank


def integer_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals via fraction-free Gaussian elimination."""
    mat = [r[:] for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    prev_pivot = 1
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        p = mat[row][col]
        for r in range(row + 1, len(mat)):
            q = mat[r][col]
            for c in range(col, ncols):
                num = mat[r][c] * p - q * mat[row][c]
                quot, rem = divmod(num, prev_pivot)
                if rem:
                    raise AssertionError("fraction-free elimination lost exactness")
                mat[r][c] = quot
        prev_pivot = p
        rank += 1
        row += 1
        if row == len(mat):
            break
    return rank


def _boundary_rank(
    upper: Sequence[int], lower: Sequence[int], field: FieldChoice
) -> int:
    """Rank of the boundary map from span(upper faces) to span(lower faces)."""
    if not upper or not lower:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    if field is FieldChoice.GF2:
        rows = []
        for f in upper:
            row = 0
            for v in _bits(f):
                row |= 1 << index[f & ~(1 << v)]
            rows.append(row)
        return gf2_rank(rows)
    rows = []
    width = len(lower)
    for f in upper:
        row = [0] * width
        for pos, v in enumerate(_bits(f)):
            row[index[f & ~(1 << v)]] = -1 if pos % 2 else 1
        rows.append(row)
    return integer_rank(rows)


def reduced_homology_ranks(
    complex_: SimplicialComplex, field: FieldChoice = FieldChoice.GF2
) -> dict[int, int]:
    """Reduced homology dimensions, keyed by dimension -1..dim.

    Uses the augmented chain complex: the empty face spans dimension -1, so
    the irrelevant complex {0} has rank 1 there and the void complex is zero
    everywhere.
    """
    if complex_.is_void():
        return {}
    by_dim: dict[int, list[int]] = {}
    for f in complex_.faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    for faces in by_dim.values():
        faces.sort()
    top = max(by_dim)
    ranks_of_boundary: dict[int, int] = {}
    for k in range(0, top + 1):
        ranks_of_boundary[k] = _boundary_rank(
            by_dim.get(k, []), by_dim.get(k - 1, []), field
        )
    out = {}
    for k in range(-1, top + 1):
        fk = len(by_dim.get(k, []))
        out[k] = fk - ranks_of_boundary.get(k, 0) - ranks_of_boundary.get(k + 1, 0)
    return out


def total_reduced_rank(complex_: SimplicialComplex, field: FieldChoice) -> int:
    return sum(reduced_homology_ranks(complex_, field).values())
