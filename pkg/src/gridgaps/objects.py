"""Digital n-objects: finite voxel sets with cell census and borders.

A cell of the object is any face of one of its voxels. A cell of dimension
i < n is free when its block (the 2^(n-i) voxels it bounds) is not entirely
inside the object; the free cells of every dimension make up the border.
The census also records, per dimension, the non-free count c', which equals
the number of i-blocks fully contained in the object.

By convention the census classifies n-cells as non-free (a voxel's block is
itself, and it is present), so c* is 0 at dimension n and the partition
c = c* + c' stays total over 0..n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from operator import add
from typing import Iterable, Iterator, Sequence

from .cells import Cell, _coface_offsets, _face_offsets, _mk, _parity, cofaces


class DigitalObject:
    """An immutable finite set of n-voxels.

    Voxels are stored in doubled coordinates (all components even). Duplicate
    voxels in the input are an error, not a silent merge. Coordinates are
    kept exactly as given; no canonical translation is applied.
    """

    __slots__ = ("_n", "_voxels")

    def __init__(self, n: int, voxels: Iterable[Cell] = ()) -> None:
        if n < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {n}")
        listed = [v if isinstance(v, Cell) else Cell(v) for v in voxels]
        for v in listed:
            if len(v) != n:
                raise ValueError(f"voxel {v!r} does not have {n} coordinates")
            if any(x & 1 for x in v):
                raise ValueError(f"{v!r} is not a voxel (odd component present)")
        vox = frozenset(listed)
        if len(vox) != len(listed):
            raise ValueError("duplicate voxels in input")
        self._n = n
        self._voxels = vox

    @classmethod
    def from_centers(
        cls, n: int, centers: Iterable[Sequence[int]]
    ) -> "DigitalObject":
        """Build from integer voxel centers (the usual user-facing form)."""
        return cls(n, (Cell(2 * x for x in c) for c in centers))

    @property
    def n(self) -> int:
        return self._n

    @property
    def voxels(self) -> frozenset[Cell]:
        return self._voxels

    def centers(self) -> list[tuple[int, ...]]:
        """Voxel centers as integer tuples, lexicographically sorted."""
        return sorted(tuple(x // 2 for x in v) for v in self._voxels)

    def translate(self, vector: Sequence[int]) -> "DigitalObject":
        vec = tuple(vector)
        if len(vec) != self._n:
            raise ValueError("translation vector has wrong length")
        return DigitalObject(
            self._n,
            (_mk(Cell, (x + 2 * t for x, t in zip(v, vec))) for v in self._voxels),
        )

    def permute_axes(self, perm: Sequence[int]) -> "DigitalObject":
        if sorted(perm) != list(range(self._n)):
            raise ValueError("not a permutation of the axes")
        return DigitalObject(
            self._n, (_mk(Cell, (v[k] for k in perm)) for v in self._voxels)
        )

    def __len__(self) -> int:
        return len(self._voxels)

    def __contains__(self, v: object) -> bool:
        return v in self._voxels

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self._voxels))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DigitalObject):
            return NotImplemented
        return self._n == other._n and self._voxels == other._voxels

    def __hash__(self) -> int:
        return hash((self._n, self._voxels))

    def __repr__(self) -> str:
        return f"DigitalObject(n={self._n}, voxels={len(self._voxels)})"


@dataclass(frozen=True)
class CellCensus:
    """Per-dimension cell counts of one object, with the cell sets cached.

    ``c[i]`` counts all i-cells, ``c_star[i]`` the free ones and
    ``c_prime[i]`` the rest; ``beta`` aliases ``c_prime`` since non-free
    i-cells correspond one-to-one to i-blocks contained in the object.
    """

    n: int
    c: tuple[int, ...]
    c_star: tuple[int, ...]
    c_prime: tuple[int, ...]
    cells_by_dim: tuple[frozenset[Cell], ...] = field(repr=False)
    free_by_dim: tuple[frozenset[Cell], ...] = field(repr=False)

    @property
    def beta(self) -> tuple[int, ...]:
        return self.c_prime

    def border(self, i: int) -> frozenset[Cell]:
        if not 0 <= i <= self.n - 1:
            raise ValueError(f"border dimension {i} outside [0, {self.n - 1}]")
        return self.free_by_dim[i]

    def is_free(self, e: Cell) -> bool:
        i = e.dim
        if e not in self.cells_by_dim[i]:
            raise ValueError(f"{e!r} is not a cell of the object")
        return e in self.free_by_dim[i]

    def b_boundary(self, e: Cell, j: int) -> int:
        """Free j-cells of the object bounded by its cell e."""
        i = e.dim
        if not i < j <= self.n - 1:
            raise ValueError(f"need dim(e) < j <= n-1, got dim={i}, j={j}")
        if e not in self.cells_by_dim[i]:
            raise ValueError(f"{e!r} is not a cell of the object")
        free_j = self.free_by_dim[j]
        return sum(
            1
            for delta in _coface_offsets(_parity(e), j)
            if tuple(map(add, e, delta)) in free_j
        )


@lru_cache(maxsize=None)
def _closure_offsets(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All 3^n offsets from a voxel to its faces, tagged with face dimension."""
    return tuple(
        (delta, delta.count(0)) for delta in product((-1, 0, 1), repeat=n)
    )


def _block_absent(e, vox: frozenset[Cell]) -> bool:
    """True iff some voxel of e's block is missing from vox."""
    for delta in _coface_offsets(_parity(e), len(e)):
        if tuple(map(add, e, delta)) not in vox:
            return True
    return False


def cells(obj: DigitalObject, i: int) -> list[Cell]:
    """All distinct i-cells of the object, lexicographically sorted."""
    n = obj.n
    if not 0 <= i <= n:
        raise ValueError(f"cell dimension {i} outside [0, {n}]")
    out: set[Cell] = set()
    deltas = _face_offsets((0,) * n, i)
    for v in obj.voxels:
        for delta in deltas:
            out.add(_mk(Cell, map(add, v, delta)))
    return sorted(out)


def is_free(obj: DigitalObject, e: Cell) -> bool:
    """True iff e's block is not entirely contained in the object.

    e must be a cell of the object of dimension < n.
    """
    if len(e) != obj.n:
        raise ValueError("cell and object ambient dimensions differ")
    if e.dim >= obj.n:
        raise ValueError("free/non-free is defined for dimensions below n")
    present = absent = False
    for v in cofaces(e, obj.n):
        if v in obj.voxels:
            present = True
        else:
            absent = True
    if not present:
        raise ValueError(f"{e!r} is not a cell of the object")
    return absent


def border(obj: DigitalObject, i: int) -> list[Cell]:
    """The free i-cells of the object, lexicographically sorted."""
    if not 0 <= i <= obj.n - 1:
        raise ValueError(f"border dimension {i} outside [0, {obj.n - 1}]")
    vox = obj.voxels
    return [e for e in cells(obj, i) if _block_absent(e, vox)]


def census(obj: DigitalObject) -> CellCensus:
    """Full per-dimension census with free/non-free classification."""
    n = obj.n
    vox = obj.voxels
    by_dim: list[set[Cell]] = [set() for _ in range(n + 1)]
    for v in vox:
        for delta, d in _closure_offsets(n):
            by_dim[d].add(_mk(Cell, map(add, v, delta)))
    free_by_dim = []
    for cells_i in by_dim:
        free_by_dim.append(
            frozenset(e for e in cells_i if _block_absent(e, vox))
        )
    c = tuple(len(s) for s in by_dim)
    c_star = tuple(len(s) for s in free_by_dim)
    c_prime = tuple(a - b for a, b in zip(c, c_star))
    return CellCensus(
        n=n,
        c=c,
        c_star=c_star,
        c_prime=c_prime,
        cells_by_dim=tuple(frozenset(s) for s in by_dim),
        free_by_dim=tuple(free_by_dim),
    )


def b_boundary(obj: DigitalObject, e: Cell, j: int) -> int:
    """Free j-cells of the object bounded by its cell e.

    Zero whenever e itself is non-free: every coface of a non-free cell has
    its block inside the object's blocks, hence is non-free too.
    """
    i = e.dim
    if not i < j <= obj.n - 1:
        raise ValueError(f"need dim(e) < j <= n-1, got dim={i}, j={j}")
    vox = obj.voxels
    if not any(v in vox for v in cofaces(e, obj.n)):
        raise ValueError(f"{e!r} is not a cell of the object")
    free_j = frozenset(border(obj, j))
    return sum(
        1
        for delta in _coface_offsets(_parity(e), j)
        if tuple(map(add, e, delta)) in free_j
    )
