"""Submodules of Z4^k in Howell normal form.

The Howell form is the Z4 analogue of reduced row echelon form.  It is
unique for a given submodule, and for every j the rows whose first j entries
vanish span exactly the elements of the module whose first j entries vanish.
That second property is what lets the code routines read off Tor(C) from the
trailing block of a codeword layout.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

Vector = tuple[int, ...]


def _lead(v: Sequence[int]) -> int:
    for i, x in enumerate(v):
        if x:
            return i
    return -1


def howell_form(vectors: Iterable[Sequence[int]], ncols: int) -> tuple[Vector, ...]:
    pending = [[x % 4 for x in v] for v in vectors]
    pending = [v for v in pending if any(v)]
    basis: list[list[int]] = []
    for c in range(ncols):
        hits = [v for v in pending if v[c]]
        if not hits:
            continue
        pivot = next((v for v in hits if v[c] & 1), hits[0])
        pending = [v for v in pending if v is not pivot]
        if pivot[c] == 3:
            pivot = [(-x) % 4 for x in pivot]
        p = pivot[c]
        nxt = []
        for v in pending:
            if v[c]:
                f = v[c] if p == 1 else v[c] // 2
                v = [(x - f * y) % 4 for x, y in zip(v, pivot)]
            if any(v):
                nxt.append(v)
        if p == 2:
            # the annihilator of the pivot entry contributes 2*pivot, which vanishes at c
            twice = [(2 * x) % 4 for x in pivot]
            if any(twice):
                nxt.append(twice)
        pending = nxt
        basis.append(pivot)
    # back-substitution to make the form unique; pivots are visited left to
    # right so a later reduction never disturbs an earlier pivot column
    leads = [(_lead(r), r[_lead(r)]) for r in basis]
    for j in range(len(basis)):
        other = basis[j]
        for i in range(j + 1, len(basis)):
            c, p = leads[i]
            if other[c]:
                f = other[c] if p == 1 else other[c] // 2
                if f:
                    other = [(x - f * y) % 4 for x, y in zip(other, basis[i])]
        basis[j] = other
    return tuple(tuple(r) for r in basis)


class Z4Module:
    """A submodule of Z4^ncols, held as its Howell basis."""

    __slots__ = ("ncols", "rows", "_pivots", "_hash")

    def __init__(self, vectors: Iterable[Sequence[int]], ncols: int):
        self.ncols = ncols
        self.rows = howell_form(vectors, ncols)
        self._pivots = tuple((_lead(r), r[_lead(r)]) for r in self.rows)
        self._hash = None

    @classmethod
    def zero(cls, ncols: int) -> Z4Module:
        return cls((), ncols)

    @classmethod
    def full(cls, ncols: int) -> Z4Module:
        return cls((tuple(int(i == j) for j in range(ncols)) for i in range(ncols)), ncols)

    @property
    def pivots(self):
        return self._pivots

    @property
    def log2_size(self) -> int:
        return sum(2 if p == 1 else 1 for _, p in self._pivots)

    @property
    def size(self) -> int:
        return 1 << self.log2_size

    def reduce(self, v: Sequence[int]) -> tuple[Vector, tuple[int, ...]]:
        """Return (remainder, coefficients) of v against the basis."""
        v = [x % 4 for x in v]
        coeffs = []
        for row, (c, p) in zip(self.rows, self._pivots):
            x = v[c]
            if p == 1:
                f = x
            else:
                f = x // 2
            if f:
                v = [(a - f * b) % 4 for a, b in zip(v, row)]
            coeffs.append(f)
        return tuple(v), tuple(coeffs)

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v)[0])

    def contains_module(self, other: Z4Module) -> bool:
        return all(r in self for r in other.rows)

    def __eq__(self, other):
        if not isinstance(other, Z4Module):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ncols, self.rows))
        return self._hash

    def __add__(self, other: Z4Module) -> Z4Module:
        return Z4Module(self.rows + other.rows, self.ncols)

    def doubled(self) -> Z4Module:
        return Z4Module(([2 * x for x in r] for r in self.rows), self.ncols)

    def free_rank_z4(self) -> int:
        """Number of Z4 summands in the decomposition Z4^a + Z2^b."""
        return self.doubled().log2_size

    def structure(self) -> tuple[int, int]:
        """(a, b) with module isomorphic to Z4^a + Z2^b."""
        a = self.free_rank_z4()
        return a, self.log2_size - 2 * a

    def is_free(self) -> bool:
        return self.structure()[1] == 0

    def min_generators(self) -> int:
        a, b = self.structure()
        return a + b

    def elements(self, limit: int | None = None) -> np.ndarray:
        """All elements as an int8 array of shape (size, ncols)."""
        if limit is not None and self.size > limit:
            raise OverflowError(f"module has {self.size} elements, above the enumeration bound {limit}")
        out = np.zeros((1, self.ncols), dtype=np.int8)
        for row, (_, p) in zip(self.rows, self._pivots):
            r = np.array(row, dtype=np.int8)
            mults = range(4) if p == 1 else range(2)
            out = np.concatenate([(out + (k * r)) % 4 for k in mults]).astype(np.int8)
        return out

    def iter_chunks(self, chunk: int = 1 << 16):
        """Yield the elements in int8 blocks of at most ``chunk`` rows each."""
        inner, outer, size = [], [], 1
        for row, (_, p) in zip(self.rows, self._pivots):
            m = 4 if p == 1 else 2
            if size * m <= chunk:
                inner.append((row, p))
                size *= m
            else:
                outer.append((row, p))
        base = np.zeros((1, self.ncols), dtype=np.int8)
        for row, p in inner:
            r = np.array(row, dtype=np.int8)
            base = np.concatenate([(base + k * r) % 4 for k in range(4 if p == 1 else 2)]).astype(np.int8)
        if not outer:
            yield base
            return
        vecs = np.array([r for r, _ in outer], dtype=np.int64)
        for combo in itertools.product(*[range(4 if p == 1 else 2) for _, p in outer]):
            shift = (np.array(combo, dtype=np.int64) @ vecs) % 4
            yield ((base + shift.astype(np.int8)) % 4).astype(np.int8)

    def __repr__(self):
        return f"Z4Module(ncols={self.ncols}, size=2^{self.log2_size})"
