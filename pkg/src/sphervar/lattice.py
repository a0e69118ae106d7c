"""Sublattices of an integer grid and finitely generated abelian groups.

A ``Lattice`` is stored by the canonical HNF basis of its generators, so
two lattices are equal exactly when they are equal as subgroups of the
ambient grid; downstream comparisons are plain ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Sequence

from .errors import InvalidInputError
from .matrices import IntMatrix, Vec, hnf, is_zero_vec, snf


@dataclass(frozen=True)
class Lattice:
    """Finitely generated subgroup of ``Z^ambient_rank``."""

    ambient_rank: int
    basis: tuple[Vec, ...]  # canonical HNF rows, no zero rows

    @classmethod
    def from_generators(cls, rows: Iterable[Sequence[int]], ambient_rank: int) -> "Lattice":
        rows = [tuple(int(x) for x in r) for r in rows]
        for r in rows:
            if len(r) != ambient_rank:
                raise InvalidInputError(
                    f"lattice generator has length {len(r)}, expected {ambient_rank}")
        if not rows:
            return cls(ambient_rank, ())
        h, _ = hnf(IntMatrix.from_rows(rows, ambient_rank))
        return cls(ambient_rank, tuple(r for r in h.entries if not is_zero_vec(r)))

    @classmethod
    def standard(cls, n: int) -> "Lattice":
        return cls(n, tuple(IntMatrix.identity(n).entries))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coords(self, v: Sequence[int]) -> Vec | None:
        """Coefficients of ``v`` in the canonical basis, or None if ``v``
        is not a lattice element (HNF back-substitution)."""
        if len(v) != self.ambient_rank:
            raise InvalidInputError(
                f"vector has length {len(v)}, expected {self.ambient_rank}")
        w = [int(x) for x in v]
        out = []
        for row in self.basis:
            p = next(j for j, x in enumerate(row) if x != 0)
            q, r = divmod(w[p], row[p])
            if r:
                return None
            for j in range(p, self.ambient_rank):
                w[j] -= q * row[j]
            out.append(q)
        if any(w):
            return None
        return tuple(out)

    def contains(self, v: Sequence[int]) -> bool:
        return self.coords(v) is not None

    def from_coords(self, c: Sequence[int]) -> Vec:
        if len(c) != self.rank:
            raise InvalidInputError("coordinate vector has wrong length")
        out = [0] * self.ambient_rank
        for ci, row in zip(c, self.basis):
            for j, x in enumerate(row):
                out[j] += ci * x
        return tuple(out)

    def is_primitive(self, v: Sequence[int]) -> bool:
        """Whether ``v`` is not a proper multiple of another lattice element
        (equivalently, ``v`` extends to a basis)."""
        c = self.coords(v)
        if c is None:
            raise InvalidInputError("vector is not a lattice element")
        g = 0
        for x in c:
            g = gcd(g, x)
        return g == 1

    def __repr__(self) -> str:  # pragma: no cover
        return f"Lattice(rank {self.rank} in Z^{self.ambient_rank})"


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Invariant-factor decomposition ``Z^free_rank x prod Z/d_i``."""

    free_rank: int
    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise InvalidInputError("free_rank must be nonnegative")
        prev = None
        for d in self.invariant_factors:
            if d < 2:
                raise InvalidInputError(f"invariant factor {d} < 2")
            if prev is not None and d % prev:
                raise InvalidInputError("invariant factors must form a divisibility chain")
            prev = d

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        return prod(self.invariant_factors, start=1)

    def __str__(self) -> str:
        parts = ["Z^%d" % self.free_rank] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " x ".join(parts) if parts else "trivial"


def quotient_structure(x: Lattice, sub: Lattice) -> AbelianGroupStructure:
    """Isomorphism class of ``x / sub`` for ``sub`` contained in ``x``."""
    if x.ambient_rank != sub.ambient_rank:
        raise InvalidInputError("quotient_structure: ambient rank mismatch")
    coords = []
    for row in sub.basis:
        c = x.coords(row)
        if c is None:
            raise InvalidInputError(
                "quotient_structure: sublattice generator outside the big lattice")
        coords.append(c)
    if not coords:
        return AbelianGroupStructure(x.rank, ())
    diag, _, _ = snf(IntMatrix.from_rows(coords, x.rank))
    return AbelianGroupStructure(x.rank - len(diag),
                                 tuple(d for d in diag if d >= 2))
