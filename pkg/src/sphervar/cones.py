"""Rational polyhedral cones with both generator and inequality descriptions.

Conversion between the two descriptions is the double description method,
run entirely over the integers: rays and forms are kept as primitive
integer vectors, the lineality space is split off as constraints arrive,
and new rays come only from adjacent pairs (standard combinatorial test,
with activity sets recomputed from the processed forms rather than
tracked incrementally).

Canonical form of a cone: the lineality space is represented by the HNF
basis of its saturated lattice with both signs listed among the
generators, extreme rays are reduced modulo the lineality at its pivot
columns and scaled primitive, and both lists are sorted.  Equality of
canonical forms is then equality of cones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapExceededError, InvalidInputError
from .matrices import Vec, dot, integer_kernel, primitive_vector, vneg

AMBIENT_CAP = 8


def _check_rank(ambient_rank: int) -> None:
    if ambient_rank > AMBIENT_CAP:
        raise CapExceededError(
            f"cone conversion capped at ambient rank {AMBIENT_CAP}, got {ambient_rank}")
    if ambient_rank < 0:
        raise InvalidInputError("ambient rank must be nonnegative")


def _clean(vectors: Iterable[Sequence], ambient_rank: int) -> list[Vec]:
    out: list[Vec] = []
    seen = set()
    for v in vectors:
        if len(v) != ambient_rank:
            raise InvalidInputError(
                f"vector has length {len(v)}, expected {ambient_rank}")
        p = primitive_vector(v)
        if any(p) and p not in seen:
            seen.add(p)
            out.append(p)
    return out


def _reduce_mod_lineality(lin_basis: Sequence[Vec], ray: Sequence) -> Vec:
    """Canonical representative of ``ray`` modulo the span of ``lin_basis``
    (zero out the pivot columns of the HNF basis), scaled primitive."""
    work = [Fraction(x) for x in ray]
    for row in lin_basis:
        p = next(j for j, x in enumerate(row) if x != 0)
        if work[p]:
            f = work[p] / row[p]
            for j in range(p, len(work)):
                work[j] -= f * row[j]
    return primitive_vector(work)


def dual_description(forms: Sequence[Sequence], ambient_rank: int
                     ) -> tuple[tuple[Vec, ...], tuple[Vec, ...]]:
    """Generators of ``{x : f . x >= 0 for every f in forms}``.

    Returns ``(lineality_basis, rays)``: the cone is the span of the
    lineality plus the nonnegative hull of the rays.  Both parts are in
    canonical form.
    """
    _check_rank(ambient_rank)
    cleaned = _clean(forms, ambient_rank)
    lin: list[Vec] = [tuple(int(i == j) for j in range(ambient_rank))
                      for i in range(ambient_rank)]
    rays: list[Vec] = []

    def active(ray: Vec, upto: int) -> frozenset[int]:
        return frozenset(i for i in range(upto) if dot(cleaned[i], ray) == 0)

    for idx, a in enumerate(cleaned):
        linvals = [dot(a, l) for l in lin]
        j0 = next((j for j, val in enumerate(linvals) if val != 0), None)
        if j0 is not None:
            # the constraint cuts the lineality: split off one direction
            l0 = lin[j0] if linvals[j0] > 0 else vneg(lin[j0])
            v0 = abs(linvals[j0])
            lin = [l if val == 0 else
                   primitive_vector(tuple(v0 * x - val * y for x, y in zip(l, l0)))
                   for j, (l, val) in enumerate(zip(lin, linvals)) if j != j0]
            rays = [primitive_vector(tuple(v0 * x - dot(a, r) * y for x, y in zip(r, l0)))
                    for r in rays]
            rays.append(l0)
            continue
        vals = [dot(a, r) for r in rays]
        plus = [r for r, v in zip(rays, vals) if v > 0]
        zero = [r for r, v in zip(rays, vals) if v == 0]
        minus = [r for r, v in zip(rays, vals) if v < 0]
        if not minus:
            continue
        acts = {r: active(r, idx) for r in rays}
        new: dict[Vec, None] = dict.fromkeys(plus + zero)
        for rp in plus:
            for rm in minus:
                common = acts[rp] & acts[rm]
                adjacent = not any(r is not rp and r is not rm and common <= acts[r]
                                   for r in rays)
                if adjacent:
                    vp, vm = dot(a, rp), dot(a, rm)
                    w = primitive_vector(tuple(vp * x - vm * y
                                               for x, y in zip(rm, rp)))
                    new.setdefault(w)
        rays = list(new)

    lin_canon = integer_kernel(cleaned, ambient_rank)
    ray_canon = sorted({_reduce_mod_lineality(lin_canon, r) for r in rays} - {tuple([0] * ambient_rank)})
    return lin_canon, tuple(ray_canon)


def _combine(lin_basis: Sequence[Vec], rays: Sequence[Vec]) -> tuple[Vec, ...]:
    out = {r for r in rays}
    for b in lin_basis:
        out.add(b)
        out.add(vneg(b))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Cone:
    """Rational polyhedral cone, canonical on both sides of the duality."""

    ambient_rank: int
    generators: tuple[Vec, ...]
    inequalities: tuple[Vec, ...]

    @classmethod
    def from_inequalities(cls, forms: Iterable[Sequence], ambient_rank: int) -> "Cone":
        forms = list(forms)
        lin_g, rays_g = dual_description(forms, ambient_rank)
        generators = _combine(lin_g, rays_g)
        lin_f, rays_f = dual_description(generators, ambient_rank)
        cone = cls(ambient_rank, generators, _combine(lin_f, rays_f))
        cone._sanity()
        return cone

    @classmethod
    def from_generators(cls, vectors: Iterable[Sequence], ambient_rank: int) -> "Cone":
        vectors = list(vectors)
        lin_f, rays_f = dual_description(vectors, ambient_rank)
        inequalities = _combine(lin_f, rays_f)
        lin_g, rays_g = dual_description(inequalities, ambient_rank)
        cone = cls(ambient_rank, _combine(lin_g, rays_g), inequalities)
        cone._sanity()
        return cone

    def _sanity(self) -> None:
        for g in self.generators:
            for f in self.inequalities:
                assert dot(f, g) >= 0, "double description out of sync"

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_rank:
            raise InvalidInputError(
                f"vector has length {len(v)}, expected {self.ambient_rank}")
        return all(dot(f, v) >= 0 for f in self.inequalities)

    @property
    def is_full_space(self) -> bool:
        return not self.inequalities

    def __repr__(self) -> str:  # pragma: no cover
        return (f"Cone(rank {self.ambient_rank}, {len(self.generators)} generators, "
                f"{len(self.inequalities)} inequalities)")


def cone_equal(c1: Cone, c2: Cone) -> bool:
    """Set equality, decided by mutual containment of generators."""
    if c1.ambient_rank != c2.ambient_rank:
        raise InvalidInputError("cone_equal: ambient rank mismatch")
    return (all(c2.contains(g) for g in c1.generators)
            and all(c1.contains(g) for g in c2.generators))
