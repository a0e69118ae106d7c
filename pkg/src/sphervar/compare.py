"""Hypothesis tests for the three uniqueness statements, color bijections,
the root lattice / equivariant automorphism group, and the Delzant
comparator.

The checks decide whether two data satisfy the *hypotheses* of the
corresponding uniqueness statement; the conclusion (equivariant
isomorphism) is a theorem, not a computation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .cones import Cone, cone_equal
from .datum import SphericalDatum, validate_datum, valuation_cone
from .errors import CapExceededError, InvalidInputError
from .lattice import AbelianGroupStructure, Lattice, quotient_structure
from .matrices import IntMatrix, Vec, invert_unimodular, snf
from .monoid import monoid_equal

BIJECTION_CAP = 10_000


def _require_same_ambient(d1: SphericalDatum, d2: SphericalDatum) -> None:
    a1, a2 = d1.ambient, d2.ambient
    if (a1.ambient_rank, a1.simple_roots, a1.simple_coroots) != \
            (a2.ambient_rank, a2.simple_roots, a2.simple_coroots):
        raise InvalidInputError("data live over different ambient root systems")


def check_weight_monoid_hypothesis(d1: SphericalDatum, d2: SphericalDatum) -> bool:
    """Hypothesis of the smooth affine uniqueness statement: equal weight
    monoids."""
    _require_same_ambient(d1, d2)
    if d1.weight_monoid is None or d2.weight_monoid is None:
        raise InvalidInputError("both data need weight monoids")
    return monoid_equal(d1.weight_monoid, d2.weight_monoid)


def check_affine_hypothesis(d1: SphericalDatum, d2: SphericalDatum) -> bool:
    """Hypothesis of the affine uniqueness statement: equal weight monoids
    and equal valuation cones."""
    if not check_weight_monoid_hypothesis(d1, d2):
        return False
    if d1.weight_lattice != d2.weight_lattice:
        return False  # the cones live in different dual spaces
    return cone_equal(valuation_cone(d1), valuation_cone(d2))


@dataclass(frozen=True)
class ColorBijection:
    """A bijection between the color sets preserving (phi, moved_roots)."""

    pairs: tuple[tuple[str, str], ...]  # sorted by first id

    def image(self, cid: str) -> str:
        for a, b in self.pairs:
            if a == cid:
                return b
        raise InvalidInputError(f"no color with id {cid!r} in the bijection")


def check_homogeneous_hypothesis(d1: SphericalDatum, d2: SphericalDatum,
                                 cap: int = BIJECTION_CAP) -> list[ColorBijection]:
    """Hypothesis of the homogeneous uniqueness statement.

    Returns every bijection between the color sets preserving phi and the
    moved-root set, or the empty list when the weight lattices, the
    valuation cones, or the color signatures do not match.
    """
    _require_same_ambient(d1, d2)
    if d1.weight_lattice != d2.weight_lattice:
        return []
    if not cone_equal(valuation_cone(d1), valuation_cone(d2)):
        return []

    def by_signature(d: SphericalDatum) -> dict[tuple, list[str]]:
        out: dict[tuple, list[str]] = {}
        for c in d.colors:
            out.setdefault((c.phi, tuple(sorted(c.moved_roots))), []).append(c.id)
        return out

    sig1, sig2 = by_signature(d1), by_signature(d2)
    if set(sig1) != set(sig2):
        return []
    if any(len(sig1[s]) != len(sig2[s]) for s in sig1):
        return []

    total = 1
    for s in sig1:
        total *= factorial(len(sig1[s]))
        if total > cap:
            raise CapExceededError(
                f"more than {cap} color bijections; refusing to enumerate")

    # small signature classes first keeps the cross product shallow
    classes = sorted(sig1, key=lambda s: len(sig1[s]))
    per_class = []
    for s in classes:
        ids1 = sorted(sig1[s])
        per_class.append([tuple(zip(ids1, perm))
                          for perm in itertools.permutations(sorted(sig2[s]))])
    bijections = []
    for combo in itertools.product(*per_class):
        pairs = tuple(sorted(p for block in combo for p in block))
        bijections.append(ColorBijection(pairs))
    return sorted(bijections, key=lambda b: b.pairs)


def root_lattice(d: SphericalDatum) -> Lattice:
    """Lattice generated by the doubled spherical roots."""
    report = validate_datum(d)
    if not report.ok:
        raise InvalidInputError("invalid datum: " + "; ".join(report.failures))
    return Lattice.from_generators([r.doubled for r in d.spherical_roots],
                                   d.ambient.ambient_rank)


@dataclass(frozen=True)
class AutomorphismGroup:
    """The equivariant automorphism group as the character group of
    weight lattice / root lattice.

    ``smith_basis`` lists lattice elements (ambient coordinates) adapted
    to the quotient; an automorphism is a choice of scalar per basis row
    with ``scalar ** order == 1``, where order 0 means any nonzero scalar.
    """

    structure: AbelianGroupStructure
    orders: tuple[int, ...]
    smith_basis: tuple[Vec, ...]

    @property
    def order(self) -> int | None:
        return self.structure.order


def aut_group(d: SphericalDatum) -> AutomorphismGroup:
    """Invariant factors of (weight lattice)/(root lattice) plus the
    change of basis realizing them."""
    x = d.weight_lattice
    lam = root_lattice(d)
    structure = quotient_structure(x, lam)
    r = x.rank
    coords = [x.coords(row) for row in lam.basis]
    if coords:
        diag, _, v = snf(IntMatrix.from_rows(coords, r))
        vinv = invert_unimodular(v)
        basis_rows = vinv.entries
    else:
        diag = ()
        basis_rows = Lattice.standard(r).basis if r else ()
    orders = tuple(diag) + tuple(0 for _ in range(r - len(diag)))
    smith_basis = tuple(x.from_coords(row) for row in basis_rows)
    return AutomorphismGroup(structure, orders, smith_basis)


@dataclass(frozen=True)
class DelzantData:
    """Moment polytope (canonical vertex list) plus the principal
    isotropy group as an opaque label."""

    ambient_rank: int
    polytope_vertices: tuple[tuple[Fraction, ...], ...]
    isotropy_label: str

    @classmethod
    def from_vertices(cls, vertices: Iterable[Sequence], isotropy_label: str,
                      ambient_rank: int | None = None) -> "DelzantData":
        pts = [tuple(Fraction(x) for x in v) for v in vertices]
        if not pts:
            raise InvalidInputError("a moment polytope needs at least one vertex")
        if ambient_rank is None:
            ambient_rank = len(pts[0])
        for p in pts:
            if len(p) != ambient_rank:
                raise InvalidInputError("vertices of mixed dimension")
        pts = sorted(set(pts))
        extreme = [p for p in pts if not _in_convex_hull(p, [q for q in pts if q != p])]
        return cls(ambient_rank, tuple(extreme), str(isotropy_label))


def _in_convex_hull(point: tuple[Fraction, ...], others: list[tuple[Fraction, ...]]) -> bool:
    if not others:
        return False
    # homogenize: point in conv(others) iff (point, 1) in cone{(q, 1)}
    cone = Cone.from_generators([q + (Fraction(1),) for q in others],
                                len(point) + 1)
    return cone.contains(point + (Fraction(1),))


def compare_delzant(m1: DelzantData, m2: DelzantData) -> bool:
    """Equal moment polytopes (canonical vertex lists) and equal isotropy
    labels."""
    if m1.ambient_rank != m2.ambient_rank:
        raise InvalidInputError("compare_delzant: ambient dimension mismatch")
    return (m1.polytope_vertices == m2.polytope_vertices
            and m1.isotropy_label == m2.isotropy_label)
