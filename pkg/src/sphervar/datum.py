"""The central record: basic combinatorial invariants of a spherical
homogeneous space, with validation and the derived objects (valuation
cone, spherical roots from a chamber, little Weyl group, hidden colors).

Coordinate conventions, used consistently everywhere:

  * spherical roots and weight-monoid generators are integer vectors in
    the ambient weight coordinates (length ``ambient.ambient_rank``);
  * a color's dual vector ``phi`` and a spherical root's ``coroot`` live
    in the dual of the weight lattice and are written in the dual of the
    lattice's canonical basis (length ``weight_lattice.rank``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cones import Cone
from .errors import InvalidInputError, NotApplicableError
from .lattice import Lattice
from .matrices import Vec, dot, rational_rank, vneg
from .monoid import HiddenResult, WeightMonoid, is_hidden
from .rootsys import (GROUP_CAP, QVec, ReflectionGroup, RootSystem, apply_map,
                      generate_group, reflection_matrix_dual)


@dataclass(frozen=True)
class SphericalRoot:
    """A spherical root: primitive lattice element cutting the valuation
    cone, its doubling coefficient, and an optional explicit coroot."""

    coords: Vec                      # ambient weight coordinates
    doubling: int = 1
    coroot: QVec | None = None       # dual-of-lattice coordinates, pairs to 2

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        if self.doubling not in (1, 2):
            raise InvalidInputError(
                f"doubling coefficient must be 1 or 2, got {self.doubling}")
        if self.coroot is not None:
            object.__setattr__(self, "coroot",
                               tuple(Fraction(x) for x in self.coroot))

    @property
    def doubled(self) -> Vec:
        return tuple(self.doubling * x for x in self.coords)


@dataclass(frozen=True)
class ColorRecord:
    """One color: identifier, dual vector phi, and the set of simple roots
    *moved* by the color (the complement of its stabilizer parabolic)."""

    id: str
    phi: Vec                         # dual-of-lattice coordinates
    moved_roots: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "phi", tuple(int(x) for x in self.phi))
        object.__setattr__(self, "moved_roots", frozenset(int(i) for i in self.moved_roots))


@dataclass(frozen=True)
class ColoredSubspace:
    """A pair (subspace of the dual space, subset of colors)."""

    subspace: tuple[QVec, ...]       # basis rows, dual-of-lattice coordinates
    colors: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "subspace",
                           tuple(tuple(Fraction(x) for x in row) for row in self.subspace))
        object.__setattr__(self, "colors", frozenset(self.colors))


@dataclass(frozen=True)
class SphericalDatum:
    ambient: RootSystem
    weight_lattice: Lattice
    spherical_roots: tuple[SphericalRoot, ...]
    colors: tuple[ColorRecord, ...]
    weight_monoid: WeightMonoid | None = None

    def __post_init__(self) -> None:
        roots = tuple(sorted(self.spherical_roots,
                             key=lambda r: (r.coords, r.doubling)))
        colors = tuple(sorted(self.colors, key=lambda c: (c.phi, c.id)))
        object.__setattr__(self, "spherical_roots", roots)
        object.__setattr__(self, "colors", colors)

    @property
    def rank(self) -> int:
        return self.weight_lattice.rank

    def color_by_id(self, cid: str) -> ColorRecord:
        for c in self.colors:
            if c.id == cid:
                return c
        raise InvalidInputError(f"no color with id {cid!r}")


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        lines = ["valid" if self.ok else "INVALID"]
        lines += [f"  failure: {f}" for f in self.failures]
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


def validate_datum(d: SphericalDatum) -> ValidationReport:
    """Structural and semantic checks; report based, never raises."""
    failures: list[str] = []
    notes: list[str] = []
    n = d.ambient.ambient_rank
    lat = d.weight_lattice
    if lat.ambient_rank != n:
        failures.append(
            f"weight lattice ambient rank {lat.ambient_rank} != root system rank {n}")
        return ValidationReport(tuple(failures), tuple(notes))

    root_lattice = d.ambient.ambient_root_lattice()
    in_lattice: list[Vec] = []
    for i, root in enumerate(d.spherical_roots):
        tag = f"spherical root #{i} {root.coords}"
        if len(root.coords) != n:
            failures.append(f"{tag}: wrong length")
            continue
        if not any(root.coords):
            failures.append(f"{tag}: zero vector")
            continue
        c = lat.coords(root.coords)
        if c is None:
            failures.append(f"{tag}: not in the weight lattice")
            continue
        in_lattice.append(root.coords)
        if not lat.is_primitive(root.coords):
            failures.append(f"{tag}: not primitive in the weight lattice")
        if root.doubling not in (1, 2):
            failures.append(f"{tag}: doubling {root.doubling} not in {{1, 2}}")
        if root.coroot is not None:
            if len(root.coroot) != lat.rank:
                failures.append(f"{tag}: coroot has wrong length")
            elif dot(c, root.coroot) != 2:
                failures.append(
                    f"{tag}: <root, coroot> = {dot(c, root.coroot)}, expected 2")
        elif root_lattice.contains(root.coords):
            notes.append(f"{tag}: no explicit coroot; the invariant-form default applies")
        else:
            notes.append(f"{tag}: no explicit coroot and outside the ambient root "
                         "lattice; reflection operations are unavailable")
    if len(in_lattice) == len(d.spherical_roots) and in_lattice:
        if rational_rank(in_lattice) != len(in_lattice):
            failures.append("spherical roots are linearly dependent")

    seen_ids = set()
    valid_indices = set(d.ambient.root_indices)
    for c in d.colors:
        if c.id in seen_ids:
            failures.append(f"color {c.id!r}: duplicate id")
        seen_ids.add(c.id)
        if len(c.phi) != lat.rank:
            failures.append(
                f"color {c.id!r}: phi has length {len(c.phi)}, expected lattice rank {lat.rank}")
        if not c.moved_roots <= valid_indices:
            failures.append(
                f"color {c.id!r}: moved roots {sorted(c.moved_roots - valid_indices)} "
                "are not simple-root indices")

    if d.weight_monoid is not None:
        if d.weight_monoid.ambient_rank != n:
            failures.append("weight monoid has wrong ambient rank")
        else:
            for g in d.weight_monoid.generators:
                if not lat.contains(g):
                    failures.append(f"monoid generator {g}: not in the weight lattice")
    return ValidationReport(tuple(failures), tuple(notes))


def _require_valid(d: SphericalDatum) -> None:
    report = validate_datum(d)
    if not report.ok:
        raise InvalidInputError("invalid datum: " + "; ".join(report.failures))


def root_lattice_coords(d: SphericalDatum) -> list[Vec]:
    """Spherical roots rewritten in weight-lattice coordinates."""
    out = []
    for root in d.spherical_roots:
        c = d.weight_lattice.coords(root.coords)
        if c is None:
            raise InvalidInputError(f"spherical root {root.coords} not in the weight lattice")
        out.append(c)
    return out


def valuation_cone(d: SphericalDatum) -> Cone:
    """The cone in the dual of the weight lattice where every spherical
    root is nonpositive."""
    _require_valid(d)
    forms = [vneg(c) for c in root_lattice_coords(d)]
    return Cone.from_inequalities(forms, d.weight_lattice.rank)


def spherical_roots_from_cone(x: Lattice, v: Cone) -> list[Vec]:
    """Recover the spherical roots from a valuation cone of chamber shape.

    Inverse of ``valuation_cone`` given the lattice: the unique primitive
    lattice elements whose nonpositivity halfspaces cut out ``v``.
    """
    if v.ambient_rank != x.rank:
        raise InvalidInputError(
            f"cone lives in rank {v.ambient_rank}, lattice dual has rank {x.rank}")
    forms = v.inequalities
    if forms and rational_rank(forms) != len(forms):
        raise NotApplicableError(
            "cone is not of chamber shape: its inequalities are linearly dependent")
    return sorted(x.from_coords(vneg(f)) for f in forms)


def coroot_of(d: SphericalDatum, root: SphericalRoot) -> QVec:
    """Explicit coroot if present, else the invariant-form default
    2*(root, .)/(root, root) restricted to the weight lattice."""
    if root.coroot is not None:
        return root.coroot
    form = d.ambient.coroot_form(root.coords)
    if form is None:
        raise InvalidInputError(
            f"spherical root {root.coords} is outside the ambient root lattice "
            "and has no explicit coroot")
    return tuple(dot(form, b) for b in d.weight_lattice.basis)


def little_weyl_group(d: SphericalDatum, cap: int = GROUP_CAP) -> ReflectionGroup:
    """Group generated by the spherical-root reflections on the dual of
    the weight lattice."""
    _require_valid(d)
    coords = root_lattice_coords(d)
    gens = []
    for root, c in zip(d.spherical_roots, coords):
        sigma = coroot_of(d, root)
        if dot(c, sigma) != 2:
            raise InvalidInputError(
                f"spherical root {root.coords}: <root, coroot> != 2")
        gens.append(reflection_matrix_dual(c, sigma))
    return generate_group(gens, cap, dim=d.weight_lattice.rank)


def check_chamber(d: SphericalDatum, samples: int, seed: int,
                  cap: int = GROUP_CAP, coord_bound: int = 10 ** 6) -> bool:
    """Seeded falsifier for the chamber property of the valuation cone.

    Draws ``samples`` random integer dual vectors off every reflection
    hyperplane (vectors with a nontrivial stabilizer are resampled) and
    checks that exactly one group element maps each into the cone.
    """
    if samples < 1:
        raise InvalidInputError("samples must be positive")
    group = little_weyl_group(d, cap)
    cone = valuation_cone(d)
    r = d.weight_lattice.rank
    rng = random.Random(seed)
    identity = tuple(tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r))
    others = [g for g in group.elements if g != identity]
    for _ in range(samples):
        for _attempt in range(1000):
            v = tuple(rng.randint(-coord_bound, coord_bound) for _ in range(r))
            if any(v) and all(apply_map(g, v) != tuple(map(Fraction, v)) for g in others):
                break
        else:
            raise InvalidInputError("could not sample a vector off every wall")
        hits = sum(1 for g in group.elements if cone.contains(apply_map(g, v)))
        if hits != 1:
            return False
    return True


def validate_colored_subspace(d: SphericalDatum, cs: ColoredSubspace) -> ValidationReport:
    """Structural checks only: basis independence and color resolution.

    The record also parameterizes overgroups through extra combinatorial
    compatibility conditions; those have no datum-level formulation here
    and are explicitly not checked (see the note in the report).
    """
    failures: list[str] = []
    r = d.weight_lattice.rank
    for i, row in enumerate(cs.subspace):
        if len(row) != r:
            failures.append(f"subspace basis vector #{i}: wrong length")
    if not failures and cs.subspace:
        if rational_rank(cs.subspace) != len(cs.subspace):
            failures.append("subspace basis vectors are linearly dependent")
    known = {c.id for c in d.colors}
    for cid in sorted(cs.colors):
        if cid not in known:
            failures.append(f"color id {cid!r} does not resolve in the datum")
    notes = ("only structure is checked: the further combinatorial "
             "compatibility conditions on colored subspaces are not verified",)
    return ValidationReport(tuple(failures), notes)


def monoid_in_lattice_coords(d: SphericalDatum) -> WeightMonoid:
    """The weight monoid rewritten in weight-lattice coordinates, so that
    color dual vectors pair with its elements by plain dot product."""
    if d.weight_monoid is None:
        raise InvalidInputError("datum has no weight monoid")
    gens = []
    for g in d.weight_monoid.generators:
        c = d.weight_lattice.coords(g)
        if c is None:
            raise InvalidInputError(f"monoid generator {g} not in the weight lattice")
        gens.append(c)
    return WeightMonoid.from_generators(gens, d.weight_lattice.rank)


@dataclass(frozen=True)
class ColorHiddenReport:
    color: ColorRecord
    hidden: bool
    witness: Vec | None       # ambient coordinates when not hidden
    witness_pairing: int | None


def hidden_colors(d: SphericalDatum) -> list[ColorHiddenReport]:
    """Hidden verdict for every color of the datum, with witnesses."""
    m = monoid_in_lattice_coords(d)
    out = []
    for color in d.colors:
        res: HiddenResult = is_hidden(color.phi, m)
        if res.hidden:
            out.append(ColorHiddenReport(color, True, None, None))
        else:
            ambient = d.weight_lattice.from_coords(res.witness)
            out.append(ColorHiddenReport(color, False, ambient,
                                         dot(color.phi, res.witness)))
    return out
