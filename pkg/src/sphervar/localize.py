"""Invariant transfer to a Levi section.

Localizing a datum at a weight mu (or at an explicit divisor set with its
stabilizer Levi) produces the datum of the section:

  (A) the weight lattice is unchanged;
  (B) a color survives iff its dual vector kills mu (resp. it was not
      dropped), keeping phi and intersecting its moved roots with the
      Levi;
  (C) spherical roots survive iff they lie in the rational span of the
      Levi's simple roots;
  (D) with a weight mu, the weight monoid gains -mu (it becomes the old
      monoid plus Z*mu); with an explicit divisor set the monoid is
      carried over unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .datum import ColorRecord, SphericalDatum
from .errors import InvalidInputError
from .matrices import Vec, dot, in_rational_span, vneg
from .monoid import WeightMonoid, monoid_contains


@dataclass(frozen=True)
class LocalizationResult:
    levi: frozenset[int]
    section_datum: SphericalDatum
    dropped_colors: tuple[str, ...]
    notes: tuple[str, ...] = ()


def _section(d: SphericalDatum, levi: frozenset[int], kept_ids: set[str],
             monoid: WeightMonoid | None) -> SphericalDatum:
    sub_ambient = d.ambient.levi_subsystem(levi)
    levi_simple = [d.ambient.simple_root(i) for i in sorted(levi)]
    roots = tuple(r for r in d.spherical_roots
                  if in_rational_span(levi_simple, r.coords))
    colors = tuple(ColorRecord(c.id, c.phi, c.moved_roots & levi)
                   for c in d.colors if c.id in kept_ids)
    return SphericalDatum(
        ambient=sub_ambient,
        weight_lattice=d.weight_lattice,
        spherical_roots=roots,
        colors=colors,
        weight_monoid=monoid,
    )


def localize_at_weight(d: SphericalDatum, mu: Sequence[int], *,
                       allow_unit: bool = False) -> LocalizationResult:
    """Localize at a noninvertible weight-monoid element mu.

    The Levi is the stabilizer of mu; colors with ``<phi, mu> != 0`` are
    dropped.  ``allow_unit`` skips the noninvertibility check so that a
    localization can be replayed on its own section (where mu has become
    a unit); the transfer itself is idempotent.
    """
    if d.weight_monoid is None:
        raise InvalidInputError("localize_at_weight needs a weight monoid")
    mu = tuple(int(x) for x in mu)
    if monoid_contains(d.weight_monoid, mu) is None:
        raise InvalidInputError(f"{mu} is not a weight-monoid element")
    if not allow_unit and monoid_contains(d.weight_monoid, vneg(mu)) is not None:
        raise InvalidInputError(f"{mu} is invertible in the weight monoid")
    mu_coords = d.weight_lattice.coords(mu)
    if mu_coords is None:
        raise InvalidInputError(f"{mu} is not in the weight lattice")
    levi = d.ambient.stabilizer_levi_of_weight(mu)
    kept = {c.id for c in d.colors if dot(c.phi, mu_coords) == 0}
    dropped = tuple(sorted(c.id for c in d.colors if c.id not in kept))
    monoid = WeightMonoid.from_generators(
        d.weight_monoid.generators + (vneg(mu),), d.ambient.ambient_rank)
    return LocalizationResult(
        levi=levi,
        section_datum=_section(d, levi, kept, monoid),
        dropped_colors=dropped,
        notes=(f"localized at weight {mu}; the monoid gained {vneg(mu)}",),
    )


def localize_at_divisors(d: SphericalDatum, dropped: Iterable[str],
                         levi: Iterable[int]) -> LocalizationResult:
    """Localize at an explicit divisor set with its stabilizer Levi given.

    No weight is supplied, so the monoid transfer rule does not apply and
    the weight monoid is carried over unchanged (noted in the result).
    """
    dropped = list(dropped)
    known = {c.id for c in d.colors}
    for cid in dropped:
        if cid not in known:
            raise InvalidInputError(f"unknown color id {cid!r}")
    levi_set = d.ambient.check_parabolic(levi)
    kept = known - set(dropped)
    notes = ("weight monoid carried over unchanged (no localization weight)",) \
        if d.weight_monoid is not None else ()
    return LocalizationResult(
        levi=levi_set,
        section_datum=_section(d, levi_set, kept, d.weight_monoid),
        dropped_colors=tuple(sorted(set(dropped))),
        notes=notes,
    )
