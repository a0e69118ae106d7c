"""Finitely generated submonoids of an integer lattice.

Membership is decided by a complete frontier search over nonnegative
integer solutions of the defining linear system: from a partial
combination ``c`` with residual ``r(c) = sum c_i g_i - v`` we only branch
on generators with ``<r(c), g> < 0``, prune any node that dominates a
minimal relation among the generators, and stop at the first exact hit.
This is terminating and complete at desk scale; a node cap turns runaway
searches into CapExceededError rather than a wrong answer.

Hidden test.  A dual vector ``phi`` is *hidden* for a monoid M when
``<phi, mu> > 0`` for every noninvertible ``mu`` in M.  That quantifier
ranges over an infinite set, but it has a finite reformulation: writing U
for the unit group of M,

  * if every generator is a unit then M \\ U is empty and the condition
    holds vacuously;
  * otherwise phi is hidden iff it vanishes on every unit generator and
    is strictly positive on every non-unit generator.

Why: any element outside U must use a non-unit generator (an element all
of whose generators are units is itself a unit), so the conditions are
sufficient; conversely a non-unit generator is itself a noninvertible
element, and if ``<phi, u> != 0`` for a unit ``u`` then ``g + k*u`` or
``g + k*(-u)`` walks ``<phi, .>`` down to zero and below while staying
noninvertible, which also makes the vanishing condition necessary.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import CapExceededError, InvalidInputError
from .lattice import Lattice
from .matrices import Vec, dot, rational_rank, solve_combination, vneg

NODE_CAP = 1_000_000


@dataclass(frozen=True)
class WeightMonoid:
    """Submonoid of Z^ambient_rank given by a finite generator list."""

    ambient_rank: int
    generators: tuple[Vec, ...]  # deduplicated, zero dropped, sorted

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], ambient_rank: int) -> "WeightMonoid":
        out = set()
        for g in gens:
            if len(g) != ambient_rank:
                raise InvalidInputError(
                    f"monoid generator has length {len(g)}, expected {ambient_rank}")
            t = tuple(int(x) for x in g)
            if any(t):
                out.add(t)
        return cls(ambient_rank, tuple(sorted(out)))


@lru_cache(maxsize=4096)
def _generator_lattice(m: "WeightMonoid") -> Lattice:
    return Lattice.from_generators(m.generators, m.ambient_rank)

    def __repr__(self) -> str:  # pragma: no cover
        return f"WeightMonoid({len(self.generators)} generators in Z^{self.ambient_rank})"


@lru_cache(maxsize=4096)
def _minimal_relations(gens: tuple[Vec, ...], node_cap: int) -> tuple[Vec, ...]:
    """Minimal nonzero solutions of ``sum c_i g_i = 0`` with c >= 0
    (classic frontier search from the unit vectors)."""
    k = len(gens)
    if k == 0 or rational_rank(gens) == k:
        return ()  # independent generators admit no nonzero relation
    zero = tuple([0] * len(gens[0]))
    minimal: list[Vec] = []
    queue: deque[tuple[Vec, Vec]] = deque()
    seen = set()
    for j, g in enumerate(gens):
        c = tuple(int(i == j) for i in range(k))
        queue.append((c, g))
        seen.add(c)
    while queue:
        c, r = queue.popleft()
        if r == zero:
            if not any(all(x >= y for x, y in zip(c, s)) for s in minimal):
                minimal.append(c)
            continue
        for j, g in enumerate(gens):
            if dot(r, g) >= 0:
                continue
            c2 = tuple(x + int(i == j) for i, x in enumerate(c))
            if c2 in seen:
                continue
            if any(all(x >= y for x, y in zip(c2, s)) for s in minimal):
                continue
            seen.add(c2)
            if len(seen) > node_cap:
                raise CapExceededError("relation search exceeded the node cap")
            queue.append((c2, tuple(a + b for a, b in zip(r, g))))
    return tuple(minimal)


def monoid_contains(m: WeightMonoid, v: Sequence[int], node_cap: int = NODE_CAP
                    ) -> Vec | None:
    """Witness coefficients with ``sum c_i g_i == v``, or None.

    The search explores combinations breadth first, so the returned
    witness has minimal coefficient sum among all representations.
    """
    if len(v) != m.ambient_rank:
        raise InvalidInputError(
            f"vector has length {len(v)}, expected {m.ambient_rank}")
    gens = m.generators
    k = len(gens)
    target = tuple(int(x) for x in v)
    start = tuple([0] * k)
    if not any(target):
        return start
    if not _generator_lattice(m).contains(target):
        return None  # not even an unconstrained integer combination
    if rational_rank(gens) == k:
        # independent generators: the combination is unique, no search
        x = solve_combination(gens, target)
        if x is None or any(c.denominator != 1 or c < 0 for c in x):
            return None
        return tuple(int(c) for c in x)
    relations = _minimal_relations(gens, node_cap)
    residual0 = vneg(target)  # r(c) = sum c_i g_i - v
    queue: deque[tuple[Vec, Vec]] = deque([(start, residual0)])
    seen = {start}
    while queue:
        c, r = queue.popleft()
        if not any(r):
            return c
        for j, g in enumerate(gens):
            if dot(r, g) >= 0:
                continue
            c2 = tuple(x + int(i == j) for i, x in enumerate(c))
            if c2 in seen:
                continue
            if any(all(x >= y for x, y in zip(c2, s)) for s in relations):
                continue
            seen.add(c2)
            if len(seen) > node_cap:
                raise CapExceededError("membership search exceeded the node cap")
            queue.append((c2, tuple(a + b for a, b in zip(r, g))))
    return None


def units(m: WeightMonoid) -> Lattice:
    """The group of invertible elements, as a lattice.

    A generator is a unit exactly when its negative is in the monoid, and
    any invertible sum can only use invertible generators, so the unit set
    is the lattice generated by the unit generators.
    """
    unit_gens = [g for g in m.generators if monoid_contains(m, vneg(g)) is not None]
    return Lattice.from_generators(unit_gens, m.ambient_rank)


def monoid_equal(m1: WeightMonoid, m2: WeightMonoid) -> bool:
    """Equality as subsets, by mutual containment of generator lists."""
    if m1.ambient_rank != m2.ambient_rank:
        raise InvalidInputError("monoid_equal: ambient rank mismatch")
    return (all(monoid_contains(m2, g) is not None for g in m1.generators)
            and all(monoid_contains(m1, g) is not None for g in m2.generators))


@dataclass(frozen=True)
class HiddenResult:
    hidden: bool
    witness: Vec | None  # a noninvertible monoid element with pairing <= 0


def is_hidden(phi: Sequence[int], m: WeightMonoid) -> HiddenResult:
    """Closed-form hidden test (see the module docstring for the lemma).

    When the verdict is False the result carries an explicit witness: a
    noninvertible monoid element mu with ``<phi, mu> <= 0``.
    """
    if len(phi) != m.ambient_rank:
        raise InvalidInputError(
            f"dual vector has length {len(phi)}, expected {m.ambient_rank}")
    unit_lattice = units(m)
    nonunit_gens = [g for g in m.generators if not unit_lattice.contains(g)]
    if not nonunit_gens:
        return HiddenResult(True, None)  # no noninvertible elements at all
    worst = min(nonunit_gens, key=lambda g: dot(phi, g))
    if dot(phi, worst) <= 0:
        return HiddenResult(False, worst)
    for u in m.generators:
        if u in nonunit_gens:
            continue
        val = dot(phi, u)
        if val == 0:
            continue
        down = u if val < 0 else vneg(u)  # unit direction with negative pairing
        step = -dot(phi, down)
        k = (dot(phi, worst) + step - 1) // step
        witness = tuple(a + k * b for a, b in zip(worst, down))
        return HiddenResult(False, witness)
    return HiddenResult(True, None)
