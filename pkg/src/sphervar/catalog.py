"""Built-in worked examples.

Every entry is a fully populated datum that passes validation and the
chamber check; provenance strings record how the numbers were derived.
Vectors follow the package-wide coordinate conventions (ambient weight
coordinates; phi in the dual of the weight lattice basis).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .compare import DelzantData
from .datum import ColorRecord, SphericalDatum, SphericalRoot
from .errors import InvalidInputError
from .lattice import Lattice
from .monoid import WeightMonoid
from .rootsys import build_root_system


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    datum: SphericalDatum
    provenance: tuple[str, ...]
    delzant: DelzantData | None = None


def _sl2_mod_torus() -> CatalogEntry:
    # SL(2)/GL(1): rank one, two colors, both hidden.
    rs = build_root_system("A1")
    alpha = (2,)  # the simple root in fundamental-weight coordinates
    datum = SphericalDatum(
        ambient=rs,
        weight_lattice=Lattice.from_generators([alpha], 1),
        spherical_roots=(SphericalRoot(alpha, doubling=2),),
        colors=(ColorRecord("D_plus", (1,), frozenset({0})),
                ColorRecord("D_minus", (1,), frozenset({0}))),
        weight_monoid=WeightMonoid.from_generators([alpha], 1),
    )
    return CatalogEntry(
        "sl2_mod_torus", datum,
        ("open orbit of P^1 x P^1 for the diagonal-torus quotient of SL(2); "
         "regular functions carry each even highest weight once, so the "
         "monoid is N*alpha",
         "the two coordinate-hyperplane pullbacks give two colors, each "
         "pairing to 1 with alpha and moved by the unique simple root; both "
         "are hidden because the monoid has no nontrivial units",
         "doubling 2: the equivariant automorphism group is the order-two "
         "torus normalizer quotient, so the doubled root spans an index-two "
         "sublattice"),
    )


def _sl_n_mod_gl_n_minus_1(n: int) -> CatalogEntry:
    # SL(n)/GL(n-1) via lines and hyperplanes in general position.
    rs = build_root_system(f"A{n - 1}")
    theta = [0] * (n - 1)
    theta[0] += 1
    theta[-1] += 1
    theta = tuple(theta)  # highest root = sum of all simple roots
    datum = SphericalDatum(
        ambient=rs,
        weight_lattice=Lattice.from_generators([theta], n - 1),
        spherical_roots=(SphericalRoot(theta, doubling=1),),
        colors=(ColorRecord("D_line", (1,), frozenset({n - 2})),
                ColorRecord("D_hyperplane", (1,), frozenset({0}))),
        weight_monoid=WeightMonoid.from_generators([theta], n - 1),
    )
    return CatalogEntry(
        f"sl{n}_mod_gl{n - 1}", datum,
        (f"pairs (line, hyperplane) in general position in K^{n}: the open "
         "orbit of P(V) x P(V*); rank one with the highest root as "
         "spherical root",
         "one color from each projective factor, each pairing to 1 with "
         "the spherical root; both hidden since the monoid is a free ray",
         "doubling 1: the subgroup is self normalizing, so the automorphism "
         "group is trivial and the root lattice is the full weight lattice"),
    )


def _so3_smooth_quadric() -> CatalogEntry:
    rs = build_root_system("A1")
    alpha = (2,)
    datum = SphericalDatum(
        ambient=rs,
        weight_lattice=Lattice.from_generators([alpha], 1),
        spherical_roots=(SphericalRoot(alpha, doubling=2),),
        colors=(ColorRecord("D_plus", (1,), frozenset({0})),
                ColorRecord("D_minus", (1,), frozenset({0}))),
        weight_monoid=WeightMonoid.from_generators([alpha], 1),
    )
    return CatalogEntry(
        "so3_smooth_quadric", datum,
        ("the smooth fiber {q = 1} of an invariant quadratic form on the "
         "three-dimensional SO(3)-module; every irreducible module occurs "
         "once, giving monoid N*alpha",
         "homogeneous: the stabilizer of a non-isotropic vector is a torus, "
         "and the highest-weight coordinate cuts two order-one divisors, "
         "giving two colors with pairing 1"),
    )


def _so3_nilcone() -> CatalogEntry:
    rs = build_root_system("A1")
    alpha = (2,)
    datum = SphericalDatum(
        ambient=rs,
        weight_lattice=Lattice.from_generators([alpha], 1),
        spherical_roots=(),
        colors=(ColorRecord("D0", (2,), frozenset({0})),),
        weight_monoid=WeightMonoid.from_generators([alpha], 1),
    )
    return CatalogEntry(
        "so3_nilcone", datum,
        ("the singular fiber {q = 0}: same module structure as the smooth "
         "fiber (monoid N*alpha), but the open orbit is horospherical, so "
         "there are no spherical roots and the valuation cone is the whole "
         "line",
         "one color: the highest-weight coordinate vanishes to order two "
         "on it, so phi pairs to 2 with alpha"),
    )


def _group_case(name: str, factors, lattice_rows, roots, colors, monoid_rows,
                provenance) -> CatalogEntry:
    rs = build_root_system(factors)
    n = rs.ambient_rank
    datum = SphericalDatum(
        ambient=rs,
        weight_lattice=Lattice.from_generators(lattice_rows, n),
        spherical_roots=tuple(roots),
        colors=tuple(colors),
        weight_monoid=WeightMonoid.from_generators(monoid_rows, n),
    )
    return CatalogEntry(name, datum, provenance)


def _group_case_sl2() -> CatalogEntry:
    # SL(2) under two-sided multiplication by SL(2) x SL(2).
    return _group_case(
        "group_case_sl2", ["A1", "A1"],
        lattice_rows=[(1, 1)],
        roots=(SphericalRoot((1, 1), doubling=2, coroot=(2,)),),
        colors=(ColorRecord("D_alpha", (1,), frozenset({0, 1})),),
        monoid_rows=[(1, 1)],
        provenance=(
            "group case H = SL(2): highest weights of regular functions are "
            "the diagonal pairs (m, m), so the weight lattice matches the "
            "weight lattice of H and the monoid is its dominant ray",
            "doubled spherical root = the simple root of H = twice the "
            "primitive generator, hence doubling 2 and an order-two "
            "automorphism group (the center of H)",
            "single color from the Bruhat divisor, pairing 1, moved by both "
            "simple roots"),
    )


def _group_case_sl3() -> CatalogEntry:
    # SL(3) under two-sided multiplication.
    return _group_case(
        "group_case_sl3", ["A2", "A2"],
        lattice_rows=[(1, 0, 0, 1), (0, 1, 1, 0)],
        roots=(SphericalRoot((2, -1, -1, 2), doubling=1),
               SphericalRoot((-1, 2, 2, -1), doubling=1)),
        colors=(ColorRecord("D_alpha1", (1, 0), frozenset({0, 3})),
                ColorRecord("D_alpha2", (0, 1), frozenset({1, 2}))),
        monoid_rows=[(1, 0, 0, 1), (0, 1, 1, 0)],
        provenance=(
            "group case H = SL(3): weights (lambda, lambda*) identify the "
            "weight lattice with the weight lattice of H; the monoid is "
            "generated by the two fundamental pairs",
            "doubled spherical roots = simple roots of H embedded "
            "diagonally; they are already primitive, so doubling 1 and the "
            "automorphism group is the order-three center",
            "two Bruhat colors, one per simple root of H"),
    )


def _group_case_pgl2() -> CatalogEntry:
    # PGL(2) under two-sided multiplication.
    return _group_case(
        "group_case_pgl2", ["A1", "A1"],
        lattice_rows=[(2, 2)],
        roots=(SphericalRoot((2, 2), doubling=1, coroot=(2,)),),
        colors=(ColorRecord("D_alpha", (2,), frozenset({0, 1})),),
        monoid_rows=[(2, 2)],
        provenance=(
            "group case H = PGL(2): the weight lattice of H is its root "
            "lattice, embedded diagonally",
            "the doubled spherical root equals the primitive generator, so "
            "the root lattice is everything: H is centerless and the space "
            "has no nontrivial equivariant automorphisms"),
    )


@lru_cache(maxsize=1)
def _entries() -> dict[str, CatalogEntry]:
    entries = [
        _sl2_mod_torus(),
        _sl_n_mod_gl_n_minus_1(3),
        _sl_n_mod_gl_n_minus_1(4),
        _so3_smooth_quadric(),
        _so3_nilcone(),
        _group_case_sl2(),
        _group_case_sl3(),
        _group_case_pgl2(),
    ]
    return {e.name: e for e in entries}


def catalog_names() -> list[str]:
    return sorted(_entries())


def get_example(name: str) -> CatalogEntry:
    try:
        return _entries()[name]
    except KeyError:
        raise InvalidInputError(
            f"unknown catalog entry {name!r}; known: {', '.join(catalog_names())}"
        ) from None
