import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from datagen import random_datum, random_lattice, random_primitive_independent
from sphervar.cones import Cone, cone_equal
from sphervar.datum import (ColorRecord, ColoredSubspace, SphericalDatum,
                            SphericalRoot, check_chamber, coroot_of,
                            little_weyl_group, spherical_roots_from_cone,
                            validate_colored_subspace, validate_datum,
                            valuation_cone)
from sphervar.errors import (CapExceededError, InvalidInputError,
                             NotApplicableError)
from sphervar.lattice import Lattice
from sphervar.rootsys import apply_map, build_root_system


def a1_datum(**kwargs):
    rs = build_root_system("A1")
    base = dict(
        ambient=rs,
        weight_lattice=Lattice.from_generators([(2,)], 1),
        spherical_roots=(SphericalRoot((2,)),),
        colors=(ColorRecord("D_plus", (1,), frozenset({0})),
                ColorRecord("D_minus", (1,), frozenset({0}))),
        weight_monoid=None,
    )
    base.update(kwargs)
    return SphericalDatum(**base)


def torus_datum(roots, n, colors=(), lattice=None):
    rs = build_root_system([], torus_rank=n)
    return SphericalDatum(
        ambient=rs,
        weight_lattice=lattice or Lattice.standard(n),
        spherical_roots=tuple(SphericalRoot(r) if not isinstance(r, SphericalRoot)
                              else r for r in roots),
        colors=tuple(colors),
    )


class TestValidate:
    def test_rank_one_datum_valid(self):
        assert validate_datum(a1_datum()).ok

    def test_primitivity_failure(self):
        d = torus_datum([(2, 4)], 2)
        report = validate_datum(d)
        assert not report.ok
        assert any("primitive" in f for f in report.failures)

    def test_independence_failure(self):
        d = torus_datum([(1, 0), (2, 0)], 2)
        report = validate_datum(d)
        assert any("dependent" in f for f in report.failures)

    def test_membership_failure(self):
        d = torus_datum([(1, 0)], 2, lattice=Lattice.from_generators([(2, 0)], 2))
        assert any("not in the weight lattice" in f
                   for f in validate_datum(d).failures)

    def test_phi_length_checked(self):
        d = torus_datum([], 2, colors=[ColorRecord("D", (1, 2, 3), frozenset())])
        assert any("phi" in f for f in validate_datum(d).failures)

    def test_moved_roots_checked(self):
        d = a1_datum(colors=(ColorRecord("D", (1,), frozenset({4})),))
        assert any("moved roots" in f for f in validate_datum(d).failures)

    def test_monoid_membership_checked(self):
        from sphervar.monoid import WeightMonoid
        d = a1_datum(weight_monoid=WeightMonoid.from_generators([(1,)], 1))
        assert any("monoid generator" in f for f in validate_datum(d).failures)

    def test_bad_coroot_pairing(self):
        d = torus_datum([SphericalRoot((1, 0), coroot=(3, 0))], 2)
        assert any("expected 2" in f for f in validate_datum(d).failures)

    def test_default_coroot_noted(self):
        report = validate_datum(a1_datum())
        assert any("default" in n for n in report.notes)

    def test_doubling_constructor_guard(self):
        with pytest.raises(InvalidInputError):
            SphericalRoot((1, 0), doubling=3)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 100_000))
    def test_monotone_under_removal(self, seed):
        rng = random.Random(seed)
        d = random_datum(rng, with_monoid=True)
        assert validate_datum(d).ok
        for i in range(len(d.spherical_roots)):
            smaller = SphericalDatum(
                d.ambient, d.weight_lattice,
                d.spherical_roots[:i] + d.spherical_roots[i + 1:],
                d.colors, d.weight_monoid)
            assert validate_datum(smaller).ok
        for i in range(len(d.colors)):
            smaller = SphericalDatum(
                d.ambient, d.weight_lattice, d.spherical_roots,
                d.colors[:i] + d.colors[i + 1:], d.weight_monoid)
            assert validate_datum(smaller).ok


class TestValuationCone:
    def test_horospherical_full_space(self):
        c = valuation_cone(torus_datum([], 2))
        assert c.is_full_space

    def test_orthant(self):
        c = valuation_cone(torus_datum([(1, 0), (0, 1)], 2))
        assert c == Cone.from_inequalities([(-1, 0), (0, -1)], 2)

    def test_halfspace(self):
        c = valuation_cone(torus_datum([(1, -1)], 2))
        assert c == Cone.from_inequalities([(-1, 1)], 2)
        assert c.contains((0, 1))
        assert not c.contains((1, 0))

    def test_invalid_datum_rejected(self):
        with pytest.raises(InvalidInputError):
            valuation_cone(torus_datum([(2, 4)], 2))


class TestRootsFromCone:
    def test_rank_one(self):
        x = Lattice.standard(1)
        v = Cone.from_inequalities([(-1,)], 1)
        assert spherical_roots_from_cone(x, v) == [(1,)]

    def test_full_line_no_roots(self):
        x = Lattice.standard(1)
        v = Cone.from_inequalities([], 1)
        assert spherical_roots_from_cone(x, v) == []

    def test_not_chamber_shape(self):
        x = Lattice.standard(1)
        v = Cone.from_generators([], 1)  # the point cone needs +-1 inequalities
        with pytest.raises(NotApplicableError):
            spherical_roots_from_cone(x, v)

    def test_round_trip_example(self):
        d = torus_datum([(1, 0), (1, 2)], 2)
        roots = spherical_roots_from_cone(d.weight_lattice, valuation_cone(d))
        assert roots == sorted(r.coords for r in d.spherical_roots)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 100_000))
    def test_round_trip_random(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 4)
        lat = random_lattice(rng, n)
        roots = random_primitive_independent(rng, lat, rng.randint(0, lat.rank))
        d = SphericalDatum(build_root_system([], torus_rank=n), lat,
                           tuple(SphericalRoot(r) for r in roots), ())
        recovered = spherical_roots_from_cone(lat, valuation_cone(d))
        assert recovered == sorted(r.coords for r in d.spherical_roots)


class TestLittleWeylGroup:
    def a2_root_lattice_datum(self):
        rs = build_root_system("A2")
        lat = Lattice.from_generators(list(rs.simple_roots), 2)
        return SphericalDatum(rs, lat,
                              tuple(SphericalRoot(r) for r in rs.simple_roots), ())

    def test_a2_default_coroots_order_six(self):
        assert little_weyl_group(self.a2_root_lattice_datum()).order == 6

    def test_single_root_order_two(self):
        assert little_weyl_group(a1_datum()).order == 2

    def test_empty_order_one(self):
        assert little_weyl_group(torus_datum([], 2)).order == 1

    def test_generators_fix_wall_and_negate_coroot(self):
        d = self.a2_root_lattice_datum()
        group = little_weyl_group(d)
        for root, gen in zip(d.spherical_roots, group.generators):
            c = d.weight_lattice.coords(root.coords)
            sigma = coroot_of(d, root)
            assert apply_map(gen, sigma) == tuple(-x for x in sigma)
            # a dual vector on the wall <root, .> = 0 is fixed
            wall = (Fraction(-c[1]), Fraction(c[0]))
            assert apply_map(gen, wall) == wall

    def test_corrupted_coroot_infinite(self):
        d = torus_datum([SphericalRoot((1, 0), coroot=(2, -2)),
                         SphericalRoot((0, 1), coroot=(-2, 2))], 2)
        with pytest.raises(CapExceededError):
            little_weyl_group(d, cap=300)

    def test_missing_coroot_rejected(self):
        # outside the (empty) root lattice of a torus and no explicit coroot
        d = torus_datum([(1, 0)], 2)
        with pytest.raises(InvalidInputError):
            little_weyl_group(d)


class TestChamber:
    def test_a2(self):
        d = TestLittleWeylGroup().a2_root_lattice_datum()
        assert check_chamber(d, 100, seed=1)

    def test_halfspace_tiles_plane(self):
        d = torus_datum([SphericalRoot((1, 0), coroot=(2, 0))], 2)
        assert check_chamber(d, 100, seed=0)

    def test_error_path_propagates(self):
        d = torus_datum([SphericalRoot((1, 0), coroot=(2, -2)),
                         SphericalRoot((0, 1), coroot=(-2, 2))], 2)
        with pytest.raises(CapExceededError):
            check_chamber(d, 10, seed=0, cap=300)

    def test_indicator_sums_to_one(self):
        d = TestLittleWeylGroup().a2_root_lattice_datum()
        group = little_weyl_group(d)
        cone = valuation_cone(d)
        identity = tuple(tuple(Fraction(int(i == j)) for j in range(2))
                         for i in range(2))
        rng = random.Random(3)
        for _ in range(50):
            v = tuple(rng.randint(-1000, 1000) for _ in range(2))
            on_wall = not any(v) or any(
                apply_map(g, v) == tuple(map(Fraction, v))
                for g in group.elements if g != identity)
            if on_wall:
                continue
            hits = sum(1 for g in group.elements if cone.contains(apply_map(g, v)))
            assert hits == 1


class TestColoredSubspace:
    def test_trivial_valid(self):
        report = validate_colored_subspace(a1_datum(), ColoredSubspace((), frozenset()))
        assert report.ok
        assert any("not verified" in n for n in report.notes)

    def test_dependent_basis(self):
        cs = ColoredSubspace(((Fraction(1),), (Fraction(2),)), frozenset())
        assert not validate_colored_subspace(a1_datum(), cs).ok

    def test_unknown_color(self):
        cs = ColoredSubspace((), frozenset({"nope"}))
        report = validate_colored_subspace(a1_datum(), cs)
        assert any("does not resolve" in f for f in report.failures)


class TestCanonicalOrdering:
    def test_roots_and_colors_sorted(self):
        d = torus_datum([(0, 1), (1, 0)], 2,
                        colors=[ColorRecord("b", (2, 0), frozenset()),
                                ColorRecord("a", (1, 0), frozenset())])
        assert [r.coords for r in d.spherical_roots] == [(0, 1), (1, 0)]
        assert [c.id for c in d.colors] == ["a", "b"]
