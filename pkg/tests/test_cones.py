import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sphervar.cones import Cone, cone_equal, dual_description
from sphervar.errors import CapExceededError, InvalidInputError


class TestConvert:
    def test_nonpositive_orthant(self):
        c = Cone.from_inequalities([(-1, 0), (0, -1)], 2)
        assert c.generators == ((-1, 0), (0, -1))

    def test_halfplane_from_generators(self):
        c = Cone.from_generators([(1, 0), (-1, 0), (0, 1)], 2)
        assert c.inequalities == ((0, 1),)

    def test_full_space(self):
        c = Cone.from_inequalities([], 2)
        assert c.generators == ((-1, 0), (0, -1), (0, 1), (1, 0))
        assert c.inequalities == ()

    def test_square_cone_has_four_rays(self):
        c = Cone.from_inequalities([(-1, 0, 1), (1, 0, 1), (0, -1, 1), (0, 1, 1)], 3)
        assert c.generators == ((-1, -1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, 1))
        assert len(c.inequalities) == 4

    def test_redundant_generator_dropped(self):
        c1 = Cone.from_generators([(1, 0), (0, 1)], 2)
        c2 = Cone.from_generators([(1, 0), (0, 1), (1, 1)], 2)
        assert c1 == c2

    def test_point_cone(self):
        c = Cone.from_generators([], 2)
        assert c.generators == ()
        assert c.contains((0, 0))
        assert not c.contains((1, 0))

    def test_rank_cap(self):
        with pytest.raises(CapExceededError):
            Cone.from_inequalities([], 9)

    def test_lower_dimensional_cone(self):
        # the ray (1, 1) alone: needs the equality x = y among inequalities
        c = Cone.from_generators([(1, 1)], 2)
        assert c.contains((2, 2))
        assert not c.contains((-1, -1))
        assert not c.contains((1, 0))


class TestContains:
    def test_orthant(self):
        c = Cone.from_inequalities([(-1, 0), (0, -1)], 2)
        assert c.contains((-1, -2))
        assert not c.contains((1, 0))

    def test_full_space_contains_everything(self):
        c = Cone.from_inequalities([], 2)
        for v in [(0, 0), (5, -3), (-1, -1)]:
            assert c.contains(v)

    def test_rational_points(self):
        c = Cone.from_inequalities([(1, -1)], 2)
        assert c.contains((Fraction(1, 2), Fraction(1, 3)))

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInputError):
            Cone.from_inequalities([], 2).contains((1, 2, 3))


class TestEqual:
    def test_canonicalization(self):
        c1 = Cone.from_generators([(1, 0), (0, 1)], 2)
        c2 = Cone.from_generators([(0, 2), (3, 0), (1, 1)], 2)
        assert cone_equal(c1, c2)
        assert c1 == c2

    def test_strictly_smaller(self):
        c1 = Cone.from_inequalities([(-1, 0)], 2)
        c2 = Cone.from_inequalities([(-1, 0), (0, -1)], 2)
        assert not cone_equal(c1, c2)

    def test_full_space_presentations(self):
        c1 = Cone.from_inequalities([], 2)
        c2 = Cone.from_generators([(1, 0), (-1, 0), (0, 1), (0, -1)], 2)
        assert cone_equal(c1, c2)

    def test_rank_mismatch(self):
        with pytest.raises(InvalidInputError):
            cone_equal(Cone.from_inequalities([], 2), Cone.from_inequalities([], 3))


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 100_000))
def test_involution_on_canonical_forms(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    k = rng.randint(0, 4)
    gens = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(k)]
    c = Cone.from_generators(gens, n)
    # converting generators -> inequalities -> generators reproduces the cone
    again = Cone.from_inequalities(c.inequalities, n)
    assert again == c
    back = Cone.from_generators(c.generators, n)
    assert back == c
    # every input generator is inside, and equality agrees with containment
    for g in gens:
        assert c.contains(g)
    assert cone_equal(c, again)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 100_000))
def test_dual_description_solves_the_forms(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    k = rng.randint(0, 4)
    forms = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(k)]
    lin, rays = dual_description(forms, n)
    for b in lin:
        assert all(sum(f[i] * b[i] for i in range(n)) == 0 for f in forms)
    for r in rays:
        assert all(sum(f[i] * r[i] for i in range(n)) >= 0 for f in forms)
        assert any(r)
