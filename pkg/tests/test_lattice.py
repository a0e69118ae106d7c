import random

import pytest
from hypothesis import given, settings, strategies as st

from datagen import brute_force_lattice_contains
from sphervar.errors import InvalidInputError
from sphervar.lattice import AbelianGroupStructure, Lattice, quotient_structure
from sphervar.matrices import IntMatrix, det


def L(rows, n):
    return Lattice.from_generators(rows, n)


class TestContains:
    def test_diagonal(self):
        lat = L([(2, 0), (0, 1)], 2)
        assert lat.contains((4, 3))
        assert not lat.contains((1, 0))

    def test_worked_example(self):
        # (2, 0) = (2, 4) - (0, 4) and (0, 4) = r2 - 3 r1
        assert L([(2, 4), (6, 8)], 2).contains((2, 0))

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInputError):
            L([(2, 0)], 2).contains((1, 0, 0))

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 10_000))
    def test_agrees_with_brute_force(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 3)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(rng.randint(1, 3))]
        lat = L(rows, n)
        v = tuple(rng.randint(-6, 6) for _ in range(n))
        if brute_force_lattice_contains(lat, v):
            assert lat.contains(v)

    def test_coords_roundtrip(self):
        lat = L([(2, 4), (6, 8)], 2)
        for v in [(2, 0), (0, 4), (2, 4)]:
            c = lat.coords(v)
            assert c is not None
            assert lat.from_coords(c) == v


class TestPrimitive:
    def test_standard(self):
        z2 = Lattice.standard(2)
        assert z2.is_primitive((1, 2))
        assert not z2.is_primitive((2, 4))

    def test_sublattice_scaling(self):
        # (2, 0) is a basis vector of 2Z x Z, hence primitive there
        lat = L([(2, 0), (0, 1)], 2)
        assert lat.is_primitive((2, 0))

    def test_zero_not_primitive(self):
        assert not Lattice.standard(2).is_primitive((0, 0))

    def test_outside_raises(self):
        with pytest.raises(InvalidInputError):
            L([(2, 0)], 2).is_primitive((1, 0))


class TestQuotient:
    def test_index_two(self):
        q = quotient_structure(Lattice.standard(2), L([(2, 0), (0, 1)], 2))
        assert (q.free_rank, q.invariant_factors) == (0, (2,))

    def test_free_part(self):
        # SNF of the 1x2 generator matrix
        q = quotient_structure(Lattice.standard(2), L([(2, 0)], 2))
        assert (q.free_rank, q.invariant_factors) == (1, (2,))

    def test_trivial(self):
        x = L([(1, 2), (0, 3)], 2)
        q = quotient_structure(x, x)
        assert (q.free_rank, q.invariant_factors) == (0, ())
        assert q.order == 1

    def test_containment_checked(self):
        with pytest.raises(InvalidInputError):
            quotient_structure(L([(2, 0)], 2), Lattice.standard(2))

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 10_000))
    def test_order_equals_index_determinant(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 3)
        x = Lattice.standard(n)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        sub = L(rows, n)
        if sub.rank < n:
            return
        q = quotient_structure(x, sub)
        assert q.free_rank == 0
        coords = IntMatrix.from_rows([x.coords(r) for r in sub.basis], n)
        assert q.order == abs(det(coords))


class TestAbelianGroupStructure:
    def test_chain_enforced(self):
        with pytest.raises(InvalidInputError):
            AbelianGroupStructure(0, (2, 3))
        with pytest.raises(InvalidInputError):
            AbelianGroupStructure(0, (1,))
        assert AbelianGroupStructure(0, (2, 4)).order == 8
        assert AbelianGroupStructure(1, ()).order is None

    def test_str(self):
        assert str(AbelianGroupStructure(0, ())) == "trivial"
        assert str(AbelianGroupStructure(1, (2,))) == "Z^1 x Z/2"
