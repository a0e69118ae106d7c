import random

import pytest
from hypothesis import given, settings, strategies as st

from datagen import pick_nonunit_mu, random_datum
from sphervar.datum import ColorRecord, SphericalDatum, SphericalRoot
from sphervar.errors import InvalidInputError
from sphervar.lattice import Lattice
from sphervar.localize import localize_at_divisors, localize_at_weight
from sphervar.matrices import dot, in_rational_span, vneg
from sphervar.monoid import WeightMonoid, monoid_contains
from sphervar.rootsys import build_root_system


def a2_datum():
    rs = build_root_system("A2")
    lat = Lattice.from_generators(list(rs.simple_roots), 2)
    return SphericalDatum(
        ambient=rs,
        weight_lattice=lat,
        spherical_roots=tuple(SphericalRoot(r) for r in rs.simple_roots),
        colors=(ColorRecord("C_zero", (0, 1), frozenset({0})),
                ColorRecord("C_two", (2, 0), frozenset({0, 1}))),
        weight_monoid=WeightMonoid.from_generators(list(rs.simple_roots), 2),
    )


class TestLocalizeAtWeight:
    def test_monoid_gains_minus_mu(self):
        rs = build_root_system([], torus_rank=2)
        d = SphericalDatum(rs, Lattice.standard(2), (), (),
                           WeightMonoid.from_generators([(1, 0), (0, 1)], 2))
        res = localize_at_weight(d, (1, 0))
        assert res.section_datum.weight_monoid.generators == ((-1, 0), (0, 1), (1, 0))

    def test_levi_and_root_restriction(self):
        # mu = alpha_1 + 2 alpha_2 = (0, 3) pairs to 0 with coroot 0 only
        d = a2_datum()
        mu = (0, 3)
        res = localize_at_weight(d, mu)
        assert res.levi == {0}
        assert [r.coords for r in res.section_datum.spherical_roots] == [(2, -1)]

    def test_color_filter_by_pairing(self):
        # canonical basis of the A2 root lattice is ((1,1), (0,3))
        d = a2_datum()
        mu = (0, 3)  # lattice coords (0, 1): phi (0,1) -> 1, phi (2,0) -> 0
        res = localize_at_weight(d, mu)
        assert res.dropped_colors == ("C_zero",)
        kept = res.section_datum.colors[0]
        assert kept.id == "C_two"
        assert kept.moved_roots == frozenset({0})  # was {0, 1}, cut by the Levi
        mu2 = (3, 0)  # lattice coords (3, -1): both phi values nonzero
        res2 = localize_at_weight(d, mu2)
        assert res2.dropped_colors == ("C_two", "C_zero")
        # a color with phi annihilating mu survives with moved roots cut down
        d3 = a2_datum()
        mu3 = (1, 1)  # lattice coords (1, 0)
        d3 = SphericalDatum(d3.ambient, d3.weight_lattice, d3.spherical_roots,
                            (ColorRecord("keep", (0, 1), frozenset({0, 1})),
                             ColorRecord("drop", (1, 0), frozenset({1}))),
                            d3.weight_monoid)
        res3 = localize_at_weight(d3, mu3)
        assert res3.dropped_colors == ("drop",)
        assert res3.levi == frozenset()
        kept3 = res3.section_datum.colors[0]
        assert kept3.id == "keep"
        assert kept3.phi == (0, 1)
        assert kept3.moved_roots == frozenset()

    def test_rule_a_lattice_identity(self):
        d = a2_datum()
        res = localize_at_weight(d, (1, 1))
        assert res.section_datum.weight_lattice is d.weight_lattice

    def test_requires_monoid(self):
        d = a2_datum()
        bare = SphericalDatum(d.ambient, d.weight_lattice, d.spherical_roots,
                              d.colors, None)
        with pytest.raises(InvalidInputError):
            localize_at_weight(bare, (1, 1))

    def test_rejects_non_element(self):
        with pytest.raises(InvalidInputError):
            localize_at_weight(a2_datum(), (1, 0))

    def test_rejects_unit(self):
        rs = build_root_system([], torus_rank=1)
        d = SphericalDatum(rs, Lattice.standard(1), (), (),
                           WeightMonoid.from_generators([(1,), (-1,)], 1))
        with pytest.raises(InvalidInputError):
            localize_at_weight(d, (1,))
        assert localize_at_weight(d, (1,), allow_unit=True).levi == frozenset()

    def test_idempotence(self):
        d = a2_datum()
        first = localize_at_weight(d, (0, 3))
        second = localize_at_weight(first.section_datum, (0, 3), allow_unit=True)
        assert second.section_datum == first.section_datum
        assert second.dropped_colors == ()


class TestLocalizeAtDivisors:
    def test_identity_localization(self):
        d = a2_datum()
        res = localize_at_divisors(d, [], {0, 1})
        assert res.section_datum == d
        assert res.dropped_colors == ()

    def test_drop_everything(self):
        d = a2_datum()
        res = localize_at_divisors(d, [c.id for c in d.colors], frozenset())
        assert res.section_datum.colors == ()
        assert res.section_datum.spherical_roots == ()

    def test_span_membership_restriction(self):
        # A3 with roots alpha_1 and alpha_1 + alpha_2; keep the Levi {0, 2}
        rs = build_root_system("A3")
        a1, a2 = rs.simple_root(0), rs.simple_root(1)
        sum12 = tuple(x + y for x, y in zip(a1, a2))
        lat = Lattice.from_generators([a1, sum12], 3)
        d = SphericalDatum(rs, lat,
                           (SphericalRoot(a1), SphericalRoot(sum12)), ())
        res = localize_at_divisors(d, [], {0, 2})
        assert [r.coords for r in res.section_datum.spherical_roots] == [a1]

    def test_monoid_carried_with_note(self):
        d = a2_datum()
        res = localize_at_divisors(d, [], {0})
        assert res.section_datum.weight_monoid == d.weight_monoid
        assert any("unchanged" in n for n in res.notes)

    def test_unknown_color(self):
        with pytest.raises(InvalidInputError):
            localize_at_divisors(a2_datum(), ["nope"], {0})

    def test_unknown_levi_index(self):
        with pytest.raises(InvalidInputError):
            localize_at_divisors(a2_datum(), [], {5})


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 100_000))
def test_localization_laws_random(seed):
    rng = random.Random(seed)
    d = random_datum(rng, with_monoid=True, min_colors=1)
    mu = pick_nonunit_mu(rng, d)
    if mu is None:
        return
    res = localize_at_weight(d, mu)
    section = res.section_datum
    # rule (A): identical lattice
    assert section.weight_lattice == d.weight_lattice
    # monotonicity
    assert {c.id for c in section.colors} <= {c.id for c in d.colors}
    assert set(section.spherical_roots) <= set(d.spherical_roots)
    for g in d.weight_monoid.generators:
        assert monoid_contains(section.weight_monoid, g) is not None
    # color filter matches the pairing rule
    mu_c = d.weight_lattice.coords(mu)
    expected_kept = {c.id for c in d.colors if dot(c.phi, mu_c) == 0}
    assert {c.id for c in section.colors} == expected_kept
    assert set(res.dropped_colors) == {c.id for c in d.colors} - expected_kept
    # levi is the stabilizer and the surviving roots sit in its span
    assert res.levi == d.ambient.stabilizer_levi_of_weight(mu)
    levi_simple = [d.ambient.simple_root(i) for i in sorted(res.levi)]
    for r in section.spherical_roots:
        assert in_rational_span(levi_simple, r.coords)
    # the monoid gained -mu
    assert monoid_contains(section.weight_monoid, vneg(mu)) is not None
    # idempotence
    again = localize_at_weight(section, mu, allow_unit=True)
    assert again.section_datum == section
    # consistency with the divisor form plus rule (D) by hand
    dropped = [c.id for c in d.colors if dot(c.phi, mu_c) != 0]
    via_divisors = localize_at_divisors(d, dropped, res.levi)
    rebuilt = via_divisors.section_datum
    from sphervar.monoid import WeightMonoid as WM
    manual_monoid = WM.from_generators(
        d.weight_monoid.generators + (vneg(mu),), d.ambient.ambient_rank)
    assert rebuilt.weight_lattice == section.weight_lattice
    assert rebuilt.spherical_roots == section.spherical_roots
    assert rebuilt.colors == section.colors
    assert manual_monoid == section.weight_monoid
