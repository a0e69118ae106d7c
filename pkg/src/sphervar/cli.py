"""Command-line surface.

Exit codes: 0 success / predicate true, 1 predicate false (with a diff
report), 2 invalid input, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import catalog_names, get_example
from .compare import (DelzantData, check_affine_hypothesis,
                      check_homogeneous_hypothesis,
                      check_weight_monoid_hypothesis, compare_delzant,
                      aut_group)
from .cones import cone_equal
from .datum import (SphericalDatum, check_chamber, hidden_colors,
                    little_weyl_group, validate_datum, valuation_cone)
from .errors import CapExceededError, InvalidInputError, NotApplicableError
from .localize import localize_at_weight
from .monoid import monoid_equal
from .serialize import parse, serialize

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_INVALID = 2
EXIT_CAP = 3


def _load(arg: str):
    path = Path(arg)
    if path.exists():
        return parse(path.read_text())
    if arg in catalog_names():
        return get_example(arg).datum
    raise InvalidInputError(f"{arg!r} is neither a file nor a catalog entry")


def _load_datum(arg: str) -> SphericalDatum:
    value = _load(arg)
    if not isinstance(value, SphericalDatum):
        raise InvalidInputError(f"{arg!r} does not contain a spherical datum")
    return value


def _load_delzant(arg: str) -> DelzantData:
    path = Path(arg)
    if path.exists():
        value = parse(path.read_text())
        if isinstance(value, DelzantData):
            return value
        raise InvalidInputError(f"{arg!r} does not contain Delzant data")
    if arg in catalog_names():
        entry = get_example(arg)
        if entry.delzant is None:
            raise InvalidInputError(f"catalog entry {arg!r} carries no Delzant data")
        return entry.delzant
    raise InvalidInputError(f"{arg!r} is neither a file nor a catalog entry")


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise InvalidInputError(f"cannot parse integer vector from {text!r}") from None


def _cmd_validate(args) -> int:
    report = validate_datum(_load_datum(args.file))
    print(report)
    return EXIT_TRUE if report.ok else EXIT_FALSE


def _cmd_compare(args) -> int:
    d1, d2 = _load_datum(args.file1), _load_datum(args.file2)
    if args.level == "monoid":
        ok = check_weight_monoid_hypothesis(d1, d2)
        print("weight monoids: " + ("equal" if ok else "differ"))
        if ok:
            print("hypotheses hold: uniqueness for smooth affine spherical "
                  "varieties applies")
        return EXIT_TRUE if ok else EXIT_FALSE
    if args.level == "affine":
        monoid_ok = check_weight_monoid_hypothesis(d1, d2)
        print("weight monoids: " + ("equal" if monoid_ok else "differ"))
        cones_ok = False
        if monoid_ok:
            if d1.weight_lattice != d2.weight_lattice:
                print("weight lattices differ, so the valuation cones live in "
                      "different dual spaces")
            else:
                cones_ok = cone_equal(valuation_cone(d1), valuation_cone(d2))
                print("valuation cones: " + ("equal" if cones_ok else "differ"))
        ok = check_affine_hypothesis(d1, d2)
        if ok:
            print("hypotheses hold: uniqueness for affine spherical varieties "
                  "applies")
        return EXIT_TRUE if ok else EXIT_FALSE
    # homogeneous
    if d1.weight_lattice != d2.weight_lattice:
        print("weight lattices: differ")
        return EXIT_FALSE
    print("weight lattices: equal")
    cones_ok = cone_equal(valuation_cone(d1), valuation_cone(d2))
    print("valuation cones: " + ("equal" if cones_ok else "differ"))
    if not cones_ok:
        return EXIT_FALSE
    bijections = check_homogeneous_hypothesis(d1, d2)
    print(f"color bijections preserving (phi, moved roots): {len(bijections)}")
    for b in bijections[:5]:
        print("  " + ", ".join(f"{a} -> {c}" for a, c in b.pairs))
    if bijections:
        print("hypotheses hold: uniqueness for spherical homogeneous spaces "
              "applies")
        return EXIT_TRUE
    print("colors do not match")
    return EXIT_FALSE


def _cmd_localize(args) -> int:
    d = _load_datum(args.file)
    result = localize_at_weight(d, _parse_vector(args.mu))
    section = result.section_datum
    print("levi simple roots: " + (", ".join(map(str, sorted(result.levi))) or "(none)"))
    print("dropped colors: " + (", ".join(result.dropped_colors) or "(none)"))
    print("section weight lattice basis: " + str([list(r) for r in section.weight_lattice.basis]))
    print("section spherical roots: " + str([list(r.coords) for r in section.spherical_roots]))
    print("section colors: " + (", ".join(
        f"{c.id} (phi={list(c.phi)}, moved={sorted(c.moved_roots)})"
        for c in section.colors) or "(none)"))
    if section.weight_monoid is not None:
        print("section monoid generators: " + str([list(g) for g in section.weight_monoid.generators]))
    for note in result.notes:
        print("note: " + note)
    return EXIT_TRUE


def _cmd_hidden(args) -> int:
    d = _load_datum(args.file)
    reports = hidden_colors(d)
    if not reports:
        print("no colors")
        return EXIT_TRUE
    all_hidden = True
    for r in reports:
        if r.hidden:
            print(f"{r.color.id}: hidden")
        else:
            all_hidden = False
            print(f"{r.color.id}: not hidden "
                  f"(witness mu={list(r.witness)}, pairing={r.witness_pairing})")
    return EXIT_TRUE if all_hidden else EXIT_FALSE


def _cmd_aut(args) -> int:
    d = _load_datum(args.file)
    aut = aut_group(d)
    print(f"equivariant automorphism group: {aut.structure}")
    if aut.order is not None:
        print(f"order: {aut.order}")
    for order, vec in zip(aut.orders, aut.smith_basis):
        kind = "free" if order == 0 else f"order {order}"
        print(f"  character on {list(vec)}: {kind}")
    return EXIT_TRUE


def _cmd_weyl(args) -> int:
    d = _load_datum(args.file)
    group = little_weyl_group(d)
    print(f"little Weyl group order: {group.order}")
    ok = check_chamber(d, args.samples, args.seed)
    print(f"chamber check ({args.samples} samples, seed {args.seed}): "
          + ("ok" if ok else "FAILED"))
    return EXIT_TRUE if ok else EXIT_FALSE


def _cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog_names():
            print(name)
        return EXIT_TRUE
    if not args.name:
        raise InvalidInputError("catalog show needs an entry name")
    entry = get_example(args.name)
    sys.stdout.write(serialize(entry.datum))
    if args.notes:
        for line in entry.provenance:
            print("note: " + line)
    return EXIT_TRUE


def _cmd_delzant(args) -> int:
    m1, m2 = _load_delzant(args.file1), _load_delzant(args.file2)
    ok = compare_delzant(m1, m2)
    if m1.polytope_vertices != m2.polytope_vertices:
        print("moment polytopes: differ")
    else:
        print("moment polytopes: equal")
    if m1.isotropy_label != m2.isotropy_label:
        print("principal isotropy labels: differ")
    else:
        print("principal isotropy labels: equal")
    print("Delzant data " + ("match" if ok else "do not match"))
    return EXIT_TRUE if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sphervar",
        description="exact combinatorial invariants of spherical varieties")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a datum file or catalog entry")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("compare", help="test the uniqueness hypotheses on two data")
    p.add_argument("--level", choices=["monoid", "affine", "homogeneous"],
                   required=True)
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("localize", help="localize a datum at a monoid weight")
    p.add_argument("file")
    p.add_argument("--mu", required=True,
                   help="comma-separated integer vector in ambient coordinates")
    p.set_defaults(func=_cmd_localize)

    p = sub.add_parser("hidden", help="hidden verdict for every color")
    p.add_argument("file")
    p.set_defaults(func=_cmd_hidden)

    p = sub.add_parser("aut", help="equivariant automorphism group")
    p.add_argument("file")
    p.set_defaults(func=_cmd_aut)

    p = sub.add_parser("weyl", help="little Weyl group and chamber check")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_weyl)

    p = sub.add_parser("catalog", help="list or show built-in examples")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.add_argument("--notes", action="store_true",
                   help="also print provenance notes")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("delzant", help="compare two Delzant records")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_delzant)

    return parser


def run_command(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_TRUE if e.code == 0 else EXIT_INVALID
    try:
        return args.func(args)
    except InvalidInputError as e:
        print(f"error: {e}")
        return EXIT_INVALID
    except NotApplicableError as e:
        print(f"error: {e}")
        return EXIT_INVALID
    except CapExceededError as e:
        print(f"error: {e}")
        return EXIT_CAP
    except OSError as e:
        print(f"error: {e}")
        return EXIT_INVALID


def main() -> None:  # console entry point
    sys.exit(run_command())
