"""JSON interchange format.

A datum document looks like

    {
      "ambient": {"factors": [["A", 1], ["A", 1]], "torus_rank": 0},
      "weight_lattice": [[1, 1]],
      "spherical_roots": [{"coords": [1, 1], "doubling": 2, "coroot": [2]}],
      "colors": [{"id": "D", "phi": [1], "moved_roots": [0, 1]}],
      "weight_monoid": [[1, 1]]
    }

and a Delzant document is ``{"vertices": [...], "isotropy_label": "..."}``.
All vectors are in ambient weight coordinates except ``phi`` and
``coroot``, which live in the dual of the weight lattice's canonical
basis.  Rationals are encoded as integers or strings like ``"3/2"``.
Serialization is canonical: structurally equal values produce
byte-identical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .compare import DelzantData
from .datum import ColorRecord, SphericalDatum, SphericalRoot
from .errors import InvalidInputError
from .lattice import Lattice
from .monoid import WeightMonoid
from .rootsys import build_root_system


def _encode_rational(x) -> int | str:
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _decode_rational(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise InvalidInputError(f"{where}: expected a number, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise InvalidInputError(f"{where}: cannot parse rational {value!r}") from None
    raise InvalidInputError(f"{where}: expected an integer or a 'p/q' string")


def _decode_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"{where}: expected an integer, got {value!r}")
    return value


def _decode_int_vector(value, where: str) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise InvalidInputError(f"{where}: expected a list of integers")
    return tuple(_decode_int(x, f"{where}[{i}]") for i, x in enumerate(value))


def _decode_rational_vector(value, where: str) -> tuple[Fraction, ...]:
    if not isinstance(value, list):
        raise InvalidInputError(f"{where}: expected a list of rationals")
    return tuple(_decode_rational(x, f"{where}[{i}]") for i, x in enumerate(value))


def _require(doc: dict, key: str, where: str = "document") -> Any:
    if key not in doc:
        raise InvalidInputError(f"{where}: missing required field {key!r}")
    return doc[key]


def datum_to_dict(d: SphericalDatum) -> dict:
    if d.ambient.factors is None:
        raise InvalidInputError(
            "ambient root systems obtained by localization are not serializable; "
            "serialize the parent datum instead")
    roots = []
    for r in d.spherical_roots:
        entry: dict[str, Any] = {"coords": list(r.coords), "doubling": r.doubling}
        if r.coroot is not None:
            entry["coroot"] = [_encode_rational(x) for x in r.coroot]
        roots.append(entry)
    doc: dict[str, Any] = {
        "ambient": {"factors": [[fam, rank] for fam, rank in d.ambient.factors],
                    "torus_rank": d.ambient.torus_rank},
        "weight_lattice": [list(row) for row in d.weight_lattice.basis],
        "spherical_roots": roots,
        "colors": [{"id": c.id, "phi": list(c.phi),
                    "moved_roots": sorted(c.moved_roots)} for c in d.colors],
    }
    if d.weight_monoid is not None:
        doc["weight_monoid"] = [list(g) for g in d.weight_monoid.generators]
    return doc


def delzant_to_dict(m: DelzantData) -> dict:
    return {
        "vertices": [[_encode_rational(x) for x in v] for v in m.polytope_vertices],
        "isotropy_label": m.isotropy_label,
    }


def serialize(value: SphericalDatum | DelzantData) -> str:
    if isinstance(value, SphericalDatum):
        doc = datum_to_dict(value)
    elif isinstance(value, DelzantData):
        doc = delzant_to_dict(value)
    else:
        raise InvalidInputError(f"cannot serialize {type(value).__name__}")
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _datum_from_dict(doc: dict) -> SphericalDatum:
    ambient_doc = _require(doc, "ambient")
    if not isinstance(ambient_doc, dict):
        raise InvalidInputError("ambient: expected an object")
    factors = _require(ambient_doc, "factors", "ambient")
    if not isinstance(factors, list):
        raise InvalidInputError("ambient.factors: expected a list")
    torus = _decode_int(ambient_doc.get("torus_rank", 0), "ambient.torus_rank")
    ambient = build_root_system(factors, torus)
    n = ambient.ambient_rank

    rows = _require(doc, "weight_lattice")
    if not isinstance(rows, list):
        raise InvalidInputError("weight_lattice: expected a list of basis rows")
    basis = [_decode_int_vector(row, f"weight_lattice[{i}]") for i, row in enumerate(rows)]
    for i, row in enumerate(basis):
        if len(row) != n:
            raise InvalidInputError(
                f"weight_lattice[{i}]: length {len(row)}, expected ambient rank {n}")
    lattice = Lattice.from_generators(basis, n)

    roots = []
    root_docs = doc.get("spherical_roots", [])
    if not isinstance(root_docs, list):
        raise InvalidInputError("spherical_roots: expected a list")
    for i, rd in enumerate(root_docs):
        where = f"spherical_roots[{i}]"
        if not isinstance(rd, dict):
            raise InvalidInputError(f"{where}: expected an object")
        coords = _decode_int_vector(_require(rd, "coords", where), f"{where}.coords")
        doubling = _decode_int(rd.get("doubling", 1), f"{where}.doubling")
        if doubling not in (1, 2):
            raise InvalidInputError(
                f"{where}.doubling: must be 1 or 2, got {doubling}")
        coroot = None
        if "coroot" in rd:
            coroot = _decode_rational_vector(rd["coroot"], f"{where}.coroot")
        roots.append(SphericalRoot(coords, doubling, coroot))

    colors = []
    color_docs = doc.get("colors", [])
    if not isinstance(color_docs, list):
        raise InvalidInputError("colors: expected a list")
    for i, cd in enumerate(color_docs):
        where = f"colors[{i}]"
        if not isinstance(cd, dict):
            raise InvalidInputError(f"{where}: expected an object")
        cid = _require(cd, "id", where)
        if not isinstance(cid, str):
            raise InvalidInputError(f"{where}.id: expected a string")
        phi = _decode_int_vector(_require(cd, "phi", where), f"{where}.phi")
        moved = _decode_int_vector(_require(cd, "moved_roots", where),
                                   f"{where}.moved_roots")
        colors.append(ColorRecord(cid, phi, frozenset(moved)))

    monoid = None
    if "weight_monoid" in doc:
        gens_doc = doc["weight_monoid"]
        if not isinstance(gens_doc, list):
            raise InvalidInputError("weight_monoid: expected a list of generators")
        gens = [_decode_int_vector(g, f"weight_monoid[{i}]")
                for i, g in enumerate(gens_doc)]
        for i, g in enumerate(gens):
            if len(g) != n:
                raise InvalidInputError(
                    f"weight_monoid[{i}]: length {len(g)}, expected ambient rank {n}")
        monoid = WeightMonoid.from_generators(gens, n)

    return SphericalDatum(ambient, lattice, tuple(roots), tuple(colors), monoid)


def _delzant_from_dict(doc: dict) -> DelzantData:
    vertices = _require(doc, "vertices")
    if not isinstance(vertices, list) or not vertices:
        raise InvalidInputError("vertices: expected a nonempty list")
    decoded = [_decode_rational_vector(v, f"vertices[{i}]")
               for i, v in enumerate(vertices)]
    label = _require(doc, "isotropy_label")
    if not isinstance(label, str):
        raise InvalidInputError("isotropy_label: expected a string")
    return DelzantData.from_vertices(decoded, label)


def parse(text: str) -> SphericalDatum | DelzantData:
    """Parse a JSON document into a datum or a Delzant record."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"invalid JSON at line {e.lineno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise InvalidInputError("document: expected a JSON object")
    if "vertices" in doc:
        return _delzant_from_dict(doc)
    if "ambient" in doc:
        return _datum_from_dict(doc)
    raise InvalidInputError(
        "document: expected either an 'ambient' (datum) or 'vertices' (Delzant) field")
