"""sphervar: exact combinatorial invariants of spherical varieties.

Lattices, rational polyhedral cones, root systems and reflection groups,
spherical data with their valuation cones and little Weyl groups, weight
monoids with the hidden-color test, Levi localization, the uniqueness
hypothesis comparators, and a small catalog of worked examples.  All
arithmetic is exact.
"""

from .catalog import CatalogEntry, catalog_names, get_example
from .compare import (AutomorphismGroup, ColorBijection, DelzantData,
                      aut_group, check_affine_hypothesis,
                      check_homogeneous_hypothesis,
                      check_weight_monoid_hypothesis, compare_delzant,
                      root_lattice)
from .cones import Cone, cone_equal, dual_description
from .datum import (ColorRecord, ColoredSubspace, SphericalDatum,
                    SphericalRoot, ValidationReport, check_chamber,
                    hidden_colors, little_weyl_group, monoid_in_lattice_coords,
                    spherical_roots_from_cone, valuation_cone, validate_datum,
                    validate_colored_subspace)
from .errors import (CapExceededError, InvalidInputError, NotApplicableError,
                     SphervarError)
from .lattice import AbelianGroupStructure, Lattice, quotient_structure
from .localize import LocalizationResult, localize_at_divisors, localize_at_weight
from .matrices import IntMatrix, det, hnf, snf
from .monoid import (HiddenResult, WeightMonoid, is_hidden, monoid_contains,
                     monoid_equal, units)
from .rootsys import (ReflectionGroup, RootSystem, build_root_system,
                      generate_group, reflect, reflect_dual)
from .serialize import parse, serialize

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupStructure", "AutomorphismGroup", "CapExceededError",
    "CatalogEntry", "ColorBijection", "ColorRecord", "ColoredSubspace",
    "Cone", "DelzantData", "HiddenResult", "IntMatrix", "InvalidInputError",
    "Lattice", "LocalizationResult", "NotApplicableError", "ReflectionGroup",
    "RootSystem", "SphericalDatum", "SphericalRoot", "SphervarError",
    "ValidationReport", "WeightMonoid", "aut_group", "build_root_system",
    "catalog_names", "check_affine_hypothesis", "check_chamber",
    "check_homogeneous_hypothesis", "check_weight_monoid_hypothesis",
    "compare_delzant", "cone_equal", "det", "dual_description",
    "generate_group", "get_example", "hidden_colors", "hnf", "is_hidden",
    "little_weyl_group", "localize_at_divisors", "localize_at_weight",
    "monoid_contains", "monoid_equal", "monoid_in_lattice_coords", "parse",
    "quotient_structure", "reflect", "reflect_dual", "root_lattice",
    "serialize", "snf", "spherical_roots_from_cone", "units",
    "validate_colored_subspace", "validate_datum", "valuation_cone",
]
