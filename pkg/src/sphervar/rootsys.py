"""Root system data for the ambient reductive group.

Coordinate model: weights live in Z^(ambient_rank) where the coordinates
are the fundamental-weight basis of each simple factor, concatenated, and
then the central torus coordinates.  In this model a simple coroot is a
standard basis vector, so every pairing <weight, coroot> is a plain dot
product, and the simple roots are the rows of the factor's Cartan matrix
(convention: entry [i][j] is <alpha_i, alpha_j-coroot>).

A parabolic containing the Borel is encoded by its set of simple-root
indices.  Levi subsystems of a root system keep the ambient coordinates
and the original index labels of their simple roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapExceededError, InvalidInputError
from .lattice import Lattice
from .matrices import Vec, dot

QVec = tuple[Fraction, ...]
Matrix = tuple[QVec, ...]

GROUP_CAP = 10_080  # covers every rank <= 4 Weyl group comfortably


# ---------------------------------------------------------------------------
# Cartan data

def _chain(n: int) -> list[list[int]]:
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = -1
            c[i + 1][i] = -1
    return c


def _cartan_and_norms(family: str, rank: int) -> tuple[list[list[int]], list[Fraction]]:
    """Cartan matrix (rows = simple roots in fundamental-weight coordinates)
    and the half norms (alpha_i, alpha_i)/2 fixing the invariant form."""
    one = Fraction(1)
    if family == "A":
        if rank < 1:
            raise InvalidInputError("A_n needs n >= 1")
        return _chain(rank), [one] * rank
    if family == "B":
        if rank < 2:
            raise InvalidInputError("B_n needs n >= 2")
        c = _chain(rank)
        c[rank - 2][rank - 1] = -2
        return c, [one] * (rank - 1) + [Fraction(1, 2)]
    if family == "C":
        if rank < 2:
            raise InvalidInputError("C_n needs n >= 2")
        c = _chain(rank)
        c[rank - 1][rank - 2] = -2
        return c, [one] * (rank - 1) + [Fraction(2)]
    if family == "D":
        if rank < 3:
            raise InvalidInputError("D_n needs n >= 3")
        c = _chain(rank)
        # detach the last node from the chain and hook it to node rank-3
        c[rank - 2][rank - 1] = 0
        c[rank - 1][rank - 2] = 0
        c[rank - 3][rank - 1] = -1
        c[rank - 1][rank - 3] = -1
        return c, [one] * rank
    if family == "E":
        if rank not in (6, 7, 8):
            raise InvalidInputError("E_n needs n in {6, 7, 8}")
        edges = [(0, 2), (2, 3), (3, 4), (1, 3), (4, 5), (5, 6), (6, 7)][: rank + 1]
        edges = [(i, j) for i, j in edges if i < rank and j < rank]
        c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        for i, j in edges:
            c[i][j] = -1
            c[j][i] = -1
        return c, [one] * rank
    if family == "F":
        if rank != 4:
            raise InvalidInputError("F_n needs n = 4")
        c = _chain(4)
        c[1][2] = -2
        return c, [one, one, Fraction(1, 2), Fraction(1, 2)]
    if family == "G":
        if rank != 2:
            raise InvalidInputError("G_n needs n = 2")
        return [[2, -1], [-3, 2]], [one, Fraction(3)]
    raise InvalidInputError(f"unknown Cartan family {family!r}")


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(i for i in range(col, n) if work[i][col] != 0)
        work[col], work[piv] = work[piv], work[col]
        pval = work[col][col]
        work[col] = [x / pval for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return [row[n:] for row in work]


def _parse_factor(spec) -> tuple[str, int]:
    if isinstance(spec, str):
        fam, num = spec[:1].upper(), spec[1:]
        if not num.isdigit():
            raise InvalidInputError(f"cannot parse Cartan type {spec!r}")
        return fam, int(num)
    try:
        fam, rank = spec
        return str(fam).upper(), int(rank)
    except (TypeError, ValueError):
        raise InvalidInputError(f"cannot parse Cartan type {spec!r}") from None


# ---------------------------------------------------------------------------
# root systems

@dataclass(frozen=True)
class RootSystem:
    ambient_rank: int
    root_indices: tuple[int, ...]       # external labels, strictly increasing
    simple_roots: tuple[Vec, ...]       # aligned with root_indices
    simple_coroots: tuple[Vec, ...]
    gram: Matrix                        # invariant inner product on Z^ambient_rank
    factors: tuple[tuple[str, int], ...] | None  # None for a Levi slice
    torus_rank: int

    @property
    def semisimple_rank(self) -> int:
        return len(self.root_indices)

    def _position(self, index: int) -> int:
        try:
            return self.root_indices.index(index)
        except ValueError:
            raise InvalidInputError(f"no simple root with index {index}") from None

    def simple_root(self, index: int) -> Vec:
        return self.simple_roots[self._position(index)]

    def simple_coroot(self, index: int) -> Vec:
        return self.simple_coroots[self._position(index)]

    def pairing(self, weight: Sequence, index: int):
        """Exact <weight, coroot_index>."""
        if len(weight) != self.ambient_rank:
            raise InvalidInputError("weight has wrong length")
        return dot(weight, self.simple_coroot(index))

    def check_parabolic(self, indices: Iterable[int]) -> frozenset[int]:
        p = frozenset(indices)
        bad = p - set(self.root_indices)
        if bad:
            raise InvalidInputError(f"invalid simple-root indices {sorted(bad)}")
        return p

    def stabilizer_levi_of_weight(self, mu: Sequence) -> frozenset[int]:
        """Simple roots whose coroot pairs to zero with ``mu``."""
        if len(mu) != self.ambient_rank:
            raise InvalidInputError("weight has wrong length")
        return frozenset(i for i in self.root_indices
                         if dot(mu, self.simple_coroot(i)) == 0)

    def levi_roots(self, indices: Iterable[int]) -> tuple[Vec, ...]:
        """All roots of the subsystem generated by the selected simple roots,
        by closing the simple ones under the selected reflections."""
        p = sorted(self.check_parabolic(indices))
        gens = [(self.simple_root(i), self.simple_coroot(i)) for i in p]
        roots = {g[0] for g in gens}
        frontier = list(roots)
        while frontier:
            nxt = []
            for v in frontier:
                for alpha, sigma in gens:
                    w = reflect(alpha, sigma, v)
                    if w not in roots:
                        roots.add(w)
                        nxt.append(w)
            frontier = nxt
        return tuple(sorted(roots))

    def levi_subsystem(self, indices: Iterable[int]) -> "RootSystem":
        p = self.check_parabolic(indices)
        if p == set(self.root_indices):
            return self
        keep = sorted(p)
        return RootSystem(
            ambient_rank=self.ambient_rank,
            root_indices=tuple(keep),
            simple_roots=tuple(self.simple_root(i) for i in keep),
            simple_coroots=tuple(self.simple_coroot(i) for i in keep),
            gram=self.gram,
            factors=None,
            torus_rank=self.torus_rank,
        )

    def ambient_root_lattice(self) -> Lattice:
        return Lattice.from_generators(self.simple_roots, self.ambient_rank)

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        if len(u) != self.ambient_rank or len(v) != self.ambient_rank:
            raise InvalidInputError("vector has wrong length")
        return sum(Fraction(a) * dot(row, v) for a, row in zip(u, self.gram))

    def coroot_form(self, alpha: Sequence) -> QVec | None:
        """The functional 2*(alpha, .)/(alpha, alpha) on the ambient weight
        space, when ``alpha`` lies in the root lattice; None otherwise."""
        alpha = tuple(int(x) for x in alpha)
        if not self.ambient_root_lattice().contains(alpha):
            return None
        norm = self.inner(alpha, alpha)
        row = tuple(sum(Fraction(a) * self.gram[i][j] for i, a in enumerate(alpha))
                    for j in range(self.ambient_rank))
        return tuple(2 * x / norm for x in row)

    def describe(self) -> str:
        if self.factors is not None:
            parts = [f"{fam}{rank}" for fam, rank in self.factors]
            if self.torus_rank:
                parts.append(f"T{self.torus_rank}")
            return " x ".join(parts) if parts else "T0"
        return "levi[" + ",".join(map(str, self.root_indices)) + "]"

    def __repr__(self) -> str:  # pragma: no cover
        return f"RootSystem({self.describe()}, ambient rank {self.ambient_rank})"


def build_root_system(factors, torus_rank: int = 0) -> RootSystem:
    """Build the standard coordinate model for a product of simple factors
    and a central torus.  ``factors`` may be a single string like ``"A2"``
    or an iterable of strings / (family, rank) pairs."""
    if isinstance(factors, str):
        factors = [factors]
    parsed = [_parse_factor(f) for f in factors]
    if torus_rank < 0:
        raise InvalidInputError("torus rank must be nonnegative")
    blocks = [_cartan_and_norms(fam, rank) for fam, rank in parsed]
    semi = sum(rank for _, rank in parsed)
    n = semi + torus_rank

    roots: list[Vec] = []
    coroots: list[Vec] = []
    gram = [[Fraction(0)] * n for _ in range(n)]
    offset = 0
    for (cartan, norms) in blocks:
        k = len(cartan)
        gblock = _invert([[Fraction(cartan[i][j]) for j in range(k)] for i in range(k)])
        for i in range(k):
            root = [0] * n
            coroot = [0] * n
            root[offset:offset + k] = cartan[i]
            coroot[offset + i] = 1
            roots.append(tuple(root))
            coroots.append(tuple(coroot))
            for j in range(k):
                gram[offset + i][offset + j] = gblock[i][j] * norms[j]
        offset += k
    for t in range(torus_rank):
        gram[offset + t][offset + t] = Fraction(1)

    return RootSystem(
        ambient_rank=n,
        root_indices=tuple(range(semi)),
        simple_roots=tuple(roots),
        simple_coroots=tuple(coroots),
        gram=tuple(tuple(row) for row in gram),
        factors=tuple(parsed),
        torus_rank=torus_rank,
    )


# ---------------------------------------------------------------------------
# reflections and finite reflection groups

def _check_reflection_pair(root: Sequence, coroot: Sequence) -> None:
    if dot(root, coroot) != 2:
        raise InvalidInputError(
            f"<root, coroot> = {dot(root, coroot)}, expected 2")


def reflect(root: Sequence, coroot: Sequence, v: Sequence) -> tuple:
    """Reflection on the weight side: v - <v, coroot> * root."""
    _check_reflection_pair(root, coroot)
    c = dot(v, coroot)
    return tuple(x - c * a for x, a in zip(v, root))


def reflect_dual(root: Sequence, coroot: Sequence, phi: Sequence) -> tuple:
    """Contragredient reflection on the dual side: phi - phi(root) * coroot."""
    _check_reflection_pair(root, coroot)
    c = dot(root, phi)
    return tuple(x - c * s for x, s in zip(phi, coroot))


def reflection_matrix(root: Sequence, coroot: Sequence) -> Matrix:
    """Matrix of the weight-side reflection (apply with ``apply_map``)."""
    _check_reflection_pair(root, coroot)
    n = len(root)
    return tuple(tuple(Fraction(int(i == j)) - Fraction(root[i]) * Fraction(coroot[j])
                       for j in range(n)) for i in range(n))


def reflection_matrix_dual(root: Sequence, coroot: Sequence) -> Matrix:
    _check_reflection_pair(root, coroot)
    n = len(root)
    return tuple(tuple(Fraction(int(i == j)) - Fraction(coroot[i]) * Fraction(root[j])
                       for j in range(n)) for i in range(n))


def apply_map(m: Matrix, v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in m)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def _mat_identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class ReflectionGroup:
    """A finite group of exact linear maps, closed under composition."""

    generators: tuple[Matrix, ...]
    elements: tuple[Matrix, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:  # pragma: no cover
        return f"ReflectionGroup(order {self.order})"


def generate_group(generators: Iterable[Matrix], cap: int = GROUP_CAP,
                   dim: int | None = None) -> ReflectionGroup:
    """Breadth-first closure of the generators under composition.

    ``dim`` pins the matrix size when the generator list is empty (the
    result is then the trivial group).  Raises CapExceededError when more
    than ``cap`` elements appear, which signals an infinite group
    (inconsistent input data)."""
    if cap < 1:
        raise InvalidInputError("cap must be at least 1")
    gens = []
    for g in generators:
        m = tuple(tuple(Fraction(x) for x in row) for row in g)
        if dim is None:
            dim = len(m)
        if len(m) != dim or any(len(row) != dim for row in m):
            raise InvalidInputError("generators must be square maps of equal size")
        if _mat_mul(m, m) != _mat_identity(dim):
            raise InvalidInputError("generator is not an involution")
        gens.append(m)
    if dim is None:
        dim = 0
    identity = _mat_identity(dim)
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                p = _mat_mul(g, e)
                if p not in elements:
                    elements.add(p)
                    nxt.append(p)
                    if len(elements) > cap:
                        raise CapExceededError(
                            f"reflection group closure exceeded {cap} elements")
        frontier = nxt
    return ReflectionGroup(tuple(gens), tuple(sorted(elements)))
