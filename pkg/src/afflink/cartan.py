"""Finite Cartan data and the derived untwisted affine root data.

Cartan matrices are hard-coded per series and re-checked on construction
(symmetrizability, nonzero determinant).  Positive roots are generated by
root-string closure from the simple roots; the dual Coxeter number and the
dual marks are derived from the highest root and the symmetrizers.

Conventions: the Cartan matrix entry a[i][j] is <alpha_j, alpha_i^vee>;
roots are stored as integer coordinate vectors in the simple-root basis.
The invariant form is normalized so that (gamma, gamma) = 2 for the
highest root gamma; an optional positive rational `form_scale` rescales
it (the Killing form is a positive multiple, and every order/orbit
computation downstream is invariant under this rescaling).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache

from .errors import ImaginaryRootError, InvalidCartanType

SERIES = ("A", "B", "C", "D", "E", "F", "G")

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _RANK_RANGE:
            raise InvalidCartanType(f"unknown series {self.series!r}")
        lo, hi = _RANK_RANGE[self.series]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidCartanType(f"rank {self.rank} not admissible for series {self.series}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in SERIES or not text[1:].isdigit():
            raise InvalidCartanType(f"cannot parse Cartan type {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self):
        return f"{self.series}{self.rank}"


def _cartan_matrix(ct: CartanType) -> list[list[int]]:
    r = ct.rank
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def chain(i, j):
        a[i][j] = a[j][i] = -1

    if ct.series in ("A", "B", "C"):
        for i in range(r - 1):
            chain(i, i + 1)
        if ct.series == "B":  # alpha_r short
            a[r - 1][r - 2] = -2
        elif ct.series == "C":  # alpha_r long
            a[r - 2][r - 1] = -2
    elif ct.series == "D":
        for i in range(r - 2):
            chain(i, i + 1)
        chain(r - 3, r - 1)
    elif ct.series == "E":
        # Bourbaki numbering: node 2 attaches to node 4 of the A-chain 1-3-4-5-...
        chain_nodes = [0] + list(range(2, r))
        for u, v in zip(chain_nodes, chain_nodes[1:]):
            chain(u, v)
        chain(1, 3)
    elif ct.series == "F":
        chain(0, 1)
        chain(1, 2)
        chain(2, 3)
        a[2][1] = -2  # alpha_3, alpha_4 short
    elif ct.series == "G":
        chain(0, 1)
        a[1][0] = -3  # alpha_2 short
    return a


def _symmetrizers(cartan: list[list[int]]) -> list[Fraction]:
    """d_i with d_i a_ij symmetric, normalized so long roots have d = 1."""
    r = len(cartan)
    d: list[Fraction | None] = [None] * r
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                stack.append(j)
    if any(x is None for x in d):
        raise InvalidCartanType("Cartan matrix is not connected")
    top = max(d)
    d = [x / top for x in d]
    for i in range(r):
        for j in range(r):
            if d[i] * cartan[i][j] != d[j] * cartan[j][i]:
                raise InvalidCartanType("Cartan matrix is not symmetrizable")
    return d


def _det(matrix) -> Fraction:
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, n):
            f = m[i][col] * inv
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return det


def _invert(matrix) -> tuple[tuple[Fraction, ...], ...]:
    n = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if m[i][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def _positive_roots(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """Root-string closure from the simple roots, returned sorted by height."""
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(r):
                pair = sum(beta[j] * cartan[i][j] for j in range(r))
                back = 0
                probe = tuple(b - int(j == i) for j, b in enumerate(beta))
                while probe in roots:
                    back += 1
                    probe = tuple(b - int(j == i) for j, b in enumerate(probe))
                if back - pair > 0:
                    cand = tuple(b + int(j == i) for j, b in enumerate(beta))
                    if cand not in roots:
                        roots.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return sorted(roots, key=lambda x: (sum(x), x))


@dataclass(frozen=True)
class RootSystem:
    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[Fraction, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    highest_root: tuple[int, ...]
    dual_coxeter: int
    marks_dual: tuple[int, ...]  # affine label first, then the finite nodes
    cartan_inverse: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    form_scale: Fraction = Fraction(1)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def critical_level(self) -> Fraction:
        return Fraction(-self.dual_coxeter)

    def rescaled(self, c) -> "RootSystem":
        """The same root datum with the invariant form multiplied by c > 0."""
        c = Fraction(c)
        if c <= 0:
            raise ValueError("form scale must be positive")
        return replace(self, form_scale=self.form_scale * c)

    # -- form and pairings on finite simple-root coordinate vectors --------

    def root_bilinear(self, x, y) -> Fraction:
        """(x, y) for finite roots/weight differences in simple-root coordinates."""
        a = self.cartan_matrix
        d = self.symmetrizers
        return self.form_scale * sum(
            d[i] * a[i][j] * Fraction(x[i]) * Fraction(y[j])
            for i in range(self.rank) for j in range(self.rank)
        )

    def coroot_labels(self, x) -> tuple[Fraction, ...]:
        """<x, alpha_i^vee> for a finite vector x in simple-root coordinates."""
        a = self.cartan_matrix
        return tuple(
            Fraction(sum(a[i][j] * x[j] for j in range(self.rank)))
            for i in range(self.rank)
        )

    def simple_coords(self, labels) -> tuple[Fraction, ...]:
        """Inverse of coroot_labels: simple-root coordinates from coroot labels."""
        inv = self.cartan_inverse
        return tuple(
            sum(inv[i][j] * Fraction(labels[j]) for j in range(self.rank))
            for i in range(self.rank)
        )

    def is_finite_root(self, x) -> bool:
        x = tuple(x)
        return x in self._root_set or tuple(-c for c in x) in self._root_set

    @property
    def _root_set(self):
        return frozenset(self.positive_roots)


@lru_cache(maxsize=None)
def build_root_system(ct: CartanType) -> RootSystem:
    """Construct the full finite root datum plus derived affine constants."""
    cartan = _cartan_matrix(ct)
    if _det(cartan) == 0:
        raise InvalidCartanType("Cartan matrix is singular")
    d = _symmetrizers(cartan)
    positive = _positive_roots(cartan)
    gamma = positive[-1]
    for beta in positive:
        if any(g < b for g, b in zip(gamma, beta)):
            raise InvalidCartanType("highest root is not maximal")
    dual_marks = []
    for gi, di in zip(gamma, d):
        mark = gi * di
        if mark.denominator != 1:
            raise InvalidCartanType("dual marks are not integral")
        dual_marks.append(int(mark))
    hvee = 1 + sum(dual_marks)
    rs = RootSystem(
        cartan_type=ct,
        cartan_matrix=tuple(tuple(row) for row in cartan),
        symmetrizers=tuple(d),
        positive_roots=tuple(positive),
        highest_root=gamma,
        dual_coxeter=hvee,
        marks_dual=(1, *dual_marks),
        cartan_inverse=_invert(cartan),
    )
    if rs.root_bilinear(gamma, gamma) != 2 * rs.form_scale:
        raise InvalidCartanType("highest root is not normalized to length 2")
    return rs


def root_system(type_string: str) -> RootSystem:
    return build_root_system(CartanType.parse(type_string))


# -- affine roots ----------------------------------------------------------

REAL = "real"
IMAGINARY = "imaginary"


@dataclass(frozen=True, order=True)
class AffineRoot:
    """A real root (finite part + n*delta) or an imaginary root n*delta."""

    kind: str
    finite: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.kind == IMAGINARY:
            if any(self.finite) or self.n == 0:
                raise ValueError("imaginary roots are n*delta with n != 0")
        elif self.kind != REAL:
            raise ValueError(f"bad root kind {self.kind!r}")


def real_root(rs: RootSystem, finite, n: int = 0) -> AffineRoot:
    finite = tuple(int(c) for c in finite)
    if not rs.is_finite_root(finite):
        raise ValueError(f"{finite} is not a root of {rs.cartan_type}")
    return AffineRoot(REAL, finite, int(n))


def imaginary_root(rs: RootSystem, n: int) -> AffineRoot:
    return AffineRoot(IMAGINARY, (0,) * rs.rank, int(n))


def multiplicity(rs: RootSystem, beta: AffineRoot) -> int:
    return rs.rank if beta.kind == IMAGINARY else 1


def require_real(beta: AffineRoot) -> AffineRoot:
    if beta.kind != REAL:
        raise ImaginaryRootError("imaginary roots have no coroot")
    return beta


def simple_affine_roots(rs: RootSystem) -> list[AffineRoot]:
    """The finite simple roots together with -gamma + delta."""
    r = rs.rank
    simples = [real_root(rs, tuple(int(i == j) for j in range(r))) for i in range(r)]
    affine_node = real_root(rs, tuple(-c for c in rs.highest_root), 1)
    return simples + [affine_node]


def positive_affine_roots(rs: RootSystem, max_delta: int) -> list[AffineRoot]:
    """All positive affine roots with delta-coefficient at most max_delta.

    Real roots alpha + n*delta carry multiplicity 1, imaginary roots n*delta
    carry multiplicity rank.
    """
    out = [real_root(rs, alpha) for alpha in rs.positive_roots]
    for n in range(1, max_delta + 1):
        for alpha in rs.positive_roots:
            out.append(real_root(rs, alpha, n))
            out.append(real_root(rs, tuple(-c for c in alpha), n))
        out.append(imaginary_root(rs, n))
    return sorted(out)
