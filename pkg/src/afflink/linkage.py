"""Linkage combinatorics: integrality data, the Kac-Kazhdan relation and
its fiber-dependent refinements, alpha-arrows and linkage classes.

The deformation fiber is modeled qualitatively: a generic fiber suppresses
all real-root links, a subgeneric fiber keeps only the links along one
finite root, the closed fiber keeps everything.  Classes are computed as
closures inside a finite box.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import (
    IMAGINARY,
    REAL,
    AffineRoot,
    RootSystem,
    imaginary_root,
    positive_affine_roots,
    real_root,
)
from .errors import DepthTooSmall, NonCriticalWeight, NotInBox
from .orders import Box, enumerate_box, height, leq
from .weights import Weight, dot, is_critical, pairing, rho, root_weight

GENERIC = "generic"
SUBGENERIC = "subgeneric"
CLOSED = "closed"


@dataclass(frozen=True)
class FiberSpec:
    kind: str
    alpha: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in (GENERIC, SUBGENERIC, CLOSED):
            raise ValueError(f"bad fiber kind {self.kind!r}")
        if (self.kind == SUBGENERIC) != (self.alpha is not None):
            raise ValueError("subgeneric fibers need a finite root, others none")

    @classmethod
    def generic(cls):
        return cls(GENERIC)

    @classmethod
    def closed(cls):
        return cls(CLOSED)

    @classmethod
    def subgeneric(cls, rs: RootSystem, alpha) -> "FiberSpec":
        alpha = tuple(int(c) for c in alpha)
        if not rs.is_finite_root(alpha):
            raise ValueError(f"{alpha} is not a finite root")
        return cls(SUBGENERIC, alpha)


@dataclass(frozen=True)
class IntegralityData:
    finite_integral_roots: tuple[tuple[int, ...], ...]  # closed under negation
    includes_imaginary: bool

    @property
    def positive_part(self) -> tuple[tuple[int, ...], ...]:
        return tuple(a for a in self.finite_integral_roots if sum(a) > 0)


def integrality(rs: RootSystem, lam: Weight) -> IntegralityData:
    """R(lam) = {finite alpha : <lam, alpha^vee> integral}, plus criticality."""
    integral = []
    for alpha in rs.positive_roots:
        if pairing(rs, lam, real_root(rs, alpha)).denominator == 1:
            integral.append(alpha)
            integral.append(tuple(-c for c in alpha))
    return IntegralityData(tuple(sorted(integral)), is_critical(rs, lam))


def _fiber_keeps_real(fiber: FiberSpec, finite: tuple[int, ...]) -> bool:
    if fiber.kind == CLOSED:
        return True
    if fiber.kind == GENERIC:
        return False
    neg = tuple(-c for c in fiber.alpha)
    return finite in (fiber.alpha, neg)


def kk_predecessors(
    rs: RootSystem, lam: Weight, fiber: FiberSpec, box: Box
) -> list[tuple[Weight, AffineRoot, int]]:
    """All (mu, beta, n) with mu = lam - n*beta in the box and
    2(lam+rho, beta) = n(beta, beta), filtered by the fiber."""
    members = set(enumerate_box(rs, box))
    drops = [height(rs, lam - mu) for mu in members if leq(rs, mu, lam)]
    if not drops:
        return []
    hmax = max(drops)
    shifted = lam + rho(rs)
    out = []
    for beta in positive_affine_roots(rs, hmax):
        if beta.kind == REAL:
            if not _fiber_keeps_real(fiber, beta.finite):
                continue
            n = pairing(rs, shifted, beta)
            if n.denominator != 1 or n < 1:
                continue
            mu = lam - n * root_weight(rs, beta)
            if mu in members:
                out.append((mu, beta, int(n)))
        else:
            # (beta, beta) = 0: the condition reads (lam+rho, delta) = 0,
            # i.e. it holds for every n exactly at the critical level.
            if not is_critical(rs, lam):
                continue
            for n in range(1, hmax + 1):
                mu = lam - Fraction(n * beta.n) * root_weight(rs, imaginary_root(rs, 1))
                if mu in members:
                    out.append((mu, beta, n))
    return sorted(out)


def _dot_link(rs: RootSystem, mu: Weight, nu: Weight, alpha: tuple[int, ...]):
    """If nu = s_{alpha + n delta} . mu for some integer n, return that root."""
    d = nu - mu
    if d.level != 0:
        return None
    coords = rs.simple_coords(d.labels)
    t = None
    for c, a in zip(coords, alpha):
        if a == 0:
            if c != 0:
                return None
        else:
            ratio = c / a
            if t is None:
                t = ratio
            elif ratio != t:
                return None
    if not t:
        return None
    # d = t*alpha + degree(d)*delta must equal -p(alpha + n delta) with p = -t
    n = d.degree / t
    if n.denominator != 1:
        return None
    beta = real_root(rs, alpha, int(n))
    if pairing(rs, mu + rho(rs), beta) == -t:
        return beta
    return None


def _delta_link(rs: RootSystem, mu: Weight, nu: Weight) -> bool:
    d = nu - mu
    return (
        d.level == 0
        and not any(d.labels)
        and d.degree != 0
        and d.degree.denominator == 1
    )


def linkage_class(
    rs: RootSystem,
    lam: Weight,
    fiber: FiberSpec,
    restricted: bool,
    box: Box,
) -> list[Weight]:
    """The linkage class of lam inside the box.

    Closure under dot-reflections along the fiber-filtered integral roots,
    with delta-shifts added exactly when lam is critical and the class is
    non-restricted.  Off the critical level the restricted flag is inert.
    """
    members = enumerate_box(rs, box)
    if lam not in members:
        raise NotInBox("the weight must lie in the box")
    gens = generator_roots(rs, lam, fiber)
    shifts = is_critical(rs, lam) and not restricted
    found = {lam}
    frontier = [lam]
    while frontier:
        mu = frontier.pop()
        for nu in members:
            if nu in found:
                continue
            linked = any(_dot_link(rs, mu, nu, a) for a in gens)
            if linked or (shifts and _delta_link(rs, mu, nu)):
                found.add(nu)
                frontier.append(nu)
    return sorted(found)


def generator_roots(rs: RootSystem, lam: Weight, fiber: FiberSpec) -> tuple[tuple[int, ...], ...]:
    """Positive representatives of the finite roots whose affine reflection
    families generate the fiber-filtered integral Weyl group."""
    data = integrality(rs, lam)
    return tuple(a for a in data.positive_part if _fiber_keeps_real(fiber, a))


@dataclass(frozen=True)
class GeneratorSet:
    """Symbolic description: reflections s_{alpha + n delta} for all n,
    for each listed finite root, plus an optional delta-shift factor."""

    finite_roots: tuple[tuple[int, ...], ...]
    delta_shifts: bool


def weyl_group_generators(
    rs: RootSystem, lam: Weight, fiber: FiberSpec, restricted: bool
) -> GeneratorSet:
    gens = generator_roots(rs, lam, fiber)
    return GeneratorSet(gens, is_critical(rs, lam) and not restricted)


def alpha_down(rs: RootSystem, alpha, lam: Weight, box: Box) -> Weight:
    """The maximal weight <= lam among the dot-reflections of lam along
    alpha + n delta, n integer (lam critical, alpha integral for lam)."""
    alpha = tuple(int(c) for c in alpha)
    if not is_critical(rs, lam):
        raise NonCriticalWeight("alpha-arrows are defined at the critical level")
    data = integrality(rs, lam)
    if alpha not in data.finite_integral_roots:
        raise ValueError(f"{alpha} is not integral for the given weight")
    m = pairing(rs, lam + rho(rs), real_root(rs, alpha))
    if m == 0:
        return lam
    bound = box.depth + max(rs.highest_root) + 2
    candidates = [
        dot(rs, real_root(rs, alpha, n), lam) for n in range(-bound, bound + 1)
    ]
    below = [c for c in candidates if leq(rs, c, lam)]
    if not below:
        raise DepthTooSmall("no dot-reflection below the weight within reach")
    best = below[0]
    for c in below[1:]:
        if leq(rs, best, c):
            best = c
        elif not leq(rs, c, best):
            raise RuntimeError("alpha-arrow candidates are not a chain")
    return best
