"""Affine Kostant partition numbers, truncated characters and the
Verma-flag multiplicity data of (predicted) projective objects.

The partition number of a weight difference counts multisets of positive
affine roots summing to it, an imaginary root n*delta counting with
multiplicity equal to the rank.  Everything downstream (Verma characters,
truncated projective multiplicities, the truncated Weyl-Kac sum) is exact
integer arithmetic on top of that count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .cartan import IMAGINARY, RootSystem, multiplicity, positive_affine_roots, simple_affine_roots
from .errors import NonCriticalWeight, NotDominantIntegral, NotInBox, UnsupportedFiber
from .linkage import CLOSED, GENERIC, FiberSpec, alpha_down, integrality
from .orders import Box, affine_coords, enumerate_box, height, leq
from .weights import Weight, dot, is_critical, pairing, root_weight


def _dominates(bound: tuple[int, ...], v: tuple[int, ...]) -> bool:
    return all(b >= c for b, c in zip(bound, v))


@lru_cache(maxsize=None)
def _partition_table(rs: RootSystem, bound: tuple[int, ...]) -> dict:
    """Partition numbers for every coordinate vector componentwise <= bound."""
    items = []
    for beta in positive_affine_roots(rs, bound[-1]):
        v = affine_coords(rs, root_weight(rs, beta))
        if _dominates(bound, v):
            items.append((v, multiplicity(rs, beta)))
    table = {(0,) * len(bound): 1}
    for v, mult in items:
        new: dict = {}
        for g, cnt in table.items():
            k = 0
            point = g
            while _dominates(bound, point):
                new[point] = new.get(point, 0) + cnt * comb(k + mult - 1, mult - 1)
                k += 1
                point = tuple(a + b for a, b in zip(point, v))
        table = new
    return table


def partition(rs: RootSystem, gamma: Weight) -> int:
    """dim of the gamma-weight space of U of the positive affine nilpotent."""
    coords = affine_coords(rs, gamma)
    if coords is None or any(c < 0 for c in coords):
        return 0
    return _partition_table(rs, coords).get(coords, 0)


@dataclass
class CharacterTable:
    base: Weight
    entries: dict  # Weight -> positive integer

    def sorted_entries(self):
        return sorted(self.entries.items())


def verma_character(rs: RootSystem, lam: Weight, box: Box) -> CharacterTable:
    """The character of the Verma module with highest weight lam, on the box."""
    entries = {}
    for mu in enumerate_box(rs, box):
        p = partition(rs, lam - mu)
        if p:
            entries[mu] = p
    return CharacterTable(lam, entries)


def q_multiplicities(rs: RootSystem, mu: Weight, box: Box) -> dict:
    """Verma-flag multiplicities of the big truncated projective at mu:
    nu -> partition(nu - mu) inside the window, zero outside."""
    members = enumerate_box(rs, box)
    if mu not in members:
        raise NotInBox("the base weight must lie in the box")
    out = {}
    for nu in members:
        p = partition(rs, nu - mu)
        if p:
            out[nu] = p
    return out


def weyl_kac_character(rs: RootSystem, lam: Weight, box: Box) -> CharacterTable:
    """Truncated alternating sum of Verma characters over the dot-orbit of a
    dominant integral weight, restricted to the box."""
    for a in simple_affine_roots(rs):
        p = pairing(rs, lam, a)
        if p.denominator != 1 or p < 0:
            raise NotDominantIntegral("weight must pair nonnegative-integrally with all simple affine coroots")
    members = enumerate_box(rs, box)
    caps = [height(rs, lam - mu) for mu in members if leq(rs, mu, lam)]
    if not caps:
        return CharacterTable(lam, {})
    hcap = max(caps)
    simples = simple_affine_roots(rs)
    signs = {lam: 1}
    frontier = [lam]
    while frontier:
        nu = frontier.pop()
        for a in simples:
            nxt = dot(rs, a, nu)
            if nxt == nu or not leq(rs, nxt, nu):
                continue
            if height(rs, lam - nxt) > hcap:
                continue
            sign = -signs[nu]
            if nxt in signs:
                if signs[nxt] != sign:
                    raise RuntimeError("inconsistent sign on the dot-orbit")
                continue
            signs[nxt] = sign
            frontier.append(nxt)
    entries = {}
    for mu in members:
        total = sum(sign * partition(rs, nu - mu) for nu, sign in signs.items())
        if total < 0:
            raise RuntimeError("negative truncated character entry")
        if total:
            entries[mu] = total
    return CharacterTable(lam, entries)


@dataclass
class DecompositionMatrix:
    weights: tuple[Weight, ...]  # canonical order, rows and columns alike
    entries: dict  # (row weight, column weight) -> 1; absent means 0

    def value(self, lam: Weight, mu: Weight) -> int:
        return self.entries.get((lam, mu), 0)


def decomposition_matrix(rs: RootSystem, fiber: FiberSpec, box: Box) -> DecompositionMatrix:
    """Critical-level Verma decomposition numbers at a generic or subgeneric
    fiber.  The closed fiber carries no algorithm and is rejected."""
    if fiber.kind == CLOSED:
        raise UnsupportedFiber("closed-fiber decomposition numbers are not computable here")
    members = enumerate_box(rs, box)
    for mu in members:
        if not is_critical(rs, mu):
            raise NonCriticalWeight("decomposition numbers need an all-critical box")
    entries = {(mu, mu): 1 for mu in members}
    if fiber.kind != GENERIC:
        for lam in members:
            if fiber.alpha in integrality(rs, lam).finite_integral_roots:
                down = alpha_down(rs, fiber.alpha, lam, box)
                if down != lam and down in set(members):
                    entries[(lam, down)] = 1
    return DecompositionMatrix(tuple(members), entries)


def projective_multiplicities(
    rs: RootSystem, mu: Weight, fiber: FiberSpec, box: Box, restricted: bool = False
) -> dict:
    """Predicted Verma-flag multiplicities of the projective cover at mu:
    the mu-column of the decomposition matrix, read through reciprocity.

    The restricted flag is informational: at generic and subgeneric fibers
    the computable inputs for the restricted and non-restricted versions
    coincide.
    """
    matrix = decomposition_matrix(rs, fiber, box)
    if mu not in matrix.weights:
        raise NotInBox("the base weight must lie in the box")
    out = {}
    for lam in matrix.weights:
        v = matrix.value(lam, mu)
        if v:
            out[lam] = v
    return out
