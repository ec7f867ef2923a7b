"""The partial order on weights, finite truncation boxes and Hasse diagrams.

The order compares two weights by whether their difference is a nonnegative
integer combination of the simple affine roots.  Infinite downward cones are
truncated to finite boxes: a box is generated by finitely many top weights
and a depth bound on the height of the difference to a top.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import RootSystem, simple_affine_roots
from .weights import Weight, root_weight


def affine_coords(rs: RootSystem, nu: Weight) -> tuple[int, ...] | None:
    """Integer coordinates of nu in the simple affine roots, or None.

    Returns (m_1, ..., m_r, m_0) with nu = sum m_i alpha_i + m_0 (delta - gamma),
    provided nu has level 0 and all coordinates are integers (possibly negative).
    """
    if nu.level != 0:
        return None
    m0 = nu.degree
    if m0.denominator != 1:
        return None
    coords = rs.simple_coords(nu.labels)
    out = []
    for c, g in zip(coords, rs.highest_root):
        m = c + m0 * g
        if m.denominator != 1:
            return None
        out.append(int(m))
    out.append(int(m0))
    return tuple(out)


def leq(rs: RootSystem, mu: Weight, lam: Weight) -> bool:
    """mu <= lam iff lam - mu is a nonnegative integer sum of simple affine roots."""
    coords = affine_coords(rs, lam - mu)
    return coords is not None and all(m >= 0 for m in coords)


def height(rs: RootSystem, nu: Weight) -> int:
    """Sum of the simple-affine coordinates of nu (nu must decompose)."""
    coords = affine_coords(rs, nu)
    if coords is None:
        raise ValueError("weight difference has no integral affine coordinates")
    return sum(coords)


@dataclass(frozen=True)
class Box:
    """Finite carrier {mu : mu <= t for some top t, height(t - mu) <= depth}."""

    tops: tuple[Weight, ...]
    depth: int

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError("box depth must be nonnegative")

    @classmethod
    def make(cls, tops, depth: int) -> "Box":
        return cls(tuple(tops), int(depth))


def _nonneg_tuples(k: int, total: int):
    if k == 0:
        yield ()
        return
    for head in range(total + 1):
        for tail in _nonneg_tuples(k - 1, total - head):
            yield (head, *tail)


def enumerate_box(rs: RootSystem, box: Box) -> list[Weight]:
    """All box weights, canonically sorted (lexicographic on coordinates)."""
    simples = [root_weight(rs, b) for b in simple_affine_roots(rs)]
    seen: set[Weight] = set()
    for top in box.tops:
        for ms in _nonneg_tuples(len(simples), box.depth):
            mu = top
            for m, s in zip(ms, simples):
                if m:
                    mu = mu - Fraction(m) * s
            seen.add(mu)
    return sorted(seen)


def hasse(rs: RootSystem, box: Box) -> list[tuple[Weight, Weight]]:
    """Covering edges (mu, lam), mu < lam, of the order restricted to the box."""
    elems = enumerate_box(rs, box)
    below = {
        lam: [mu for mu in elems if mu != lam and leq(rs, mu, lam)] for lam in elems
    }
    edges = []
    for lam, lower in below.items():
        for mu in lower:
            if not any(leq(rs, mu, nu) for nu in lower if nu != mu):
                edges.append((mu, lam))
    return sorted(edges)
