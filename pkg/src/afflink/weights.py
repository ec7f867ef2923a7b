"""Exact weight arithmetic on the dual affine Cartan space.

A weight is stored as (coroot labels, level, degree): the labels are the
pairings with the finite simple coroots, the level is the value on the
central element, the degree the value on the derivation.  All coordinates
are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import IMAGINARY, AffineRoot, RootSystem, require_real


@dataclass(frozen=True, order=True)
class Weight:
    labels: tuple[Fraction, ...]
    level: Fraction
    degree: Fraction

    @classmethod
    def make(cls, labels, level=0, degree=0) -> "Weight":
        return cls(tuple(Fraction(x) for x in labels), Fraction(level), Fraction(degree))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(
            tuple(a + b for a, b in zip(self.labels, other.labels)),
            self.level + other.level,
            self.degree + other.degree,
        )

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-1) * other

    def __rmul__(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(c * a for a in self.labels), c * self.level, c * self.degree)

    def __neg__(self) -> "Weight":
        return (-1) * self


def zero_weight(rs: RootSystem) -> Weight:
    return Weight.make((0,) * rs.rank)


def delta(rs: RootSystem) -> Weight:
    """The smallest positive imaginary root as a weight: labels 0, level 0, degree 1."""
    return Weight.make((0,) * rs.rank, 0, 1)


def rho(rs: RootSystem, x=0) -> Weight:
    """A weight pairing to 1 with every simple affine coroot.

    The degree component x is a free choice; every dot-action result is
    independent of it.
    """
    return Weight.make((1,) * rs.rank, rs.dual_coxeter, x)


def root_weight(rs: RootSystem, beta: AffineRoot) -> Weight:
    """The weight of an affine root: finite coroot labels, level 0, degree n."""
    return Weight(rs.coroot_labels(beta.finite), Fraction(0), Fraction(beta.n))


def bilinear(rs: RootSystem, lam: Weight, mu: Weight) -> Fraction:
    """The invariant bilinear form, with level-degree coupling (scaled with the form)."""
    cl = rs.simple_coords(lam.labels)
    # (lam_fin, mu_fin) = sum_i d_i * label_i(mu) * coord_i(lam), then the coupling.
    fin = rs.form_scale * sum(
        d * m * c for d, m, c in zip(rs.symmetrizers, mu.labels, cl)
    )
    return fin + rs.form_scale * (lam.level * mu.degree + mu.level * lam.degree)


def pairing(rs: RootSystem, lam: Weight, beta: AffineRoot) -> Fraction:
    """<lam, beta^vee> for a real affine root beta = alpha + n*delta.

    Equals <lam, alpha^vee> + n * (2/(alpha,alpha)) * level(lam); agrees with
    2(lam,beta)/(beta,beta) and is invariant under rescaling the form.
    """
    require_real(beta)
    aa = rs.root_bilinear(beta.finite, beta.finite)
    # alpha^vee = (2/(alpha,alpha)) sum_i x_i d_i alpha_i^vee for alpha = sum x_i alpha_i
    finite_part = (2 * rs.form_scale / aa) * sum(
        Fraction(x) * d * l
        for x, d, l in zip(beta.finite, rs.symmetrizers, lam.labels)
    )
    return finite_part + beta.n * (2 * rs.form_scale / aa) * lam.level


def reflect(rs: RootSystem, beta: AffineRoot, lam: Weight) -> Weight:
    """s_beta(lam) = lam - <lam, beta^vee> beta (beta real)."""
    require_real(beta)
    return lam - pairing(rs, lam, beta) * root_weight(rs, beta)


def dot(rs: RootSystem, beta: AffineRoot, lam: Weight, rho_shift: Weight | None = None) -> Weight:
    """The shifted reflection s_beta . lam = s_beta(lam + rho) - rho."""
    r = rho(rs) if rho_shift is None else rho_shift
    return reflect(rs, beta, lam + r) - r


def level_of(lam: Weight) -> Fraction:
    return lam.level


def is_critical(rs: RootSystem, lam: Weight) -> bool:
    return lam.level == rs.critical_level


def shift_delta(rs: RootSystem, lam: Weight, m) -> Weight:
    """lam + m*delta: the weight-level shadow of the grading shift."""
    return lam + Fraction(m) * delta(rs)
