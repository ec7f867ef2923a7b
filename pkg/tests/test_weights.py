import random
from fractions import Fraction

import pytest

from afflink import (
    Weight,
    bilinear,
    delta,
    dot,
    imaginary_root,
    is_critical,
    level_of,
    pairing,
    positive_affine_roots,
    real_root,
    reflect,
    rho,
    root_system,
    root_weight,
    shift_delta,
    zero_weight,
)
from afflink.errors import ImaginaryRootError

A1 = root_system("A1")
A2 = root_system("A2")


def random_weight(rng, rs, levels=(-3, -2, 0, 1, Fraction(1, 2))):
    pool = [Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 2), Fraction(-3, 4), Fraction(3)]
    return Weight.make(
        [rng.choice(pool) for _ in range(rs.rank)],
        rng.choice(levels),
        rng.choice(pool),
    )


def random_real_root(rng, rs, max_n=5):
    alpha = rng.choice(rs.positive_roots)
    if rng.random() < 0.5:
        alpha = tuple(-c for c in alpha)
    return real_root(rs, alpha, rng.randint(-max_n, max_n))


def test_bilinear_examples():
    assert bilinear(A1, delta(A1), delta(A1)) == 0
    alpha = root_weight(A1, real_root(A1, (1,)))
    assert bilinear(A1, alpha, alpha) == 2
    assert bilinear(A1, rho(A1), delta(A1)) == 2


def test_bilinear_symmetric():
    rng = random.Random(7)
    for _ in range(50):
        lam, mu = random_weight(rng, A2), random_weight(rng, A2)
        assert bilinear(A2, lam, mu) == bilinear(A2, mu, lam)


def test_pairing_normalization():
    for rs in (A1, A2):
        for n in (-3, 0, 2, 5):
            for alpha in rs.positive_roots:
                beta = real_root(rs, alpha, n)
                assert pairing(rs, root_weight(rs, beta), beta) == 2


def test_pairing_of_delta_vanishes():
    for beta in positive_affine_roots(A2, 2):
        if beta.kind == "real":
            assert pairing(A2, delta(A2), beta) == 0


def test_pairing_example_level_minus_two():
    lam = Weight.make([0], -2, 0)
    assert pairing(A1, lam, real_root(A1, (1,), 3)) == -6


def test_pairing_rejects_imaginary():
    with pytest.raises(ImaginaryRootError):
        pairing(A1, zero_weight(A1), imaginary_root(A1, 1))


def test_pairing_agrees_with_bilinear_ratio():
    rng = random.Random(11)
    for rs in (A1, A2):
        for _ in range(60):
            lam = random_weight(rng, rs)
            beta = random_real_root(rng, rs)
            bw = root_weight(rs, beta)
            assert pairing(rs, lam, beta) == 2 * bilinear(rs, lam, bw) / bilinear(rs, bw, bw)


def test_reflect_involution_and_delta_fixed():
    rng = random.Random(3)
    for rs in (A1, A2):
        for _ in range(60):
            lam = random_weight(rng, rs)
            beta = random_real_root(rng, rs)
            assert reflect(rs, beta, reflect(rs, beta, lam)) == lam
            assert reflect(rs, beta, delta(rs)) == delta(rs)


def test_reflect_negates_its_root():
    beta = real_root(A2, (1, 1), 2)
    bw = root_weight(A2, beta)
    assert reflect(A2, beta, bw) == -bw


def test_reflect_example_a1():
    lam = Weight.make([1], 1, 0)
    assert reflect(A1, real_root(A1, (1,)), lam) == Weight.make([-1], 1, 0)


def test_dot_fixes_minus_rho_line():
    for c in (0, 1, -3):
        lam = -rho(A1) + Fraction(c) * delta(A1)
        assert dot(A1, real_root(A1, (1,)), lam) == lam


def test_dot_example_critical_a1():
    lam = Weight.make([0], -2, 0)
    assert dot(A1, real_root(A1, (1,)), lam) == Weight.make([-2], -2, 0)


def test_dot_independent_of_rho_degree():
    rng = random.Random(19)
    for x in (1, -2, Fraction(7, 3)):
        shifted = rho(A2, x)
        for _ in range(30):
            lam = random_weight(rng, A2)
            beta = random_real_root(rng, A2)
            assert dot(A2, beta, lam, rho_shift=shifted) == dot(A2, beta, lam)


def test_rho_pairs_to_one_with_simple_affine_coroots():
    from afflink import simple_affine_roots

    for rs in (A1, A2, root_system("G2"), root_system("C2")):
        for a in simple_affine_roots(rs):
            assert pairing(rs, rho(rs), a) == 1


def test_level_and_criticality():
    assert level_of(Weight.make([0], -2, 0)) == -2
    assert is_critical(A1, Weight.make([5], -2, 1))
    assert A2.critical_level == -3
    assert not is_critical(A1, zero_weight(A1))
    assert not is_critical(A2, zero_weight(A2))


def test_shift_delta():
    lam = Weight.make([1, 0], Fraction(-3), Fraction(1, 2))
    assert shift_delta(A2, lam, 0) == lam
    assert shift_delta(A2, shift_delta(A2, lam, 3), -3) == lam
    assert shift_delta(A2, lam, 7).level == lam.level
    assert shift_delta(A2, lam, 7).labels == lam.labels


def test_form_rescaling_homogeneity():
    rng = random.Random(23)
    scaled = A2.rescaled(Fraction(7, 2))
    for _ in range(40):
        lam = random_weight(rng, A2)
        mu = random_weight(rng, A2)
        beta = random_real_root(rng, A2)
        assert bilinear(scaled, lam, mu) == Fraction(7, 2) * bilinear(A2, lam, mu)
        assert pairing(scaled, lam, beta) == pairing(A2, lam, beta)
        assert reflect(scaled, beta, lam) == reflect(A2, beta, lam)
        assert dot(scaled, beta, lam) == dot(A2, beta, lam)
