import itertools
from fractions import Fraction

import pytest

from afflink import (
    Box,
    FiberSpec,
    Weight,
    decomposition_matrix,
    delta,
    enumerate_box,
    leq,
    linkage_class,
    partition,
    projective_multiplicities,
    q_multiplicities,
    real_root,
    root_system,
    root_weight,
    simple_affine_roots,
    verma_character,
    weyl_kac_character,
    zero_weight,
)
from afflink.errors import (
    NonCriticalWeight,
    NotDominantIntegral,
    NotInBox,
    UnsupportedFiber,
)
from oracles import integer_partitions, partition_bruteforce, partition_series

A1 = root_system("A1")
A2 = root_system("A2")


def from_coords(rs, coords):
    simples = [root_weight(rs, b) for b in simple_affine_roots(rs)]
    out = zero_weight(rs)
    for m, s in zip(coords, simples[:-1]):
        out = out + Fraction(m) * s
    return out + Fraction(coords[-1]) * simples[-1]


def test_partition_base_cases():
    assert partition(A1, zero_weight(A1)) == 1
    assert partition(A1, delta(A1)) == 2
    alpha = root_weight(A1, real_root(A1, (1,)))
    assert partition(A1, alpha + delta(A1)) == 3
    # non-decomposable differences count zero
    assert partition(A1, Weight.make([1], 1, 0)) == 0
    assert partition(A1, -alpha) == 0


@pytest.mark.parametrize("rs,max_height", [(A1, 6), (A2, 4)])
def test_partition_matches_bruteforce(rs, max_height):
    k = rs.rank + 1
    for coords in itertools.product(range(max_height + 1), repeat=k):
        if sum(coords) > max_height:
            continue
        gamma = from_coords(rs, coords)
        assert partition(rs, gamma) == partition_bruteforce(rs, coords)


def test_partition_matches_product_series():
    bound = (5, 5)
    series = partition_series(A1, bound)
    for coords in itertools.product(range(6), repeat=2):
        gamma = from_coords(A1, coords)
        assert partition(A1, gamma) == series.get(coords, 0)


def test_verma_character_examples():
    lam = Weight.make([0], -2, 0)
    table = verma_character(A1, lam, Box.make([lam], 4))
    assert table.entries[lam] == 1
    assert table.entries[lam - delta(A1)] == 2
    alpha = root_weight(A1, real_root(A1, (1,)))
    assert table.entries[lam - alpha - delta(A1)] == 3


def test_q_multiplicities_examples():
    mu = Weight.make([0], -2, -2)
    top = Weight.make([0], -2, 0)
    box = Box.make([top], 5)
    entries = q_multiplicities(A1, mu, box)
    assert entries[mu] == 1
    assert entries[mu + delta(A1)] == 2
    for nu in entries:
        assert leq(A1, mu, nu)
    members = set(enumerate_box(A1, box))
    assert set(entries) <= members


def test_q_multiplicities_requires_membership():
    mu = Weight.make([0], -2, 1)
    with pytest.raises(NotInBox):
        q_multiplicities(A1, mu, Box.make([Weight.make([0], -2, 0)], 2))


def test_weyl_kac_trivial_weight():
    lam = zero_weight(A1)
    table = weyl_kac_character(A1, lam, Box.make([lam], 4))
    assert table.entries == {lam: 1}


def test_weyl_kac_delta_is_one_dimensional():
    lam = delta(A2)
    table = weyl_kac_character(A2, lam, Box.make([lam], 3))
    assert table.entries == {lam: 1}


def test_weyl_kac_level_one_a1():
    lam = Weight.make([0], 1, 0)  # basic highest weight
    table = weyl_kac_character(A1, lam, Box.make([lam], 14))
    for n in range(7):
        assert table.entries[lam - n * delta(A1)] == integer_partitions(n)


def test_weyl_kac_rejects_non_dominant():
    with pytest.raises(NotDominantIntegral):
        weyl_kac_character(A1, Weight.make([-1], 1, 0), Box.make([zero_weight(A1)], 2))
    with pytest.raises(NotDominantIntegral):
        weyl_kac_character(A1, Weight.make([Fraction(1, 2)], 1, 0), Box.make([zero_weight(A1)], 2))


def test_weyl_kac_bounded_by_verma():
    lam = Weight.make([1], 1, 0)
    box = Box.make([lam], 8)
    wk = weyl_kac_character(A1, lam, box)
    verma = verma_character(A1, lam, box)
    for mu, mult in wk.entries.items():
        assert 0 <= mult <= verma.entries[mu]


def crit_box(rs, labels, depth):
    lam = Weight.make(labels, rs.critical_level, 0)
    return lam, Box.make([lam], depth)


def test_decomposition_generic_identity():
    lam, box = crit_box(A1, [0], 3)
    matrix = decomposition_matrix(A1, FiberSpec.generic(), box)
    members = enumerate_box(A1, box)
    assert matrix.entries == {(mu, mu): 1 for mu in members}


def test_decomposition_subgeneric_a1():
    lam, box = crit_box(A1, [0], 4)
    matrix = decomposition_matrix(A1, FiberSpec.subgeneric(A1, (1,)), box)
    down = Weight.make([-2], -2, 0)
    assert matrix.value(lam, lam) == 1
    assert matrix.value(lam, down) == 1
    assert matrix.value(down, lam) == 0


def test_decomposition_row_collapses_when_pairing_zero():
    lam, box = crit_box(A1, [-1], 3)
    matrix = decomposition_matrix(A1, FiberSpec.subgeneric(A1, (1,)), box)
    row = [mu for (l, mu) in matrix.entries if l == lam]
    assert row == [lam]


def test_decomposition_unitriangular_and_order_respecting():
    lam, box = crit_box(A2, [0, 0], 3)
    matrix = decomposition_matrix(A2, FiberSpec.subgeneric(A2, (1, 0)), box)
    for (l, mu), v in matrix.entries.items():
        assert v == 1
        assert leq(A2, mu, l)
    for mu in matrix.weights:
        assert matrix.value(mu, mu) == 1


def test_decomposition_rejects_closed_and_noncritical():
    lam, box = crit_box(A1, [0], 2)
    with pytest.raises(UnsupportedFiber):
        decomposition_matrix(A1, FiberSpec.closed(), box)
    bad = Box.make([Weight.make([0], 0, 0)], 2)
    with pytest.raises(NonCriticalWeight):
        decomposition_matrix(A1, FiberSpec.generic(), bad)


def test_projective_generic_is_verma():
    lam, box = crit_box(A1, [0], 3)
    out = projective_multiplicities(A1, lam, FiberSpec.generic(), box)
    assert out == {lam: 1}


def test_projective_subgeneric_example():
    top, box = crit_box(A1, [0], 4)
    mu = Weight.make([-2], -2, 0)
    out = projective_multiplicities(A1, mu, FiberSpec.subgeneric(A1, (1,)), box)
    assert out[mu] == 1
    assert out[top] == 1  # alpha-arrow from the top lands on mu


def test_projective_support_inside_linkage_class():
    top, box = crit_box(A1, [0], 4)
    fiber = FiberSpec.subgeneric(A1, (1,))
    for mu in enumerate_box(A1, box):
        out = projective_multiplicities(A1, mu, fiber, box)
        cls = set(linkage_class(A1, mu, fiber, False, box))
        assert set(out) <= cls


def test_projective_restricted_flag_is_inert_here():
    top, box = crit_box(A1, [0], 3)
    fiber = FiberSpec.subgeneric(A1, (1,))
    assert projective_multiplicities(A1, top, fiber, box) == projective_multiplicities(
        A1, top, fiber, box, restricted=True
    )


def test_character_scale_invariance():
    scaled = A1.rescaled(2 * A1.dual_coxeter)
    lam = Weight.make([0], -2, 0)
    box = Box.make([lam], 4)
    assert verma_character(scaled, lam, box).entries == verma_character(A1, lam, box).entries
    fiber = FiberSpec.subgeneric(A1, (1,))
    assert decomposition_matrix(scaled, fiber, box).entries == decomposition_matrix(A1, fiber, box).entries
