from __future__ import annotations

from fractions import Fraction
from random import Random

import pytest

from woods.catalog import Catalog
from woods.enumeration import EnumerationConfig
from woods.enumeration import block_closest_vectors
from woods.enumeration import block_points_within
from woods.enumeration import block_shortest_vectors
from woods.enumeration import closest_vectors
from woods.enumeration import kissing_number
from woods.enumeration import lll_reduce_gram
from woods.enumeration import minimum_norm
from woods.enumeration import reduce_basis
from woods.enumeration import shortest_vectors
from woods.errors import EnumerationBudgetExceeded
from woods.lattice import BlockLattice
from woods.lattice import GramBlock
from woods.lattice import direct_sum
from woods.lattice import scale_lattice
from woods.lattice.linalg import determinant
from woods.lattice.linalg import mat_mul
from woods.lattice.linalg import quadratic_form
from woods.lattice.linalg import to_matrix
from woods.lattice.linalg import transpose
from woods.scalar import MonomialScalar
from woods.scalar import ScalarSum

from .utils import brute_force_closest
from .utils import brute_force_minimum
from .utils import canonical
from .utils import random_gram


def test_lll_returns_a_unimodular_change_of_basis() -> None:
    rng = Random(42)
    for n in (3, 4, 5):
        gram = random_gram(rng, n)
        transform, reduced = lll_reduce_gram(gram)
        as_fractions = to_matrix(transform)
        assert abs(determinant(as_fractions)) == 1
        assert mat_mul(transpose(as_fractions), mat_mul(gram, as_fractions)) == reduced
        assert reduced[0][0] <= 2 ** (n - 1) * brute_force_minimum(gram)[0]


def test_lll_undoes_a_skewed_rational_basis() -> None:
    gram = to_matrix([["1/2", 500], [500, "1000001/2"]])
    transform, reduced = lll_reduce_gram(gram)
    assert reduced == to_matrix([["1/2", 0], [0, "1/2"]])
    assert abs(determinant(to_matrix(transform))) == 1


def test_reduce_basis_keeps_scale_and_determinant() -> None:
    sqrt2 = MonomialScalar.prime_power(2, Fraction(1, 2))
    block = GramBlock.from_rows([[5, 7], [7, 10]], scale=sqrt2, label="B")
    transform, reduced = reduce_basis(block)
    assert reduced.scale == sqrt2
    assert reduced.label == "B"
    assert reduced.determinant() == block.determinant()
    assert abs(determinant(to_matrix(transform))) == 1
    assert min(reduced.gram[0][0], reduced.gram[1][1]) == 1


def test_lll_leaves_diagonal_grams_alone() -> None:
    gram = to_matrix([[1, 0], [0, 3]])
    transform, reduced = lll_reduce_gram(gram)
    assert transform == ((1, 0), (0, 1))
    assert reduced == gram


@pytest.mark.parametrize("seed", [1, 2, 3, 4, 5, 6])
def test_block_minimum_matches_brute_force(seed: int) -> None:
    rng = Random(seed)
    gram = random_gram(rng, rng.choice([2, 3, 4]))
    expected, found = brute_force_minimum(gram)
    result = block_shortest_vectors(gram)
    assert result.min_norm == expected
    assert set(result.vectors) == canonical(found)
    assert all(quadratic_form(gram, v) == expected for v in result.vectors)


@pytest.mark.parametrize("seed", [11, 12, 13, 14, 15, 16])
def test_block_closest_matches_brute_force(seed: int) -> None:
    rng = Random(seed)
    n = rng.choice([2, 3])
    gram = random_gram(rng, n)
    target = [Fraction(rng.randint(-8, 8), rng.choice([1, 2, 3, 4])) for _ in range(n)]
    expected, found = brute_force_closest(gram, target)
    result = block_closest_vectors(gram, target)
    assert result.dist_sq == expected
    assert set(result.vectors) == found


def test_block_closest_rejects_wrong_dimension() -> None:
    with pytest.raises(ValueError):
        block_closest_vectors(to_matrix([[2, 1], [1, 2]]), [Fraction(0)])


def test_points_within_radius() -> None:
    gram = to_matrix([[2, 1], [1, 2]])
    points = block_points_within(gram, [Fraction(1, 3), Fraction(1, 3)], 2 / 3 + 1e-9)
    assert set(points) == {(0, 0), (1, 0), (0, 1)}


def test_integer_lattice_minima() -> None:
    lattice = BlockLattice.zn(5)
    minimal = shortest_vectors(lattice)
    assert minimal.lambda1_sq == ScalarSum.of(1)
    assert minimal.kissing_number == 10
    closest = closest_vectors(BlockLattice.zn(3), [Fraction(1, 2)] * 3)
    assert closest.dist_sq == ScalarSum.of(Fraction(3, 4))
    assert closest.count == 8


@pytest.mark.parametrize(
    ("name", "min_norm", "kissing"),
    [("A2", 2, 6), ("D4", 2, 24), ("E8", 2, 240)],
)
def test_catalog_root_lattices(catalog: Catalog, name: str, min_norm: int, kissing: int) -> None:
    lattice = catalog.lattice(name)
    assert minimum_norm(lattice) == ScalarSum.of(min_norm)
    assert kissing_number(lattice) == kissing


def test_a2_deep_hole_has_three_closest_points(catalog: Catalog) -> None:
    result = closest_vectors(catalog.lattice("A2"), [Fraction(1, 3), Fraction(1, 3)])
    assert result.dist_sq == ScalarSum.of(Fraction(2, 3))
    assert set(result.closest) == {(0, 0), (1, 0), (0, 1)}


def test_equal_block_minima_are_merged(catalog: Catalog) -> None:
    a2 = catalog.lattice("A2")
    z2 = scale_lattice(BlockLattice.zn(2), MonomialScalar.prime_power(2, Fraction(1, 2)))
    minimal = shortest_vectors(direct_sum(a2, z2))
    assert minimal.lambda1_sq == ScalarSum.of(2)
    assert minimal.blocks == (0, 1)
    assert minimal.kissing_number == 10
    assert (0, 0, 1, 0) in minimal.vectors


def test_irrational_block_minimum_wins(catalog: Catalog) -> None:
    a2 = catalog.lattice("A2")
    z1 = scale_lattice(BlockLattice.zn(1), MonomialScalar.prime_power(2, Fraction(1, 4)))
    minimal = shortest_vectors(direct_sum(a2, z1))
    assert minimal.lambda1_sq == ScalarSum.of(MonomialScalar.prime_power(2, Fraction(1, 2)))
    assert minimal.blocks == (1,)
    assert minimal.vectors == ((0, 0, 1),)
    assert len(minimal.comparisons) == 1


def test_closest_distance_splits_over_blocks() -> None:
    sqrt2 = MonomialScalar.prime_power(2, Fraction(1, 2))
    lattice = direct_sum(BlockLattice.zn(1), scale_lattice(BlockLattice.zn(1), sqrt2))
    result = closest_vectors(lattice, [Fraction(1, 2), Fraction(1, 2)])
    assert result.dist_sq == ScalarSum.of(Fraction(1, 4), Fraction(1, 2))
    assert result.block_dist_sq == (Fraction(1, 4), Fraction(1, 4))
    assert result.count == 4


def test_budget_is_enforced(catalog: Catalog) -> None:
    with pytest.raises(EnumerationBudgetExceeded) as info:
        shortest_vectors(catalog.lattice("E8"), EnumerationConfig(node_budget=5))
    assert info.value.budget == 5


@pytest.mark.slow
@pytest.mark.parametrize(
    ("name", "min_norm", "kissing"),
    [("Lambda15", 4, 2340), ("BW16", 4, 4320)],
)
def test_catalog_laminated_minima(
    catalog: Catalog,
    name: str,
    min_norm: int,
    kissing: int,
) -> None:
    minimal = shortest_vectors(catalog.lattice(name))
    assert minimal.lambda1_sq == ScalarSum.of(min_norm)
    assert minimal.kissing_number == kissing
