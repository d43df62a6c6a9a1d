"""Unit tests for ringrecon.abelian."""

from hypothesis import given, strategies as st

from ringrecon.abelian import (AbelianPresentation, RelationLattice,
                               abelian_group_types, additive_orders,
                               cyclic_product)
from ringrecon.errors import PreconditionError, RingReconError
from ringrecon.tests.testcase import RingReconTestCase


class AbelianGroupTypesTests(RingReconTestCase):
    """Unit tests for abelian_group_types."""

    def test_with_trivial_group(self):
        """Testing abelian_group_types with order 1"""
        self.assertEqual(abelian_group_types(1), [()])

    def test_with_prime_power(self):
        """Testing abelian_group_types with order 8"""
        self.assertEqual(abelian_group_types(8),
                         [(8,), (4, 2), (2, 2, 2)])

    def test_with_mixed_order(self):
        """Testing abelian_group_types with order 12"""
        self.assertEqual(abelian_group_types(12),
                         [(4, 3), (3, 2, 2)])

    def test_with_non_positive(self):
        """Testing abelian_group_types with order 0"""
        with self.assertRaises(PreconditionError):
            abelian_group_types(0)


class CyclicProductTests(RingReconTestCase):
    """Unit tests for CyclicProduct."""

    def test_zero_is_first(self):
        """Testing CyclicProduct puts the zero tuple at index 0"""
        group = cyclic_product((4, 2))

        self.assertEqual(group.size, 8)
        self.assertEqual(group.coords(0), (0, 0))
        self.assertEqual(group.index((0, 0)), 0)

    def test_add_table_orders(self):
        """Testing CyclicProduct.add_table element orders"""
        group = cyclic_product((4, 2))
        orders = additive_orders(group.add_table())

        self.assertEqual(sorted(orders), [1, 2, 2, 2, 4, 4, 4, 4])

    @given(st.integers(min_value=0, max_value=11),
           st.integers(min_value=0, max_value=11))
    def test_add_is_commutative(self, x, y):
        """Testing CyclicProduct.add is commutative"""
        group = cyclic_product((3, 2, 2))
        a = group.coords(x)
        b = group.coords(y)

        self.assertEqual(group.add(a, b), group.add(b, a))
        self.assertEqual(group.index(group.add(a, group.scale(-1, a))), 0)


class AbelianPresentationTests(RingReconTestCase):
    """Unit tests for AbelianPresentation."""

    def test_with_cyclic_group(self):
        """Testing AbelianPresentation with a cyclic group"""
        table = [[(x + y) % 6 for y in range(6)] for x in range(6)]
        presentation = AbelianPresentation(table, first=(1,))

        self.assertEqual(presentation.generators, [1])
        self.assertEqual(presentation.steps, [6])
        self.assertEqual(presentation.rank, 1)
        self.assertEqual(presentation.coords(5), (5,))
        self.assertEqual(presentation.relations, [(6,)])

    def test_coords_round_trip(self):
        """Testing AbelianPresentation.element inverts coords"""
        group = cyclic_product((4, 2))
        presentation = AbelianPresentation(group.add_table())

        for x in range(group.size):
            self.assertEqual(presentation.element(presentation.coords(x)),
                             x)

    def test_relations_vanish(self):
        """Testing AbelianPresentation relations evaluate to zero"""
        group = cyclic_product((2, 2, 2))
        presentation = AbelianPresentation(group.add_table())

        self.assertEqual(presentation.rank, 3)

        for relation in presentation.relations:
            self.assertEqual(presentation.element(relation), 0)


class RelationLatticeTests(RingReconTestCase):
    """Unit tests for RelationLattice."""

    def test_with_diagonal_relations(self):
        """Testing RelationLattice with diagonal relations"""
        lattice = RelationLattice(2, [(2, 0), (0, 3)])

        self.assertEqual(lattice.diagonal, (2, 3))
        self.assertEqual(lattice.order, 6)
        self.assertEqual(lattice.reduce((5, 7)), (1, 1))
        self.assertEqual(len(lattice.representatives()), 6)
        self.assertEqual(lattice.representatives()[0], (0, 0))

    def test_with_mixed_relations(self):
        """Testing RelationLattice with relations mixing coordinates"""
        lattice = RelationLattice(2, [(2, 1), (0, 2)])

        self.assertEqual(lattice.order, 4)
        self.assertEqual(lattice.reduce((2, 1)), (0, 0))
        self.assertEqual(lattice.reduce((1, 0)), lattice.reduce((5, 0)))

    def test_with_rank_zero(self):
        """Testing RelationLattice with rank 0"""
        lattice = RelationLattice(0, [])

        self.assertEqual(lattice.order, 1)
        self.assertEqual(lattice.representatives(), [()])

    def test_with_deficient_rank(self):
        """Testing RelationLattice with relations not of full rank"""
        with self.assertRaises(RingReconError):
            RelationLattice(2, [(2, 0)])

    @given(st.integers(min_value=-20, max_value=20),
           st.integers(min_value=-20, max_value=20),
           st.integers(min_value=-5, max_value=5),
           st.integers(min_value=-5, max_value=5))
    def test_reduce_is_class_invariant(self, a, b, s, t):
        """Testing RelationLattice.reduce is constant on cosets"""
        lattice = RelationLattice(2, [(2, 1), (0, 2)])
        shifted = (a + 2 * s, b + s + 2 * t)
        reduced = lattice.reduce((a, b))

        self.assertEqual(lattice.reduce(shifted), reduced)
        self.assertIn(reduced, lattice.representatives())
