"""Unit tests for ringrecon.topology."""

import networkx as nx

from ringrecon.errors import (AxiomError, FalsificationError,
                              PreconditionError)
from ringrecon.tests.testcase import RingReconTestCase
from ringrecon.topology import (FinTop, automorphisms, check_slice_naturality,
                                continuous_maps, discrete, enumerate_spaces,
                                find_sierpinski, from_preorder, indiscrete,
                                is_continuous, is_homeomorphic, open_point,
                                point, recover_map, recover_topology,
                                set_slice_category, set_slice_points,
                                sierpinski)


class FinTopTests(RingReconTestCase):
    """Unit tests for FinTop."""

    def test_sierpinski(self):
        """Testing sierpinski"""
        space = sierpinski()

        space.verify()
        self.assertEqual(space.sorted_opens, [[], [1], [0, 1]])
        self.assertTrue(space.is_open([1]))
        self.assertFalse(space.is_open([0]))
        self.assertEqual(space.minimal_opens,
                         [frozenset([0, 1]), frozenset([1])])

    def test_specialization_graph(self):
        """Testing FinTop.specialization_graph"""
        graph = sierpinski().specialization_graph()

        self.assertIsInstance(graph, nx.DiGraph)
        self.assertEqual(list(graph.edges), [(0, 1)])

    def test_from_preorder(self):
        """Testing from_preorder on a chain"""
        space = from_preorder(3, [(0, 1), (0, 2), (1, 2)])

        space.verify()
        self.assertEqual(space.sorted_opens,
                         [[], [2], [1, 2], [0, 1, 2]])

    def test_verify_without_whole_space(self):
        """Testing FinTop.verify without the whole space"""
        with self.assertRaises(AxiomError) as ctx:
            FinTop(2, [(), (0,)])

        self.assertEqual(ctx.exception.axiom, 'the whole space is open')

    def test_verify_without_unions(self):
        """Testing FinTop.verify with opens not closed under union"""
        with self.assertRaises(AxiomError) as ctx:
            FinTop(3, [(), (0,), (1,), (0, 1, 2)])

        self.assertEqual(ctx.exception.axiom, 'opens are closed under union')


class ContinuousMapTests(RingReconTestCase):
    """Unit tests for continuous maps and homeomorphisms."""

    def test_into_indiscrete(self):
        """Testing continuous_maps into an indiscrete space"""
        self.assertEqual(len(continuous_maps(discrete(3), indiscrete(2))), 8)

    def test_sierpinski_endomorphisms(self):
        """Testing continuous_maps of the Sierpinski space to itself"""
        self.assertEqual(continuous_maps(sierpinski(), sierpinski()),
                         [(0, 0), (0, 1), (1, 1)])
        self.assertFalse(is_continuous(sierpinski(), sierpinski(), (1, 0)))

    def test_automorphisms(self):
        """Testing automorphisms"""
        self.assertEqual(len(automorphisms(sierpinski())), 1)
        self.assertEqual(len(automorphisms(discrete(3))), 6)

    def test_is_homeomorphic(self):
        """Testing is_homeomorphic with relabeled points"""
        flipped = FinTop(2, [(), (0,), (0, 1)])

        self.assertTrue(is_homeomorphic(flipped, sierpinski()))
        self.assertFalse(is_homeomorphic(discrete(2), sierpinski()))


class EnumerateSpacesTests(RingReconTestCase):
    """Unit tests for enumerate_spaces."""

    def test_counts(self):
        """Testing enumerate_spaces counts homeomorphism classes"""
        spaces = enumerate_spaces(4)
        counts = [0] * 5

        for space in spaces:
            counts[space.size] += 1

        self.assertEqual(counts, [1, 1, 3, 9, 33])
        self.assertEqual(spaces[0].size, 0)

    def test_representatives_are_distinct(self):
        """Testing enumerate_spaces returns non-homeomorphic spaces"""
        spaces = [s for s in enumerate_spaces(3) if s.size == 3]

        for i, space in enumerate(spaces):
            space.verify()

            for other in spaces[i + 1:]:
                self.assertFalse(is_homeomorphic(space, other))


class RecoveryTests(RingReconTestCase):
    """Unit tests for recovering spaces from the Sierpinski space."""

    def setUp(self):
        super(RecoveryTests, self).setUp()

        self.spaces = enumerate_spaces(3)

    def test_find_sierpinski(self):
        """Testing find_sierpinski"""
        found = find_sierpinski([s for s in self.spaces if s.size == 2])

        self.assertEqual(found, sierpinski())
        self.assertEqual(open_point(found, self.spaces), 1)

    def test_find_sierpinski_without_candidates(self):
        """Testing find_sierpinski without the Sierpinski space"""
        with self.assertRaises(FalsificationError) as ctx:
            find_sierpinski([discrete(2), indiscrete(2)])

        self.assertEqual(ctx.exception.check, 'sierpinski-is-unique')

    def test_recover_topology(self):
        """Testing recover_topology on every space up to three points"""
        for space in self.spaces:
            recovered = recover_topology(space, sierpinski(), 1)

            self.assertTrue(is_homeomorphic(recovered, space))
            self.assertEqual(recovered.size, space.size)

    def test_recover_topology_with_closed_point(self):
        """Testing recover_topology with the closed point"""
        with self.assertRaises(FalsificationError):
            recover_topology(sierpinski(), sierpinski(), 0)

    def test_recover_topology_without_sierpinski(self):
        """Testing recover_topology with a space that is not Sierpinski"""
        with self.assertRaises(PreconditionError):
            recover_topology(point(), discrete(2), 1)

    def test_recover_map(self):
        """Testing recover_map on maps into the Sierpinski space"""
        chain = from_preorder(3, [(0, 1), (0, 2), (1, 2)])

        for mapping in continuous_maps(chain, sierpinski()):
            induced = recover_map(mapping, chain, sierpinski(),
                                  sierpinski(), 1)

            self.assertEqual(induced, mapping)

    def test_recover_topology_up_to_four_points(self):
        """Testing recover_topology on every space up to four points"""
        spaces = enumerate_spaces(4)

        self.assertEqual(len(spaces), 47)

        for space in spaces:
            self.assertTrue(is_homeomorphic(
                recover_topology(space, sierpinski(), 1), space))

    def test_recover_map_up_to_three_points(self):
        """Testing recover_map is natural on spaces up to three points"""
        for space in self.spaces:
            for other in self.spaces:
                for mapping in continuous_maps(space, other):
                    induced = recover_map(mapping, space, other, sierpinski(),
                                          1)

                    self.assertEqual(len(induced), space.size)


class SetSliceTests(RingReconTestCase):
    """Unit tests for the category of sets over a set."""

    def test_objects(self):
        """Testing set_slice_category objects"""
        slice_category = set_slice_category(2, 2)

        self.assertEqual(slice_category.objects,
                         [(), (0,), (1,), (0, 0), (0, 1), (1, 1)])
        self.assertEqual(slice_category.category.initial, [0])
        slice_category.category.verify()

    def test_points(self):
        """Testing set_slice_points"""
        slice_category = set_slice_category(2, 3)
        a = slice_category.locate((1, 0))
        result = set_slice_points(slice_category, a)

        self.assertEqual([slice_category.realization[m] for m in result],
                         [(0,), (1,)])

    def test_naturality(self):
        """Testing check_slice_naturality"""
        slice_category = set_slice_category(2, 2)

        self.assertEqual(check_slice_naturality(slice_category),
                         slice_category.category.num_morphisms)
