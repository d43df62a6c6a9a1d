"""Unit tests for ringrecon.serialization."""

from ringrecon.algebras import build_alg_category
from ringrecon.categories import identity_functor, poset_category
from ringrecon.errors import MalformedDataError
from ringrecon.rings import RingHom
from ringrecon.serialization import (dump_alg_category, dump_category,
                                     dump_functor, dump_hom, dump_ring,
                                     dump_space, dumps, load_alg_category,
                                     load_category, load_functor, load_hom,
                                     load_ring, load_space, loads)
from ringrecon.tests.testcase import RingReconTestCase, standard_ring
from ringrecon.topology import sierpinski


def _z2_tables():
    return {
        'add': [[0, 1], [1, 0]],
        'mul': [[0, 0], [0, 1]],
        'one': 1,
    }


class RingDocumentTests(RingReconTestCase):
    """Unit tests for loading and dumping rings and maps."""

    def test_load_ring(self):
        """Testing load_ring"""
        ring = load_ring(dict(_z2_tables(), name='two'))

        self.assertEqual(ring.order, 2)
        self.assertEqual(ring.name, 'two')
        self.assertEqual(ring, standard_ring('Z/2'))

    def test_dump_ring(self):
        """Testing dump_ring"""
        self.assertEqual(dump_ring(standard_ring('Z/2')),
                         dict(_z2_tables(), order=2, name='Z/2'))

    def test_load_ring_with_bad_entry(self):
        """Testing load_ring with an out-of-range entry"""
        data = _z2_tables()
        data['mul'][1][1] = 5

        with self.assertRaises(MalformedDataError) as ctx:
            load_ring(data)

        self.assertEqual(ctx.exception.location, '$.mul[1][1]')

    def test_load_ring_with_missing_key(self):
        """Testing load_ring with a missing table"""
        with self.assertRaises(MalformedDataError) as ctx:
            load_ring({'add': [[0]]})

        self.assertEqual(ctx.exception.location, '$')
        self.assertIn("'mul'", str(ctx.exception))

    def test_load_ring_with_order_mismatch(self):
        """Testing load_ring with an order that does not match the tables"""
        with self.assertRaises(MalformedDataError) as ctx:
            load_ring(dict(_z2_tables(), order=3))

        self.assertEqual(ctx.exception.location, '$.order')

    def test_load_ring_with_failed_axiom(self):
        """Testing load_ring with tables that are not a ring"""
        data = _z2_tables()
        data['one'] = 0

        with self.assertRaises(MalformedDataError) as ctx:
            load_ring(data)

        self.assertEqual(ctx.exception.location, '$')
        self.assertIn('not a ring', str(ctx.exception))

    def test_load_hom_with_nested_error(self):
        """Testing load_hom reports paths inside the target ring"""
        data = dump_hom(RingHom(standard_ring('Z/4'), standard_ring('Z/2'),
                                [0, 1, 0, 1]))
        data['target']['add'][0][1] = -1

        with self.assertRaises(MalformedDataError) as ctx:
            load_hom(data)

        self.assertEqual(ctx.exception.location, '$.target.add[0][1]')

    def test_load_hom_with_bad_map(self):
        """Testing load_hom with a map that is not a homomorphism"""
        data = dump_hom(RingHom(standard_ring('Z/4'), standard_ring('Z/2'),
                                [0, 1, 0, 1]))
        data['map'] = [0, 1, 1, 1]

        with self.assertRaises(MalformedDataError) as ctx:
            load_hom(data)

        self.assertEqual(ctx.exception.location, '$.map')

    def test_loads_with_invalid_json(self):
        """Testing loads with invalid JSON"""
        with self.assertRaises(MalformedDataError) as ctx:
            loads('{"add": [')

        self.assertEqual(ctx.exception.location, '$')


class CategoryDocumentTests(RingReconTestCase):
    """Unit tests for loading and dumping categories."""

    def test_category_document(self):
        """Testing dump_category and load_category"""
        category = poset_category([0, 1, 2], lambda a, b: a <= b)
        loaded = load_category(loads(dumps(dump_category(category))))

        self.assertEqual(loaded.num_morphisms, 6)
        self.assertEqual(loaded.identities, category.identities)
        self.assertEqual(loaded.compose(4, 1), 2)

    def test_load_category_with_bad_object(self):
        """Testing load_category with a morphism to a missing object"""
        data = {
            'objects': ['a'],
            'morphisms': [[0, 0, 5]],
            'identities': [0],
            'compose': [[0, 0, 0]],
        }

        with self.assertRaises(MalformedDataError) as ctx:
            load_category(data)

        self.assertEqual(ctx.exception.location, '$.morphisms[0]')

    def test_load_category_with_failed_axiom(self):
        """Testing load_category with a missing composite"""
        data = {
            'objects': ['a'],
            'morphisms': [[0, 0, 0], [1, 0, 0]],
            'identities': [0],
            'compose': [[0, 0, 0], [0, 1, 1], [1, 0, 1]],
        }

        with self.assertRaises(MalformedDataError) as ctx:
            load_category(data)

        self.assertEqual(ctx.exception.location, '$.compose')

    def test_alg_category_document(self):
        """Testing dump_alg_category and load_alg_category"""
        algebras = build_alg_category(standard_ring('Z/2'), 4)
        loaded = load_alg_category(loads(dumps(dump_alg_category(algebras))))

        self.assertEqual(loaded.bound, 4)
        self.assertEqual(loaded.category.num_morphisms,
                         algebras.category.num_morphisms)
        self.assertEqual([h.map for h in loaded.realization],
                         [h.map for h in algebras.realization])
        self.assertIs(loaded.ring_of(loaded.initial_object), loaded.base)

    def test_load_alg_category_with_bad_realization(self):
        """Testing load_alg_category with a broken ring map"""
        algebras = build_alg_category(standard_ring('Z/2'), 2)
        data = dump_alg_category(algebras)
        data['algebra']['realization'].pop('0')

        with self.assertRaises(MalformedDataError) as ctx:
            load_alg_category(data)

        self.assertEqual(ctx.exception.location, '$.algebra.realization.0')

    def test_load_functor(self):
        """Testing load_functor"""
        category = poset_category([0, 1], lambda a, b: a <= b)
        data = dump_functor(identity_functor(category))

        self.assertEqual(load_functor(data, category, category).object_map,
                         (0, 1))

        data['morphisms'] = [0, 0, 2]

        with self.assertRaises(MalformedDataError) as ctx:
            load_functor(data, category, category)

        self.assertIn('not a functor', str(ctx.exception))


class SpaceDocumentTests(RingReconTestCase):
    """Unit tests for loading and dumping spaces."""

    def test_space_document(self):
        """Testing dump_space and load_space"""
        self.assertEqual(load_space(dump_space(sierpinski())), sierpinski())

    def test_load_space_with_failed_axiom(self):
        """Testing load_space with opens that are not a topology"""
        with self.assertRaises(MalformedDataError) as ctx:
            load_space({'points': 2, 'opens': [[], [0]]})

        self.assertEqual(ctx.exception.location, '$.opens')

    def test_load_space_with_bad_point(self):
        """Testing load_space with a point outside the space"""
        with self.assertRaises(MalformedDataError) as ctx:
            load_space({'points': 2, 'opens': [[], [3], [0, 1]]})

        self.assertEqual(ctx.exception.location, '$.opens[1][0]')
