"""Unit tests for ringrecon.modules."""

from ringrecon.errors import AxiomError, PreconditionError
from ringrecon.modules import (FinModule, additive_endomorphisms,
                               enumerate_modules, module_homs,
                               module_isomorphism, regular_module,
                               restrict_scalars, zero_module)
from ringrecon.rings import RingHom
from ringrecon.tests.testcase import RingReconTestCase, standard_ring


class FinModuleTests(RingReconTestCase):
    """Unit tests for FinModule."""

    def test_regular_module(self):
        """Testing regular_module satisfies the module axioms"""
        module = regular_module(standard_ring('Z/4'))

        module.verify()
        self.assertEqual(module.order, 4)
        self.assertEqual(module.act(2, 3), 2)
        self.assertEqual(module.neg(1), 3)

    def test_zero_module(self):
        """Testing zero_module"""
        module = zero_module(standard_ring('Z/3'))

        module.verify()
        self.assertEqual(module.order, 1)
        self.assertEqual(module.name, '0')

    def test_verify_with_bad_action(self):
        """Testing FinModule.verify with an action that is not additive"""
        ring = standard_ring('Z/2')
        add_table = [[(x + y) % 3 for y in range(3)] for x in range(3)]

        with self.assertRaises(AxiomError) as ctx:
            FinModule(ring, add_table, [[0, 0, 0], [0, 1, 2]])

        self.assertEqual(ctx.exception.axiom,
                         'action distributes over ring addition')
        self.assertEqual(ctx.exception.witness, (1, 1, 1))

    def test_verify_with_bad_shape(self):
        """Testing FinModule.verify with a short action table"""
        with self.assertRaises(AxiomError) as ctx:
            FinModule(standard_ring('Z/2'), [[0, 1], [1, 0]], [[0, 0]])

        self.assertEqual(ctx.exception.axiom,
                         'action table has the right shape')


class RestrictScalarsTests(RingReconTestCase):
    """Unit tests for restrict_scalars."""

    def test_along_reduction(self):
        """Testing restrict_scalars along Z/4 -> Z/2"""
        z2 = standard_ring('Z/2')
        z4 = standard_ring('Z/4')
        module = restrict_scalars(regular_module(z2),
                                  RingHom(z4, z2, [0, 1, 0, 1]))

        module.verify()
        self.assertIs(module.base, z4)
        self.assertEqual(module.act(3, 1), 1)
        self.assertEqual(module.act(2, 1), 0)

    def test_with_wrong_ring(self):
        """Testing restrict_scalars with a module over another ring"""
        z2 = standard_ring('Z/2')

        with self.assertRaises(PreconditionError):
            restrict_scalars(regular_module(standard_ring('Z/3')),
                             RingHom(standard_ring('Z/4'), z2,
                                     [0, 1, 0, 1]))


class ModuleHomTests(RingReconTestCase):
    """Unit tests for module homomorphisms."""

    def test_module_homs_of_regular_module(self):
        """Testing module_homs on a regular module"""
        module = regular_module(standard_ring('Z/4'))
        homs = module_homs(module, module)

        self.assertEqual(len(homs), 4)
        self.assertEqual(homs[0], (0, 0, 0, 0))
        self.assertIn((0, 1, 2, 3), homs)

    def test_module_homs_between_orders(self):
        """Testing module_homs from Z/4 to Z/2 over Z/4"""
        z4 = standard_ring('Z/4')
        target = restrict_scalars(regular_module(standard_ring('Z/2')),
                                  RingHom(z4, standard_ring('Z/2'),
                                          [0, 1, 0, 1]))

        self.assertEqual(module_homs(regular_module(z4), target),
                         [(0, 0, 0, 0), (0, 1, 0, 1)])

    def test_module_homs_with_different_rings(self):
        """Testing module_homs with modules over different rings"""
        with self.assertRaises(PreconditionError):
            module_homs(regular_module(standard_ring('Z/2')),
                        regular_module(standard_ring('Z/3')))

    def test_additive_endomorphisms(self):
        """Testing additive_endomorphisms of the field with four elements"""
        module = regular_module(standard_ring('F4'))

        self.assertEqual(len(additive_endomorphisms(module)), 16)
        self.assertEqual(len(module_homs(module, module)), 4)

    def test_module_isomorphism(self):
        """Testing module_isomorphism"""
        z4 = standard_ring('Z/4')
        target = restrict_scalars(regular_module(standard_ring('Z/2')),
                                  RingHom(z4, standard_ring('Z/2'),
                                          [0, 1, 0, 1]))

        self.assertIsNone(module_isomorphism(regular_module(z4), target))
        self.assertEqual(module_isomorphism(target, target), (0, 1))


class EnumerateModulesTests(RingReconTestCase):
    """Unit tests for enumerate_modules."""

    def test_over_field(self):
        """Testing enumerate_modules over Z/2"""
        modules = enumerate_modules(standard_ring('Z/2'), 4)

        self.assertEqual([m.order for m in modules], [1, 2, 4])
        self.assertEqual(modules[0].name, '0')

    def test_over_z4(self):
        """Testing enumerate_modules over Z/4"""
        modules = enumerate_modules(standard_ring('Z/4'), 4)

        self.assertEqual([m.order for m in modules], [1, 2, 4, 4])

        for module in modules:
            module.verify()

    def test_over_z6(self):
        """Testing enumerate_modules over Z/6"""
        modules = enumerate_modules(standard_ring('Z/6'), 3)

        self.assertEqual([m.order for m in modules], [1, 2, 3])

    def test_representatives_are_distinct(self):
        """Testing enumerate_modules over the field with four elements"""
        modules = enumerate_modules(standard_ring('F4'), 4)

        self.assertEqual(len(modules), 2)
        self.assertIsNone(module_isomorphism(modules[0], modules[1]))
