"""Unit tests for ringrecon.cogroups."""

from ringrecon.cogroups import (CogroupObject, augmented_algebras,
                                classify_cogroup, cogroup_homs,
                                cogroup_isomorphism, enumerate_cogroups,
                                module_equivalence_check, nil_extension,
                                nil_extension_map)
from ringrecon.errors import AxiomError
from ringrecon.modules import module_homs, regular_module, zero_module
from ringrecon.rings import identity_hom, is_isomorphic
from ringrecon.tests.testcase import (RingReconTestCase, slow_test,
                                      standard_ring)


class NilExtensionTests(RingReconTestCase):
    """Unit tests for nil_extension."""

    def test_with_regular_module(self):
        """Testing nil_extension of Z/2 by itself is the dual numbers"""
        base = standard_ring('Z/2')
        cogroup = nil_extension(base, regular_module(base))

        cogroup.verify()
        self.assertRingAxioms(cogroup.algebra)
        self.assertIsomorphic(cogroup.algebra, standard_ring('Z2[e]'))
        self.assertEqual(cogroup.carrier.kernel, [0, 1])

    def test_with_zero_module(self):
        """Testing nil_extension by the zero module"""
        base = standard_ring('Z/3')
        cogroup = nil_extension(base, zero_module(base))

        cogroup.verify()
        self.assertEqual(cogroup.algebra.order, 3)

    def test_group_law(self):
        """Testing CogroupObject.multiply adds the nilpotent parts"""
        base = standard_ring('Z/3')
        cogroup = nil_extension(base, regular_module(base))

        # (a, m) has index 3a + m.
        self.assertEqual(cogroup.multiply(4, 5), 3)
        self.assertEqual(cogroup.inverse(4), 5)

    def test_verify_with_bad_inverse(self):
        """Testing CogroupObject.verify with the identity as coinverse"""
        base = standard_ring('Z/3')
        cogroup = nil_extension(base, regular_module(base))

        with self.assertRaises(AxiomError) as ctx:
            CogroupObject(cogroup.carrier, cogroup.fiber,
                          cogroup.multiplication,
                          identity_hom(cogroup.algebra))

        self.assertEqual(ctx.exception.axiom, 'inverse law')
        self.assertEqual(ctx.exception.witness, (1,))

    def test_verify_with_projection_as_multiplication(self):
        """Testing CogroupObject.verify with a mutated multiplication"""
        base = standard_ring('Z/3')
        cogroup = nil_extension(base, regular_module(base))

        with self.assertRaises(AxiomError) as ctx:
            CogroupObject(cogroup.carrier, cogroup.fiber, cogroup.fiber[1],
                          cogroup.inverse)

        self.assertEqual(ctx.exception.axiom, 'unit laws')
        self.assertEqual(ctx.exception.witness, (1,))


class CogroupClassificationTests(RingReconTestCase):
    """Unit tests for enumerating and classifying cogroups."""

    def test_enumerate_cogroups(self):
        """Testing enumerate_cogroups over Z/2"""
        cogroups = enumerate_cogroups(standard_ring('Z/2'), 4)

        self.assertEqual([c.algebra.order for c in cogroups], [2, 4])
        self.assertIsomorphic(cogroups[1].algebra, standard_ring('Z2[e]'))

    def test_classify_cogroup(self):
        """Testing classify_cogroup recovers the kernel module"""
        cogroups = enumerate_cogroups(standard_ring('Z/2'), 4)

        self.assertEqual(classify_cogroup(cogroups[0]).order, 1)

        module = classify_cogroup(cogroups[1])
        module.verify()
        self.assertEqual(module.order, 2)

    def test_enumerate_cogroups_over_z4(self):
        """Testing enumerate_cogroups over Z/4 with bound 8"""
        cogroups = enumerate_cogroups(standard_ring('Z/4'), 8)

        self.assertEqual([c.algebra.order for c in cogroups], [4, 8])
        self.assertEqual(classify_cogroup(cogroups[1]).order, 2)

    def test_field_has_no_augmentation(self):
        """Testing F4 carries no cogroup over Z/2"""
        field = standard_ring('F4')
        carriers = augmented_algebras(standard_ring('Z/2'), 4)

        self.assertFalse(any(is_isomorphic(c.algebra, field)
                             for c in carriers))
        self.assertEqual(
            [c.algebra.order for c in enumerate_cogroups(field, 8)], [4])

    def test_cogroup_isomorphism(self):
        """Testing cogroup_isomorphism with a trivial extension"""
        base = standard_ring('Z/2')
        cogroups = enumerate_cogroups(base, 4)
        extension = nil_extension(base, regular_module(base))

        self.assertIsNotNone(cogroup_isomorphism(extension, cogroups[1]))
        self.assertIsNone(cogroup_isomorphism(extension, cogroups[0]))

    def test_cogroup_homs_match_module_homs(self):
        """Testing cogroup_homs counts agree with module_homs"""
        base = standard_ring('Z/3')
        module = regular_module(base)
        extension = nil_extension(base, module)

        self.assertEqual(len(cogroup_homs(extension, extension)),
                         len(module_homs(module, module)))

    def test_nil_extension_map(self):
        """Testing nil_extension_map of a module map"""
        base = standard_ring('Z/2')
        module = regular_module(base)
        f = nil_extension_map(base, (0, 1), module, module)

        f.verify()
        self.assertEqual(f.map, (0, 1, 2, 3))


class ModuleEquivalenceTests(RingReconTestCase):
    """Unit tests for module_equivalence_check."""

    def test_over_z2(self):
        """Testing module_equivalence_check over Z/2"""
        report = module_equivalence_check(standard_ring('Z/2'), 4)

        self.assertTrue(report.passed)
        self.assertEqual(report.matching, [0, 1])
        self.assertIsNone(report.counterexample)

        data = report.to_dict()
        self.assertEqual(data['modules'], 2)
        self.assertEqual(data['cogroups'], 2)

    def test_over_z3(self):
        """Testing module_equivalence_check over Z/3"""
        report = module_equivalence_check(standard_ring('Z/3'), 9)

        self.assertTrue(report.passed)
        self.assertEqual(len(report.modules), 2)
        self.assertEqual(len(report.cogroups), 2)

    def test_over_product(self):
        """Testing module_equivalence_check over Z/2 x Z/2"""
        report = module_equivalence_check(standard_ring('Z2xZ2'), 8)

        self.assertTrue(report.passed)
        self.assertEqual(len(report.modules), 3)
        self.assertEqual(len(report.cogroups), 3)

    @slow_test
    def test_small_rings_at_bound_sixteen(self):
        """Testing module_equivalence_check for six rings with bound 16"""
        for name in ('Z/2', 'Z/4', 'F4', 'Z2[e]', 'Z2xZ2', 'Z/9'):
            report = module_equivalence_check(standard_ring(name), 16)

            self.assertTrue(report.passed, '%s: %r' % (name,
                                                       report.counterexample))

            for i, j, module_count, cogroup_count in report.hom_counts:
                self.assertEqual(module_count, cogroup_count)
