"""Unit tests for ringrecon.rings."""

from hypothesis import given, settings, strategies as st

from ringrecon.errors import AxiomError, MalformedDataError, PreconditionError
from ringrecon.rings import (FinRing, Ideal, RingHom, automorphisms,
                             check_fiber_product_universal,
                             check_tensor_universal, coequalizer,
                             compose_homs, enumerate_homs, enumerate_ideals,
                             enumerate_rings, fiber_product, finite_field,
                             ideal_generated, identity_hom, is_isomorphic,
                             is_ring_epimorphism, make_cyclic,
                             maximal_ideals, product, product_decomposition,
                             quotient, rings_of_order, tensor,
                             truncated_polynomial)
from ringrecon.tests.testcase import (RingReconTestCase, slow_test,
                                      standard_ring)


def _mod_map(source, target):
    return RingHom(source, target,
                   [x % target.order for x in source.elements])


def _augmentation():
    # Z/2[e] stores a + b·e at index 2a + b.
    return RingHom(standard_ring('Z2[e]'), standard_ring('Z/2'),
                   [0, 0, 1, 1])


class FinRingTests(RingReconTestCase):
    """Unit tests for FinRing."""

    def test_cyclic_structure(self):
        """Testing FinRing element structure of Z/4"""
        ring = standard_ring('Z/4')

        self.assertEqual(ring.additive_orders, (1, 4, 2, 4))
        self.assertEqual(ring.units, (1, 3))
        self.assertEqual(ring.idempotents, (0, 1))
        self.assertEqual(ring.nilpotents, (0, 2))
        self.assertEqual(ring.characteristic, 4)
        self.assertTrue(ring.is_local)
        self.assertFalse(ring.is_field)

    def test_arithmetic(self):
        """Testing FinRing arithmetic helpers"""
        ring = make_cyclic(7)

        self.assertEqual(ring.neg(3), 4)
        self.assertEqual(ring.sub(2, 5), 4)
        self.assertEqual(ring.power(3, 6), 1)
        self.assertEqual(ring.multiple(10, 1), 3)

    def test_zero_ring(self):
        """Testing FinRing with the zero ring"""
        ring = standard_ring('0')

        self.assertTrue(ring.is_zero_ring)
        self.assertEqual(ring.one, 0)
        self.assertEqual(ring.characteristic, 1)
        self.assertFalse(ring.is_field)
        self.assertFalse(ring.is_local)
        self.assertRingAxioms(ring)

    def test_standard_rings(self):
        """Testing FinRing axioms on the standard constructions"""
        for name in ('F4', 'Z2[e]', 'Z2xZ2', 'Z/6'):
            self.assertRingAxioms(standard_ring(name))

        self.assertRingAxioms(truncated_polynomial(make_cyclic(3), 3))
        self.assertRingAxioms(finite_field(8))

    def test_field_detection(self):
        """Testing FinRing.is_field"""
        self.assertTrue(standard_ring('F4').is_field)
        self.assertTrue(make_cyclic(5).is_field)
        self.assertFalse(standard_ring('Z2[e]').is_field)
        self.assertFalse(standard_ring('Z2xZ2').is_field)
        self.assertFalse(standard_ring('Z2xZ2').is_local)

    def test_verify_with_bad_distributivity(self):
        """Testing FinRing.verify with a non-distributive multiplication"""
        add = [[(x + y) % 3 for y in range(3)] for x in range(3)]
        mul = [[0, 0, 0], [0, 1, 2], [0, 2, 2]]

        with self.assertRaises(AxiomError) as ctx:
            FinRing(add, mul, 1)

        self.assertEqual(ctx.exception.axiom, 'multiplication distributes')
        self.assertEqual(ctx.exception.witness, (2, 1, 1))

    def test_verify_with_zero_equal_to_one(self):
        """Testing FinRing.verify with 0 = 1 in a nonzero ring"""
        with self.assertRaises(AxiomError) as ctx:
            FinRing([[0, 1], [1, 0]], [[0, 0], [0, 0]], 0)

        self.assertEqual(ctx.exception.axiom,
                         'one is a multiplicative identity')

    def test_from_tables_with_short_row(self):
        """Testing FinRing.from_tables with a short row"""
        with self.assertRaises(MalformedDataError) as ctx:
            FinRing.from_tables([[0, 1], [1]], [[0, 0], [0, 1]], 1)

        self.assertEqual(ctx.exception.location, '$.add[1]')

    def test_from_tables_with_out_of_range_entry(self):
        """Testing FinRing.from_tables with an out-of-range entry"""
        with self.assertRaises(MalformedDataError) as ctx:
            FinRing.from_tables([[0, 1], [1, 0]], [[0, 0], [0, 7]], 1)

        self.assertEqual(ctx.exception.location, '$.mul[1][1]')

    def test_from_tables_with_bad_one(self):
        """Testing FinRing.from_tables with an out-of-range identity"""
        with self.assertRaises(MalformedDataError) as ctx:
            FinRing.from_tables([[0, 1], [1, 0]], [[0, 0], [0, 1]], 2)

        self.assertEqual(ctx.exception.location, '$.one')

    def test_equality_ignores_name(self):
        """Testing FinRing equality ignores the display name"""
        ring = make_cyclic(3)
        renamed = FinRing(ring.add_table, ring.mul_table, ring.one,
                          name='other')

        self.assertEqual(ring, renamed)

    @given(st.integers(min_value=2, max_value=24))
    def test_cyclic_rings(self, n):
        """Testing make_cyclic satisfies the axioms"""
        ring = make_cyclic(n)

        self.assertRingAxioms(ring)
        self.assertEqual(ring.characteristic, n)
        self.assertEqual(str(ring), 'Z/%d' % n)

    def test_make_cyclic_with_zero(self):
        """Testing make_cyclic with modulus 0"""
        with self.assertRaises(PreconditionError):
            make_cyclic(0)

    def test_finite_field_with_composite(self):
        """Testing finite_field with a non prime power"""
        with self.assertRaises(PreconditionError):
            finite_field(6)


class RingHomTests(RingReconTestCase):
    """Unit tests for RingHom."""

    def test_reduction(self):
        """Testing RingHom with reduction Z/4 -> Z/2"""
        f = _mod_map(standard_ring('Z/4'), standard_ring('Z/2'))

        self.assertEqual(f.map, (0, 1, 0, 1))
        self.assertEqual(sorted(f.kernel().elements), [0, 2])
        self.assertEqual(f.image(), [0, 1])
        self.assertTrue(f.is_surjective)
        self.assertFalse(f.is_injective)

    def test_verify_with_non_unital_map(self):
        """Testing RingHom.verify with a map not preserving one"""
        with self.assertRaises(AxiomError) as ctx:
            RingHom(standard_ring('Z/2'), standard_ring('Z/2'), [0, 0])

        self.assertEqual(ctx.exception.axiom, 'map preserves one')

    def test_inverse(self):
        """Testing RingHom.inverse"""
        iso = is_isomorphic(standard_ring('Z/6'),
                            product(make_cyclic(2), make_cyclic(3))[0])

        self.assertIsNotNone(iso)
        self.assertEqual(compose_homs(iso.inverse(), iso),
                         identity_hom(standard_ring('Z/6')))

    def test_inverse_with_non_isomorphism(self):
        """Testing RingHom.inverse with a non-bijective map"""
        f = _mod_map(standard_ring('Z/4'), standard_ring('Z/2'))

        with self.assertRaises(PreconditionError):
            f.inverse()


class IdealTests(RingReconTestCase):
    """Unit tests for ideals and quotients."""

    def test_enumerate_ideals(self):
        """Testing enumerate_ideals with Z/6"""
        ideals = enumerate_ideals(standard_ring('Z/6'))

        self.assertEqual([sorted(i.elements) for i in ideals],
                         [[0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]])

    def test_ideal_generated(self):
        """Testing ideal_generated with Z/6"""
        ideal = ideal_generated(standard_ring('Z/6'), [4])

        self.assertEqual(sorted(ideal.elements), [0, 2, 4])
        self.assertTrue(ideal.is_valid())

    def test_quotient(self):
        """Testing quotient of Z/4 by (2)"""
        ring = standard_ring('Z/4')
        q, projection = quotient(ring, Ideal(ring, [0, 2]))

        self.assertEqual(q.order, 2)
        self.assertIsomorphic(q, standard_ring('Z/2'))
        self.assertEqual(projection.map, (0, 1, 0, 1))

    def test_quotient_by_zero_ideal(self):
        """Testing quotient by the zero ideal"""
        ring = standard_ring('Z2[e]')
        q, projection = quotient(ring, Ideal(ring, [0]))

        self.assertEqual(q, ring)
        self.assertEqual(projection.map, (0, 1, 2, 3))

    def test_quotient_of_dual_numbers(self):
        """Testing quotient of Z/2[e] by (e)"""
        ring = standard_ring('Z2[e]')
        q, projection = quotient(ring, ideal_generated(ring, [1]))

        self.assertIsomorphic(q, standard_ring('Z/2'))

    def test_quotient_with_non_ideal(self):
        """Testing quotient with a subset that is not an ideal"""
        ring = standard_ring('Z/4')

        with self.assertRaises(PreconditionError):
            quotient(ring, Ideal(ring, [0, 1]))

    def test_maximal_ideals(self):
        """Testing maximal_ideals with Z/6"""
        points = maximal_ideals(standard_ring('Z/6'))

        self.assertEqual(sorted(field.order for _, field, _ in points),
                         [2, 3])

        for ideal, field, projection in points:
            self.assertTrue(field.is_field)
            self.assertEqual(projection.kernel(), ideal)

    def test_maximal_ideals_of_local_rings(self):
        """Testing maximal_ideals with local rings"""
        points = maximal_ideals(standard_ring('F4'))
        self.assertEqual(len(points), 1)
        self.assertEqual(points[0][1].order, 4)

        points = maximal_ideals(standard_ring('Z2[e]'))
        self.assertEqual(len(points), 1)
        self.assertIsomorphic(points[0][1], standard_ring('Z/2'))

    def test_maximal_ideals_with_zero_ring(self):
        """Testing maximal_ideals with the zero ring"""
        with self.assertRaises(PreconditionError):
            maximal_ideals(standard_ring('0'))

    def test_product_decomposition(self):
        """Testing product_decomposition with Z/6"""
        factors = product_decomposition(standard_ring('Z/6'))

        self.assertEqual([factor.order for factor, _ in factors], [2, 3])
        self.assertEqual(product_decomposition(standard_ring('Z/4'))[0][0]
                         .order, 4)
        self.assertEqual(product_decomposition(standard_ring('0')), [])


class ConstructionTests(RingReconTestCase):
    """Unit tests for tensor products, fiber products and coequalizers."""

    def test_tensor_of_cyclic_rings(self):
        """Testing tensor with Z/4 and Z/6 over Z/12"""
        base = make_cyclic(12)
        result, i1, i2 = tensor(base,
                                _mod_map(base, standard_ring('Z/4')),
                                _mod_map(base, standard_ring('Z/6')))

        self.assertIsomorphic(result, standard_ring('Z/2'))
        self.assertRingAxioms(result)

    def test_tensor_with_base(self):
        """Testing tensor with the base ring as a factor"""
        base = standard_ring('Z/2')
        dual = standard_ring('Z2[e]')
        result, i1, i2 = tensor(base, RingHom(base, dual, [0, dual.one]),
                                identity_hom(base))

        self.assertIsomorphic(result, dual)
        self.assertTrue(i1.is_isomorphism)

    def test_tensor_over_quotient(self):
        """Testing tensor with Z/2 and Z/2 over Z/6"""
        base = standard_ring('Z/6')
        f = _mod_map(base, standard_ring('Z/2'))
        result, i1, i2 = tensor(base, f, f)

        self.assertIsomorphic(result, standard_ring('Z/2'))
        self.assertTrue(is_ring_epimorphism(f))

    def test_tensor_with_mismatched_source(self):
        """Testing tensor with maps from different rings"""
        f = _mod_map(standard_ring('Z/4'), standard_ring('Z/2'))

        with self.assertRaises(PreconditionError):
            tensor(standard_ring('Z/6'), f, f)

    def test_tensor_universal_property(self):
        """Testing check_tensor_universal with Z/2[e] over Z/2"""
        base = standard_ring('Z/2')
        dual = standard_ring('Z2[e]')
        f = RingHom(base, dual, [0, dual.one])

        self.assertIsNone(check_tensor_universal(base, f, f, bound=4))

    def test_is_ring_epimorphism_with_inclusion(self):
        """Testing is_ring_epimorphism with Z/2 -> Z/2[e]"""
        base = standard_ring('Z/2')
        dual = standard_ring('Z2[e]')

        self.assertFalse(is_ring_epimorphism(
            RingHom(base, dual, [0, dual.one])))

    def test_fiber_product_of_augmentations(self):
        """Testing fiber_product of two augmentations of Z/2[e]"""
        f = _augmentation()
        result, p1, p2 = fiber_product(f, f)

        self.assertEqual(result.order, 8)
        self.assertRingAxioms(result)
        self.assertIsNone(check_fiber_product_universal(
            f, f, result=(result, p1, p2), bound=4))

    def test_fiber_product_over_zero_ring(self):
        """Testing fiber_product over the zero ring"""
        zero = standard_ring('0')
        f = RingHom(standard_ring('Z/2'), zero, [0, 0])
        g = RingHom(standard_ring('Z/3'), zero, [0, 0, 0])
        result, p1, p2 = fiber_product(f, g)

        self.assertIsomorphic(result, standard_ring('Z/6'))

    def test_fiber_product_of_identities(self):
        """Testing fiber_product of two identities"""
        ring = standard_ring('F4')
        result, p1, p2 = fiber_product(identity_hom(ring),
                                       identity_hom(ring))

        self.assertIsomorphic(result, ring)
        self.assertTrue(p1.is_isomorphism)

    def test_coequalizer(self):
        """Testing coequalizer of the identity and e -> 0 on Z/2[e]"""
        ring = standard_ring('Z2[e]')
        kill = RingHom(ring, ring, [0, 0, 2, 2])
        result, projection = coequalizer(identity_hom(ring), kill)

        self.assertIsomorphic(result, standard_ring('Z/2'))
        self.assertEqual(compose_homs(projection, kill).map,
                         projection.map)


class HomEnumerationTests(RingReconTestCase):
    """Unit tests for homomorphism and isomorphism enumeration."""

    def test_enumerate_homs(self):
        """Testing enumerate_homs between cyclic rings"""
        self.assertEqual(
            len(enumerate_homs(standard_ring('Z/4'), standard_ring('Z/2'))),
            1)
        self.assertEqual(
            enumerate_homs(standard_ring('Z/2'), standard_ring('Z/4')),
            [])

    @given(st.integers(min_value=1, max_value=12),
           st.integers(min_value=1, max_value=12))
    @settings(max_examples=40)
    def test_enumerate_homs_between_cyclic_rings(self, n, m):
        """Testing enumerate_homs from Z/n to Z/m"""
        homs = enumerate_homs(make_cyclic(n), make_cyclic(m))

        self.assertEqual(len(homs), 1 if n % m == 0 else 0)

    def test_enumerate_homs_contains_identity(self):
        """Testing enumerate_homs includes the identity"""
        for name in ('F4', 'Z2[e]', 'Z2xZ2'):
            ring = standard_ring(name)

            self.assertIn(identity_hom(ring), enumerate_homs(ring, ring))

    def test_automorphisms(self):
        """Testing automorphisms of the rings of order 4"""
        self.assertEqual(len(automorphisms(standard_ring('F4'))), 2)
        self.assertEqual(len(automorphisms(standard_ring('Z2xZ2'))), 2)
        self.assertEqual(len(automorphisms(standard_ring('Z/4'))), 1)
        self.assertEqual(automorphisms(standard_ring('F4'))[0],
                         identity_hom(standard_ring('F4')))

    def test_is_isomorphic(self):
        """Testing is_isomorphic"""
        self.assertNotIsomorphic(standard_ring('Z/4'),
                                 standard_ring('Z2[e]'))
        self.assertIsomorphic(standard_ring('Z/6'),
                              product(make_cyclic(2), make_cyclic(3))[0])
        self.assertEqual(is_isomorphic(standard_ring('F4'),
                                       standard_ring('F4')),
                         identity_hom(standard_ring('F4')))


class EnumerateRingsTests(RingReconTestCase):
    """Unit tests for ring enumeration."""

    def test_rings_of_order_4(self):
        """Testing rings_of_order with order 4"""
        rings = rings_of_order(4)
        names = [str(ring) for ring in rings]

        self.assertEqual(len(rings), 4)
        self.assertIn('Z/4', names)
        self.assertIn('F_4', names)

        for expected in ('Z2[e]', 'Z2xZ2'):
            self.assertTrue(any(
                is_isomorphic(ring, standard_ring(expected))
                for ring in rings))

    def test_rings_of_prime_order(self):
        """Testing rings_of_order with prime orders"""
        for p in (2, 3, 5, 7, 11):
            rings = rings_of_order(p)

            self.assertEqual(len(rings), 1)
            self.assertIsomorphic(rings[0], make_cyclic(p))

    def test_rings_of_order_9(self):
        """Testing rings_of_order with order 9"""
        self.assertEqual(len(rings_of_order(9)), 4)

    def test_enumerate_rings(self):
        """Testing enumerate_rings up to order 4"""
        rings = enumerate_rings(4)

        self.assertEqual([ring.order for ring in rings],
                         [1, 2, 3, 4, 4, 4, 4])
        self.assertTrue(rings[0].is_zero_ring)

        for i, a in enumerate(rings):
            self.assertRingAxioms(a)

            for b in rings[i + 1:]:
                self.assertNotIsomorphic(a, b)

    def test_enumerate_rings_with_zero(self):
        """Testing enumerate_rings with a bound of 0"""
        with self.assertRaises(PreconditionError):
            enumerate_rings(0)

    def test_rings_of_order_8(self):
        """Testing rings_of_order with order 8"""
        self.assertEqual(len(rings_of_order(8)), 10)

    @slow_test
    def test_rings_of_order_16(self):
        """Testing rings_of_order with order 16"""
        self.assertEqual(len(rings_of_order(16)), 37)
