"""Base test case support for ringrecon."""

import unittest

import kgb

from ringrecon.config import slow_tests_enabled
from ringrecon.errors import AxiomError
from ringrecon.rings import (dual_numbers, finite_field, is_isomorphic,
                             make_cyclic, product)


_standard_rings = {}


def standard_ring(name):
    """Return a shared instance of a commonly used ring.

    Args:
        name (str):
            One of ``0``, ``Z/n``, ``F4``, ``Z2[e]`` or ``Z2xZ2``.

    Returns:
        ringrecon.rings.FinRing:
        The ring.
    """
    if name not in _standard_rings:
        if name == 'F4':
            ring = finite_field(4)
        elif name == 'Z2[e]':
            ring = dual_numbers(make_cyclic(2))
        elif name == 'Z2xZ2':
            ring = product(make_cyclic(2), make_cyclic(2))[0]
        elif name == '0':
            ring = make_cyclic(1)
        else:
            ring = make_cyclic(int(name.split('/')[1]))

        _standard_rings[name] = ring

    return _standard_rings[name]


def slow_test(func):
    """Skip a test unless acceptance-scale tests are enabled."""
    return unittest.skipUnless(
        slow_tests_enabled(),
        'Set RINGRECON_SLOW_TESTS=1 to run acceptance-scale tests')(func)


class RingReconTestCase(kgb.SpyAgency, unittest.TestCase):
    """Base class for ringrecon test cases."""

    maxDiff = None

    def assertRingAxioms(self, ring):
        """Assert that a ring's tables satisfy the ring axioms.

        Args:
            ring (ringrecon.rings.FinRing):
                The ring to check.

        Raises:
            AssertionError:
                An axiom failed.
        """
        try:
            ring.verify()
        except AxiomError as e:
            self.fail('%s is not a ring: %s' % (ring, e))

    def assertIsomorphic(self, first, second):
        """Assert that two rings are isomorphic.

        Args:
            first (ringrecon.rings.FinRing):
                The first ring.

            second (ringrecon.rings.FinRing):
                The second ring.

        Raises:
            AssertionError:
                No isomorphism exists.
        """
        if is_isomorphic(first, second) is None:
            self.fail('%s and %s are not isomorphic' % (first, second))

    def assertNotIsomorphic(self, first, second):
        """Assert that two rings are not isomorphic."""
        if is_isomorphic(first, second) is not None:
            self.fail('%s and %s are isomorphic' % (first, second))
