"""Unit tests for ringrecon.errors."""

import pickle

from ringrecon.errors import (AxiomError, BoundError, CategoryAxiomError,
                              FalsificationError, InputError,
                              MalformedDataError, PreconditionError,
                              ReconstructionError)
from ringrecon.tests.testcase import RingReconTestCase


class ErrorTests(RingReconTestCase):
    """Unit tests for the ringrecon exceptions."""

    def test_input_errors_are_value_errors(self):
        """Testing InputError subclasses are ValueErrors"""
        for cls in (MalformedDataError, PreconditionError, BoundError):
            self.assertTrue(issubclass(cls, InputError))
            self.assertTrue(issubclass(cls, ValueError))

        self.assertFalse(issubclass(FalsificationError, InputError))

    def test_malformed_data_error(self):
        """Testing MalformedDataError message and pickling"""
        e = MalformedDataError('bad entry', '$.mul[1][0]')
        copy = pickle.loads(pickle.dumps(e))

        self.assertEqual(str(e), '$.mul[1][0]: bad entry')
        self.assertEqual(str(copy), str(e))
        self.assertEqual(copy.location, '$.mul[1][0]')

    def test_bound_error(self):
        """Testing BoundError pickling"""
        copy = pickle.loads(pickle.dumps(
            BoundError('too small', required=8, bound=4)))

        self.assertEqual(copy.required, 8)
        self.assertEqual(copy.bound, 4)
        self.assertEqual(str(copy), 'too small')

    def test_axiom_error(self):
        """Testing AxiomError message and pickling"""
        e = CategoryAxiomError('identity laws', (3,))
        copy = pickle.loads(pickle.dumps(e))

        self.assertEqual(str(e), 'identity laws fails at (3,)')
        self.assertIsInstance(copy, CategoryAxiomError)
        self.assertIsInstance(copy, AxiomError)
        self.assertEqual(copy.witness, (3,))

    def test_falsification_error(self):
        """Testing FalsificationError pickling"""
        copy = pickle.loads(pickle.dumps(
            FalsificationError('set-slice-points', 'mismatch', [1, 2])))

        self.assertEqual(copy.check, 'set-slice-points')
        self.assertEqual(copy.witness, [1, 2])
        self.assertEqual(str(copy), 'set-slice-points: mismatch')

    def test_reconstruction_error(self):
        """Testing ReconstructionError pickling"""
        copy = pickle.loads(pickle.dumps(
            ReconstructionError('base-is-initial', 'no initial object')))

        self.assertEqual(copy.check, 'base-is-initial')
        self.assertEqual(copy.message, 'no initial object')
