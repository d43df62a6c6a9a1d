"""Unit tests for ringrecon.config."""

import os

from ringrecon import config
from ringrecon.errors import PreconditionError
from ringrecon.tests.testcase import RingReconTestCase, standard_ring


class GetSettingTests(RingReconTestCase):
    """Unit tests for get_setting."""

    def setUp(self):
        super(GetSettingTests, self).setUp()

        self._old_value = os.environ.pop('RINGRECON_MAX_ORDER', None)

    def tearDown(self):
        if self._old_value is None:
            os.environ.pop('RINGRECON_MAX_ORDER', None)
        else:
            os.environ['RINGRECON_MAX_ORDER'] = self._old_value

        super(GetSettingTests, self).tearDown()

    def test_with_default(self):
        """Testing get_setting with no environment override"""
        self.assertEqual(config.get_setting('RINGRECON_MAX_ORDER'),
                         config.DEFAULT_MAX_ORDER)

    def test_with_unknown_setting(self):
        """Testing get_setting with an unknown setting"""
        self.assertEqual(config.get_setting('RINGRECON_NOT_A_SETTING', 3), 3)

    def test_with_override(self):
        """Testing get_setting with an environment override"""
        os.environ['RINGRECON_MAX_ORDER'] = '9'

        self.assertEqual(config.get_setting('RINGRECON_MAX_ORDER'), 9)

    def test_with_empty_override(self):
        """Testing get_setting with an empty environment variable"""
        os.environ['RINGRECON_MAX_ORDER'] = ''

        self.assertEqual(config.get_setting('RINGRECON_MAX_ORDER'),
                         config.DEFAULT_MAX_ORDER)

    def test_with_bad_override(self):
        """Testing get_setting with a non-integer override"""
        os.environ['RINGRECON_MAX_ORDER'] = 'lots'

        with self.assertRaises(PreconditionError):
            config.get_setting('RINGRECON_MAX_ORDER')


class DefaultBoundTests(RingReconTestCase):
    """Unit tests for the default bound policies."""

    def test_default_bound(self):
        """Testing default_bound"""
        self.assertEqual(config.default_bound(standard_ring('Z/3')), 9)
        self.assertEqual(config.default_bound(standard_ring('0')), 1)

    def test_default_e_bound(self):
        """Testing default_e_bound"""
        self.assertEqual(config.default_e_bound(standard_ring('Z/4')), 8)
        self.assertEqual(config.default_e_bound(standard_ring('0')), 2)
