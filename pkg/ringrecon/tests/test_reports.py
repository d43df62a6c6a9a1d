"""Unit tests for ringrecon.reports."""

import json

import ringrecon
from ringrecon.reports import (RunReport, Verdict, canonical_json,
                               content_hash, to_plain)
from ringrecon.tests.testcase import RingReconTestCase


class CanonicalFormTests(RingReconTestCase):
    """Unit tests for canonical_json, content_hash and to_plain."""

    def test_canonical_json(self):
        """Testing canonical_json sorts keys and drops whitespace"""
        self.assertEqual(canonical_json({'b': [1, 2], 'a': 'ε'}),
                         '{"a":"ε","b":[1,2]}')

    def test_content_hash(self):
        """Testing content_hash with text and bytes"""
        self.assertEqual(
            content_hash(''),
            'sha256:e3b0c44298fc1c149afbf4c8996fb924'
            '27ae41e4649b934ca495991b7852b855')
        self.assertEqual(content_hash('ring'), content_hash(b'ring'))

    def test_to_plain(self):
        """Testing to_plain with nested containers"""
        self.assertEqual(
            to_plain({1: (2, frozenset([4, 3])), 'x': None}),
            {'1': [2, [3, 4]], 'x': None})


class RunReportTests(RingReconTestCase):
    """Unit tests for RunReport."""

    def _make_report(self):
        report = RunReport('compute-e', seed=4, parameters={'bound': 4})
        report.add_input('ring', '{"name": "Z/2"}')
        report.add_verdict('endomorphisms-are-scalars', True, (0, 1))
        report.results = {'order': 2}
        report.timing['total'] = 0.25

        return report

    def test_to_dict(self):
        """Testing RunReport.to_dict"""
        data = self._make_report().to_dict()

        self.assertEqual(data['command'], 'compute-e')
        self.assertEqual(data['version'], ringrecon.__version__)
        self.assertEqual(data['verdicts'], [{
            'check': 'endomorphisms-are-scalars',
            'passed': True,
            'witness': [0, 1],
        }])
        self.assertTrue(data['passed'])
        self.assertEqual(data['timing'], {'total': 0.25})
        self.assertTrue(data['inputs']['ring'].startswith('sha256:'))

    def test_to_dict_without_timing(self):
        """Testing RunReport.to_dict with include_timing=False"""
        self.assertNotIn('timing',
                         self._make_report().to_dict(include_timing=False))

    def test_passed_with_failed_verdict(self):
        """Testing RunReport.passed with a failed verdict"""
        report = self._make_report()
        verdict = report.add_verdict('restriction-is-base-change', False)

        self.assertIsInstance(verdict, Verdict)
        self.assertFalse(report.passed)
        self.assertFalse(report.to_dict()['passed'])

    def test_canonical_json_is_deterministic(self):
        """Testing RunReport.canonical_json ignores timings"""
        first = self._make_report()
        second = self._make_report()
        second.timing['total'] = 9.5

        self.assertEqual(first.canonical_json(), second.canonical_json())
        self.assertNotEqual(first.to_json(), second.to_json())

    def test_from_dict(self):
        """Testing RunReport.from_dict rebuilds a serialized report"""
        report = self._make_report()
        loaded = RunReport.from_dict(json.loads(report.to_json()))

        self.assertEqual(loaded.canonical_json(), report.canonical_json())
        self.assertEqual(loaded.timing, {'total': 0.25})
