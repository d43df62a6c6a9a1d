"""Machine-readable run reports.

A :py:class:`RunReport` records what a command was run on (by content
hash), the seed, the package version and one :py:class:`Verdict` per named
check. Reports serialize deterministically, so two runs on the same inputs
and seed produce byte-identical files once timings are left out.
"""

import hashlib
import json

import ringrecon


def canonical_json(value):
    """Serialize a value deterministically.

    Keys are sorted, separators are fixed and non-ASCII text is kept as-is.

    Args:
        value (object):
            A JSON-compatible value.

    Returns:
        str:
        The serialized text.
    """
    return json.dumps(value, sort_keys=True, separators=(',', ':'),
                      ensure_ascii=False)


def content_hash(data):
    """Return the ``sha256:`` digest of some text or bytes."""
    if isinstance(data, str):
        data = data.encode('utf-8')

    return 'sha256:%s' % hashlib.sha256(data).hexdigest()


def to_plain(value):
    """Convert tuples, sets and nested containers to JSON types."""
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}

    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]

    if isinstance(value, (set, frozenset)):
        return sorted(to_plain(v) for v in value)

    if value is None or isinstance(value, (bool, int, float, str)):
        return value

    return repr(value)


class Verdict(object):
    """The outcome of one named check.

    Attributes:
        check (str):
            The name of the check.

        passed (bool):
            Whether it passed.

        witness (object):
            Supporting data, or a counterexample when it failed.
    """

    def __init__(self, check, passed, witness=None):
        """Initialize the verdict.

        Args:
            check (str):
                The name of the check.

            passed (bool):
                Whether it passed.

            witness (object, optional):
                Supporting data or a counterexample.
        """
        self.check = check
        self.passed = bool(passed)
        self.witness = witness

    def __repr__(self):
        return '<Verdict %s: %s>' % (self.check,
                                     'pass' if self.passed else 'fail')

    def to_dict(self):
        """Return a JSON-compatible form of the verdict."""
        return {
            'check': self.check,
            'passed': self.passed,
            'witness': to_plain(self.witness),
        }


class RunReport(object):
    """The record of one command invocation.

    Attributes:
        command (str):
            The subcommand.

        seed (int):
            The seed used.

        inputs (dict):
            A mapping of input names to content hashes.

        parameters (dict):
            Other arguments that affect the result.

        verdicts (list of Verdict):
            The checks performed, in order.

        results (dict):
            The command's output data.

        timing (dict):
            Wall-clock timings in seconds.
    """

    def __init__(self, command, seed=0, parameters=None):
        """Initialize the report.

        Args:
            command (str):
                The subcommand.

            seed (int, optional):
                The seed.

            parameters (dict, optional):
                Arguments that affect the result.
        """
        self.command = command
        self.seed = seed
        self.parameters = dict(parameters or {})
        self.inputs = {}
        self.verdicts = []
        self.results = {}
        self.timing = {}

    def __repr__(self):
        return '<RunReport %s: %d verdicts>' % (self.command,
                                                len(self.verdicts))

    @property
    def passed(self):
        """Whether every verdict passed.

        Type:
            bool
        """
        return all(v.passed for v in self.verdicts)

    def add_input(self, name, data):
        """Record an input by the hash of its content."""
        self.inputs[name] = content_hash(data)

    def add_verdict(self, check, passed, witness=None):
        """Append a verdict and return it."""
        verdict = Verdict(check, passed, witness)
        self.verdicts.append(verdict)

        return verdict

    def to_dict(self, include_timing=True):
        """Return a JSON-compatible form of the report.

        Args:
            include_timing (bool, optional):
                Whether to include the timings.

        Returns:
            dict:
            The report.
        """
        data = {
            'command': self.command,
            'version': ringrecon.__version__,
            'seed': self.seed,
            'parameters': to_plain(self.parameters),
            'inputs': dict(self.inputs),
            'verdicts': [v.to_dict() for v in self.verdicts],
            'results': to_plain(self.results),
            'passed': self.passed,
        }

        if include_timing and self.timing:
            data['timing'] = dict(self.timing)

        return data

    def to_json(self, include_timing=True):
        """Serialize the report with indentation, keys sorted."""
        return json.dumps(self.to_dict(include_timing=include_timing),
                          sort_keys=True, indent=2, ensure_ascii=False) + '\n'

    def canonical_json(self):
        """Serialize the report without timings, for comparison."""
        return canonical_json(self.to_dict(include_timing=False))

    @classmethod
    def from_dict(cls, data):
        """Rebuild a report from its dictionary form.

        Args:
            data (dict):
                The output of :py:meth:`to_dict`.

        Returns:
            RunReport:
            The report.
        """
        report = cls(data['command'], seed=data.get('seed', 0),
                     parameters=data.get('parameters'))
        report.inputs = dict(data.get('inputs', {}))
        report.results = data.get('results', {})
        report.timing = dict(data.get('timing', {}))
        report.verdicts = [
            Verdict(v['check'], v['passed'], v.get('witness'))
            for v in data.get('verdicts', [])
        ]

        return report
