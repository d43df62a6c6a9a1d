"""Sphinx extension for rendering run reports.

This adds a directive that reads a JSON run report written by the
``ringrecon`` command line and renders its verdicts as a table, so that
documentation can show the outcome of a checked run next to the prose
describing it.


Setup
=====

To use this, you just need to add the extension in :file:`conf.py`::

    extensions = [
        ...
        'ringrecon.sphinx.ext.run_reports',
        ...
    ]


Directives
==========

.. rst:directive:: run-report

   Renders a summary line and a table of verdicts from a report file. The
   path is relative to the current document.

   For example:

   .. code-block:: rst

       .. run-report:: reports/cogroups-z4.json
          :caption: Cogroups over Z/4
          :failed-only:


Configuration
=============

``run_report_witness_length``
    The longest witness summary shown in a table cell, in characters.
    Longer witnesses are truncated. This defaults to ``60``.
"""

import json

from docutils import nodes
from docutils.parsers.rst import Directive, directives

from ringrecon import VERSION
from ringrecon.reports import RunReport, canonical_json


def summarize_witness(witness, length):
    """Return a short text form of a witness.

    Args:
        witness (object):
            The witness, in its JSON form.

        length (int):
            The longest summary to return.

    Returns:
        str:
        The summary. An empty string if there is no witness.
    """
    if witness is None:
        return ''

    text = canonical_json(witness)

    if len(text) > length:
        text = text[:max(length - 3, 0)] + '...'

    return text


def _row(cells):
    row = nodes.row()

    for text in cells:
        entry = nodes.entry()
        entry += nodes.paragraph(text=text)
        row += entry

    return row


def build_verdict_table(report, witness_length, caption=None,
                        failed_only=False):
    """Build a table node for a report's verdicts.

    Args:
        report (ringrecon.reports.RunReport):
            The report.

        witness_length (int):
            The longest witness summary.

        caption (str, optional):
            A title for the table.

        failed_only (bool, optional):
            Whether to leave out verdicts that passed.

    Returns:
        docutils.nodes.table:
        The table.
    """
    table = nodes.table(classes=['run-report'])

    if caption:
        table += nodes.title(text=caption)

    tgroup = nodes.tgroup(cols=3)
    table += tgroup

    for width in (30, 10, 60):
        tgroup += nodes.colspec(colwidth=width)

    thead = nodes.thead()
    thead += _row(['Check', 'Verdict', 'Witness'])
    tgroup += thead

    tbody = nodes.tbody()

    for verdict in report.verdicts:
        if failed_only and verdict.passed:
            continue

        tbody += _row([
            verdict.check,
            'pass' if verdict.passed else 'fail',
            summarize_witness(verdict.witness, witness_length),
        ])

    tgroup += tbody

    return table


class RunReportDirective(Directive):
    """Renders the verdicts of a run report."""

    required_arguments = 1
    option_spec = {
        'caption': directives.unchanged,
        'failed-only': directives.flag,
    }

    def run(self):
        """Run the directive.

        Returns:
            list of docutils.nodes.Node:
            A summary paragraph and the verdict table, or a warning if the
            report could not be read.
        """
        env = self.state.document.settings.env
        rel_path, path = env.relfn2path(self.arguments[0])
        env.note_dependency(rel_path)

        try:
            with open(path, 'r') as fp:
                report = RunReport.from_dict(json.load(fp))
        except (IOError, ValueError, KeyError, TypeError) as e:
            return [
                self.state.document.reporter.warning(
                    'Unable to load run report %s: %s'
                    % (self.arguments[0], e),
                    line=self.lineno),
            ]

        summary = nodes.paragraph(text='%s (seed %s): %s' % (
            report.command, report.seed,
            'passed' if report.passed else 'failed'))

        return [
            summary,
            build_verdict_table(
                report,
                env.config.run_report_witness_length,
                caption=self.options.get('caption'),
                failed_only='failed-only' in self.options),
        ]


def setup(app):
    """Set up the Sphinx extension.

    This registers the directive and its configuration.

    Args:
        app (sphinx.application.Sphinx):
            The Sphinx application building the docs.

    Returns:
        dict:
        Information about the extension.
    """
    app.add_config_value('run_report_witness_length', 60, True)
    app.add_directive('run-report', RunReportDirective)

    return {
        'version': VERSION,
        'parallel_read_safe': True,
    }
