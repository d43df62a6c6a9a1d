"""Configures pytest for ringrecon."""

import networkx
import sphinx
import sympy


def pytest_report_header(config):
    """Return information for the report header.

    This will log the versions of the math libraries and Sphinx.

    Args:
        config (object):
            The pytest configuration object.

    Returns:
        list of str:
        The report header entries to log.
    """
    return [
        'sympy: %s' % sympy.__version__,
        'networkx: %s' % networkx.__version__,
        'Sphinx: %s' % sphinx.__version__,
    ]
