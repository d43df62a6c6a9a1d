"""Configuration defaults for ringrecon.

Settings can be overridden through environment variables, which is how the
test suite (via :pypi:`pytest-env`) and the command line select
acceptance-scale runs.


Settings
========

``RINGRECON_MAX_ORDER``
    The largest ring order enumerated when no explicit bound is given.
    Defaults to :py:data:`DEFAULT_MAX_ORDER`.

``RINGRECON_UNIVERSAL_CHECK_BOUND``
    The apex-order bound used when exhaustively checking universal
    properties of tensor and fiber products. Defaults to
    :py:data:`UNIVERSAL_CHECK_BOUND`.

``RINGRECON_FULL_AXIOM_LIMIT``
    Rings up to this order have their additive axioms checked over every
    triple. Larger rings are checked against additive generators only.

``RINGRECON_SLOW_TESTS``
    Set to ``1`` to run acceptance-scale tests.
"""

import os


#: The largest ring order enumerated by default.
DEFAULT_MAX_ORDER = 16

#: The apex bound for exhaustive universal-property checks.
UNIVERSAL_CHECK_BOUND = 8

#: Rings up to this order get the fully quantified axiom suite.
FULL_AXIOM_LIMIT = 64

#: The default seed for anything randomized.
DEFAULT_SEED = 0


_DEFAULTS = {
    'RINGRECON_MAX_ORDER': DEFAULT_MAX_ORDER,
    'RINGRECON_UNIVERSAL_CHECK_BOUND': UNIVERSAL_CHECK_BOUND,
    'RINGRECON_FULL_AXIOM_LIMIT': FULL_AXIOM_LIMIT,
    'RINGRECON_SLOW_TESTS': 0,
}


def get_setting(name, default=None):
    """Return an integer setting, honoring environment overrides.

    Args:
        name (str):
            The name of the setting.

        default (int, optional):
            The value to use if neither the environment nor the built-in
            defaults define one.

    Returns:
        int:
        The setting's value.

    Raises:
        ringrecon.errors.PreconditionError:
            The environment variable was set to a non-integer value.
    """
    from ringrecon.errors import PreconditionError

    value = os.environ.get(name)

    if value is None or value == '':
        return _DEFAULTS.get(name, default)

    try:
        return int(value)
    except ValueError:
        raise PreconditionError('%s must be an integer, not %r'
                                % (name, value))


def default_bound(ring):
    """Return the default truncation bound for algebras over a ring.

    The policy is ``|R|²``, which is enough for the tangent algebra
    ``R[ε]`` to be present.

    Args:
        ring (ringrecon.rings.FinRing):
            The base ring.

    Returns:
        int:
        The default bound.
    """
    return max(ring.order * ring.order, 1)


def default_e_bound(ring):
    """Return the default bound for computing the E-ring of a ring.

    The policy is ``2·|R|``.

    Args:
        ring (ringrecon.rings.FinRing):
            The base ring.

    Returns:
        int:
        The default bound.
    """
    return max(2 * ring.order, 1)


def slow_tests_enabled():
    """Return whether acceptance-scale tests should run.

    Returns:
        bool:
        ``True`` if ``RINGRECON_SLOW_TESTS`` is enabled.
    """
    return bool(get_setting('RINGRECON_SLOW_TESTS'))
