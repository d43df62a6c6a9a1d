#!/usr/bin/env python3
"""Run the ringrecon test suite.

Pass ``--slow`` to include the acceptance-scale tests.
"""

import os
import sys

import pytest


if __name__ == '__main__':
    args = sys.argv[1:]

    if '--slow' in args:
        args.remove('--slow')
        os.environ['RINGRECON_SLOW_TESTS'] = '1'

    sys.exit(pytest.main(args))
