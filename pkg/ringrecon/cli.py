"""The ``ringrecon`` command line.

Each subcommand builds a :py:class:`~ringrecon.reports.RunReport` and
writes it as JSON to ``--out`` or standard output. Exit codes are:

``0``
    Every check passed.

``1``
    An unexpected internal error.

``2``
    Bad input: malformed files, unmet preconditions, bounds that are too
    small, or a category the reconstruction cannot run on.

``3``
    A check failed on verified input. The failing check and a replayable
    counterexample are written to ``<out>.counterexample.json``, or to
    standard error when there is no ``--out``.
"""

import argparse
import logging
import os
import re
import sys
import time
from multiprocessing import Pool

import ringrecon
from ringrecon import config
from ringrecon.algebras import (build_alg_category, build_tangent_category,
                                coproduct_is_tensor, epi_mono_mismatches,
                                is_connected_object, is_field_object,
                                points)
from ringrecon.categories import (is_connected, is_epi, is_mono,
                                  regular_mono_witness, simple_objects,
                                  subobjects)
from ringrecon.cogroups import classify_cogroup, module_equivalence_check
from ringrecon.endo import check_restriction, compute_E
from ringrecon.errors import (AxiomError, FalsificationError, InputError,
                              MalformedDataError, PreconditionError,
                              ReconstructionError)
from ringrecon.modules import regular_module
from ringrecon.reconstruct import (certify_setoid, erase_labels,
                                   induced_iso, recover_base)
from ringrecon.reports import (RunReport, canonical_json, content_hash,
                               to_plain)
from ringrecon.rings import (dual_numbers, finite_field, is_isomorphic,
                             make_cyclic, product, rings_of_order,
                             truncated_polynomial)
from ringrecon.serialization import (dump_alg_category, dump_ring, dumps,
                                     load_alg_category, load_category,
                                     load_functor, load_hom, load_ring,
                                     load_space, loads)
from ringrecon.topology import (check_slice_naturality, continuous_maps,
                                enumerate_spaces, find_sierpinski,
                                is_homeomorphic, open_point, recover_map,
                                recover_topology, set_slice_category)


logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_FALSIFIED = 3

MORPHISM_CHECKS = ('mono', 'epi', 'iso', 'regular-mono')
OBJECT_CHECKS = ('initial', 'terminal', 'simple', 'connected', 'subobjects')
ALGEBRA_CHECKS = ('points', 'field', 'spec-connected', 'coproduct-is-tensor',
                  'epi-mono')


_CYCLIC_RE = re.compile(r'^Z/(\d+)$')
_FIELD_RE = re.compile(r'^(?:F_?|GF)\(?(\d+)\)?$')
_TRUNCATED_RE = re.compile(r'^(.+)\[x\]/\(x\^(\d+)\)$')
_DUAL_RE = re.compile(r'^(.+)\[e\]$')


def parse_ring(text):
    """Build a ring from a short name.

    Understood names are ``0``, ``Z/n``, ``F_q`` (or ``Fq``, ``GF(q)``),
    ``R[x]/(x^k)``, ``R[e]`` for the dual numbers, and products written
    ``R x S``.

    Args:
        text (str):
            The name.

    Returns:
        ringrecon.rings.FinRing:
        The ring.

    Raises:
        ringrecon.errors.MalformedDataError:
            The name was not understood.
    """
    text = text.strip()

    if ' x ' in text:
        left, right = text.rsplit(' x ', 1)
        return product(parse_ring(left), parse_ring(right))[0]

    if text == '0':
        return make_cyclic(1)

    m = _CYCLIC_RE.match(text)

    if m:
        return make_cyclic(int(m.group(1)))

    m = _FIELD_RE.match(text)

    if m:
        return finite_field(int(m.group(1)))

    m = _TRUNCATED_RE.match(text)

    if m:
        return truncated_polynomial(parse_ring(m.group(1)), int(m.group(2)))

    m = _DUAL_RE.match(text)

    if m:
        return dual_numbers(parse_ring(m.group(1)))

    raise MalformedDataError('unknown ring %r' % text, '--ring')


def _parse_index(text, prefix, names=()):
    """Parse ``7``, ``m7`` or an object label into an index."""
    digits = text[len(prefix):] if text.startswith(prefix) else text

    if digits.isdigit():
        return int(digits)

    if text in names:
        return list(names).index(text)

    raise PreconditionError('%r is not a valid %s' % (text, {
        'm': 'morphism',
        'o': 'object',
    }[prefix]))


def _map(jobs, func, items):
    """Apply a function to independent items, in a pool if asked to.

    Results come back in the order of the items.
    """
    if jobs > 1 and len(items) > 1:
        with Pool(processes=min(jobs, len(items))) as pool:
            return pool.map(func, items)

    return [func(item) for item in items]


class Invocation(object):
    """The state of one command run.

    Attributes:
        options (argparse.Namespace):
            The parsed arguments.

        report (ringrecon.reports.RunReport):
            The report being built.

        documents (dict):
            The inputs as JSON documents, for replaying a counterexample.
    """

    def __init__(self, options):
        """Initialize the invocation.

        Args:
            options (argparse.Namespace):
                The parsed arguments.
        """
        self.options = options
        self.documents = {}
        self.report = RunReport(options.command, seed=options.seed,
                                parameters=self._parameters(options))

    @staticmethod
    def _parameters(options):
        skip = {'command', 'run', 'out', 'jobs', 'verbose', 'quiet',
                'timing', 'seed', 'save'}

        return {
            key: value
            for key, value in sorted(vars(options).items())
            if key not in skip and value is not None
        }

    def read_json(self, name, path):
        """Load a JSON input file and record its content hash."""
        try:
            with open(path, 'rb') as fp:
                content = fp.read()
        except IOError as e:
            raise PreconditionError('cannot read %s: %s' % (path, e))

        self.report.add_input(name, content)
        data = loads(content)
        self.documents[name] = data

        return data

    def ring(self, text, name='ring'):
        """Return a ring from a file path or a short name."""
        if os.path.exists(text):
            return load_ring(self.read_json(name, text))

        ring = parse_ring(text)
        data = dump_ring(ring)
        self.report.add_input(name, canonical_json(data))
        self.documents[name] = data

        return ring

    def rings(self):
        """Return every ring given with ``--ring``."""
        texts = self.options.ring or []

        if not texts:
            raise PreconditionError('at least one --ring is required')

        if len(texts) == 1:
            return [self.ring(texts[0])]

        return [self.ring(text, name='ring%d' % i)
                for i, text in enumerate(texts)]

    def bound(self, ring, default=config.default_bound):
        """Return ``--bound``, or the default policy for a ring."""
        if self.options.bound is not None:
            return self.options.bound

        return default(ring)

    def category(self):
        """Return the category from ``--cat`` or from ``--ring``.

        Returns:
            tuple:
            A 2-tuple of the finite category and, when known, the algebra
            category it realizes.
        """
        if self.options.cat:
            data = self.read_json('category', self.options.cat)

            if isinstance(data, dict) and 'algebra' in data:
                algebras = load_alg_category(data)
                return algebras.category, algebras

            return load_category(data), None

        ring = self.rings()[0]

        if getattr(self.options, 'tangent', False):
            algebras = build_tangent_category(ring, [regular_module(ring)])
        else:
            algebras = build_alg_category(ring, self.bound(ring))

        return algebras.category, algebras


def _ring_summary(ring):
    return {
        'name': ring.name,
        'order': ring.order,
        'characteristic': ring.characteristic,
        'units': len(ring.units),
        'idempotents': len(ring.idempotents),
        'nilpotents': len(ring.nilpotents),
        'field': ring.is_field,
        'local': ring.is_local,
    }


def _rings_of_order(n):
    rings = rings_of_order(n)
    failures = []

    for ring in rings:
        try:
            ring.verify()
        except AxiomError as e:
            failures.append({'ring': str(ring), 'axiom': e.axiom})

    return [_ring_summary(ring) for ring in rings], failures


def run_enumerate_rings(invocation):
    """List one ring per isomorphism class up to ``--max-order``."""
    options = invocation.options
    max_order = options.max_order

    if max_order is None:
        max_order = config.get_setting('RINGRECON_MAX_ORDER')

    if max_order < 1:
        raise PreconditionError('--max-order must be positive')

    orders = list(range(1, max_order + 1))
    found = _map(options.jobs, _rings_of_order, orders)
    failures = [failure for _, failed in found for failure in failed]
    report = invocation.report

    report.results = {
        'counts': {
            str(n): len(rings)
            for n, (rings, _) in zip(orders, found)
        },
        'total': sum(len(rings) for rings, _ in found),
        'rings': [ring for rings, _ in found for ring in rings],
    }
    report.add_verdict('rings-satisfy-axioms', not failures,
                       failures or report.results['total'])


def run_build_category(invocation):
    """Build a truncated algebra category and optionally save it."""
    options = invocation.options
    ring = invocation.rings()[0]
    algebras = build_alg_category(ring, invocation.bound(ring))
    category = algebras.category
    document = dump_alg_category(algebras)

    if options.save:
        with open(options.save, 'w') as fp:
            fp.write(dumps(document))

    invocation.report.results = {
        'base': str(ring),
        'bound': algebras.bound,
        'objects': [obj.label for obj in algebras.objects],
        'morphisms': category.num_morphisms,
        'initial': algebras.initial_object,
        'terminal': algebras.terminal_object,
        'hash': content_hash(canonical_json(document)),
    }
    invocation.report.add_verdict('base-is-initial', True,
                                  algebras.initial_object)


def _morphism_check(category, check, m):
    if check == 'mono':
        return is_mono(category, m), None

    if check == 'epi':
        return is_epi(category, m), None

    if check == 'iso':
        if category.is_iso(m):
            return True, category.inverse(m)

        return False, None

    witness = regular_mono_witness(category, m)

    return witness is not None, witness


def _object_check(category, check, x):
    if check == 'initial':
        return x in category.initial, None

    if check == 'terminal':
        return x in category.terminal, None

    if check == 'simple':
        return x in simple_objects(category), None

    if check == 'connected':
        return is_connected(category, x), None

    found = subobjects(category, x)

    return bool(found), found


def run_predicates(invocation):
    """Evaluate categorical predicates on a morphism or object."""
    options = invocation.options
    category, algebras = invocation.category()
    report = invocation.report
    checks = list(options.check or [])
    labels = [str(label) for label in category.objects]
    morphism = None
    objects = [_parse_index(text, 'o', labels)
               for text in options.object or []]

    if options.morphism is not None:
        morphism = _parse_index(options.morphism, 'm')

        if not 0 <= morphism < category.num_morphisms:
            raise PreconditionError('no morphism %d' % morphism)

    for x in objects:
        if not 0 <= x < category.num_objects:
            raise PreconditionError('no object %d' % x)

    if any(check in ALGEBRA_CHECKS for check in checks) and algebras is None:
        raise PreconditionError('%s need an algebra category'
                                % ', '.join(ALGEBRA_CHECKS))

    if not objects and set(checks) & {'points', 'field', 'spec-connected'}:
        raise PreconditionError('points, field and spec-connected need '
                                '--object')

    if not checks:
        if morphism is not None:
            checks.extend(MORPHISM_CHECKS)

        if objects:
            checks.extend(OBJECT_CHECKS)

    target = category.opposite() if options.opposite else category
    values = []

    for check in checks:
        if check in MORPHISM_CHECKS:
            if morphism is None:
                raise PreconditionError('%s needs --morphism' % check)

            value, witness = _morphism_check(target, check, morphism)
            values.append({'check': check, 'morphism': morphism,
                           'value': value, 'witness': witness})
        elif check in OBJECT_CHECKS:
            if not objects:
                raise PreconditionError('%s needs --object' % check)

            for x in objects:
                value, witness = _object_check(target, check, x)
                values.append({'check': check, 'object': x,
                               'value': value, 'witness': witness})
        elif check == 'points':
            for x in objects:
                found = points(algebras, x)
                report.add_verdict('points-are-maximal-ideals', True, {
                    'object': x,
                    'points': [sorted(p.ideal.elements) for p in found],
                })
        elif check == 'field':
            for x in objects:
                report.add_verdict('simple-objects-are-fields', True, {
                    'object': x,
                    'field': is_field_object(algebras, x),
                })
        elif check == 'spec-connected':
            for x in objects:
                report.add_verdict('connected-iff-no-idempotents', True, {
                    'object': x,
                    'connected': is_connected_object(algebras, x),
                })
        elif check == 'coproduct-is-tensor':
            if len(objects) != 2:
                raise PreconditionError('coproduct-is-tensor needs two '
                                        '--object arguments')

            report.add_verdict('coproduct-is-tensor', True, {
                'objects': objects,
                'in_bound': coproduct_is_tensor(algebras, *objects),
            })
        elif check == 'epi-mono':
            mismatches = epi_mono_mismatches(algebras)
            report.add_verdict('epi-mono-agree', not mismatches,
                               mismatches or category.num_morphisms)

    report.results = {
        'objects': category.num_objects,
        'morphisms': category.num_morphisms,
        'opposite': bool(options.opposite),
        'values': values,
    }


def _cogroup_instance(args):
    ring, bound = args
    check = module_equivalence_check(ring, bound)

    return {
        'ring': str(ring),
        'bound': bound,
        'report': check.to_dict(),
        'kernels': [
            classify_cogroup(cogroup).order
            for cogroup in check.cogroups
        ] if check.square_zero else None,
    }


def run_cogroups(invocation):
    """Compare cogroups with modules for every ``--ring``."""
    rings = invocation.rings()
    instances = [(ring, invocation.bound(ring)) for ring in rings]
    results = _map(invocation.options.jobs, _cogroup_instance, instances)
    report = invocation.report

    for result in results:
        summary = result['report']
        report.add_verdict('cogroups-are-square-zero', summary['square_zero'],
                           summary['counterexample'] or result['ring'])
        report.add_verdict(
            'modules-are-cogroups',
            (summary['bijective'] and summary['fully_faithful'] and
             summary['functorial']),
            summary['counterexample'] or summary['matching'])

    report.results = {'instances': results}


def _scalars_are_inverse(ring, result):
    return (result.ring.order == ring.order and
            all(result.b(result.a(t)) == t for t in ring.elements))


def _e_instance(args):
    ring, bound = args
    result = compute_E(ring, bound)

    return {
        'ring': str(ring),
        'bound': bound,
        'order': result.ring.order,
        'a': list(result.a.map),
        'b': list(result.b.map),
        'scalar': _scalars_are_inverse(ring, result),
    }


def run_compute_e(invocation):
    """Compute the ring of natural families for every ``--ring``."""
    options = invocation.options
    report = invocation.report

    if options.hom:
        f = load_hom(invocation.read_json('hom', options.hom))
        bound = options.bound

        if bound is None:
            bound = max(config.default_e_bound(f.source),
                        config.default_e_bound(f.target))

        source = compute_E(f.source, bound)
        target = compute_E(f.target, bound)
        induced = check_restriction(f, source, target)
        report.add_verdict('endomorphisms-are-scalars',
                           _scalars_are_inverse(f.source, source) and
                           _scalars_are_inverse(f.target, target),
                           [source.ring.order, target.ring.order])
        report.add_verdict(
            'restriction-is-base-change',
            all(target.b(induced(source.a(t))) == f(t)
                for t in f.source.elements),
            list(induced.map))
        report.results = {'bound': bound, 'induced': list(induced.map)}
        return

    rings = invocation.rings()
    instances = [(ring, invocation.bound(ring, config.default_e_bound))
                 for ring in rings]
    results = _map(options.jobs, _e_instance, instances)

    for result in results:
        report.add_verdict('endomorphisms-are-scalars', result['scalar'],
                           {'ring': result['ring'], 'b': result['b']})

    report.results = {'instances': results}


def run_recover_ring(invocation):
    """Recover the base ring from a category whose labels are erased."""
    category, algebras = invocation.category()
    report = invocation.report
    shuffled = erase_labels(category, invocation.options.seed)
    result = recover_base(shuffled)

    report.results = {
        'ring': dump_ring(result.ring),
        'cogroups': len(result.cogroups),
        'summary': _ring_summary(result.ring),
    }

    if algebras is not None:
        base = algebras.base
        report.add_verdict('base-is-recovered',
                           is_isomorphic(result.ring, base),
                           {'expected': str(base),
                            'recovered': result.ring.order})


def run_certify_equivalence(invocation):
    """Check that equivalences come from unique ring isomorphisms."""
    options = invocation.options
    report = invocation.report

    if options.functor:
        data = invocation.read_json('functor', options.functor)

        if not isinstance(data, dict):
            raise MalformedDataError('expected an object', '$')

        for key in ('source', 'target'):
            if key not in data:
                raise MalformedDataError('missing key %r' % key, '$')

        source = load_alg_category(data['source'], '$.source')
        target = load_alg_category(data['target'], '$.target')
        functor = load_functor(data, source.category, target.category)
        result = induced_iso(functor, source, target)
        report.add_verdict('isomorphism-is-unique', True, list(result.iso.map))
        report.results = {
            'iso': list(result.iso.map),
            'beta': list(result.beta.components),
            'candidates': result.candidates,
        }
        return

    texts = options.ring or []

    if len(texts) != 2:
        raise PreconditionError('certify-equivalence needs two --ring '
                                'arguments or --functor')

    source = invocation.ring(texts[0], 'source')
    target = invocation.ring(texts[1], 'target')
    bound = options.bound

    if bound is None:
        bound = max(source.order, target.order)

    setoid = certify_setoid(source, target, bound)
    report.add_verdict('identity-has-no-automorphisms',
                       setoid.identity_automorphisms == (1, 1),
                       list(setoid.identity_automorphisms))

    if setoid.isomorphisms:
        report.add_verdict('isomorphism-is-unique', all(setoid.round_trips),
                           {'isomorphisms': setoid.isomorphisms,
                            'round_trips': setoid.round_trips})
    else:
        report.add_verdict('endomorphisms-are-scalars',
                           setoid.distinguishing is not None,
                           setoid.distinguishing)

    report.results = setoid.to_dict()


def _recover_instance(args):
    space, sierpinski_space, eta = args

    return is_homeomorphic(recover_topology(space, sierpinski_space, eta),
                           space)


def run_top_demo(invocation):
    """Recover finite spaces from maps into the Sierpinski space."""
    options = invocation.options
    report = invocation.report
    spaces = enumerate_spaces(options.max_points)
    sierpinski_space = find_sierpinski([s for s in spaces if s.size == 2])
    eta = open_point(sierpinski_space, spaces)
    report.add_verdict('sierpinski-is-unique',
                       is_homeomorphic(recover_topology(sierpinski_space,
                                                        sierpinski_space,
                                                        eta),
                                       sierpinski_space),
                       {'opens': sierpinski_space.sorted_opens,
                        'open_point': eta})

    recovered = _map(options.jobs, _recover_instance,
                     [(space, sierpinski_space, eta) for space in spaces])
    failures = [space.name for space, ok in zip(spaces, recovered) if not ok]
    counts = {}

    for space in spaces:
        counts[str(space.size)] = counts.get(str(space.size), 0) + 1

    report.add_verdict('topology-is-recovered', not failures,
                       failures or len(spaces))

    small = [s for s in spaces if s.size <= options.naturality_points]
    squares = 0
    unnatural = []

    for space in small:
        for other in small:
            for mapping in continuous_maps(space, other):
                try:
                    recover_map(mapping, space, other, sierpinski_space, eta)
                except FalsificationError as e:
                    unnatural.append(e.witness)

                squares += 1

    report.add_verdict('recovery-is-natural', not unnatural,
                       unnatural or squares)

    slice_category = set_slice_category(options.slice_base,
                                        options.slice_size)

    try:
        checked = check_slice_naturality(slice_category)
    except FalsificationError as e:
        report.add_verdict('set-slice-points', False, e.witness)
    else:
        report.add_verdict('set-slice-points', True, checked)

    report.results = {
        'counts': counts,
        'sierpinski': sierpinski_space.sorted_opens,
        'open_point': eta,
        'naturality_maps': squares,
    }

    if options.space:
        space = load_space(invocation.read_json('space', options.space))
        mine = recover_topology(space, sierpinski_space, eta)
        report.add_verdict('topology-is-recovered',
                           is_homeomorphic(mine, space), mine.sorted_opens)
        report.results['space'] = mine.sorted_opens


def _common_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log more; repeat for debug output')
    parser.add_argument('-q', '--quiet', action='store_true',
                        help='only log errors')
    parser.add_argument('--seed', type=int, default=config.DEFAULT_SEED,
                        help='seed for label erasure (default: %(default)s)')
    parser.add_argument('--out',
                        help='write the report here instead of stdout')
    parser.add_argument('--jobs', type=int, default=1,
                        help='worker processes for independent instances')
    parser.add_argument('--timing', action='store_true',
                        help='include wall-clock timings in the report')

    return parser


def build_parser():
    """Return the argument parser for every subcommand.

    Returns:
        argparse.ArgumentParser:
        The parser. Each subcommand sets ``run`` to its handler.
    """
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog='ringrecon',
        description='Exact desk-scale checks of categorical ring '
                    'reconstruction.')
    parser.add_argument('--version', action='version',
                        version=ringrecon.get_version_string())
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    def add(name, handler, help):
        sub = subparsers.add_parser(name, parents=[common], help=help)
        sub.set_defaults(run=handler)

        return sub

    def ring_options(sub, many=False):
        sub.add_argument('--ring', action='append',
                         help='a ring file or a name such as Z/4, F_4, '
                              '"Z/2 x Z/2" or Z/2[x]/(x^2)%s'
                              % ('; repeatable' if many else ''))
        sub.add_argument('--bound', type=int,
                         help='the truncation bound N')

    sub = add('enumerate-rings', run_enumerate_rings,
              'list rings up to isomorphism')
    sub.add_argument('--max-order', type=int,
                     help='largest ring order (default: %d)'
                          % config.DEFAULT_MAX_ORDER)

    sub = add('build-category', run_build_category,
              'build a truncated algebra category')
    ring_options(sub)
    sub.add_argument('--save', help='write the category document here')

    sub = add('predicates', run_predicates,
              'evaluate categorical predicates')
    ring_options(sub)
    sub.add_argument('--cat', help='a category or algebra category file')
    sub.add_argument('--morphism', help='a morphism, such as m7')
    sub.add_argument('--object', action='append',
                     help='an object index or label; repeatable')
    sub.add_argument('--check', action='append',
                     choices=MORPHISM_CHECKS + OBJECT_CHECKS +
                     ALGEBRA_CHECKS,
                     help='the predicate to evaluate; repeatable')
    sub.add_argument('--opposite', action='store_true',
                     help='evaluate in the opposite category')

    sub = add('cogroups', run_cogroups,
              'compare cogroups with modules')
    ring_options(sub, many=True)

    sub = add('compute-e', run_compute_e,
              'compute the ring of natural families')
    ring_options(sub, many=True)
    sub.add_argument('--hom', help='a ring map file to check restriction '
                                   'along')

    sub = add('recover-ring', run_recover_ring,
              'recover a base ring from category tables')
    ring_options(sub)
    sub.add_argument('--cat', help='a category or algebra category file')
    sub.add_argument('--tangent', action='store_true',
                     help='use the tangent algebras of the regular module '
                          'instead of a truncation')

    sub = add('certify-equivalence', run_certify_equivalence,
              'check that equivalences come from ring isomorphisms')
    ring_options(sub, many=True)
    sub.add_argument('--functor', help='a functor file between two algebra '
                                       'categories')

    sub = add('top-demo', run_top_demo,
              'recover finite spaces from the Sierpinski space')
    sub.add_argument('--max-points', type=int, default=4)
    sub.add_argument('--naturality-points', type=int, default=3)
    sub.add_argument('--slice-base', type=int, default=2)
    sub.add_argument('--slice-size', type=int, default=3)
    sub.add_argument('--space', help='a space file to recover')

    return parser


def _configure_logging(options):
    if options.quiet:
        level = logging.ERROR
    elif options.verbose >= 2:
        level = logging.DEBUG
    elif options.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING

    logging.basicConfig(level=level,
                        format='[%(levelname)s] %(name)s: %(message)s')
    logging.getLogger('ringrecon').setLevel(level)


def _write(path, text):
    if path:
        with open(path, 'w') as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)


def _write_counterexample(invocation, check, message, witness):
    data = {
        'command': invocation.options.command,
        'check': check,
        'message': message,
        'witness': witness,
        'seed': invocation.options.seed,
        'inputs': invocation.documents,
        'parameters': invocation.report.parameters,
    }
    text = dumps(to_plain(data))
    out = invocation.options.out

    if out:
        with open('%s.counterexample.json' % out, 'w') as fp:
            fp.write(text)
    else:
        sys.stderr.write(text)


def run(options):
    """Run a parsed command and return its exit code.

    Args:
        options (argparse.Namespace):
            The parsed arguments.

    Returns:
        int:
        The exit code.
    """
    invocation = Invocation(options)
    report = invocation.report
    start = time.perf_counter()

    try:
        options.run(invocation)
    except InputError as e:
        logger.error('%s', e)
        sys.stderr.write('error: %s\n' % e)
        return EXIT_INPUT
    except ReconstructionError as e:
        logger.error('Reconstruction cannot run: %s', e)
        sys.stderr.write('error: %s\n' % e)
        return EXIT_INPUT
    except FalsificationError as e:
        logger.error('Check %s failed: %s', e.check, e)
        _write_counterexample(invocation, e.check, str(e), e.witness)
        return EXIT_FALSIFIED
    except AxiomError as e:
        logger.error('A verified structure failed %s: %s', e.axiom, e)
        _write_counterexample(invocation, e.axiom, str(e), e.witness)
        return EXIT_FALSIFIED
    except Exception as e:
        logger.exception('Unexpected error running %s: %s', options.command,
                         e)
        return EXIT_INTERNAL

    report.timing['total'] = time.perf_counter() - start
    _write(options.out, report.to_json(include_timing=options.timing))

    for verdict in report.verdicts:
        if not verdict.passed:
            logger.error('Check %s failed', verdict.check)
            _write_counterexample(invocation, verdict.check,
                                  'the check failed', verdict.witness)
            return EXIT_FALSIFIED

    return EXIT_OK


def main(argv=None):
    """Run the command line.

    Args:
        argv (list of str, optional):
            The arguments, without the program name. Defaults to
            :py:data:`sys.argv`.

    Returns:
        int:
        The exit code.
    """
    options = build_parser().parse_args(argv)
    _configure_logging(options)

    return run(options)


if __name__ == '__main__':
    sys.exit(main())
