"""Recovering a base ring from its category of algebras.

:py:func:`recover_base` only looks at the tables of a finite category. It
finds the initial object I, detects the commutative cogroups over and
under I, and computes the ring of natural endomorphisms of the identity of
the cogroup category. On a truncated algebra category over R, that ring
is isomorphic to R when the truncation is large enough to hold the
self-fiber-products of the tangent cogroups.

:py:func:`induced_iso` goes the other way round: given an equivalence
between two algebra categories, it finds the unique ring isomorphism whose
change of base is naturally isomorphic to it.
"""

import logging
from collections import defaultdict, namedtuple

from ringrecon.algebras import build_alg_category, change_of_base
from ringrecon.categories import (FinCategory, FunctorData, aut_of_identity,
                                  check_equivalence, identity_functor,
                                  natural_isomorphisms,
                                  natural_transformations, pullback, relabel)
from ringrecon.endo import compute_E
from ringrecon.errors import (AxiomError, FalsificationError,
                              PreconditionError, ReconstructionError)
from ringrecon.rings import (_reindexed_ring, enumerate_isomorphisms,
                             is_isomorphic)


logger = logging.getLogger(__name__)


#: A cogroup detected in a category from its tables alone.
DetectedCogroup = namedtuple('DetectedCogroup', [
    'obj', 'augmentation', 'structure', 'fiber', 'projections',
    'multiplication', 'inverse',
])


class ReconstructionResult(object):
    """The ring recovered from a category.

    Attributes:
        ring (ringrecon.rings.FinRing):
            The ring of natural endomorphisms of the identity of the
            cogroup category.

        initial (int):
            The initial object.

        cogroups (list of DetectedCogroup):
            The cogroups found.

        cogroup_category (ringrecon.categories.FinCategory):
            The category of cogroups and augmented maps.

        families (list of tuple):
            The natural transformation of every ring element, as
            components in the original category.
    """

    def __init__(self, ring, initial, cogroups, cogroup_category, families):
        """Initialize the result.

        Args:
            ring (ringrecon.rings.FinRing):
                The recovered ring.

            initial (int):
                The initial object.

            cogroups (list of DetectedCogroup):
                The cogroups.

            cogroup_category (ringrecon.categories.FinCategory):
                The cogroup category.

            families (list of tuple):
                The transformations.
        """
        self.ring = ring
        self.initial = initial
        self.cogroups = cogroups
        self.cogroup_category = cogroup_category
        self.families = families

    def __repr__(self):
        return '<ReconstructionResult %s from %d cogroups>' % (
            self.ring, len(self.cogroups))


def erase_labels(category, seed):
    """Return a category with objects and morphisms shuffled.

    Args:
        category (ringrecon.categories.FinCategory):
            The category.

        seed (int):
            The seed for the shuffle.

    Returns:
        ringrecon.categories.FinCategory:
        An isomorphic category whose labels carry no information.
    """
    return relabel(category, seed)[0]


def _pair(category, apex, projections, u, v):
    """Return the unique ``w`` with ``p1 w = u`` and ``p2 w = v``."""
    p1, p2 = projections
    found = [
        w
        for w in category.hom(category.source(u), apex)
        if category.compose(p1, w) == u and category.compose(p2, w) == v
    ]

    if len(found) == 1:
        return found[0]

    return None


def coassociativity_witness(category, obj, augmentation, apex, projections,
                            multiplication):
    """Look for a failure of associativity in a fiberwise multiplication.

    For every object T, pairing through the fiber product turns the maps
    ``T -> obj`` lying over one map ``T -> I`` into a binary operation.
    The operation is associative for every T exactly when the
    multiplication is. Triples whose pairings are missing are skipped.

    Args:
        category (ringrecon.categories.FinCategory):
            The category.

        obj (int):
            The object carrying the multiplication.

        augmentation (int):
            The map from ``obj`` to the base object.

        apex (int):
            The self-fiber-product of the augmentation.

        projections (tuple of int):
            The two projections out of the apex.

        multiplication (int):
            The map from the apex back to ``obj``.

    Returns:
        tuple:
        A 4-tuple ``(T, u, v, w)`` with ``(uv)w != u(vw)``, or ``None``
        when the multiplication is associative.
    """
    p1, p2 = projections

    for t in category.object_ids:
        products = {}

        for w in category.hom(t, apex):
            key = (category.compose(p1, w), category.compose(p2, w))
            products[key] = category.compose(multiplication, w)

        fibers = defaultdict(list)

        for u in category.hom(t, obj):
            fibers[category.compose(augmentation, u)].append(u)

        for maps in fibers.values():
            for u in maps:
                for v in maps:
                    uv = products.get((u, v))

                    if uv is None:
                        continue

                    for w in maps:
                        vw = products.get((v, w))
                        left = products.get((uv, w))
                        right = products.get((u, vw))

                        if (vw is not None and left is not None and
                            right is not None and left != right):
                            return t, u, v, w

    return None


def _detect_cogroup(category, initial, obj, augmentation):
    """Look for a commutative cogroup structure on an augmented object."""
    structure = category.hom(initial, obj)[0]
    found = pullback(category, augmentation, augmentation)

    if found is None:
        logger.debug('No self-fiber-product of %d over %d in %r',
                     augmentation, initial, category)
        return None

    apex, projections = found
    p1, p2 = projections
    identity = category.identity(obj)
    counit = category.compose(structure, augmentation)
    left = _pair(category, apex, projections, identity, counit)
    right = _pair(category, apex, projections, counit, identity)
    swap = _pair(category, apex, projections, p2, p1)

    if left is None or right is None or swap is None:
        return None

    over = category.compose(augmentation, p1)
    multiplications = [
        m
        for m in category.hom(apex, obj)
        if category.compose(m, left) == identity and
        category.compose(m, right) == identity and
        category.compose(augmentation, m) == over and
        category.compose(m, swap) == m
    ]

    if not multiplications:
        return None

    if len(multiplications) > 1:
        raise ReconstructionError(
            'comultiplication-is-unique',
            'object %d has %d comultiplications over %d'
            % (obj, len(multiplications), initial))

    m = multiplications[0]
    witness = coassociativity_witness(category, obj, augmentation, apex,
                                      projections, m)

    if witness is not None:
        logger.debug('Multiplication on %d is not associative: %r', obj,
                     witness)
        return None

    for i in category.hom(obj, obj):
        if category.compose(augmentation, i) != augmentation:
            continue

        w = _pair(category, apex, projections, identity, i)

        if w is not None and category.compose(m, w) == counit:
            return DetectedCogroup(obj, augmentation, structure, apex,
                                   projections, m, i)

    return None


def _cogroup_category(category, cogroups):
    """Build the category of cogroups and augmentation-preserving maps."""
    sources = []
    targets = []
    underlying = []
    index = {}

    for i, gi in enumerate(cogroups):
        for j, gj in enumerate(cogroups):
            for h in category.hom(gi.obj, gj.obj):
                if category.compose(gj.augmentation, h) == gi.augmentation:
                    index[(i, j, h)] = len(sources)
                    sources.append(i)
                    targets.append(j)
                    underlying.append(h)

    composition = {}

    for f, hf in enumerate(underlying):
        for g, hg in enumerate(underlying):
            if targets[f] == sources[g]:
                composition[(g, f)] = index[(sources[f], targets[g],
                                             category.compose(hg, hf))]

    identities = [index[(i, i, category.identity(g.obj))]
                  for i, g in enumerate(cogroups)]

    cog = FinCategory(['G%d' % g.obj for g in cogroups], sources, targets,
                      identities, composition, name='Cog', verify=False)

    return cog, underlying


def recover_base(category):
    """Recover the base ring of an algebra category from its tables.

    Args:
        category (ringrecon.categories.FinCategory):
            A category claimed to be a truncated algebra category.

    Returns:
        ReconstructionResult:
        The recovered ring, with the intermediate data.

    Raises:
        ringrecon.errors.ReconstructionError:
            A step of the pipeline could not run. The error names the
            step.
    """
    if not category.initial:
        raise ReconstructionError('base-is-initial',
                                  '%r has no initial object' % category)

    initial = category.initial[0]
    cogroups = []

    for obj in category.object_ids:
        for augmentation in category.hom(obj, initial):
            cogroup = _detect_cogroup(category, initial, obj, augmentation)

            if cogroup is not None:
                cogroups.append(cogroup)

    logger.debug('Detected %d cogroups over object %d', len(cogroups),
                 initial)

    if (initial not in category.terminal and
        all(g.obj == initial for g in cogroups)):
        raise ReconstructionError(
            'cogroups-detected',
            'no nontrivial cogroup over the initial object fits in %r'
            % category)

    cog, underlying = _cogroup_category(category, cogroups)
    identity = identity_functor(cog)
    transformations = natural_transformations(identity, identity)

    def lift(components):
        return tuple(underlying[a] for a in components)

    families = [lift(t.components) for t in transformations]
    zero = tuple(category.compose(g.structure, g.augmentation)
                 for g in cogroups)
    one = tuple(category.identity(g.obj) for g in cogroups)

    if zero not in families or one not in families:
        raise ReconstructionError('endomorphisms-form-a-ring',
                                  'the zero or identity transformation is '
                                  'missing')

    families.sort(key=lambda family: (family != zero, family != one, family))
    known = set(families)

    def add(alpha, beta):
        result = []

        for g, a, b in zip(cogroups, alpha, beta):
            w = _pair(category, g.fiber, g.projections, a, b)

            if w is None:
                raise ReconstructionError('endomorphisms-form-a-ring',
                                          'no pairing into the fiber of %d'
                                          % g.obj)

            result.append(category.compose(g.multiplication, w))

        result = tuple(result)

        if result not in known:
            raise ReconstructionError('endomorphisms-form-a-ring',
                                      'sums leave the natural '
                                      'transformations')

        return result

    def mul(alpha, beta):
        result = tuple(category.compose(a, b) for a, b in zip(alpha, beta))

        if result not in known:
            raise ReconstructionError('endomorphisms-form-a-ring',
                                      'composites leave the natural '
                                      'transformations')

        return result

    ring, _ = _reindexed_ring(families, add, mul, one, name='E')

    try:
        ring.verify()
    except AxiomError as e:
        raise ReconstructionError('endomorphisms-form-a-ring', str(e))

    logger.info('Recovered a ring of order %d from %r', ring.order, category)

    return ReconstructionResult(ring, initial, cogroups, cog, families)


class InducedIsoResult(object):
    """The ring isomorphism underlying an equivalence.

    Attributes:
        iso (ringrecon.rings.RingHom):
            The isomorphism ``R -> R'``.

        beta (ringrecon.categories.NatTransData):
            A natural isomorphism from the equivalence to the change of
            base along ``iso``.

        candidates (int):
            How many isomorphisms were checked.
    """

    def __init__(self, iso, beta, candidates):
        """Initialize the result.

        Args:
            iso (ringrecon.rings.RingHom):
                The isomorphism.

            beta (ringrecon.categories.NatTransData):
                The natural isomorphism witness.

            candidates (int):
                The number of isomorphisms checked.
        """
        self.iso = iso
        self.beta = beta
        self.candidates = candidates


def induced_iso(functor, source, target):
    """Return the ring isomorphism inducing an equivalence.

    Every isomorphism ``f: R -> R'`` is tried, and the change of base
    along f is compared with the functor. Exactly one must be naturally
    isomorphic to it.

    Args:
        functor (ringrecon.categories.FunctorData):
            An equivalence between the two algebra categories.

        source (ringrecon.algebras.TruncatedAlgCat):
            The category over R.

        target (ringrecon.algebras.TruncatedAlgCat):
            The category over R'.

    Returns:
        InducedIsoResult:
        The isomorphism and its natural isomorphism witness.

    Raises:
        ringrecon.errors.PreconditionError:
            The functor is not an equivalence between these categories.

        ringrecon.errors.FalsificationError:
            No isomorphism, or more than one, matches the functor.
    """
    if (functor.source is not source.category or
        functor.target is not target.category):
        raise PreconditionError('%r does not run between %r and %r'
                                % (functor, source, target))

    report = check_equivalence(functor)

    if not report.is_equivalence:
        raise PreconditionError('%r is not an equivalence: %r'
                                % (functor, report.counterexample))

    matches = []
    isos = enumerate_isomorphisms(source.base, target.base)

    for f in isos:
        other = change_of_base(source, target, f)
        witnesses = natural_isomorphisms(functor, other)

        if witnesses:
            matches.append((f, witnesses[0]))

    logger.debug('%d of %d isomorphisms match %r', len(matches), len(isos),
                 functor)

    if len(matches) != 1:
        raise FalsificationError('isomorphism-is-unique',
                                 '%d ring isomorphisms induce %r'
                                 % (len(matches), functor),
                                 witness=[f.map for f, _ in matches])

    f, beta = matches[0]

    return InducedIsoResult(f, beta, len(isos))


def conjugate_functor(functor, components):
    """Conjugate a functor by an automorphism of each image object.

    The result sends ``g: x -> y`` to ``a_y ∘ F(g) ∘ a_x⁻¹`` and is
    naturally isomorphic to F through the components.

    Args:
        functor (ringrecon.categories.FunctorData):
            The functor F.

        components (list of int):
            For every source object x, an automorphism of ``F(x)``.

    Returns:
        ringrecon.categories.FunctorData:
        The conjugated functor.

    Raises:
        ringrecon.errors.PreconditionError:
            A component is not an automorphism of its image object.
    """
    c = functor.source
    d = functor.target
    inverses = []

    for x, a in enumerate(components):
        fx = functor.object_map[x]

        if d.source(a) != fx or d.target(a) != fx or not d.is_iso(a):
            raise PreconditionError('%d is not an automorphism of %d'
                                    % (a, fx))

        inverses.append(d.inverse(a))

    morphism_map = [
        d.compose(components[c.target(g)],
                  d.compose(functor.morphism_map[g],
                            inverses[c.source(g)]))
        for g in c.morphisms
    ]

    return FunctorData(c, d, functor.object_map, morphism_map)


def compose_with_automorphism(functor, alpha):
    """Conjugate a functor by a natural automorphism of the identity.

    Args:
        functor (ringrecon.categories.FunctorData):
            The functor.

        alpha (ringrecon.categories.NatTransData):
            A natural automorphism of the target's identity functor.

    Returns:
        ringrecon.categories.FunctorData:
        The conjugated functor.
    """
    return conjugate_functor(
        functor,
        [alpha.components[y] for y in functor.object_map])


class SetoidReport(object):
    """The outcome of comparing isomorphisms with equivalences.

    Attributes:
        source (ringrecon.rings.FinRing):
            The ring R.

        target (ringrecon.rings.FinRing):
            The ring R'.

        bound (int):
            The truncation bound.

        isomorphisms (list of tuple):
            The maps of every isomorphism ``R -> R'``.

        round_trips (list of bool):
            Whether each isomorphism is recovered from its change of base.

        identity_automorphisms (tuple):
            The number of natural automorphisms of the identity on each
            side.

        distinguishing (dict):
            When the rings are not isomorphic, the invariants that tell
            their E-rings apart.
    """

    def __init__(self, source, target, bound):
        """Initialize the report.

        Args:
            source (ringrecon.rings.FinRing):
                The ring R.

            target (ringrecon.rings.FinRing):
                The ring R'.

            bound (int):
                The bound.
        """
        self.source = source
        self.target = target
        self.bound = bound
        self.isomorphisms = []
        self.round_trips = []
        self.identity_automorphisms = (None, None)
        self.distinguishing = None

    @property
    def passed(self):
        """Whether every check passed.

        Type:
            bool
        """
        if self.identity_automorphisms != (1, 1):
            return False

        if self.isomorphisms:
            return all(self.round_trips)

        return self.distinguishing is not None

    def to_dict(self):
        """Return a JSON-compatible summary.

        Returns:
            dict:
            The summary.
        """
        return {
            'source': str(self.source),
            'target': str(self.target),
            'bound': self.bound,
            'isomorphisms': [list(f) for f in self.isomorphisms],
            'round_trips': list(self.round_trips),
            'identity_automorphisms': list(self.identity_automorphisms),
            'distinguishing': self.distinguishing,
            'passed': self.passed,
        }


def certify_setoid(source, target, bound):
    """Check that equivalences between algebra categories are discrete.

    Every isomorphism ``R -> R'`` must be recovered from its change of
    base, and the identity of each truncated category must have no
    nontrivial natural automorphisms. When R and R' are not isomorphic,
    their E-rings are computed and shown to differ.

    Args:
        source (ringrecon.rings.FinRing):
            The ring R.

        target (ringrecon.rings.FinRing):
            The ring R'.

        bound (int):
            The truncation bound.

    Returns:
        SetoidReport:
        The report.
    """
    report = SetoidReport(source, target, bound)
    left = build_alg_category(source, bound)
    right = build_alg_category(target, bound)

    report.identity_automorphisms = (len(aut_of_identity(left.category)),
                                     len(aut_of_identity(right.category)))

    for f in enumerate_isomorphisms(source, target):
        report.isomorphisms.append(f.map)
        functor = change_of_base(left, right, f)

        try:
            recovered = induced_iso(functor, left, right).iso
        except (FalsificationError, PreconditionError) as e:
            logger.error('Round trip failed for %r: %s', f, e)
            report.round_trips.append(False)
        else:
            report.round_trips.append(recovered == f)

    if not report.isomorphisms:
        e_source = compute_E(source, bound).ring
        e_target = compute_E(target, bound).ring

        if not is_isomorphic(e_source, e_target):
            report.distinguishing = {
                'source': _invariant_summary(e_source),
                'target': _invariant_summary(e_target),
            }

    logger.info('Setoid check for %s and %s at bound %d: %s', source,
                target, bound, 'passed' if report.passed else 'failed')

    return report


def _invariant_summary(ring):
    return {
        'order': ring.order,
        'characteristic': ring.characteristic,
        'units': len(ring.units),
        'nilpotents': len(ring.nilpotents),
        'idempotents': len(ring.idempotents),
    }
