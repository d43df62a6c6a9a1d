"""Cogroup objects under a base ring and their classification.

Dually to group objects over ``Spec A``, a cogroup here is an augmented
A-algebra ``A -> B -> A`` whose fiber product ``B ×_A B`` carries a
comultiplication ``B ×_A B -> B``. Such structures are exactly the trivial
square-zero extensions ``A ⊕ M`` of A by a module M, with the group law
``(a, m, m') -> (a, m + m')``.

Morphisms between cogroups ``A ⊕ M -> A ⊕ M'`` (over and under A) are
identified with module maps ``M -> M'``. In the language of schemes this is
the contravariant correspondence between group schemes and modules.
"""

import itertools
import logging

from ringrecon.errors import AxiomError, FalsificationError
from ringrecon.modules import (FinModule, enumerate_modules, module_homs,
                               module_isomorphism)
from ringrecon.rings import (RingHom, automorphisms, compose_homs,
                             enumerate_homs, enumerate_rings, fiber_product,
                             _reindexed_ring)


logger = logging.getLogger(__name__)


class AugmentedAlgebra(object):
    """An algebra with a retraction back onto its base.

    Attributes:
        base (ringrecon.rings.FinRing):
            The base ring A.

        algebra (ringrecon.rings.FinRing):
            The algebra B.

        structure (ringrecon.rings.RingHom):
            The structure map ``A -> B``.

        augmentation (ringrecon.rings.RingHom):
            The retraction ``B -> A``.
    """

    def __init__(self, base, algebra, structure, augmentation, verify=True):
        """Initialize the augmented algebra.

        Args:
            base (ringrecon.rings.FinRing):
                The base ring.

            algebra (ringrecon.rings.FinRing):
                The algebra.

            structure (ringrecon.rings.RingHom):
                The structure map.

            augmentation (ringrecon.rings.RingHom):
                The augmentation.

            verify (bool, optional):
                Whether to check that the augmentation is a retraction.

        Raises:
            ringrecon.errors.AxiomError:
                The maps are not a section and retraction.
        """
        self.base = base
        self.algebra = algebra
        self.structure = structure
        self.augmentation = augmentation

        if verify:
            self.verify()

    def __repr__(self):
        return '<AugmentedAlgebra %s over %s>' % (self.algebra, self.base)

    def verify(self):
        """Check that the augmentation retracts the structure map.

        Raises:
            ringrecon.errors.AxiomError:
                The composite is not the identity.
        """
        for f in (self.structure, self.augmentation):
            f.verify()

        for a in self.base.elements:
            if self.augmentation(self.structure(a)) != a:
                raise AxiomError('augmentation is a retraction', (a,))

    def unit(self, b):
        """Return ``s(ε(b))``, the counit applied to an element."""
        return self.structure(self.augmentation(b))

    @property
    def kernel(self):
        """The kernel of the augmentation, in increasing order.

        Type:
            list of int
        """
        return [b for b in self.algebra.elements if self.augmentation(b) == 0]


class CogroupObject(object):
    """A commutative cogroup structure on an augmented algebra.

    Attributes:
        carrier (AugmentedAlgebra):
            The augmented algebra.

        fiber (tuple):
            ``(P, p1, p2)``, the fiber product of the augmentation with
            itself.

        multiplication (ringrecon.rings.RingHom):
            The comultiplication ``P -> B``.

        inverse (ringrecon.rings.RingHom):
            The coinverse ``B -> B``.
    """

    def __init__(self, carrier, fiber, multiplication, inverse, verify=True):
        """Initialize the cogroup.

        Args:
            carrier (AugmentedAlgebra):
                The augmented algebra.

            fiber (tuple):
                The fiber product of the augmentation with itself.

            multiplication (ringrecon.rings.RingHom):
                The comultiplication.

            inverse (ringrecon.rings.RingHom):
                The coinverse.

            verify (bool, optional):
                Whether to check the cogroup axioms.

        Raises:
            ringrecon.errors.AxiomError:
                An axiom failed.
        """
        self.carrier = carrier
        self.fiber = fiber
        self.multiplication = multiplication
        self.inverse = inverse

        apex, p1, p2 = fiber
        self._pairs = {(p1(p), p2(p)): p for p in apex.elements}

        if verify:
            self.verify()

    def __repr__(self):
        return '<CogroupObject %s over %s>' % (self.carrier.algebra,
                                               self.carrier.base)

    @property
    def base(self):
        """The base ring A.

        Type:
            ringrecon.rings.FinRing
        """
        return self.carrier.base

    @property
    def algebra(self):
        """The algebra B.

        Type:
            ringrecon.rings.FinRing
        """
        return self.carrier.algebra

    def pair(self, b, c):
        """Return the element ``(b, c)`` of the fiber product."""
        return self._pairs[(b, c)]

    def multiply(self, b, c):
        """Return the group law applied to ``(b, c)``."""
        return self.multiplication(self._pairs[(b, c)])

    def verify(self):
        """Check the cogroup axioms exhaustively.

        The unit laws come first, then compatibility with the augmentation,
        associativity, the inverse law, commutativity and finally the
        homomorphism conditions.

        Raises:
            ringrecon.errors.AxiomError:
                An axiom failed, with the first failing tuple as witness.
        """
        carrier = self.carrier
        algebra = carrier.algebra
        eps = carrier.augmentation
        fibers = {}

        for b in algebra.elements:
            fibers.setdefault(eps(b), []).append(b)

        for b in algebra.elements:
            u = carrier.unit(b)

            if self.multiply(b, u) != b or self.multiply(u, b) != b:
                raise AxiomError('unit laws', (b,))

        for pair, p in sorted(self._pairs.items()):
            if eps(self.multiplication(p)) != eps(pair[0]):
                raise AxiomError('multiplication is over the base', pair)

        for a in sorted(fibers):
            fiber = fibers[a]

            for b, c, d in itertools.product(fiber, repeat=3):
                if (self.multiply(self.multiply(b, c), d) !=
                    self.multiply(b, self.multiply(c, d))):
                    raise AxiomError('associativity', (b, c, d))

        for b in algebra.elements:
            i = self.inverse(b)

            if eps(i) != eps(b) or self.multiply(b, i) != carrier.unit(b):
                raise AxiomError('inverse law', (b,))

        for a in sorted(fibers):
            for b, c in itertools.product(fibers[a], repeat=2):
                if self.multiply(b, c) != self.multiply(c, b):
                    raise AxiomError('commutativity', (b, c))

        self.multiplication.verify()
        self.inverse.verify()


def nil_algebra(base, module):
    """Return the ring ``A ⊕ M`` and the index of each pair ``(a, m)``."""
    return _reindexed_ring(
        list(itertools.product(base.elements, module.elements)),
        lambda x, y: (base.add(x[0], y[0]), module.add(x[1], y[1])),
        lambda x, y: (base.mul(x[0], y[0]),
                      module.add(module.act(x[0], y[1]),
                                 module.act(y[0], x[1]))),
        (base.one, 0),
        name='%s+%s' % (base, module.name or module.order))


def nil_extension(base, module):
    """Return the trivial square-zero extension ``A ⊕ M`` as a cogroup.

    Elements ``(a, m)`` have index ``a·|M| + m``. The product is
    ``(a, m)(a', m') = (aa', a·m' + a'·m)`` and the group law is
    ``((a, m), (a, m')) -> (a, m + m')``.

    Args:
        base (ringrecon.rings.FinRing):
            The ring A.

        module (ringrecon.modules.FinModule):
            The A-module M.

    Returns:
        CogroupObject:
        The cogroup.
    """
    n = module.order
    ring, index = nil_algebra(base, module)
    pairs = sorted(index, key=index.get)

    structure = RingHom(base, ring, [a * n for a in base.elements],
                        verify=False)
    augmentation = RingHom(ring, base, [p[0] for p in pairs], verify=False)
    carrier = AugmentedAlgebra(base, ring, structure, augmentation,
                               verify=False)
    fiber = fiber_product(augmentation, augmentation)
    apex, p1, p2 = fiber

    multiplication = RingHom(
        apex, ring,
        [index[(pairs[p1(p)][0],
                module.add(pairs[p1(p)][1], pairs[p2(p)][1]))]
         for p in apex.elements],
        verify=False)
    inverse = RingHom(ring, ring,
                      [index[(a, module.neg(m))] for a, m in pairs],
                      verify=False)

    return CogroupObject(carrier, fiber, multiplication, inverse,
                         verify=False)


def augmented_algebras(base, bound):
    """Return every augmented algebra of order at most a bound.

    Two augmented algebras are identified when an isomorphism of algebras
    intertwines both the structure maps and the augmentations.

    Args:
        base (ringrecon.rings.FinRing):
            The ring A.

        bound (int):
            The largest algebra order.

    Returns:
        list of AugmentedAlgebra:
        One augmented algebra per isomorphism class.
    """
    result = []

    for ring in enumerate_rings(bound):
        if ring.order % base.order:
            continue

        sections = enumerate_homs(base, ring)
        retractions = enumerate_homs(ring, base)

        if not sections or not retractions:
            continue

        group = automorphisms(ring)
        inverses = [g.inverse() for g in group]
        seen = set()

        for s in sections:
            for e in retractions:
                if any(e(s(a)) != a for a in base.elements):
                    continue

                if (s.map, e.map) in seen:
                    continue

                for g, g_inv in zip(group, inverses):
                    seen.add((compose_homs(g, s).map,
                              compose_homs(e, g_inv).map))

                result.append(AugmentedAlgebra(base, ring, s, e,
                                               verify=False))

    logger.debug('Found %d augmented algebras over %s up to order %d',
                 len(result), base, bound)

    return result


def _forced_multiplication(carrier, apex, p1, p2):
    """Determine the comultiplication from the unit laws.

    The pairs ``(b, sε(b))`` and ``(sε(b), b)`` generate the fiber product
    additively, and the unit laws fix the multiplication on them.
    """
    algebra = carrier.algebra
    pairs = {(p1(p), p2(p)): p for p in apex.elements}
    values = {}

    for b in algebra.elements:
        u = carrier.unit(b)

        for p in (pairs[(b, u)], pairs[(u, b)]):
            if values.setdefault(p, b) != b:
                return None

    changed = True

    while changed:
        changed = False

        for p, vp in list(values.items()):
            for q, vq in list(values.items()):
                r = apex.add(p, q)
                v = algebra.add(vp, vq)

                if r not in values:
                    values[r] = v
                    changed = True
                elif values[r] != v:
                    return None

    if len(values) != apex.order:
        return None

    return [values[p] for p in apex.elements]


def find_cogroup_structures(carrier):
    """Return the cogroup structures on an augmented algebra.

    The unit laws force the comultiplication, so there is at most one
    structure. The forced map is checked to be a ring map, and the
    remaining cogroup axioms are verified.

    Args:
        carrier (AugmentedAlgebra):
            The augmented algebra.

    Returns:
        list of CogroupObject:
        Either an empty list or a single cogroup.
    """
    algebra = carrier.algebra
    eps = carrier.augmentation
    fiber = fiber_product(eps, eps)
    apex, p1, p2 = fiber

    forced = _forced_multiplication(carrier, apex, p1, p2)

    if forced is None:
        logger.debug('Unit laws are inconsistent on %r; searching all maps',
                     carrier)
        candidates = [
            h.map
            for h in enumerate_homs(apex, algebra)
            if all(h(p) == p1(p) for p in apex.elements
                   if p2(p) == carrier.unit(p1(p))) and
            all(h(p) == p2(p) for p in apex.elements
                if p1(p) == carrier.unit(p2(p)))
        ]
    else:
        candidates = [forced]

    pairs = {(p1(p), p2(p)): p for p in apex.elements}

    for mapping in candidates:
        multiplication = RingHom(apex, algebra, mapping, verify=False)

        try:
            multiplication.verify()
        except AxiomError:
            continue

        inverse = []

        for b in algebra.elements:
            unit = carrier.unit(b)
            options = [
                c
                for c in algebra.elements
                if eps(c) == eps(b) and mapping[pairs[(b, c)]] == unit
            ]

            if len(options) != 1:
                break

            inverse.append(options[0])
        else:
            try:
                return [CogroupObject(
                    carrier, fiber, multiplication,
                    RingHom(algebra, algebra, inverse, verify=False))]
            except AxiomError as e:
                logger.debug('Forced group law on %r fails: %s', carrier, e)

    return []


def enumerate_cogroups(base, bound):
    """Return every cogroup of order at most a bound, up to isomorphism.

    Fiber products are computed exactly, even when they are larger than
    the bound.

    Args:
        base (ringrecon.rings.FinRing):
            The ring A.

        bound (int):
            The largest algebra order. It must be at least ``|A|``.

    Returns:
        list of CogroupObject:
        The cogroups, ordered by algebra order.
    """
    result = []

    for carrier in augmented_algebras(base, bound):
        result.extend(find_cogroup_structures(carrier))

    logger.debug('Found %d cogroups over %s up to order %d', len(result),
                 base, bound)

    return result


def cogroup_homs(source, target):
    """Return the cogroup morphisms between two cogroups over the same base.

    These are the algebra maps over and under the base that intertwine the
    comultiplications.

    Args:
        source (CogroupObject):
            The domain.

        target (CogroupObject):
            The codomain.

    Returns:
        list of ringrecon.rings.RingHom:
        The morphisms.
    """
    s1 = source.carrier
    s2 = target.carrier
    result = []

    for h in enumerate_homs(s1.algebra, s2.algebra):
        if compose_homs(h, s1.structure) != s2.structure:
            continue

        if compose_homs(s2.augmentation, h) != s1.augmentation:
            continue

        if all(h(source.multiply(b, c)) == target.multiply(h(b), h(c))
               for b, c in sorted(source._pairs)):
            result.append(h)

    return result


def cogroup_isomorphism(source, target):
    """Return an isomorphism of cogroups, if one exists."""
    if source.algebra.order != target.algebra.order:
        return None

    for h in cogroup_homs(source, target):
        if h.is_isomorphism:
            return h

    return None


def splitting_map(cogroup, module):
    """Return the canonical map ``A ⊕ I -> B`` for the kernel module I.

    Args:
        cogroup (CogroupObject):
            The cogroup.

        module (ringrecon.modules.FinModule):
            The kernel module returned by :py:func:`classify_cogroup`.

    Returns:
        ringrecon.rings.RingHom:
        The map ``(a, x) -> s(a) + x`` out of the nil extension.
    """
    carrier = cogroup.carrier
    kernel = carrier.kernel
    extension = nil_extension(carrier.base, module)
    mapping = [
        carrier.algebra.add(carrier.structure(a), kernel[x])
        for a in carrier.base.elements
        for x in module.elements
    ]

    return RingHom(extension.algebra, carrier.algebra, mapping, verify=False)


def classify_cogroup(cogroup):
    """Return the module classifying a cogroup.

    This is the kernel I of the augmentation with the base acting through
    the structure map. The kernel must square to zero and the cogroup must
    be isomorphic to the trivial extension by I.

    Args:
        cogroup (CogroupObject):
            The cogroup.

    Returns:
        ringrecon.modules.FinModule:
        The module I, with elements in increasing order of the algebra.

    Raises:
        ringrecon.errors.FalsificationError:
            The kernel does not square to zero, or the cogroup is not the
            trivial extension.
    """
    carrier = cogroup.carrier
    algebra = carrier.algebra
    kernel = carrier.kernel
    position = {x: i for i, x in enumerate(kernel)}

    for x in kernel:
        for y in kernel:
            if algebra.mul(x, y) != 0:
                raise FalsificationError(
                    'cogroups-are-square-zero',
                    'the augmentation ideal of %s does not square to zero'
                    % algebra,
                    witness=(x, y))

    module = FinModule(
        carrier.base,
        [[position[algebra.add(x, y)] for y in kernel] for x in kernel],
        [[position[algebra.mul(carrier.structure(a), x)] for x in kernel]
         for a in carrier.base.elements],
        name='ker(%s)' % algebra,
        verify=False)

    extension = nil_extension(carrier.base, module)
    split = splitting_map(cogroup, module)

    try:
        split.verify()
    except AxiomError as e:
        raise FalsificationError('cogroups-are-square-zero',
                                 'the splitting of %s is not a ring map: %s'
                                 % (algebra, e),
                                 witness=e.witness)

    if (not split.is_isomorphism or
        split not in cogroup_homs(extension, cogroup)):
        raise FalsificationError('cogroups-are-square-zero',
                                 '%s is not the trivial extension by its '
                                 'augmentation ideal' % algebra,
                                 witness=split.map)

    return module


def nil_extension_map(base, phi, source, target):
    """Return the cogroup map ``A ⊕ M -> A ⊕ M'`` of a module map.

    Args:
        base (ringrecon.rings.FinRing):
            The ring A.

        phi (tuple of int):
            A module map ``M -> M'``, as an image tuple.

        source (ringrecon.modules.FinModule):
            The module M.

        target (ringrecon.modules.FinModule):
            The module M'.

    Returns:
        ringrecon.rings.RingHom:
        The map ``(a, m) -> (a, φ(m))``.
    """
    n1 = source.order
    n2 = target.order

    return RingHom(
        nil_algebra(base, source)[0], nil_algebra(base, target)[0],
        [a * n2 + phi[m]
         for a in base.elements
         for m in range(n1)],
        verify=False)


class ModuleEquivalenceReport(object):
    """The outcome of comparing modules with cogroups.

    Attributes:
        modules (list of ringrecon.modules.FinModule):
            The modules within the bound.

        cogroups (list of CogroupObject):
            The cogroups within the bound.

        matching (list of int):
            For each module, the index of the cogroup it classifies.

        hom_counts (list of tuple):
            ``(i, j, module_homs, cogroup_homs)`` for every pair of modules.

        square_zero (bool):
            Whether every augmentation ideal squares to zero.

        bijective (bool):
            Whether modules and cogroups correspond one to one.

        fully_faithful (bool):
            Whether every hom-set comparison is a bijection.

        functorial (bool):
            Whether composition of module maps is preserved.

        counterexample (tuple):
            The first failure, or ``None``.
    """

    def __init__(self, modules, cogroups):
        """Initialize the report.

        Args:
            modules (list of ringrecon.modules.FinModule):
                The modules.

            cogroups (list of CogroupObject):
                The cogroups.
        """
        self.modules = modules
        self.cogroups = cogroups
        self.matching = []
        self.hom_counts = []
        self.square_zero = True
        self.bijective = True
        self.fully_faithful = True
        self.functorial = True
        self.counterexample = None

    @property
    def passed(self):
        """Whether every check passed.

        Type:
            bool
        """
        return (self.square_zero and self.bijective and
                self.fully_faithful and self.functorial)

    def fail(self, attr, counterexample):
        """Record a failed check."""
        setattr(self, attr, False)

        if self.counterexample is None:
            self.counterexample = counterexample

    def to_dict(self):
        """Return a JSON-compatible summary.

        Returns:
            dict:
            The summary.
        """
        return {
            'modules': len(self.modules),
            'cogroups': len(self.cogroups),
            'matching': list(self.matching),
            'hom_counts': [list(entry) for entry in self.hom_counts],
            'square_zero': self.square_zero,
            'bijective': self.bijective,
            'fully_faithful': self.fully_faithful,
            'functorial': self.functorial,
            'counterexample': (list(self.counterexample)
                               if self.counterexample else None),
        }


def module_equivalence_check(base, bound):
    """Compare modules of order at most ``bound / |A|`` with cogroups.

    Args:
        base (ringrecon.rings.FinRing):
            The ring A.

        bound (int):
            The largest cogroup algebra order.

    Returns:
        ModuleEquivalenceReport:
        The comparison.
    """
    modules = enumerate_modules(base, bound // base.order)
    cogroups = enumerate_cogroups(base, bound)
    report = ModuleEquivalenceReport(modules, cogroups)

    classified = []

    for i, cogroup in enumerate(cogroups):
        try:
            classified.append(classify_cogroup(cogroup))
        except FalsificationError as e:
            report.fail('square_zero', ('cogroup', i, e.check))
            classified.append(None)

    used = set()

    for i, module in enumerate(modules):
        matches = [
            j
            for j, kernel in enumerate(classified)
            if kernel is not None and
            module_isomorphism(module, kernel) is not None
        ]

        if len(matches) != 1 or matches[0] in used:
            report.fail('bijective', ('module', i, matches))
            report.matching.append(None)
        else:
            used.add(matches[0])
            report.matching.append(matches[0])

    if len(used) != len(cogroups):
        report.fail('bijective', ('unmatched cogroups',
                                  sorted(set(range(len(cogroups))) - used)))

    extensions = [nil_extension(base, module) for module in modules]
    maps = {}

    for i, source in enumerate(modules):
        for j, target in enumerate(modules):
            phis = module_homs(source, target)
            images = [nil_extension_map(base, phi, source, target)
                      for phi in phis]
            homs = cogroup_homs(extensions[i], extensions[j])
            report.hom_counts.append((i, j, len(phis), len(homs)))
            maps[(i, j)] = list(zip(phis, images))

            if (len(set(h.map for h in images)) != len(phis) or
                set(h.map for h in images) != set(h.map for h in homs)):
                report.fail('fully_faithful', ('homs', i, j))

    for (i, j), first in sorted(maps.items()):
        for k in range(len(modules)):
            for phi, image_phi in first:
                for psi, image_psi in maps[(j, k)]:
                    composite = tuple(psi[phi[m]]
                                      for m in modules[i].elements)
                    expected = nil_extension_map(base, composite,
                                                 modules[i], modules[k])

                    if compose_homs(image_psi, image_phi).map != expected.map:
                        report.fail('functorial', ('compose', i, j, k))

    logger.debug('Module/cogroup comparison over %s at bound %d: %s',
                 base, bound, 'passed' if report.passed else 'failed')

    return report


__all__ = [
    'AugmentedAlgebra',
    'CogroupObject',
    'ModuleEquivalenceReport',
    'augmented_algebras',
    'classify_cogroup',
    'cogroup_homs',
    'cogroup_isomorphism',
    'enumerate_cogroups',
    'find_cogroup_structures',
    'module_equivalence_check',
    'nil_algebra',
    'nil_extension',
    'nil_extension_map',
    'splitting_map',
]
