"""Finite categories, functors and natural transformations.

Categories are given by explicit tables: every morphism has an integer id,
a source and a target, and composition is a table on composable pairs.
Limits and colimits are found by searching for a cone or cocone and
checking its universal property against every competitor in the category,
so an answer of ``None`` means the (co)limit does not exist in the given
category. In a truncated category, that is a legitimate answer.
"""

import logging
import random
from collections import defaultdict
from functools import cached_property

from ringrecon.errors import (AxiomError, CategoryAxiomError,
                              PreconditionError)


logger = logging.getLogger(__name__)


class FinCategory(object):
    """A finite category given by tables.

    Attributes:
        objects (list):
            Display labels for the objects. Objects themselves are the
            indices into this list.

        sources (tuple of int):
            The source object of every morphism.

        targets (tuple of int):
            The target object of every morphism.

        identities (tuple of int):
            The identity morphism of every object.

        composition (dict):
            A mapping from ``(g, f)`` to ``g ∘ f`` for every composable pair.
    """

    def __init__(self, objects, sources, targets, identities, composition,
                 name=None, verify=True):
        """Initialize the category.

        Args:
            objects (list):
                Display labels for the objects.

            sources (list of int):
                The source of every morphism.

            targets (list of int):
                The target of every morphism.

            identities (list of int):
                The identity morphism of every object.

            composition (dict):
                The composition table.

            name (str, optional):
                A display name.

            verify (bool, optional):
                Whether to check the category axioms.

        Raises:
            ringrecon.errors.CategoryAxiomError:
                The tables do not form a category.
        """
        self.objects = list(objects)
        self.sources = tuple(sources)
        self.targets = tuple(targets)
        self.identities = tuple(identities)
        self.composition = dict(composition)
        self.name = name

        homs = defaultdict(list)

        for f, (x, y) in enumerate(zip(self.sources, self.targets)):
            homs[(x, y)].append(f)

        self._homs = {key: tuple(value) for key, value in homs.items()}

        if verify:
            self.verify()

    def __repr__(self):
        return '<FinCategory %s: %d objects, %d morphisms>' % (
            self.name or '', self.num_objects, self.num_morphisms)

    @property
    def num_objects(self):
        """The number of objects.

        Type:
            int
        """
        return len(self.objects)

    @property
    def num_morphisms(self):
        """The number of morphisms.

        Type:
            int
        """
        return len(self.sources)

    @property
    def object_ids(self):
        """The objects, as indices.

        Type:
            range
        """
        return range(len(self.objects))

    @property
    def morphisms(self):
        """The morphisms, as ids.

        Type:
            range
        """
        return range(len(self.sources))

    def hom(self, x, y):
        """Return the morphisms from ``x`` to ``y``.

        Args:
            x (int):
                The source object.

            y (int):
                The target object.

        Returns:
            tuple of int:
            The morphism ids, in increasing order.
        """
        return self._homs.get((x, y), ())

    def source(self, f):
        """Return the source object of a morphism."""
        return self.sources[f]

    def target(self, f):
        """Return the target object of a morphism."""
        return self.targets[f]

    def identity(self, x):
        """Return the identity morphism of an object."""
        return self.identities[x]

    def compose(self, g, f):
        """Return ``g ∘ f``.

        Args:
            g (int):
                The second morphism.

            f (int):
                The first morphism.

        Returns:
            int:
            The composite.

        Raises:
            ringrecon.errors.PreconditionError:
                The morphisms are not composable.
        """
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise PreconditionError('Morphisms %d and %d are not composable'
                                    % (g, f))

    def verify(self):
        """Check the category axioms exhaustively.

        Raises:
            ringrecon.errors.CategoryAxiomError:
                An axiom failed. The witness is the first failing tuple.
        """
        n = self.num_morphisms

        if len(self.targets) != n:
            raise CategoryAxiomError('every morphism has a target')

        if len(self.identities) != self.num_objects:
            raise CategoryAxiomError('every object has an identity')

        for f in self.morphisms:
            if not (0 <= self.sources[f] < self.num_objects and
                    0 <= self.targets[f] < self.num_objects):
                raise CategoryAxiomError('morphism ends are objects', (f,))

        for x, e in enumerate(self.identities):
            if not 0 <= e < n or self.sources[e] != x or self.targets[e] != x:
                raise CategoryAxiomError('identities are endomorphisms', (x,))

        for (g, f), h in self.composition.items():
            if not (0 <= f < n and 0 <= g < n and 0 <= h < n):
                raise CategoryAxiomError('composites are morphisms', (g, f))

            if self.targets[f] != self.sources[g]:
                raise CategoryAxiomError('only composable pairs compose',
                                         (g, f))

        for f in self.morphisms:
            for g in self._outgoing[self.targets[f]]:
                h = self.composition.get((g, f))

                if h is None:
                    raise CategoryAxiomError('composable pairs compose',
                                             (g, f))

                if (self.sources[h] != self.sources[f] or
                    self.targets[h] != self.targets[g]):
                    raise CategoryAxiomError('composites have the right ends',
                                             (g, f))

        for f in self.morphisms:
            x = self.sources[f]
            y = self.targets[f]

            if (self.composition[(self.identities[y], f)] != f or
                self.composition[(f, self.identities[x])] != f):
                raise CategoryAxiomError('identity laws', (f,))

        for f in self.morphisms:
            for g in self._outgoing[self.targets[f]]:
                gf = self.composition[(g, f)]

                for h in self._outgoing[self.targets[g]]:
                    if (self.composition[(h, gf)] !=
                        self.composition[(self.composition[(h, g)], f)]):
                        raise CategoryAxiomError('composition is associative',
                                                 (h, g, f))

    @cached_property
    def _outgoing(self):
        outgoing = [[] for _ in self.objects]

        for f in self.morphisms:
            outgoing[self.sources[f]].append(f)

        return outgoing

    @cached_property
    def _opposite(self):
        opposite = FinCategory(
            objects=self.objects,
            sources=self.targets,
            targets=self.sources,
            identities=self.identities,
            composition={
                (f, g): h
                for (g, f), h in self.composition.items()
            },
            name='%s^op' % (self.name or 'C'),
            verify=False)
        opposite._opposite = self

        return opposite

    def opposite(self):
        """Return the opposite category.

        Objects and morphism ids are unchanged; sources and targets swap.

        Returns:
            FinCategory:
            The opposite category.
        """
        return self._opposite

    def is_iso(self, f):
        """Return whether a morphism is an isomorphism."""
        return self.inverse(f) is not None

    def inverse(self, f):
        """Return the inverse of a morphism, if it has one.

        Args:
            f (int):
                The morphism.

        Returns:
            int:
            The inverse, or ``None``.
        """
        x = self.sources[f]
        y = self.targets[f]

        for g in self.hom(y, x):
            if (self.composition[(g, f)] == self.identities[x] and
                self.composition[(f, g)] == self.identities[y]):
                return g

        return None

    def isomorphisms(self, x, y):
        """Return the isomorphisms from ``x`` to ``y``.

        Args:
            x (int):
                The source object.

            y (int):
                The target object.

        Returns:
            list of int:
            The isomorphisms.
        """
        return [f for f in self.hom(x, y) if self.is_iso(f)]

    @cached_property
    def initial(self):
        """The initial objects.

        Type:
            list of int
        """
        return [
            x
            for x in self.object_ids
            if all(len(self.hom(x, y)) == 1 for y in self.object_ids)
        ]

    @cached_property
    def terminal(self):
        """The terminal objects.

        Type:
            list of int
        """
        return [
            y
            for y in self.object_ids
            if all(len(self.hom(x, y)) == 1 for x in self.object_ids)
        ]

    def subcategory(self, objects, morphisms, name=None):
        """Return the subcategory on the given objects and morphisms.

        Args:
            objects (list of int):
                The objects to keep.

            morphisms (list of int):
                The morphisms to keep. They must contain the identities and
                be closed under composition.

            name (str, optional):
                A display name.

        Returns:
            tuple:
            A 3-tuple of the subcategory and the mappings from old object and
            morphism ids to new ones.
        """
        object_index = {x: i for i, x in enumerate(objects)}
        morphism_index = {f: i for i, f in enumerate(morphisms)}
        composition = {}

        for f in morphisms:
            for g in morphisms:
                if self.targets[f] == self.sources[g]:
                    composition[(morphism_index[g], morphism_index[f])] = \
                        morphism_index[self.composition[(g, f)]]

        sub = FinCategory(
            objects=[self.objects[x] for x in objects],
            sources=[object_index[self.sources[f]] for f in morphisms],
            targets=[object_index[self.targets[f]] for f in morphisms],
            identities=[morphism_index[self.identities[x]] for x in objects],
            composition=composition,
            name=name,
            verify=False)

        return sub, object_index, morphism_index


def is_mono(category, f):
    """Return whether a morphism is a monomorphism.

    Args:
        category (FinCategory):
            The category.

        f (int):
            The morphism.

    Returns:
        bool:
        ``True`` if ``f ∘ g = f ∘ h`` implies ``g = h``.
    """
    x = category.source(f)

    for w in category.object_ids:
        homs = category.hom(w, x)
        images = set(category.compose(f, g) for g in homs)

        if len(images) != len(homs):
            return False

    return True


def is_epi(category, f):
    """Return whether a morphism is an epimorphism."""
    return is_mono(category.opposite(), f)


def initial_objects(category):
    """Return the initial objects of a category."""
    return list(category.initial)


def terminal_objects(category):
    """Return the terminal objects of a category."""
    return list(category.terminal)


def _find_universal(category, candidates, competitors):
    """Return the first candidate cocone with the universal property.

    Args:
        category (FinCategory):
            The category.

        candidates (iterable):
            ``(apex, legs)`` pairs.

        competitors (dict):
            The number of cocones at each object.

    Returns:
        tuple:
        The universal ``(apex, legs)``, or ``None``.
    """
    for apex, legs in candidates:
        universal = True

        for q in category.object_ids:
            homs = category.hom(apex, q)

            if len(homs) != competitors[q]:
                universal = False
                break

            induced = set(
                tuple(category.compose(u, leg) for leg in legs)
                for u in homs)

            if len(induced) != len(homs):
                universal = False
                break

        if universal:
            return apex, legs

    return None


def pushout(category, f, g):
    """Return a pushout of a span, if one exists in the category.

    Args:
        category (FinCategory):
            The category.

        f (int):
            A morphism ``X -> Y1``.

        g (int):
            A morphism ``X -> Y2``.

    Returns:
        tuple:
        ``(apex, (i1, i2))``, or ``None`` if no pushout exists.

    Raises:
        ringrecon.errors.PreconditionError:
            The morphisms do not share a source.
    """
    if category.source(f) != category.source(g):
        raise PreconditionError('Morphisms %d and %d do not share a source'
                                % (f, g))

    y1 = category.target(f)
    y2 = category.target(g)
    cocones = {
        q: [
            (j1, j2)
            for j1 in category.hom(y1, q)
            for j2 in category.hom(y2, q)
            if category.compose(j1, f) == category.compose(j2, g)
        ]
        for q in category.object_ids
    }

    return _find_universal(
        category,
        ((p, legs) for p in category.object_ids for legs in cocones[p]),
        {q: len(c) for q, c in cocones.items()})


def pullback(category, f, g):
    """Return a pullback of a cospan, if one exists in the category.

    Args:
        category (FinCategory):
            The category.

        f (int):
            A morphism ``Y1 -> X``.

        g (int):
            A morphism ``Y2 -> X``.

    Returns:
        tuple:
        ``(apex, (p1, p2))``, or ``None`` if no pullback exists.
    """
    if category.target(f) != category.target(g):
        raise PreconditionError('Morphisms %d and %d do not share a target'
                                % (f, g))

    return pushout(category.opposite(), f, g)


def coequalizer(category, g1, g2):
    """Return a coequalizer of a parallel pair, if one exists.

    Args:
        category (FinCategory):
            The category.

        g1 (int):
            A morphism ``Y -> Z``.

        g2 (int):
            A parallel morphism ``Y -> Z``.

    Returns:
        tuple:
        ``(apex, (q,))``, or ``None``.

    Raises:
        ringrecon.errors.PreconditionError:
            The morphisms are not parallel.
    """
    if (category.source(g1) != category.source(g2) or
        category.target(g1) != category.target(g2)):
        raise PreconditionError('Morphisms %d and %d are not parallel'
                                % (g1, g2))

    z = category.target(g1)
    cocones = {
        q: [
            (j,)
            for j in category.hom(z, q)
            if category.compose(j, g1) == category.compose(j, g2)
        ]
        for q in category.object_ids
    }

    return _find_universal(
        category,
        ((p, legs) for p in category.object_ids for legs in cocones[p]),
        {q: len(c) for q, c in cocones.items()})


def equalizer(category, g1, g2):
    """Return an equalizer of a parallel pair, if one exists.

    Args:
        category (FinCategory):
            The category.

        g1 (int):
            A morphism ``Y -> Z``.

        g2 (int):
            A parallel morphism ``Y -> Z``.

    Returns:
        tuple:
        ``(apex, (e,))``, or ``None``.
    """
    return coequalizer(category.opposite(), g1, g2)


def coproduct_cocones(category, a, b, apex):
    """Return every pair of morphisms from ``a`` and ``b`` into an apex.

    Args:
        category (FinCategory):
            The category.

        a (int):
            The first object.

        b (int):
            The second object.

        apex (int):
            The apex.

    Returns:
        list of tuple:
        The ``(i1, i2)`` pairs.
    """
    return [
        (i1, i2)
        for i1 in category.hom(a, apex)
        for i2 in category.hom(b, apex)
    ]


def is_coproduct(category, i1, i2):
    """Return whether a cocone is a coproduct of its legs' sources.

    Args:
        category (FinCategory):
            The category.

        i1 (int):
            A morphism ``A -> P``.

        i2 (int):
            A morphism ``B -> P``.

    Returns:
        bool:
        ``True`` if ``(P, i1, i2)`` is a coproduct of ``A`` and ``B``.
    """
    a = category.source(i1)
    b = category.source(i2)
    apex = category.target(i1)

    if category.target(i2) != apex:
        return False

    competitors = {
        q: len(category.hom(a, q)) * len(category.hom(b, q))
        for q in category.object_ids
    }

    return _find_universal(category, [(apex, (i1, i2))],
                           competitors) is not None


def coproduct(category, a, b):
    """Return a coproduct of two objects, if one exists.

    Args:
        category (FinCategory):
            The category.

        a (int):
            The first object.

        b (int):
            The second object.

    Returns:
        tuple:
        ``(apex, (i1, i2))``, or ``None``.
    """
    competitors = {
        q: len(category.hom(a, q)) * len(category.hom(b, q))
        for q in category.object_ids
    }

    return _find_universal(
        category,
        ((p, legs)
         for p in category.object_ids
         for legs in coproduct_cocones(category, a, b, p)),
        competitors)


def product(category, a, b):
    """Return a product of two objects, if one exists."""
    return coproduct(category.opposite(), a, b)


def _is_equalizer_of(category, f, g1, g2):
    """Return whether ``f`` is an equalizer of ``g1`` and ``g2``."""
    if category.compose(g1, f) != category.compose(g2, f):
        return False

    y = category.source(g1)
    opposite = category.opposite()
    competitors = {
        w: sum(1 for k in category.hom(w, y)
               if category.compose(g1, k) == category.compose(g2, k))
        for w in category.object_ids
    }

    return _find_universal(opposite, [(category.source(f), (f,))],
                           competitors) is not None


def regular_mono_witness(category, f):
    """Return a parallel pair that ``f`` equalizes, if there is one.

    The cokernel pair of ``f`` is tried first. If it exists, ``f`` is a
    regular monomorphism exactly when it equalizes the two injections. If
    the pushout does not exist in the category, every parallel pair out of
    the target of ``f`` is searched.

    Args:
        category (FinCategory):
            The category.

        f (int):
            The morphism.

    Returns:
        tuple:
        A parallel pair ``(g1, g2)`` with ``f`` as equalizer, or ``None``.
    """
    if not is_mono(category, f):
        return None

    cokernel_pair = pushout(category, f, f)

    if cokernel_pair is not None:
        apex, (i1, i2) = cokernel_pair

        if _is_equalizer_of(category, f, i1, i2):
            return (i1, i2)

        return None

    logger.debug('Pushout of morphism %d along itself is absent; searching '
                 'all parallel pairs', f)

    y = category.target(f)

    for z in category.object_ids:
        homs = category.hom(y, z)

        for g1 in homs:
            for g2 in homs:
                if g1 <= g2 and _is_equalizer_of(category, f, g1, g2):
                    return (g1, g2)

    return None


def is_regular_mono(category, f):
    """Return whether a morphism is a regular monomorphism.

    Args:
        category (FinCategory):
            The category.

        f (int):
            The morphism.

    Returns:
        bool:
        ``True`` if ``f`` is an equalizer of some parallel pair.
    """
    return regular_mono_witness(category, f) is not None


def _factors_through(category, m1, m2):
    """Return whether ``m1 = m2 ∘ u`` for some ``u``."""
    return any(category.compose(m2, u) == m1
               for u in category.hom(category.source(m1),
                                     category.source(m2)))


def subobjects(category, x):
    """Return the subobjects of an object.

    Monomorphisms into ``x`` are identified when each factors through the
    other. The first monomorphism (by id) of every class is returned.

    Args:
        category (FinCategory):
            The category.

        x (int):
            The object.

    Returns:
        list of int:
        One monomorphism per subobject.
    """
    representatives = []

    for y in category.object_ids:
        for m in category.hom(y, x):
            if not is_mono(category, m):
                continue

            if not any(_factors_through(category, m, r) and
                       _factors_through(category, r, m)
                       for r in representatives):
                representatives.append(m)

    return sorted(representatives)


def _require_initial(category):
    if not category.initial:
        raise PreconditionError('%r has no initial object' % category)

    return set(category.initial)


def simple_objects(category):
    """Return the simple objects of a category.

    An object is simple if it is not initial and every monomorphism into it
    either has initial source or is an isomorphism.

    Args:
        category (FinCategory):
            The category.

    Returns:
        list of int:
        The simple objects.

    Raises:
        ringrecon.errors.PreconditionError:
            The category has no initial object.
    """
    initial = _require_initial(category)

    return [
        x
        for x in category.object_ids
        if x not in initial and all(
            category.source(m) in initial or category.is_iso(m)
            for y in category.object_ids
            for m in category.hom(y, x)
            if is_mono(category, m))
    ]


def is_connected(category, x):
    """Return whether an object is connected.

    An object is connected if it is not initial and is not a coproduct of
    two non-initial objects.

    Args:
        category (FinCategory):
            The category.

        x (int):
            The object.

    Returns:
        bool:
        ``True`` if the object is connected.
    """
    initial = _require_initial(category)

    if x in initial:
        return False

    others = [y for y in category.object_ids if y not in initial]

    for i, a in enumerate(others):
        for b in others[i:]:
            for i1 in category.hom(a, x):
                for i2 in category.hom(b, x):
                    if is_coproduct(category, i1, i2):
                        return False

    return True


class FunctorData(object):
    """A functor between finite categories.

    Attributes:
        source (FinCategory):
            The source category.

        target (FinCategory):
            The target category.

        object_map (tuple of int):
            The image of every object.

        morphism_map (tuple of int):
            The image of every morphism.
    """

    def __init__(self, source, target, object_map, morphism_map,
                 verify=True):
        """Initialize the functor.

        Args:
            source (FinCategory):
                The source category.

            target (FinCategory):
                The target category.

            object_map (list of int):
                The image of every object.

            morphism_map (list of int):
                The image of every morphism.

            verify (bool, optional):
                Whether to check the functor laws.

        Raises:
            ringrecon.errors.AxiomError:
                A functor law failed.
        """
        self.source = source
        self.target = target
        self.object_map = tuple(object_map)
        self.morphism_map = tuple(morphism_map)

        if verify:
            self.verify()

    def __repr__(self):
        return '<FunctorData %r -> %r>' % (self.source, self.target)

    def __eq__(self, other):
        return (isinstance(other, FunctorData) and
                self.source is other.source and
                self.target is other.target and
                self.object_map == other.object_map and
                self.morphism_map == other.morphism_map)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.object_map, self.morphism_map))

    def verify(self):
        """Check that identities and composition are preserved.

        Raises:
            ringrecon.errors.AxiomError:
                A functor law failed.
        """
        c = self.source
        d = self.target
        fo = self.object_map
        fm = self.morphism_map

        if len(fo) != c.num_objects or len(fm) != c.num_morphisms:
            raise AxiomError('functor is total')

        for f in c.morphisms:
            image = fm[f]

            if (d.source(image) != fo[c.source(f)] or
                d.target(image) != fo[c.target(f)]):
                raise AxiomError('functor preserves ends', (f,))

        for x in c.object_ids:
            if fm[c.identity(x)] != d.identity(fo[x]):
                raise AxiomError('functor preserves identities', (x,))

        for (g, f), h in sorted(c.composition.items()):
            if fm[h] != d.compose(fm[g], fm[f]):
                raise AxiomError('functor preserves composition', (g, f))


def identity_functor(category):
    """Return the identity functor of a category."""
    return FunctorData(category, category, category.object_ids,
                       category.morphisms, verify=False)


def compose_functors(g, f):
    """Return the composite functor ``g ∘ f``.

    Args:
        g (FunctorData):
            The second functor.

        f (FunctorData):
            The first functor.

    Returns:
        FunctorData:
        The composite.
    """
    if f.target is not g.source:
        raise PreconditionError('%r and %r are not composable' % (g, f))

    return FunctorData(f.source, g.target,
                       [g.object_map[y] for y in f.object_map],
                       [g.morphism_map[m] for m in f.morphism_map],
                       verify=False)


class NatTransData(object):
    """A natural transformation between two parallel functors.

    Attributes:
        source (FunctorData):
            The source functor.

        target (FunctorData):
            The target functor.

        components (tuple of int):
            The component at every object of the common source category.
    """

    def __init__(self, source, target, components, verify=True):
        """Initialize the transformation.

        Args:
            source (FunctorData):
                The source functor.

            target (FunctorData):
                The target functor.

            components (list of int):
                The components.

            verify (bool, optional):
                Whether to check naturality.

        Raises:
            ringrecon.errors.AxiomError:
                A naturality square does not commute.
        """
        self.source = source
        self.target = target
        self.components = tuple(components)

        if verify:
            self.verify()

    def __repr__(self):
        return '<NatTransData %r>' % (self.components,)

    def __eq__(self, other):
        return (isinstance(other, NatTransData) and
                self.components == other.components)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.components)

    def verify(self):
        """Check every naturality square.

        Raises:
            ringrecon.errors.AxiomError:
                A square does not commute, or the functors are not parallel.
        """
        f_ = self.source
        g_ = self.target

        if f_.source is not g_.source or f_.target is not g_.target:
            raise AxiomError('functors are parallel')

        c = f_.source
        d = f_.target

        for x in c.object_ids:
            a = self.components[x]

            if (d.source(a) != f_.object_map[x] or
                d.target(a) != g_.object_map[x]):
                raise AxiomError('components have the right ends', (x,))

        for f in c.morphisms:
            x = c.source(f)
            y = c.target(f)

            if (d.compose(g_.morphism_map[f], self.components[x]) !=
                d.compose(self.components[y], f_.morphism_map[f])):
                raise AxiomError('naturality', (f,))

    def is_invertible(self):
        """Return whether every component is an isomorphism."""
        d = self.source.target

        return all(d.is_iso(a) for a in self.components)


def natural_transformations(source, target, invertible=False):
    """Return every natural transformation between two parallel functors.

    Each object's candidate components are pruned against the naturality
    squares of every morphism until nothing changes, and the remaining
    choices are searched with the squares between assigned objects checked
    as soon as both ends have a component. Every result passes the full
    naturality check.

    Args:
        source (FunctorData):
            The source functor.

        target (FunctorData):
            The target functor.

        invertible (bool, optional):
            Whether to return only natural isomorphisms.

    Returns:
        list of NatTransData:
        The transformations, ordered by their components.
    """
    c = source.source
    d = source.target
    fo, fm = source.object_map, source.morphism_map
    go, gm = target.object_map, target.morphism_map

    domains = []

    for x in c.object_ids:
        candidates = d.hom(fo[x], go[x])

        if invertible:
            candidates = [a for a in candidates if d.is_iso(a)]

        domains.append(set(candidates))

    constraints = [
        (c.source(f), c.target(f), fm[f], gm[f])
        for f in c.morphisms
        if f != c.identity(c.source(f))
    ]

    def holds(ax, ay, ff, gf):
        return d.compose(gf, ax) == d.compose(ay, ff)

    changed = True

    while changed:
        changed = False

        for x, y, ff, gf in constraints:
            if x == y:
                kept = set(a for a in domains[x] if holds(a, a, ff, gf))
            else:
                kept = set(a for a in domains[x]
                           if any(holds(a, b, ff, gf) for b in domains[y]))

            if kept != domains[x]:
                domains[x] = kept
                changed = True

            if x != y:
                kept = set(b for b in domains[y]
                           if any(holds(a, b, ff, gf) for a in domains[x]))

                if kept != domains[y]:
                    domains[y] = kept
                    changed = True

    if any(not domain for domain in domains):
        return []

    order = sorted(c.object_ids, key=lambda x: (len(domains[x]), x))
    position = {x: i for i, x in enumerate(order)}
    checks = defaultdict(list)

    for x, y, ff, gf in constraints:
        checks[max(position[x], position[y])].append((x, y, ff, gf))

    components = [None] * c.num_objects
    results = []

    def search(level):
        if level == len(order):
            results.append(tuple(components))
            return

        x = order[level]

        for a in sorted(domains[x]):
            components[x] = a

            if all(holds(components[cx], components[cy], ff, gf)
                   for cx, cy, ff, gf in checks[level]):
                search(level + 1)

        components[x] = None

    search(0)
    logger.debug('Found %d natural transformations', len(results))

    return [
        NatTransData(source, target, result)
        for result in sorted(results)
    ]


def natural_isomorphisms(source, target):
    """Return every natural isomorphism between two parallel functors."""
    return natural_transformations(source, target, invertible=True)


def aut_of_identity(category):
    """Return the automorphisms of the identity functor.

    Args:
        category (FinCategory):
            The category.

    Returns:
        list of NatTransData:
        The natural automorphisms of the identity, starting with the
        identity transformation.
    """
    identity = identity_functor(category)

    return natural_isomorphisms(identity, identity)


class EquivalenceReport(object):
    """The outcome of checking whether a functor is an equivalence.

    Attributes:
        fully_faithful (bool):
            Whether every hom-map is bijective.

        essentially_surjective (bool):
            Whether every target object is isomorphic to an image.

        witnesses (dict):
            For each target object, a source object and an isomorphism from
            its image.

        counterexample (tuple):
            The first failure found, or ``None``.
    """

    def __init__(self, fully_faithful, essentially_surjective, witnesses,
                 counterexample=None):
        """Initialize the report.

        Args:
            fully_faithful (bool):
                Whether every hom-map is bijective.

            essentially_surjective (bool):
                Whether every target object is isomorphic to an image.

            witnesses (dict):
                The essential-surjectivity witnesses.

            counterexample (tuple, optional):
                The first failure found.
        """
        self.fully_faithful = fully_faithful
        self.essentially_surjective = essentially_surjective
        self.witnesses = witnesses
        self.counterexample = counterexample

    @property
    def is_equivalence(self):
        """Whether the functor is an equivalence.

        Type:
            bool
        """
        return self.fully_faithful and self.essentially_surjective

    def to_dict(self):
        """Return a JSON-compatible summary.

        Returns:
            dict:
            The summary.
        """
        return {
            'fully_faithful': self.fully_faithful,
            'essentially_surjective': self.essentially_surjective,
            'counterexample': (list(self.counterexample)
                               if self.counterexample else None),
            'witnesses': {
                str(z): list(w)
                for z, w in sorted(self.witnesses.items())
            },
        }


def check_equivalence(functor):
    """Check whether a functor is an equivalence of categories.

    Args:
        functor (FunctorData):
            The functor.

    Returns:
        EquivalenceReport:
        The verdict with witnesses or a counterexample.
    """
    c = functor.source
    d = functor.target
    fo = functor.object_map
    fm = functor.morphism_map
    counterexample = None
    fully_faithful = True

    for x in c.object_ids:
        for y in c.object_ids:
            images = [fm[f] for f in c.hom(x, y)]

            if len(set(images)) != len(images):
                seen = {}

                for f in c.hom(x, y):
                    if fm[f] in seen:
                        counterexample = ('not faithful', x, y,
                                          seen[fm[f]], f)
                        break

                    seen[fm[f]] = f

                fully_faithful = False
                break

            missing = sorted(set(d.hom(fo[x], fo[y])) - set(images))

            if missing:
                counterexample = ('not full', x, y, missing[0])
                fully_faithful = False
                break

        if not fully_faithful:
            break

    witnesses = {}
    essentially_surjective = True

    for z in d.object_ids:
        for x in c.object_ids:
            isos = d.isomorphisms(fo[x], z)

            if isos:
                witnesses[z] = (x, isos[0])
                break
        else:
            essentially_surjective = False

            if counterexample is None:
                counterexample = ('not essentially surjective', z)

    return EquivalenceReport(fully_faithful, essentially_surjective,
                             witnesses, counterexample)


def triangle_identities_hold(left, right, unit, counit):
    """Return whether unit and counit satisfy the triangle identities.

    Args:
        left (FunctorData):
            The functor ``F: C -> D``.

        right (FunctorData):
            The functor ``G: D -> C``.

        unit (NatTransData):
            The unit ``id_C => G ∘ F``.

        counit (NatTransData):
            The counit ``F ∘ G => id_D``.

    Returns:
        bool:
        ``True`` if ``εF ∘ Fη = id_F`` and ``Gε ∘ ηG = id_G``.
    """
    c = left.source
    d = left.target

    for x in c.object_ids:
        fx = left.object_map[x]
        composite = d.compose(counit.components[fx],
                              left.morphism_map[unit.components[x]])

        if composite != d.identity(fx):
            return False

    for y in d.object_ids:
        gy = right.object_map[y]
        composite = c.compose(right.morphism_map[counit.components[y]],
                              unit.components[gy])

        if composite != c.identity(gy):
            return False

    return True


def poset_category(elements, le):
    """Return the category of a finite preorder.

    Args:
        elements (list):
            The elements, used as object labels.

        le (callable):
            The relation, as a function of two elements.

    Returns:
        FinCategory:
        The category with one morphism ``a -> b`` whenever ``a <= b``.

    Raises:
        ringrecon.errors.PreconditionError:
            The relation is not reflexive and transitive.
    """
    n = len(elements)
    index = {}
    sources = []
    targets = []

    for i in range(n):
        for j in range(n):
            if le(elements[i], elements[j]):
                index[(i, j)] = len(sources)
                sources.append(i)
                targets.append(j)

    if any((i, i) not in index for i in range(n)):
        raise PreconditionError('The relation is not reflexive.')

    composition = {}

    for (i, j), f in index.items():
        for (j2, k), g in index.items():
            if j == j2:
                if (i, k) not in index:
                    raise PreconditionError('The relation is not transitive.')

                composition[(g, f)] = index[(i, k)]

    return FinCategory(elements, sources, targets,
                       [index[(i, i)] for i in range(n)], composition,
                       name='poset', verify=False)


def one_object_category(table, identity=0):
    """Return the one-object category of a finite monoid or group.

    Args:
        table (list of list of int):
            The multiplication table; ``table[g][f]`` is ``g ∘ f``.

        identity (int, optional):
            The identity element.

    Returns:
        FinCategory:
        The category.
    """
    n = len(table)

    return FinCategory(['*'], [0] * n, [0] * n, [identity],
                       {(g, f): table[g][f]
                        for g in range(n)
                        for f in range(n)},
                       name='one-object')


def relabel(category, seed):
    """Re-index the objects and morphisms of a category at random.

    Args:
        category (FinCategory):
            The category.

        seed (int):
            The seed for the permutations.

    Returns:
        tuple:
        A 3-tuple of the relabeled category and the lists mapping old
        object and morphism ids to new ones. Object labels are replaced by
        their new indices.
    """
    rng = random.Random(seed)
    object_perm = list(category.object_ids)
    morphism_perm = list(category.morphisms)
    rng.shuffle(object_perm)
    rng.shuffle(morphism_perm)

    n = category.num_morphisms
    sources = [None] * n
    targets = [None] * n

    for f in category.morphisms:
        sources[morphism_perm[f]] = object_perm[category.source(f)]
        targets[morphism_perm[f]] = object_perm[category.target(f)]

    identities = [None] * category.num_objects

    for x in category.object_ids:
        identities[object_perm[x]] = morphism_perm[category.identity(x)]

    relabeled = FinCategory(
        objects=['X%d' % i for i in range(category.num_objects)],
        sources=sources,
        targets=targets,
        identities=identities,
        composition={
            (morphism_perm[g], morphism_perm[f]): morphism_perm[h]
            for (g, f), h in category.composition.items()
        },
        name='relabeled',
        verify=False)

    return relabeled, object_perm, morphism_perm
