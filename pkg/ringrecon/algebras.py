"""Truncated categories of algebras over a finite base ring.

:py:func:`build_alg_category` enumerates every algebra of order at most a
bound ``N`` over a base ring ``R`` (one object per isomorphism class of
algebras, so the same ring can appear once per orbit of structure maps),
together with every algebra homomorphism. Each morphism keeps its ring
map as a realization, which lets the categorical predicates be
cross-checked against ring theory.
"""

import logging
from collections import namedtuple
from functools import cached_property

from ringrecon.categories import (FinCategory, FunctorData, coproduct,
                                  is_connected, is_epi, is_mono,
                                  simple_objects, subobjects)
from ringrecon.cogroups import nil_extension
from ringrecon.errors import (BoundError, FalsificationError,
                              PreconditionError)
from ringrecon.rings import (RingHom, automorphisms, compose_homs,
                             enumerate_homs, enumerate_isomorphisms,
                             enumerate_rings, identity_hom, is_isomorphic,
                             is_ring_epimorphism, maximal_ideals,
                             ring_invariants, tensor)


logger = logging.getLogger(__name__)


#: An object of a truncated algebra category.
AlgObject = namedtuple('AlgObject', ['ring', 'structure', 'label'])

#: A point of an affine scheme, as a simple subobject in the opposite.
Point = namedtuple('Point', ['morphism', 'ideal', 'residue_field'])


class TruncatedAlgCat(object):
    """The category of algebras of order at most N over a base ring.

    Attributes:
        base (ringrecon.rings.FinRing):
            The base ring.

        bound (int):
            The largest algebra order.

        objects (list of AlgObject):
            One object per isomorphism class of algebras.

        category (ringrecon.categories.FinCategory):
            The underlying finite category.

        realization (list of ringrecon.rings.RingHom):
            The ring map of every morphism.

        complete (bool):
            Whether every algebra up to the bound is an object.
    """

    def __init__(self, base, bound, objects, category, realization,
                 complete=True):
        """Initialize the category.

        Args:
            base (ringrecon.rings.FinRing):
                The base ring.

            bound (int):
                The largest algebra order.

            objects (list of AlgObject):
                The objects.

            category (ringrecon.categories.FinCategory):
                The underlying finite category.

            realization (list of ringrecon.rings.RingHom):
                The ring map of every morphism.

            complete (bool, optional):
                Whether every algebra up to the bound is an object.
        """
        self.base = base
        self.bound = bound
        self.objects = objects
        self.category = category
        self.realization = realization
        self.complete = complete
        self._morphism_index = {
            (category.source(m), category.target(m), h.map): m
            for m, h in enumerate(realization)
        }

    def __repr__(self):
        return '<TruncatedAlgCat over %s, bound %d: %d objects>' % (
            self.base, self.bound, len(self.objects))

    def ring_of(self, x):
        """Return the underlying ring of an object."""
        return self.objects[x].ring

    def structure_of(self, x):
        """Return the structure map of an object."""
        return self.objects[x].structure

    def hom_of(self, m):
        """Return the ring map of a morphism."""
        return self.realization[m]

    def morphism_for(self, x, y, ring_map):
        """Return the id of the morphism realized by a ring map.

        Args:
            x (int):
                The source object.

            y (int):
                The target object.

            ring_map (ringrecon.rings.RingHom or tuple):
                The ring map.

        Returns:
            int:
            The morphism id, or ``None`` if the map is not an algebra map.
        """
        mapping = getattr(ring_map, 'map', ring_map)

        return self._morphism_index.get((x, y, tuple(mapping)))

    @cached_property
    def initial_object(self):
        """The object of the base ring itself.

        Type:
            int
        """
        initial = self.category.initial

        if not initial:
            raise FalsificationError('base-is-initial',
                                     'the algebra category has no initial '
                                     'object')

        return initial[0]

    @cached_property
    def terminal_object(self):
        """The object of the zero ring.

        Type:
            int
        """
        return self.category.terminal[0]

    @cached_property
    def opposite_simple_objects(self):
        """The simple objects of the affine opposite.

        Type:
            set of int
        """
        return set(simple_objects(self.category.opposite()))

    def locate(self, ring, structure):
        """Find the object isomorphic to an algebra.

        Args:
            ring (ringrecon.rings.FinRing):
                The algebra's ring.

            structure (ringrecon.rings.RingHom):
                The structure map from the base.

        Returns:
            tuple:
            A 2-tuple of the object and an isomorphism from ``ring`` to its
            ring that is compatible with the structure maps.

        Raises:
            ringrecon.errors.BoundError:
                The algebra is larger than the bound.

            ringrecon.errors.PreconditionError:
                The structure map does not start at the base. Also raised
                when a subcategory has no object for the algebra.

            ringrecon.errors.FalsificationError:
                No object matched, so the enumeration was incomplete.
        """
        if structure.source != self.base or structure.target != ring:
            raise PreconditionError('%r is not a structure map of %s over %s'
                                    % (structure, ring, self.base))

        if ring.order > self.bound:
            raise BoundError('%s has order %d, above the bound %d'
                             % (ring, ring.order, self.bound),
                             required=ring.order, bound=self.bound,
                             offender=ring)

        key = ring_invariants(ring)

        for x, obj in enumerate(self.objects):
            if obj.ring.order != ring.order or \
               ring_invariants(obj.ring) != key:
                continue

            for iso in enumerate_isomorphisms(ring, obj.ring):
                if compose_homs(iso, structure) == obj.structure:
                    return x, iso

        if not self.complete:
            raise PreconditionError('%s is not among the objects of %r'
                                    % (ring, self))

        raise FalsificationError('enumeration-is-complete',
                                 'no object matches %s' % ring,
                                 witness=structure.map)


def build_alg_category(base, bound):
    """Build the category of algebras of order at most a bound.

    Args:
        base (ringrecon.rings.FinRing):
            The base ring R.

        bound (int):
            The bound N. It must be at least ``|R|``.

    Returns:
        TruncatedAlgCat:
        The truncated category.

    Raises:
        ringrecon.errors.BoundError:
            The bound is smaller than the base ring.
    """
    if bound < base.order:
        raise BoundError('The bound %d is smaller than |%s| = %d'
                         % (bound, base, base.order),
                         required=base.order, bound=bound, offender=base)

    objects = []

    for ring in enumerate_rings(bound):
        if ring.order == base.order and is_isomorphic(ring, base):
            ring = base

        group = automorphisms(ring)
        seen = set()
        orbits = []

        for s in enumerate_homs(base, ring):
            if s.map in seen:
                continue

            seen.update(compose_homs(a, s).map for a in group)
            orbits.append(s)

        for i, s in enumerate(orbits):
            label = str(ring)

            if len(orbits) > 1:
                label = '%s[%d]' % (label, i)

            objects.append(AlgObject(ring, s, label))

    logger.debug('Algebras of order at most %d over %s: %d objects',
                 bound, base, len(objects))

    return _assemble(base, bound, objects,
                     'Alg_%s^<=%d' % (base, bound))


def _assemble(base, bound, objects, name, complete=True):
    """Build the full category on a list of algebra objects."""
    ring_homs = {}
    sources = []
    targets = []
    realization = []
    outgoing = [[] for _ in objects]
    index = {}

    for x, ox in enumerate(objects):
        for y, oy in enumerate(objects):
            key = (id(ox.ring), id(oy.ring))

            if key not in ring_homs:
                ring_homs[key] = enumerate_homs(ox.ring, oy.ring)

            for h in ring_homs[key]:
                if compose_homs(h, ox.structure) == oy.structure:
                    m = len(sources)
                    index[(x, y, h.map)] = m
                    sources.append(x)
                    targets.append(y)
                    realization.append(h)
                    outgoing[x].append(m)

    identities = [
        index[(x, x, tuple(range(obj.ring.order)))]
        for x, obj in enumerate(objects)
    ]

    composition = {}

    for f, hf in enumerate(realization):
        y = targets[f]

        for g in outgoing[y]:
            hg = realization[g]
            composite = tuple(hg.map[v] for v in hf.map)
            composition[(g, f)] = index[(sources[f], targets[g], composite)]

    category = FinCategory([obj.label for obj in objects], sources, targets,
                           identities, composition, name=name, verify=False)

    logger.debug('Built %r', category)

    return TruncatedAlgCat(base, bound, objects, category, realization,
                           complete=complete)


def build_full_subcategory(base, algebras):
    """Build the full subcategory on some algebras over a base ring.

    Args:
        base (ringrecon.rings.FinRing):
            The base ring.

        algebras (list of tuple):
            ``(ring, structure)`` for every object, in order.

    Returns:
        TruncatedAlgCat:
        The subcategory. Its bound is the order of its largest algebra.

    Raises:
        ringrecon.errors.PreconditionError:
            A structure map does not run from the base to its ring.
    """
    objects = []

    for ring, structure in algebras:
        if structure.source != base or structure.target != ring:
            raise PreconditionError('%r is not a structure map of %s over %s'
                                    % (structure, ring, base))

        objects.append(AlgObject(ring, structure, str(ring)))

    bound = max(obj.ring.order for obj in objects)

    return _assemble(base, bound, objects, 'Sub_%s' % base, complete=False)


def build_tangent_category(base, modules):
    """Build the full subcategory on the tangent algebras of some modules.

    For every A-module M the subcategory holds the square-zero extension
    ``A ⊕ M`` and its self-fiber-product ``A ⊕ M ⊕ M`` over A, next to A
    itself. It is full inside every truncated category large enough to
    hold these algebras, and it keeps the tangent cogroup of every M
    with its group law, so the base can be recovered from it when the
    modules include a faithful one.

    Args:
        base (ringrecon.rings.FinRing):
            The base ring A.

        modules (list of ringrecon.modules.FinModule):
            The A-modules.

    Returns:
        TruncatedAlgCat:
        The subcategory. Its bound is the order of its largest algebra.

    Raises:
        ringrecon.errors.PreconditionError:
            A module is over another ring.
    """
    objects = [AlgObject(base, identity_hom(base), str(base))]

    for module in modules:
        if module.base != base:
            raise PreconditionError('%r is not a module over %s'
                                    % (module, base))

        cogroup = nil_extension(base, module)
        apex = cogroup.fiber[0]
        structure = cogroup.carrier.structure
        name = module.name or str(module.order)

        objects.append(AlgObject(cogroup.algebra, structure,
                                 '%s+%s' % (base, name)))
        objects.append(AlgObject(
            apex,
            RingHom(base, apex,
                    [cogroup.pair(structure(a), structure(a))
                     for a in base.elements],
                    verify=False),
            '%s+%s^2' % (base, name)))

    bound = max(obj.ring.order for obj in objects)

    logger.debug('Tangent algebras of %d modules over %s: %d objects',
                 len(modules), base, len(objects))

    return _assemble(base, bound, objects, 'Tan_%s' % base, complete=False)


def affine_opposite(algebras):
    """Return the opposite of a truncated algebra category.

    Morphism ids are unchanged. The base ring's object becomes terminal
    and the zero ring becomes initial.

    Args:
        algebras (TruncatedAlgCat):
            The algebra category.

    Returns:
        ringrecon.categories.FinCategory:
        The affine opposite.
    """
    return algebras.category.opposite()


def points(algebras, x):
    """Return the points of an affine scheme as simple subobjects.

    The simple subobjects of ``Spec A`` in the affine opposite are computed
    categorically and their kernels compared with the maximal ideals of A.

    Args:
        algebras (TruncatedAlgCat):
            The algebra category.

        x (int):
            The object A.

    Returns:
        list of Point:
        One point per simple subobject.

    Raises:
        ringrecon.errors.BoundError:
            A residue field of A is larger than the bound.

        ringrecon.errors.FalsificationError:
            The categorical and ideal-theoretic points disagree.
    """
    ring = algebras.ring_of(x)

    if ring.is_zero_ring:
        expected = []
    else:
        expected = maximal_ideals(ring)

    for ideal, field, projection in expected:
        if field.order > algebras.bound:
            raise BoundError('The residue field %s of %s is larger than the '
                             'bound %d' % (field, ring, algebras.bound),
                             required=field.order, bound=algebras.bound,
                             offender=field)

    opposite = affine_opposite(algebras)
    simple = algebras.opposite_simple_objects
    result = []

    for m in subobjects(opposite, x):
        residue = opposite.source(m)

        if residue in simple:
            result.append(Point(m, algebras.hom_of(m).kernel(), residue))

    kernels = sorted(sorted(p.ideal.elements) for p in result)
    maximal = sorted(sorted(ideal.elements) for ideal, _, _ in expected)

    if kernels != maximal:
        raise FalsificationError(
            'points-are-maximal-ideals',
            'simple subobjects of Spec %s do not match its maximal ideals'
            % ring,
            witness={'categorical': kernels, 'maximal': maximal})

    return result


def is_field_object(algebras, x):
    """Return whether an object is a field.

    The ring-theoretic answer is cross-checked against simplicity in the
    affine opposite.

    Args:
        algebras (TruncatedAlgCat):
            The algebra category.

        x (int):
            The object.

    Returns:
        bool:
        ``True`` if the object's ring is a field.

    Raises:
        ringrecon.errors.FalsificationError:
            The two answers disagree.
    """
    ring_answer = algebras.ring_of(x).is_field
    categorical = x in algebras.opposite_simple_objects

    if ring_answer != categorical:
        raise FalsificationError(
            'simple-objects-are-fields',
            '%s is%s a field but its spectrum is%s simple'
            % (algebras.ring_of(x), '' if ring_answer else ' not',
               '' if categorical else ' not'),
            witness=x)

    return ring_answer


def is_connected_object(algebras, x):
    """Return whether the spectrum of an object is connected.

    The categorical answer is cross-checked against the idempotents of the
    ring.

    Args:
        algebras (TruncatedAlgCat):
            The algebra category.

        x (int):
            The object.

    Returns:
        bool:
        ``True`` if ``Spec A`` is connected.

    Raises:
        ringrecon.errors.FalsificationError:
            The two answers disagree.
    """
    ring = algebras.ring_of(x)
    ring_answer = not ring.is_zero_ring and len(ring.idempotents) == 2
    categorical = is_connected(affine_opposite(algebras), x)

    if ring_answer != categorical:
        raise FalsificationError(
            'connected-iff-no-idempotents',
            'connectedness of Spec %s disagrees with its idempotents' % ring,
            witness=x)

    return categorical


def coproduct_is_tensor(algebras, x, y):
    """Cross-check a categorical coproduct against the tensor product.

    Args:
        algebras (TruncatedAlgCat):
            The algebra category.

        x (int):
            The first object.

        y (int):
            The second object.

    Returns:
        bool:
        ``True`` if the tensor product fits in the bound (and then matches
        the coproduct), ``False`` if it is larger than the bound, in which
        case nothing is claimed.

    Raises:
        ringrecon.errors.FalsificationError:
            The tensor product fits in the bound but the coproduct is
            missing or differs from it.
    """
    ring, i1, i2 = tensor(algebras.base, algebras.structure_of(x),
                          algebras.structure_of(y))

    if ring.order > algebras.bound:
        return False

    found = coproduct(algebras.category, x, y)

    if found is None or not is_isomorphic(algebras.ring_of(found[0]), ring):
        raise FalsificationError(
            'coproduct-is-tensor',
            'the coproduct of %s and %s is not their tensor product'
            % (algebras.objects[x].label, algebras.objects[y].label),
            witness=(x, y))

    return True


def epi_mono_mismatches(algebras):
    """List morphisms whose categorical and ring-theoretic types disagree.

    For every morphism, monomorphy in the affine opposite is compared with
    the tensor-collapse epimorphism test, and epimorphy in the affine
    opposite with injectivity.

    Args:
        algebras (TruncatedAlgCat):
            The algebra category.

    Returns:
        list of tuple:
        ``(morphism, kind)`` pairs, where ``kind`` is ``'epi'`` or
        ``'mono'``.
    """
    opposite = affine_opposite(algebras)
    mismatches = []

    for m in opposite.morphisms:
        ring_map = algebras.hom_of(m)

        if is_mono(opposite, m) != is_ring_epimorphism(ring_map):
            mismatches.append((m, 'epi'))

        if is_epi(opposite, m) != ring_map.is_injective:
            mismatches.append((m, 'mono'))

    return mismatches


def change_of_base(algebras, other, iso):
    """Return the equivalence induced by an isomorphism of base rings.

    An R-algebra ``(B, s)`` is sent to the R'-algebra ``(B, s ∘ f⁻¹)``,
    located in the other category.

    Args:
        algebras (TruncatedAlgCat):
            The category over R.

        other (TruncatedAlgCat):
            The category over R'.

        iso (ringrecon.rings.RingHom):
            An isomorphism ``f: R -> R'``.

    Returns:
        ringrecon.categories.FunctorData:
        The change-of-base functor.

    Raises:
        ringrecon.errors.PreconditionError:
            The map is not an isomorphism between the base rings.
    """
    if (iso.source != algebras.base or iso.target != other.base or
        not iso.is_isomorphism):
        raise PreconditionError('%r is not an isomorphism %s -> %s'
                                % (iso, algebras.base, other.base))

    inverse = iso.inverse()
    object_map = []
    transports = []

    for obj in algebras.objects:
        y, sigma = other.locate(obj.ring, compose_homs(obj.structure,
                                                       inverse))
        object_map.append(y)
        transports.append(sigma)

    morphism_map = []
    category = algebras.category

    for m, h in enumerate(algebras.realization):
        x = category.source(m)
        y = category.target(m)
        sx = transports[x]
        sy = transports[y]
        inverse_x = [None] * sx.target.order

        for a, b in enumerate(sx.map):
            inverse_x[b] = a

        mapping = tuple(sy.map[h.map[a]] for a in inverse_x)
        morphism_map.append(other.morphism_for(object_map[x], object_map[y],
                                               mapping))

    return FunctorData(category, other.category, object_map, morphism_map,
                       verify=False)
