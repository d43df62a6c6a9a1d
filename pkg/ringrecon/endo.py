"""Natural endomorphisms of the forgetful functor on module pairs.

The module-pair category over a base ring A has as objects the pairs
``(B, M)`` of an A-algebra B and a B-module M, both within a bound. A
morphism ``(B, M) -> (B', M')`` is an algebra map ``f: B -> B'`` together
with a map ``ψ: M' -> M`` that is B-linear when M' is viewed as a B-module
through f. The module part is contravariant.

A family of additive endomorphisms ``φ_(B, M)`` that commutes with the
module part of every morphism is an element of the ring E. Addition is
pointwise and multiplication is composition. :py:func:`compute_E` solves
for every such family and compares E with A.
"""

import itertools
import logging
from collections import defaultdict, namedtuple
from functools import cached_property

from ringrecon.algebras import build_alg_category
from ringrecon.errors import (BoundError, FalsificationError,
                              PreconditionError)
from ringrecon.modules import (additive_endomorphisms, enumerate_modules,
                               module_homs, module_isomorphism,
                               regular_module, restrict_scalars)
from ringrecon.rings import RingHom, _reindexed_ring, compose_homs


logger = logging.getLogger(__name__)


#: An object of the module-pair category.
PairObject = namedtuple('PairObject', ['algebra', 'module'])


class ModPairCat(object):
    """The category of algebra/module pairs within a bound.

    Morphisms are computed lazily, one hom-set at a time.

    Attributes:
        base (ringrecon.rings.FinRing):
            The base ring A.

        bound (int):
            The bound on algebra and module orders.

        algebras (ringrecon.algebras.TruncatedAlgCat):
            The algebra category over A.

        objects (list of PairObject):
            The pairs, grouped by algebra.
    """

    def __init__(self, base, bound, algebras, modules):
        """Initialize the category.

        Args:
            base (ringrecon.rings.FinRing):
                The base ring.

            bound (int):
                The bound.

            algebras (ringrecon.algebras.TruncatedAlgCat):
                The algebra category.

            modules (list of list of ringrecon.modules.FinModule):
                The modules over each algebra object.
        """
        self.base = base
        self.bound = bound
        self.algebras = algebras
        self.modules = modules
        self.objects = [
            PairObject(x, module)
            for x, found in enumerate(modules)
            for module in found
        ]
        self._homs = {}
        self._restricted = {}

    def __repr__(self):
        return '<ModPairCat over %s, bound %d: %d objects>' % (
            self.base, self.bound, len(self.objects))

    @property
    def num_objects(self):
        """The number of objects.

        Type:
            int
        """
        return len(self.objects)

    def module_of(self, o):
        """Return the module of an object."""
        return self.objects[o].module

    def ring_of(self, o):
        """Return the algebra's ring of an object."""
        return self.algebras.ring_of(self.objects[o].algebra)

    def _restrict(self, module, m):
        key = (id(module), m)

        if key not in self._restricted:
            self._restricted[key] = restrict_scalars(
                module, self.algebras.hom_of(m))

        return self._restricted[key]

    def morphisms(self, source, target):
        """Return the morphisms between two objects.

        Args:
            source (int):
                The source object ``(B, M)``.

            target (int):
                The target object ``(B', M')``.

        Returns:
            list of tuple:
            ``(f, ψ)`` pairs of an algebra morphism id and a module map
            ``M' -> M`` as an image tuple.
        """
        key = (source, target)

        if key not in self._homs:
            x, module = self.objects[source]
            y, other = self.objects[target]
            result = []

            for m in self.algebras.category.hom(x, y):
                for psi in module_homs(self._restrict(other, m), module):
                    result.append((m, psi))

            self._homs[key] = result

        return self._homs[key]

    def identity(self, o):
        """Return the identity morphism of an object."""
        x = self.objects[o].algebra

        return (self.algebras.category.identity(x),
                tuple(self.module_of(o).elements))

    def compose(self, second, first):
        """Return ``second ∘ first``.

        Args:
            second (tuple):
                A morphism ``(g, ψ)`` from the target of ``first``.

            first (tuple):
                A morphism ``(f, φ)``.

        Returns:
            tuple:
            ``(g ∘ f, φ ∘ ψ)``.
        """
        g, psi = second
        f, phi = first

        return (self.algebras.category.compose(g, f),
                tuple(phi[v] for v in psi))

    def regular_object(self, x):
        """Return the object ``(B, B)`` for an algebra object.

        Args:
            x (int):
                The algebra object.

        Returns:
            int:
            The index of the pair whose module is isomorphic to B over
            itself.
        """
        ring = self.algebras.ring_of(x)
        regular = regular_module(ring)

        for o, obj in enumerate(self.objects):
            if (obj.algebra == x and
                module_isomorphism(obj.module, regular) is not None):
                return o

        raise FalsificationError('regular-pair-present',
                                 '(%s, %s) is missing from %r'
                                 % (ring, ring, self),
                                 witness=x)

    def locate(self, ring, structure, module):
        """Find the object isomorphic to a pair.

        Args:
            ring (ringrecon.rings.FinRing):
                The algebra's ring.

            structure (ringrecon.rings.RingHom):
                The structure map from the base.

            module (ringrecon.modules.FinModule):
                A module over ``ring``.

        Returns:
            tuple:
            A 2-tuple of the object and a module isomorphism from
            ``module`` to that object's module, as an image tuple.

        Raises:
            ringrecon.errors.BoundError:
                The algebra or module is larger than the bound.
        """
        if module.order > self.bound:
            raise BoundError('The module %r is larger than the bound %d'
                             % (module, self.bound),
                             required=module.order, bound=self.bound,
                             offender=(ring, module))

        x, sigma = self.algebras.locate(ring, structure)
        transported = restrict_scalars(module, sigma.inverse())

        for o, obj in enumerate(self.objects):
            if obj.algebra != x:
                continue

            iso = module_isomorphism(transported, obj.module)

            if iso is not None:
                return o, iso

        raise FalsificationError('enumeration-is-complete',
                                 'no pair matches (%s, %r)' % (ring, module),
                                 witness=(x, module.order))

    def scalar_family(self, t):
        """Return the family multiplying each module by a base element.

        Args:
            t (int):
                An element of the base ring.

        Returns:
            tuple of tuple of int:
            For each object ``(B, M)``, multiplication by ``s(t)`` on M.
        """
        family = []

        for x, module in self.objects:
            scalar = self.algebras.structure_of(x)(t)
            family.append(tuple(module.act(scalar, v)
                                for v in module.elements))

        return tuple(family)

    def is_natural(self, family):
        """Return the first morphism whose square fails, or ``None``.

        Args:
            family (tuple of tuple of int):
                An endomorphism of every object's module.

        Returns:
            tuple:
            ``(source, target, ψ)`` for the first failing square.
        """
        for source, target, psi in self.constraints:
            phi_source = family[source]
            phi_target = family[target]

            for v in self.module_of(target).elements:
                if phi_source[psi[v]] != psi[phi_target[v]]:
                    return (source, target, psi)

        return None

    @cached_property
    def constraints(self):
        """The distinct module parts of all morphisms.

        Type:
            list of tuple
        """
        result = set()

        for source in range(self.num_objects):
            for target in range(self.num_objects):
                for m, psi in self.morphisms(source, target):
                    result.add((source, target, psi))

        return sorted(result)


def build_modpair_category(base, bound):
    """Build the module-pair category over a base ring.

    Args:
        base (ringrecon.rings.FinRing):
            The ring A.

        bound (int):
            The bound N on algebra and module orders. It must be at least
            ``|A|``.

    Returns:
        ModPairCat:
        The category.

    Raises:
        ringrecon.errors.BoundError:
            The bound is smaller than the base ring.
    """
    algebras = build_alg_category(base, bound)
    modules = [
        enumerate_modules(obj.ring, bound)
        for obj in algebras.objects
    ]
    category = ModPairCat(base, bound, algebras, modules)

    logger.debug('Built %r', category)

    return category


class _Propagator(object):
    """Elementwise constraint propagation for natural families."""

    def __init__(self, pairs):
        self.pairs = pairs
        self.modules = [obj.module for obj in pairs.objects]
        self.by_target = defaultdict(list)
        self.by_source = defaultdict(list)

        for source, target, psi in pairs.constraints:
            entry = (source, target, psi, _preimages(psi))
            self.by_target[target].append(entry)
            self.by_source[source].append(entry)

    def initial(self):
        return [[0] + [None] * (module.order - 1) for module in self.modules]

    def run(self, values, dirty):
        """Propagate until nothing changes. Returns False on a conflict."""
        queue = sorted(set(dirty))
        queued = set(queue)

        def assign(o, x, v):
            current = values[o][x]

            if current is None:
                values[o][x] = v

                if o not in queued:
                    queued.add(o)
                    queue.append(o)

                return True

            return current == v

        while queue:
            o = queue.pop(0)
            queued.discard(o)
            module = self.modules[o]
            known = [x for x in module.elements if values[o][x] is not None]

            for x, y in itertools.product(known, repeat=2):
                if not assign(o, module.add(x, y),
                              module.add(values[o][x], values[o][y])):
                    return False

            for source, target, psi, preimages in self.by_target[o]:
                for v in module.elements:
                    if values[o][v] is not None:
                        if not assign(source, psi[v], psi[values[o][v]]):
                            return False

            for source, target, psi, preimages in self.by_source[o]:
                if preimages is None:
                    continue

                for v in self.modules[target].elements:
                    image = values[o][psi[v]]

                    if image is None:
                        continue

                    if image not in preimages:
                        return False

                    if not assign(target, v, preimages[image]):
                        return False

        return True


def _preimages(psi):
    """Invert an injective map, or return ``None``."""
    if len(set(psi)) != len(psi):
        return None

    return {y: x for x, y in enumerate(psi)}


def _solve(pairs, seeds):
    """Return every natural family extending one of the seeds."""
    propagator = _Propagator(pairs)
    regular = pairs.regular_object(pairs.algebras.initial_object)
    solutions = []

    def search(values, dirty):
        if not propagator.run(values, dirty):
            return

        for o, row in enumerate(values):
            if None in row:
                x = row.index(None)

                for v in pairs.module_of(o).elements:
                    branch = [list(r) for r in values]
                    branch[o][x] = v
                    search(branch, [o])

                return

        solutions.append(tuple(tuple(row) for row in values))

    for seed in seeds:
        values = propagator.initial()
        values[regular] = list(seed)
        search(values, [regular])

    return solutions


class EResult(object):
    """The ring of natural families and its comparison maps.

    Attributes:
        pairs (ModPairCat):
            The module-pair category.

        ring (ringrecon.rings.FinRing):
            The ring E. Element ``i`` is ``families[i]``.

        families (list of tuple):
            The natural families.

        a (ringrecon.rings.RingHom):
            The map ``A -> E`` sending t to its scalar family.

        b (ringrecon.rings.RingHom):
            The map ``E -> A`` evaluating a family at ``1`` in ``(A, A)``.
    """

    def __init__(self, pairs, ring, families, a, b):
        """Initialize the result.

        Args:
            pairs (ModPairCat):
                The category.

            ring (ringrecon.rings.FinRing):
                The ring E.

            families (list of tuple):
                The families.

            a (ringrecon.rings.RingHom):
                The scalar map.

            b (ringrecon.rings.RingHom):
                The evaluation map.
        """
        self.pairs = pairs
        self.ring = ring
        self.families = families
        self.a = a
        self.b = b
        self._index = {family: i for i, family in enumerate(families)}

    def __repr__(self):
        return '<EResult %s over %s>' % (self.ring, self.pairs.base)

    def element_of(self, family):
        """Return the element of E for a family."""
        return self._index[family]


def compute_E(base, bound, pairs=None):
    """Compute the ring of natural families over a base ring.

    Every additive endomorphism of ``(A, A)`` is tried as a seed. Each
    seed is propagated along the morphisms of the module-pair category,
    with branching where propagation stalls. Every family found is then
    verified against all naturality squares.

    Args:
        base (ringrecon.rings.FinRing):
            The ring A.

        bound (int):
            The bound N. It must be at least ``|A|``.

        pairs (ModPairCat, optional):
            A prebuilt module-pair category for the same base and bound.

    Returns:
        EResult:
        The ring E with the maps ``a`` and ``b``.

    Raises:
        ringrecon.errors.BoundError:
            The bound is smaller than the base ring.

        ringrecon.errors.FalsificationError:
            E is not isomorphic to A through ``a`` and ``b``.
    """
    if bound < base.order:
        raise BoundError('The bound %d is smaller than |%s| = %d'
                         % (bound, base, base.order),
                         required=base.order, bound=bound, offender=base)

    if pairs is None:
        pairs = build_modpair_category(base, bound)

    regular = pairs.regular_object(pairs.algebras.initial_object)
    seeds = additive_endomorphisms(pairs.module_of(regular))
    solutions = _solve(pairs, seeds)

    logger.debug('Found %d natural families over %s from %d seeds',
                 len(solutions), base, len(seeds))

    for family in solutions:
        for obj, phi in zip(pairs.objects, family):
            module = obj.module

            for v, w in itertools.product(module.elements, repeat=2):
                if phi[module.add(v, w)] != module.add(phi[v], phi[w]):
                    raise FalsificationError(
                        'endomorphisms-are-scalars',
                        'a solved family is not additive',
                        witness=(obj.algebra, v, w))

        failure = pairs.is_natural(family)

        if failure is not None:
            raise FalsificationError(
                'endomorphisms-are-scalars',
                'a solved family is not natural', witness=failure)

    # The module (A, A) is located up to isomorphism, so evaluation at
    # 1 goes through that isomorphism.
    _, to_regular = pairs.locate(
        base, pairs.algebras.structure_of(pairs.algebras.initial_object),
        regular_module(base))
    from_regular = [None] * len(to_regular)

    for x, y in enumerate(to_regular):
        from_regular[y] = x

    def evaluate(family):
        return from_regular[family[regular][to_regular[base.one]]]

    zero = tuple(tuple(0 for _ in obj.module.elements)
                 for obj in pairs.objects)
    identity = tuple(tuple(obj.module.elements) for obj in pairs.objects)
    families = sorted(set(solutions),
                      key=lambda family: (evaluate(family), family != zero,
                                          family))

    if zero not in families or identity not in families:
        raise FalsificationError('endomorphisms-are-scalars',
                                 'the zero or identity family is missing',
                                 witness=len(families))

    def add(alpha, beta):
        return tuple(
            tuple(obj.module.add(f[v], g[v]) for v in obj.module.elements)
            for obj, f, g in zip(pairs.objects, alpha, beta))

    def mul(alpha, beta):
        return tuple(tuple(f[v] for v in g) for f, g in zip(alpha, beta))

    try:
        ring, index = _reindexed_ring(families, add, mul, identity,
                                      name='E(%s)' % base)
    except KeyError as e:
        raise FalsificationError('endomorphisms-are-scalars',
                                 'natural families are not closed under '
                                 'the ring operations', witness=str(e))

    a = RingHom(base, ring,
                [index.get(pairs.scalar_family(t), -1)
                 for t in base.elements],
                verify=False)
    b = RingHom(ring, base, [evaluate(family) for family in families],
                verify=False)
    result = EResult(pairs, ring, families, a, b)

    for t in base.elements:
        if a(t) < 0 or b(a(t)) != t:
            raise FalsificationError('endomorphisms-are-scalars',
                                     'evaluation does not invert scalars',
                                     witness=t)

    for e in ring.elements:
        if a(b(e)) != e:
            raise FalsificationError('endomorphisms-are-scalars',
                                     'a natural family is not scalar',
                                     witness=families[e])

    a.verify()

    logger.info('E(%s) at bound %d has order %d', base, bound, ring.order)

    return result


def restrict_E(f, family, source, target):
    """Pull a natural family back along a ring map.

    A pair ``(C, M)`` over B is viewed as a pair over A through f, located
    among the A-side objects, and the family's component there is
    transported back to M.

    Args:
        f (ringrecon.rings.RingHom):
            A ring map ``A -> B``.

        family (tuple of tuple of int):
            A natural family over A.

        source (EResult):
            The E-ring over A.

        target (EResult):
            The E-ring over B.

    Returns:
        tuple of tuple of int:
        The family over B.

    Raises:
        ringrecon.errors.BoundError:
            A pair over B does not fit in the A-side bound.

        ringrecon.errors.PreconditionError:
            The map does not match the two E-rings.
    """
    a_pairs = source.pairs
    b_pairs = target.pairs

    if f.source != a_pairs.base or f.target != b_pairs.base:
        raise PreconditionError('%r does not run from %s to %s'
                                % (f, a_pairs.base, b_pairs.base))

    result = []

    for x, module in b_pairs.objects:
        ring = b_pairs.algebras.ring_of(x)
        structure = compose_homs(b_pairs.algebras.structure_of(x), f)

        if ring.order > a_pairs.bound or module.order > a_pairs.bound:
            raise BoundError('The pair (%s, %r) is larger than the bound %d'
                             % (ring, module, a_pairs.bound),
                             required=max(ring.order, module.order),
                             bound=a_pairs.bound,
                             offender=(ring, module))

        o, tau = a_pairs.locate(ring, structure, module)
        component = family[o]
        inverse = [None] * len(tau)

        for v, w in enumerate(tau):
            inverse[w] = v

        result.append(tuple(inverse[component[tau[v]]]
                            for v in module.elements))

    return tuple(result)


def check_restriction(f, source, target):
    """Check that pulling back scalar families agrees with f.

    Args:
        f (ringrecon.rings.RingHom):
            A ring map ``A -> B``.

        source (EResult):
            The E-ring over A.

        target (EResult):
            The E-ring over B.

    Returns:
        ringrecon.rings.RingHom:
        The induced map ``E(A) -> E(B)``.

    Raises:
        ringrecon.errors.FalsificationError:
            Restriction disagrees with f for some element.
    """
    mapping = []

    for e, family in enumerate(source.families):
        restricted = restrict_E(f, family, source, target)
        expected = target.a(f(source.b(e)))

        if target.families[expected] != restricted:
            raise FalsificationError('restriction-is-base-change',
                                     'restriction along %r disagrees with '
                                     'the map itself' % f,
                                     witness=source.b(e))

        mapping.append(expected)

    return RingHom(source.ring, target.ring, mapping)
