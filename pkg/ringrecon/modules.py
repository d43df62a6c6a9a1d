"""Finite modules over finite commutative rings.

A :py:class:`FinModule` stores its additive group as a table and the ring
action as a table indexed by ``(ring element, module element)``. Module
elements are ``0 .. n-1`` with ``0`` the zero vector.
"""

import itertools
import logging
from collections import defaultdict
from functools import cached_property

from ringrecon.abelian import (AbelianPresentation, abelian_group_types,
                               additive_orders, cyclic_product)
from ringrecon.errors import AxiomError, PreconditionError


logger = logging.getLogger(__name__)


class FinModule(object):
    """A finite module over a finite commutative ring.

    Attributes:
        base (ringrecon.rings.FinRing):
            The ring acting on the module.

        add_table (tuple of tuple of int):
            The addition table.

        action (tuple of tuple of int):
            ``action[a][m]`` is ``a·m``.

        order (int):
            The number of elements.

        name (str):
            An optional display name.
    """

    def __init__(self, base, add_table, action, name=None, verify=True):
        """Initialize the module.

        Args:
            base (ringrecon.rings.FinRing):
                The ring.

            add_table (list of list of int):
                The addition table.

            action (list of list of int):
                The action table.

            name (str, optional):
                A display name.

            verify (bool, optional):
                Whether to check the module axioms.

        Raises:
            ringrecon.errors.AxiomError:
                The tables do not form a module.
        """
        self.base = base
        self.add_table = tuple(tuple(row) for row in add_table)
        self.action = tuple(tuple(row) for row in action)
        self.order = len(self.add_table)
        self.name = name

        if verify:
            self.verify()

    def __repr__(self):
        return '<FinModule %s over %s>' % (self.name or self.order,
                                           self.base)

    def __eq__(self, other):
        return (isinstance(other, FinModule) and
                self.add_table == other.add_table and
                self.action == other.action and
                self.base == other.base)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.add_table, self.action))

    @property
    def elements(self):
        """The elements of the module.

        Type:
            range
        """
        return range(self.order)

    def add(self, x, y):
        """Return ``x + y``."""
        return self.add_table[x][y]

    def act(self, a, x):
        """Return ``a·x``."""
        return self.action[a][x]

    def neg(self, x):
        """Return ``-x``."""
        return self._neg_table[x]

    @cached_property
    def _neg_table(self):
        return tuple(row.index(0) for row in self.add_table)

    @cached_property
    def presentation(self):
        """Coordinates on the additive group.

        Type:
            ringrecon.abelian.AbelianPresentation
        """
        return AbelianPresentation(self.add_table)

    @cached_property
    def additive_orders(self):
        """The additive order of every element.

        Type:
            tuple of int
        """
        return tuple(additive_orders(self.add_table))

    def verify(self):
        """Check the module axioms over every pair and triple.

        Raises:
            ringrecon.errors.AxiomError:
                An axiom failed, with the first failing tuple as witness.
        """
        ring = self.base
        add = self.add_table
        act = self.action
        elements = self.elements

        if len(act) != ring.order or any(len(row) != self.order
                                         for row in act):
            raise AxiomError('action table has the right shape')

        for x in elements:
            if add[0][x] != x:
                raise AxiomError('zero is an additive identity', (x,))

            if 0 not in add[x]:
                raise AxiomError('additive inverses exist', (x,))

            if act[ring.one][x] != x:
                raise AxiomError('one acts as the identity', (x,))

            for y in elements:
                if add[x][y] != add[y][x]:
                    raise AxiomError('addition is commutative', (x, y))

                for z in elements:
                    if add[add[x][y]][z] != add[x][add[y][z]]:
                        raise AxiomError('addition is associative',
                                         (x, y, z))

        for a in ring.elements:
            for b in ring.elements:
                ab = ring.mul(a, b)
                a_plus_b = ring.add(a, b)

                for x in elements:
                    if act[ab][x] != act[a][act[b][x]]:
                        raise AxiomError('action is associative', (a, b, x))

                    if act[a_plus_b][x] != add[act[a][x]][act[b][x]]:
                        raise AxiomError('action distributes over ring '
                                         'addition', (a, b, x))

            for x in elements:
                for y in elements:
                    if act[a][add[x][y]] != add[act[a][x]][act[a][y]]:
                        raise AxiomError('action distributes over module '
                                         'addition', (a, x, y))


def zero_module(ring):
    """Return the zero module over a ring."""
    return FinModule(ring, [[0]], [[0] for _ in ring.elements], name='0',
                     verify=False)


def regular_module(ring):
    """Return a ring as a module over itself."""
    return FinModule(ring, ring.add_table, ring.mul_table, name=str(ring),
                     verify=False)


def restrict_scalars(module, f):
    """Restrict a module along a ring map.

    Args:
        module (FinModule):
            A module over the target of ``f``.

        f (ringrecon.rings.RingHom):
            A map ``A -> B``.

    Returns:
        FinModule:
        The same group, with ``a`` acting as ``f(a)``.
    """
    if f.target != module.base:
        raise PreconditionError('%r is not a module over the target of %r'
                                % (module, f))

    return FinModule(f.source, module.add_table,
                     [module.action[f(a)] for a in f.source.elements],
                     name=module.name, verify=False)


def _search_linear_maps(source, target, linear=True, bijective=False):
    """Enumerate additive (and optionally linear) maps between modules.

    Images of the source's additive generators are chosen in turn. The
    relation of each generator is checked when it is assigned, and each
    scalar condition ``φ(a·g) = a·φ(g)`` as soon as every generator it
    involves has an image.
    """
    if bijective and source.order != target.order:
        return

    presentation = source.presentation
    gens = presentation.generators
    rank = len(gens)

    if rank == 0:
        yield (0,)
        return

    checks = defaultdict(list)

    if linear:
        scalars = [
            a
            for a in source.base.presentation.generators
            if a != source.base.one
        ]

        for a in scalars:
            for i, g in enumerate(gens):
                coords = presentation.coords(source.act(a, g))
                ready = max([i] + [k for k, c in enumerate(coords) if c])
                checks[ready].append((a, i, coords))

    target_orders = target.additive_orders

    def multiple(k, y):
        result = 0

        for _ in range(k % target_orders[y]):
            result = target.add(result, y)

        return result

    def combine(images, coords):
        y = 0

        for c, image in zip(coords, images):
            if c:
                y = target.add(y, multiple(c, image))

        return y

    images = [None] * rank

    def extend(level):
        if level == rank:
            mapping = tuple(combine(images, presentation.coords(x))
                            for x in source.elements)

            if not bijective or len(set(mapping)) == target.order:
                yield mapping

            return

        for y in target.elements:
            images[level] = y

            if combine(images[:level + 1],
                       presentation.relations[level]) != 0:
                continue

            if all(combine(images, coords) == target.act(a, images[i])
                   for a, i, coords in checks[level]):
                yield from extend(level + 1)

        images[level] = None

    yield from extend(0)


def module_homs(source, target):
    """Return every module homomorphism between two modules.

    Args:
        source (FinModule):
            The domain.

        target (FinModule):
            The codomain, over the same ring.

    Returns:
        list of tuple of int:
        The maps, as image tuples, in increasing order.

    Raises:
        ringrecon.errors.PreconditionError:
            The modules are over different rings.
    """
    if source.base != target.base:
        raise PreconditionError('%r and %r are over different rings'
                                % (source, target))

    return sorted(set(_search_linear_maps(source, target)))


def module_isomorphism(source, target):
    """Return an isomorphism between two modules, if there is one.

    Args:
        source (FinModule):
            The first module.

        target (FinModule):
            The second module.

    Returns:
        tuple of int:
        The isomorphism as an image tuple, or ``None``.
    """
    if source.base != target.base or source.order != target.order:
        return None

    if _module_invariants(source) != _module_invariants(target):
        return None

    for mapping in _search_linear_maps(source, target, bijective=True):
        return mapping

    return None


def additive_endomorphisms(module):
    """Return every endomorphism of a module's additive group.

    Args:
        module (FinModule):
            The module.

    Returns:
        list of tuple of int:
        The endomorphisms, as image tuples, in increasing order.
    """
    return sorted(set(_search_linear_maps(module, module, linear=False)))


def _module_invariants(module):
    ring = module.base

    return (
        module.order,
        tuple(sorted(module.additive_orders)),
        tuple(
            (a, module.action[a].count(0), len(set(module.action[a])))
            for a in ring.elements
        ),
    )


def _group_endomorphisms(group):
    """Return the endomorphisms of a cyclic product as basis images."""
    r = len(group.orders)
    options = [
        [x for x in group.elements if d % group.element_order(x) == 0]
        for d in group.orders
    ]

    return list(itertools.product(*options)) if r else [()]


def _apply(group, endo, x):
    total = (0,) * len(group.orders)

    for c, image in zip(x, endo):
        if c:
            total = group.add(total, group.scale(c, image))

    return total


def _module_structures(ring, orders):
    """Yield every module structure of a ring on a cyclic product.

    A structure is a ring map into the endomorphisms of the group,
    determined by the images of the ring's additive generators, with ``1``
    acting as the identity.
    """
    group = cyclic_product(orders)
    r = len(orders)
    identity = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    endos = _group_endomorphisms(group)
    presentation = ring.presentation
    gens = presentation.generators
    rank = len(gens)

    def combination(chosen, coords):
        result = [(0,) * r for _ in range(r)]

        for c, endo in zip(coords, chosen):
            if c:
                for j in range(r):
                    result[j] = group.add(result[j], group.scale(c, endo[j]))

        return tuple(result)

    def compose(s, t):
        return tuple(_apply(group, s, t[j]) for j in range(r))

    zero_endo = tuple((0,) * r for _ in range(r))
    checks = defaultdict(list)

    for a in range(rank):
        for b in range(a, rank):
            coords = presentation.coords(ring.mul(gens[a], gens[b]))
            ready = max([a, b] + [i for i, c in enumerate(coords) if c])
            checks[ready].append((a, b, coords))

    chosen = [None] * rank

    def extend(level):
        if level == rank:
            yield tuple(chosen)
            return

        options = [identity] if level == 0 else endos

        for endo in options:
            chosen[level] = endo

            if combination(chosen[:level + 1],
                           presentation.relations[level]) != zero_endo:
                continue

            if all(combination(chosen, coords) ==
                   compose(chosen[a], chosen[b])
                   for a, b, coords in checks[level]):
                yield from extend(level + 1)

        chosen[level] = None

    if ring.is_zero_ring:
        if r == 0:
            yield group, ()

        return

    for structure in extend(0):
        yield group, tuple(
            combination(structure, presentation.coords(a))
            for a in ring.elements)


def enumerate_modules(ring, max_order):
    """Return one module per isomorphism class, up to a given order.

    Args:
        ring (ringrecon.rings.FinRing):
            The ring.

        max_order (int):
            The largest module order.

    Returns:
        list of FinModule:
        The representatives, ordered by module order. The zero module
        comes first.
    """
    result = []

    for n in range(1, max_order + 1):
        for orders in abelian_group_types(n):
            found = []

            for group, action_endos in _module_structures(ring, orders):
                add_table = group.add_table()

                if n == 1:
                    action = [[0] for _ in ring.elements]
                else:
                    action = [
                        [group.index(_apply(group, endo, x))
                         for x in group.elements]
                        for endo in action_endos
                    ]

                module = FinModule(ring, add_table, action, verify=False)

                if not any(module_isomorphism(module, other) is not None
                           for other in found):
                    found.append(module)

            for i, module in enumerate(found):
                module.name = 'M%d.%d' % (n, len(result) + i)

            result.extend(found)

    if result:
        result[0].name = '0'

    logger.debug('Enumerated %d modules of order at most %d over %s',
                 len(result), max_order, ring)

    return result
