"""Finite topological spaces and their categorical reconstruction.

A finite space is stored as its set of open sets. Up to homeomorphism,
finite spaces are the same thing as finite preorders (the specialization
order), which is how :py:func:`enumerate_spaces` lists them.

The reconstruction recovers a space X from the category of spaces alone:
its points are the maps from the one-point space, and its open sets are
the preimages of the open point of the Sierpinski space, the unique
two-point space with no nontrivial automorphism.

The module also builds slice categories of finite sets, where the points
of an object are its simple subobjects.
"""

import itertools
import logging
from functools import cached_property

import networkx as nx

from ringrecon.categories import FinCategory, simple_objects, subobjects
from ringrecon.errors import (AxiomError, FalsificationError,
                              PreconditionError)


logger = logging.getLogger(__name__)


class FinTop(object):
    """A topology on the points ``0 .. n-1``.

    Attributes:
        size (int):
            The number of points.

        opens (frozenset of frozenset of int):
            The open sets.

        name (str):
            An optional display name.
    """

    def __init__(self, size, opens, name=None, verify=True):
        """Initialize the space.

        Args:
            size (int):
                The number of points.

            opens (iterable of iterable of int):
                The open sets.

            name (str, optional):
                A display name.

            verify (bool, optional):
                Whether to check the topology axioms.

        Raises:
            ringrecon.errors.AxiomError:
                The sets do not form a topology.
        """
        self.size = size
        self.opens = frozenset(frozenset(u) for u in opens)
        self.name = name

        if verify:
            self.verify()

    def __eq__(self, other):
        return (isinstance(other, FinTop) and
                self.size == other.size and
                self.opens == other.opens)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.size, self.opens))

    def __repr__(self):
        return '<FinTop %s: %r>' % (self.name or self.size,
                                    self.sorted_opens)

    @property
    def points(self):
        """The points.

        Type:
            range
        """
        return range(self.size)

    @cached_property
    def sorted_opens(self):
        """The open sets as sorted lists, in a canonical order.

        Type:
            list of list of int
        """
        return sorted((sorted(u) for u in self.opens),
                      key=lambda u: (len(u), u))

    def verify(self):
        """Check the topology axioms.

        Raises:
            ringrecon.errors.AxiomError:
                A set lies outside the space, or the family misses the
                empty set or the whole space, or it is not closed under
                unions and intersections.
        """
        everything = frozenset(self.points)

        for u in self.sorted_opens:
            if not set(u) <= everything:
                raise AxiomError('opens are subsets of the space', (u,))

        if frozenset() not in self.opens:
            raise AxiomError('the empty set is open')

        if everything not in self.opens:
            raise AxiomError('the whole space is open')

        opens = self.sorted_opens

        for u, v in itertools.combinations(opens, 2):
            if frozenset(u) | frozenset(v) not in self.opens:
                raise AxiomError('opens are closed under union', (u, v))

            if frozenset(u) & frozenset(v) not in self.opens:
                raise AxiomError('opens are closed under intersection',
                                 (u, v))

    def is_open(self, subset):
        """Return whether a set of points is open."""
        return frozenset(subset) in self.opens

    @cached_property
    def minimal_opens(self):
        """The smallest open set containing each point.

        Type:
            list of frozenset of int
        """
        everything = frozenset(self.points)

        return [
            frozenset.intersection(everything,
                                   *[u for u in self.opens if x in u])
            for x in self.points
        ]

    def specialization_graph(self):
        """Return the specialization preorder as a directed graph.

        There is an edge ``x -> y`` when every open set containing x also
        contains y.

        Returns:
            networkx.DiGraph:
            The graph, without self-loops.
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(self.points)
        graph.add_edges_from(
            (x, y)
            for x in self.points
            for y in self.minimal_opens[x]
            if x != y)

        return graph


def from_preorder(size, edges, name=None):
    """Return the space whose opens are the up-sets of a preorder.

    Args:
        size (int):
            The number of points.

        edges (iterable of tuple):
            Pairs ``(x, y)`` with ``x <= y``. The relation must be
            transitive.

        name (str, optional):
            A display name.

    Returns:
        FinTop:
        The space.
    """
    above = [{x} for x in range(size)]

    for x, y in edges:
        above[x].add(y)

    opens = [
        subset
        for k in range(size + 1)
        for subset in itertools.combinations(range(size), k)
        if all(above[x] <= set(subset) for x in subset)
    ]

    return FinTop(size, opens, name=name, verify=False)


def discrete(size):
    """Return the discrete space on a number of points."""
    return FinTop(size,
                  [subset
                   for k in range(size + 1)
                   for subset in itertools.combinations(range(size), k)],
                  name='discrete(%d)' % size, verify=False)


def indiscrete(size):
    """Return the indiscrete space on a number of points."""
    return FinTop(size, [(), tuple(range(size))],
                  name='indiscrete(%d)' % size, verify=False)


def sierpinski():
    """Return the Sierpinski space, with closed point 0 and open point 1."""
    return FinTop(2, [(), (1,), (0, 1)], name='sierpinski', verify=False)


def point():
    """Return the one-point space."""
    return discrete(1)


def is_continuous(space, other, mapping):
    """Return whether a map of points is continuous.

    Args:
        space (FinTop):
            The domain.

        other (FinTop):
            The codomain.

        mapping (tuple of int):
            The image of every point.

    Returns:
        bool:
        ``True`` if the preimage of every open set is open.
    """
    return all(
        space.is_open(x for x in space.points if mapping[x] in u)
        for u in other.opens)


def continuous_maps(space, other):
    """Return every continuous map between two spaces.

    Args:
        space (FinTop):
            The domain.

        other (FinTop):
            The codomain.

    Returns:
        list of tuple of int:
        The maps, in lexicographic order.
    """
    return [
        mapping
        for mapping in itertools.product(other.points, repeat=space.size)
        if is_continuous(space, other, mapping)
    ]


def homeomorphisms(space, other):
    """Return every homeomorphism between two spaces.

    Args:
        space (FinTop):
            The domain.

        other (FinTop):
            The codomain.

    Returns:
        list of tuple of int:
        The homeomorphisms, in lexicographic order.
    """
    if space.size != other.size or len(space.opens) != len(other.opens):
        return []

    return [
        mapping
        for mapping in itertools.permutations(other.points)
        if frozenset(frozenset(mapping[x] for x in u)
                     for u in space.opens) == other.opens
    ]


def automorphisms(space):
    """Return the self-homeomorphisms of a space."""
    return homeomorphisms(space, space)


def is_homeomorphic(space, other):
    """Return whether two spaces are homeomorphic."""
    return nx.is_isomorphic(space.specialization_graph(),
                            other.specialization_graph())


def enumerate_spaces(max_points):
    """Return one space per homeomorphism class, up to a size.

    Every transitive relation on each number of points is turned into a
    space. Specialization graphs are bucketed by their Weisfeiler-Lehman
    hash and compared with an isomorphism test within each bucket.

    Args:
        max_points (int):
            The largest number of points.

    Returns:
        list of FinTop:
        The spaces, ordered by size. The empty space comes first.
    """
    result = []

    for n in range(max_points + 1):
        pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
        buckets = {}
        found = []

        for k in range(len(pairs) + 1):
            for edges in itertools.combinations(pairs, k):
                graph = nx.DiGraph()
                graph.add_nodes_from(range(n))
                graph.add_edges_from(edges)
                closure = nx.transitive_closure(graph, reflexive=None)

                if closure.number_of_edges() != len(edges):
                    continue

                key = nx.weisfeiler_lehman_graph_hash(graph)
                bucket = buckets.setdefault(key, [])

                if any(nx.is_isomorphic(graph, other) for other in bucket):
                    continue

                bucket.append(graph)
                found.append(from_preorder(
                    n, edges, name='T%d.%d' % (n, len(found))))

        logger.debug('%d homeomorphism classes of spaces on %d points',
                     len(found), n)
        result.extend(found)

    return result


def find_sierpinski(spaces):
    """Pick the Sierpinski space out of a list of spaces.

    Args:
        spaces (list of FinTop):
            Spaces including every two-point topology.

    Returns:
        FinTop:
        The only two-point space with no nontrivial automorphism.

    Raises:
        ringrecon.errors.FalsificationError:
            There is not exactly one such space.
    """
    candidates = [
        space
        for space in spaces
        if len(continuous_maps(point(), space)) == 2 and
        len(automorphisms(space)) == 1
    ]

    if len(candidates) != 1:
        raise FalsificationError('sierpinski-is-unique',
                                 '%d two-point spaces are rigid'
                                 % len(candidates),
                                 witness=[s.sorted_opens for s in candidates])

    return candidates[0]


def _recovered_opens(space, sierpinski_space, eta):
    points = continuous_maps(point(), space)

    return points, [
        [i for i, p in enumerate(points) if f[p[0]] == eta]
        for f in continuous_maps(space, sierpinski_space)
    ]


def open_point(sierpinski_space, spaces):
    """Find the point of the Sierpinski space whose preimages are opens.

    A point qualifies when its preimages under maps from every given space
    form a topology and, on the Sierpinski space itself, that topology is
    the original one.

    Args:
        sierpinski_space (FinTop):
            The Sierpinski space.

        spaces (list of FinTop):
            The spaces to test against.

    Returns:
        int:
        The open point.

    Raises:
        ringrecon.errors.FalsificationError:
            Not exactly one point qualifies.
    """
    qualified = []

    for eta in sierpinski_space.points:
        ok = True

        for space in spaces + [sierpinski_space]:
            points, opens = _recovered_opens(space, sierpinski_space, eta)

            try:
                recovered = FinTop(len(points), opens)
            except AxiomError:
                ok = False
                break

            if space is sierpinski_space and recovered != space:
                ok = False

        if ok:
            qualified.append(eta)

    if len(qualified) != 1:
        raise FalsificationError('sierpinski-is-unique',
                                 '%d points of %r qualify as open'
                                 % (len(qualified), sierpinski_space),
                                 witness=qualified)

    return qualified[0]


def recover_topology(space, sierpinski_space, eta):
    """Rebuild a space from maps out of the point and into Sierpinski space.

    Args:
        space (FinTop):
            The space X.

        sierpinski_space (FinTop):
            The Sierpinski space.

        eta (int):
            Its open point.

    Returns:
        FinTop:
        The space whose points are the maps from the one-point space and
        whose opens are the preimages of ``eta``. Point ``i`` is the
        ``i``-th such map in lexicographic order.

    Raises:
        ringrecon.errors.PreconditionError:
            The given space is not Sierpinski space, or ``eta`` is not its
            open point.

        ringrecon.errors.FalsificationError:
            The result is not homeomorphic to X through evaluation.
    """
    if sierpinski_space.size != 2 or len(automorphisms(sierpinski_space)) != 1:
        raise PreconditionError('%r is not the Sierpinski space'
                                % sierpinski_space)

    points, opens = _recovered_opens(space, sierpinski_space, eta)

    try:
        recovered = FinTop(len(points), opens,
                           name='recovered(%s)' % (space.name or space.size))
    except AxiomError as e:
        raise PreconditionError('%r is not the open point: %s' % (eta, e))

    evaluation = tuple(p[0] for p in points)

    if (sorted(evaluation) != list(space.points) or
        evaluation not in homeomorphisms(recovered, space)):
        raise FalsificationError('topology-is-recovered',
                                 'evaluation is not a homeomorphism onto %r'
                                 % space,
                                 witness=space.sorted_opens)

    return recovered


def recover_map(mapping, space, other, sierpinski_space, eta):
    """Return the map between recovered spaces induced by a map.

    Args:
        mapping (tuple of int):
            A continuous map ``g: X -> Y``.

        space (FinTop):
            The space X.

        other (FinTop):
            The space Y.

        sierpinski_space (FinTop):
            The Sierpinski space.

        eta (int):
            Its open point.

    Returns:
        tuple of int:
        The map ``p -> g ∘ p`` on recovered points.

    Raises:
        ringrecon.errors.FalsificationError:
            The induced map is not continuous or does not commute with
            evaluation.
    """
    source = recover_topology(space, sierpinski_space, eta)
    target = recover_topology(other, sierpinski_space, eta)
    source_points = continuous_maps(point(), space)
    target_points = continuous_maps(point(), other)
    index = {p: i for i, p in enumerate(target_points)}
    induced = tuple(index[(mapping[p[0]],)] for p in source_points)

    if not is_continuous(source, target, induced):
        raise FalsificationError('topology-is-recovered',
                                 'the recovered map of %r is not continuous'
                                 % (mapping,),
                                 witness=mapping)

    for i, p in enumerate(source_points):
        if target_points[induced[i]][0] != mapping[p[0]]:
            raise FalsificationError('topology-is-recovered',
                                     'evaluation is not natural',
                                     witness=mapping)

    return induced


class SetSlice(object):
    """The category of finite sets over a fixed finite set.

    Objects are maps ``p: A -> X`` up to isomorphism, represented by the
    sorted tuple of images of ``A = {0 .. k-1}``.

    Attributes:
        base_size (int):
            The size of X.

        objects (list of tuple of int):
            The maps ``p``.

        category (ringrecon.categories.FinCategory):
            The category.

        realization (list of tuple of int):
            The underlying function of every morphism.
    """

    def __init__(self, base_size, objects, category, realization):
        """Initialize the slice.

        Args:
            base_size (int):
                The size of X.

            objects (list of tuple of int):
                The objects.

            category (ringrecon.categories.FinCategory):
                The category.

            realization (list of tuple of int):
                The underlying functions.
        """
        self.base_size = base_size
        self.objects = objects
        self.category = category
        self.realization = realization

    def __repr__(self):
        return '<SetSlice over %d points: %d objects>' % (
            self.base_size, len(self.objects))

    def locate(self, fibers):
        """Return the object whose map is ``fibers``, sorted."""
        return self.objects.index(tuple(sorted(fibers)))


def set_slice_category(base_size, max_size):
    """Build the category of finite sets over a finite set.

    Args:
        base_size (int):
            The size of X.

        max_size (int):
            The largest set A.

    Returns:
        SetSlice:
        The slice category.
    """
    objects = [
        fibers
        for k in range(max_size + 1)
        for fibers in itertools.combinations_with_replacement(
            range(base_size), k)
    ]
    sources = []
    targets = []
    realization = []
    index = {}

    for a, p in enumerate(objects):
        for b, q in enumerate(objects):
            for h in itertools.product(range(len(q)), repeat=len(p)):
                if all(q[h[i]] == p[i] for i in range(len(p))):
                    index[(a, b, h)] = len(sources)
                    sources.append(a)
                    targets.append(b)
                    realization.append(h)

    composition = {}
    outgoing = [[] for _ in objects]

    for m, b in enumerate(sources):
        outgoing[b].append(m)

    for f, hf in enumerate(realization):
        for g in outgoing[targets[f]]:
            hg = realization[g]
            composition[(g, f)] = index[(sources[f], targets[g],
                                         tuple(hg[v] for v in hf))]

    identities = [index[(a, a, tuple(range(len(p))))]
                  for a, p in enumerate(objects)]
    category = FinCategory([repr(p) for p in objects], sources, targets,
                           identities, composition,
                           name='Set/%d' % base_size, verify=False)

    return SetSlice(base_size, objects, category, realization)


def set_slice_points(slice_category, a):
    """Return the points of an object as simple subobjects.

    Args:
        slice_category (SetSlice):
            The slice category.

        a (int):
            The object.

    Returns:
        list of int:
        For each element of the underlying set, in order, the monomorphism
        from a simple object picking it out.

    Raises:
        ringrecon.errors.FalsificationError:
            The simple subobjects are not in bijection with the elements.
    """
    category = slice_category.category
    simple = set(simple_objects(category))
    picked = {}

    for m in subobjects(category, a):
        if category.source(m) in simple:
            element = slice_category.realization[m][0]

            if element in picked:
                raise FalsificationError('set-slice-points',
                                         'two simple subobjects pick out '
                                         'element %d' % element,
                                         witness=(a, element))

            picked[element] = m

    size = len(slice_category.objects[a])

    if sorted(picked) != list(range(size)):
        raise FalsificationError('set-slice-points',
                                 'simple subobjects of %r do not match its '
                                 'elements' % (slice_category.objects[a],),
                                 witness=(a, sorted(picked)))

    return [picked[x] for x in range(size)]


def check_slice_naturality(slice_category):
    """Check that points are natural in the object.

    For every morphism ``h: A -> B`` and element x of A, the point of x
    composed with h is the point of ``h(x)``, up to the isomorphism of
    simple objects.

    Args:
        slice_category (SetSlice):
            The slice category.

    Returns:
        int:
        The number of morphisms checked.

    Raises:
        ringrecon.errors.FalsificationError:
            A square fails.
    """
    category = slice_category.category
    points = [set_slice_points(slice_category, a)
              for a in range(len(slice_category.objects))]

    for h in category.morphisms:
        a = category.source(h)
        b = category.target(h)
        mapping = slice_category.realization[h]

        for x, m in enumerate(points[a]):
            image = category.compose(h, m)

            if slice_category.realization[image] != (mapping[x],):
                raise FalsificationError('set-slice-points',
                                         'points are not natural along %d'
                                         % h,
                                         witness=(h, x))

            n = points[b][mapping[x]]

            if category.source(n) != category.source(image):
                raise FalsificationError('set-slice-points',
                                         'points are not natural along %d'
                                         % h,
                                         witness=(h, x))

    return category.num_morphisms
