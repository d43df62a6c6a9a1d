"""Finite abelian groups given by tables, and integer relation lattices.

Rings and modules in ringrecon store their additive groups as explicit
tables. The helpers here give those tables coordinates: a generating set
with a triangular relation basis (:py:class:`AbelianPresentation`), and a
canonical form for quotients of free abelian groups computed through the
Hermite normal form (:py:class:`RelationLattice`).
"""

import itertools
import logging
from math import gcd as _gcd

from sympy import Matrix, factorint
from sympy.matrices.normalforms import hermite_normal_form
from sympy.utilities.iterables import partitions

from ringrecon.errors import PreconditionError, RingReconError


logger = logging.getLogger(__name__)


def additive_orders(add_table, zero=0):
    """Return the additive order of every element of a group table.

    Args:
        add_table (list of list of int):
            The addition table.

        zero (int, optional):
            The identity element.

    Returns:
        list of int:
        The order of each element, by index.
    """
    orders = []

    for x in range(len(add_table)):
        k = 1
        y = x

        while y != zero:
            y = add_table[y][x]
            k += 1

        orders.append(k)

    return orders


def abelian_group_types(n):
    """Return every abelian group type of order n.

    Each type is given by its elementary divisors (prime powers), sorted
    in decreasing order. The trivial group has the empty type.

    Args:
        n (int):
            The group order.

    Returns:
        list of tuple of int:
        The group types, in a stable order.

    Raises:
        ringrecon.errors.PreconditionError:
            ``n`` was not positive.
    """
    if n < 1:
        raise PreconditionError('group order must be positive, not %r' % n)

    per_prime = []

    for p, k in sorted(factorint(n).items()):
        choices = []

        for part in partitions(k):
            exponents = sorted(
                itertools.chain.from_iterable(
                    [size] * count
                    for size, count in part.items()),
                reverse=True)
            choices.append(tuple(p ** e for e in exponents))

        choices.sort(reverse=True)
        per_prime.append(choices)

    return [
        tuple(sorted(itertools.chain.from_iterable(combo), reverse=True))
        for combo in itertools.product(*per_prime)
    ]


class CyclicProduct(object):
    """The group Z/d_1 × ... × Z/d_r with mixed-radix element indices.

    Element indices enumerate coordinate tuples in lexicographic order, so
    index 0 is the zero tuple.

    Attributes:
        orders (tuple of int):
            The cyclic factor orders.

        size (int):
            The group order.

        elements (list of tuple of int):
            The coordinate tuples, in index order.
    """

    def __init__(self, orders):
        """Initialize the group.

        Args:
            orders (tuple of int):
                The cyclic factor orders.
        """
        self.orders = tuple(orders)
        self.size = 1
        self._strides = []

        for d in reversed(self.orders):
            self._strides.insert(0, self.size)
            self.size *= d

        self.elements = list(itertools.product(
            *[range(d) for d in self.orders]))

    def index(self, coords):
        """Return the index of a coordinate tuple, reducing each entry.

        Args:
            coords (tuple of int):
                The coordinates.

        Returns:
            int:
            The element index.
        """
        return sum((c % d) * s
                   for c, d, s in zip(coords, self.orders, self._strides))

    def coords(self, x):
        """Return the coordinate tuple of an element index.

        Args:
            x (int):
                The element index.

        Returns:
            tuple of int:
            The coordinates.
        """
        return self.elements[x]

    def add(self, x, y):
        """Return the sum of two elements given as coordinate tuples.

        Args:
            x (tuple of int):
                The first summand.

            y (tuple of int):
                The second summand.

        Returns:
            tuple of int:
            The reduced sum.
        """
        return tuple((a + b) % d for a, b, d in zip(x, y, self.orders))

    def scale(self, k, x):
        """Return ``k·x`` for a coordinate tuple.

        Args:
            k (int):
                The integer scalar.

            x (tuple of int):
                The element.

        Returns:
            tuple of int:
            The reduced multiple.
        """
        return tuple((k * a) % d for a, d in zip(x, self.orders))

    def element_order(self, x):
        """Return the additive order of a coordinate tuple.

        Args:
            x (tuple of int):
                The element.

        Returns:
            int:
            The order.
        """
        order = 1

        for a, d in zip(x, self.orders):
            if a:
                k = d // _gcd(a, d)
                order = order * k // _gcd(order, k)

        return order

    def add_table(self):
        """Return the addition table on element indices.

        Returns:
            list of list of int:
            The addition table.
        """
        return [
            [self.index(self.add(x, y)) for y in self.elements]
            for x in self.elements
        ]


def cyclic_product(orders):
    """Return the group Z/d_1 × ... × Z/d_r.

    Args:
        orders (tuple of int):
            The cyclic factor orders.

    Returns:
        CyclicProduct:
        The group.
    """
    return CyclicProduct(orders)


class AbelianPresentation(object):
    """Coordinates on a finite abelian group given by its addition table.

    Generators are chosen greedily (preferring any requested ones first,
    then elements of largest order). If ``k_i`` is the least positive
    multiple of the i-th generator lying in the span of the earlier ones,
    every element has unique coordinates ``c`` with ``0 <= c_i < k_i``,
    and the relations ``k_i e_i - coords(k_i g_i)`` form a basis of the
    relation lattice.

    Attributes:
        generators (list of int):
            The chosen generators.

        steps (list of int):
            The values ``k_i``.

        relations (list of tuple of int):
            A basis of the relation lattice, one vector per generator.
    """

    def __init__(self, add_table, zero=0, first=()):
        """Initialize the presentation.

        Args:
            add_table (list of list of int):
                The group's addition table.

            zero (int, optional):
                The identity element.

            first (tuple of int, optional):
                Elements to use as the first generators, when they are not
                already in the span of earlier ones.
        """
        self.add_table = add_table
        self.zero = zero
        self.size = len(add_table)

        orders = additive_orders(add_table, zero)
        candidates = list(first) + sorted(range(self.size),
                                          key=lambda x: (-orders[x], x))

        self.generators = []
        self.steps = []
        partial = {zero: ()}

        for g in candidates:
            if len(partial) == self.size:
                break

            if g in partial:
                continue

            multiples = [zero]

            for i in range(1, orders[g] + 1):
                multiples.append(add_table[multiples[-1]][g])

            k = next(i for i in range(1, orders[g] + 1)
                     if multiples[i] in partial)

            extended = {}

            for s, c in partial.items():
                for i in range(k):
                    extended[add_table[s][multiples[i]]] = c + (i,)

            self.generators.append(g)
            self.steps.append(k)
            partial = extended

        rank = len(self.generators)
        self.rank = rank
        self._coords = [None] * self.size

        for x, c in partial.items():
            self._coords[x] = c + (0,) * (rank - len(c))

        self.relations = []

        for i, g in enumerate(self.generators):
            y = zero

            for _ in range(self.steps[i]):
                y = add_table[y][g]

            vector = [-c for c in self._coords[y]]
            vector[i] += self.steps[i]
            self.relations.append(tuple(vector))

        self._gen_multiples = []

        for g in self.generators:
            orders_g = orders[g]
            multiples = [zero]

            for _ in range(1, orders_g):
                multiples.append(add_table[multiples[-1]][g])

            self._gen_multiples.append(multiples)

        logger.debug('Presented group of order %d with %d generators',
                     self.size, rank)

    def coords(self, x):
        """Return the canonical coordinates of an element.

        Args:
            x (int):
                The element.

        Returns:
            tuple of int:
            The coordinates.
        """
        return self._coords[x]

    def element(self, vector):
        """Return the element with the given (not necessarily reduced) vector.

        Args:
            vector (tuple of int):
                Integer coefficients on the generators.

        Returns:
            int:
            The element ``sum(v_i * g_i)``.
        """
        x = self.zero

        for v, multiples in zip(vector, self._gen_multiples):
            x = self.add_table[x][multiples[v % len(multiples)]]

        return x


class RelationLattice(object):
    """A full-rank sublattice K of Z^n, used to compute in Z^n / K.

    The lattice is put in Hermite normal form: an upper triangular basis W
    with positive diagonal, whose columns span K. Every class of Z^n / K
    then has a unique representative ``v`` with ``0 <= v_i < W[i][i]``.

    Attributes:
        rank (int):
            The ambient rank n.

        diagonal (tuple of int):
            The diagonal of the normal form.

        order (int):
            The order of the quotient group.
    """

    def __init__(self, rank, relations):
        """Initialize the lattice.

        Args:
            rank (int):
                The ambient rank.

            relations (list of tuple of int):
                Spanning vectors of the lattice.

        Raises:
            ringrecon.errors.RingReconError:
                The relations did not span a full-rank lattice.
        """
        self.rank = rank

        if rank == 0:
            self._columns = []
            self.diagonal = ()
            self.order = 1
            return

        relations = [tuple(r) for r in relations if any(r)]

        if not relations:
            raise RingReconError('The relation lattice is not of full rank.')

        matrix = Matrix(rank, len(relations),
                        lambda i, j: relations[j][i])
        normal = hermite_normal_form(matrix)

        if normal.shape != (rank, rank):
            raise RingReconError(
                'The relation lattice is not of full rank (normal form has '
                'shape %r).' % (normal.shape,))

        columns = [
            tuple(int(normal[i, j]) for i in range(rank))
            for j in range(rank)
        ]

        for j, column in enumerate(columns):
            if column[j] <= 0 or any(column[i] for i in range(j + 1, rank)):
                raise RingReconError(
                    'Unexpected Hermite normal form: %r' % (normal,))

        self._columns = columns
        self.diagonal = tuple(column[j] for j, column in enumerate(columns))
        self.order = 1

        for d in self.diagonal:
            self.order *= d

    def reduce(self, vector):
        """Return the canonical representative of a vector's class.

        Args:
            vector (tuple of int):
                A vector of Z^n.

        Returns:
            tuple of int:
            The reduced vector.
        """
        v = list(vector)

        for i in range(self.rank - 1, -1, -1):
            q = v[i] // self.diagonal[i]

            if q:
                column = self._columns[i]

                for r in range(i + 1):
                    v[r] -= q * column[r]

        return tuple(v)

    def representatives(self):
        """Return all canonical representatives in lexicographic order.

        The zero vector comes first.

        Returns:
            list of tuple of int:
            The representatives.
        """
        return list(itertools.product(*[range(d) for d in self.diagonal]))
