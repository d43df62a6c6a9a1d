"""Finite commutative unital rings given by explicit tables.

Elements of a :py:class:`FinRing` are the integers ``0 .. n-1``, with ``0``
always the zero of the ring. Everything else in ringrecon (algebra
categories, cogroups, module categories) is built on the constructions in
this module, which are all exact and independent of any truncation bound.
"""

import itertools
import logging
from collections import defaultdict
from functools import cached_property

from sympy import factorint

from ringrecon.abelian import (AbelianPresentation, RelationLattice,
                               abelian_group_types, additive_orders,
                               cyclic_product)
from ringrecon.config import get_setting
from ringrecon.errors import (AxiomError, MalformedDataError,
                              PreconditionError)


logger = logging.getLogger(__name__)


class FinRing(object):
    """A finite commutative ring with identity.

    Attributes:
        add_table (tuple of tuple of int):
            The addition table.

        mul_table (tuple of tuple of int):
            The multiplication table.

        one (int):
            The multiplicative identity.

        zero (int):
            The additive identity. This is always ``0``.

        order (int):
            The number of elements.

        name (str):
            An optional display name. This does not take part in equality.
    """

    zero = 0

    def __init__(self, add_table, mul_table, one, name=None, verify=True):
        """Initialize the ring.

        Args:
            add_table (list of list of int):
                The addition table.

            mul_table (list of list of int):
                The multiplication table.

            one (int):
                The multiplicative identity.

            name (str, optional):
                A display name.

            verify (bool, optional):
                Whether to run the full axiom suite.

        Raises:
            ringrecon.errors.AxiomError:
                The tables do not form a commutative unital ring.
        """
        self.add_table = tuple(tuple(row) for row in add_table)
        self.mul_table = tuple(tuple(row) for row in mul_table)
        self.one = one
        self.order = len(self.add_table)
        self.name = name

        if verify:
            self.verify()

    @classmethod
    def from_tables(cls, add_table, mul_table, one, name=None):
        """Build a ring from untrusted tables.

        The shape of the tables is validated before the axioms are checked.

        Args:
            add_table (list of list of int):
                The addition table.

            mul_table (list of list of int):
                The multiplication table.

            one (int):
                The multiplicative identity.

            name (str, optional):
                A display name.

        Returns:
            FinRing:
            The verified ring.

        Raises:
            ringrecon.errors.MalformedDataError:
                The tables have the wrong shape or out-of-range entries.

            ringrecon.errors.AxiomError:
                The tables do not satisfy the ring axioms.
        """
        n = len(add_table)

        if n == 0:
            raise MalformedDataError('a ring needs at least one element',
                                     '$.add')

        for key, table in (('add', add_table), ('mul', mul_table)):
            if len(table) != n:
                raise MalformedDataError('expected %d rows' % n, '$.%s' % key)

            for i, row in enumerate(table):
                if len(row) != n:
                    raise MalformedDataError('expected %d entries' % n,
                                             '$.%s[%d]' % (key, i))

                for j, value in enumerate(row):
                    if (not isinstance(value, int) or
                        isinstance(value, bool) or
                        not 0 <= value < n):
                        raise MalformedDataError(
                            'element %r out of range' % (value,),
                            '$.%s[%d][%d]' % (key, i, j))

        if not isinstance(one, int) or not 0 <= one < n:
            raise MalformedDataError('element %r out of range' % (one,),
                                     '$.one')

        return cls(add_table, mul_table, one, name=name)

    def __eq__(self, other):
        return (isinstance(other, FinRing) and
                self.one == other.one and
                self.add_table == other.add_table and
                self.mul_table == other.mul_table)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.order, self.one, self.mul_table))

    def __repr__(self):
        if self.name:
            return '<FinRing %s>' % self.name

        return '<FinRing of order %d>' % self.order

    def __str__(self):
        return self.name or 'ring of order %d' % self.order

    @property
    def elements(self):
        """The elements of the ring.

        Type:
            range
        """
        return range(self.order)

    def add(self, x, y):
        """Return ``x + y``."""
        return self.add_table[x][y]

    def mul(self, x, y):
        """Return ``x · y``."""
        return self.mul_table[x][y]

    def neg(self, x):
        """Return ``-x``."""
        return self._neg_table[x]

    def sub(self, x, y):
        """Return ``x - y``."""
        return self.add_table[x][self._neg_table[y]]

    def power(self, x, k):
        """Return ``x`` raised to a non-negative integer power.

        Args:
            x (int):
                The base.

            k (int):
                The exponent.

        Returns:
            int:
            The power.
        """
        result = self.one

        for _ in range(k):
            result = self.mul_table[result][x]

        return result

    def multiple(self, k, x):
        """Return ``k·x`` for a non-negative integer ``k``.

        Args:
            k (int):
                The integer multiplier.

            x (int):
                The element.

        Returns:
            int:
            The multiple.
        """
        result = 0

        for _ in range(k % self.additive_orders[x]):
            result = self.add_table[result][x]

        return result

    def additive_order(self, x):
        """Return the additive order of an element."""
        return self.additive_orders[x]

    @cached_property
    def _neg_table(self):
        neg = [None] * self.order

        for x in self.elements:
            row = self.add_table[x]

            for y in self.elements:
                if row[y] == 0:
                    neg[x] = y
                    break

        return tuple(neg)

    @cached_property
    def additive_orders(self):
        """The additive order of every element.

        Type:
            tuple of int
        """
        return tuple(additive_orders(self.add_table))

    @cached_property
    def presentation(self):
        """Coordinates on the additive group, with ``1`` as first generator.

        Type:
            ringrecon.abelian.AbelianPresentation
        """
        if self.order == 1:
            first = ()
        else:
            first = (self.one,)

        return AbelianPresentation(self.add_table, first=first)

    @property
    def characteristic(self):
        """The additive order of ``1``.

        Type:
            int
        """
        if self.is_zero_ring:
            return 1

        return self.additive_orders[self.one]

    @property
    def is_zero_ring(self):
        """Whether this is the zero ring.

        Type:
            bool
        """
        return self.order == 1

    @cached_property
    def units(self):
        """The invertible elements, in increasing order.

        Type:
            tuple of int
        """
        return tuple(
            x
            for x in self.elements
            if self.one in self.mul_table[x]
        )

    @cached_property
    def idempotents(self):
        """The elements with ``e² = e``.

        Type:
            tuple of int
        """
        return tuple(x for x in self.elements if self.mul_table[x][x] == x)

    @cached_property
    def nilpotents(self):
        """The nilpotent elements.

        Type:
            tuple of int
        """
        result = []

        for x in self.elements:
            y = x

            for _ in range(self.order):
                if y == 0:
                    result.append(x)
                    break

                y = self.mul_table[y][x]

        return tuple(result)

    @property
    def is_field(self):
        """Whether the ring is a field.

        Type:
            bool
        """
        return not self.is_zero_ring and len(self.units) == self.order - 1

    @property
    def is_local(self):
        """Whether the ring has exactly one maximal ideal.

        For a finite ring, this holds exactly when the non-units are closed
        under addition.

        Type:
            bool
        """
        if self.is_zero_ring:
            return False

        units = set(self.units)
        non_units = [x for x in self.elements if x not in units]

        return all(self.add_table[x][y] not in units
                   for x in non_units
                   for y in non_units)

    def element_signature(self, x):
        """Return isomorphism-invariant data about a single element.

        Args:
            x (int):
                The element.

        Returns:
            tuple:
            The signature.
        """
        row = self.mul_table[x]
        square = row[x]

        return (
            self.additive_orders[x],
            x in self._unit_set,
            square == 0,
            square == x,
            row.count(0),
            len(set(row)),
            self.additive_orders[square],
        )

    @cached_property
    def _unit_set(self):
        return frozenset(self.units)

    @cached_property
    def signatures(self):
        """The signature of every element.

        Type:
            tuple of tuple
        """
        return tuple(self.element_signature(x) for x in self.elements)

    @cached_property
    def signatures_key(self):
        """The sorted multiset of element signatures.

        Type:
            tuple of tuple
        """
        return tuple(sorted(self.signatures))

    def verify(self):
        """Check the ring axioms.

        Rings up to the configured ``RINGRECON_FULL_AXIOM_LIMIT`` are checked
        over every pair and triple of elements. Larger rings have their
        associativity and distributivity checked against additive
        generators, which is equivalent once the other axioms hold.

        Raises:
            ringrecon.errors.AxiomError:
                An axiom failed. The witness is the first failing tuple in
                lexicographic order.
        """
        n = self.order
        add = self.add_table
        mul = self.mul_table
        elements = range(n)

        for key, table in (('addition', add), ('multiplication', mul)):
            if len(table) != n or any(len(row) != n for row in table):
                raise AxiomError('%s table is square' % key)

            for x in elements:
                for y in elements:
                    if not 0 <= table[x][y] < n:
                        raise AxiomError('%s is closed' % key, (x, y))

        if not 0 <= self.one < n:
            raise AxiomError('identity is an element', (self.one,))

        for x in elements:
            if add[0][x] != x:
                raise AxiomError('zero is an additive identity', (x,))

            if 0 not in add[x]:
                raise AxiomError('additive inverses exist', (x,))

            if mul[self.one][x] != x:
                raise AxiomError('one is a multiplicative identity', (x,))

        if n > 1 and self.one == 0:
            raise AxiomError('zero differs from one', (0,))

        for x in elements:
            for y in elements:
                if add[x][y] != add[y][x]:
                    raise AxiomError('addition is commutative', (x, y))

                if mul[x][y] != mul[y][x]:
                    raise AxiomError('multiplication is commutative', (x, y))

        if n <= get_setting('RINGRECON_FULL_AXIOM_LIMIT'):
            thirds = elements
        else:
            presentation = AbelianPresentation(add)

            if any(presentation.coords(x) is None for x in elements):
                raise AxiomError('addition is associative')

            thirds = presentation.generators
            logger.debug('Checking axioms of a ring of order %d against %d '
                         'additive generators', n, len(thirds))

        for x in elements:
            add_x = add[x]
            mul_x = mul[x]

            for y in elements:
                xy = add_x[y]
                mxy = mul_x[y]

                for z in thirds:
                    if add[xy][z] != add_x[add[y][z]]:
                        raise AxiomError('addition is associative',
                                         (x, y, z))

                    if mul_x[add[y][z]] != add[mxy][mul_x[z]]:
                        raise AxiomError('multiplication distributes',
                                         (x, y, z))

                    if mul[mxy][z] != mul_x[mul[y][z]]:
                        raise AxiomError('multiplication is associative',
                                         (x, y, z))

    def tables_key(self):
        """Return a hashable key made from the tables.

        Returns:
            tuple:
            The key.
        """
        return (self.add_table, self.mul_table, self.one)


class RingHom(object):
    """A unital ring homomorphism between finite rings.

    Attributes:
        source (FinRing):
            The domain.

        target (FinRing):
            The codomain.

        map (tuple of int):
            The image of every source element.
    """

    def __init__(self, source, target, mapping, verify=True):
        """Initialize the homomorphism.

        Args:
            source (FinRing):
                The domain.

            target (FinRing):
                The codomain.

            mapping (list of int):
                The image of every source element.

            verify (bool, optional):
                Whether to check that the map is a unital ring
                homomorphism.

        Raises:
            ringrecon.errors.AxiomError:
                The map is not a unital ring homomorphism.
        """
        self.source = source
        self.target = target
        self.map = tuple(mapping)

        if verify:
            self.verify()

    def __call__(self, x):
        return self.map[x]

    def __eq__(self, other):
        return (isinstance(other, RingHom) and
                self.map == other.map and
                self.source == other.source and
                self.target == other.target)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return '<RingHom %s -> %s %r>' % (self.source, self.target, self.map)

    def verify(self):
        """Check that this is a unital ring homomorphism.

        Raises:
            ringrecon.errors.AxiomError:
                A preservation law failed.
        """
        source = self.source
        target = self.target
        f = self.map

        if len(f) != source.order:
            raise AxiomError('map is total', (len(f),))

        for x, y in enumerate(f):
            if not 0 <= y < target.order:
                raise AxiomError('map lands in the target', (x,))

        if f[source.one] != target.one:
            raise AxiomError('map preserves one', (source.one,))

        for x in source.elements:
            for y in source.elements:
                if f[source.add_table[x][y]] != target.add_table[f[x]][f[y]]:
                    raise AxiomError('map preserves addition', (x, y))

                if f[source.mul_table[x][y]] != target.mul_table[f[x]][f[y]]:
                    raise AxiomError('map preserves multiplication', (x, y))

    def kernel(self):
        """Return the kernel as an ideal of the source.

        Returns:
            Ideal:
            The kernel.
        """
        return Ideal(self.source, [x for x, y in enumerate(self.map)
                                   if y == 0])

    def image(self):
        """Return the image, in increasing order.

        Returns:
            list of int:
            The image elements.
        """
        return sorted(set(self.map))

    @property
    def is_injective(self):
        """Whether the map is injective.

        Type:
            bool
        """
        return len(set(self.map)) == self.source.order

    @property
    def is_surjective(self):
        """Whether the map is surjective.

        Type:
            bool
        """
        return len(set(self.map)) == self.target.order

    @property
    def is_isomorphism(self):
        """Whether the map is bijective.

        Type:
            bool
        """
        return self.is_injective and self.is_surjective

    def inverse(self):
        """Return the inverse of a bijective homomorphism.

        Returns:
            RingHom:
            The inverse.

        Raises:
            ringrecon.errors.PreconditionError:
                The map is not bijective.
        """
        if not self.is_isomorphism:
            raise PreconditionError('%r is not an isomorphism' % self)

        inverse = [None] * self.target.order

        for x, y in enumerate(self.map):
            inverse[y] = x

        return RingHom(self.target, self.source, inverse, verify=False)


class Ideal(object):
    """A subset of a ring claimed to be an ideal.

    Attributes:
        ring (FinRing):
            The ambient ring.

        elements (frozenset of int):
            The members.
    """

    def __init__(self, ring, elements):
        """Initialize the ideal.

        Args:
            ring (FinRing):
                The ambient ring.

            elements (iterable of int):
                The members.
        """
        self.ring = ring
        self.elements = frozenset(elements)

    def __eq__(self, other):
        return (isinstance(other, Ideal) and
                self.elements == other.elements and
                self.ring == other.ring)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __repr__(self):
        return '<Ideal %r of %s>' % (sorted(self.elements), self.ring)

    def verify(self):
        """Check the ideal axioms.

        Raises:
            ringrecon.errors.AxiomError:
                The subset is not an ideal.
        """
        ring = self.ring

        if 0 not in self.elements:
            raise AxiomError('ideal contains zero')

        for x in sorted(self.elements):
            for y in sorted(self.elements):
                if ring.add(x, y) not in self.elements:
                    raise AxiomError('ideal is closed under addition', (x, y))

            for a in ring.elements:
                if ring.mul(a, x) not in self.elements:
                    raise AxiomError('ideal absorbs multiplication', (a, x))

    def is_valid(self):
        """Return whether the subset is an ideal.

        Returns:
            bool:
            ``True`` if :py:meth:`verify` passes.
        """
        try:
            self.verify()
        except AxiomError:
            return False

        return True


def identity_hom(ring):
    """Return the identity homomorphism of a ring.

    Args:
        ring (FinRing):
            The ring.

    Returns:
        RingHom:
        The identity.
    """
    return RingHom(ring, ring, range(ring.order), verify=False)


def compose_homs(g, f):
    """Return the composite ``g ∘ f``.

    Args:
        g (RingHom):
            The second map.

        f (RingHom):
            The first map.

    Returns:
        RingHom:
        The composite.

    Raises:
        ringrecon.errors.PreconditionError:
            The maps are not composable.
    """
    if f.target != g.source:
        raise PreconditionError('%r and %r are not composable' % (g, f))

    return RingHom(f.source, g.target, [g.map[y] for y in f.map],
                   verify=False)


def _reindexed_ring(elements, add, mul, one, name=None):
    """Build a ring on an ordered list of hashable elements.

    The first element must be the zero.
    """
    index = {e: i for i, e in enumerate(elements)}
    ring = FinRing(
        [[index[add(x, y)] for y in elements] for x in elements],
        [[index[mul(x, y)] for y in elements] for x in elements],
        index[one],
        name=name,
        verify=False)

    return ring, index


def make_cyclic(n):
    """Return the ring of integers modulo n.

    Args:
        n (int):
            The modulus.

    Returns:
        FinRing:
        The ring ``Z/n``.

    Raises:
        ringrecon.errors.PreconditionError:
            ``n`` is not positive.
    """
    if not isinstance(n, int) or n < 1:
        raise PreconditionError('The modulus must be a positive integer, '
                                'not %r' % (n,))

    return FinRing([[(x + y) % n for y in range(n)] for x in range(n)],
                   [[(x * y) % n for y in range(n)] for x in range(n)],
                   1 % n,
                   name='Z/%d' % n,
                   verify=False)


def product(a, b):
    """Return the product ring with its projections.

    Args:
        a (FinRing):
            The first factor.

        b (FinRing):
            The second factor.

    Returns:
        tuple:
        A 3-tuple of the product ring and the two projections.
    """
    pairs = list(itertools.product(a.elements, b.elements))
    ring, index = _reindexed_ring(
        pairs,
        lambda x, y: (a.add(x[0], y[0]), b.add(x[1], y[1])),
        lambda x, y: (a.mul(x[0], y[0]), b.mul(x[1], y[1])),
        (a.one, b.one),
        name='%s x %s' % (a, b))

    return (ring,
            RingHom(ring, a, [p[0] for p in pairs], verify=False),
            RingHom(ring, b, [p[1] for p in pairs], verify=False))


def polynomial_quotient(base, modulus, name=None):
    """Expand ``base[x] / (f)`` for a monic polynomial f into tables.

    Elements are coefficient vectors of degree below ``deg f``.

    Args:
        base (FinRing):
            The coefficient ring.

        modulus (list of int):
            The coefficients of f, lowest degree first. The last entry
            must be ``base.one``.

        name (str, optional):
            A display name.

    Returns:
        FinRing:
        The quotient ring.

    Raises:
        ringrecon.errors.PreconditionError:
            The polynomial is not monic of positive degree.
    """
    degree = len(modulus) - 1

    if degree < 1 or modulus[-1] != base.one:
        raise PreconditionError('The modulus must be monic of positive '
                                'degree.')

    tail = [base.neg(c) for c in modulus[:-1]]

    def add(p, q):
        return tuple(base.add(x, y) for x, y in zip(p, q))

    def mul(p, q):
        coeffs = [0] * (2 * degree - 1)

        for i, x in enumerate(p):
            if x:
                for j, y in enumerate(q):
                    coeffs[i + j] = base.add(coeffs[i + j], base.mul(x, y))

        for k in range(len(coeffs) - 1, degree - 1, -1):
            c = coeffs[k]

            if c:
                coeffs[k] = 0

                for i, t in enumerate(tail):
                    j = k - degree + i
                    coeffs[j] = base.add(coeffs[j], base.mul(c, t))

        return tuple(coeffs[:degree])

    elements = list(itertools.product(base.elements, repeat=degree))
    one = (base.one,) + (0,) * (degree - 1)
    ring, index = _reindexed_ring(elements, add, mul, one, name=name)

    return ring


def truncated_polynomial(base, k):
    """Return ``base[x] / (x^k)``.

    Args:
        base (FinRing):
            The coefficient ring.

        k (int):
            The nilpotency degree.

    Returns:
        FinRing:
        The truncated polynomial ring.
    """
    return polynomial_quotient(base, [0] * k + [base.one],
                               name='%s[x]/(x^%d)' % (base, k))


def dual_numbers(base):
    """Return ``base[ε] = base[x] / (x²)``.

    Args:
        base (FinRing):
            The coefficient ring.

    Returns:
        FinRing:
        The ring of dual numbers.
    """
    return truncated_polynomial(base, 2)


def finite_field(q):
    """Return the finite field with q elements.

    Prime fields are the cyclic rings. Other fields use the first monic
    polynomial (in lexicographic order of coefficients) whose quotient is a
    field.

    Args:
        q (int):
            A prime power.

    Returns:
        FinRing:
        The field ``F_q``.

    Raises:
        ringrecon.errors.PreconditionError:
            ``q`` is not a prime power.
    """
    factors = factorint(q) if isinstance(q, int) and q > 1 else {}

    if len(factors) != 1:
        raise PreconditionError('%r is not a prime power' % (q,))

    (p, k), = factors.items()
    prime_field = make_cyclic(p)

    if k == 1:
        prime_field.name = 'F_%d' % p
        return prime_field

    for coeffs in itertools.product(range(p), repeat=k):
        if coeffs[0] == 0:
            continue

        candidate = polynomial_quotient(prime_field, list(coeffs) + [1],
                                        name='F_%d' % q)

        if candidate.is_field:
            return candidate

    raise AssertionError('No irreducible polynomial found for F_%d' % q)


def _ideal_closure(ring, generators):
    members = {0}

    for g in generators:
        for a in ring.elements:
            x = ring.mul(a, g)

            if x not in members:
                members.add(x)

    # Multiples of the generators absorb the ring, so closing under
    # addition is enough.
    changed = True

    while changed:
        changed = False

        for x in list(members):
            for y in list(members):
                z = ring.add(x, y)

                if z not in members:
                    members.add(z)
                    changed = True

    return members


def ideal_generated(ring, elements):
    """Return the ideal generated by a set of elements.

    Args:
        ring (FinRing):
            The ring.

        elements (iterable of int):
            The generators.

    Returns:
        Ideal:
        The generated ideal.
    """
    return Ideal(ring, _ideal_closure(ring, list(elements)))


def enumerate_ideals(ring):
    """Return every ideal of a ring.

    Args:
        ring (FinRing):
            The ring.

    Returns:
        list of Ideal:
        The ideals, ordered by size and then by members.
    """
    found = {frozenset([0])}
    pending = [frozenset([0])]

    while pending:
        ideal = pending.pop()

        for x in ring.elements:
            if x not in ideal:
                larger = frozenset(_ideal_closure(ring, list(ideal) + [x]))

                if larger not in found:
                    found.add(larger)
                    pending.append(larger)

    return [
        Ideal(ring, members)
        for members in sorted(found, key=lambda s: (len(s), sorted(s)))
    ]


def quotient(ring, ideal):
    """Return the quotient ring and its canonical surjection.

    Cosets are represented by their smallest member and ordered by it.

    Args:
        ring (FinRing):
            The ring.

        ideal (Ideal):
            The ideal.

    Returns:
        tuple:
        A 2-tuple of the quotient ring and the canonical map.

    Raises:
        ringrecon.errors.PreconditionError:
            The subset is not an ideal of the ring.
    """
    if ideal.ring != ring or not ideal.is_valid():
        raise PreconditionError('%r is not an ideal of %s' % (ideal, ring))

    members = sorted(ideal.elements)
    reps = [min(ring.add(x, i) for i in members) for x in ring.elements]
    cosets = sorted(set(reps))

    quotient_ring, index = _reindexed_ring(
        cosets,
        lambda x, y: reps[ring.add(x, y)],
        lambda x, y: reps[ring.mul(x, y)],
        reps[ring.one])

    if ring.name:
        quotient_ring.name = '%s/%r' % (ring, members)

    return (quotient_ring,
            RingHom(ring, quotient_ring, [index[r] for r in reps],
                    verify=False))


def maximal_ideals(ring):
    """Return the maximal ideals with their residue fields.

    Args:
        ring (FinRing):
            A nonzero ring.

    Returns:
        list of tuple:
        A list of ``(ideal, residue_field, projection)`` tuples.

    Raises:
        ringrecon.errors.PreconditionError:
            The ring is the zero ring, which has no points.
    """
    if ring.is_zero_ring:
        raise PreconditionError('The zero ring has no maximal ideals.')

    result = []

    for ideal in enumerate_ideals(ring):
        if len(ideal) < ring.order:
            field, projection = quotient(ring, ideal)

            if field.is_field:
                result.append((ideal, field, projection))

    return result


def coequalizer(f, g):
    """Return the coequalizer of two parallel ring maps.

    This is ``B / (f(x) - g(x))``.

    Args:
        f (RingHom):
            The first map.

        g (RingHom):
            The second map.

    Returns:
        tuple:
        A 2-tuple of the quotient ring and the quotient map.
    """
    if f.source != g.source or f.target != g.target:
        raise PreconditionError('%r and %r are not parallel' % (f, g))

    target = f.target
    ideal = ideal_generated(
        target,
        [target.sub(f(x), g(x)) for x in f.source.elements])

    return quotient(target, ideal)


def fiber_product(f, g):
    """Return the fiber product of two maps with a common target.

    Args:
        f (RingHom):
            A map ``B -> D``.

        g (RingHom):
            A map ``C -> D``.

    Returns:
        tuple:
        A 3-tuple of the subring ``{(b, c) : f(b) = g(c)}`` of ``B x C`` and
        the two projections.

    Raises:
        ringrecon.errors.PreconditionError:
            The maps do not share a target.
    """
    if f.target != g.target:
        raise PreconditionError('%r and %r do not share a target' % (f, g))

    b = f.source
    c = g.source
    pairs = [
        (x, y)
        for x in b.elements
        for y in c.elements
        if f(x) == g(y)
    ]

    ring, index = _reindexed_ring(
        pairs,
        lambda x, y: (b.add(x[0], y[0]), c.add(x[1], y[1])),
        lambda x, y: (b.mul(x[0], y[0]), c.mul(x[1], y[1])),
        (b.one, c.one))

    return (ring,
            RingHom(ring, b, [p[0] for p in pairs], verify=False),
            RingHom(ring, c, [p[1] for p in pairs], verify=False))


def tensor(base, f, g):
    """Return the tensor product ``B ⊗_A C`` with its structure maps.

    The additive group is the quotient of the free abelian group on pairs
    of additive generators of B and C by the relations of each factor and
    the balancing relations ``f(a)·b ⊗ c = b ⊗ g(a)·c``, reduced through
    the Hermite normal form.

    Args:
        base (FinRing):
            The ring A.

        f (RingHom):
            The map ``A -> B``.

        g (RingHom):
            The map ``A -> C``.

    Returns:
        tuple:
        A 3-tuple of the tensor product and the maps from B and C.

    Raises:
        ringrecon.errors.PreconditionError:
            The maps do not both have source A.
    """
    if f.source != base or g.source != base:
        raise PreconditionError('Both maps must have source %s' % base)

    b = f.target
    c = g.target
    pb = b.presentation
    pc = c.presentation
    nb = pb.rank
    nc = pc.rank
    rank = nb * nc

    def outer(u, v):
        return tuple(x * y for x in u for y in v)

    def unit(n, i):
        return tuple(int(j == i) for j in range(n))

    relations = []

    for rel in pb.relations:
        for j in range(nc):
            relations.append(outer(rel, unit(nc, j)))

    for rel in pc.relations:
        for i in range(nb):
            relations.append(outer(unit(nb, i), rel))

    for a in base.presentation.generators:
        fa = f(a)
        ga = g(a)

        for i, gi in enumerate(pb.generators):
            left = pb.coords(b.mul(fa, gi))

            for j, hj in enumerate(pc.generators):
                right = pc.coords(c.mul(ga, hj))
                relations.append(tuple(
                    x - y
                    for x, y in zip(outer(left, unit(nc, j)),
                                    outer(unit(nb, i), right))))

    lattice = RelationLattice(rank, relations)
    reps = lattice.representatives()

    def pure(x, y):
        return lattice.reduce(outer(pb.coords(x), pc.coords(y)))

    basis_products = {}

    for i, gi in enumerate(pb.generators):
        for j, hj in enumerate(pc.generators):
            for k, gk in enumerate(pb.generators):
                for l, hl in enumerate(pc.generators):
                    basis_products[(i * nc + j, k * nc + l)] = outer(
                        pb.coords(b.mul(gi, gk)),
                        pc.coords(c.mul(hj, hl)))

    def add(u, v):
        return lattice.reduce(tuple(x + y for x, y in zip(u, v)))

    def mul(u, v):
        total = [0] * rank

        for s, us in enumerate(u):
            if us:
                for t, vt in enumerate(v):
                    if vt:
                        k = us * vt

                        for r, w in enumerate(basis_products[(s, t)]):
                            if w:
                                total[r] += k * w

        return lattice.reduce(total)

    ring, index = _reindexed_ring(reps, add, mul, pure(b.one, c.one),
                                  name='%s (x)_%s %s' % (b, base, c))

    logger.debug('Tensor product over %s of orders %d and %d has order %d',
                 base, b.order, c.order, ring.order)

    return (ring,
            RingHom(b, ring, [index[pure(x, c.one)] for x in b.elements],
                    verify=False),
            RingHom(c, ring, [index[pure(b.one, y)] for y in c.elements],
                    verify=False))


def is_ring_epimorphism(f):
    """Return whether a ring map is an epimorphism of commutative rings.

    A map ``A -> B`` is an epimorphism exactly when the fold map
    ``B ⊗_A B -> B`` is an isomorphism. The fold map is always surjective,
    so this compares orders.

    Args:
        f (RingHom):
            The map.

    Returns:
        bool:
        ``True`` if the map is an epimorphism.
    """
    collapsed, i1, i2 = tensor(f.source, f, f)

    return collapsed.order == f.target.order


def _search_homs(source, target, bijective=False, limit=None):
    """Enumerate unital homomorphisms by backtracking over generators.

    Generators of the source's additive group are assigned images in turn,
    with ``1 -> 1`` fixed. Each generator's relation is checked when it is
    assigned, and each product of generators is checked as soon as all the
    generators it involves have images.
    """
    if source.is_zero_ring:
        if target.is_zero_ring:
            yield (0,)

        return

    if bijective and (source.order != target.order or
                      source.signatures_key != target.signatures_key):
        return

    presentation = source.presentation
    gens = presentation.generators
    rank = len(gens)
    relations = presentation.relations

    checks = defaultdict(list)

    for a in range(rank):
        for b in range(a, rank):
            coords = presentation.coords(source.mul(gens[a], gens[b]))
            ready = max([a, b] + [i for i, c in enumerate(coords) if c])
            checks[ready].append((a, b, coords))

    def combine(images, coords):
        y = 0

        for c, image in zip(coords, images):
            if c:
                y = target.add(y, target.multiple(c, image))

        return y

    if bijective:
        by_signature = defaultdict(list)

        for y in target.elements:
            by_signature[target.signatures[y]].append(y)

        candidates = [by_signature[source.signatures[g]] for g in gens]
    else:
        candidates = [target.elements] * rank

    images = [None] * rank
    found = 0

    def extend(level):
        nonlocal found

        if level == rank:
            mapping = tuple(combine(images, presentation.coords(x))
                            for x in source.elements)

            if not bijective or len(set(mapping)) == target.order:
                found += 1
                yield mapping

            return

        options = [target.one] if level == 0 else candidates[level]

        for y in options:
            images[level] = y

            if combine(images[:level + 1], relations[level]) != 0:
                continue

            if all(combine(images, coords) ==
                   target.mul(images[a], images[b])
                   for a, b, coords in checks[level]):
                yield from extend(level + 1)

                if limit is not None and found >= limit:
                    return

        images[level] = None

    yield from extend(0)


def enumerate_homs(source, target):
    """Return every unital ring homomorphism between two rings.

    Args:
        source (FinRing):
            The domain.

        target (FinRing):
            The codomain.

    Returns:
        list of RingHom:
        The homomorphisms, ordered by their image tuples.
    """
    maps = sorted(set(_search_homs(source, target)))

    return [RingHom(source, target, m, verify=False) for m in maps]


def enumerate_isomorphisms(source, target):
    """Return every isomorphism between two rings.

    Args:
        source (FinRing):
            The domain.

        target (FinRing):
            The codomain.

    Returns:
        list of RingHom:
        The isomorphisms, ordered by their image tuples.
    """
    maps = sorted(set(_search_homs(source, target, bijective=True)))

    return [RingHom(source, target, m, verify=False) for m in maps]


def automorphisms(ring):
    """Return the automorphism group of a ring.

    Args:
        ring (FinRing):
            The ring.

    Returns:
        list of RingHom:
        The automorphisms, starting with the identity.
    """
    return enumerate_isomorphisms(ring, ring)


def is_isomorphic(source, target):
    """Return an isomorphism between two rings, if one exists.

    Args:
        source (FinRing):
            The first ring.

        target (FinRing):
            The second ring.

    Returns:
        RingHom:
        A witness isomorphism, or ``None`` if the rings are not isomorphic.
    """
    if ring_invariants(source) != ring_invariants(target):
        return None

    for mapping in _search_homs(source, target, bijective=True, limit=1):
        return RingHom(source, target, mapping, verify=False)

    return None


def ring_invariants(ring):
    """Return an isomorphism-invariant fingerprint of a ring.

    Args:
        ring (FinRing):
            The ring.

    Returns:
        tuple:
        The fingerprint.
    """
    return (
        ring.order,
        ring.characteristic,
        len(ring.units),
        len(ring.idempotents),
        len(ring.nilpotents),
        ring.signatures_key,
    )


def product_decomposition(ring):
    """Split a ring into connected factors along its primitive idempotents.

    Args:
        ring (FinRing):
            The ring.

    Returns:
        list of tuple:
        A list of ``(factor, projection)`` pairs, one per primitive
        idempotent, in increasing order of the idempotent. The zero ring
        has no factors.
    """
    nonzero = [e for e in ring.idempotents if e != 0]
    primitive = [
        e
        for e in nonzero
        if not any(f != e and ring.mul(e, f) == f for f in nonzero)
    ]

    factors = []

    for e in primitive:
        members = sorted(set(ring.mul(e, x) for x in ring.elements))
        factor, index = _reindexed_ring(members, ring.add, ring.mul, e)
        factors.append((factor,
                        RingHom(ring, factor,
                                [index[ring.mul(e, x)]
                                 for x in ring.elements],
                                verify=False)))

    return factors


def _rings_on_group(orders):
    """Return every ring structure on a p-group, with 1 as first basis vector.

    Structure constants ``e_i·e_j`` for ``i, j >= 1`` are chosen row by row.
    With ``e_0 = 1`` and symmetric constants, the multiplication is
    associative exactly when the left multiplication operators commute,
    which is checked as soon as each row is complete.
    """
    group = cyclic_product(orders)
    r = len(orders)
    basis = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    candidates = {}

    for i in range(1, r):
        for j in range(i, r):
            candidates[(i, j)] = [
                x
                for x in group.elements
                if orders[j] % group.element_order(x) == 0
            ]

    constants = {}

    for j in range(r):
        constants[(0, j)] = basis[j]
        constants[(j, 0)] = basis[j]

    def apply(i, x):
        total = (0,) * r

        for m, coefficient in enumerate(x):
            if coefficient:
                total = group.add(total,
                                  group.scale(coefficient, constants[(i, m)]))

        return total

    def commute(i, h):
        return all(apply(i, constants[(h, l)]) == apply(h, constants[(i, l)])
                   for l in range(r))

    def search(i):
        if i == r:
            yield dict(constants)
            return

        cells = [(i, j) for j in range(i, r)]

        for values in itertools.product(*[candidates[c] for c in cells]):
            for (a, b), value in zip(cells, values):
                constants[(a, b)] = value
                constants[(b, a)] = value

            if all(commute(i, h) for h in range(1, i)):
                yield from search(i + 1)

    for table in search(1):
        def mul(x, y, table=table):
            total = (0,) * r

            for a, xa in enumerate(x):
                if xa:
                    for b, yb in enumerate(y):
                        if yb:
                            total = group.add(
                                total, group.scale(xa * yb, table[(a, b)]))

            return total

        ring, index = _reindexed_ring(group.elements, group.add, mul,
                                      basis[0])
        yield ring


def _dedupe(rings):
    buckets = defaultdict(list)
    representatives = []

    for ring in rings:
        key = ring_invariants(ring)

        if not any(is_isomorphic(ring, other) for other in buckets[key]):
            buckets[key].append(ring)
            representatives.append(ring)

    return representatives


_rings_cache = {}
_order_cache = {}


def _prime_power_rings(p, k):
    key = (p, k)

    if key not in _rings_cache:
        found = []

        for orders in abelian_group_types(p ** k):
            leaves = list(_rings_on_group(orders))
            classes = _dedupe(leaves)
            logger.debug('Additive group %r: %d tables, %d classes',
                         orders, len(leaves), len(classes))
            found.extend(classes)

        _rings_cache[key] = found

    return _rings_cache[key]


def _standard_name(ring, position):
    n = ring.order

    if n == 1:
        return '0'

    if ring.characteristic == n:
        return 'Z/%d' % n

    if ring.is_field:
        return 'F_%d' % n

    return 'R%d.%d' % (n, position)


def rings_of_order(n):
    """Return one ring per isomorphism class of rings of order n.

    Args:
        n (int):
            The order.

    Returns:
        list of FinRing:
        The representatives, in a deterministic order.

    Raises:
        ringrecon.errors.PreconditionError:
            ``n`` is not positive.
    """
    if n < 1:
        raise PreconditionError('The order must be positive, not %r' % n)

    if n in _order_cache:
        return list(_order_cache[n])

    if n == 1:
        _order_cache[n] = [make_cyclic(1)]
        return list(_order_cache[n])

    parts = [_prime_power_rings(p, k) for p, k in sorted(factorint(n).items())]
    result = []

    for combo in itertools.product(*parts):
        ring = combo[0]

        for factor in combo[1:]:
            ring = product(ring, factor)[0]

        result.append(ring)

    for position, ring in enumerate(result):
        ring.name = _standard_name(ring, position)

    _order_cache[n] = result

    return list(result)


def enumerate_rings(max_order):
    """Return one ring per isomorphism class for every order up to a bound.

    Args:
        max_order (int):
            The largest order.

    Returns:
        list of FinRing:
        The representatives, ordered by ring order. The zero ring comes
        first.

    Raises:
        ringrecon.errors.PreconditionError:
            ``max_order`` is not positive.
    """
    if max_order < 1:
        raise PreconditionError('The maximum order must be positive, not %r'
                                % max_order)

    result = []

    for n in range(1, max_order + 1):
        result.extend(rings_of_order(n))

    logger.debug('Enumerated %d rings of order at most %d', len(result),
                 max_order)

    return result


def check_tensor_universal(base, f, g, result=None, bound=None):
    """Check the universal property of a tensor product exhaustively.

    Every cocone into a ring of order at most ``bound`` must factor
    uniquely through the tensor product.

    Args:
        base (FinRing):
            The ring A.

        f (RingHom):
            The map ``A -> B``.

        g (RingHom):
            The map ``A -> C``.

        result (tuple, optional):
            The result of :py:func:`tensor`. It is computed if not given.

        bound (int, optional):
            The largest apex order. Defaults to the configured
            ``RINGRECON_UNIVERSAL_CHECK_BOUND``.

    Returns:
        tuple:
        ``None`` if the property holds, or the first failing cocone as
        ``(apex, u, v)``.
    """
    if result is None:
        result = tensor(base, f, g)

    if bound is None:
        bound = get_setting('RINGRECON_UNIVERSAL_CHECK_BOUND')

    apex, i1, i2 = result

    for d in enumerate_rings(bound):
        factored = defaultdict(int)

        for w in enumerate_homs(apex, d):
            factored[(compose_homs(w, i1).map,
                      compose_homs(w, i2).map)] += 1

        for u in enumerate_homs(f.target, d):
            for v in enumerate_homs(g.target, d):
                if compose_homs(u, f) == compose_homs(v, g):
                    if factored.get((u.map, v.map)) != 1:
                        return (d, u, v)

    return None


def check_fiber_product_universal(f, g, result=None, bound=None):
    """Check the universal property of a fiber product exhaustively.

    Every cone from a ring of order at most ``bound`` must factor uniquely
    through the fiber product.

    Args:
        f (RingHom):
            The map ``B -> D``.

        g (RingHom):
            The map ``C -> D``.

        result (tuple, optional):
            The result of :py:func:`fiber_product`.

        bound (int, optional):
            The largest apex order.

    Returns:
        tuple:
        ``None`` if the property holds, or the first failing cone as
        ``(apex, u, v)``.
    """
    if result is None:
        result = fiber_product(f, g)

    if bound is None:
        bound = get_setting('RINGRECON_UNIVERSAL_CHECK_BOUND')

    apex, p1, p2 = result

    for e in enumerate_rings(bound):
        factored = defaultdict(int)

        for w in enumerate_homs(e, apex):
            factored[(compose_homs(p1, w).map,
                      compose_homs(p2, w).map)] += 1

        for u in enumerate_homs(e, f.source):
            for v in enumerate_homs(e, g.source):
                if compose_homs(f, u) == compose_homs(g, v):
                    if factored.get((u.map, v.map)) != 1:
                        return (e, u, v)

    return None
