"""Loading and dumping structures as JSON.

Every loader validates its input and raises
:py:class:`~ringrecon.errors.MalformedDataError` with a JSON path pointing
at the first bad value. Structures that are well-formed but fail their
axioms are reported the same way, since they came from the user. Dumps are
plain dictionaries; :py:func:`dumps` serializes them deterministically.
"""

import json

from ringrecon.algebras import AlgObject, TruncatedAlgCat
from ringrecon.categories import FinCategory, FunctorData, NatTransData
from ringrecon.errors import AxiomError, MalformedDataError
from ringrecon.rings import FinRing, RingHom
from ringrecon.topology import FinTop


def dumps(data):
    """Serialize a dumped structure with sorted keys and indentation."""
    return json.dumps(data, sort_keys=True, indent=2) + '\n'


def loads(text, location='$'):
    """Parse JSON text.

    Args:
        text (str):
            The text.

        location (str, optional):
            The path reported on failure.

    Returns:
        object:
        The parsed value.

    Raises:
        ringrecon.errors.MalformedDataError:
            The text is not valid JSON.
    """
    try:
        return json.loads(text)
    except ValueError as e:
        raise MalformedDataError('invalid JSON: %s' % e, location)


def _nested(error, prefix):
    """Re-raise a loader error from a sub-document under a new path."""
    location = error.location or '$'

    return MalformedDataError(error.message, prefix + location[1:])


def _require(data, key, location, kind=None):
    if not isinstance(data, dict):
        raise MalformedDataError('expected an object', location)

    if key not in data:
        raise MalformedDataError('missing key %r' % key, location)

    value = data[key]

    if kind is not None and not isinstance(value, kind):
        raise MalformedDataError('expected %s' % kind.__name__,
                                 '%s.%s' % (location, key))

    return value


def _int_list(value, location, upper=None):
    if not isinstance(value, list):
        raise MalformedDataError('expected a list', location)

    for i, item in enumerate(value):
        if (not isinstance(item, int) or isinstance(item, bool) or
            item < 0 or (upper is not None and item >= upper)):
            raise MalformedDataError('bad entry %r' % (item,),
                                     '%s[%d]' % (location, i))

    return value


def dump_ring(ring):
    """Return the JSON form of a ring.

    Args:
        ring (ringrecon.rings.FinRing):
            The ring.

    Returns:
        dict:
        ``{"order", "add", "mul", "one"}`` and ``"name"`` when set.
    """
    data = {
        'order': ring.order,
        'add': [list(row) for row in ring.add_table],
        'mul': [list(row) for row in ring.mul_table],
        'one': ring.one,
    }

    if ring.name:
        data['name'] = ring.name

    return data


def load_ring(data, location='$'):
    """Load and verify a ring.

    Args:
        data (dict):
            The JSON form.

        location (str, optional):
            The path of this document within its parent.

    Returns:
        ringrecon.rings.FinRing:
        The ring.

    Raises:
        ringrecon.errors.MalformedDataError:
            The document is malformed or the tables are not a ring.
    """
    add = _require(data, 'add', location, list)
    mul = _require(data, 'mul', location, list)
    one = _require(data, 'one', location)
    order = data.get('order', len(add))

    if order != len(add):
        raise MalformedDataError('order %r does not match the tables'
                                 % (order,), '%s.order' % location)

    for key, table in (('add', add), ('mul', mul)):
        for i, row in enumerate(table):
            if not isinstance(row, list):
                raise MalformedDataError('expected a list',
                                         '%s.%s[%d]' % (location, key, i))

    try:
        return FinRing.from_tables(add, mul, one, name=data.get('name'))
    except MalformedDataError as e:
        raise _nested(e, location)
    except AxiomError as e:
        raise MalformedDataError('not a ring: %s' % e, location)


def dump_hom(f):
    """Return the JSON form of a ring homomorphism."""
    return {
        'source': dump_ring(f.source),
        'target': dump_ring(f.target),
        'map': list(f.map),
    }


def load_hom(data, location='$'):
    """Load and verify a ring homomorphism.

    Args:
        data (dict):
            The JSON form.

        location (str, optional):
            The path of this document within its parent.

    Returns:
        ringrecon.rings.RingHom:
        The homomorphism.

    Raises:
        ringrecon.errors.MalformedDataError:
            The document is malformed or the map is not a homomorphism.
    """
    source = load_ring(_require(data, 'source', location),
                       '%s.source' % location)
    target = load_ring(_require(data, 'target', location),
                       '%s.target' % location)
    mapping = _int_list(_require(data, 'map', location), '%s.map' % location,
                        upper=target.order)

    try:
        return RingHom(source, target, mapping)
    except AxiomError as e:
        raise MalformedDataError('not a ring homomorphism: %s' % e,
                                 '%s.map' % location)


def dump_category(category):
    """Return the JSON form of a finite category.

    Args:
        category (ringrecon.categories.FinCategory):
            The category.

    Returns:
        dict:
        The objects, morphisms as ``[id, source, target]``, identities and
        composition triples ``[g, f, g∘f]``.
    """
    data = {
        'objects': [str(label) for label in category.objects],
        'morphisms': [
            [f, category.source(f), category.target(f)]
            for f in category.morphisms
        ],
        'identities': list(category.identities),
        'compose': [
            [g, f, h]
            for (g, f), h in sorted(category.composition.items())
        ],
    }

    if category.name:
        data['name'] = category.name

    return data


def load_category(data, location='$'):
    """Load and verify a finite category.

    Args:
        data (dict):
            The JSON form.

        location (str, optional):
            The path of this document within its parent.

    Returns:
        ringrecon.categories.FinCategory:
        The category.

    Raises:
        ringrecon.errors.MalformedDataError:
            The document is malformed or the tables do not form a
            category.
    """
    objects = _require(data, 'objects', location, list)
    morphisms = _require(data, 'morphisms', location, list)
    n = len(morphisms)
    sources = [None] * n
    targets = [None] * n

    for i, entry in enumerate(morphisms):
        where = '%s.morphisms[%d]' % (location, i)
        _int_list(entry, where)

        if len(entry) != 3:
            raise MalformedDataError('expected [id, source, target]', where)

        m, source, target = entry

        if m >= n or sources[m] is not None:
            raise MalformedDataError('bad or repeated morphism id %d' % m,
                                     where)

        if source >= len(objects) or target >= len(objects):
            raise MalformedDataError('object out of range', where)

        sources[m] = source
        targets[m] = target

    identities = _int_list(_require(data, 'identities', location),
                           '%s.identities' % location, upper=n)

    if len(identities) != len(objects):
        raise MalformedDataError('expected one identity per object',
                                 '%s.identities' % location)

    composition = {}

    for i, entry in enumerate(_require(data, 'compose', location, list)):
        where = '%s.compose[%d]' % (location, i)
        _int_list(entry, where, upper=n)

        if len(entry) != 3:
            raise MalformedDataError('expected [g, f, g∘f]', where)

        g, f, h = entry

        if (g, f) in composition:
            raise MalformedDataError('repeated composite', where)

        composition[(g, f)] = h

    try:
        return FinCategory(objects, sources, targets, identities,
                           composition, name=data.get('name'))
    except AxiomError as e:
        raise MalformedDataError('not a category: %s' % e,
                                 '%s.compose' % location)


def dump_realization(algebras):
    """Return the sidecar describing an algebra category's rings.

    Args:
        algebras (ringrecon.algebras.TruncatedAlgCat):
            The algebra category.

    Returns:
        dict:
        The base ring, the bound, every object's ring and structure map,
        and the ring map of every morphism keyed by morphism id.
    """
    rings = []
    ring_ids = {}

    for obj in algebras.objects:
        if id(obj.ring) not in ring_ids:
            ring_ids[id(obj.ring)] = len(rings)
            rings.append(dump_ring(obj.ring))

    return {
        'base': dump_ring(algebras.base),
        'bound': algebras.bound,
        'rings': rings,
        'objects': [
            {
                'ring': ring_ids[id(obj.ring)],
                'structure': list(obj.structure.map),
                'label': obj.label,
            }
            for obj in algebras.objects
        ],
        'realization': {
            str(m): list(h.map)
            for m, h in enumerate(algebras.realization)
        },
    }


def dump_alg_category(algebras):
    """Return the category and its sidecar as one document."""
    return {
        'category': dump_category(algebras.category),
        'algebra': dump_realization(algebras),
    }


def load_alg_category(data, location='$'):
    """Load an algebra category with its realization.

    Args:
        data (dict):
            A document with ``category`` and ``algebra`` keys, as written
            by :py:func:`dump_alg_category`.

        location (str, optional):
            The path of this document within its parent.

    Returns:
        ringrecon.algebras.TruncatedAlgCat:
        The algebra category.

    Raises:
        ringrecon.errors.MalformedDataError:
            The document is malformed, or a morphism's ring map does not
            match its ends.
    """
    category = load_category(_require(data, 'category', location),
                             '%s.category' % location)
    where = '%s.algebra' % location
    sidecar = _require(data, 'algebra', location, dict)
    base = load_ring(_require(sidecar, 'base', where), '%s.base' % where)
    bound = _require(sidecar, 'bound', where, int)
    rings = [
        load_ring(ring, '%s.rings[%d]' % (where, i))
        for i, ring in enumerate(_require(sidecar, 'rings', where, list))
    ]
    objects = []

    for i, entry in enumerate(_require(sidecar, 'objects', where, list)):
        at = '%s.objects[%d]' % (where, i)
        ring_id = _require(entry, 'ring', at, int)

        if not 0 <= ring_id < len(rings):
            raise MalformedDataError('ring out of range', '%s.ring' % at)

        ring = rings[ring_id]

        if ring == base:
            ring = base

        structure = _int_list(_require(entry, 'structure', at),
                              '%s.structure' % at, upper=ring.order)

        try:
            objects.append(AlgObject(ring, RingHom(base, ring, structure),
                                     entry.get('label', str(ring))))
        except AxiomError as e:
            raise MalformedDataError('not a structure map: %s' % e,
                                     '%s.structure' % at)

    if len(objects) != category.num_objects:
        raise MalformedDataError('expected one entry per object',
                                 '%s.objects' % where)

    realization_data = _require(sidecar, 'realization', where, dict)
    realization = []

    for m in category.morphisms:
        at = '%s.realization.%d' % (where, m)

        if str(m) not in realization_data:
            raise MalformedDataError('missing ring map', at)

        x = objects[category.source(m)]
        y = objects[category.target(m)]
        mapping = _int_list(realization_data[str(m)], at, upper=y.ring.order)

        try:
            h = RingHom(x.ring, y.ring, mapping)
        except AxiomError as e:
            raise MalformedDataError('not a ring homomorphism: %s' % e, at)

        if [h(v) for v in x.structure.map] != list(y.structure.map):
            raise MalformedDataError('not an algebra map', at)

        realization.append(h)

    return TruncatedAlgCat(base, bound, objects, category, realization)


def dump_functor(functor):
    """Return the JSON form of a functor's object and morphism maps."""
    return {
        'objects': list(functor.object_map),
        'morphisms': list(functor.morphism_map),
    }


def load_functor(data, source, target, location='$'):
    """Load and verify a functor between two known categories.

    Args:
        data (dict):
            The JSON form.

        source (ringrecon.categories.FinCategory):
            The source category.

        target (ringrecon.categories.FinCategory):
            The target category.

        location (str, optional):
            The path of this document within its parent.

    Returns:
        ringrecon.categories.FunctorData:
        The functor.

    Raises:
        ringrecon.errors.MalformedDataError:
            The maps are malformed or break a functor law.
    """
    objects = _int_list(_require(data, 'objects', location),
                        '%s.objects' % location, upper=target.num_objects)
    morphisms = _int_list(_require(data, 'morphisms', location),
                          '%s.morphisms' % location,
                          upper=target.num_morphisms)

    try:
        return FunctorData(source, target, objects, morphisms)
    except AxiomError as e:
        raise MalformedDataError('not a functor: %s' % e, location)


def dump_nat_trans(transformation):
    """Return the JSON form of a natural transformation."""
    return {'components': list(transformation.components)}


def load_nat_trans(data, source, target, location='$'):
    """Load and verify a natural transformation between two functors.

    Raises:
        ringrecon.errors.MalformedDataError:
            The components are malformed or not natural.
    """
    components = _int_list(_require(data, 'components', location),
                           '%s.components' % location,
                           upper=source.target.num_morphisms)

    try:
        return NatTransData(source, target, components)
    except AxiomError as e:
        raise MalformedDataError('not a natural transformation: %s' % e,
                                 location)


def dump_space(space):
    """Return the JSON form of a finite space."""
    return {'points': space.size, 'opens': space.sorted_opens}


def load_space(data, location='$'):
    """Load and verify a finite topological space.

    Raises:
        ringrecon.errors.MalformedDataError:
            The document is malformed or the opens are not a topology.
    """
    size = _require(data, 'points', location, int)
    opens = _require(data, 'opens', location, list)

    for i, u in enumerate(opens):
        _int_list(u, '%s.opens[%d]' % (location, i), upper=size)

    try:
        return FinTop(size, opens)
    except AxiomError as e:
        raise MalformedDataError('not a topology: %s' % e,
                                 '%s.opens' % location)
