import enum
import itertools
import logging


##### types related #######


# Enum makers
def join_to_enum(name, *args):
    """joins enums from args into returned enum"""
    enum_bits = []
    for cls in args:
        enum_bits += list(cls)
    out = enum.Enum(name, [(x.name, x.value) for x in enum_bits])
    return out


def make_enum(name, *args):
    """makes enum from list of strings"""
    return enum.Enum(name, [(x, x) for x in args])


def in_enum_values(x, enum):
    return x in [item.value for item in enum]


##### General #####


def get_repr(class_name, params, addition=''):
    param_str = ', '.join('{}:{}'.format(k, v) for k, v in params.items())
    if addition:
        return class_name + '[' + param_str + ', ' + addition + ']'
    else:
        return class_name + '[' + param_str + ']'


def parse_int_list(text, sep=','):
    """'1,2,3' -> [1, 2, 3]; raises ValueError on anything else"""
    return [int(x) for x in text.split(sep) if x.strip()]


##### enumeration caps #####


class CapExceeded(Exception):
    def __init__(self, kind, needed, cap, partial=None):
        self.kind = kind
        self.needed = needed
        self.cap = cap
        self.partial = partial
        msg = '{} enumeration needs {} entries, cap is {}'.format(kind, needed, cap)
        if partial is not None:
            msg += ' (stopped after {})'.format(partial)
        super().__init__(msg)


class Caps(object):
    """upper bounds for every exhaustive enumeration; exceeding one raises CapExceeded"""
    VECTORS = 'vectors'
    HOMS = 'homs'
    LATTICE = 'lattice'

    def __init__(self, vectors=2 ** 22, homs=2 ** 20, lattice=10 ** 6):
        for name, val in [(Caps.VECTORS, vectors), (Caps.HOMS, homs), (Caps.LATTICE, lattice)]:
            if not isinstance(val, int) or val <= 0:
                raise ValueError('cap {} must be a positive integer, got {}'.format(name, val))
        self.vectors = vectors
        self.homs = homs
        self.lattice = lattice

    @classmethod
    def from_config(cls, config):
        caps = config.get('caps', {}) if config else {}
        defaults = cls()
        return cls(vectors=caps.get(Caps.VECTORS, defaults.vectors),
                   homs=caps.get(Caps.HOMS, defaults.homs),
                   lattice=caps.get(Caps.LATTICE, defaults.lattice))

    @classmethod
    def from_string(cls, text):
        vals = parse_int_list(text)
        if len(vals) != 3:
            raise ValueError('caps need exactly three values v,h,l, got "{}"'.format(text))
        return cls(*vals)

    def as_tuple(self):
        return self.vectors, self.homs, self.lattice

    def check(self, kind, needed):
        cap = getattr(self, kind)
        if needed > cap:
            raise CapExceeded(kind, needed, cap)

    def __eq__(self, other):
        return isinstance(other, Caps) and self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return get_repr('Caps', {'vectors': self.vectors, 'homs': self.homs, 'lattice': self.lattice})


DEFAULT_CAPS = Caps()


def or_default(caps):
    if caps is None:
        return DEFAULT_CAPS
    return caps


def coefficient_tuples(p, k, cap, kind=Caps.VECTORS):
    """all length-k tuples over range(p) in lexicographic order, refusing more than cap of them"""
    needed = p ** k
    if needed > cap:
        raise CapExceeded(kind, needed, cap)
    logging.debug('enumerating {} coefficient tuples ({}^{})'.format(needed, p, k))
    return itertools.product(range(p), repeat=k)
