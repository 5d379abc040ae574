"""Basic algebras over GF(p): poset-pattern subalgebras of matrix rings and their monomial quotients.

Basis elements are matrix units e_ij labelled by pairs (i, j) of the pattern, sorted
lexicographically; every coordinate vector anywhere in the package refers to this order.
Multiplication is held as a structure-constant tensor T with e_a * e_b = sum_c T[a, b, c] e_c.
"""
import itertools
import logging

import numpy as np

from .helpers import get_repr
from .linalg import PrimeField, Subspace


class PatternError(ValueError):
    def __init__(self, message, pair=None):
        self.pair = pair
        super().__init__(message)


class IdealError(ValueError):
    def __init__(self, message, label=None):
        self.label = label
        super().__init__(message)


class PosetPattern(object):
    """a partial order on 1..n given by its pairs; reflexive pairs are added automatically"""

    def __init__(self, n, relation):
        if n < 1:
            raise PatternError('pattern size must be at least 1, got {}'.format(n))
        self.n = n
        pairs = set()
        for pair in relation:
            i, j = (int(x) for x in pair)
            if not (1 <= i <= n and 1 <= j <= n):
                raise PatternError('pair {} out of range 1..{}'.format((i, j), n), pair=(i, j))
            pairs.add((i, j))
        pairs.update((i, i) for i in range(1, n + 1))
        self.relation = frozenset(pairs)
        self._validate()

    def _validate(self):
        for (i, j) in sorted(self.relation):
            if i != j and (j, i) in self.relation:
                raise PatternError('relation is not antisymmetric: {} and {}'.format((i, j), (j, i)),
                                   pair=(i, j))
        for (i, j), (k, l) in itertools.product(sorted(self.relation), repeat=2):
            if j == k and (i, l) not in self.relation:
                raise PatternError('relation is not transitive: {} and {} but not {}'.format(
                    (i, j), (k, l), (i, l)), pair=(i, l))

    @property
    def pairs(self):
        return sorted(self.relation)

    def __repr__(self):
        return get_repr('PosetPattern', {'n': self.n, 'relation': self.pairs})


class MonomialIdeal(object):
    """labels of basis elements to annihilate"""

    def __init__(self, labels):
        self.labels = frozenset(tuple(int(x) for x in lab) for lab in labels)

    def __repr__(self):
        return get_repr('MonomialIdeal', {'labels': sorted(self.labels)})


class FiniteAlgebra(object):
    def __init__(self, field, labels, structure, name='', opposite=False):
        self.field = field
        self.labels = [tuple(lab) for lab in labels]
        self.structure = field.reduce(structure)
        self.structure.setflags(write=False)
        self.name = name
        self.opposite = opposite
        self._index = {lab: k for k, lab in enumerate(self.labels)}
        assert len(self._index) == len(self.labels), 'duplicate basis labels {}'.format(self.labels)
        self.simple_labels = sorted(i for (i, j) in self.labels if i == j)
        self.unit_coords = np.zeros(self.dim, dtype=np.int64)
        for i in self.simple_labels:
            self.unit_coords[self._index[(i, i)]] = 1
        off_diagonal = [k for k, (i, j) in enumerate(self.labels) if i != j]
        self.radical_basis = Subspace(field, self.dim, np.eye(self.dim, dtype=np.int64)[off_diagonal])

    @property
    def dim(self):
        return len(self.labels)

    @property
    def p(self):
        return self.field.p

    @property
    def n(self):
        return len(self.simple_labels)

    def index(self, label):
        return self._index[tuple(label)]

    def basis_vector(self, label):
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.index(label)] = 1
        return v

    @property
    def primitive_idempotents(self):
        """[(simple label, coordinates of e_ii)]"""
        return [(i, self.basis_vector((i, i))) for i in self.simple_labels]

    def idempotent(self, i):
        if i not in self.simple_labels:
            raise IndexError('no primitive idempotent with label {} in {}'.format(i, self.simple_labels))
        return self.basis_vector((i, i))

    def multiply(self, x, y):
        return self.field.reduce(np.einsum('a,b,abc->c', self.field.reduce(x), self.field.reduce(y),
                                           self.structure))

    def right_multiplication(self, b):
        """matrix of x -> x * e_b in the row-vector convention"""
        return self.structure[:, b, :]

    @property
    def key(self):
        return self.p, tuple(self.labels), self.structure.tobytes()

    def __eq__(self, other):
        return isinstance(other, FiniteAlgebra) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def summary(self):
        return {'name': self.name,
                'field': self.p,
                'dim': self.dim,
                'radical_dim': self.radical_basis.dim,
                'labels': [list(lab) for lab in self.labels],
                'idempotents': self.simple_labels,
                'opposite': self.opposite}

    def __repr__(self):
        return get_repr('FiniteAlgebra', {'name': self.name, 'p': self.p, 'dim': self.dim,
                                          'radical_dim': self.radical_basis.dim})


def _pattern_structure(field, labels):
    index = {lab: k for k, lab in enumerate(labels)}
    d = len(labels)
    structure = np.zeros((d, d, d), dtype=np.int64)
    for a, (i, j) in enumerate(labels):
        for b, (k, l) in enumerate(labels):
            if j == k and (i, l) in index:
                structure[a, b, index[(i, l)]] = 1
    return structure


def algebra_from_pattern(pattern, p, name=''):
    field = p if isinstance(p, PrimeField) else PrimeField(p)
    labels = pattern.pairs
    algebra = FiniteAlgebra(field, labels, _pattern_structure(field, labels), name=name)
    report = verify_algebra(algebra)
    assert report.ok, 'pattern algebra failed verification: {}'.format(report)
    logging.debug('built {}'.format(algebra))
    return algebra


def star_algebra(leaves, p, name=None):
    """pattern {(i,i)} + {(1,j) : 2 <= j <= leaves + 1}: one source below `leaves` incomparable points"""
    n = leaves + 1
    pattern = PosetPattern(n, [(1, j) for j in range(2, n + 1)])
    if name is None:
        name = 'star{}_gf{}'.format(leaves, p if not isinstance(p, PrimeField) else p.p)
    return algebra_from_pattern(pattern, p, name=name)


def diagonal_algebra(n, p, name=None):
    if name is None:
        name = 'diagonal{}_gf{}'.format(n, p)
    return algebra_from_pattern(PosetPattern(n, []), p, name=name)


def check_monomial_ideal(algebra, ideal):
    """raises IdealError unless the span of ideal.labels is a two-sided ideal"""
    unknown = [lab for lab in sorted(ideal.labels) if tuple(lab) not in algebra._index]
    if unknown:
        raise IdealError('labels {} are not basis labels of {}'.format(unknown, algebra.name), label=unknown[0])
    inside = set(algebra.index(lab) for lab in ideal.labels)
    for x in sorted(inside):
        for b in range(algebra.dim):
            for product in (algebra.structure[x, b], algebra.structure[b, x]):
                support = set(np.nonzero(product)[0].tolist())
                if not support <= inside:
                    bad = algebra.labels[min(support - inside)]
                    raise IdealError('labels do not span an ideal: {} * {} reaches {}'.format(
                        algebra.labels[x], algebra.labels[b], bad), label=algebra.labels[x])


def quotient_algebra(algebra, ideal, name=None):
    check_monomial_ideal(algebra, ideal)
    surviving = [k for k, lab in enumerate(algebra.labels) if lab not in ideal.labels]
    labels = [algebra.labels[k] for k in surviving]
    structure = algebra.structure[np.ix_(surviving, surviving, surviving)]
    if name is None:
        name = '{}/{}'.format(algebra.name, sorted(ideal.labels)) if ideal.labels else algebra.name
    out = FiniteAlgebra(algebra.field, labels, structure, name=name, opposite=algebra.opposite)
    report = verify_algebra(out)
    assert report.ok, 'quotient by an ideal failed verification: {}'.format(report)
    return out


def opposite_algebra(algebra):
    """same basis, e * f in the result equals f * e in algebra"""
    name = algebra.name[:-3] if algebra.name.endswith('^op') else algebra.name + '^op'
    return FiniteAlgebra(algebra.field, algebra.labels, algebra.structure.transpose(1, 0, 2),
                         name=name, opposite=not algebra.opposite)


class AlgebraReport(object):
    CHECKS = ['associative', 'unital', 'radical_ideal', 'radical_nilpotent', 'semisimple_quotient']

    def __init__(self, algebra):
        self.algebra = algebra
        self.results = {}
        self.witnesses = {}

    def record(self, check, ok, witness=None):
        self.results[check] = ok
        if not ok:
            self.witnesses[check] = witness

    @property
    def ok(self):
        return all(self.results.get(c, False) for c in AlgebraReport.CHECKS)

    @property
    def first_failure(self):
        for c in AlgebraReport.CHECKS:
            if not self.results.get(c, False):
                return c, self.witnesses.get(c)
        return None

    def __repr__(self):
        return get_repr('AlgebraReport', {'algebra': self.algebra.name, 'ok': self.ok},
                        addition='failure:{}'.format(self.first_failure) if not self.ok else '')


def _product_space(algebra, left, right):
    """span of x * y for x in left, y in right"""
    vectors = [algebra.multiply(x, y) for x in left.basis for y in right.basis]
    if not vectors:
        return Subspace.zero(algebra.field, algebra.dim)
    return algebra.field.row_space(np.array(vectors), ambient_dim=algebra.dim)


def verify_algebra(algebra):
    field, t, d = algebra.field, algebra.structure, algebra.dim
    report = AlgebraReport(algebra)

    left_assoc = field.reduce(np.einsum('abk,kcm->abcm', t, t))
    right_assoc = field.reduce(np.einsum('bck,akm->abcm', t, t))
    bad = np.argwhere(left_assoc != right_assoc)
    report.record('associative', bad.size == 0,
                  witness=tuple(algebra.labels[x] for x in bad[0][:3]) if bad.size else None)

    eye = np.eye(d, dtype=np.int64)
    left_unit = field.reduce(np.einsum('a,abk->bk', algebra.unit_coords, t))
    right_unit = field.reduce(np.einsum('b,abk->ak', algebra.unit_coords, t))
    unit_bad = np.argwhere((left_unit != eye).any(axis=1) | (right_unit != eye).any(axis=1))
    report.record('unital', unit_bad.size == 0,
                  witness=algebra.labels[unit_bad[0][0]] if unit_bad.size else None)

    radical = algebra.radical_basis
    full = Subspace.full(field, d)
    ideal_witness = None
    for r in radical.basis:
        for b in full.basis:
            for prod in (algebra.multiply(r, b), algebra.multiply(b, r)):
                if not radical.contains(prod):
                    ideal_witness = (r.tolist(), b.tolist())
                    break
            if ideal_witness:
                break
        if ideal_witness:
            break
    report.record('radical_ideal', ideal_witness is None, witness=ideal_witness)

    power = radical
    for _ in range(d + 1):
        if power.dim == 0:
            break
        power = _product_space(algebra, power, radical)
    report.record('radical_nilpotent', power.dim == 0, witness=power.dim)

    # A/J must be a product of n copies of GF(p) spanned by orthogonal idempotents summing to 1
    idempotents = [e for _, e in algebra.primitive_idempotents]
    quotient_ok = d - radical.dim == algebra.n
    witness = None
    for (i, e), (j, f) in itertools.product(algebra.primitive_idempotents, repeat=2):
        expected = e if i == j else np.zeros(d, dtype=np.int64)
        if not radical.contains(field.reduce(algebra.multiply(e, f) - expected)):
            quotient_ok, witness = False, (i, j)
            break
    if idempotents and not np.array_equal(field.reduce(sum(idempotents)), algebra.unit_coords):
        quotient_ok, witness = False, 'idempotents do not sum to 1'
    report.record('semisimple_quotient', quotient_ok, witness=witness)
    return report


##### projective modules and seriality #####

def projective_right(algebra, i):
    """e_ii * A as a right module, coordinates in the surviving-label basis of e_ii * A"""
    from .modules import regular_module, spin
    if i not in algebra.simple_labels:
        raise IndexError('idempotent index {} out of range {}'.format(i, algebra.simple_labels))
    return spin(regular_module(algebra), [algebra.idempotent(i)]).as_module(
        name='P{}'.format(i) if not algebra.opposite else 'Pl{}'.format(i))


def projective_left(algebra, i):
    """A * e_ii, realized as a right module over the opposite algebra"""
    return projective_right(opposite_algebra(algebra), i)


def is_right_serial(algebra):
    from .modules import is_uniserial
    return all(is_uniserial(projective_right(algebra, i)) for i in algebra.simple_labels)


def is_left_serial(algebra):
    return is_right_serial(opposite_algebra(algebra))


def radical_squared_zero(algebra):
    return _product_space(algebra, algebra.radical_basis, algebra.radical_basis).dim == 0
