"""Exact linear algebra over prime fields GF(p).

Matrices are numpy int64 arrays whose entries are kept reduced mod p.  Vectors are
rows (1-d arrays); a subspace is stored as its reduced row echelon basis, which is
the unique canonical representative, so two Subspaces are equal iff their basis
arrays are identical.
"""
import itertools
import logging

import numpy as np

from .helpers import Caps, CapExceeded, coefficient_tuples, get_repr, or_default

MAX_PRIME = 97


class NotPrimeError(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


def is_prime(n):
    if n < 2:
        return False
    for d in range(2, int(n ** 0.5) + 1):
        if n % d == 0:
            return False
    return True


class PrimeField(object):
    def __init__(self, p):
        if not isinstance(p, (int, np.integer)) or not is_prime(int(p)) or p > MAX_PRIME:
            raise NotPrimeError('field modulus must be a prime 2 <= p <= {}, got {}'.format(MAX_PRIME, p))
        self.p = int(p)
        # inverses of all nonzero residues, index 0 unused
        self._inverses = [0] + [pow(x, self.p - 2, self.p) for x in range(1, self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(('GF', self.p))

    def __repr__(self):
        return 'GF({})'.format(self.p)

    @property
    def order(self):
        return self.p

    def reduce(self, m):
        return np.mod(np.asarray(m, dtype=np.int64), self.p)

    def inv(self, x):
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError('0 has no inverse in {}'.format(self))
        return self._inverses[x]

    def mul(self, *mats):
        out = self.reduce(mats[0])
        for m in mats[1:]:
            out = np.mod(out @ self.reduce(m), self.p)
        return out

    def identity(self, n):
        return np.eye(n, dtype=np.int64)

    def zeros(self, rows, cols):
        return np.zeros((rows, cols), dtype=np.int64)

    def _as_matrix(self, m, cols=None):
        m = self.reduce(m)
        if m.ndim == 1:
            m = m.reshape(1, -1) if m.size else np.zeros((0, cols or 0), dtype=np.int64)
        if m.ndim != 2:
            raise DimensionMismatch('expected a matrix, got array of shape {}'.format(m.shape))
        return m

    ##### elimination #####

    def rref(self, m):
        """returns (reduced row echelon form, rank, pivot columns); zero rows are kept at the bottom"""
        a = self._as_matrix(m).copy()
        rows, cols = a.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nonzero = np.nonzero(a[r:, c])[0]
            if nonzero.size == 0:
                continue
            piv = r + nonzero[0]
            if piv != r:
                a[[r, piv]] = a[[piv, r]]
            a[r] = (a[r] * self.inv(a[r, c])) % self.p
            factors = a[:, c].copy()
            factors[r] = 0
            if factors.any():
                a = np.mod(a - np.outer(factors, a[r]), self.p)
            pivots.append(c)
            r += 1
        return a, r, pivots

    def rank(self, m):
        return self.rref(m)[1]

    def row_space(self, m, ambient_dim=None):
        m = self._as_matrix(m, cols=ambient_dim)
        if ambient_dim is None:
            ambient_dim = m.shape[1]
        if m.shape[0] == 0:
            return Subspace.zero(self, ambient_dim)
        if m.shape[1] != ambient_dim:
            raise DimensionMismatch('rows of length {} in ambient dimension {}'.format(m.shape[1], ambient_dim))
        r, rank, _ = self.rref(m)
        return Subspace(self, ambient_dim, r[:rank], _trusted=True)

    def kernel(self, m):
        """right null space {v : m.v = 0} in canonical form"""
        m = self._as_matrix(m)
        cols = m.shape[1]
        r, rank, pivots = self.rref(m)
        free = [c for c in range(cols) if c not in pivots]
        basis = np.zeros((len(free), cols), dtype=np.int64)
        for k, f in enumerate(free):
            basis[k, f] = 1
            for i, pc in enumerate(pivots):
                basis[k, pc] = (-r[i, f]) % self.p
        return self.row_space(basis, ambient_dim=cols)

    def left_kernel(self, m):
        """{v : v.m = 0} for row vectors v"""
        return self.kernel(self._as_matrix(m).T)

    def solve(self, a, b):
        """solves a.x = b; returns (particular solution or None, kernel of a)

        the particular solution is zero in every free coordinate
        """
        a = self._as_matrix(a)
        b = self.reduce(b)
        if b.ndim == 1:
            b = b.reshape(-1, 1)
        if a.shape[0] != b.shape[0]:
            raise DimensionMismatch('cannot solve {}x{} system with {} right-hand side rows'.format(
                a.shape[0], a.shape[1], b.shape[0]))
        n = a.shape[1]
        kern = self.kernel(a)
        r, rank, pivots = self.rref(np.hstack([a, b]))
        if any(pc >= n for pc in pivots):
            return None, kern
        x = np.zeros((n, b.shape[1]), dtype=np.int64)
        for i, pc in enumerate(pivots):
            x[pc] = r[i, n:]
        return x, kern

    def inverse(self, m):
        """returns (is_invertible, inverse or None) for a square matrix"""
        m = self._as_matrix(m)
        rows, cols = m.shape
        if rows != cols:
            raise DimensionMismatch('invertibility needs a square matrix, got {}x{}'.format(rows, cols))
        r, _, pivots = self.rref(np.hstack([m, self.identity(rows)]))
        # a pivot inside the identity block means m is singular
        if pivots[:rows] != list(range(rows)):
            return False, None
        return True, r[:, rows:].copy()

    def is_invertible(self, m):
        return self.inverse(m)[0]


class Subspace(object):
    """subspace of GF(p)^n held as its reduced row echelon basis (no zero rows)"""

    def __init__(self, field, ambient_dim, basis, _trusted=False):
        self.field = field
        self.ambient_dim = ambient_dim
        if _trusted:
            self.basis = basis
        else:
            canon = field.row_space(basis, ambient_dim=ambient_dim)
            self.basis = canon.basis
        self.basis.setflags(write=False)
        self._pivots = None

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, np.zeros((0, ambient_dim), dtype=np.int64), _trusted=True)

    @classmethod
    def full(cls, field, ambient_dim):
        return cls(field, ambient_dim, field.identity(ambient_dim), _trusted=True)

    @property
    def dim(self):
        return self.basis.shape[0]

    @property
    def pivots(self):
        if self._pivots is None:
            self._pivots = [int(np.nonzero(row)[0][0]) for row in self.basis]
        return self._pivots

    @property
    def non_pivots(self):
        piv = set(self.pivots)
        return [c for c in range(self.ambient_dim) if c not in piv]

    @property
    def key(self):
        return (self.field.p, self.ambient_dim, self.basis.shape, self.basis.tobytes())

    def sort_key(self):
        """(dim, lexicographic canonical basis)"""
        return self.dim, tuple(self.basis.flatten().tolist())

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return get_repr('Subspace', {'p': self.field.p, 'ambient': self.ambient_dim, 'dim': self.dim},
                        addition='basis:{}'.format(self.basis.tolist()))

    def _check_ambient(self, other):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch('ambient mismatch: {} vs {}'.format(
                (self.field, self.ambient_dim), (other.field, other.ambient_dim)))

    def sum(self, other):
        self._check_ambient(other)
        return self.field.row_space(np.vstack([self.basis, other.basis]), ambient_dim=self.ambient_dim)

    def intersect(self, other):
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        # a.U = b.V  <=>  (a, -b) in the left kernel of [U; V]
        combos = self.field.left_kernel(np.vstack([self.basis, other.basis]))
        vectors = self.field.mul(combos.basis[:, :self.dim], self.basis)
        return self.field.row_space(vectors, ambient_dim=self.ambient_dim)

    def coordinates(self, v):
        """coordinates of v in the echelon basis; v must lie in the subspace"""
        v = self.field.reduce(v)
        return v[..., self.pivots]

    def contains(self, v):
        v = self.field.reduce(v)
        if v.shape[-1] != self.ambient_dim:
            raise DimensionMismatch('vector of length {} in ambient dimension {}'.format(
                v.shape[-1], self.ambient_dim))
        rebuilt = self.field.mul(self.coordinates(v), self.basis) if self.dim else np.zeros_like(v)
        return bool(np.array_equal(rebuilt, v))

    def is_subset(self, other):
        self._check_ambient(other)
        if self.dim > other.dim:
            return False
        return all(other.contains(row) for row in self.basis)

    def enumerate_vectors(self, cap=None):
        """all p^dim vectors, lexicographic in their coordinates"""
        if cap is None:
            cap = or_default(None).vectors
        coeffs = np.array(list(coefficient_tuples(self.field.p, self.dim, cap)), dtype=np.int64)
        if self.dim == 0:
            return np.zeros((1, self.ambient_dim), dtype=np.int64)
        return self.field.mul(coeffs, self.basis)


def subspace_sum(u, v):
    return u.sum(v)


def subspace_intersect(u, v):
    return u.intersect(v)


def enumerate_subspaces(field, n, cap=None):
    """every subspace of GF(p)^n, ordered by dimension then canonical basis"""
    if cap is None:
        cap = or_default(None).lattice
    out = []
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            free = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
            for values in itertools.product(range(field.p), repeat=len(free)):
                basis = np.zeros((k, n), dtype=np.int64)
                for i, pc in enumerate(pivots):
                    basis[i, pc] = 1
                for (i, c), val in zip(free, values):
                    basis[i, c] = val
                out.append(Subspace(field, n, basis, _trusted=True))
                if len(out) > cap:
                    raise CapExceeded(Caps.LATTICE, len(out), cap, partial=len(out) - 1)
    logging.debug('enumerated {} subspaces of {}^{}'.format(len(out), field, n))
    return sorted(out, key=Subspace.sort_key)
