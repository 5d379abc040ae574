"""Finite right modules over a FiniteAlgebra.

A module of dimension m is given by one m x m action matrix per algebra basis element,
row-vector convention: v.a = v @ action[a].  A homomorphism M -> N is an
M.dim x N.dim matrix H with action_M[a] @ H == H @ action_N[a] for every basis element a.
"""
import functools
import itertools
import logging

import numpy as np

from .helpers import Caps, CapExceeded, coefficient_tuples, get_repr, or_default
from .linalg import Subspace, enumerate_subspaces


class ModuleValidityError(ValueError):
    pass


class AlgebraMismatch(ValueError):
    pass


def module_cached(fn):
    """caches fn(module, *args) on the (immutable) module"""
    @functools.wraps(fn)
    def wrapper(module, *args, **kwargs):
        key = (fn.__name__,) + args + tuple(sorted(kwargs.items()))
        if key not in module._cache:
            module._cache[key] = fn(module, *args, **kwargs)
        return module._cache[key]
    return wrapper


class RightModule(object):
    def __init__(self, algebra, action, name='', verify=True):
        self.algebra = algebra
        action = algebra.field.reduce(action)
        if action.ndim != 3 or action.shape[0] != algebra.dim or action.shape[1] != action.shape[2]:
            raise ModuleValidityError('action must have shape ({0}, m, m) for an algebra of dim {0}, got {1}'.format(
                algebra.dim, action.shape))
        action.setflags(write=False)
        self.action = action
        self.name = name
        self._cache = {}
        if verify:
            problem = module_violation(self)
            if problem is not None:
                raise ModuleValidityError('{} is not a right module: {}'.format(name or 'module', problem))

    @property
    def dim(self):
        return self.action.shape[1]

    @property
    def field(self):
        return self.algebra.field

    @property
    def key(self):
        return self.algebra.key, self.action.tobytes(), self.dim

    def rho(self, x):
        """action matrix of the algebra element with coordinates x"""
        return self.field.reduce(np.einsum('a,amn->mn', self.field.reduce(x), self.action))

    def idempotent_action(self, i):
        return self.rho(self.algebra.idempotent(i))

    def radical_actions(self):
        return [self.rho(r) for r in self.algebra.radical_basis.basis]

    def act(self, v, x):
        return self.field.mul(v, self.rho(x))

    def full(self):
        return Submodule(self, Subspace.full(self.field, self.dim), _trusted=True)

    def zero(self):
        return Submodule(self, Subspace.zero(self.field, self.dim), _trusted=True)

    def change_basis(self, g, name=None):
        """isomorphic copy with action g.rho.g^-1; g intertwines the copy to self"""
        ok, g_inv = self.field.inverse(g)
        if not ok:
            raise ModuleValidityError('change of basis matrix is singular')
        action = self.field.reduce(np.einsum('mk,akl,ln->amn', g, self.action, g_inv))
        return RightModule(self.algebra, action, name=name or self.name + "'", verify=False)

    def __eq__(self, other):
        return isinstance(other, RightModule) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return get_repr('RightModule', {'name': self.name, 'algebra': self.algebra.name, 'dim': self.dim})


def module_violation(module):
    """first violated representation axiom, or None"""
    field, algebra, action = module.field, module.algebra, module.action
    eye = field.identity(module.dim)
    if not np.array_equal(module.rho(algebra.unit_coords), eye):
        return 'the unit does not act as the identity'
    # rho(a) rho(b) == sum_c T[a, b, c] rho(c)
    products = field.reduce(np.einsum('amk,bkn->abmn', action, action))
    expected = field.reduce(np.einsum('abc,cmn->abmn', algebra.structure, action))
    bad = np.argwhere((products != expected).any(axis=(2, 3)))
    if bad.size:
        a, b = bad[0]
        return 'rho({})rho({}) != rho({}*{})'.format(algebra.labels[a], algebra.labels[b],
                                                     algebra.labels[a], algebra.labels[b])
    return None


class Submodule(object):
    def __init__(self, parent, space, _trusted=False):
        self.parent = parent
        self.space = space
        self._module = None
        if not _trusted and not is_action_closed(parent, space):
            raise ModuleValidityError('subspace is not closed under the action of {}'.format(parent.algebra.name))

    @property
    def dim(self):
        return self.space.dim

    @property
    def basis(self):
        return self.space.basis

    @property
    def key(self):
        return self.space.key

    def sort_key(self):
        return self.space.sort_key()

    def as_module(self, name=None):
        if self._module is None or name is not None:
            field = self.parent.field
            pivots = self.space.pivots
            moved = field.reduce(np.einsum('km,amn->akn', self.basis, self.parent.action))
            action = moved[:, :, pivots]
            module = RightModule(self.parent.algebra, action, verify=False,
                                 name=name or 'sub({})'.format(self.parent.name))
            if name is not None:
                return module
            self._module = module
        return self._module

    def contains(self, v):
        return self.space.contains(v)

    def is_subset(self, other):
        return self.space.is_subset(other.space)

    def sum(self, other):
        return Submodule(self.parent, self.space.sum(other.space), _trusted=True)

    def intersect(self, other):
        return Submodule(self.parent, self.space.intersect(other.space), _trusted=True)

    def __eq__(self, other):
        return isinstance(other, Submodule) and self.parent.key == other.parent.key and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return get_repr('Submodule', {'of': self.parent.name, 'dim': self.dim},
                        addition='basis:{}'.format(self.basis.tolist()))


def is_action_closed(module, space):
    for a in range(module.algebra.dim):
        for row in module.field.mul(space.basis, module.action[a]) if space.dim else []:
            if not space.contains(row):
                return False
    return True


class ModuleHom(object):
    def __init__(self, source, target, matrix, verify=False):
        self.source = source
        self.target = target
        self.matrix = source.field.reduce(matrix).reshape(source.dim, target.dim)
        if verify and not is_intertwiner(source, target, self.matrix):
            raise ModuleValidityError('matrix does not intertwine {} and {}'.format(source.name, target.name))

    @property
    def field(self):
        return self.source.field

    def __call__(self, v):
        return self.field.mul(v, self.matrix)

    def then(self, other):
        """self followed by other"""
        return ModuleHom(self.source, other.target, self.field.mul(self.matrix, other.matrix))

    def image(self):
        return Submodule(self.target, self.field.row_space(self.matrix, ambient_dim=self.target.dim),
                         _trusted=True)

    def kernel(self):
        return Submodule(self.source, self.field.left_kernel(self.matrix)
                         if self.source.dim else Subspace.zero(self.field, 0), _trusted=True)

    def rank(self):
        return self.field.rank(self.matrix) if self.matrix.size else 0

    def is_injective(self):
        return self.rank() == self.source.dim

    def is_isomorphism(self):
        return self.source.dim == self.target.dim and self.is_injective()

    def __repr__(self):
        return get_repr('ModuleHom', {'source': self.source.name, 'target': self.target.name},
                        addition='matrix:{}'.format(self.matrix.tolist()))


def is_intertwiner(source, target, matrix):
    field = source.field
    for a in range(source.algebra.dim):
        if not np.array_equal(field.mul(source.action[a], matrix), field.mul(matrix, target.action[a])):
            return False
    return True


class HomSpace(object):
    """all intertwiners source -> target, as a GF(p)-basis of matrices"""

    def __init__(self, source, target, basis):
        self.source = source
        self.target = target
        self.basis = [source.field.reduce(b) for b in basis]
        flat = np.array([b.flatten() for b in self.basis], dtype=np.int64).reshape(
            len(self.basis), source.dim * target.dim)
        self.space = source.field.row_space(flat, ambient_dim=source.dim * target.dim)
        assert self.space.dim == len(self.basis), 'hom basis is not linearly independent'

    @property
    def dim(self):
        return len(self.basis)

    @property
    def size(self):
        return self.source.field.p ** self.dim

    @property
    def is_endomorphism_algebra(self):
        return self.source is self.target or self.source == self.target

    def combination(self, coeffs):
        field = self.source.field
        out = field.zeros(self.source.dim, self.target.dim)
        for c, b in zip(coeffs, self.basis):
            if c:
                out = out + c * b
        return field.reduce(out)

    def elements(self, caps=None):
        """every element, in lexicographic order of basis coefficients"""
        caps = or_default(caps)
        for coeffs in coefficient_tuples(self.source.field.p, self.dim, caps.homs, kind=Caps.HOMS):
            yield self.combination(coeffs)

    def contains(self, matrix):
        return self.space.contains(self.source.field.reduce(matrix).flatten())

    def coordinates(self, matrix):
        """coefficients of matrix in self.basis"""
        field = self.source.field
        flat = np.array([b.flatten() for b in self.basis], dtype=np.int64)
        x, _ = field.solve(flat.T, field.reduce(matrix).flatten())
        assert x is not None, 'matrix is not in the hom space'
        return x.flatten()

    def composition_table(self):
        """table[i][j] = coordinates of basis[i] followed by basis[j] (endomorphism algebras only)"""
        assert self.is_endomorphism_algebra, 'composition table needs source == target'
        field = self.source.field
        return [[self.coordinates(field.mul(bi, bj)).tolist() for bj in self.basis] for bi in self.basis]

    def __repr__(self):
        return get_repr('HomSpace', {'source': self.source.name, 'target': self.target.name, 'dim': self.dim})


def _same_algebra(*modules):
    keys = set(m.algebra.key for m in modules)
    if len(keys) > 1:
        raise AlgebraMismatch('modules over different algebras: {}'.format([m.algebra.name for m in modules]))


##### construction #####

def regular_module(algebra):
    action = np.array([algebra.right_multiplication(b) for b in range(algebra.dim)], dtype=np.int64)
    return RightModule(algebra, action, name='{}_A'.format(algebra.name), verify=False)


def simple_module(algebra, i):
    if i not in algebra.simple_labels:
        raise IndexError('simple label {} out of range {}'.format(i, algebra.simple_labels))
    action = np.zeros((algebra.dim, 1, 1), dtype=np.int64)
    action[algebra.index((i, i)), 0, 0] = 1
    return RightModule(algebra, action, name='S{}'.format(i), verify=False)


def zero_module(algebra):
    return RightModule(algebra, np.zeros((algebra.dim, 0, 0), dtype=np.int64), name='0', verify=False)


def spin(module, vectors):
    """smallest submodule containing vectors"""
    field = module.field
    vectors = field.reduce(vectors).reshape(-1, module.dim) if module.dim else np.zeros((0, 0), dtype=np.int64)
    space = field.row_space(vectors, ambient_dim=module.dim)
    while True:
        if space.dim == 0:
            break
        moved = field.reduce(np.einsum('km,amn->akn', space.basis, module.action)).reshape(-1, module.dim)
        bigger = field.row_space(np.vstack([space.basis, moved]), ambient_dim=module.dim)
        if bigger.dim == space.dim:
            break
        space = bigger
    return Submodule(module, space, _trusted=True)


def submodule_from_vectors(module, vectors):
    """the span of vectors, which must already be action-closed"""
    return Submodule(module, module.field.row_space(vectors, ambient_dim=module.dim))


def quotient_module(module, sub, name=None):
    """returns (M/N, projection M -> M/N); coordinates are the non-pivot columns of N"""
    if sub.parent.key != module.key:
        raise ModuleValidityError('submodule does not belong to {}'.format(module.name))
    field = module.field
    keep = sub.space.non_pivots
    proj = np.zeros((module.dim, len(keep)), dtype=np.int64)
    for k, c in enumerate(keep):
        proj[c, k] = 1
    for r, pc in enumerate(sub.space.pivots):
        proj[pc] = field.reduce(-sub.basis[r, keep])
    lift = np.eye(module.dim, dtype=np.int64)[keep]
    action = field.reduce(np.einsum('km,amn,nq->akq', lift, module.action, proj))
    quotient = RightModule(module.algebra, action, verify=False,
                           name=name or '{}/({})'.format(module.name, sub.dim))
    return quotient, ModuleHom(module, quotient, proj)


def direct_sum(modules, name=None):
    """returns (sum, injections, projections) with block-diagonal action"""
    if not modules:
        raise ValueError('direct sum of an empty list needs an algebra; use zero_module')
    _same_algebra(*modules)
    algebra = modules[0].algebra
    total = sum(m.dim for m in modules)
    action = np.zeros((algebra.dim, total, total), dtype=np.int64)
    injections, projections, offset = [], [], 0
    for m in modules:
        block = slice(offset, offset + m.dim)
        action[:, block, block] = m.action
        inj = np.zeros((m.dim, total), dtype=np.int64)
        inj[:, block] = np.eye(m.dim, dtype=np.int64)
        offset += m.dim
        injections.append(inj)
        projections.append(inj.T.copy())
    out = RightModule(algebra, action, verify=False,
                      name=name or '+'.join(m.name or '?' for m in modules))
    injections = [ModuleHom(m, out, inj) for m, inj in zip(modules, injections)]
    projections = [ModuleHom(out, m, pr) for m, pr in zip(modules, projections)]
    return out, injections, projections


##### socle, radical and composition structure #####

@module_cached
def socle(module):
    """{v : v.J = 0}"""
    field = module.field
    actions = module.radical_actions()
    if not actions or module.dim == 0:
        return module.full()
    return Submodule(module, field.left_kernel(np.hstack(actions)), _trusted=True)


@module_cached
def radical_submodule(module):
    """M.J, the sum of the images of the radical basis"""
    actions = module.radical_actions()
    if not actions or module.dim == 0:
        return module.zero()
    return Submodule(module, module.field.row_space(np.vstack(actions), ambient_dim=module.dim), _trusted=True)


def submodule_radical(sub):
    """N.J for a submodule N, as a submodule of the same parent"""
    module, field = sub.parent, sub.parent.field
    actions = module.radical_actions()
    if not actions or sub.dim == 0:
        return module.zero()
    moved = np.vstack([field.mul(sub.basis, r) for r in actions])
    return Submodule(module, field.row_space(moved, ambient_dim=module.dim), _trusted=True)


@module_cached
def radical_series(module):
    """M > MJ > MJ^2 > ... > 0"""
    series = [module.full()]
    while series[-1].dim > 0:
        nxt = submodule_radical(series[-1])
        assert nxt.dim < series[-1].dim, 'radical series is not strictly decreasing'
        series.append(nxt)
    return series


@module_cached
def socle_series(module):
    """0 < Soc < Soc^2 < ... < M, each term the preimage of the socle of the quotient by the previous"""
    field = module.field
    series = [module.zero()]
    actions = module.radical_actions()
    while series[-1].dim < module.dim:
        prev = series[-1]
        _, proj = quotient_module(module, prev)
        if actions:
            nxt = field.left_kernel(np.hstack([field.mul(r, proj.matrix) for r in actions]))
        else:
            nxt = Subspace.full(field, module.dim)
        assert nxt.dim > prev.dim, 'socle series is not strictly increasing'
        series.append(Submodule(module, nxt, _trusted=True))
    return series


def layer_labels(upper, lower):
    """sorted simple labels (with multiplicity) of the semisimple subquotient upper/lower"""
    module, field = upper.parent, upper.parent.field
    labels = []
    for i in module.algebra.simple_labels:
        if upper.dim == 0:
            break
        moved = field.mul(upper.basis, module.idempotent_action(i))
        mult = field.row_space(np.vstack([moved, lower.basis]) if lower.dim else moved,
                               ambient_dim=module.dim).dim - lower.dim
        labels += [i] * mult
    return labels


@module_cached
def radical_layers(module):
    series = radical_series(module)
    return [layer_labels(series[k], series[k + 1]) for k in range(len(series) - 1)]


@module_cached
def socle_layers(module):
    series = socle_series(module)
    return [layer_labels(series[k + 1], series[k]) for k in range(len(series) - 1)]


def composition_factors(module):
    return sorted(label for layer in radical_layers(module) for label in layer)


def composition_length(module):
    return sum(len(layer) for layer in radical_layers(module))


def socle_labels(module):
    return layer_labels(socle(module), module.zero())


def top_labels(module):
    return layer_labels(module.full(), radical_submodule(module))


def goldie_dimension(module):
    """number of simple summands of the (essential) socle"""
    return len(socle_labels(module))


def singular_submodule(module, caps=None):
    """Z(M) = {m : ann_r(m) essential in A_A}, computed element by element"""
    caps = or_default(caps)
    field, algebra = module.field, module.algebra
    if module.dim == 0:
        return module.zero()
    soc_a = socle(regular_module(algebra)).space
    singular = []
    for m in module.full().space.enumerate_vectors(caps.vectors):
        # row a of images is m.e_a, so ann_r(m) is the left kernel
        images = field.reduce(np.einsum('m,amn->an', m, module.action))
        annihilator = field.left_kernel(images)
        if soc_a.is_subset(annihilator):
            singular.append(m)
    return Submodule(module, field.row_space(np.array(singular), ambient_dim=module.dim), _trusted=True)


##### submodule lattice #####

@module_cached
def submodule_lattice(module, caps=None):
    """every submodule, sorted by (dim, canonical basis)

    every submodule N is the sum of the cyclic submodules v.A with v in some N.e_ii, so the
    cyclic generators come from the spaces M.e_ii and the rest is closure under sums
    """
    caps = or_default(caps)
    field = module.field
    found = {}
    zero = module.zero()
    found[zero.key] = zero
    cyclic = []
    for i in module.algebra.simple_labels:
        if module.dim == 0:
            break
        corner = field.row_space(module.idempotent_action(i), ambient_dim=module.dim)
        for v in corner.enumerate_vectors(caps.vectors):
            nonzero = np.nonzero(v)[0]
            # scalar multiples generate the same cyclic submodule
            if nonzero.size == 0 or v[nonzero[0]] != 1:
                continue
            sub = spin(module, [v])
            if sub.key not in found:
                found[sub.key] = sub
                cyclic.append(sub)
    frontier = list(found.values())
    while frontier:
        fresh = []
        for a in frontier:
            for c in cyclic:
                if c.is_subset(a):
                    continue
                s = a.sum(c)
                if s.key not in found:
                    found[s.key] = s
                    fresh.append(s)
                    if len(found) > caps.lattice:
                        raise CapExceeded(Caps.LATTICE, len(found), caps.lattice, partial=len(found) - 1)
        frontier = fresh
    lattice = sorted(found.values(), key=Submodule.sort_key)
    logging.debug('{} has {} submodules'.format(module.name, len(lattice)))
    return lattice


def brute_force_lattice(module, caps=None):
    """every action-closed subspace, found by filtering all subspaces"""
    caps = or_default(caps)
    subs = enumerate_subspaces(module.field, module.dim, cap=caps.lattice)
    return [Submodule(module, s, _trusted=True) for s in subs if is_action_closed(module, s)]


def lattice_is_chain(lattice):
    return all(a.is_subset(b) or b.is_subset(a) for a, b in itertools.combinations(lattice, 2))


##### homomorphisms #####

def hom_space(source, target):
    _same_algebra(source, target)
    field = source.field
    m, n = source.dim, target.dim
    if m == 0 or n == 0:
        return HomSpace(source, target, [])
    eye_m, eye_n = np.eye(m, dtype=np.int64), np.eye(n, dtype=np.int64)
    # row-major vec: vec(A H) = (A kron I) vec(H), vec(H B) = (I kron B^T) vec(H)
    system = np.vstack([np.kron(source.action[a], eye_n) - np.kron(eye_m, target.action[a].T)
                        for a in range(source.algebra.dim)])
    kern = field.kernel(system)
    return HomSpace(source, target, [row.reshape(m, n) for row in kern.basis])


@module_cached
def end_space(module):
    return hom_space(module, module)


def invariants(module):
    """isomorphism invariants used to reject non-isomorphic pairs cheaply"""
    return (module.dim,
            tuple(tuple(layer) for layer in radical_layers(module)),
            tuple(tuple(layer) for layer in socle_layers(module)))


def is_isomorphic(source, target, caps=None):
    """returns (bool, witness isomorphism or None)"""
    if source.algebra.key != target.algebra.key:
        return False, None
    if invariants(source) != invariants(target):
        return False, None
    if source.dim == 0:
        return True, ModuleHom(source, target, np.zeros((0, 0), dtype=np.int64))
    homs = hom_space(source, target)
    if homs.dim == 0:
        return False, None
    for h in homs.elements(caps):
        if source.field.is_invertible(h):
            return True, ModuleHom(source, target, h)
    return False, None


##### idempotents and decomposition #####

@module_cached
def idempotent_endos(module, caps=None):
    field = module.field
    out = []
    for e in end_space(module).elements(caps):
        if np.array_equal(field.mul(e, e), e):
            out.append(ModuleHom(module, module, e))
    return out


@module_cached
def summands(module, caps=None):
    """distinct direct summands (images of idempotent endomorphisms), sorted"""
    found = {}
    for e in idempotent_endos(module, caps):
        image = e.image()
        found.setdefault(image.key, image)
    return sorted(found.values(), key=Submodule.sort_key)


def nontrivial_idempotent(module, caps=None):
    eye = np.eye(module.dim, dtype=np.int64)
    for e in idempotent_endos(module, caps):
        if e.matrix.any() and not np.array_equal(e.matrix, eye):
            return e
    return None


def decompose_indecomposable(module, caps=None):
    """indecomposable modules whose direct sum is isomorphic to module"""
    if module.dim == 0:
        return []
    e = nontrivial_idempotent(module, caps)
    if e is None:
        return [module]
    image, kernel = e.image(), e.kernel()
    return decompose_indecomposable(image.as_module(), caps) + decompose_indecomposable(kernel.as_module(), caps)


##### predicates #####

def is_simple(module):
    return composition_length(module) == 1


def is_semisimple(module):
    return radical_submodule(module).dim == 0


def is_local(module):
    """M / rad(M) is simple"""
    return module.dim > 0 and module.dim - radical_submodule(module).dim == 1


def is_uniform(module):
    return socle(module).dim == 1


def is_uniserial(module):
    """every radical layer is simple (or zero)"""
    return all(len(layer) <= 1 for layer in radical_layers(module))


def is_indecomposable(module, caps=None):
    return module.dim > 0 and nontrivial_idempotent(module, caps) is None


def is_essential(sub, module=None):
    """over an artinian algebra N is essential in M iff Soc(M) is contained in N"""
    module = sub.parent if module is None else module
    return socle(module).is_subset(sub)


def is_essential_extension(sub, module=None):
    """(True, None), or (False, v) with span(v) a simple submodule meeting sub in 0"""
    module = sub.parent if module is None else module
    field = module.field
    soc = socle(module)
    for label in module.algebra.simple_labels:
        component = field.mul(soc.basis, module.idempotent_action(label))
        for v in component:
            if v.any() and not sub.contains(v):
                return False, v
    return True, None


def socle_square_free(module):
    labels = socle_labels(module)
    return len(labels) == len(set(labels))
