"""Injective hulls and the injectivity hierarchy.

E(S_i) is built as the linear dual of the indecomposable projective left module A.e_ii;
the hull of M is the direct sum of E(S_i) over the socle labels of M, with an embedding
found by extending a socle isomorphism through the intertwining equations.
"""
import functools
import itertools
import logging

import numpy as np

from .helpers import CapExceeded, get_repr, or_default, in_enum_values
from .algebra import projective_left
from .modules import (RightModule, Submodule, ModuleHom, socle, socle_labels,
                      direct_sum, zero_module, end_space, hom_space, submodule_lattice, summands,
                      quotient_module, is_isomorphic, invariants, composition_length, goldie_dimension,
                      is_uniform, is_uniserial, is_local, is_indecomposable, socle_square_free, module_cached)
from . import types


class Decision(object):
    """outcome of a decision procedure; witness describes the first failure found"""

    def __init__(self, ok, witness=None, **data):
        self.ok = bool(ok)
        self.witness = witness
        self.data = data

    def __bool__(self):
        return self.ok

    def __repr__(self):
        params = {'ok': self.ok}
        params.update(self.data)
        return get_repr('Decision', params, addition='witness:{}'.format(self.witness) if self.witness else '')


def _rows(m):
    return np.asarray(m).tolist()


@functools.lru_cache(maxsize=None)
def indecomposable_injective(algebra, i):
    """E(S_i) = Hom(A.e_ii, GF(p)) with (f.a)(x) = f(a.x)"""
    left = projective_left(algebra, i)
    action = np.transpose(left.action, (0, 2, 1))
    injective = RightModule(algebra, action, name='E{}'.format(i))
    labels = socle_labels(injective)
    assert labels == [i], 'socle of E({}) has labels {}'.format(i, labels)
    return injective


class InjectiveHull(object):
    def __init__(self, source, hull, embedding, blocks, injections, projections):
        self.source = source
        self.hull = hull
        self.embedding = embedding
        # [(label, E(S_label))] in block order
        self.blocks = blocks
        self.injections = injections
        self.projections = projections

    @property
    def summand_structure(self):
        counts = {}
        for label, _ in self.blocks:
            counts[label] = counts.get(label, 0) + 1
        return sorted(counts.items())

    @property
    def dim(self):
        return self.hull.dim

    def image(self):
        """iota(M) as a submodule of E"""
        return self.embedding.image()

    def block_submodule(self, indices):
        """the direct sum of the chosen blocks, as a submodule of E"""
        field = self.hull.field
        rows = [self.injections[k].matrix for k in indices if self.blocks[k][1].dim]
        if not rows:
            return self.hull.zero()
        return Submodule(self.hull, field.row_space(np.vstack(rows), ambient_dim=self.hull.dim), _trusted=True)

    def is_essential(self):
        return socle(self.hull).is_subset(self.image())

    def transports_socle(self):
        """iota maps Soc(M) onto Soc(E)"""
        soc = socle(self.source)
        moved = self.embedding.field.row_space(self.embedding(soc.basis), ambient_dim=self.hull.dim) \
            if soc.dim else self.hull.zero().space
        return moved == socle(self.hull).space

    def __repr__(self):
        return get_repr('InjectiveHull', {'source': self.source.name, 'dim': self.dim,
                                          'blocks': self.summand_structure})


@module_cached
def injective_hull(module):
    algebra, field = module.algebra, module.field
    blocks = [(label, indecomposable_injective(algebra, label)) for label in socle_labels(module)]
    if not blocks:
        hull = zero_module(algebra)
        embedding = ModuleHom(module, hull, np.zeros((module.dim, 0), dtype=np.int64))
        return InjectiveHull(module, hull, embedding, [], [], [])
    hull, injections, projections = direct_sum([b for _, b in blocks], name='E({})'.format(module.name))
    m, e = module.dim, hull.dim

    # socle generators of M, grouped by label in the same order as the blocks
    soc = socle(module)
    sources = []
    for label in sorted(set(lab for lab, _ in blocks)):
        part = field.row_space(field.mul(soc.basis, module.idempotent_action(label)), ambient_dim=m)
        sources += list(part.basis)
    targets = [inj(socle(block).basis[0]) for (_, block), inj in zip(blocks, injections)]
    assert len(sources) == len(targets), 'socle of {} does not match the hull blocks'.format(module.name)

    eye_m, eye_e = np.eye(m, dtype=np.int64), np.eye(e, dtype=np.int64)
    system = [np.kron(module.action[a], eye_e) - np.kron(eye_m, hull.action[a].T) for a in range(algebra.dim)]
    rhs = [np.zeros(m * e, dtype=np.int64)] * algebra.dim
    for u, t in zip(sources, targets):
        system.append(np.kron(u.reshape(1, m), eye_e))
        rhs.append(np.asarray(t).flatten())
    x, _ = field.solve(np.vstack(system), np.concatenate(rhs))
    assert x is not None, 'socle embedding of {} does not extend to its hull'.format(module.name)
    embedding = ModuleHom(module, hull, x.reshape(m, e))
    assert embedding.is_injective(), 'hull embedding of {} is not injective'.format(module.name)
    logging.debug('hull of {}: dim {} blocks {}'.format(module.name, e, [lab for lab, _ in blocks]))
    return InjectiveHull(module, hull, embedding, blocks, injections, projections)


def is_injective(module):
    return injective_hull(module).dim == module.dim


##### hierarchy #####

@module_cached
def is_quasi_injective(module):
    """iota(M) is invariant under a basis (hence all) of End(E(M))"""
    hull = injective_hull(module)
    image = hull.image()
    field = module.field
    for f in end_space(hull.hull).basis:
        for v, moved in zip(module.full().basis, field.mul(hull.embedding.matrix, f)):
            if not image.contains(moved):
                return Decision(False, witness={'endomorphism': _rows(f), 'element': _rows(v)})
    return Decision(True)


def automorphisms(module, caps=None):
    """invertible endomorphisms of module, in enumeration order"""
    field = module.field
    for f in end_space(module).elements(caps):
        if field.is_invertible(f):
            yield f


@module_cached
def is_automorphism_invariant(module, caps=None):
    """every automorphism of E(M) maps iota(M) into itself; reports |End(E)| and |Aut(E)|"""
    hull = injective_hull(module)
    if hull.dim == 0:
        return Decision(True, end_hull_size=1, aut_hull_size=1)
    field = module.field
    image = hull.image()
    units, witness = 0, None
    for sigma in automorphisms(hull.hull, caps):
        units += 1
        if witness is None and not all(image.contains(row) for row in field.mul(image.basis, sigma)):
            witness = {'automorphism': _rows(sigma)}
    return Decision(witness is None, witness=witness, end_hull_size=end_space(hull.hull).size,
                    aut_hull_size=units)


@module_cached
def is_pseudo_injective(module, caps=None):
    """every monomorphism N -> M from a submodule extends to an endomorphism of M"""
    field = module.field
    ends = end_space(module).basis
    for sub in submodule_lattice(module, caps):
        if sub.dim == 0:
            continue
        homs = hom_space(sub.as_module(), module)
        restricted = field.row_space(np.array([field.mul(sub.basis, g).flatten() for g in ends]),
                                     ambient_dim=sub.dim * module.dim)
        if restricted.dim == homs.dim:
            continue
        for f in homs.elements(caps):
            if field.rank(f) == sub.dim and not restricted.contains(f.flatten()):
                return Decision(False, witness={'submodule': _rows(sub.basis), 'monomorphism': _rows(f)})
    return Decision(True)


def extends_essential_isomorphisms(module, caps=None):
    """every isomorphism between essential submodules is the restriction of an automorphism"""
    field = module.field
    autos = list(automorphisms(module, caps))
    essentials = [s for s in submodule_lattice(module, caps) if socle(module).is_subset(s)]
    for n1, n2 in itertools.product(essentials, repeat=2):
        if n1.dim != n2.dim or invariants(n1.as_module()) != invariants(n2.as_module()):
            continue
        restrictions = set(field.mul(n1.basis, g).tobytes() for g in autos)
        for f in hom_space(n1.as_module(), n2.as_module()).elements(caps):
            if not field.is_invertible(f):
                continue
            if field.mul(f, n2.basis).tobytes() not in restrictions:
                return Decision(False, witness={'source': _rows(n1.basis), 'target': _rows(n2.basis),
                                                'isomorphism': _rows(f)})
    return Decision(True)


def is_square_free(module):
    """no submodule isomorphic to X + X; over a basic algebra a square S_i + S_i already sits in the socle"""
    field = module.field
    soc = socle(module)
    for label in module.algebra.simple_labels:
        component = field.row_space(field.mul(soc.basis, module.idempotent_action(label)), ambient_dim=module.dim)
        if component.dim > 1:
            return Decision(False, witness={'label': label, 'square': _rows(component.basis[:2])})
    return Decision(True)



##### summand conditions #####

@module_cached
def check_C1(module, caps=None):
    """every submodule is essential in a direct summand"""
    soc = socle(module)
    blocks = summands(module, caps)
    for sub in submodule_lattice(module, caps):
        if not any(sub.is_subset(d) and soc.intersect(d).is_subset(sub) for d in blocks):
            return Decision(False, witness={'submodule': _rows(sub.basis)})
    return Decision(True)


@module_cached
def check_C2(module, caps=None):
    """a submodule isomorphic to a summand is a summand"""
    blocks = summands(module, caps)
    keys = set(d.key for d in blocks)
    for d in blocks:
        target = d.as_module()
        for sub in submodule_lattice(module, caps):
            if sub.key in keys or sub.dim != d.dim:
                continue
            if is_isomorphic(sub.as_module(), target, caps)[0]:
                return Decision(False, witness={'submodule': _rows(sub.basis), 'summand': _rows(d.basis)})
    return Decision(True)


@module_cached
def check_C3(module, caps=None):
    """the sum of two summands meeting in zero is a summand"""
    blocks = summands(module, caps)
    keys = set(d.key for d in blocks)
    for a, b in itertools.combinations(blocks, 2):
        if a.intersect(b).dim == 0 and a.sum(b).key not in keys:
            return Decision(False, witness={'first': _rows(a.basis), 'second': _rows(b.basis)})
    return Decision(True)


##### relative injectivity and projectivity #####

def is_relatively_injective(module, other, caps=None):
    """module is other-injective: maps from any submodule of other into module extend to other"""
    field = module.field
    homs = hom_space(other, module).basis
    for sub in submodule_lattice(other, caps):
        if sub.dim == 0:
            continue
        target = hom_space(sub.as_module(), module)
        if target.dim == 0:
            continue
        restricted = field.rank(np.array([field.mul(sub.basis, h).flatten() for h in homs])) if homs else 0
        if restricted < target.dim:
            return Decision(False, witness={'submodule': _rows(sub.basis)})
    return Decision(True)


@module_cached
def is_quasi_projective(module, caps=None):
    """every map M -> M/C lifts through the projection to an endomorphism of M"""
    field = module.field
    ends = end_space(module).basis
    for sub in submodule_lattice(module, caps):
        if sub.dim == module.dim:
            continue
        quotient, projection = quotient_module(module, sub)
        target = hom_space(module, quotient)
        lifted = field.rank(np.array([field.mul(g, projection.matrix).flatten() for g in ends])) if ends else 0
        if lifted < target.dim:
            return Decision(False, witness={'submodule': _rows(sub.basis)})
    return Decision(True)


##### profile #####

class PropertyProfile(object):
    """flags are True, False or None (undecided because an enumeration cap was hit)"""

    def __init__(self, module):
        self.module = module
        self.flags = {}
        self.numbers = {}
        self.witnesses = {}
        self.notices = []
        self.undecided = []

    def set_flag(self, flag, decision):
        assert in_enum_values(flag, types.ProfileFlag), flag
        if decision is None:
            self.flags[flag] = None
            return
        self.flags[flag] = bool(decision)
        if isinstance(decision, Decision) and not decision.ok and decision.witness is not None:
            self.witnesses[flag] = decision.witness

    def __getitem__(self, flag):
        return self.flags[flag]

    @property
    def cap_exceeded(self):
        return bool(self.undecided)

    def consistency_violations(self):
        """implications the flags must satisfy"""
        out = []
        chain = types.HIERARCHY_CHAIN
        for stronger, weaker in zip(chain, chain[1:]):
            if self.flags.get(stronger) and self.flags.get(weaker) is False:
                out.append('{} without {}'.format(stronger, weaker))
        c1, c2, c3 = (self.flags.get(f) for f in (types.C1, types.C2, types.C3))
        if None not in (c1, c2) and self.flags.get(types.CONTINUOUS) != (c1 and c2):
            out.append('continuous != C1 and C2')
        if None not in (c1, c3) and self.flags.get(types.QUASI_CONTINUOUS) != (c1 and c3):
            out.append('quasi_continuous != C1 and C3')
        if self.flags.get(types.QUASI_INJECTIVE) and self.flags.get(types.CONTINUOUS) is False:
            out.append('quasi_injective without continuous')
        return out

    def as_dict(self):
        return {'module': self.module.name,
                'flags': {k: self.flags.get(k) for k in sorted(self.flags)},
                'numbers': {k: self.numbers[k] for k in sorted(self.numbers)},
                'socle_labels': socle_labels(self.module),
                'witnesses': {k: self.witnesses[k] for k in sorted(self.witnesses)},
                'notices': list(self.notices),
                'undecided': list(self.undecided)}

    def __repr__(self):
        return get_repr('PropertyProfile', {'module': self.module.name, 'flags': self.flags})


def property_profile(module, caps=None):
    caps = or_default(caps)
    profile = PropertyProfile(module)

    def attempt(flag, fn):
        try:
            profile.set_flag(flag, fn())
        except CapExceeded as e:
            profile.set_flag(flag, None)
            profile.undecided.append(flag)
            profile.notices.append('{} undecided: {}'.format(flag, e))
            logging.warning('{} of {} undecided: {}'.format(flag, module.name, e))

    hull = injective_hull(module)
    profile.numbers[types.DIM] = module.dim
    profile.numbers[types.COMPOSITION_LENGTH] = composition_length(module)
    profile.numbers[types.GOLDIE_DIMENSION] = goldie_dimension(module)

    profile.set_flag(types.INJECTIVE, Decision(hull.dim == module.dim, witness=None if hull.dim == module.dim
                                               else {'hull_dim': hull.dim}))
    profile.set_flag(types.QUASI_INJECTIVE, is_quasi_injective(module))
    attempt(types.PSEUDO_INJECTIVE, lambda: is_pseudo_injective(module, caps))

    def automorphism_invariant():
        ai = is_automorphism_invariant(module, caps)
        profile.numbers[types.END_HULL_SIZE] = ai.data['end_hull_size']
        profile.numbers[types.AUT_HULL_SIZE] = ai.data['aut_hull_size']
        return ai

    attempt(types.AUTOMORPHISM_INVARIANT, automorphism_invariant)

    attempt(types.C1, lambda: check_C1(module, caps))
    attempt(types.C2, lambda: check_C2(module, caps))
    attempt(types.C3, lambda: check_C3(module, caps))
    c1, c2, c3 = (profile.flags[f] for f in (types.C1, types.C2, types.C3))
    profile.flags[types.CS] = c1
    profile.flags[types.CONTINUOUS] = None if None in (c1, c2) else c1 and c2
    profile.flags[types.QUASI_CONTINUOUS] = None if None in (c1, c3) else c1 and c3

    attempt(types.QUASI_PROJECTIVE, lambda: is_quasi_projective(module, caps))
    profile.set_flag(types.UNIFORM, is_uniform(module))
    profile.set_flag(types.UNISERIAL, is_uniserial(module))
    profile.set_flag(types.LOCAL, is_local(module))
    attempt(types.INDECOMPOSABLE, lambda: is_indecomposable(module, caps))
    profile.set_flag(types.SQUARE_FREE_SOCLE, socle_square_free(module))

    violations = profile.consistency_violations()
    if violations:
        logging.error('inconsistent profile for {}: {}'.format(module.name, violations))
    assert not violations, 'profile of {} violates {}'.format(module.name, violations)
    return profile
