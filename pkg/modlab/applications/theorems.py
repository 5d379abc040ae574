"""Counterexample scenarios, module censuses and machine checks of the structure theory of
automorphism-invariant modules.

A census lists, up to isomorphism, every submodule of bounded length of an injective
cogenerator; every module whose socle multiplicities are within the bounds embeds in that
cogenerator (through its injective hull), so the census is complete for those bounds.
Every check returns a TheoremVerdict naming the universe it quantified over.
"""
import itertools
import logging

import numpy as np

from ..base import types
from ..base.helpers import get_repr, or_default, in_enum_values
from ..base.algebra import (star_algebra, projective_right, is_left_serial, is_right_serial,
                            radical_squared_zero)
from ..base.modules import (Submodule, direct_sum, spin, socle, socle_labels, radical_submodule,
                            composition_length, quotient_module, hom_space, end_space,
                            submodule_lattice, brute_force_lattice, lattice_is_chain, invariants,
                            is_isomorphic, idempotent_endos, summands, is_uniform, is_uniserial, is_local,
                            is_indecomposable, is_simple, socle_square_free, top_labels, layer_labels)
from ..base.envelope import (indecomposable_injective, injective_hull, is_injective, is_quasi_injective,
                             is_automorphism_invariant, is_pseudo_injective, automorphisms,
                             extends_essential_isomorphisms, check_C1, check_C2, check_C3,
                             is_relatively_injective, is_quasi_projective, is_square_free)


class HypothesisError(Exception):
    pass


HIERARCHY = 'hierarchy'
PROJECTION_INVARIANCE = 'projection_invariance'
INTERSECTION_SPLITTING = 'intersection_splitting'
AI_IFF_QI_LARGE_FIELD = 'ai_iff_qi_large_field'
REPEATED_BLOCK_SPLITTING = 'repeated_block_splitting'
UNIFORM_OR_TWO_ELEMENT_FIELD = 'uniform_or_two_element_field'
AI_IMPLIES_PSEUDO_INJECTIVE = 'ai_implies_pseudo_injective'
UNISERIAL_QUASI_PROJECTIVE = 'uniserial_quasi_projective'
LOCAL_INDECOMPOSABLES = 'local_indecomposables'
C2_SEARCH = 'c2_search'
BASIC_AI_FACTS = 'basic_ai_facts'
INVARIANT_MODULE_TYPE = 'invariant_module_type'
RAI_TYPE = 'rai_type'
ORACLES = 'oracles'
OPEN_QUESTIONS = 'open_questions'
EXAMPLE1 = 'example1'
EXAMPLE2 = 'example2'
LARGE_FIELD_VARIANT = 'example1_large_field'


class TheoremVerdict(object):
    def __init__(self, theorem, universe, instances_checked=0, status=types.HOLDS, witness=None, details=None):
        assert in_enum_values(status, types.VerdictStatus), status
        assert status in types.PASSING_STATUSES or witness is not None, \
            'a failing verdict for {} needs a witness'.format(theorem)
        self.theorem = theorem
        self.universe = universe
        self.instances_checked = instances_checked
        self.status = status
        self.witness = witness
        self.details = details or {}

    @property
    def holds(self):
        return self.status in types.PASSING_STATUSES

    def as_dict(self):
        return {'theorem': self.theorem,
                'universe': self.universe,
                'instances_checked': self.instances_checked,
                'status': self.status,
                'holds': self.holds,
                'witness': self.witness,
                'details': self.details}

    def __repr__(self):
        return get_repr('TheoremVerdict', {'theorem': self.theorem, 'status': self.status,
                                           'instances': self.instances_checked})


def _rows(m):
    return np.asarray(m).tolist()


def _describe(module):
    return {'name': module.name, 'dim': module.dim, 'top': top_labels(module), 'socle': socle_labels(module)}


##### census #####

class Census(object):
    def __init__(self, algebra, bounds, max_length, representatives, cogenerator, examined):
        self.algebra = algebra
        self.bounds = list(bounds)
        self.max_length = max_length
        self.representatives = representatives
        self.cogenerator = cogenerator
        self.examined = examined

    @property
    def universe(self):
        return '{} socle<={} length<={}'.format(self.algebra.name, tuple(self.bounds), self.max_length)

    def certificate(self):
        return {'cogenerator_blocks': [[label] * count for label, count in
                                       zip(self.algebra.simple_labels, self.bounds) if count],
                'cogenerator_dim': self.cogenerator.dim,
                'submodules_examined': self.examined,
                'representatives': len(self.representatives)}

    def indecomposables(self, caps=None):
        return [m for m in self.representatives if is_indecomposable(m, caps)]

    def __iter__(self):
        return iter(self.representatives)

    def __len__(self):
        return len(self.representatives)

    def __repr__(self):
        return get_repr('Census', {'universe': self.universe, 'representatives': len(self.representatives)})


def build_census(algebra, bounds, max_length, caps=None):
    """one representative per isomorphism class of nonzero modules with the given socle bounds and length"""
    caps = or_default(caps)
    if len(bounds) != algebra.n:
        raise ValueError('need one socle bound per simple label {}, got {}'.format(algebra.simple_labels, bounds))
    blocks = [indecomposable_injective(algebra, label)
              for label, count in zip(algebra.simple_labels, bounds) for _ in range(count)]
    if not blocks:
        raise ValueError('socle bounds {} leave an empty cogenerator'.format(bounds))
    cogenerator = direct_sum(blocks, name='cogenerator')[0]
    lattice = submodule_lattice(cogenerator, caps)
    buckets = {}
    representatives = []
    for sub in lattice:
        # basic algebra: every composition factor is one-dimensional
        if sub.dim == 0 or sub.dim > max_length:
            continue
        module = sub.as_module()
        bucket = buckets.setdefault(invariants(module), [])
        if any(is_isomorphic(module, other, caps)[0] for other in bucket):
            continue
        named = sub.as_module(name='{}[{}]'.format(algebra.name, len(representatives)))
        bucket.append(named)
        representatives.append(named)
    census = Census(algebra, bounds, max_length, representatives, cogenerator, len(lattice))
    logging.info('census {}: {} representatives from {} submodules'.format(census.universe, len(representatives),
                                                                          len(lattice)))
    return census


def census_rows(census, caps=None):
    """one summary row per representative, in census order"""
    rows = []
    for module in census:
        rows.append({'name': module.name,
                     'dim': module.dim,
                     'length': composition_length(module),
                     'top': top_labels(module),
                     'socle': socle_labels(module),
                     types.INJECTIVE: is_injective(module),
                     types.QUASI_INJECTIVE: is_quasi_injective(module).ok,
                     types.PSEUDO_INJECTIVE: is_pseudo_injective(module, caps).ok,
                     types.AUTOMORPHISM_INVARIANT: is_automorphism_invariant(module, caps).ok,
                     types.UNIFORM: is_uniform(module),
                     types.UNISERIAL: is_uniserial(module),
                     types.LOCAL: is_local(module),
                     types.INDECOMPOSABLE: is_indecomposable(module, caps)})
    return rows


def hierarchy_flags(module, caps=None):
    return {types.INJECTIVE: is_injective(module),
            types.QUASI_INJECTIVE: is_quasi_injective(module).ok,
            types.PSEUDO_INJECTIVE: is_pseudo_injective(module, caps).ok,
            types.AUTOMORPHISM_INVARIANT: is_automorphism_invariant(module, caps).ok}


def _ai(module, caps):
    return is_automorphism_invariant(module, caps).ok


##### hull splittings #####

def block_projection(hull, indices):
    """endomorphism of E projecting onto the chosen blocks"""
    e = hull.dim
    out = np.zeros((e, e), dtype=np.int64)
    for k in indices:
        out = out + hull.projections[k].matrix @ hull.injections[k].matrix
    return out


def block_splits(hull, include_whole=False):
    """(E1 block indices, E2 block indices) for every regrouping of the hull blocks"""
    k = len(hull.blocks)
    for size in range(1, k + (1 if include_whole else 0)):
        for chosen in itertools.combinations(range(k), size):
            yield list(chosen), [j for j in range(k) if j not in chosen]


def projected_image(hull, indices):
    """pi_1(M) for the projection onto the chosen blocks, as a submodule of E"""
    image = hull.image()
    field = hull.hull.field
    moved = field.mul(image.basis, block_projection(hull, indices))
    return Submodule(hull.hull, field.row_space(moved, ambient_dim=hull.dim), _trusted=True)


def splits_along(hull, parts):
    """M = sum of its intersections with the given block groups"""
    image = hull.image()
    pieces = [image.intersect(hull.block_submodule(part)) for part in parts]
    total = pieces[0]
    for piece in pieces[1:]:
        total = total.sum(piece)
    return sum(p.dim for p in pieces) == image.dim and total.dim == image.dim


def has_complementary_unit(module, caps=None):
    """some automorphism s with 1 - s also an automorphism"""
    field = module.field
    eye = np.eye(module.dim, dtype=np.int64)
    return any(field.is_invertible(eye - s) for s in automorphisms(module, caps))


##### census checks #####

def check_hierarchy(census, caps=None):
    chain = types.HIERARCHY_CHAIN
    for module in census:
        flags = hierarchy_flags(module, caps)
        for stronger, weaker in zip(chain, chain[1:]):
            if flags[stronger] and not flags[weaker]:
                return TheoremVerdict(HIERARCHY, census.universe, len(census), types.FAILS,
                                      witness={'module': _describe(module), 'flags': flags})
    return TheoremVerdict(HIERARCHY, census.universe, len(census))


def check_projection_invariance(census, caps=None):
    """the projection of an AI module onto a block group of its hull is AI"""
    checked = 0
    for module in census:
        if not _ai(module, caps):
            continue
        hull = injective_hull(module)
        for first, _ in block_splits(hull, include_whole=True):
            projected = projected_image(hull, first).as_module(name='pi({})'.format(module.name))
            checked += 1
            if not _ai(projected, caps):
                return TheoremVerdict(PROJECTION_INVARIANCE, census.universe, checked, types.FAILS,
                                      witness={'module': _describe(module), 'blocks': first})
    return TheoremVerdict(PROJECTION_INVARIANCE, census.universe, checked,
                          types.HOLDS if checked else types.VACUOUS)


def check_intersection_splitting(census, caps=None):
    """AI M splits along E1 + E2 whenever E1 has an automorphism s with 1 - s invertible"""
    checked, vacuous = 0, 0
    for module in census:
        if not _ai(module, caps):
            continue
        hull = injective_hull(module)
        for first, second in block_splits(hull):
            if not has_complementary_unit(hull.block_submodule(first).as_module(), caps):
                vacuous += 1
                continue
            checked += 1
            if not splits_along(hull, [first, second]):
                return TheoremVerdict(INTERSECTION_SPLITTING, census.universe, checked, types.FAILS,
                                      witness={'module': _describe(module), 'blocks': first})
    return TheoremVerdict(INTERSECTION_SPLITTING, census.universe, checked,
                          types.HOLDS if checked else types.VACUOUS,
                          details={'vacuous_splits': vacuous})


def check_ai_iff_qi_large_field(census, caps=None):
    """over fields with more than two elements AI and QI coincide"""
    mismatches = [module for module in census if _ai(module, caps) != is_quasi_injective(module).ok]
    witness = {'modules': [_describe(m) for m in mismatches]} if mismatches else None
    if census.algebra.p == 2:
        status = types.BOUNDARY if mismatches else types.INAPPLICABLE
        return TheoremVerdict(AI_IFF_QI_LARGE_FIELD, census.universe, len(census), status, witness=witness)
    return TheoremVerdict(AI_IFF_QI_LARGE_FIELD, census.universe, len(census),
                          types.FAILS if mismatches else types.HOLDS, witness=witness)


def check_repeated_block_splitting(census, caps=None):
    """AI modules split along two isomorphic hull blocks; indecomposable AI modules have square-free socle"""
    checked = 0
    for module in census:
        if not _ai(module, caps):
            continue
        hull = injective_hull(module)
        labels = [label for label, _ in hull.blocks]
        for j, k in itertools.combinations(range(len(labels)), 2):
            if labels[j] != labels[k]:
                continue
            rest = [x for x in range(len(labels)) if x not in (j, k)]
            checked += 1
            if not splits_along(hull, [[j], [k], rest] if rest else [[j], [k]]):
                return TheoremVerdict(REPEATED_BLOCK_SPLITTING, census.universe, checked, types.FAILS,
                                      witness={'module': _describe(module), 'blocks': [j, k]})
    square_free_checked = 0
    for module in census.indecomposables(caps):
        if not _ai(module, caps):
            continue
        square_free_checked += 1
        if not socle_square_free(module):
            return TheoremVerdict(REPEATED_BLOCK_SPLITTING, census.universe, checked, types.FAILS,
                                  witness={'module': _describe(module), 'reason': 'square socle'})
    return TheoremVerdict(REPEATED_BLOCK_SPLITTING, census.universe, checked,
                          types.HOLDS if checked else types.VACUOUS,
                          details={'indecomposable_ai_checked': square_free_checked})


def check_uniform_or_two_element_field(census, caps=None):
    """an indecomposable AI module is uniform and QI, or its simple submodules have two endomorphisms"""
    uniform_qi, small_field, checked = 0, 0, 0
    for module in census.indecomposables(caps):
        if not _ai(module, caps):
            continue
        checked += 1
        if is_uniform(module) and is_quasi_injective(module).ok:
            uniform_qi += 1
        elif module.field.p == 2:
            # simple modules over a basic algebra have End = GF(p)
            small_field += 1
        else:
            return TheoremVerdict(UNIFORM_OR_TWO_ELEMENT_FIELD, census.universe, checked, types.FAILS,
                                  witness={'module': _describe(module)})
    return TheoremVerdict(UNIFORM_OR_TWO_ELEMENT_FIELD, census.universe, checked,
                          types.HOLDS if checked else types.VACUOUS,
                          details={'uniform_and_qi': uniform_qi, 'two_element_field': small_field})


def check_ai_implies_pseudo_injective(census, caps=None):
    """AI implies pseudo-injective for modules of finite Goldie dimension"""
    checked = 0
    for module in census:
        if not _ai(module, caps):
            continue
        checked += 1
        decision = is_pseudo_injective(module, caps)
        if not decision.ok:
            return TheoremVerdict(AI_IMPLIES_PSEUDO_INJECTIVE, census.universe, checked, types.FAILS,
                                  witness={'module': _describe(module), 'failure': decision.witness})
    return TheoremVerdict(AI_IMPLIES_PSEUDO_INJECTIVE, census.universe, checked,
                          types.HOLDS if checked else types.VACUOUS)


def is_rai_type(census, caps=None):
    return all(_ai(m, caps) for m in census.indecomposables(caps))


def check_uniserial_quasi_projective(algebra, census, caps=None):
    """over an RAI-type ring: eR/A' is quasi-projective, and uniserial modules are quasi-projective"""
    universe = census.universe
    if not is_rai_type(census, caps):
        return TheoremVerdict(UNISERIAL_QUASI_PROJECTIVE, universe, 0, types.INAPPLICABLE,
                              details={'reason': 'not RAI-type within the census'})
    field = algebra.field
    checked = 0
    for i in algebra.simple_labels:
        projective = projective_right(algebra, i)
        if is_uniform(projective):
            continue
        soc = socle(projective)
        components = {label: field.row_space(field.mul(soc.basis, projective.idempotent_action(label)),
                                             ambient_dim=projective.dim)
                      for label in set(socle_labels(projective))}
        for sub in submodule_lattice(projective, caps):
            if not sub.is_subset(soc):
                continue
            labels = set(layer_labels(sub, projective.zero()))
            complement = projective.zero().space
            for label, space in components.items():
                if label not in labels:
                    complement = complement.sum(space)
            if sub.dim + complement.dim != soc.dim:
                continue
            checked += 1
            quotient = quotient_module(projective, Submodule(projective, complement, _trusted=True))[0]
            if not is_quasi_projective(quotient, caps).ok:
                return TheoremVerdict(UNISERIAL_QUASI_PROJECTIVE, universe, checked, types.FAILS,
                                      witness={'idempotent': i, 'submodule': _rows(sub.basis)})
    for module in census:
        if not is_uniserial(module):
            continue
        checked += 1
        if not is_quasi_projective(module, caps).ok:
            return TheoremVerdict(UNISERIAL_QUASI_PROJECTIVE, universe, checked, types.FAILS,
                                  witness={'module': _describe(module)})
    return TheoremVerdict(UNISERIAL_QUASI_PROJECTIVE, universe, checked)


def local_indecomposable_conditions(algebra, census, caps=None):
    """(a) uniform modules are simple or injective of length 2, (b) left serial, (c) eJ homogeneous or short"""
    uniform_ok = all(is_simple(m) or (is_injective(m) and composition_length(m) == 2)
                     for m in census if is_uniform(m))
    short_or_homogeneous = {}
    for i in algebra.simple_labels:
        labels = socle_labels(radical_submodule(projective_right(algebra, i)).as_module())
        short_or_homogeneous[i] = {'length': len(labels), 'homogeneous': len(set(labels)) <= 1}
    condition_c = all(x['homogeneous'] or x['length'] <= 2 for x in short_or_homogeneous.values())
    return {'a_uniform': uniform_ok, 'b_left_serial': is_left_serial(algebra), 'c_radical': condition_c,
            'radical_of_projectives': short_or_homogeneous}


def check_local_indecomposables(algebra, census, caps=None, expected_all_local=None,
                                expected_radical_lengths=None):
    """J^2 = 0 and every indecomposable local implies conditions (a), (b), (c)

    expected_all_local and expected_radical_lengths ({i: l(e_ii.J)}), when given, must match the observation
    """
    if not radical_squared_zero(algebra):
        raise HypothesisError('{} has J^2 != 0'.format(algebra.name))
    conditions = local_indecomposable_conditions(algebra, census, caps)
    non_local = [m for m in census.indecomposables(caps) if not is_local(m)]
    all_local = not non_local
    conditions_hold = conditions['a_uniform'] and conditions['b_left_serial'] and conditions['c_radical']
    details = dict(conditions)
    details['all_indecomposables_local'] = all_local
    details['non_local_indecomposables'] = [_describe(m) for m in non_local]
    if all_local and not conditions_hold:
        return TheoremVerdict(LOCAL_INDECOMPOSABLES, census.universe, len(census), types.FAILS,
                              witness={k: v for k, v in conditions.items() if v is False}, details=details)
    mismatches = {}
    if expected_all_local is not None and expected_all_local != all_local:
        mismatches['all_indecomposables_local'] = {'observed': all_local, 'expected': expected_all_local}
    for i, length in sorted((expected_radical_lengths or {}).items()):
        observed = conditions['radical_of_projectives'][i]['length']
        if observed != length:
            mismatches['radical_length_{}'.format(i)] = {'observed': observed, 'expected': length}
    if mismatches:
        logging.error('{} on {} differs from expectation: {}'.format(LOCAL_INDECOMPOSABLES, census.universe,
                                                                     sorted(mismatches)))
        return TheoremVerdict(LOCAL_INDECOMPOSABLES, census.universe, len(census), types.FAILS,
                              witness=mismatches, details=details)
    return TheoremVerdict(LOCAL_INDECOMPOSABLES, census.universe, len(census), details=details)


def search_c2_counterexample(census, caps=None):
    """search the AI representatives for a failure of C2"""
    checked = 0
    for module in census:
        if not _ai(module, caps):
            continue
        checked += 1
        decision = check_C2(module, caps)
        if not decision.ok:
            logging.warning('AI module {} fails C2'.format(module.name))
            return TheoremVerdict(C2_SEARCH, census.universe, checked, types.DATA_ONLY,
                                  witness={'module': _describe(module), 'failure': decision.witness},
                                  details={'outcome': 'counterexample'})
    return TheoremVerdict(C2_SEARCH, census.universe, checked, types.HOLDS,
                          details={'outcome': 'no counterexample within universe'})


def check_basic_ai_facts(census, caps=None, oracle_max_dim=5):
    """basic facts: essential-isomorphism characterization, summands, relative injectivity, C3, CS + AI => QI"""
    counts = {'characterization': 0, 'summands': 0, 'relative_injectivity': 0, 'C3': 0, 'CS_implies_QI': 0}

    def failed(fact, module, extra=None):
        witness = {'fact': fact, 'module': _describe(module)}
        if extra:
            witness.update(extra)
        return TheoremVerdict(BASIC_AI_FACTS, census.universe, sum(counts.values()), types.FAILS,
                              witness=witness, details=counts)

    for module in census:
        ai = _ai(module, caps)
        if module.dim <= oracle_max_dim:
            counts['characterization'] += 1
            if extends_essential_isomorphisms(module, caps).ok != ai:
                return failed('characterization', module)
        if not ai:
            continue
        for summand in summands(module, caps):
            counts['summands'] += 1
            if not _ai(summand.as_module(), caps):
                return failed('summands', module, {'summand': _rows(summand.basis)})
        for e in idempotent_endos(module, caps):
            image, kernel = e.image(), e.kernel()
            if image.dim == 0 or kernel.dim == 0:
                continue
            counts['relative_injectivity'] += 1
            first, second = image.as_module(), kernel.as_module()
            if not (is_relatively_injective(first, second, caps).ok and
                    is_relatively_injective(second, first, caps).ok):
                return failed('relative_injectivity', module, {'idempotent': _rows(e.matrix)})
        counts['C3'] += 1
        if not check_C3(module, caps).ok:
            return failed('C3', module)
        if check_C1(module, caps).ok:
            counts['CS_implies_QI'] += 1
            if not is_quasi_injective(module).ok:
                return failed('CS_implies_QI', module)
    return TheoremVerdict(BASIC_AI_FACTS, census.universe, sum(counts.values()), details=counts)


def check_invariant_module_type(census, caps=None):
    """over fields with more than two elements: every indecomposable QI <=> every indecomposable AI;
    a square socle among the indecomposables rules both out"""
    indecomposables = census.indecomposables(caps)
    all_qi = all(is_quasi_injective(m).ok for m in indecomposables)
    all_ai = all(_ai(m, caps) for m in indecomposables)
    square_free = all(is_square_free(m).ok for m in indecomposables)
    details = {'all_quasi_injective': all_qi, 'all_automorphism_invariant': all_ai,
               'all_square_free_socle': square_free}
    if census.algebra.p == 2:
        return TheoremVerdict(INVARIANT_MODULE_TYPE, census.universe, len(indecomposables), types.INAPPLICABLE,
                              details=details)
    if all_qi != all_ai or (all_ai and not square_free):
        return TheoremVerdict(INVARIANT_MODULE_TYPE, census.universe, len(indecomposables), types.FAILS,
                              witness=details, details=details)
    return TheoremVerdict(INVARIANT_MODULE_TYPE, census.universe, len(indecomposables), details=details)


def check_rai_type(census, caps=None, expected=None):
    """every indecomposable representative is AI; compared with expected when given"""
    indecomposables = census.indecomposables(caps)
    failures = [m for m in indecomposables if not _ai(m, caps)]
    details = {'rai_type': not failures,
               'non_simple_indecomposables': [_describe(m) for m in indecomposables if not is_simple(m)],
               'not_automorphism_invariant': [_describe(m) for m in failures]}
    if expected is None:
        status = types.DATA_ONLY
    else:
        status = types.HOLDS if expected == (not failures) else types.FAILS
    witness = details if status == types.FAILS else None
    return TheoremVerdict(RAI_TYPE, census.universe, len(indecomposables), status, witness=witness,
                          details=details)


def check_oracles(census, caps=None, lattice_max_dim=6):
    """independent recomputations: lattice by subspace filter, uniserial by chain, hull idempotence"""
    counts = {'lattice': 0, 'uniserial': 0, 'hull': 0}

    def failed(oracle, module):
        return TheoremVerdict(ORACLES, census.universe, sum(counts.values()), types.FAILS,
                              witness={'oracle': oracle, 'module': _describe(module)}, details=counts)

    for module in census:
        lattice = submodule_lattice(module, caps)
        if module.dim <= lattice_max_dim and module.field.p == 2:
            counts['lattice'] += 1
            if set(s.key for s in lattice) != set(s.key for s in brute_force_lattice(module, caps)):
                return failed('lattice', module)
        counts['uniserial'] += 1
        if is_uniserial(module) != lattice_is_chain(lattice):
            return failed('uniserial', module)
        counts['hull'] += 1
        hull = injective_hull(module)
        if not (hull.is_essential() and hull.transports_socle() and
                injective_hull(hull.hull).dim == hull.dim):
            return failed('hull', module)
    return TheoremVerdict(ORACLES, census.universe, sum(counts.values()), details=counts)


def report_open_questions(census, caps=None):
    """AI but not QI (all modules here have essential socle), and AI but not pseudo-injective"""
    ai_not_qi = [m for m in census if _ai(m, caps) and not is_quasi_injective(m).ok]
    ai_not_pi = [m for m in census if _ai(m, caps) and not is_pseudo_injective(m, caps).ok]
    return TheoremVerdict(OPEN_QUESTIONS, census.universe, len(census), types.DATA_ONLY,
                          details={'ai_essential_socle_not_qi': [_describe(m) for m in ai_not_qi],
                                   'ai_not_pseudo_injective': [_describe(m) for m in ai_not_pi]})


##### scenarios #####

def _compare(theorem, universe, observed, expected):
    mismatches = {k: {'observed': observed[k], 'expected': v} for k, v in expected.items() if observed.get(k) != v}
    status = types.FAILS if mismatches else types.HOLDS
    if mismatches:
        logging.error('{} differs from expectation: {}'.format(theorem, sorted(mismatches)))
    return TheoremVerdict(theorem, universe, len(expected), status, witness=mismatches or None,
                          details={'observed': observed})


EXAMPLE1_EXPECTED = {
    'local_projective_dim': 3,
    'socle_labels': [2, 3],
    'hull_labels': [2, 3],
    'hull_dim': 4,
    'block_lengths': [2, 2],
    'blocks_injective': [True, True],
    'block_end_sizes': [2, 2],
    'cross_hom_dims': [0, 0],
    'end_hull_size': 4,
    'aut_hull_size': 1,
    'automorphism_invariant': True,
    'quasi_injective': False,
    'uniform': False,
    'local': True,
    'left_serial': True,
    'right_serial': False,
}


def scenario_example1(algebra=None, caps=None):
    """e11.R over the two-leaf star ring over GF(2): AI, not QI, not uniform"""
    algebra = star_algebra(2, 2) if algebra is None else algebra
    module = projective_right(algebra, 1)
    hull = injective_hull(module)
    blocks = [b for _, b in hull.blocks]
    ai = is_automorphism_invariant(module, caps)
    observed = {
        'local_projective_dim': module.dim,
        'socle_labels': socle_labels(module),
        'hull_labels': [label for label, _ in hull.blocks],
        'hull_dim': hull.dim,
        'block_lengths': [composition_length(b) for b in blocks],
        'blocks_injective': [is_injective(b) for b in blocks],
        'block_end_sizes': [end_space(b).size for b in blocks],
        'cross_hom_dims': [hom_space(a, b).dim for a, b in itertools.permutations(blocks, 2)],
        'end_hull_size': ai.data['end_hull_size'],
        'aut_hull_size': ai.data['aut_hull_size'],
        'automorphism_invariant': ai.ok,
        'quasi_injective': is_quasi_injective(module).ok,
        'uniform': is_uniform(module),
        'local': is_local(module),
        'left_serial': is_left_serial(algebra),
        'right_serial': is_right_serial(algebra),
    }
    verdict = _compare(EXAMPLE1, algebra.name, observed, EXAMPLE1_EXPECTED)
    logging.info('example1 on {}: {}'.format(algebra.name, verdict.status))
    return verdict


def _top_vector(module):
    """first standard basis vector outside the radical"""
    rad = radical_submodule(module)
    for k in range(module.dim):
        v = np.zeros(module.dim, dtype=np.int64)
        v[k] = 1
        if not rad.contains(v):
            return v
    raise ValueError('{} has no top'.format(module.name))


EXAMPLE2_EXPECTED = {
    'dim': 5,
    'length': 5,
    'first_piece_matches_quotient': True,
    'second_piece_matches_quotient': True,
    'pieces_meet_in_middle_socle': True,
    'essential_in_hull': True,
    'aut_injective_size': 1,
    'automorphism_invariant': True,
    'local': False,
    'indecomposable': True,
    'idempotents': 2,
    'radical_length_of_local_projective': 3,
}


def example2_module(algebra):
    """B = B1 + B2 inside E2 + E3 + E4, glued along Soc(E3); returns (E, B1, B2, B)"""
    blocks = [indecomposable_injective(algebra, label) for label in (2, 3, 4)]
    injective, injections, _ = direct_sum(blocks, name='E')
    tops = [inj(_top_vector(b)) for b, inj in zip(blocks, injections)]
    first = spin(injective, [tops[0] + tops[1]])
    second = spin(injective, [tops[1] + tops[2]])
    return injective, first, second, first.sum(second)


def scenario_example2(algebra=None, caps=None):
    """the non-local indecomposable AI module B over the three-leaf star ring over GF(2)"""
    algebra = star_algebra(3, 2) if algebra is None else algebra
    injective, first, second, glued = example2_module(algebra)
    module = glued.as_module(name='B')
    projective = projective_right(algebra, 1)
    socle_e = socle(injective)
    dims = [indecomposable_injective(algebra, label).dim for label in (2, 3, 4)]
    middle = socle_e.intersect(_block(injective, 1, dims))
    first_quotient = quotient_module(projective, spin(projective, [_corner_vector(algebra, projective, (1, 4))]))[0]
    second_quotient = quotient_module(projective, spin(projective, [_corner_vector(algebra, projective, (1, 2))]))[0]
    observed = {
        'dim': module.dim,
        'length': composition_length(module),
        'first_piece_matches_quotient': is_isomorphic(first.as_module(), first_quotient, caps)[0],
        'second_piece_matches_quotient': is_isomorphic(second.as_module(), second_quotient, caps)[0],
        'pieces_meet_in_middle_socle': first.intersect(second) == middle,
        'essential_in_hull': socle_e.is_subset(glued),
        'aut_injective_size': sum(1 for _ in automorphisms(injective, caps)),
        'automorphism_invariant': is_automorphism_invariant(module, caps).ok,
        'local': is_local(module),
        'indecomposable': is_indecomposable(module, caps),
        'idempotents': len(idempotent_endos(module, caps)),
        'radical_length_of_local_projective': composition_length(radical_submodule(projective).as_module()),
    }
    verdict = _compare(EXAMPLE2, algebra.name, observed, EXAMPLE2_EXPECTED)
    logging.info('example2 on {}: {}'.format(algebra.name, verdict.status))
    return verdict


def _corner_vector(algebra, projective, label):
    """coordinates of the basis element e_label inside e_ii.A"""
    row = [k for k, (a, _) in enumerate(algebra.labels) if a == label[0]]
    return algebra.basis_vector(label)[row]


def _block(module, k, dims):
    """coordinates of the k-th block of a direct sum with the given block dims"""
    start = sum(dims[:k])
    basis = np.eye(module.dim, dtype=np.int64)[start:start + dims[k]]
    return Submodule(module, module.field.row_space(basis, ambient_dim=module.dim), _trusted=True)


##### suite #####

CENSUS_CHECKS = [check_hierarchy, check_projection_invariance, check_intersection_splitting,
                 check_ai_iff_qi_large_field, check_repeated_block_splitting, check_uniform_or_two_element_field,
                 check_ai_implies_pseudo_injective, search_c2_counterexample, check_basic_ai_facts,
                 check_invariant_module_type, check_oracles, report_open_questions]


def census_verdicts(census, caps=None):
    return [check(census, caps) for check in CENSUS_CHECKS]


def ring_verdicts(algebra, census, caps=None, expected=None):
    """checks about the ring itself; expected may hold 'rai_type', 'all_local' and 'radical_lengths'"""
    expected = expected or {}
    out = [check_uniserial_quasi_projective(algebra, census, caps),
           check_rai_type(census, caps, expected=expected.get('rai_type'))]
    if radical_squared_zero(algebra):
        out.append(check_local_indecomposables(algebra, census, caps, expected_all_local=expected.get('all_local'),
                                               expected_radical_lengths=expected.get('radical_lengths')))
    return out


TWO_LEAF_EXPECTED = {'rai_type': True, 'all_local': True}
TWO_LEAF_LARGE_FIELD_EXPECTED = {'all_local': True}
# the glued module B is indecomposable and not local; e11.J has length 3
THREE_LEAF_EXPECTED = {'all_local': False, 'radical_lengths': {1: 3}}


def large_field_variant(caps=None):
    """over GF(3) the two-leaf example stops being AI"""
    algebra = star_algebra(2, 3)
    module = projective_right(algebra, 1)
    ai = is_automorphism_invariant(module, caps)
    observed = {'automorphism_invariant': ai.ok, 'quasi_injective': is_quasi_injective(module).ok}
    return _compare(LARGE_FIELD_VARIANT, algebra.name, observed,
                    {'automorphism_invariant': False, 'quasi_injective': False})


def reference_suite(selection=types.ALL, caps=None):
    """scenarios plus every census check on the reference rings; returns (verdicts, censuses)"""
    caps = or_default(caps)
    verdicts, censuses = [], []
    plans = []
    if selection in (types.EXAMPLE1, types.ALL):
        verdicts.append(scenario_example1(caps=caps))
        verdicts.append(large_field_variant(caps))
        two_leaf = star_algebra(2, 2)
        plans += [(two_leaf, [1, 1, 1], 6, TWO_LEAF_EXPECTED), (two_leaf, [1, 2, 1], 4, None),
                  (star_algebra(2, 3), [1, 1, 1], 6, TWO_LEAF_LARGE_FIELD_EXPECTED)]
    if selection in (types.EXAMPLE2, types.ALL):
        verdicts.append(scenario_example2(caps=caps))
        plans += [(star_algebra(3, 2), [1, 1, 1, 1], 6, THREE_LEAF_EXPECTED),
                  (star_algebra(3, 3), [1, 1, 1, 1], 6, THREE_LEAF_EXPECTED)]
    seen_rings = set()
    for algebra, bounds, max_length, expected in plans:
        census = build_census(algebra, bounds, max_length, caps)
        censuses.append(census)
        verdicts += census_verdicts(census, caps)
        if algebra.key not in seen_rings:
            seen_rings.add(algebra.key)
            verdicts += ring_verdicts(algebra, census, caps, expected=expected)
    failed = [v for v in verdicts if not v.holds]
    for v in failed:
        logging.error('verdict failed: {} over {}: {}'.format(v.theorem, v.universe, v.witness))
    logging.info('suite {}: {} verdicts, {} failed'.format(selection, len(verdicts), len(failed)))
    return verdicts, censuses
