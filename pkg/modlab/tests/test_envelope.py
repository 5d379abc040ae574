import logging

from ..base import types
from ..base.helpers import Caps
from ..base.algebra import star_algebra, projective_right
from ..base.modules import simple_module, direct_sum, end_space, submodule_lattice
from ..base.envelope import (Decision, indecomposable_injective, injective_hull, is_injective, is_quasi_injective,
                             is_automorphism_invariant, is_pseudo_injective, automorphisms,
                             extends_essential_isomorphisms, is_square_free, check_C1, check_C2, check_C3,
                             is_relatively_injective, is_quasi_projective, property_profile)


R3 = star_algebra(2, 2)
R3_GF3 = star_algebra(2, 3)


def p1(algebra=R3):
    return projective_right(algebra, 1)


def test_decision():
    assert Decision(True)
    assert not Decision(False, witness={'x': 1})
    assert Decision(True, size=4).data == {'size': 4}


def test_hull_of_local_projective():
    hull = injective_hull(p1())
    assert hull.dim == 4
    assert [label for label, _ in hull.blocks] == [2, 3]
    assert hull.summand_structure == [(2, 1), (3, 1)]
    assert hull.embedding.is_injective()
    assert hull.image().dim == 3
    assert hull.is_essential()
    assert hull.transports_socle()
    assert hull.block_submodule([0]).dim == 2
    assert hull.block_submodule([0, 1]).dim == 4


def test_hull_is_idempotent():
    for module in [p1(), simple_module(R3, 2), indecomposable_injective(R3, 3)]:
        hull = injective_hull(module)
        assert injective_hull(hull.hull).dim == hull.dim


def test_injectivity():
    assert is_injective(indecomposable_injective(R3, 2))
    assert is_injective(simple_module(R3, 1))
    assert not is_injective(simple_module(R3, 2))
    assert not is_injective(p1())
    e = direct_sum([indecomposable_injective(R3, 2), indecomposable_injective(R3, 3)])[0]
    assert is_injective(e)


def test_local_projective_over_two_elements():
    m = p1()
    assert not is_quasi_injective(m).ok
    assert is_quasi_injective(m).witness is not None
    ai = is_automorphism_invariant(m)
    assert ai.ok
    assert ai.data['end_hull_size'] == 4
    assert ai.data['aut_hull_size'] == 1
    assert is_pseudo_injective(m).ok
    assert extends_essential_isomorphisms(m).ok


def test_local_projective_over_three_elements():
    m = p1(R3_GF3)
    ai = is_automorphism_invariant(m)
    assert not ai.ok
    assert 'automorphism' in ai.witness
    assert ai.data['end_hull_size'] == 9
    assert ai.data['aut_hull_size'] == 4
    assert not is_quasi_injective(m).ok
    assert not is_pseudo_injective(m).ok
    assert not extends_essential_isomorphisms(m).ok


def test_simples_are_quasi_injective():
    for algebra in [R3, R3_GF3]:
        for i in algebra.simple_labels:
            s = simple_module(algebra, i)
            assert is_quasi_injective(s).ok
            assert is_pseudo_injective(s).ok
            assert is_automorphism_invariant(s).ok


def test_automorphisms():
    assert len(list(automorphisms(p1()))) == 1
    assert len(list(automorphisms(p1(R3_GF3)))) == 2
    e = injective_hull(p1(R3_GF3)).hull
    assert len(list(automorphisms(e))) == 4
    assert end_space(e).size == 9


def test_summand_conditions():
    m = p1()
    c1 = check_C1(m)
    assert not c1.ok
    assert 'submodule' in c1.witness
    assert check_C2(m).ok
    assert check_C3(m).ok
    s22 = direct_sum([simple_module(R3, 2)] * 2)[0]
    assert check_C1(s22).ok and check_C2(s22).ok and check_C3(s22).ok


def test_square_free():
    assert is_square_free(p1())
    square = is_square_free(direct_sum([simple_module(R3, 3)] * 2)[0])
    assert not square
    assert square.witness == {'label': 3, 'square': [[1, 0], [0, 1]]}
    assert is_square_free(indecomposable_injective(R3, 2))
    assert not is_square_free(direct_sum([p1(), indecomposable_injective(R3, 2)])[0])


def test_relative_injectivity():
    assert is_relatively_injective(indecomposable_injective(R3, 2), p1()).ok
    assert is_relatively_injective(simple_module(R3, 2), simple_module(R3, 3)).ok
    # the socle copy of S2 inside e11R does not extend: Hom(e11R, S2) = 0
    assert not is_relatively_injective(simple_module(R3, 2), p1()).ok


def test_quasi_projectivity():
    assert is_quasi_projective(p1()).ok
    assert is_quasi_projective(indecomposable_injective(R3, 2)).ok
    assert is_quasi_projective(simple_module(R3, 3)).ok


def test_profile_of_local_projective():
    profile = property_profile(p1())
    expected = {types.INJECTIVE: False, types.QUASI_INJECTIVE: False, types.PSEUDO_INJECTIVE: True,
                types.AUTOMORPHISM_INVARIANT: True, types.C1: False, types.C2: True, types.C3: True,
                types.CS: False, types.CONTINUOUS: False, types.QUASI_CONTINUOUS: False,
                types.QUASI_PROJECTIVE: True, types.UNIFORM: False, types.UNISERIAL: False, types.LOCAL: True,
                types.INDECOMPOSABLE: True, types.SQUARE_FREE_SOCLE: True}
    for flag, value in expected.items():
        assert profile[flag] == value, flag
    assert profile.numbers[types.END_HULL_SIZE] == 4
    assert profile.numbers[types.AUT_HULL_SIZE] == 1
    assert profile.numbers[types.GOLDIE_DIMENSION] == 2
    assert profile.consistency_violations() == []
    as_dict = profile.as_dict()
    assert as_dict['socle_labels'] == [2, 3]
    assert types.QUASI_INJECTIVE in as_dict['witnesses']
    assert as_dict['notices'] == []
    assert as_dict['undecided'] == []


def test_profile_with_tiny_caps_leaves_flags_undecided(caplog):
    with caplog.at_level(logging.WARNING):
        profile = property_profile(p1(), Caps(homs=1))
    assert profile[types.AUTOMORPHISM_INVARIANT] is None
    assert profile[types.QUASI_INJECTIVE] is False
    assert profile.notices
    assert any(types.AUTOMORPHISM_INVARIANT in n for n in profile.notices)
    assert types.AUTOMORPHISM_INVARIANT in profile.undecided
    assert profile.cap_exceeded
    warned = [r.getMessage() for r in caplog.records if r.levelno == logging.WARNING]
    assert any(m.startswith(types.AUTOMORPHISM_INVARIANT + ' of ') and 'undecided' in m for m in warned)


def test_hull_embedding_respects_socle_components():
    m = direct_sum([simple_module(R3, 3), p1()])[0]
    hull = injective_hull(m)
    assert [label for label, _ in hull.blocks] == [2, 3, 3]
    assert hull.transports_socle()
    assert hull.is_essential()
    assert len(submodule_lattice(hull.image().as_module())) == len(submodule_lattice(m))
