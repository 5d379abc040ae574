import numpy as np
import pytest
from hypothesis import given, settings, assume, strategies as st

from ..base.algebra import star_algebra, projective_right
from ..base.helpers import Caps, CapExceeded
from ..base.modules import (RightModule, ModuleHom, ModuleValidityError, AlgebraMismatch,
                            regular_module, simple_module, zero_module, spin, submodule_from_vectors,
                            quotient_module, direct_sum, socle, radical_submodule, radical_layers,
                            socle_layers, composition_factors, composition_length, socle_labels, top_labels,
                            goldie_dimension, singular_submodule, submodule_lattice, brute_force_lattice,
                            lattice_is_chain, hom_space, end_space, is_isomorphic, idempotent_endos, summands,
                            decompose_indecomposable, is_simple, is_semisimple, is_local, is_uniform,
                            is_uniserial, is_indecomposable, is_essential, is_essential_extension, socle_square_free,
                            is_intertwiner)
from ..base.envelope import indecomposable_injective


R3 = star_algebra(2, 2)
R3_GF3 = star_algebra(2, 3)


def p1(algebra=R3):
    return projective_right(algebra, 1)


def vec(*xs):
    return np.array(xs, dtype=np.int64)


def test_simple_and_zero_modules():
    s2 = simple_module(R3, 2)
    assert s2.dim == 1
    assert is_simple(s2) and is_semisimple(s2) and is_local(s2) and is_uniform(s2)
    assert socle_labels(s2) == [2]
    z = zero_module(R3)
    assert z.dim == 0
    assert not is_indecomposable(z)
    assert not is_local(z)
    with pytest.raises(IndexError):
        simple_module(R3, 7)


def test_action_axioms_are_checked():
    with pytest.raises(ModuleValidityError):
        RightModule(R3, np.zeros((R3.dim, 1, 1), dtype=np.int64))
    with pytest.raises(ModuleValidityError):
        RightModule(R3, np.zeros((2, 1, 1), dtype=np.int64))
    # S1 with e12 acting nontrivially on a 1-dim space breaks e12 * e11 = 0
    action = simple_module(R3, 1).action.copy()
    action[R3.index((1, 2)), 0, 0] = 1
    with pytest.raises(ModuleValidityError):
        RightModule(R3, action)


def test_projective_structure():
    m = p1()
    assert m.dim == 3
    assert top_labels(m) == [1]
    assert socle_labels(m) == [2, 3]
    assert radical_layers(m) == [[1], [2, 3]]
    assert socle_layers(m) == [[2, 3], [1]]
    assert composition_factors(m) == [1, 2, 3]
    assert composition_length(m) == 3
    assert goldie_dimension(m) == 2
    assert radical_submodule(m) == socle(m)
    assert is_local(m)
    assert not is_uniform(m)
    assert not is_uniserial(m)
    assert is_indecomposable(m)
    assert not socle_square_free(direct_sum([simple_module(R3, 2)] * 2)[0])
    assert socle_square_free(m)


def test_injective_blocks_are_uniserial():
    for i in [2, 3]:
        e = indecomposable_injective(R3, i)
        assert e.dim == 2
        assert is_uniserial(e)
        assert top_labels(e) == [1]
        assert socle_labels(e) == [i]
    assert indecomposable_injective(R3, 1).dim == 1


def test_submodules_and_quotients():
    m = p1()
    s3 = spin(m, [vec(0, 0, 1)])
    assert s3.dim == 1
    assert spin(m, [vec(1, 1, 0)]).dim == 3
    assert s3.as_module().dim == 1
    assert socle_labels(s3.as_module()) == [3]
    q, proj = quotient_module(m, s3)
    assert q.dim == 2
    assert is_intertwiner(m, q, proj.matrix)
    assert proj.kernel() == s3
    assert is_isomorphic(q, indecomposable_injective(R3, 2))[0]
    with pytest.raises(ModuleValidityError):
        submodule_from_vectors(m, [vec(1, 0, 0)])
    with pytest.raises(ModuleValidityError):
        quotient_module(p1(R3_GF3), s3)


def test_direct_sum_maps():
    blocks = [simple_module(R3, 2), p1()]
    total, injections, projections = direct_sum(blocks)
    assert total.dim == 4
    for inj, proj, b in zip(injections, projections, blocks):
        assert is_intertwiner(b, total, inj.matrix)
        assert np.array_equal(inj.then(proj).matrix, np.eye(b.dim, dtype=np.int64))
    with pytest.raises(AlgebraMismatch):
        direct_sum([simple_module(R3, 2), simple_module(R3_GF3, 2)])


def test_lattice_of_local_projective():
    m = p1()
    lattice = submodule_lattice(m)
    assert len(lattice) == 5
    assert [s.dim for s in lattice] == [0, 1, 1, 2, 3]
    assert set(s.key for s in lattice) == set(s.key for s in brute_force_lattice(m))
    assert not lattice_is_chain(lattice)
    assert lattice_is_chain(submodule_lattice(indecomposable_injective(R3, 2)))


def test_lattice_over_gf3():
    m = p1(R3_GF3)
    assert len(submodule_lattice(m)) == 5
    s22 = direct_sum([simple_module(R3_GF3, 2)] * 2)[0]
    # every subspace of a semisimple homogeneous module is a submodule: 1 + 4 + 1
    assert len(submodule_lattice(s22)) == 6


def test_lattice_cap():
    s22 = direct_sum([simple_module(R3, 2)] * 3)[0]
    with pytest.raises(CapExceeded):
        submodule_lattice(s22, Caps(lattice=5))


def test_homs():
    m = p1()
    e2, e3 = indecomposable_injective(R3, 2), indecomposable_injective(R3, 3)
    assert hom_space(m, e2).dim == 1
    assert end_space(m).dim == 1
    assert hom_space(e2, e3).dim == 0
    assert hom_space(simple_module(R3, 2), m).dim == 1
    assert hom_space(m, simple_module(R3, 2)).dim == 0
    assert end_space(e2).size == 2
    for h in hom_space(m, e2).elements():
        assert is_intertwiner(m, e2, h)
    assert end_space(m).composition_table() == [[[1]]]


def test_isomorphism_witness():
    q, _ = quotient_module(p1(), spin(p1(), [vec(0, 1, 0)]))
    ok, witness = is_isomorphic(q, indecomposable_injective(R3, 3))
    assert ok
    assert isinstance(witness, ModuleHom)
    assert witness.is_isomorphism()
    assert not is_isomorphic(indecomposable_injective(R3, 2), indecomposable_injective(R3, 3))[0]
    assert not is_isomorphic(simple_module(R3, 2), simple_module(R3_GF3, 2))[0]


def test_idempotents_and_summands():
    s22 = direct_sum([simple_module(R3, 2)] * 2)[0]
    assert len(idempotent_endos(s22)) == 8
    assert len(summands(s22)) == 5
    assert not is_indecomposable(s22)
    assert sorted(x.dim for x in decompose_indecomposable(regular_module(R3))) == [1, 1, 3]
    assert len(idempotent_endos(p1())) == 2


def test_essential_submodules():
    m = p1()
    assert is_essential(socle(m))
    assert not is_essential(spin(m, [vec(0, 0, 1)]))
    assert is_essential(m.full())
    ok, witness = is_essential_extension(spin(m, [vec(0, 0, 1)]))
    assert not ok
    assert witness.tolist() == [0, 1, 0]
    assert is_essential_extension(socle(m)) == (True, None)


def test_singular_submodule():
    # ann_r of S1 is the right socle of the ring, ann_r of S2 misses e22
    assert singular_submodule(simple_module(R3, 1)).dim == 1
    assert singular_submodule(simple_module(R3, 2)).dim == 0
    assert singular_submodule(zero_module(R3)).dim == 0


@st.composite
def square_3x3(draw, p=2):
    entries = draw(st.lists(st.integers(0, p - 1), min_size=9, max_size=9))
    return np.array(entries, dtype=np.int64).reshape(3, 3)


@settings(max_examples=30, deadline=None)
@given(square_3x3())
def test_change_of_basis_keeps_invariants(g):
    m = p1()
    assume(m.field.is_invertible(g))
    copy = m.change_basis(g)
    assert is_intertwiner(copy, m, g)
    assert radical_layers(copy) == radical_layers(m)
    assert socle_layers(copy) == socle_layers(m)
    assert len(submodule_lattice(copy)) == 5
    assert is_isomorphic(copy, m)[0]


@settings(max_examples=30, deadline=None)
@given(square_3x3(p=3))
def test_change_of_basis_keeps_hom_dimensions(g):
    m = p1(R3_GF3)
    assume(m.field.is_invertible(g))
    copy = m.change_basis(g)
    others = [m, simple_module(R3_GF3, 1), simple_module(R3_GF3, 2), indecomposable_injective(R3_GF3, 3),
              regular_module(R3_GF3)]
    for other in others:
        assert hom_space(copy, other).dim == hom_space(m, other).dim
        assert hom_space(other, copy).dim == hom_space(other, m).dim
    assert end_space(copy).dim == end_space(m).dim


def test_decomposition_reassembles_the_module():
    mixed = direct_sum([p1(), simple_module(R3, 2), indecomposable_injective(R3, 3)])[0]
    for m in [regular_module(R3), regular_module(R3_GF3), mixed]:
        parts = decompose_indecomposable(m)
        assert all(is_indecomposable(x) for x in parts)
        assert sum(x.dim for x in parts) == m.dim
        assert is_isomorphic(direct_sum(parts)[0], m)[0]
    assert sorted(x.dim for x in decompose_indecomposable(mixed)) == [1, 2, 3]


def test_composition_length_is_additive():
    a, b = p1(), indecomposable_injective(R3, 2)
    total = direct_sum([a, b])[0]
    assert composition_length(total) == composition_length(a) + composition_length(b) == 5
    assert composition_factors(total) == sorted(composition_factors(a) + composition_factors(b))
    m = regular_module(R3)
    for sub in submodule_lattice(m):
        quotient = quotient_module(m, sub)[0]
        part = sub.as_module()
        assert composition_length(part) + composition_length(quotient) == composition_length(m)
        assert sorted(composition_factors(part) + composition_factors(quotient)) == composition_factors(m)
