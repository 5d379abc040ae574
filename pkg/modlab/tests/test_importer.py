import os
import pytest

from ..base.algebra import star_algebra, radical_squared_zero
from ..base.modules import composition_length, is_local, is_indecomposable, socle_labels
from ..base.envelope import is_automorphism_invariant
from ..applications.importer import SpecFileError, parse_ring, load_ring, parse_module_script, load_module_script


TESTDATA = os.path.join(os.path.dirname(__file__), '..', 'testdata')


def data_path(name):
    return os.path.join(TESTDATA, name)


def test_load_reference_rings():
    r3 = load_ring(data_path('r3.ring'))
    assert r3.name == 'R3'
    assert r3 == star_algebra(2, 2)
    r4 = load_ring(data_path('r4.ring'))
    assert (r4.dim, r4.radical_basis.dim) == (7, 3)
    assert load_ring(data_path('r3_gf3.ring')).p == 3
    cut = load_ring(data_path('chain3_cut.ring'))
    assert cut.dim == 5
    assert radical_squared_zero(cut)
    assert load_ring(data_path('diagonal.ring')).radical_basis.dim == 0


def test_ring_errors_point_at_lines():
    with pytest.raises(SpecFileError) as e:
        load_ring(data_path('not_transitive.ring'))
    assert e.value.line_no == 4
    assert '(1, 3)' in e.value.message
    with pytest.raises(SpecFileError) as e:
        load_ring(data_path('not_prime.ring'))
    assert e.value.line_no == 2


def test_ring_key_errors():
    with pytest.raises(SpecFileError) as e:
        parse_ring('field = 2\nsize = 2\nsize = 3\nrelation = []')
    assert e.value.line_no == 3
    with pytest.raises(SpecFileError) as e:
        parse_ring('field = 2\ncolour = red\n')
    assert e.value.line_no == 2
    with pytest.raises(SpecFileError):
        parse_ring('field = 2\nsize = 2\n')
    with pytest.raises(SpecFileError) as e:
        parse_ring('field = 2\nsize = 2\nrelation = [[1, 2]\n')
    assert e.value.line_no == 3
    with pytest.raises(SpecFileError) as e:
        parse_ring('field = 2\nsize = 2\nrelation = [[1,2]]\nquotient = [[2,1]]\n')
    assert e.value.line_no == 4
    with pytest.raises(SpecFileError):
        parse_ring('field = 2\nsize = two\nrelation = []\n')


def test_ring_pairs_reject_booleans():
    with pytest.raises(SpecFileError) as e:
        parse_ring('field = 2\nsize = 2\nrelation = [[true, 2]]\n')
    assert e.value.line_no == 3
    assert 'integer pairs' in e.value.message
    with pytest.raises(SpecFileError) as e:
        parse_ring('field = 2\nsize = 2\nrelation = [[1, 2]]\nquotient = [[1, false]]\n')
    assert e.value.line_no == 4


def test_module_scripts():
    r3 = load_ring(data_path('r3.ring'))
    name, module, bindings = load_module_script(data_path('e11r.script'), r3)
    assert name == 'P1'
    assert module.dim == 3
    name, module, _ = parse_module_script('projective right 1', r3)
    assert name == 'P1'
    _, module, bindings = parse_module_script('P = projective right 1\nQ = quotient P by spin [[0,0,1]]\n'
                                              'H = hull Q\nS = socle P', r3)
    assert bindings['Q'].dim == 2
    assert bindings['H'].dim == 2
    assert socle_labels(module) == [2, 3]
    _, module, _ = parse_module_script('[[[1]], [[0]], [[0]], [[0]], [[0]]]', r3)
    assert module.dim == 1


def test_module_script_errors():
    r3 = load_ring(data_path('r3.ring'))
    with pytest.raises(SpecFileError) as e:
        load_module_script(data_path('bad_vector.script'), r3)
    assert e.value.line_no == 2
    with pytest.raises(SpecFileError) as e:
        parse_module_script('X = radical Y', r3)
    assert 'unknown module' in e.value.message
    with pytest.raises(SpecFileError):
        parse_module_script('X = simple 9', r3)
    with pytest.raises(SpecFileError):
        parse_module_script('X = frobnicate', r3)
    with pytest.raises(SpecFileError):
        parse_module_script('P = projective right 1\nX = submodule P spanned [[1,0,0]]', r3)
    with pytest.raises(SpecFileError):
        parse_module_script('[[[0]], [[0]], [[0]], [[0]], [[0]]]', r3)
    with pytest.raises(SpecFileError):
        parse_module_script('# nothing here\n', r3)


def test_glued_module_script():
    r4 = load_ring(data_path('r4.ring'))
    name, module, _ = load_module_script(data_path('b_module.script'), r4)
    assert name == 'B'
    assert module.dim == 5
    assert composition_length(module) == 5
    assert is_automorphism_invariant(module).ok
    assert not is_local(module)
    assert is_indecomposable(module)
