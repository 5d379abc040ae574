"""Parsers for ring specification files and module scripts.

A ring file holds `key = value` lines (values in YAML flow syntax), e.g.

    name = R3
    field = 2
    size = 3
    relation = [[1,2],[1,3]]
    quotient = [[1,3]]

A module script binds one module per line, `name = expression`; the last bound name is
the module the script describes.  Expressions:

    regular
    projective right <i>
    simple <i>
    injective <i>
    socle <X> | radical <X> | hull <X>
    spin <X> [<vectors>]
    submodule <X> spanned [<vectors>]
    quotient <X> by spin [<vectors>]
    sum <X> <Y> ...
    [<action matrices, one per algebra basis element>]
"""
import logging
import re

import numpy as np
import yaml

from ..base.algebra import (PosetPattern, MonomialIdeal, PatternError, IdealError, algebra_from_pattern,
                            quotient_algebra, projective_right)
from ..base.linalg import NotPrimeError, DimensionMismatch
from ..base.modules import (RightModule, ModuleValidityError, regular_module, simple_module, spin, socle,
                            radical_submodule, quotient_module, direct_sum, submodule_from_vectors)
from ..base.envelope import indecomposable_injective, injective_hull


class SpecFileError(Exception):
    def __init__(self, line_no, message, source=''):
        self.line_no = line_no
        self.message = message
        self.source = source
        where = '{}:{}'.format(source, line_no) if source else 'line {}'.format(line_no)
        super().__init__('{}: {}'.format(where, message))


def _spec_lines(text):
    """(line number, left side, right side) for every non-blank, non-comment line"""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' in line:
            key, value = (x.strip() for x in line.split('=', 1))
        else:
            key, value = None, line
        yield line_no, key, value


def _load_value(value, line_no, source):
    try:
        return yaml.safe_load(value)
    except yaml.YAMLError as e:
        raise SpecFileError(line_no, 'cannot parse value "{}" ({})'.format(value, e.__class__.__name__), source)


##### rings #####

class RingSpec(object):
    KEYS = ['name', 'field', 'size', 'relation', 'quotient']
    REQUIRED = ['field', 'size', 'relation']

    def __init__(self, source=''):
        self.source = source
        self.values = {}
        self.line_of = {}

    def add(self, line_no, key, value):
        if key is None:
            raise SpecFileError(line_no, 'expected "key = value", got "{}"'.format(value), self.source)
        if key not in RingSpec.KEYS:
            raise SpecFileError(line_no, 'unknown key "{}", expected one of {}'.format(key, RingSpec.KEYS),
                                self.source)
        if key in self.values:
            raise SpecFileError(line_no, 'duplicate key "{}" (first on line {})'.format(key, self.line_of[key]),
                                self.source)
        self.values[key] = _load_value(value, line_no, self.source)
        self.line_of[key] = line_no

    def _pairs(self, key):
        pairs = self.values.get(key) or []
        if not isinstance(pairs, list) or not all(isinstance(x, list) and len(x) == 2 and
                                                  all(isinstance(y, int) and not isinstance(y, bool) for y in x)
                                                  for x in pairs):
            raise SpecFileError(self.line_of[key], '{} must be a list of [i, j] integer pairs'.format(key),
                                self.source)
        return [tuple(x) for x in pairs]

    def _integer(self, key):
        value = self.values[key]
        if not isinstance(value, int) or isinstance(value, bool):
            raise SpecFileError(self.line_of[key], '{} must be an integer, got "{}"'.format(key, value), self.source)
        return value

    def build(self):
        for key in RingSpec.REQUIRED:
            if key not in self.values:
                raise SpecFileError(0, 'missing required key "{}"'.format(key), self.source)
        p, n = self._integer('field'), self._integer('size')
        name = str(self.values.get('name') or 'ring')
        try:
            pattern = PosetPattern(n, self._pairs('relation'))
        except PatternError as e:
            line = self.line_of['relation'] if e.pair is not None else self.line_of['size']
            raise SpecFileError(line, str(e), self.source)
        try:
            algebra = algebra_from_pattern(pattern, p, name=name)
        except NotPrimeError as e:
            raise SpecFileError(self.line_of['field'], str(e), self.source)
        if 'quotient' in self.values:
            try:
                algebra = quotient_algebra(algebra, MonomialIdeal(self._pairs('quotient')), name=name)
            except IdealError as e:
                raise SpecFileError(self.line_of['quotient'], str(e), self.source)
        logging.info('loaded ring {} (dim {}, radical dim {})'.format(name, algebra.dim, algebra.radical_basis.dim))
        return algebra


def parse_ring(text, source=''):
    spec = RingSpec(source)
    for line_no, key, value in _spec_lines(text):
        spec.add(line_no, key, value)
    return spec.build()


def load_ring(path):
    with open(path) as f:
        return parse_ring(f.read(), source=path)


##### modules #####

NAME = re.compile(r'^[A-Za-z_][A-Za-z0-9_\'^]*$')


class ModuleScript(object):
    def __init__(self, algebra, source=''):
        self.algebra = algebra
        self.source = source
        self.bindings = {}
        self.last = None

    def error(self, line_no, message):
        return SpecFileError(line_no, message, self.source)

    def lookup(self, name, line_no):
        if name not in self.bindings:
            raise self.error(line_no, 'unknown module "{}", defined so far: {}'.format(
                name, sorted(self.bindings)))
        return self.bindings[name]

    def _index(self, word, line_no):
        try:
            i = int(word)
        except ValueError:
            raise self.error(line_no, 'expected an index, got "{}"'.format(word))
        if i not in self.algebra.simple_labels:
            raise self.error(line_no, 'index {} out of range {}'.format(i, self.algebra.simple_labels))
        return i

    def _vectors(self, text, module, line_no):
        vectors = _load_value(text, line_no, self.source)
        if not isinstance(vectors, list) or not all(isinstance(v, list) and len(v) == module.dim for v in vectors):
            raise self.error(line_no, 'expected a list of vectors of length {} for {}'.format(module.dim, module.name))
        return np.array(vectors, dtype=np.int64).reshape(len(vectors), module.dim)

    def evaluate(self, name, expression, line_no):
        words = expression.split()
        head = words[0]
        if expression.startswith('['):
            action = _load_value(expression, line_no, self.source)
            try:
                return RightModule(self.algebra, np.array(action, dtype=np.int64), name=name)
            except (ModuleValidityError, ValueError) as e:
                raise self.error(line_no, str(e))
        if head == 'regular' and len(words) == 1:
            return regular_module(self.algebra)
        if head == 'projective' and len(words) == 3 and words[1] == 'right':
            return projective_right(self.algebra, self._index(words[2], line_no))
        if head == 'simple' and len(words) == 2:
            return simple_module(self.algebra, self._index(words[1], line_no))
        if head == 'injective' and len(words) == 2:
            return indecomposable_injective(self.algebra, self._index(words[1], line_no))
        if head in ('socle', 'radical', 'hull') and len(words) == 2:
            module = self.lookup(words[1], line_no)
            if head == 'hull':
                return injective_hull(module).hull
            sub = socle(module) if head == 'socle' else radical_submodule(module)
            return sub.as_module(name=name)
        if head == 'sum' and len(words) >= 2:
            return direct_sum([self.lookup(w, line_no) for w in words[1:]], name=name)[0]
        match = re.match(r'^spin\s+(\S+)\s+(\[.*\])$', expression)
        if match:
            module = self.lookup(match.group(1), line_no)
            return spin(module, self._vectors(match.group(2), module, line_no)).as_module(name=name)
        match = re.match(r'^submodule\s+(\S+)\s+spanned\s+(\[.*\])$', expression)
        if match:
            module = self.lookup(match.group(1), line_no)
            try:
                sub = submodule_from_vectors(module, self._vectors(match.group(2), module, line_no))
            except ModuleValidityError as e:
                raise self.error(line_no, str(e))
            return sub.as_module(name=name)
        match = re.match(r'^quotient\s+(\S+)\s+by\s+spin\s+(\[.*\])$', expression)
        if match:
            module = self.lookup(match.group(1), line_no)
            sub = spin(module, self._vectors(match.group(2), module, line_no))
            return quotient_module(module, sub, name=name)[0]
        raise self.error(line_no, 'cannot parse module expression "{}"'.format(expression))

    def add(self, line_no, name, expression):
        if name is not None and not NAME.match(name):
            raise self.error(line_no, '"{}" is not a valid module name'.format(name))
        if not expression:
            raise self.error(line_no, 'empty expression for "{}"'.format(name))
        try:
            module = self.evaluate(name or 'M', expression, line_no)
        except (DimensionMismatch, IndexError) as e:
            raise self.error(line_no, str(e))
        if name is None:
            name = module.name
        elif module.name != name:
            module = RightModule(module.algebra, module.action, name=name, verify=False)
        self.bindings[name] = module
        self.last = name
        logging.debug('bound {} (dim {})'.format(name, module.dim))
        return module


def parse_module_script(text, algebra, source=''):
    """returns (name, module, bindings) for the last module the script binds"""
    script = ModuleScript(algebra, source)
    for line_no, name, expression in _spec_lines(text):
        script.add(line_no, name, expression)
    if script.last is None:
        raise SpecFileError(0, 'module script binds no module', source)
    return script.last, script.bindings[script.last], script.bindings


def load_module_script(path, algebra):
    with open(path) as f:
        return parse_module_script(f.read(), algebra, source=path)
