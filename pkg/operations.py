"""
Operations
Every toolkit operation as a function of validated parameters, returning a
JSON document and a text rendering. The command line and the HTTP service
both dispatch through OPERATIONS.
"""
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Union

import pandas as pd

from algebra.collector import GroupElement, collect, commutator, lcs_weight, mul, nilpotent_context, power
from algebra.errors import DeserializationError, PreconditionError
from algebra.group_law import fit_group_law, law_pow
from algebra.hall_basis import generate_basis, witt_number
from algebra.magnus import dimension_weight, hilbert_coeffs, magnus_embed, render_monomial, residual_witness
from algebra.matrix_rep import regular_rep
from algebra.parser import parse_word
from algebra.petresco import petresco
from algebra.serialization import (
    basis_to_json,
    element_from_json,
    element_to_json,
    group_law_to_json,
    matrix_to_json,
    render_rational,
    series_to_json,
    witness_to_json,
)
from algebra.words import render
from check_engine import create_check, get_available_checks
from config import Defaults
from utils.validators import (
    validate_class,
    validate_gens,
    validate_integer,
    validate_positive,
    validate_prime,
    validate_rational,
    validate_rational_vector,
    validate_ring,
    validate_vector,
)

logger = logging.getLogger(__name__)

Validator = Callable[[Any], tuple]


class ParameterError(ValueError):
    """A missing, unknown or invalid operation parameter"""


@dataclass
class OperationOutput:
    """Result of one operation in both renderings"""
    document: Any
    text: str
    passed: bool = True

    def render(self, output_format: str) -> str:
        if output_format == 'json':
            return json.dumps(self.document, indent=2)
        return self.text


@dataclass
class Param:
    """One operation parameter: keyword name, command-line flag and validator"""
    name: str
    flag: Optional[str]
    validator: Optional[Validator] = None
    default: Any = None
    required: bool = False
    help: str = ''

    @property
    def positional(self) -> bool:
        return self.flag is None

    def validate(self, value: Any) -> Any:
        if value is None or self.validator is None:
            return value
        valid, result = self.validator(value)
        if not valid:
            raise ParameterError(result)
        return result


@dataclass
class Operation:
    name: str
    func: Callable[..., OperationOutput]
    params: List[Param] = field(default_factory=list)
    help: str = ''

    def bind(self, raw: Dict[str, Any]) -> Dict[str, Any]:
        """
        Validate raw parameter values.

        Raises:
            ParameterError: On a missing, unknown or invalid parameter
        """
        known = {param.name for param in self.params}
        unknown = sorted(set(raw) - known)
        if unknown:
            raise ParameterError(f"Unknown parameter(s) for {self.name}: {', '.join(unknown)}")
        bound = {}
        for param in self.params:
            value = raw.get(param.name)
            if value is None:
                if param.required:
                    raise ParameterError(f"Missing required parameter: {param.name}")
                value = param.default
            bound[param.name] = param.validate(value)
        return bound

    def run(self, raw: Dict[str, Any]) -> OperationOutput:
        return self.func(**self.bind(raw))


# ============ Parameter validators ============

def _at_least(name: str, minimum: int) -> Validator:
    return lambda value: validate_positive(value, name, minimum=minimum)


def _integer(name: str) -> Validator:
    return lambda value: validate_integer(value, name)


def _text(value: Any) -> tuple:
    if isinstance(value, (dict, list)):
        return True, value
    return True, str(value)


def _gens(minimum: int = 2, required: bool = True, default: Any = None) -> Param:
    return Param('q', '--gens', lambda value: validate_gens(value, minimum), default=default, required=required,
                 help='Number of generators q')


def _class(required: bool = True) -> Param:
    return Param('c', '--class', validate_class, required=required, help='Nilpotency class c')


def _ring() -> Param:
    return Param('ring', '--ring', validate_ring, default='Z', help='Coefficient ring: Z, Q or Fp:<p>')


def _word() -> Param:
    return Param('word', None, _text, required=True, help='Word, e.g. "x1^2*x2^-1"')


def _seed() -> Param:
    return Param('seed', '--seed', _at_least('seed', 0), default=Defaults.SEED, help='Random seed')


def _element(name: str) -> Param:
    return Param(name, None, _text, required=True,
                 help='Element as JSON {"q","c","exponents"} or comma-separated exponents with --gens/--class')


# ============ Helpers ============

def _table(rows: List[Dict[str, Any]]) -> str:
    if not rows:
        return '(empty)'
    return pd.DataFrame(rows).to_string(index=False)


def _tuple_text(values) -> str:
    return '(' + ','.join(render_rational(v) for v in values) + ')'


def parse_element(value: Union[str, Dict], q: Optional[int] = None, c: Optional[int] = None) -> GroupElement:
    """
    Read a group element from a JSON document or a comma-separated exponent list.

    Raises:
        DeserializationError: If the value cannot be read
    """
    if isinstance(value, dict):
        return element_from_json(value)
    text = str(value).strip()
    if text.startswith('{'):
        try:
            return element_from_json(json.loads(text))
        except json.JSONDecodeError as e:
            raise DeserializationError(f"Invalid element JSON: {e.msg}")
    if q is None or c is None:
        raise DeserializationError("Exponent lists need --gens and --class")
    valid, exponents = validate_vector(text, 'exponents')
    if not valid:
        raise DeserializationError(exponents)
    return element_from_json({'q': q, 'c': c, 'exponents': list(exponents)})


# ============ Operations ============

def op_basis(q: int, c: int) -> OperationOutput:
    basis = generate_basis(q, c)
    document = basis_to_json(basis)
    return OperationOutput(document, _table(document))


def op_witt(q: int, w: int) -> OperationOutput:
    value = witt_number(w, q)
    return OperationOutput(value, str(value))


def op_collect(q: int, c: int, word: str) -> OperationOutput:
    g = collect(nilpotent_context(q, c), parse_word(word, q))
    return OperationOutput(element_to_json(g), str(g))


def op_mul(a: Any, b: Any, q: Optional[int] = None, c: Optional[int] = None) -> OperationOutput:
    g = mul(parse_element(a, q, c), parse_element(b, q, c))
    return OperationOutput(element_to_json(g), str(g))


def op_pow(a: Any, n: int, q: Optional[int] = None, c: Optional[int] = None) -> OperationOutput:
    g = power(parse_element(a, q, c), n)
    return OperationOutput(element_to_json(g), str(g))


def op_comm(a: Any, b: Any, q: Optional[int] = None, c: Optional[int] = None) -> OperationOutput:
    g = commutator(parse_element(a, q, c), parse_element(b, q, c))
    return OperationOutput(element_to_json(g), str(g))


def op_magnus(q: int, D: int, ring, word: str) -> OperationOutput:
    series = magnus_embed(parse_word(word, q), q, D, ring)
    return OperationOutput(series_to_json(series), str(series))


def op_dimweight(q: int, D: int, ring, word: str) -> OperationOutput:
    parsed = parse_word(word, q)
    k = dimension_weight(parsed, q, D, ring)
    document = {'word': render(parsed), 'D': D, 'ring': ring.tag, 'weight': k}
    return OperationOutput(document, str(k) if k is not None else f"> {D}")


def op_hilbert(q: int, c: int, terms: int) -> OperationOutput:
    coeffs = hilbert_coeffs(q, c, terms)
    return OperationOutput(coeffs, ' '.join(str(d) for d in coeffs))


def op_petresco(c: int, count: int, upto: int, q: Optional[int] = None) -> OperationOutput:
    """tau_1..tau_upto of the first `count` generators"""
    q = q if q is not None else max(2, count)
    if count > q:
        raise PreconditionError(f"count {count} exceeds the number of generators {q}")
    ctx = nilpotent_context(q, c)
    result = petresco(ctx, [ctx.unit(i) for i in range(1, count + 1)], upto)
    rows = [{'w': w, 'tau': str(tau), 'lcs_weight': lcs_weight(tau)}
            for w, tau in enumerate(result.taus, start=1)]
    return OperationOutput(result.to_dict(), _table(rows))


def op_witness(p: int, word: str, q: Optional[int] = None,
               max_degree: Optional[int] = None) -> OperationOutput:
    witness = residual_witness(parse_word(word, q), p, q=q, max_degree=max_degree)
    document = witness_to_json(witness)
    text = '\n'.join(f"{key}: {value}" for key, value in document.items())
    return OperationOutput(document, text)


def op_rep(q: int, c: int, ring, word: Optional[str] = None,
           max_dim: int = Defaults.MAX_REP_DIMENSION) -> OperationOutput:
    """Generator matrices, or the image of one word"""
    rep = regular_rep(q, c, ring, max_dimension=max_dim)
    if word is None:
        matrices = rep.generators
        labels = [f"x{i}" for i in range(1, q + 1)]
    else:
        matrices = [rep.image(parse_word(word, q)).matrix()]
        labels = [word]
    monomials = [render_monomial(m) for m in rep.monomials]
    document = {
        'q': q,
        'c': c,
        'ring': ring.tag,
        'dimension': rep.dimension,
        'monomials': monomials,
        'matrices': [matrix_to_json(m) for m in matrices],
    }
    blocks = []
    for label, matrix in zip(labels, matrices):
        frame = pd.DataFrame([[ring.render(v) for v in row] for row in matrix.entries],
                             index=monomials, columns=monomials)
        blocks.append(f"{label}:\n{frame.to_string()}")
    return OperationOutput(document, '\n\n'.join(blocks))


def op_grouplaw(q: int, c: int, seed: int = Defaults.SEED) -> OperationOutput:
    law = fit_group_law(nilpotent_context(q, c), max_class=Defaults.GROUP_LAW_MAX_CLASS,
                        box_radius=Defaults.FIT_BOX_RADIUS, validation_size=Defaults.FIT_VALIDATION_SIZE,
                        seed=seed)
    lines = [f"zeta_{i} = {poly}" for i, poly in enumerate(law.mul_polys, start=1)]
    lines += [f"omega_{i} = {poly}" for i, poly in enumerate(law.pow_polys, start=1)]
    return OperationOutput(group_law_to_json(law), '\n'.join(lines))


def op_roots(q: int, c: int, exponent, coordinates, seed: int = Defaults.SEED) -> OperationOutput:
    """a^lambda for rational coordinates a and rational lambda"""
    law = fit_group_law(nilpotent_context(q, c), max_class=Defaults.GROUP_LAW_MAX_CLASS,
                        box_radius=Defaults.FIT_BOX_RADIUS, validation_size=Defaults.FIT_VALIDATION_SIZE,
                        seed=seed)
    result = law_pow(law, coordinates, exponent)
    document = {
        'q': q,
        'c': c,
        'lambda': render_rational(exponent),
        'input': [render_rational(v) for v in coordinates],
        'result': [render_rational(v) for v in result],
    }
    return OperationOutput(document, _tuple_text(result))


def op_check(check_id: Optional[str] = None, list_checks: bool = False, trials: Optional[int] = None,
             seed: int = Defaults.SEED) -> OperationOutput:
    """Run one registered check, or list them"""
    if list_checks or check_id is None:
        checks = get_available_checks()
        rows = [{'id': item['id'], 'name': item['name'], 'description': item['description']} for item in checks]
        return OperationOutput(checks, _table(rows))

    check = create_check(check_id)
    config: Dict[str, Any] = {'seed': seed}
    if trials is not None and 'trials' in check.get_config_schema().get('properties', {}):
        config['trials'] = trials
    logger.info(f"Running check {check_id}")
    result = check.execute(config)
    logger.info(f"Check {check_id} {'passed' if result.passed else 'failed'}: {result.message}")
    document = result.to_dict()
    text = f"{result.check_name}: {'PASS' if result.passed else 'FAIL'} - {result.message}"
    if not result.passed:
        text += '\n' + result.failures.head(20).to_string(index=False)
    return OperationOutput(document, text, passed=result.passed)


OPERATIONS: Dict[str, Operation] = {op.name: op for op in [
    Operation('basis', op_basis, [_gens(), _class()], 'Hall basis up to weight c'),
    Operation('witt', op_witt, [_gens(minimum=1), Param('w', '--weight', _at_least('weight', 1), required=True,
                                                        help='Weight w')],
              'Witt number n(w, q)'),
    Operation('collect', op_collect, [_gens(), _class(), _word()], 'Collected normal form of a word'),
    Operation('mul', op_mul, [_element('a'), _element('b'), _gens(required=False),
                              _class(required=False)], 'Product of two elements'),
    Operation('pow', op_pow, [_element('a'), Param('n', '--exp', _integer('exp'), required=True, help='Exponent'),
                              _gens(required=False), _class(required=False)],
              'Integer power of an element'),
    Operation('comm', op_comm, [_element('a'), _element('b'), _gens(required=False),
                                _class(required=False)], 'Commutator a^-1 b^-1 a b'),
    Operation('magnus', op_magnus, [_gens(minimum=1), Param('D', '--deg', _at_least('deg', 0), required=True,
                                                            help='Truncation degree D'), _ring(), _word()],
              'Truncated Magnus embedding of a word'),
    Operation('dimweight', op_dimweight, [_gens(minimum=1), Param('D', '--deg', _at_least('deg', 1), required=True,
                                                                  help='Truncation degree D'),
                                          Param('ring', '--ring', validate_ring, default='Q',
                                                help='Coefficient ring: Z, Q or Fp:<p>'), _word()],
              'Dimension-filtration weight of a word'),
    Operation('hilbert', op_hilbert, [_gens(), _class(), Param('terms', '--terms', _at_least('terms', 0),
                                                               default=10, help='Highest coefficient j')],
              'Hilbert coefficients d_0..d_j of the graded group ring'),
    Operation('petresco', op_petresco, [_class(), Param('count', '--count', _at_least('count', 1), required=True,
                                                        help='Number of elements n'),
                                        Param('upto', '--upto', _at_least('upto', 1), required=True,
                                              help='Largest w'),
                                        _gens(required=False)],
              'Hall-Petresco words of the first n generators'),
    Operation('witness', op_witness, [Param('p', '--prime', validate_prime, required=True, help='Prime p'), _word(),
                                      _gens(minimum=1, required=False),
                                      Param('max_degree', '--max-degree', _at_least('max-degree', 1),
                                            default=Defaults.WITNESS_MAX_DEGREE, help='Witness degree cap')],
              'Residual p-witness of a nontrivial word'),
    Operation('rep', op_rep, [_gens(), _class(), _ring(),
                              Param('word', '--word', _text, help='Image of this word instead of the generators'),
                              Param('max_dim', '--max-dim', _at_least('max-dim', 1),
                                    default=Defaults.MAX_REP_DIMENSION, help='Dimension cap')],
              'Regular unitriangular representation'),
    Operation('grouplaw', op_grouplaw, [_gens(), _class(), _seed()], 'Fitted Mal\'cev group law polynomials'),
    Operation('roots', op_roots, [_gens(), _class(),
                                  Param('exponent', '--lambda', validate_rational, required=True,
                                        help='Rational exponent a/b'),
                                  Param('coordinates', None, lambda value: validate_rational_vector(value, 'coordinates'),
                                        required=True,
                                        help='Comma-separated rational coordinates'),
                                  _seed()],
              'Rational power of Mal\'cev coordinates'),
]}


def run_operation(name: str, raw: Dict[str, Any]) -> OperationOutput:
    """
    Validate parameters and run an operation.

    Raises:
        KeyError: Unknown operation
        ValueError: Invalid parameters (AlgebraError subclasses for domain failures)
    """
    operation = OPERATIONS[name]
    logger.debug(f"Running {name} with {raw}")
    return operation.run(raw)
