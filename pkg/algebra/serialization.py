"""
Serialization
JSON documents for every value the toolkit exchanges. Arbitrary-precision
numbers travel as decimal strings (a/b for rationals).
"""
from fractions import Fraction
from typing import Any, Dict, List

from .collector import GroupElement, nilpotent_context
from .errors import AlgebraError, DeserializationError
from .group_law import GroupLaw, IntPolynomial
from .hall_basis import HallBasis
from .magnus import TruncSeries, Witness
from .matrix_rep import UniTriMatrix
from .parser import parse_commutator, parse_word
from .rings import from_tag


def _require(document: Dict, *keys: str) -> None:
    if not isinstance(document, dict):
        raise DeserializationError(f"Expected a JSON object, got {type(document).__name__}")
    missing = [key for key in keys if key not in document]
    if missing:
        raise DeserializationError(f"Missing field(s): {', '.join(missing)}")


def _integer(text: Any) -> int:
    try:
        return int(str(text).strip())
    except ValueError:
        raise DeserializationError(f"'{text}' is not an integer")


def _rational(text: Any) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise DeserializationError(f"'{text}' is not a rational number")


def render_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ============ Basis ============

def basis_to_json(basis: HallBasis) -> List[Dict]:
    return basis.to_list()


def basis_entries_from_json(document: List[Dict]) -> List[Dict]:
    """Validate a basis document and parse its bracket expressions"""
    if not isinstance(document, list):
        raise DeserializationError("Basis document must be a list")
    entries = []
    for item in document:
        _require(item, 'index', 'weight', 'expr')
        expr = parse_commutator(item['expr'])
        if expr.weight != _integer(item['weight']):
            raise DeserializationError(f"Weight of {item['expr']} does not match {item['weight']}")
        entries.append({'index': _integer(item['index']), 'weight': expr.weight, 'expr': expr})
    return entries


# ============ Group elements ============

def element_to_json(g: GroupElement) -> Dict:
    return {'q': g.ctx.q, 'c': g.ctx.c, 'exponents': [str(e) for e in g.exponents]}


def element_from_json(document: Dict) -> GroupElement:
    _require(document, 'q', 'c', 'exponents')
    try:
        ctx = nilpotent_context(_integer(document['q']), _integer(document['c']))
        return ctx.element([_integer(e) for e in document['exponents']])
    except DeserializationError:
        raise
    except AlgebraError as exc:
        raise DeserializationError(str(exc))


# ============ Series ============

def series_to_json(series: TruncSeries) -> Dict:
    return {
        'D': series.D,
        'ring': series.ring.tag,
        'terms': [{'mono': list(m), 'coeff': series.ring.render(c)} for m, c in series.items()],
    }


def series_from_json(document: Dict) -> TruncSeries:
    _require(document, 'D', 'ring', 'terms')
    try:
        ring = from_tag(document['ring'])
    except AlgebraError as exc:
        raise DeserializationError(str(exc))
    terms = {}
    for term in document['terms']:
        _require(term, 'mono', 'coeff')
        terms[tuple(_integer(g) for g in term['mono'])] = ring.normalize(_rational(term['coeff']))
    return TruncSeries(_integer(document['D']), ring, terms)


# ============ Witnesses ============

def witness_to_json(witness: Witness) -> Dict:
    return witness.to_dict()


def witness_from_json(document: Dict) -> Witness:
    _require(document, 'word', 'p', 'q', 'N', 'monomial', 'coeff', 'group_order_exponent')
    closed = document.get('closed_form_coeff')
    return Witness(
        word=parse_word(document['word']),
        p=_integer(document['p']),
        q=_integer(document['q']),
        N=_integer(document['N']),
        monomial=tuple(_integer(g) for g in document['monomial']),
        coeff=_integer(document['coeff']),
        group_order_exponent=_integer(document['group_order_exponent']),
        closed_form_coeff=None if closed is None else _integer(closed),
    )


# ============ Matrices ============

def matrix_to_json(matrix: UniTriMatrix) -> Dict:
    return {
        'n': matrix.n,
        'ring': matrix.ring.tag,
        'rows': [[matrix.ring.render(v) for v in row] for row in matrix.entries],
    }


def matrix_from_json(document: Dict) -> UniTriMatrix:
    _require(document, 'n', 'ring', 'rows')
    try:
        ring = from_tag(document['ring'])
        matrix = UniTriMatrix([[_rational(v) for v in row] for row in document['rows']], ring)
    except DeserializationError:
        raise
    except AlgebraError as exc:
        raise DeserializationError(str(exc))
    if matrix.n != _integer(document['n']):
        raise DeserializationError(f"Matrix has {matrix.n} rows, document says {document['n']}")
    return matrix


# ============ Polynomials and group laws ============

def polynomial_to_json(poly: IntPolynomial) -> List[Dict]:
    return [
        {'coeff': str(coeff), 'factors': [{'var': var, 'r': r} for var, r in factors]}
        for coeff, factors in poly.terms
    ]


def polynomial_from_json(document: List[Dict]) -> IntPolynomial:
    if not isinstance(document, list):
        raise DeserializationError("Polynomial document must be a list of terms")
    terms = []
    for term in document:
        _require(term, 'coeff', 'factors')
        factors = []
        for factor in term['factors']:
            _require(factor, 'var', 'r')
            factors.append((str(factor['var']), _integer(factor['r'])))
        terms.append((_integer(term['coeff']), tuple(factors)))
    return IntPolynomial(tuple(terms))


def group_law_to_json(law: GroupLaw) -> Dict:
    return {
        'q': law.ctx.q,
        'c': law.ctx.c,
        'zeta': [polynomial_to_json(p) for p in law.mul_polys],
        'omega': [polynomial_to_json(p) for p in law.pow_polys],
    }


def group_law_from_json(document: Dict) -> GroupLaw:
    _require(document, 'q', 'c', 'zeta', 'omega')
    ctx = nilpotent_context(_integer(document['q']), _integer(document['c']))
    zeta = tuple(polynomial_from_json(p) for p in document['zeta'])
    omega = tuple(polynomial_from_json(p) for p in document['omega'])
    if len(zeta) != ctx.rank or len(omega) != ctx.rank:
        raise DeserializationError(f"Group law for q={ctx.q}, c={ctx.c} needs {ctx.rank} polynomials")
    return GroupLaw(ctx=ctx, mul_polys=zeta, pow_polys=omega)
