"""
Algebra Package
Hall bases, collection, Magnus embeddings, Petresco words, unitriangular
representations and polynomial group laws for free nilpotent groups.
"""
from .collector import (
    GroupElement,
    NilpotentContext,
    collect,
    commutator,
    inv,
    lcs_weight,
    mul,
    nilpotent_context,
    power,
    representative_word,
    substitute,
)
from .errors import (
    AlgebraError,
    ContextMismatchError,
    DeserializationError,
    FitError,
    GeneratorRangeError,
    PreconditionError,
    RingMismatchError,
    TrivialWordError,
    WordSyntaxError,
)
from .group_law import GroupLaw, IntPolynomial, fit_group_law, law_commutator, law_inverse, law_mul, law_pow
from .hall_basis import HallBasis, basic_products, euler_product, generate_basis, moebius, witt_number
from .magnus import (
    TruncSeries,
    Witness,
    dimension_weight,
    hilbert_coeffs,
    lie_expand,
    magnus_embed,
    residual_witness,
    unit_inverse,
)
from .matrix_rep import (
    RegularRepresentation,
    UniTriMatrix,
    binomial_pow,
    class_witness,
    level,
    mat_commutator,
    mat_inv,
    mat_mul,
    mat_pow,
    regular_rep,
)
from .parser import parse_commutator, parse_word
from .petresco import PetrescoResult, petresco, verify_tau_weight
from .rings import INTEGERS, RATIONALS, CoeffRing, from_tag, prime_field
from .words import Bracket, Leaf, Word, bracket, commutator_word, concat, expand_commutator, free_reduce, invert

__all__ = [
    'AlgebraError', 'Bracket', 'CoeffRing', 'ContextMismatchError', 'DeserializationError',
    'FitError', 'GeneratorRangeError', 'GroupElement', 'GroupLaw', 'HallBasis', 'INTEGERS',
    'IntPolynomial', 'Leaf', 'NilpotentContext', 'PetrescoResult', 'PreconditionError',
    'RATIONALS', 'RegularRepresentation', 'RingMismatchError', 'TrivialWordError',
    'TruncSeries', 'UniTriMatrix', 'Witness', 'Word', 'WordSyntaxError',
    'basic_products', 'binomial_pow', 'bracket', 'class_witness', 'collect', 'commutator',
    'commutator_word', 'concat', 'dimension_weight', 'euler_product', 'expand_commutator',
    'fit_group_law', 'free_reduce', 'from_tag', 'generate_basis', 'hilbert_coeffs', 'inv',
    'invert', 'law_commutator', 'law_inverse', 'law_mul', 'law_pow', 'lcs_weight', 'level',
    'lie_expand', 'magnus_embed', 'mat_commutator', 'mat_inv', 'mat_mul', 'mat_pow',
    'moebius', 'mul', 'nilpotent_context', 'parse_commutator', 'parse_word', 'petresco',
    'power', 'prime_field', 'regular_rep', 'representative_word', 'residual_witness',
    'substitute', 'unit_inverse', 'verify_tau_weight', 'witt_number',
]
