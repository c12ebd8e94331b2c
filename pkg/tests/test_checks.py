import json

import pytest

from algebra.collector import Collector, lcs_weight, nilpotent_context
from algebra.parser import parse_word
from check_engine import CHECK_REGISTRY, OracleComparator, create_check, get_available_checks

SMALL_CONFIGS = {
    'witt_counts': {'max_class_q2': 5, 'max_class_q3': 3},
    'dual_oracle': {'trials': 15, 'max_length': 6, 'max_class': 3},
    'identity_suite': {'trials': 3, 'gens': 2, 'class_bound': 3, 'max_length': 2, 'literal_trials': 1},
    'lie_congruence': {'gens': 2, 'max_weight': 4},
    'petresco': {'trials': 5, 'max_class': 3, 'max_gens': 2, 'bound': 2},
    'group_law': {'trials': 5},
    'radicability': {'trials': 5, 'max_root': 3, 'max_dimension': 4},
    'residual_witness': {'trials': 5, 'max_length': 4, 'max_degree': 8},
    'unitriangular': {'trials': 10, 'max_dimension': 4, 'max_class_dimension': 4, 'class_trials': 3},
    'dimension_filtration': {'trials': 5, 'class_bound': 3, 'max_length': 5, 'max_terms': 5},
    'lcs_filtration': {'trials': 10, 'class_bound': 3},
}


class TestRegistry:
    def test_every_check_listed(self):
        listed = {check['id'] for check in get_available_checks()}
        assert listed == set(CHECK_REGISTRY)
        assert listed == set(SMALL_CONFIGS)

    def test_listing_has_schema(self):
        for check in get_available_checks():
            assert 'properties' in check['config_schema']
            assert check['name'] and check['description']

    def test_unknown_check(self):
        with pytest.raises(ValueError, match="Unknown check"):
            create_check('no_such_check')


class TestConfigValidation:
    def test_unknown_field(self):
        with pytest.raises(ValueError, match="Unknown config field"):
            create_check('lcs_filtration').execute({'bogus': 1})

    def test_below_minimum(self):
        with pytest.raises(ValueError, match="at least"):
            create_check('lcs_filtration').execute({'trials': 0})

    def test_not_an_integer(self):
        with pytest.raises(ValueError, match="integer"):
            create_check('dual_oracle').execute({'trials': 'many'})


@pytest.mark.parametrize('check_id', sorted(SMALL_CONFIGS))
def test_check_passes(check_id):
    result = create_check(check_id).execute(dict(SMALL_CONFIGS[check_id], seed=0))
    document = result.to_dict()
    assert result.passed, document.get('failures')
    assert document['passed'] is True
    assert 'failures' not in document
    assert document['statistics']['failures'] == 0


def test_same_seed_same_details():
    config = {'trials': 10, 'max_length': 5, 'max_class': 3, 'seed': 7}
    first = create_check('dual_oracle').execute(config).to_dict()
    second = create_check('dual_oracle').execute(config).to_dict()
    assert first['details'] == second['details']


class TestOracleComparator:
    def test_equal_and_distinct_pairs(self):
        ctx = nilpotent_context(2, 2)
        pairs = [
            (parse_word("[[x1,x2],x1]"), parse_word("1")),
            (parse_word("x1*x2"), parse_word("x2*x1")),
            (parse_word("x1*x2*x1"), parse_word("x1^2*x2*[x2,x1]")),
        ]
        result = OracleComparator().compare_words(pairs, ctx)
        assert result.match
        assert result.summary == {'pairs_compared': 3, 'disagreements': 0, 'equal_pairs': 2}

    def test_homomorphism(self):
        ctx = nilpotent_context(3, 3)
        pairs = [(parse_word("x1*x3^-2"), parse_word("[x2,x3]*x1")), (parse_word("1"), parse_word("x2^5"))]
        result = OracleComparator().compare_homomorphism(pairs, ctx)
        assert result.match
        assert result.to_dict()['mismatches'] == []


@pytest.fixture
def corrupted_collector(monkeypatch):
    """Collector whose results are off by one in the last coordinate"""
    original_multiply = Collector.multiply
    original_collect = Collector.collect_word

    def shifted(exponents):
        return tuple(exponents[:-1]) + (exponents[-1] + 1,)

    nilpotent_context.cache_clear()
    monkeypatch.setattr(Collector, 'multiply', lambda self, a, b: shifted(original_multiply(self, a, b)))
    monkeypatch.setattr(Collector, 'collect_word', lambda self, word: shifted(original_collect(self, word)))
    yield
    monkeypatch.undo()
    nilpotent_context.cache_clear()


FAILING_CONFIGS = {
    'dual_oracle': {'trials': 6, 'max_length': 5, 'max_class': 2},
    'lcs_filtration': {'trials': 30, 'class_bound': 2},
    'petresco': {'trials': 10, 'max_class': 3, 'max_gens': 2, 'bound': 2},
    'identity_suite': {'trials': 3, 'gens': 2, 'class_bound': 3, 'max_length': 2, 'literal_trials': 1},
}


@pytest.mark.parametrize('check_id', sorted(FAILING_CONFIGS))
def test_wrong_collector_is_reported(corrupted_collector, check_id):
    result = create_check(check_id).execute(dict(FAILING_CONFIGS[check_id], seed=0))
    assert not result.passed
    assert not result.failures.empty

    document = json.loads(json.dumps(result.to_dict()))
    assert document['passed'] is False
    assert document['statistics']['failures'] > 0
    assert document['failure_count'] == len(result.failures)
    assert 0 < len(document['failures']) <= 20
    assert 'fail' in document['message']


def test_failure_count_matches_reported_rows(corrupted_collector):
    result = create_check('lcs_filtration').execute({'trials': 40, 'class_bound': 2, 'seed': 1})
    document = result.to_dict()
    assert document['failure_count'] == document['statistics']['failures']
    assert len(document['failures']) == min(20, document['failure_count'])


def test_deep_elements_clear_a_weight_prefix(monkeypatch, rng):
    from check_engine.checks import lcs_filtration

    ctx = nilpotent_context(2, 5)
    monkeypatch.setattr(lcs_filtration, 'random_element', lambda generator, context: context.element([1] * context.rank))
    weights = ctx.basis.weights
    cutoffs = set()
    for _ in range(60):
        g = lcs_filtration.LcsFiltrationCheck._deep_element(rng, ctx)
        cutoff = lcs_weight(g)
        assert g.exponents == tuple(0 if w < cutoff else 1 for w in weights)
        cutoffs.add(cutoff)
    assert cutoffs == {1, 2, 3, 4, 5}


class TestUnitriangularClassBound:
    def test_random_tuples_are_counted(self):
        result = create_check('unitriangular').execute(
            {'trials': 2, 'max_dimension': 3, 'max_class_dimension': 4, 'class_trials': 5, 'seed': 3})
        assert result.passed
        assert result.statistics['trials'] == 2 + 3 * (1 + 5)

    def test_non_nilpotent_commutator_is_caught_over_integers(self, monkeypatch):
        from check_engine.checks import unitriangular

        # commutators that never shrink: the first factor comes back unchanged
        monkeypatch.setattr(unitriangular, 'left_normed_commutator', lambda matrices: matrices[0])
        result = create_check('unitriangular').execute(
            {'trials': 1, 'max_dimension': 2, 'max_class_dimension': 4, 'class_trials': 4, 'seed': 0})
        assert not result.passed
        bound_failures = result.failures[result.failures['kind'] == 'class bound']
        assert set(bound_failures['ring']) == {'Z', 'Fp:2'}
        assert (bound_failures['levels'] < bound_failures['n']).all()
