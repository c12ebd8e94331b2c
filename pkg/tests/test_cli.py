import io
import json

import pytest

from cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, run


def invoke(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


class TestComputations:
    def test_witt(self):
        code, out, _ = invoke('witt', '--gens', '2', '--weight', '6')
        assert code == EXIT_OK
        assert json.loads(out) == 9

    def test_collect_text(self):
        code, out, _ = invoke('--format', 'text', 'collect', '--gens', '2', '--class', '2', 'x2*x1')
        assert code == EXIT_OK
        assert out.strip() == '(1,1,1)'

    def test_format_after_subcommand(self):
        code, out, _ = invoke('collect', '--gens', '2', '--class', '2', '--format', 'text', 'x2*x1')
        assert code == EXIT_OK
        assert out.strip() == '(1,1,1)'

    def test_collect_json(self):
        code, out, _ = invoke('collect', '--gens', '2', '--class', '2', '[x1,x2]^3')
        assert json.loads(out) == {'q': 2, 'c': 2, 'exponents': ['0', '0', '-3']}

    def test_mul_json_elements(self):
        a = json.dumps({'q': 2, 'c': 2, 'exponents': ['1', '2', '3']})
        b = json.dumps({'q': 2, 'c': 2, 'exponents': ['4', '5', '6']})
        code, out, _ = invoke('mul', a, b)
        assert code == EXIT_OK
        assert json.loads(out)['exponents'] == ['5', '7', '17']

    def test_mul_exponent_lists(self):
        code, out, _ = invoke('--format', 'text', 'mul', '--gens', '2', '--class', '2', '1,2,3', '4,5,6')
        assert out.strip() == '(5,7,17)'

    def test_pow_and_comm(self):
        _, out, _ = invoke('--format', 'text', 'pow', '--gens', '2', '--class', '2', '--exp', '3', '1,1,0')
        assert out.strip() == '(3,3,3)'
        _, out, _ = invoke('--format', 'text', 'comm', '--gens', '2', '--class', '2', '1,0,0', '0,1,0')
        assert out.strip() == '(0,0,-1)'

    def test_hilbert(self):
        code, out, _ = invoke('hilbert', '--gens', '2', '--class', '2', '--terms', '4')
        assert code == EXIT_OK
        assert json.loads(out) == [1, 2, 4, 6, 9]

    def test_dimweight(self):
        _, out, _ = invoke('dimweight', '--gens', '2', '--deg', '4', '[x1,x2]')
        assert json.loads(out)['weight'] == 2
        _, out, _ = invoke('--format', 'text', 'dimweight', '--gens', '2', '--deg', '2', '[x1,x2,x2]')
        assert out.strip() == '> 2'

    def test_witness(self):
        code, out, _ = invoke('witness', '--prime', '3', 'x1^2')
        assert code == EXIT_OK
        document = json.loads(out)
        assert document['N'] == 1
        assert document['coeff'] == '2'

    def test_petresco(self):
        _, out, _ = invoke('petresco', '--class', '2', '--count', '2', '--upto', '2')
        assert json.loads(out)['taus'] == [['1', '1', '0'], ['0', '0', '-1']]

    def test_basis(self):
        _, out, _ = invoke('basis', '--gens', '2', '--class', '3')
        assert [entry['weight'] for entry in json.loads(out)] == [1, 1, 2, 3, 3]

    def test_rep_dimension(self):
        _, out, _ = invoke('rep', '--gens', '2', '--class', '2')
        document = json.loads(out)
        assert document['dimension'] == len(document['monomials'])
        assert len(document['matrices']) == 2

    def test_roots(self):
        code, out, _ = invoke('--format', 'text', 'roots', '--gens', '2', '--class', '2', '--lambda', '1/2', '2,2,3')
        assert code == EXIT_OK
        assert out.strip() == '(1,1,1)'


class TestChecks:
    def test_list(self):
        code, out, _ = invoke('check', '--list')
        assert code == EXIT_OK
        assert 'lcs_filtration' in {item['id'] for item in json.loads(out)}

    def test_run(self):
        code, out, _ = invoke('check', 'lcs_filtration', '--trials', '5')
        assert code == EXIT_OK
        assert json.loads(out)['passed'] is True

    def test_unknown_check(self):
        code, _, err = invoke('check', 'no_such_check')
        assert code == EXIT_USAGE
        assert 'Unknown check' in err


class TestErrors:
    def test_bad_word(self):
        code, out, err = invoke('collect', '--gens', '2', '--class', '2', 'x1*?')
        assert code == EXIT_USAGE
        assert out == ''
        assert err.startswith('error:')

    def test_generator_out_of_range(self):
        code, _, _ = invoke('collect', '--gens', '2', '--class', '2', 'x3')
        assert code == EXIT_USAGE

    def test_trivial_witness(self):
        code, _, err = invoke('witness', '--prime', '3', 'x1*x1^-1')
        assert code == EXIT_DOMAIN
        assert 'error' in err

    def test_class_too_large_for_group_law(self):
        code, _, _ = invoke('grouplaw', '--gens', '2', '--class', '5')
        assert code == EXIT_DOMAIN

    def test_missing_flag(self):
        code, _, _ = invoke('collect', '--gens', '2', 'x1')
        assert code == EXIT_USAGE

    def test_invalid_gens(self):
        code, _, err = invoke('basis', '--gens', '1', '--class', '2')
        assert code == EXIT_USAGE
        assert 'gens must be at least 2' in err

    def test_invalid_class(self):
        code, _, err = invoke('collect', '--gens', '2', '--class', '0', 'x1')
        assert code == EXIT_USAGE
        assert 'class must be at least 1' in err

    def test_unknown_subcommand(self):
        code, _, _ = invoke('frobnicate')
        assert code == EXIT_USAGE

    def test_bad_element_json(self):
        code, _, _ = invoke('mul', '{"q": 2', '{"q": 2}')
        assert code == EXIT_USAGE

    @pytest.mark.parametrize('ring', ['Fp:4', 'R'])
    def test_bad_ring(self, ring):
        code, _, _ = invoke('magnus', '--gens', '2', '--deg', '2', '--ring', ring, 'x1')
        assert code == EXIT_USAGE
