class TestComputeEndpoints:
    def test_health(self, client):
        assert client.get('/api/health').get_json() == {'status': 'ok'}

    def test_index(self, client):
        body = client.get('/api/').get_json()
        assert 'collect' in body['operations']
        assert 'witt_counts' in body['checks']
        assert body['max_rep_dimension'] == 10000

    def test_list_operations(self, client):
        body = client.get('/api/compute/').get_json()
        names = {operation['name'] for operation in body['operations']}
        assert {'basis', 'collect', 'mul', 'witness', 'grouplaw'} <= names

    def test_collect(self, client):
        response = client.post('/api/compute/collect', json={'q': 2, 'c': 2, 'word': 'x2*x1'})
        assert response.status_code == 200
        assert response.get_json()['result']['exponents'] == ['1', '1', '1']

    def test_mul_with_element_documents(self, client):
        response = client.post('/api/compute/mul', json={
            'a': {'q': 2, 'c': 2, 'exponents': ['1', '2', '3']},
            'b': {'q': 2, 'c': 2, 'exponents': ['4', '5', '6']},
        })
        assert response.get_json()['result']['exponents'] == ['5', '7', '17']

    def test_witness(self, client):
        response = client.post('/api/compute/witness', json={'p': 3, 'word': 'x1^2'})
        result = response.get_json()['result']
        assert result['N'] == 1
        assert result['coeff'] == '2'

    def test_rep_uses_configured_dimension_cap(self, client):
        response = client.post('/api/compute/rep', json={'q': 2, 'c': 2, 'ring': 'Q'})
        assert response.status_code == 200
        assert response.get_json()['result']['ring'] == 'Q'

    def test_bad_word(self, client):
        response = client.post('/api/compute/collect', json={'q': 2, 'c': 2, 'word': 'x1*?'})
        assert response.status_code == 400
        assert response.get_json()['error'] == 'WordSyntaxError'

    def test_missing_parameter(self, client):
        response = client.post('/api/compute/collect', json={'q': 2, 'word': 'x1'})
        assert response.status_code == 400

    def test_invalid_class(self, client):
        response = client.post('/api/compute/basis', json={'q': 2, 'c': 0})
        assert response.status_code == 400
        assert 'class must be at least 1' in response.get_json()['message']

    def test_unknown_parameter(self, client):
        response = client.post('/api/compute/witt', json={'q': 2, 'w': 3, 'verbose': True})
        assert response.status_code == 400

    def test_trivial_witness(self, client):
        response = client.post('/api/compute/witness', json={'p': 2, 'word': '1'})
        assert response.status_code == 422
        assert response.get_json()['error'] == 'TrivialWordError'

    def test_unknown_operation(self, client):
        assert client.post('/api/compute/frobnicate', json={}).status_code == 404

    def test_body_must_be_object(self, client):
        assert client.post('/api/compute/witt', json=[2, 3]).status_code == 400


class TestCheckEndpoints:
    def test_list(self, client):
        body = client.get('/api/checks/').get_json()
        assert body['success']
        assert 'witt_counts' in {check['id'] for check in body['checks']}

    def test_run(self, client):
        response = client.post('/api/checks/run', json={'checks': [
            {'check_id': 'lcs_filtration', 'config': {'trials': 5, 'class_bound': 3}},
            {'check_id': 'witt_counts', 'config': {'max_class_q2': 4, 'max_class_q3': 3}},
        ]})
        body = response.get_json()
        assert body['passed']
        assert body['total_checks'] == 2
        assert body['passed_count'] == 2

    def test_run_reports_bad_config(self, client):
        body = client.post('/api/checks/run', json={'checks': [
            {'check_id': 'lcs_filtration', 'config': {'bogus': 1}},
            {'check_id': 'no_such_check'},
            {'config': {}},
        ]}).get_json()
        assert not body['passed']
        assert body['failed_count'] == 3
        assert 'Unknown config field' in body['results'][0]['error']

    def test_run_needs_checks(self, client):
        assert client.post('/api/checks/run', json={}).status_code == 400
