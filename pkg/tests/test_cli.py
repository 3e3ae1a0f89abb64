import json

import pytest

from hopfdouble.lib import bosonization, common, hopfcore, repmod
from hopfdouble.lib.scalars import ONE, as_scalar
from hopfdouble.tools import hopfcli


def run(tmp_path, *argv):
    out = tmp_path / 'out.json'
    code = hopfcli.main(['--no-cache', 'true', '--out', str(out)] + list(argv))
    data = json.loads(out.read_text(encoding='utf-8')) if out.exists() else None
    return code, data


def test_export_C(tmp_path):
    code, data = run(tmp_path, 'catalog', 'export', 'C')
    assert code == hopfcli.EXIT_OK
    assert data['dim'] == 12
    assert data['basis'][6] == 'b'
    assert 'hopf' in data['certified']
    assert data['schema_version'] == 1


def test_verify_C(tmp_path):
    code, data = run(tmp_path, 'catalog', 'verify', 'C')
    assert code == hopfcli.EXIT_OK
    assert data['passed']
    assert data['grouplikes'] == 2


def test_perturbed_structure_fails(tmp_path):
    code, data = run(tmp_path, 'catalog', 'verify', 'C', '--perturb', 'comult:0,0,0:+1')
    assert code == hopfcli.EXIT_FAILED
    assert not data['passed']


@pytest.mark.parametrize('argv', [
    ['catalog', 'export', 'E8'],
    ['catalog', 'verify', 'C', '--perturb', 'mult:0,0'],
    ['catalog', 'verify', 'C', '--perturb', 'unit:0:1'],
    ['explain'],
    ['--theta-sign', 'both', 'catalog', 'export', 'C'],
])
def test_usage_errors(tmp_path, argv):
    code, _ = run(tmp_path, *argv)
    assert code == hopfcli.EXIT_USAGE


def test_parse_perturbation():
    assert hopfcli.parse_perturbation('mult:1,2,3:-x') == ('mult', [1, 2, 3], '-x')
    with pytest.raises(hopfcli.UsageError):
        hopfcli.parse_perturbation('mult:a,b,c:1')


def test_nichols_of_odd_character(tmp_path):
    code, data = run(tmp_path, '--maxdeg', '3', 'nichols', '--module', 'K1')
    assert code == hopfcli.EXIT_OK
    assert data['module'] == 'K_chi^1'
    assert data['ranks'] == [1, 1, 0, 0]
    assert data['verdict'] == 'finite'
    assert data['total'] == 2


def test_corrupted_cache_entry_is_rebuilt(tmp_path, C):
    cache = common.JsonCache(str(tmp_path / 'cache'), 'plus', 1)
    data = hopfcore.to_json(C)
    i, j, k, s = data['mult'][5]
    data['mult'][5] = [i, j, k, (as_scalar(s) + ONE).to_literal()]
    cache.put('C', data)
    out = tmp_path / 'out.json'
    code = hopfcli.main(['--cache-dir', str(tmp_path / 'cache'), '--out', str(out), 'catalog', 'verify', 'C'])
    assert code == hopfcli.EXIT_OK
    assert json.loads(out.read_text(encoding='utf-8'))['passed']
    assert hopfcore.from_json(cache.get('C')).mult == C.mult


def test_full_report(tmp_path):
    code, data = run(tmp_path, '--maxdeg', '3', 'full-report')
    claims = data['claims']
    failed = [name for name, c in claims.items() if c['passed'] is False]
    assert code == (hopfcli.EXIT_FAILED if failed else hopfcli.EXIT_OK)
    assert data['partial']
    for name in ('hopf_axioms_C', 'grouplikes_C', 'double_dim_144', 'simple_census', 'ext_table_characters',
                 'coproduct_identities_K1', 'presentation_relations_K1', 'seven_biproducts'):
        assert claims[name]['passed'] is True, name
    assert claims['finite_nichols_dim_6']['passed'] is None
    assert set('coproduct_identities_%s' % n for n in bosonization.BOSONIZATION_NAMES) <= set(claims)
    assert data['results']['separated_graph_type'] == 'tame'
    assert data['results']['representation_type'] == repmod.UNDETERMINED
    assert any(e['table'] == 'representation type' for e in data['errata'])
