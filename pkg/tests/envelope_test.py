"""Test the output envelope and the CSV helpers."""
import json
from fractions import Fraction

import pytest

from heron_quad.envelope import OutputEnvelope, rows_to_csv, csv_to_rows, csv_value, \
    package_version


def test_envelope_init():
    """Test the initialization of OutputEnvelope and its properties."""
    env = OutputEnvelope('solve', {'alpha': '3'}, {'kind': 'Families'}, version='1.0')
    assert env.command == 'solve'
    assert env.inputs == {'alpha': '3'}
    assert env.result == {'kind': 'Families'}
    assert env.errata == []
    assert env.version == '1.0'
    assert 'solve' in str(env)
    assert isinstance(OutputEnvelope('x', {}, None).version, str)
    assert isinstance(package_version(), str)

    with pytest.raises(AssertionError):
        OutputEnvelope(1, {}, None)
    with pytest.raises(AssertionError):
        OutputEnvelope('solve', ['alpha'], None)


def test_envelope_json():
    """Test the JSON text and key order of OutputEnvelope."""
    env = OutputEnvelope('construct', {'triple': ['3', '4', '5']}, {'area': '243/10'},
                         ['printed y = 92'], version='1.0')
    text = env.to_json()
    assert list(json.loads(text)) == ['command', 'inputs', 'result', 'errata', 'version']
    new_env = OutputEnvelope.from_json(text)
    assert new_env.to_dict() == env.to_dict()

    text = OutputEnvelope('construct', {}, {'label': u'Γ₁'}, version='1.0').to_json()
    assert u'Γ₁' in text

    with pytest.raises(ValueError, match='result'):
        OutputEnvelope.from_dict({'command': 'solve', 'inputs': {}})


def test_csv_helpers():
    """Test that CSV cells keep exact values."""
    assert csv_value(None) == ''
    assert csv_value(Fraction(56, 5)) == '56/5'
    assert csv_value(12288) == '12288'

    text = rows_to_csv(('t1', 'x', 'area'), [[2, Fraction(56, 5), 12288],
                                             [None, Fraction(-1, 3), 7]])
    assert text.splitlines()[0] == 't1,x,area'
    assert text.splitlines()[1] == '2,56/5,12288'
    columns, rows = csv_to_rows(text)
    assert columns == ['t1', 'x', 'area']
    assert rows == [[2, Fraction(56, 5), 12288], [None, Fraction(-1, 3), 7]]
