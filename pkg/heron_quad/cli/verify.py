"""heron-quad verify command."""
import sys
import json
import logging

import click

from heron_quad.envelope import OutputEnvelope
from heron_quad.exactnum import parse_rational, rational_to_str
from heron_quad.geometry import QuadConstruction, construct_quad
from heron_quad.family import f1_member
from heron_quad.verify import verify_construction, verify_member

from .util import RATIONAL, EXIT_VERIFICATION, out_option, exit_on_domain_error, \
    exit_on_unexpected_error

_logger = logging.getLogger(__name__)

RECORDED_KEYS = ('vertices', 'sides', 'diagonals', 'tangents', 'circumcircle', 'area')


def _strip_decimals(obj):
    """Remove the decimal approximations from a serialized value, keeping exact parts."""
    if isinstance(obj, dict):
        return {key: _strip_decimals(val) for key, val in obj.items()
                if 'decimal' not in key}
    if isinstance(obj, list):
        return [_strip_decimals(val) for val in obj]
    return obj


def read_verification_input(file_path):
    """Read a verification document from a JSON file.

    The file may hold the output of the construct command, a QuadConstruction
    dictionary, {"triple": [alpha, beta, gamma]} or {"params": [delta, m, n]}.

    Returns:
        A dictionary with one of the keys "construction", "triple" or "params".
    """
    try:
        with open(file_path, encoding='utf-8') as inf:
            data = json.load(inf)
    except ValueError as e:
        raise click.BadParameter('File is not valid JSON: {}'.format(e),
                                 param_hint='--input')
    if isinstance(data, dict) and 'command' in data and 'result' in data:
        data = data['result']
    if not isinstance(data, dict):
        raise click.BadParameter('Expected a JSON object.', param_hint='--input')
    if data.get('type') == 'QuadConstruction':
        return {'construction': data}
    for key in ('triple', 'params'):
        if key in data:
            values = data[key]
            if isinstance(values, dict):  # F1Member.to_dict params
                values = [values.get(k) for k in ('delta', 'm', 'n')]
            if not isinstance(values, list) or len(values) != 3:
                raise click.BadParameter(
                    '"{}" must be a list of three numbers.'.format(key),
                    param_hint='--input')
            return {key: values}
    raise click.BadParameter(
        'Expected construct output, "triple" or "params".', param_hint='--input')


def run_verification(document):
    """Run the oracles requested by a verification document.

    Returns:
        A tuple with the VerificationReport and a dictionary of extra result keys.
    """
    extra = {}
    if 'params' in document:
        delta, m, n = (int(str(v)) for v in document['params'])
        mem = f1_member(delta, m, n)
        extra['is_heron'] = mem.is_heron
        return verify_member(mem), extra
    if 'construction' in document:
        recorded = document['construction']
        q = QuadConstruction.from_dict(recorded)
        report = verify_construction(q)
        fresh = q.to_dict()
        for key in RECORDED_KEYS:
            if key in recorded:
                expected, actual = _strip_decimals(fresh[key]), _strip_decimals(recorded[key])
                report.add_check('recorded {}'.format(key), expected == actual,
                                 json.dumps(expected, sort_keys=True),
                                 json.dumps(actual, sort_keys=True))
        return report, extra
    q = construct_quad(*(parse_rational(str(v)) for v in document['triple']))
    return verify_construction(q), extra


@click.command('verify')
@click.option('--triple', nargs=3, type=RATIONAL, default=None,
              help='Pythagorean triple alpha beta gamma to be constructed and verified.')
@click.option('--params', nargs=3, type=int, default=None,
              help='Generators delta m n of a member of family F1.')
@click.option('--input', '-i', 'input_file', default=None,
              type=click.Path(exists=True, file_okay=True, dir_okay=False,
                              resolve_path=True),
              help='JSON file with construct output, {"triple": [...]} or '
              '{"params": [...]}.')
@out_option
def verify(triple, params, input_file, out):
    """Re-derive every property of a construction from its coordinates.

    The exit code is 4 when any check fails. Errata in printed reference values
    are reported without failing.
    """
    # a missing nargs option comes through as None or an empty tuple
    given = [name for name, val in (('--triple', triple), ('--params', params),
                                    ('--input', input_file)) if val]
    if len(given) != 1:
        raise click.UsageError(
            'Use exactly one of --triple, --params or --input. Got {}.'.format(
                ', '.join(given) or 'none'))
    if triple:
        document = {'triple': [rational_to_str(v) for v in triple]}
    elif params:
        document = {'params': list(params)}
    else:
        document = read_verification_input(input_file)

    try:
        report, extra = run_verification(document)
        result = report.to_dict()
        result.update(extra)
        inputs = {'input': input_file} if input_file else dict(document)
        out.write(OutputEnvelope('verify', inputs, result, report.errata).to_json()
                  + '\n')
    except (ValueError, NotImplementedError) as e:
        exit_on_domain_error(e, 'verify')
    except Exception as e:
        exit_on_unexpected_error(e, 'verify')
    else:
        if report.has_failures:
            sys.exit(EXIT_VERIFICATION)
        sys.exit(0)
