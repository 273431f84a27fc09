"""Parameter types, output helpers and exit codes shared by the CLI commands."""
import sys
import logging

import click

from heron_quad.exactnum import parse_rational
from heron_quad.trigsolve import parse_coefficient

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_VERIFICATION = 4
EXIT_UNEXPECTED = 1

OUTPUT_FORMATS = ('json', 'csv')


class RationalType(click.ParamType):
    """An exact rational literal such as 3, -7/2 or 0.125."""
    name = 'rational'

    def convert(self, value, param, ctx):
        try:
            return parse_rational(value)
        except (ValueError, ZeroDivisionError) as e:
            self.fail('"{}" is not a rational number: {}'.format(value, e), param, ctx)


class CoefficientType(click.ParamType):
    """An equation coefficient. Integers and p/q are exact and decimals are floats."""
    name = 'coefficient'

    def convert(self, value, param, ctx):
        try:
            return parse_coefficient(value)
        except (ValueError, ZeroDivisionError) as e:
            self.fail(str(e), param, ctx)


class IntRangeType(click.ParamType):
    """An inclusive integer range written as "a..b"."""
    name = 'range'

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        parts = str(value).split('..')
        try:
            k_min, k_max = (int(p) for p in parts)
        except ValueError:
            self.fail('"{}" is not a range of the form a..b.'.format(value), param, ctx)
        if k_min > k_max:
            self.fail('Range start {} exceeds its end {}.'.format(k_min, k_max),
                      param, ctx)
        return (k_min, k_max)


RATIONAL = RationalType()
COEFFICIENT = CoefficientType()
INT_RANGE = IntRangeType()


def out_option(func):
    """Decorate a command with the --out option shared by every command."""
    return click.option(
        '--out', '-o', help='Optional file path to which the output is written. '
        'By default it is printed to stdout.', type=click.File('w', encoding='utf-8'),
        default='-', show_default=True)(func)


def format_option(default='json'):
    """Get a decorator that adds the --format option with a given default."""
    return click.option(
        '--format', '-f', 'output_format', type=click.Choice(OUTPUT_FORMATS),
        default=default, show_default=True, help='Format of the output.')


def exit_on_domain_error(e, command):
    """Report a ValueError or NotImplementedError on stderr and exit with code 3."""
    _logger.debug('%s stopped by a domain error: %s', command, e)
    click.echo('Error: {}'.format(e), err=True)
    sys.exit(EXIT_DOMAIN)


def exit_on_unexpected_error(e, command):
    """Log an unexpected exception with its traceback and exit with code 1."""
    _logger.exception('{} failed.\n{}'.format(command, e))
    sys.exit(EXIT_UNEXPECTED)
