"""heron-quad family command."""
import sys
import logging

import click

from heron_quad.envelope import OutputEnvelope, rows_to_csv
from heron_quad.family import TABLE_COLUMNS, enumerate_f1

from .util import out_option, format_option, exit_on_domain_error, \
    exit_on_unexpected_error

_logger = logging.getLogger(__name__)


@click.command('family')
@click.option('--t-max', help='Largest t1 of the (t1, t2) generators.', type=int,
              default=3, show_default=True)
@click.option('--delta-max', help='Largest scale delta.', type=int, default=1,
              show_default=True)
@click.option('--heron-only', is_flag=True, default=False, help='Flag to note '
              'whether only the Heron members, whose delta is a multiple of L, '
              'are listed.')
@click.option('--workers', '-w', help='Number of processes used for the enumeration.',
              type=int, default=1, show_default=True)
@format_option()
@out_option
def family(t_max, delta_max, heron_only, workers, output_format, out):
    """List the members of family F1 ordered by (t1, t2, form, delta)."""
    try:
        members = list(enumerate_f1(t_max, delta_max, heron_only, workers))
        _logger.debug('family listed %d members.', len(members))
        if output_format == 'csv':
            out.write(rows_to_csv(TABLE_COLUMNS, [m.table_row() for m in members]))
        else:
            inputs = {'t_max': t_max, 'delta_max': delta_max, 'heron_only': heron_only}
            result = {'count': len(members), 'members': [m.to_dict() for m in members]}
            out.write(OutputEnvelope('family', inputs, result).to_json() + '\n')
    except (ValueError, NotImplementedError) as e:
        exit_on_domain_error(e, 'family')
    except Exception as e:
        exit_on_unexpected_error(e, 'family')
    else:
        sys.exit(0)
