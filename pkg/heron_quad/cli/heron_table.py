"""heron-quad heron-table command."""
import sys
import logging

import click

from heron_quad.envelope import OutputEnvelope, rows_to_csv, csv_value
from heron_quad.family import TABLE_COLUMNS, heron_table as build_heron_table
from heron_quad.verify import verify_member

from .util import EXIT_VERIFICATION, out_option, format_option, \
    exit_on_domain_error, exit_on_unexpected_error

_logger = logging.getLogger(__name__)


def verified_table(t_max, multiples):
    """Get the Heron table rows after running every oracle on each of them.

    Returns:
        A tuple with three items.

        -   members: The list of F1Member in table order.

        -   errata: The errata found while verifying the rows, without repeats.

        -   failed: The subjects of the rows with a failing check.
    """
    members = build_heron_table(t_max, multiples)
    errata, failed = [], []
    for mem in members:
        report = verify_member(mem)
        errata.extend(e for e in report.errata if e not in errata)
        if report.has_failures:
            failed.append(report.subject)
    return members, errata, failed


@click.command('heron-table')
@click.option('--t-max', help='Largest t1 of the (t1, t2) generators.', type=int,
              default=3, show_default=True)
@click.option('--delta-multiples', help='Largest multiplier j used for delta = j*L.',
              type=int, default=1, show_default=True)
@format_option(default='csv')
@out_option
def heron_table(t_max, delta_multiples, output_format, out):
    """Tabulate the Heron quadrilaterals of family F1 with delta = j*L."""
    try:
        members, errata, failed = verified_table(t_max, delta_multiples)
        for erratum in errata:
            _logger.info('heron-table erratum: %s', erratum)
        rows = [mem.table_row() for mem in members]
        if output_format == 'csv':
            out.write(rows_to_csv(TABLE_COLUMNS, rows))
        else:
            inputs = {'t_max': t_max, 'delta_multiples': delta_multiples}
            result = {
                'columns': list(TABLE_COLUMNS),
                'rows': [dict(zip(TABLE_COLUMNS, (csv_value(v) for v in row)))
                         for row in rows],
                'verified': not failed
            }
            out.write(OutputEnvelope('heron-table', inputs, result, errata).to_json()
                      + '\n')
    except (ValueError, NotImplementedError) as e:
        exit_on_domain_error(e, 'heron-table')
    except Exception as e:
        exit_on_unexpected_error(e, 'heron-table')
    else:
        if failed:
            click.echo('Verification failed for: {}'.format('; '.join(failed)), err=True)
            sys.exit(EXIT_VERIFICATION)
        sys.exit(0)
