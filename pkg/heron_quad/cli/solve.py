"""heron-quad solve command."""
import sys
import math
import logging

import click

from heron_quad.config import tolerances
from heron_quad.envelope import OutputEnvelope, rows_to_csv
from heron_quad.trigsolve import EquationCoeffs, ALL_REALS, classify, \
    enumerate_solutions, half_angle_quadratic, residual, number_to_str

from .util import COEFFICIENT, INT_RANGE, out_option, format_option, \
    exit_on_domain_error, exit_on_unexpected_error

_logger = logging.getLogger(__name__)

SOLUTION_COLUMNS = ('radians', 'degrees', 'residual')


def solve_payload(coeffs, k_min, k_max):
    """Get the result payload of the solve command for EquationCoeffs."""
    s = classify(coeffs)
    payload = {
        'coefficients': coeffs.to_dict(),
        'quadratic': half_angle_quadratic(coeffs).to_dict(),
        'solution_set': s.to_dict(),
        'k_range': [k_min, k_max]
    }
    if s.kind == ALL_REALS:
        payload['solutions'] = None
        payload['max_residual'] = 0.0
        return payload
    xs = enumerate_solutions(s, k_min, k_max)
    residuals = [abs(residual(coeffs, x)) for x in xs]
    payload['solutions'] = [
        {'radians': x, 'degrees': round(math.degrees(x), tolerances.angle_decimals),
         'residual': r} for x, r in zip(xs, residuals)]
    payload['max_residual'] = max(residuals) if residuals else 0.0
    return payload


@click.command('solve', context_settings={'ignore_unknown_options': True})
@click.argument('alpha', type=COEFFICIENT)
@click.argument('beta', type=COEFFICIENT)
@click.argument('gamma', type=COEFFICIENT)
@click.option('--k', 'k_range', type=INT_RANGE, default='-1..1', show_default=True,
              help='Inclusive range a..b of the integer k for which the solutions '
              '2k*pi + base are listed.')
@format_option()
@out_option
def solve(alpha, beta, gamma, k_range, output_format, out):
    """Solve alpha*sin(x) + beta*cos(x) = gamma over the real numbers.

    \b
    Args:
        alpha: Coefficient of sin(x). Integers and p/q are exact, decimals are floats.
        beta: Coefficient of cos(x).
        gamma: Right hand side.
    """
    try:
        coeffs = EquationCoeffs(alpha, beta, gamma)
        k_min, k_max = k_range
        payload = solve_payload(coeffs, k_min, k_max)
        if output_format == 'csv':
            rows = [[number_to_str(sol[col]) for col in SOLUTION_COLUMNS]
                    for sol in payload['solutions'] or []]
            out.write(rows_to_csv(SOLUTION_COLUMNS, rows))
        else:
            inputs = {'alpha': number_to_str(alpha), 'beta': number_to_str(beta),
                      'gamma': number_to_str(gamma), 'k_min': k_min, 'k_max': k_max}
            out.write(OutputEnvelope('solve', inputs, payload).to_json() + '\n')
    except (ValueError, NotImplementedError) as e:
        exit_on_domain_error(e, 'solve')
    except Exception as e:
        exit_on_unexpected_error(e, 'solve')
    else:
        sys.exit(0)
