"""heron-quad construct command."""
import sys
import logging

import click

from heron_quad.envelope import OutputEnvelope
from heron_quad.exactnum import rational_to_str
from heron_quad.geometry import construct_quad, angle_identity_check
from heron_quad.svg import write_construction_svg
from heron_quad.verify import verify_construction

from .util import RATIONAL, out_option, exit_on_domain_error, exit_on_unexpected_error

_logger = logging.getLogger(__name__)


def construct_payload(q):
    """Get the result payload of the construct command and the list of errata."""
    report = verify_construction(q)
    payload = q.to_dict()
    identity = angle_identity_check(q)
    payload['angle_identity'] = {
        'phi_degrees': identity.phi, 'omega_degrees': identity.omega,
        'theta_degrees': identity.theta, 'max_spread': identity.max_spread
    }
    payload['checks_passed'] = report.passed
    return payload, list(report.errata)


@click.command('construct', context_settings={'ignore_unknown_options': True})
@click.argument('alpha', type=RATIONAL)
@click.argument('beta', type=RATIONAL)
@click.argument('gamma', type=RATIONAL)
@click.option('--svg', 'svg_file', help='Optional path to an SVG file to which the '
              'drawing of the construction is written.', default=None,
              type=click.Path(file_okay=True, dir_okay=False, resolve_path=True))
@out_option
def construct(alpha, beta, gamma, svg_file, out):
    """Construct the cyclic quadrilateral of a rational Pythagorean triple.

    \b
    Args:
        alpha: Leg |Gamma B| of the right triangle Gamma-B-A.
        beta: Leg |Gamma A|.
        gamma: Hypotenuse |BA|.
    """
    try:
        q = construct_quad(alpha, beta, gamma)
        payload, errata = construct_payload(q)
        inputs = {'alpha': rational_to_str(alpha), 'beta': rational_to_str(beta),
                  'gamma': rational_to_str(gamma)}
        if svg_file is not None:
            write_construction_svg(q, svg_file)
            inputs['svg'] = svg_file
        out.write(OutputEnvelope('construct', inputs, payload, errata).to_json() + '\n')
    except (ValueError, NotImplementedError) as e:
        exit_on_domain_error(e, 'construct')
    except Exception as e:
        exit_on_unexpected_error(e, 'construct')
    else:
        sys.exit(0)
