"""heron-quad svg command."""
import sys
import logging

import click

from heron_quad.floatgeometry import FloatQuadConstruction
from heron_quad.svg import construction_svg, CANVAS_WIDTH, CANVAS_HEIGHT

from .util import RATIONAL, out_option, exit_on_domain_error, exit_on_unexpected_error

_logger = logging.getLogger(__name__)


@click.command('svg', context_settings={'ignore_unknown_options': True})
@click.argument('alpha', type=RATIONAL)
@click.argument('beta', type=RATIONAL)
@click.argument('gamma', type=RATIONAL)
@click.option('--width', help='Canvas width in pixels.', type=int,
              default=CANVAS_WIDTH, show_default=True)
@click.option('--height', help='Canvas height in pixels.', type=int,
              default=CANVAS_HEIGHT, show_default=True)
@out_option
def svg(alpha, beta, gamma, width, height, out):
    """Draw the quadrilateral, its circumcircle and the point A as SVG.

    \b
    Args:
        alpha: Leg |Gamma B| of the right triangle Gamma-B-A.
        beta: Leg |Gamma A|.
        gamma: Hypotenuse |BA|. The triple only needs to be Pythagorean within
            the configured pythagorean_tolerance.
    """
    try:
        q = FloatQuadConstruction(alpha, beta, gamma)
        out.write(construction_svg(q, width, height))
    except (ValueError, NotImplementedError) as e:
        exit_on_domain_error(e, 'svg')
    except Exception as e:
        exit_on_unexpected_error(e, 'svg')
    else:
        sys.exit(0)
