"""
Command Line Interface (CLI) entry point for heron-quad.

Use this file only to add commands related to heron-quad. Each command lives
in its own module inside this folder.
"""
import click

from heron_quad.cli.solve import solve
from heron_quad.cli.construct import construct
from heron_quad.cli.family import family
from heron_quad.cli.heron_table import heron_table
from heron_quad.cli.verify import verify
from heron_quad.cli.svg import svg


@click.group(help='heron-quad - exact trigonometric solutions, cyclic quadrilaterals '
             'and Heron quadrilaterals from Pythagorean triples.')
@click.version_option(package_name='heron-quad')
def main():
    pass


main.add_command(solve)
main.add_command(construct)
main.add_command(family)
main.add_command(heron_table)
main.add_command(verify)
main.add_command(svg)


if __name__ == "__main__":
    main()
