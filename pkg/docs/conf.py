# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# For a full list of options see the documentation:
# http://www.sphinx-doc.org/en/master/config

import os
import sys
import datetime

import sphinx_bootstrap_theme

now = datetime.datetime.now()
sys.path.insert(0, os.path.abspath('..'))

# -- Project information -----------------------------------------------------

project = 'heron-quad'
copyright = '{}, Ladybug Tools'.format(str(now.year))
author = 'Ladybug Tools'
release = ''
version = ''

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.imgmath',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages',
    'sphinxcontrib.fulltoc',
    'sphinx.ext.napoleon',
    'sphinx_click.ext'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = ['_build']
pygments_style = None
toc_object_entries_show_parents = 'hide'

# -- Options for HTML output -------------------------------------------------

html_theme = 'bootstrap'
html_theme_path = sphinx_bootstrap_theme.get_html_theme_path()
html_theme_options = {
    'navbar_class': "navbar navbar-inverse",
    'navbar_fixed_top': "true",
    'navbar_pagenav': True,
    'source_link_position': "nav",
    'bootswatch_theme': "united",
    'bootstrap_version': "3",
}
html_static_path = ['_static']
html_css_files = ['custom.css']
html_sidebars = {
    '**': ['localtoc.html']
}
htmlhelp_basename = 'heronquaddoc'

# -- Options for other output ------------------------------------------------

man_pages = [
    (master_doc, 'heron-quad', 'heron-quad Documentation', [author], 1)
]

# -- Extension configuration -------------------------------------------------

autodoc_default_options = {
    'inherited-members': True,
}
autodoc_member_order = 'groupwise'

# -- CLI documentation -------------------------------------------------------
"""Write one reST page per command module in heron_quad/cli.

Each module holds a single click command whose function has the module's name.
The command name on the command line uses dashes instead of underscores.
"""
LIB_NAME = 'heron_quad'
TOOL_NAME = 'heron-quad'
NOT_COMMANDS = ('__init__', 'util')


def cli_module_names(project_folder):
    """Get the names of the command modules in the library's cli folder."""
    cli_path = os.path.join(os.path.dirname(project_folder), LIB_NAME, 'cli')
    if not os.path.isdir(cli_path):
        print("[CLI data]: No CLI library found")
        return []
    names = [os.path.splitext(f)[0] for f in os.listdir(cli_path)
             if os.path.splitext(f)[1] == '.py']
    return sorted(n for n in names if n not in NOT_COMMANDS)


def write_cli_files(module_names, doc_folder):
    """Write a reST file with a sphinx-click directive for each command module."""
    for name in module_names:
        command = name.replace('_', '-')
        cli_content = [
            '{}\n'.format(command),
            '{}\n'.format('=' * len(command)),
            '\n',
            '.. click:: {}.cli.{}:{}\n'.format(LIB_NAME, name, name),
            '   :prog: {} {}\n'.format(TOOL_NAME, command)
        ]
        with open(os.path.join(doc_folder, name + '.rst'), 'w') as cmd_file:
            cmd_file.writelines(cli_content)


def write_cli_index(index_path, module_names):
    """Write the index.rst of the CLI docs with a link to every command page."""
    cli_content = [
        'CLI\n', '===\n', '\n',
        '.. click:: {}.cli:main\n'.format(LIB_NAME),
        '   :prog: {}\n'.format(TOOL_NAME), '\n',
        'Commands\n', '--------\n',
        '.. toctree::\n', '   :maxdepth: 1\n', '\n'
    ]
    cli_content.extend('   {}\n'.format(name) for name in module_names)
    with open(index_path, 'w') as index_file:
        index_file.writelines(cli_content)


def create_cli_files():
    """Generate the reST files of the CLI docs under docs/cli."""
    proj_folder = os.path.dirname(os.path.abspath(__file__))
    module_names = cli_module_names(proj_folder)
    if not module_names:
        return
    doc_folder = os.path.join(proj_folder, 'cli')
    if not os.path.isdir(doc_folder):
        os.mkdir(doc_folder)
    print("[CLI files]: Creating ({}) CLI rst files: {}...".format(
        len(module_names), module_names))
    write_cli_files(module_names, doc_folder)
    write_cli_index(os.path.join(doc_folder, 'index.rst'), module_names)


create_cli_files()
