# Sphinx configuration for the PaintTeX documentation.
#
# Built with ``make html`` from this directory; the package root is put on
# ``sys.path`` so autodoc imports ``services``, ``routes`` and ``cli`` directly.
import sys
import os

sys.path.append(os.path.abspath('..'))

project = 'PaintTeX'
copyright = '2024, PaintTeX developers'
author = 'PaintTeX developers'
release = '0.1.0'

# -- General configuration ---------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.doctest']

# Module members appear in source order, which follows the pipeline stages.
autodoc_member_order = 'bysource'
autodoc_typehints = 'description'
autodoc_default_options = {
    'exclude-members': 'model_config, model_fields, model_computed_fields',
}

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# -- Options for HTML output -------------------------------------------------

html_theme = 'classic'
html_static_path = ['_static']
html_title = 'PaintTeX: picture code from scenes and SVG'
