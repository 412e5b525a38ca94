# Sphinx configuration for the ilsquares API reference

import os
import sys

sys.path.insert(0, os.path.abspath('../'))

from ilsquares import __version__  # noqa: E402

project = 'ilsquares'
copyright = '2025, the ilsquares developers'
author = 'the ilsquares developers'
release = __version__

extensions = ['sphinx.ext.autodoc', 'numpydoc']

numpydoc_show_class_members = False
autodoc_member_order = 'bysource'
exclude_patterns = ['_build']

html_theme = 'sphinx_rtd_theme'
