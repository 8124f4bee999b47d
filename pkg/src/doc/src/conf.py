# -*- coding: utf-8 -*-
#
#      Licensed under the Apache License, Version 2.0 (the
#      "License"); you may not use this file except in compliance
#      with the License.  You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#      Unless required by applicable law or agreed to in writing,
#      software distributed under the License is distributed on an
#      "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
#      KIND, either express or implied.  See the License for the
#      specific language governing permissions and limitations
#      under the License.
#
# symdist documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir. Values that are not set here take Sphinx's defaults.

import sys, os

# The package sources sit two levels up (src/).
sys.path.append(os.path.abspath('../..'))

# -- General configuration ----------------------------------------------------

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'symdist'
copyright = u'2026, the symdist authors'

# The short X.Y version.
version = '0.1'
# The full version, including alpha/beta/rc tags.
release = '0.1.0.dev1'

exclude_patterns = []

pygments_style = 'sphinx'

# -- Options for HTML output --------------------------------------------------

html_theme = 'default'

html_static_path = ['_static']

htmlhelp_basename = 'symdistdoc'

# -- Options for LaTeX output -------------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'symdist.tex', u'symdist Documentation',
   u'the symdist authors', 'manual'),
]

# -- Options for manual page output -------------------------------------------

man_pages = [
    ('index', 'symdist', u'symdist Documentation',
     [u'the symdist authors'], 1)
]

# -- Options for Texinfo output -----------------------------------------------

texinfo_documents = [
  ('index', 'symdist', u'symdist Documentation',
   u'the symdist authors', 'symdist',
   'Inter-word distance distributions of symmetric word pairs',
   'Miscellaneous'),
]
