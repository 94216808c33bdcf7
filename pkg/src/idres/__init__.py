"""Identity resolution for git author IDs.

The pipeline turns a flat list of ``Name <email>`` author-ID strings into
groups of IDs that belong to the same developer:

1. parse IDs and build name/email frequency tables (:mod:`idres.corpus`),
2. drop junk emails and uninformative names (:mod:`idres.filters`),
3. block potentially related IDs via shared email / uncommon name / GitHub
   handle plus transitive closure (:mod:`idres.blocking`),
4. score every in-block pair with Jaro-Winkler features and a random forest
   (:mod:`idres.similarity`, :mod:`idres.classifier`),
5. close linked pairs into alias groups and write the output maps
   (:mod:`idres.resolution`).

:mod:`idres.synthgen` generates corpora with known ground truth and
:mod:`idres.evaluation` scores results against a truth set. The hot string
and tree kernels live in a compiled extension with a pure-Python fallback
(:mod:`idres.kernels`).
"""

__version__ = "0.1.0"
