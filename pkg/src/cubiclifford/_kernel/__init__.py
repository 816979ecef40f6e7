"""Reduction kernel selection: compiled extension if built, else pure Python.

``reduce_terms(terms, rules, p)`` reduces a word->coeff dict over F_p by
an oriented rule list; see :mod:`.pyreduce` for the contract.  Set the
environment variable ``CUBICLIFFORD_PURE=1`` to force the fallback.
"""

import os

from . import pyreduce

if os.environ.get("CUBICLIFFORD_PURE"):
    reduce_terms = pyreduce.reduce_terms
    BACKEND = "python"
else:
    try:
        from . import _fastreduce

        reduce_terms = _fastreduce.reduce_terms
        BACKEND = "cython"
    except ImportError:
        reduce_terms = pyreduce.reduce_terms
        BACKEND = "python"

__all__ = ["reduce_terms", "BACKEND", "pyreduce"]
