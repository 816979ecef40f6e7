"""Build hook: compile the reduction kernel when Cython is available.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), so any build failure here degrades
gracefully instead of blocking installation.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/cubiclifford/_kernel/_fastreduce.pyx"],
        language_level=3,
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
