# Builds the optional compiled kernel.  The package works without it: if
# Cython (or a C compiler) is unavailable the pure-Python twin in
# skewrank._gbcore_py is selected at import time.
#
# In-place build for development checkouts:
#     python setup.py build_ext --inplace
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SKEWRANK_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("skewrank._gbcore", ["src/skewrank/_gbcore.pyx"])],
            language_level="3",
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
