"""Builds the optional compiled kernel extension.

The package works without it: rack.kernels falls back to the pure-Python
implementation when rack._speedups is missing. Set RACK_SKIP_SPEEDUPS=1 to
install without compiling.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("RACK_SKIP_SPEEDUPS") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("rack._speedups", ["src/rack/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
