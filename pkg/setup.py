"""Build script: compiles the optional fast kernels for the matrix-group engine.

The package works without the extension (a pure-Python backend is selected at
import time), so a failed compile only costs speed, not functionality.
"""

import os

from setuptools import Extension, setup

_PYX = "src/orbitcert/groups/_fastcore.pyx"

try:
    from Cython.Build import cythonize

    if os.path.exists(_PYX):
        ext_modules = cythonize(
            [Extension("orbitcert.groups._fastcore", sources=[_PYX])],
            compiler_directives={"language_level": "3"},
        )
    else:
        ext_modules = []
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
