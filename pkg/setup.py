"""Build script: compiles the integer-determinant kernel when Cython is available.

The package works without the extension (a pure-Python kernel is selected at
import time), so failure to build it is not fatal.
"""

from setuptools import setup, Extension

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("detvol._detkernel", ["src/detvol/_detkernel.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
