"""Build the optional compiled kernel extension.

The package works without the extension (a numpy fallback is selected at
import time), but the compiled kernels are considerably faster for the
quadrature-heavy identity checks. See benchmarks/bench_backends.py.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hlzeta/_backend/_ckernels.pyx"],
        language_level="3",
        compiler_directives={"boundscheck": False, "wraparound": False, "cdivision": True},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
