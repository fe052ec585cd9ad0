"""Build the optional compiled search kernel.

The exact solver ships two interchangeable kernels: a Cython extension
(``radiotree._solver_core``) and a pure-Python fallback.  If Cython (or a C
compiler) is unavailable the build simply skips the extension and the package
runs on the fallback.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/radiotree/_solver_core.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
