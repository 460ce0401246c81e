"""Build script: compiles the Jacobi kernel when Cython is available.

The package works without the extension (a pure-Python kernel is selected
at import time), so a missing compiler or Cython never blocks installation.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("jcpair._jacobi", ["src/jcpair/_jacobi.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
