"""Builds the optional Cython kernel module.

When Cython or a C compiler is unavailable the package still installs;
``slimcount.kernels`` then falls back to the pure-Python implementation.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:
    pass
else:
    ext_modules = cythonize(
        [Extension("slimcount._ckernels", ["src/slimcount/_ckernels.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3", "boundscheck": False,
                             "wraparound": False},
    )

setup(ext_modules=ext_modules)
