"""Build the optional compiled kernel core.

The package works without the extension (shellpol.backend falls back to the
pure-Python kernels), so the build degrades gracefully when Cython or a C
compiler is unavailable.
"""
from setuptools import setup

ext_modules = []
try:
    from setuptools import Extension
    from Cython.Build import cythonize
    ext_modules = cythonize(
        [Extension(
            "shellpol._kernels",
            ["src/shellpol/_kernels.pyx"],
            # no FMA contraction: keeps the compiled kernels bit-identical
            # to the pure-Python reference arithmetic
            extra_compile_args=["-ffp-contract=off"],
        )],
        language_level="3",
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    print("Cython not available; building shellpol without the compiled core.")

setup(ext_modules=ext_modules)
