import os

from setuptools import setup

ext_modules = []
if os.environ.get("JUMPLINES_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/jumplines/_fastkern.pyx"],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        # No Cython available: install anyway, the pure-Python kernels take over.
        ext_modules = []

setup(ext_modules=ext_modules)
