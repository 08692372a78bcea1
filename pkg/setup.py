"""Build script: compiles the optional Cython enumeration kernel.

Set RSBF_NO_EXT=1 to skip the extension; the package then runs on the
pure-Python kernel selected at import time.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("RSBF_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/rsbf/_kernel_cy.pyx"],
            language_level=3,
            annotate=False,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
