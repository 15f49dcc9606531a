import os

from setuptools import setup

ext_modules = []
if os.environ.get("FROBW_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("frobw._kernels", ["src/frobw/_kernels.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython: the pure-Python kernels are used at import time
        ext_modules = []

setup(ext_modules=ext_modules)
