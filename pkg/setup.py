"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time); set VBACKBONE_NO_EXT=1 to skip compilation explicitly.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("VBACKBONE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "vbackbone.kernels._ckernels",
                    ["src/vbackbone/kernels/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
