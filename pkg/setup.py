"""Build script: compiles the optional C kernel for the oracle hot path.

The package works without the extension (a pure-Python kernel is selected
at import time), so a failed build only costs speed. Set
HALINBOOK_PURE_PYTHON=1 to skip the extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HALINBOOK_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "halinbook._kernels._ckernel",
                    ["src/halinbook/_kernels/_ckernel.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
