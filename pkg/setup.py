"""Build script: compiles the optional Cython kernels.

The package is fully functional without the extension (a NumPy fallback is
selected at import time), so any failure here is demoted to a warning and
the build proceeds pure-Python.
"""

import warnings

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "membed.kernels._speedups",
                ["src/membed/kernels/_speedups.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    warnings.warn(f"building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
