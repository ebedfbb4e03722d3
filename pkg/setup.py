"""Build script for the optional compiled solver core.

The package runs fine without the extension (a pure-Python fallback is
selected at import).  To build the fast lane in place:

    python setup.py build_ext --inplace

Cython and a C compiler are required only for this step.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "toursplit._core",
                ["src/toursplit/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
