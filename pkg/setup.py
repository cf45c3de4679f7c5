"""Build the optional compiled kernel backend.

The package works without it (``seaweed._kernels`` falls back to the pure-Python
twin), so a missing compiler or Cython only costs speed, never correctness.
"""
from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "seaweed._kernels._fast",
                ["src/seaweed/_kernels/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
