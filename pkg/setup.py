"""Build script: compiles the optional C kernel for the hot enumeration loops.

If Cython or a C compiler is unavailable the package still installs; the
pure-Python twin of the kernel is selected at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "kstardp._kernels_c",
                ["src/kstardp/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
