"""Build script: compiles the fast summation kernels when Cython is available.

The package works without the extension (a pure-Python mirror of the kernels
is selected at import), so a missing compiler or Cython only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    extensions = []
else:
    # fp-contract off: no fused multiply-add; no-builtin sin/cos: block the
    # sin+cos -> sincos fusion (glibc sincos rounds differently for large
    # arguments).  Both pin the compiled kernels to round exactly like the
    # pure-Python mirror, so either backend emits byte-identical sweep output.
    extensions = cythonize(
        [
            Extension(
                "twinphoton._core",
                ["src/twinphoton/_core.pyx"],
                extra_compile_args=[
                    "-O3",
                    "-ffp-contract=off",
                    "-fno-builtin-sin",
                    "-fno-builtin-cos",
                    "-fno-builtin-sincos",
                ],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=extensions)
