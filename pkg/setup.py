"""Build script: compiles the optional Jacobi rotation kernel.

If Cython or a C compiler is unavailable the build still succeeds and the
package falls back to the pure-numpy kernel at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "framekit._kernels._jacobi_cy",
        sources=["src/framekit/_kernels/_jacobi_cy.pyx"],
        # -ffp-contract=off keeps the compiled kernel bit-identical to the
        # pure-numpy twin (no FMA re-rounding inside rotations).
        extra_compile_args=["-O3", "-ffp-contract=off"],
        optional=True,
    )
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
except ImportError:
    pass

setup(ext_modules=ext_modules)
