"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so a missing compiler or a failed Cython build
must never break installation.  Pass FRACALC_NO_EXT=1 to skip the compiled
kernels entirely.
"""

import os
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a soft fallback, not a fatal error."""

    def run(self):
        try:
            super().run()
        except (CCompilerError, ExecError, PlatformError) as exc:
            warnings.warn(f"compiled kernels skipped ({exc}); using numpy fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, ValueError) as exc:
            warnings.warn(f"compiled kernels skipped ({exc}); using numpy fallback")


ext_modules = []
if cythonize is not None and not os.environ.get("FRACALC_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "fracalc._kernels._kernels_cy",
                ["src/fracalc/_kernels/_kernels_cy.pyx"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
