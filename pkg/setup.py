"""Build script: compiles the optional cube-scan extension.

The package is pure Python plus one optional Cython kernel for the
2^n state scan.  If Cython or a C compiler is unavailable the build
falls back to the pure-Python kernel transparently.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    ext = Extension("exkh._cubecore", ["src/exkh/_cubecore.pyx"])
    return cythonize(
        [ext],
        compiler_directives={"language_level": "3"},
    )


class optional_build_ext(build_ext):
    """Swallow compiler failures; the package works without the extension."""

    def run(self):
        try:
            build_ext.run(self)
        except (CCompilerError, ExecError, PlatformError) as exc:
            sys.stderr.write(f"exkh: skipping compiled kernel ({exc})\n")

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except (CCompilerError, ExecError, PlatformError) as exc:
            sys.stderr.write(f"exkh: skipping compiled kernel ({exc})\n")


setup(
    ext_modules=_extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
