"""Build script: compiles the enumeration kernels when a toolchain is available.

The compiled module is an accelerator, not a requirement -- quditline.kernels
falls back to the pure-Python implementation at import time, so a failed
extension build must not fail the install.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except (PlatformError, FileNotFoundError) as exc:
            _warn_skipped(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            _warn_skipped(exc)


def _warn_skipped(exc):
    print(
        "WARNING: building quditline._kernels failed (%s); "
        "the pure-Python kernels will be used instead" % (exc,)
    )


ext_modules = []
if cythonize is not None and not os.environ.get("QUDITLINE_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "quditline._kernels",
                ["src/quditline/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
