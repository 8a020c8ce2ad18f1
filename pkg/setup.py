"""Build script for the optional compiled rank kernels.

The package works without the extension: ginipca._core falls back to the
numpy kernels at import time, so any failure here only costs speed.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


def extensions():
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError as exc:
        print(f"ginipca: skipping C kernels ({exc})", file=sys.stderr)
        return []
    ext = Extension(
        "ginipca._core._ckernels",
        sources=["src/ginipca/_core/_ckernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level="3")


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a downgrade, not an error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"ginipca: C kernels not built ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"ginipca: {ext.name} not built ({exc})", file=sys.stderr)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
