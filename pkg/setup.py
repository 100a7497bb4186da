"""Build script: compiles the optional C kernel, falling back to pure Python.

The package works without the extension; everything in hanggraph._ckernel has a
pure-Python twin in hanggraph._pykernel and the dispatch in hanggraph.kernels
picks whichever is importable.  Set HANGGRAPH_NO_EXT=1 to skip the compile.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain
            print(f"warning: kernel extension not built ({exc}); "
                  "falling back to pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to pure-Python kernels")


def extensions():
    if os.environ.get("HANGGRAPH_NO_EXT") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("hanggraph._ckernel", ["src/hanggraph/_ckernel.pyx"])
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
