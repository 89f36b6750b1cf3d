"""Build script: compiles the optional flow kernel extension.

The package works without the extension (a pure-Python kernel is selected
at import time), so a failing C build degrades to a source-only install.
"""

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "arboricity.kernels._fastflow",
        ["src/arboricity/kernels/_fastflow.pyx"],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions())
