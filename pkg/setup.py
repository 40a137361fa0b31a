"""Build script: compiles the optional extension backend.

The package is fully functional without the extension; if Cython or a C
compiler is unavailable the build silently falls back to the pure-Python
kernels in ``softgroups._kernels._core_py``.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "softgroups._kernels._core_c",
        ["src/softgroups/_kernels/_core_c.pyx"],
    )
    ext.optional = True
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
