from setuptools import Extension, setup

# The compiled kernels are an optional speedup. Without Cython (or without a
# C compiler) the package installs anyway and idres.kernels falls back to the
# pure-Python implementation at import time.
try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension("idres._kernels", ["src/idres/_kernels.pyx"]),
]

if cythonize is not None:
    ext_modules = cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
