"""Builds the optional Cython kernel; the package works without it."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:
    pass
else:
    ext_modules = cythonize(
        [Extension("apseq._kernels", ["src/apseq/_kernels.pyx"], extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
