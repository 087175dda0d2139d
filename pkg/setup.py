import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "pcrank._speedups",
                ["src/pcrank/_speedups.pyx"],
                extra_compile_args=["-O3"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
except ImportError:
    # pure-python install still works; the package falls back to numpy kernels
    ext_modules = []

setup(ext_modules=ext_modules)
