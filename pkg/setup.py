from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "fibtype._kernel._core",
                ["src/fibtype/_kernel/_core.pyx"],
                optional=True,
            )
        ]
    )
except ImportError:
    # No Cython: the pure-Python kernel is selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
