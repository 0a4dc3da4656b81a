from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "ga3._kernels_cy",
                ["src/ga3/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )
else:
    # no Cython: ship the pure-Python kernel only
    ext_modules = []

setup(ext_modules=ext_modules)
