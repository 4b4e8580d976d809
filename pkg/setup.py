from setuptools import Extension, setup

# The compiled kernels are an optimisation, not a requirement: the package
# falls back to the pure-Python twins in league_ties._pure when the extension
# is absent, so a missing compiler must not break installation.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "league_ties._fast",
                ["src/league_ties/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
