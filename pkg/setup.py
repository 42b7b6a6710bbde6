from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "mixdim._cover_cy",
                ["src/mixdim/_cover_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython at build time: install pure-Python only, the solver falls
    # back to the interpreted kernel at import.
    ext_modules = []

setup(ext_modules=ext_modules)
