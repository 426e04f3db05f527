from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hchroma.kernels._fast",
                ["src/hchroma/kernels/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception:
    # The package works without the extension; hchroma.kernels falls back
    # to the pure-Python implementations.
    ext_modules = []

setup(ext_modules=ext_modules)
