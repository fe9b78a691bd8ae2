from setuptools import Extension, setup

# The compiled row-reduction kernel is optional: dualizer.linalg falls back
# to the numpy implementation when the extension is missing.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("dualizer._rowreduce", ["src/dualizer/_rowreduce.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
