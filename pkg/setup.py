from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python install: valsat._ratkernel is used instead of the extension.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("valsat._speedups", ["src/valsat/_speedups.pyx"], optional=True)],
        language_level=3,
    )

setup(ext_modules=ext_modules)
