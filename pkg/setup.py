from setuptools import setup

# The Cython kernel is an optional accelerator: if it fails to build for any
# reason the package still works through the pure-Python twin module.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize("src/qchar/_laurent_cy.pyx", language_level=3)
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
