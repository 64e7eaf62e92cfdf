import os

from setuptools import setup

ext_modules = []
if os.environ.get("NABLASYM_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(["src/nablasym/_ckernels.pyx"], language_level=3, quiet=True)

setup(ext_modules=ext_modules)
