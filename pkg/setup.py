import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MATROID_CHERN_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("matroid_chern._canon_ext", ["src/matroid_chern/_canon_ext.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
