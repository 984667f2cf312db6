"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python fallback is selected at
import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("groshevlab._kernel", ["src/groshevlab/_kernel.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"Cython kernel not built ({exc}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
