"""Build script: compiles the optional speedup extension.

The package is fully functional without the extension; `heckefam._kernel`
falls back to the pure-Python implementation when the compiled module is
missing (see benchmarks/bench_kernels.py for the speed comparison).
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/heckefam/_kernel/_speedups.pyx"],
        language_level="3",
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"heckefam: skipping compiled kernel ({exc}); pure-Python fallback will be used")
    ext_modules = []

setup(ext_modules=ext_modules)
