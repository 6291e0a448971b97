import os

import numpy as np
from setuptools import Extension, setup

# SU2WALK_NO_EXT=1 installs the numpy fallback only.
ext_modules = []
if not os.environ.get("SU2WALK_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "su2walk._kernels",
                    ["src/su2walk/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                    # plain complex products; the walk never produces inf/nan
                    extra_compile_args=["-O3", "-fcx-limited-range"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )

setup(ext_modules=ext_modules)
