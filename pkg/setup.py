"""Build script for the optional compiled kernels.

The package works without a compiler: ``simplegames.kernels`` falls back to
the pure-Python implementation when ``simplegames._ckernels`` is missing.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SIMPLEGAMES_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "simplegames._ckernels",
                    ["src/simplegames/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
            },
        )

setup(ext_modules=ext_modules)
