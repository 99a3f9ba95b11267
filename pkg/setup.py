import os

from setuptools import Extension, setup


def get_extensions():
    """Cythonize the enumeration kernels; fall back to pure Python if that fails."""
    if os.environ.get("SNAKEDIMERS_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython not available, using the pure-Python kernels.")
        return []
    extensions = [
        Extension(
            "snakedimers._ckernels",
            sources=["src/snakedimers/_ckernels.pyx"],
            extra_compile_args=["-O3"],
        )
    ]
    return cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )


setup(ext_modules=get_extensions())
