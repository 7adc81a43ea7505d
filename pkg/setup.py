"""Build hook for the optional compiled kernels.

The package is fully functional without the extension: smplab.kernels falls
back to a vectorized numpy implementation when ``smplab.kernels._ext`` is
missing. The extension is marked optional so a missing compiler degrades to
a warning instead of a failed install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "smplab.kernels._ext",
                ["src/smplab/kernels/_ext.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
