from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "teamcraft._kernel._hungarian",
        ["src/teamcraft/_kernel/_hungarian.pyx"],
    )
    # Build failures degrade to the pure-Python kernel instead of aborting.
    ext.optional = True
    ext_modules = cythonize([ext], compiler_directives={"language_level": 3})

setup(ext_modules=ext_modules)
