from setuptools import setup, find_packages
import lhydro

setup(
    name="lhydro",
    version=lhydro.__version__,
    packages=find_packages(exclude=["*.pyc"]),
    python_requires=">=3.8",
    scripts=["bin/lhydro"],
    license="GPL 2",
    author="lhydro developers",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v2 (GPLv2)",
        "Operating System :: POSIX :: Linux",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    package_data={
        "": ["*.txt", "*.rst"],
        "lhydro": ["lhydro.cfg", "tests/data/*"],
    },
    keywords="hydrodynamics lattice cochain Hodge decomposition",
    include_package_data=True,
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    description="""lhydro is a cubical lattice model of incompressible hydrodynamics built from integer boundary, coboundary and star operators""",
    install_requires=open("requirements.txt").read().splitlines(),
)
