import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="pywpfol",
    version="0.1.0",
    author="pywpfol developers",
    maintainer="pywpfol developers",
    description="Python Weighted Projective Foliations (pywpfol) is a code for exact degree bounds of invariant hypersurfaces of foliations on weighted projective spaces.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(),
    python_requires=">=3.7",
    install_requires=[
        "numpy>=1.17.0",
        "monty>=2.0.4",
        "sympy>=1.5",
        "pyparsing>=3.0.0",
        "ruamel.yaml>=0.15.0",
    ],
    extras_require={
        "tests": ["pytest>=5.0", "hypothesis>=5.0"],
        "docs": ["Sphinx >= 1.7.4"],
    },
    entry_points={"console_scripts": ["pywpfol = pywpfol.cli:main"]},
    include_package_data=True,
    keywords=["foliation", "weighted projective space", "Poincare problem", "Baum-Bott", "exact arithmetic"],
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
    ],
)
