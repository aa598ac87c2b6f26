"""
Setup configuration for kuratowski_lab package.
"""

from setuptools import setup, find_packages

# Read the README file
with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="kuratowski-lab",
    version="0.1.0",
    description="Operator semigroups on finite posets: Kuratowski monoids, C(m,n) normal forms and collapse searches",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["kuratowski_lab", "kuratowski_lab.*"]),
    package_data={"kuratowski_lab": ["data/*.json"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.22",  # relation matrices and canonical codes
    ],
    extras_require={
        "sentry": [
            "sentry-sdk>=2.35.0",  # Required for Sentry Logs product
        ],
        "all": [
            "sentry-sdk>=2.35.0",
        ],
        "dev": [
            "pytest>=7.0.0",
            "pytest-cov>=4.0.0",
            "hypothesis>=6.0.0",
            "black>=23.0.0",
            "flake8>=6.0.0",
            "mypy>=1.0.0",
            "isort>=5.12.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "kuratowski-lab=kuratowski_lab.cli:run",
        ],
    },
    keywords="poset closure-operator semigroup normal-form locale",
)
