from setuptools import setup, find_packages

setup(
    name="epglab",
    version="0.1.0",
    description="Enhanced power graphs of finite groups: exact invariants and verification",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.24.0",
        "pandas>=2.0.0",
        "pydantic>=2.0.0",
        "pydantic-settings>=2.0.0",
        "python-dotenv>=1.0.0",
    ],
    extras_require={
        "test": ["pytest>=7.0", "networkx>=3.0"],
    },
    entry_points={
        "console_scripts": [
            "epglab=epglab.cli:main",
        ],
    },
)
