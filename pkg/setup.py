"""Setups the awmc project."""
import re

from setuptools import find_packages, setup


def get_version() -> str:
    """The version in ``awmc/version.py``, which must hold nothing else."""
    with open("awmc/version.py") as file:
        content = file.read()
    match = re.fullmatch(r'VERSION = "(\d\.\d+\.\d+)"\n', content)
    assert match is not None, f"Unexpected version file: {content!r}"
    return match.group(1)


def get_description() -> str:
    """The README up to its second section, shown on PyPI."""
    lines = []
    with open("README.md") as file:
        for line in file:
            if line.startswith("## ") and any(seen.startswith("## ") for seen in lines):
                break
            lines.append(line)
    return "".join(lines)


def get_requirements(path: str) -> list:
    with open(path) as file:
        return [line.strip() for line in file if line.strip() and not line.startswith("#")]


extras = {"testing": get_requirements("test_requirements.txt")}

setup(
    author="awmc developers",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    description="A model checker for multi-agent knowledge and awareness",
    entry_points={"console_scripts": ["awmc=awmc.cli:main"]},
    extras_require=extras,
    install_requires=get_requirements("requirements.txt"),
    license="MIT",
    long_description=get_description(),
    long_description_content_type="text/markdown",
    name="awmc",
    packages=find_packages(include=["awmc", "awmc.*"]),
    package_data={"awmc": ["models/assets/*.json", "py.typed"]},
    python_requires=">=3.7",
    tests_require=extras["testing"],
    version=get_version(),
    zip_safe=False,
)
