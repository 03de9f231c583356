from setuptools import find_packages, setup

setup(
    name="qsim",
    version="0.1",
    packages=find_packages(exclude=("tests", "tests.*")),
    entry_points={"console_scripts": ["qsim = qsim.cli:main"]},
)
