import re

import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("sehelpkit/__init__.py", "r", encoding="utf-8") as fh:
    version = re.search(r'^__version__ = "([^"]+)"', fh.read(), re.M).group(1)

setuptools.setup(
    name="structure-entropy-helpkit",
    version=version,
    description="Degree, partition and betweenness structure entropies of complex networks",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(),
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.7",
    install_requires=open("requirements.txt", "r").read().splitlines(),
    entry_points={"console_scripts": ["sehelpkit=sehelpkit.__main__:main",]},
)
