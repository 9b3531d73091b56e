import os

from setuptools import setup, find_packages

from pypenta import __version__

module_dir = os.path.dirname(os.path.abspath(__file__))
reqs_raw = open(os.path.join(module_dir, "requirements.txt")).read()
reqs_list = [r.replace("==", "~=") for r in reqs_raw.split("\n") if r]

with open(os.path.join(module_dir, "README.md"), "r") as fh:
    long_description = fh.read()

setup(
    name='pypenta',
    version=__version__,
    author='pypenta developers',
    packages=find_packages(),
    license='MIT license',
    description="Membership tests, unitary lifts and rational inner "
                "functions of the pentablock",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        'Programming Language :: Python :: 3.6',
        "License :: OSI Approved :: MIT License",
    ],
    install_requires=reqs_list,
    include_package_data=True,
    package_data={"pypenta": ["test_files/*.json", "test_files/*.yaml"]},
    entry_points={
        'console_scripts': [
            'pypenta = pypenta.cli.main:main',
        ]
    }
)
