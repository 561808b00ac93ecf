#!/usr/bin/env python
# -*- coding: utf-8 -*-
from setuptools import setup, find_packages
import io


def readme():
    with io.open("README.md", "r", encoding="utf-8") as my_file:
        return my_file.read()

# Note:
# - https://pypi.python.org/pypi?%3Aaction=list_classifiers

setup(
    name = 'py-approachabilitykit',
    description='Python library for set-valued approachability in unknown games, with an experiment harness.',
    long_description=readme(),
    long_description_content_type='text/markdown',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
      ],
    keywords='approachability online learning regret games vector payoffs',
    version='0.1.0',
    license='BSD 2-Clause License',
    python_requires='>=3.8',
    packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    package_data={
        'approachabilitykit.harness': ['configs/*.ini', 'text_document/*.txt', 'record_schema.txt'],
    },
    install_requires=[
        'numpy>=1.17',
        'scipy>=1.8',
    ],
    entry_points={
        'console_scripts': ['approachabilitykit=approachabilitykit.harness.cli:main'],
    },
    test_suite='tests',
)
