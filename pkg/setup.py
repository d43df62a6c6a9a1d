#!/usr/bin/env python

from setuptools import setup, find_packages

from ringrecon import get_package_version


PACKAGE_NAME = 'ringrecon'


with open('README.rst', 'r') as fp:
    readme = fp.read()


setup(
    name=PACKAGE_NAME,
    version=get_package_version(),
    license='MIT',
    description=('Exact checks for recovering a finite commutative ring '
                 'from its category of algebras.'),
    long_description=readme,
    long_description_content_type='text/x-rst',
    packages=find_packages(),
    package_data={
        'ringrecon.sphinx.ext.tests': [
            'themes/test/*',
        ],
    },
    install_requires=[
        'networkx>=2.5',
        'sympy>=1.10',
    ],
    extras_require={
        'docs': [
            'beanbag-docutils>=2.0',
            'Sphinx>=1.8,<=7.999',
            'sphinxcontrib-serializinghtml',
        ],
    },
    entry_points={
        'console_scripts': [
            'ringrecon = ringrecon.cli:main',
        ],
    },
    python_requires='>=3.8',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering :: Mathematics',
    ]
)
