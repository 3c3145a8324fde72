# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from setuptools import setup, find_packages
from os import path


here = path.abspath(path.dirname(__file__))


# Get the long description from the README file
with open(path.join(here, 'README.rst')) as f:
    long_description = f.read()


setup(
    name='orbitwistor',
    version='0.1.0',
    description='Twistor lines, hyperkahler metrics and their signatures on adjoint orbits of sl(n, C)',  # noqa
    long_description=long_description,
    license='Mozilla Public License 2.0',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Mozilla Public License 2.0 (MPL 2.0)',
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    keywords='twistor hyperkahler adjoint-orbit',
    packages=find_packages(exclude=['test', 'test.*', 'docs']),
    python_requires='>=3.6',
    install_requires=[
        "attrs>=19.2.0",
        "simplejson>=3.11.1",
        "numpy>=1.17",
        "scipy>=1.3",
    ],
    extras_require={
        'dev': [
            "pytest>=4.0.2",
            "mock>=1.3.0",
            "colorlog>=3.1.4",
            "flake8>=3.5.0",
            "coverage>=3.7.1",
        ],
        'docs': [
            "Sphinx==1.4.5",
            "guzzle_sphinx_theme",
        ],
    },
    entry_points={
        'console_scripts': [
            'orbitwistor=orbitwistor.cli.main:run',
        ],
    },
)
