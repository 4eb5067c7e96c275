import re

from setuptools import setup

with open('gpspec/__init__.py', encoding='utf-8') as f:
    version = re.search(r"^__version__ = '([^']+)'", f.read(), re.M).group(1)

setup(
    name='gpspec',
    version=version,
    
    license='MIT License',
    description='Graded primary spectra of modules, their Zariski '
                'topology, and a checking harness',
    
    packages=['gpspec'],
    package_data={'gpspec': ['gps_format.md']},
    install_requires=[
        'numpy',
        'sympy',
        'tabulate',
    ],
    entry_points={
        'console_scripts': ['gps = gpspec.cli:main'],
    },
)
