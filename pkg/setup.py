################################
# Package metadata. Keep these in sync with SurvivalLib/survivallib.py.
NAME = "SurvivalLib"
VERSION = "1.0.0"
AUTHOR = "SurvivalLib contributors"
LICENSE = "MIT"
PACKAGES = ['SurvivalLib']
INSTALL_REQUIRES = [
    'PyYAML',
    'numpy>=1.22',
    'scipy',
    'pandas>=2.1',
    'joblib',
]
TESTS_REQUIRE = ['zope.testrunner']
# STOP_REPLACEMENTS
################################

from setuptools import setup, find_packages

setup(
    name=NAME,
    version=VERSION,
    author=AUTHOR,
    license=LICENSE,
    description='Censoring-aware survival analysis: Kaplan-Meier, Cox and random survival forests',

    python_requires='>=3.8',

    # Tell setuptools what packages this library provides.
    packages=find_packages(),

    # Fixture tables and the sample run configuration ship with the tests.
    include_package_data=True,
    package_data={'SurvivalLib.tests': ['data/*.tsv', 'data/*.json', 'data/*.yaml']},

    install_requires=INSTALL_REQUIRES,
    tests_require=TESTS_REQUIRE,
    extras_require={'test': TESTS_REQUIRE},

    entry_points={
        'console_scripts': [
            'survivallib = SurvivalLib.lib.libexec.SurvCommand:main',
        ],
    },

    zip_safe=False,
)
