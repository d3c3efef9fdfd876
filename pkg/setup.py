import os
import setuptools
import shutil

__version__ = '1.0.0'

with open("README.md", "r") as fh:
    long_description = fh.read()

cacheDirPath = 'kdmaxima/__pycache__'
if os.path.isdir( cacheDirPath ):
    shutil.rmtree( cacheDirPath )

setuptools.setup(
    name="kdmaxima",
    version=__version__,
    python_requires='>=3.8',
    install_requires=[ 'numpy>=1.17', 'scipy>=1.4', 'psutil>=5.7.2' ],
    extras_require={ 'test': ['pytest>=6.0'] },
    scripts=['kdmaxima/maxcli.py'],
    packages=["kdmaxima"],
    package_dir = { 'kdmaxima': 'kdmaxima' },
    exclude_package_data = { '': ['*_pycache_*', '*.pyc', '*/*.pyc'] },

    description="kdmaxima finds maxima, maximal layers, and multiple longest common subsequences with k-d trees.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ]
)
