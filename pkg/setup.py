#
#      Licensed under the Apache License, Version 2.0 (the
#      "License"); you may not use this file except in compliance
#      with the License.  You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#      Unless required by applicable law or agreed to in writing,
#      software distributed under the License is distributed on an
#      "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
#      KIND, either express or implied.  See the License for the
#      specific language governing permissions and limitations
#      under the License.
#
import os
from setuptools import setup, find_packages

version = '0.1.0.dev1'


def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


setup(
    name="symdist",
    description='Inter-word distance distributions and strand symmetry '
                'of genomic sequences',
    version=version,
    install_requires=[
        'numpy',
        'scipy',
        ],
    license='Apache License (2.0)',
    package_dir={'': 'src'},
    packages=find_packages('src', exclude=['tests']),
    exclude_package_data={'': ['tests']},
    entry_points={
        'console_scripts': ['symdist = symdist.cli:main'],
        },
    long_description=read('README.txt'),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        'Programming Language :: Python :: 3',
        "Topic :: Scientific/Engineering :: Bio-Informatics",
        ],
)
