# -*- coding: utf-8 -*-
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
import gzip
from collections import namedtuple

import pytest

from symdist.binary import BinaryCodec
from symdist.distances import count_distances
from symdist.seq_io import open_fasta
from symdist.tsv import TsvCodec
from .tools import randomGenome

#: the worked example: CG occurs at 1, 4, 9, 13 and 15
EXAMPLE_SEQUENCE = 'ACGTCGATCCGTGCGCG'

CodecEnv = namedtuple(
    'CodecEnv',
    ['env_name',
     'codec',
     'suffix',
     ]
)


CODEC_ENV_PARAMS = [
    CodecEnv('binary', BinaryCodec(), '.symd'),
    CodecEnv('tsv', TsvCodec(), '.tsv'),
    CodecEnv('tsv', TsvCodec(compress=True), '.tsv.gz'),
]


def _make_codec_env_ids():
    env_ids = []
    for env in CODEC_ENV_PARAMS:
        env_ids.append(
            '{name}-{suffix}'.format(
                name=env.env_name,
                suffix=env.suffix.lstrip('.')
            )
        )
    return env_ids


CODEC_ENV_IDS = _make_codec_env_ids()


def writeFasta(path, records, width=60, compress=False):
    """
    Writes (header, sequence) records to path, gzipped on request.
    """
    lines = []
    for header, sequence in records:
        lines.append('>%s' % header)
        for i in range(0, len(sequence), width):
            lines.append(sequence[i:i + width])
    data = ('\n'.join(lines) + '\n').encode('ascii')
    if compress:
        with gzip.GzipFile(str(path), 'wb', mtime=0) as f:
            f.write(data)
    else:
        with open(str(path), 'wb') as f:
            f.write(data)
    return str(path)


@pytest.fixture
def fasta_factory(tmp_path):
    """Returns a function writing FASTA records under a temporary
    directory"""
    def factory(name, records, width=60, compress=False):
        return writeFasta(tmp_path / name, records, width, compress)
    return factory


@pytest.fixture
def example_env(request, tmp_path):
    """Apply the worked example as attributes on the class:
    * _examplePath: one-record FASTA file
    * _exampleArchive: k=2 counts of it
    """
    path = writeFasta(tmp_path / 'example.fa', [('ex', EXAMPLE_SEQUENCE)])
    request.cls._examplePath = path
    request.cls._exampleArchive = count_distances(open_fasta(path), 2)
    request.cls._tmpPath = tmp_path
    yield request


@pytest.fixture(params=CODEC_ENV_PARAMS, ids=CODEC_ENV_IDS)
def codec_env(request, tmp_path):
    """Apply a codec, its file suffix and a temporary directory on the
    class"""
    param = request.param
    for field in param._fields:
        setattr(request.cls, field, getattr(param, field))
    request.cls._tmpPath = tmp_path


@pytest.fixture
def toy_env(request, tmp_path):
    """A two-chromosome random genome with N runs, its FASTA file and its
    k=2 archive (distances up to 60)"""
    records = randomGenome(seed=7, lengths=(4000, 3000), alphabet='ACGTN',
                           weights=(0.245, 0.245, 0.245, 0.245, 0.02))
    path = writeFasta(tmp_path / 'toy.fa', records)
    request.cls._toyRecords = records
    request.cls._toyPath = path
    request.cls._toyArchive = count_distances(open_fasta(path), 2, 60)
    yield request
