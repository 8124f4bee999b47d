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
import struct

import pytest

import symdist
from symdist.binary import BinaryCodec, MAGIC
from symdist.codec_services import codec_for
from symdist.distances import count_distances, load_archive, save_archive
from symdist.exceptions import ArchiveChecksumException, \
    ArchiveFormatException, ArchiveTruncatedException, \
    ArchiveVersionException
from symdist.seq_io import open_fasta
from symdist.tsv import TsvCodec
from .conftest import writeFasta
from .tools import randomGenome

EXAMPLE_ROWS = [
    'CG\tex\t2\t1',
    'CG\tex\t3\t1',
    'CG\tex\t4\t1',
    'CG\tex\t5\t1',
    'GC\tex\t2\t1',
    'GT\tex\t8\t1',
    'TC\tex\t4\t1',
]


@pytest.mark.usefixtures('codec_env')
class TestCodecs:

    """ Tests shared by every archive codec """

    def _genomeArchive(self):
        records = randomGenome(4, (800, 600), alphabet='ACGTN',
                               weights=(0.24, 0.24, 0.24, 0.24, 0.04))
        path = writeFasta(self._tmpPath / 'g.fa', records)
        return count_distances(open_fasta(path), 3, 300)

    def testSaveLoad(self):
        """An archive reads back equal, provenance included"""
        archive = self._genomeArchive()
        path = str(self._tmpPath / ('a' + self.suffix))
        save_archive(archive, path, self.codec)
        assert archive == load_archive(path, self.codec)

    def testSuffixSelectsCodec(self):
        """load_archive without a codec picks it from the suffix"""
        archive = self._genomeArchive()
        path = str(self._tmpPath / ('a' + self.suffix))
        save_archive(archive, path)
        assert type(self.codec) is type(codec_for(path))
        assert archive == load_archive(path)

    def testDeterministic(self):
        """Saving twice gives identical bytes"""
        archive = self._genomeArchive()
        first = str(self._tmpPath / ('1' + self.suffix))
        second = str(self._tmpPath / ('2' + self.suffix))
        save_archive(archive, first, self.codec)
        save_archive(archive, second, self.codec)
        with open(first, 'rb') as a, open(second, 'rb') as b:
            assert a.read() == b.read()

    def testEmptyArchive(self):
        """An archive without chromosomes survives a round trip"""
        archive = count_distances([], 2)
        path = str(self._tmpPath / ('e' + self.suffix))
        save_archive(archive, path, self.codec)
        loaded = load_archive(path, self.codec)
        assert archive == loaded
        assert 0 == loaded.aggregate.nnz


@pytest.mark.usefixtures('example_env')
class TestTsvFormat:

    """ Tests for the TSV interchange form """

    def testGoldenExample(self):
        """The worked example exports to the documented layout"""
        path = str(self._tmpPath / 'example.tsv')
        save_archive(self._exampleArchive, path)
        with open(path) as f:
            lines = f.read().splitlines()
        assert '#symdist-archive\t1' == lines[0]
        assert '#tool\tsymdist %s' % symdist.__version__ == lines[1]
        assert ['#k\t2', '#d_max\t1000'] == lines[2:4]
        tag, source, digest = lines[4].split('\t')
        assert ('#provenance', self._examplePath) == (tag, source)
        assert 64 == len(digest)
        assert '#chromosome\tex' == lines[5]
        assert '#word\tchromosome\tdistance\tcount' == lines[6]
        assert EXAMPLE_ROWS == lines[7:]

    def testGzipHeader(self):
        """Compressed exports carry no file name and a zero timestamp"""
        path = str(self._tmpPath / 'example.tsv.gz')
        save_archive(self._exampleArchive, path)
        with open(path, 'rb') as f:
            head = f.read(10)
        assert b'\x1f\x8b' == head[:2]
        assert not head[3] & 0x08
        assert (0,) == struct.unpack('<I', head[4:8])
        assert self._exampleArchive == load_archive(path)

    def _load(self, text):
        path = self._tmpPath / 'bad.tsv'
        path.write_text(text)
        return load_archive(str(path))

    def testUnknownVersion(self):
        """A future format version is refused"""
        with pytest.raises(ArchiveVersionException):
            self._load('#symdist-archive\t2\n#k\t2\n#d_max\t10\n')

    def testDataBeforeHeader(self):
        """Entries need the header first"""
        with pytest.raises(ArchiveFormatException):
            self._load('CG\tex\t2\t1\n')

    def testBadEntries(self):
        """Wrong word length, distance outside [1, d_max], bad counts"""
        head = '#symdist-archive\t1\n#k\t2\n#d_max\t10\n'
        for row in ('CGA\tex\t2\t1', 'CG\tex\t11\t1', 'CG\tex\t0\t1',
                    'CG\tex\t2\t0', 'CN\tex\t2\t1', 'CG\tex\t2',
                    'CG\tex\ttwo\t1'):
            with pytest.raises(ArchiveFormatException):
                self._load(head + row + '\n')

    def testIncompleteHeader(self):
        """k and d_max are required"""
        with pytest.raises(ArchiveFormatException):
            self._load('#symdist-archive\t1\n#k\t2\n')


@pytest.mark.usefixtures('example_env')
class TestBinaryFormat:

    """ Tests for the binary archive layout and its integrity checks """

    def _saved(self):
        path = str(self._tmpPath / 'example.symd')
        save_archive(self._exampleArchive, path, BinaryCodec())
        with open(path, 'rb') as f:
            return path, bytearray(f.read())

    def _rewrite(self, path, data):
        with open(path, 'wb') as f:
            f.write(bytes(data))

    def testHeader(self):
        """Magic then version 1"""
        _, data = self._saved()
        assert MAGIC == bytes(data[:4])
        assert (1,) == struct.unpack('<I', bytes(data[4:8]))

    def testTsvAndBinaryAgree(self):
        """Both forms hold the same content"""
        path, _ = self._saved()
        tsv = str(self._tmpPath / 'example.tsv')
        save_archive(load_archive(path), tsv, TsvCodec())
        assert load_archive(path) == load_archive(tsv)

    def testBadMagic(self):
        path, data = self._saved()
        data[0:4] = b'NOPE'
        self._rewrite(path, data)
        with pytest.raises(ArchiveFormatException):
            load_archive(path)

    def testVersion(self):
        path, data = self._saved()
        data[4:8] = struct.pack('<I', 9)
        self._rewrite(path, data)
        with pytest.raises(ArchiveVersionException):
            load_archive(path)

    def testChecksum(self):
        path, data = self._saved()
        data[-1] ^= 0xff
        self._rewrite(path, data)
        with pytest.raises(ArchiveChecksumException):
            load_archive(path)

    def testTruncated(self):
        """Every proper prefix is detected as truncated"""
        path, data = self._saved()
        for size in (0, 3, 7, 12, len(data) - 1):
            self._rewrite(path, data[:size])
            with pytest.raises(ArchiveTruncatedException):
                load_archive(path)
