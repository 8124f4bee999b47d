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

"""
This module contains the base ArchiveCodec class.
"""
import contextlib
import gzip

GZIP_MAGIC = b'\x1f\x8b'


class ArchiveCodec(object):

    """
    Represents a storage format for :class:`symdist.distances.CountArchive`.
    Concrete codecs live in their own subpackages; both hold the same
    content and differ only in representation.
    """

    name = None

    def __str__(self):
        """To string"""
        return '%s archive codec' % self.name

    def save(self, archive, stream):

        """
        Writes the archive to a binary stream opened by
        :meth:`open_for_write`.
        """

        pass

    def load(self, stream):

        """
        Reads an archive from a binary stream opened by
        :meth:`open_for_read` and returns a
        :class:`symdist.distances.CountArchive`.
        """

        pass

    def open_for_write(self, path):
        return open(path, 'wb')

    def open_for_read(self, path):
        return open(path, 'rb')


def is_tsv_path(path):
    name = str(path).lower()
    return name.endswith('.tsv') or name.endswith('.tsv.gz')


def codec_for(path):
    """
    Picks the codec from the file name: TSV for .tsv and .tsv.gz, the
    binary format for anything else.
    """
    from symdist.binary import BinaryCodec
    from symdist.tsv import TsvCodec
    if is_tsv_path(path):
        return TsvCodec(compress=str(path).lower().endswith('.gz'))
    return BinaryCodec()


@contextlib.contextmanager
def open_gzip_write(path):
    """
    Gzip writer whose header carries neither a timestamp nor a file
    name, so equal content gives equal bytes.
    """
    with open(path, 'wb') as raw:
        with gzip.GzipFile(filename='', mode='wb', fileobj=raw,
                           mtime=0) as stream:
            yield stream


@contextlib.contextmanager
def open_maybe_gzip(path):
    """
    Reads plain or gzip-compressed bytes, sniffed by magic number.
    """
    with open(path, 'rb') as raw:
        magic = raw.read(2)
        raw.seek(0)
        if magic != GZIP_MAGIC:
            yield raw
            return
        with gzip.GzipFile(fileobj=raw, mode='rb') as stream:
            yield stream
