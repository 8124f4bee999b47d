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
Binary archive codec.

Layout (little-endian)::

    magic      4 bytes  b'SYMD'
    version    u32
    length     u64      size of the compressed payload
    crc32      u32      of the compressed payload
    payload    zlib-compressed table

The decompressed table is a u32-length-prefixed JSON metadata block
(k, d_max, chromosome ids, entry counts, provenance) followed, for each
chromosome in order, by three arrays of its non-zero entries: word
codes (u32), distances (u32) and counts (i64).
"""
import json
import logging
import struct
import zlib
from collections import OrderedDict

import numpy as np
from scipy import sparse

from symdist import messages
from symdist.codec_services import ArchiveCodec
from symdist.distances import CountArchive
from symdist.exceptions import ArchiveChecksumException, \
    ArchiveFormatException, ArchiveTruncatedException, \
    ArchiveVersionException

moduleLogger = logging.getLogger('symdist.binary.codec')

MAGIC = b'SYMD'
VERSION = 1
_U32 = struct.Struct('<I')
_TAIL = struct.Struct('<QI')
COMPRESSION_LEVEL = 6


class BinaryCodec(ArchiveCodec):

    """
    Compact archive format, content-identical to the TSV export.
    """

    name = 'binary'

    def save(self, archive, stream):
        payload = zlib.compress(self._table(archive), COMPRESSION_LEVEL)
        stream.write(MAGIC)
        stream.write(_U32.pack(VERSION))
        crc = zlib.crc32(payload) & 0xffffffff
        stream.write(_TAIL.pack(len(payload), crc))
        stream.write(payload)
        moduleLogger.debug('%d compressed bytes, crc %08x', len(payload), crc)

    def load(self, stream):
        source = getattr(stream, 'name', None)
        magic = self._read(stream, 4, source)
        if magic != MAGIC:
            raise ArchiveFormatException(source=source,
                                         details=messages.BAD_MAGIC)
        version, = _U32.unpack(self._read(stream, _U32.size, source))
        if version != VERSION:
            raise ArchiveVersionException(
                source=source,
                details='format version %d, expected %d' % (version, VERSION))
        length, crc = _TAIL.unpack(self._read(stream, _TAIL.size, source))
        payload = self._read(stream, length, source)
        if zlib.crc32(payload) & 0xffffffff != crc:
            raise ArchiveChecksumException(source=source,
                                           details=messages.CHECKSUM)
        try:
            table = zlib.decompress(payload)
        except zlib.error as e:
            raise ArchiveFormatException(source=source, details=str(e))
        return self._parse(table, source)

    def _read(self, stream, size, source):
        data = stream.read(size)
        if len(data) < size:
            raise ArchiveTruncatedException(source=source,
                                            details=messages.TRUNCATED)
        return data

    def _table(self, archive):
        blocks = []
        sizes = []
        for matrix in archive.chromosomes.values():
            entries = matrix.tocoo()
            sizes.append(int(entries.nnz))
            blocks.append(entries.row.astype('<u4').tobytes())
            blocks.append(entries.col.astype('<u4').tobytes())
            blocks.append(entries.data.astype('<i8').tobytes())
        meta = json.dumps({
            'k': archive.k,
            'd_max': archive.d_max,
            'chromosomes': list(archive.chromosomes),
            'entries': sizes,
            'provenance': [list(p) for p in archive.provenance],
        }, sort_keys=True).encode('utf-8')
        return _U32.pack(len(meta)) + meta + b''.join(blocks)

    def _parse(self, table, source):
        try:
            size, = _U32.unpack_from(table, 0)
            meta = json.loads(table[4:4 + size].decode('utf-8'))
            k, d_max = int(meta['k']), int(meta['d_max'])
            offset = 4 + size
            chromosomes = OrderedDict()
            for chromosome_id, nnz in zip(meta['chromosomes'],
                                          meta['entries']):
                rows, offset = _array(table, '<u4', nnz, offset)
                cols, offset = _array(table, '<u4', nnz, offset)
                data, offset = _array(table, '<i8', nnz, offset)
                chromosomes[chromosome_id] = sparse.csr_matrix(
                    (data.astype(np.int64),
                     (rows.astype(np.int64), cols.astype(np.int64))),
                    shape=(4 ** k, d_max + 1))
            if offset != len(table):
                raise ValueError('%d trailing bytes' % (len(table) - offset))
            return CountArchive(k, d_max, chromosomes, meta['provenance'])
        except (ValueError, KeyError, TypeError, struct.error) as e:
            raise ArchiveFormatException(source=source, details=str(e))


def _array(table, dtype, count, offset):
    dtype = np.dtype(dtype)
    end = offset + dtype.itemsize * count
    if count < 0 or end > len(table):
        raise ValueError('entry table shorter than declared')
    if not count:
        return np.zeros(0, dtype=dtype), end
    return np.frombuffer(table, dtype, count, offset), end
