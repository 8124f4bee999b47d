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
Plain-text archive codec, the interchange form of a count archive::

    #symdist-archive<TAB>1
    #tool<TAB>symdist 0.1.0
    #k<TAB>2
    #d_max<TAB>1000
    #provenance<TAB><path><TAB><sha256>
    #chromosome<TAB><id>
    #word<TAB>chromosome<TAB>distance<TAB>count
    CG<TAB>ex<TAB>2<TAB>1

Rows are ordered by chromosome (archive order), word code and distance.
"""
import io
import logging
from collections import OrderedDict

import numpy as np
from scipy import sparse

import symdist
from symdist.codec_services import ArchiveCodec, open_gzip_write, \
    open_maybe_gzip
from symdist.distances import CountArchive
from symdist.exceptions import ArchiveFormatException, \
    ArchiveVersionException, SymDistException
from symdist.words import decode, encode

moduleLogger = logging.getLogger('symdist.tsv.codec')

FORMAT_VERSION = '1'
COLUMNS = ('word', 'chromosome', 'distance', 'count')


class TsvCodec(ArchiveCodec):

    """
    TSV archive codec; ``compress=True`` gzips the text.
    """

    name = 'tsv'

    def __init__(self, compress=False):
        self.compress = compress

    def open_for_write(self, path):
        if self.compress:
            return open_gzip_write(path)
        return super(TsvCodec, self).open_for_write(path)

    def open_for_read(self, path):
        return open_maybe_gzip(path)

    def save(self, archive, stream):
        text = io.TextIOWrapper(stream, encoding='utf-8', newline='\n')
        try:
            self.write(archive, text)
            text.flush()
        finally:
            text.detach()

    def write(self, archive, text):
        text.write('#symdist-archive\t%s\n' % FORMAT_VERSION)
        text.write('#tool\tsymdist %s\n' % symdist.__version__)
        text.write('#k\t%d\n' % archive.k)
        text.write('#d_max\t%d\n' % archive.d_max)
        for path, digest in archive.provenance:
            text.write('#provenance\t%s\t%s\n' % (path, digest))
        for chromosome_id in archive.chromosomes:
            text.write('#chromosome\t%s\n' % chromosome_id)
        text.write('#' + '\t'.join(COLUMNS) + '\n')
        words = {}
        for chromosome_id, matrix in archive.chromosomes.items():
            entries = matrix.tocoo()
            for row, col, count in zip(entries.row, entries.col,
                                       entries.data):
                word = words.get(row)
                if word is None:
                    word = words[row] = decode(row, archive.k)
                text.write('%s\t%s\t%d\t%d\n'
                           % (word, chromosome_id, col, count))

    def load(self, stream):
        source = getattr(stream, 'name', None)
        text = io.TextIOWrapper(stream, encoding='utf-8', newline='\n')
        try:
            return self.read(text, source)
        finally:
            text.detach()

    def read(self, text, source=None):
        meta = {'provenance': [], 'chromosome': []}
        entries = OrderedDict()
        seen_format = False
        for number, line in enumerate(text, 1):
            line = line.rstrip('\n')
            if not line:
                continue
            fields = line.split('\t')
            if line.startswith('#'):
                key = fields[0][1:]
                if key == 'symdist-archive':
                    if fields[1:] != [FORMAT_VERSION]:
                        raise ArchiveVersionException(
                            source=source,
                            details='TSV format version %s' % fields[1:])
                    seen_format = True
                elif key in ('k', 'd_max'):
                    meta[key] = self._int(fields, 1, source, number)
                elif key == 'provenance' and len(fields) == 3:
                    meta['provenance'].append((fields[1], fields[2]))
                elif key == 'chromosome' and len(fields) == 2:
                    meta['chromosome'].append(fields[1])
                    entries.setdefault(fields[1], ([], [], []))
                continue
            if not seen_format or 'k' not in meta or 'd_max' not in meta:
                raise ArchiveFormatException(
                    source=source,
                    details='line %d: data before the archive header' % number)
            if len(fields) != 4:
                raise ArchiveFormatException(
                    source=source, details='line %d: expected 4 fields'
                                           % number)
            word, chromosome_id = fields[0], fields[1]
            distance = self._int(fields, 2, source, number)
            count = self._int(fields, 3, source, number)
            if len(word) != meta['k'] or not 1 <= distance <= meta['d_max'] \
                    or count < 1:
                raise ArchiveFormatException(
                    source=source, details='line %d: invalid entry' % number)
            try:
                code = encode(word)
            except SymDistException:
                raise ArchiveFormatException(
                    source=source, details='line %d: bad word %r'
                                           % (number, word))
            rows, cols, data = entries.setdefault(chromosome_id, ([], [], []))
            rows.append(code)
            cols.append(distance)
            data.append(count)
        if not seen_format or 'k' not in meta or 'd_max' not in meta:
            raise ArchiveFormatException(
                source=source, details='incomplete archive header')
        k, d_max = meta['k'], meta['d_max']
        chromosomes = OrderedDict()
        for chromosome_id, (rows, cols, data) in entries.items():
            chromosomes[chromosome_id] = sparse.csr_matrix(
                (np.asarray(data, dtype=np.int64),
                 (np.asarray(rows, dtype=np.int64),
                  np.asarray(cols, dtype=np.int64))),
                shape=(4 ** k, d_max + 1))
        moduleLogger.debug('read %d chromosomes from %s', len(chromosomes),
                           source)
        return CountArchive(k, d_max, chromosomes, meta['provenance'])

    def _int(self, fields, index, source, number):
        try:
            return int(fields[index])
        except (IndexError, ValueError):
            raise ArchiveFormatException(
                source=source, details='line %d: expected an integer in '
                                       'column %d' % (number, index + 1))
