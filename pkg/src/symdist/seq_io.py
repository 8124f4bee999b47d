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
Streaming FASTA input.

Each record (chromosome) is split into contiguous ACGT-only segments;
any other symbol separates. Lowercase acgt count as their uppercase base
unless ``strict_case`` is set.
"""
import gzip
import logging
import re
from collections import OrderedDict, namedtuple

from symdist import messages
from symdist.exceptions import FastaFormatException, SequenceIOException, \
    InvalidArgumentException
from symdist.util import file_digest

moduleLogger = logging.getLogger('symdist.seq_io')

GZIP_MAGIC = b'\x1f\x8b'
_RUN = re.compile(b'[ACGTacgt]+')
_STRICT_RUN = re.compile(b'[ACGT]+')


class SequenceSegment(namedtuple('SequenceSegment', [
        'chromosome_id', 'segment_index', 'start_offset', 'bases'])):

    """
    A maximal ACGT run of one chromosome (or a piece of one, see
    :class:`FastaReader`). ``start_offset`` is 0-based and counts every
    symbol of the record, separators included.
    """

    __slots__ = ()

    @property
    def end_offset(self):
        return self.start_offset + len(self.bases)


ChromosomeRecord = namedtuple(
    'ChromosomeRecord', ['chromosome_id', 'length', 'segments'])

Provenance = namedtuple('Provenance', ['path', 'digest'])


class GenomeSource(namedtuple('GenomeSource', ['records', 'provenance'])):

    """
    Per-chromosome totals of a scanned input.
    """

    __slots__ = ()

    def __getitem__(self, key):
        if isinstance(key, str):
            for record in self.records:
                if record.chromosome_id == key:
                    return record
            raise KeyError(key)
        return super(GenomeSource, self).__getitem__(key)


def _open_binary(path):
    try:
        raw = open(path, 'rb')
    except (IOError, OSError) as e:
        raise SequenceIOException(source=path, details=str(e))
    magic = raw.read(2)
    raw.seek(0)
    if magic == GZIP_MAGIC:
        return gzip.GzipFile(fileobj=raw, mode='rb')
    return raw


class FastaReader(object):

    """
    Iterable over the :class:`SequenceSegment` objects of a FASTA file,
    gzip-compressed or plain.

    When ``chunk_size`` is set, a run longer than chunk_size bases is
    delivered as consecutive pieces that share ``segment_index``; their
    offsets follow each other without gaps.

    >>> for seg in FastaReader('genome.fa'):
    ...     print(seg.chromosome_id, seg.start_offset, seg.bases)
    c1 0 ACGT
    c1 6 ACG
    """

    def __init__(self, path, strict_case=False, chunk_size=None):
        if chunk_size is not None and chunk_size < 1:
            raise InvalidArgumentException(
                source='chunk_size', details='must be positive')
        self.path = path
        self.strict_case = strict_case
        self.chunk_size = chunk_size
        self.record_lengths = OrderedDict()
        self.logger = logging.getLogger('symdist.seq_io.FastaReader')

    def __str__(self):
        """To string"""
        return 'FASTA reader for %s' % self.path

    def provenance(self):
        return Provenance(str(self.path), file_digest(self.path))

    def __iter__(self):
        self.record_lengths = OrderedDict()
        run_re = _STRICT_RUN if self.strict_case else _RUN
        handle = _open_binary(self.path)
        state = _RecordState(self.chunk_size)
        try:
            for line in handle:
                line = line.rstrip(b'\r\n')
                if line.startswith(b'>'):
                    for seg in state.close():
                        yield seg
                    self._finish(state)
                    state.start(self._parse_header(line))
                    continue
                if not line:
                    continue
                if state.chromosome_id is None:
                    raise FastaFormatException(
                        source=self.path,
                        details=messages.SEQUENCE_BEFORE_HEADER)
                for seg in state.feed(line, run_re):
                    yield seg
            for seg in state.close():
                yield seg
            self._finish(state)
        except (IOError, OSError) as e:
            raise SequenceIOException(source=self.path, details=str(e))
        finally:
            handle.close()

    def _parse_header(self, line):
        fields = line[1:].split()
        if not fields:
            raise FastaFormatException(
                source=self.path, details='empty FASTA header')
        chromosome_id = fields[0].decode('ascii', 'replace')
        if chromosome_id in self.record_lengths:
            raise FastaFormatException(
                source=self.path,
                details='duplicate record id %s' % chromosome_id)
        self.record_lengths[chromosome_id] = 0
        return chromosome_id

    def _finish(self, state):
        if state.chromosome_id is not None:
            self.record_lengths[state.chromosome_id] = state.position
            self.logger.debug('%s: %d symbols, %d segments',
                              state.chromosome_id, state.position,
                              state.segment_count)


class _RecordState(object):

    """
    Run bookkeeping for the record being read.
    """

    def __init__(self, chunk_size):
        self.chunk_size = chunk_size
        self.chromosome_id = None
        self.position = 0
        self.segment_count = 0
        self._run = bytearray()
        self._run_start = None

    def start(self, chromosome_id):
        self.chromosome_id = chromosome_id
        self.position = 0
        self.segment_count = 0
        self._run = bytearray()
        self._run_start = None

    def feed(self, line, run_re):
        out = []
        for match in run_re.finditer(line):
            start = self.position + match.start()
            if self._run_start is not None and \
                    start != self._run_start + len(self._run):
                out.extend(self._emit(final=True))
            if self._run_start is None:
                self._run_start = start
            self._run += match.group(0)
            if self.chunk_size and len(self._run) >= self.chunk_size:
                out.extend(self._emit(final=False))
        self.position += len(line)
        if self._run_start is not None and \
                self._run_start + len(self._run) != self.position:
            out.extend(self._emit(final=True))
        return out

    def close(self):
        return self._emit(final=True)

    def _emit(self, final):
        out = []
        if self._run_start is None:
            return out
        limit = self.chunk_size or len(self._run)
        while self._run and (final or len(self._run) >= limit):
            piece = bytes(self._run[:limit]).upper().decode('ascii')
            out.append(SequenceSegment(self.chromosome_id, self.segment_count,
                                       self._run_start, piece))
            self._run_start += len(piece)
            del self._run[:limit]
        if final:
            self.segment_count += 1
            self._run_start = None
        return out


def open_fasta(path, strict_case=False, chunk_size=None):
    """
    Returns a :class:`FastaReader` over path. Iterating it yields the
    segments in file order.

    >>> [tuple(s) for s in open_fasta('c1.fa')]
    [('c1', 0, 0, 'ACGT'), ('c1', 1, 6, 'ACG')]
    """
    return FastaReader(path, strict_case=strict_case, chunk_size=chunk_size)


def iter_fasta(paths, strict_case=False, chunk_size=None):
    """
    Chains the segments of several FASTA files.
    """
    for path in paths:
        for segment in open_fasta(path, strict_case, chunk_size):
            yield segment


def scan_summary(source):
    """
    Consumes a segment stream and returns a :class:`GenomeSource`.

    When the stream is a :class:`FastaReader`, record lengths include
    trailing separators and records without any ACGT run are listed
    with zero segments; otherwise a chromosome's length is the end of
    its last segment.
    """
    lengths = OrderedDict()
    segments = OrderedDict()
    for seg in source:
        key = seg.chromosome_id
        if key not in lengths:
            lengths[key] = 0
            segments[key] = set()
        lengths[key] = max(lengths[key], seg.end_offset)
        segments[key].add(seg.segment_index)
    provenance = None
    if isinstance(source, FastaReader):
        # file order, empty records included
        lengths = OrderedDict(
            list(source.record_lengths.items()) +
            [(key, length) for key, length in lengths.items()
             if key not in source.record_lengths])
        provenance = source.provenance()
    records = [ChromosomeRecord(key, lengths[key],
                                len(segments.get(key, ())))
               for key in lengths]
    return GenomeSource(records, provenance)


def write_fasta(records, path, line_width=60):
    """
    Writes (header, bases) records as plain FASTA.
    """
    with open(path, 'w') as f:
        for header, bases in records:
            f.write('>%s\n' % header)
            for i in range(0, len(bases), line_width):
                f.write(bases[i:i + line_width])
                f.write('\n')
