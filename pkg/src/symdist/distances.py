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
Inter-word distance counting.

One pass over the segments counts, for all 4^k words at once, the lags
between the start positions of consecutive occurrences inside a segment.
Counts are kept per chromosome as sparse ``(4^k, d_max + 1)`` matrices
(row = word code, column = distance); the aggregate is their sum.
"""
import logging
from collections import OrderedDict, namedtuple
from concurrent.futures import ProcessPoolExecutor

import numpy as np
from scipy import sparse

from symdist.exceptions import InvalidArgumentException
from symdist.seq_io import Provenance, open_fasta
from symdist.words import WordScanner, as_word, check_k, sortable

moduleLogger = logging.getLogger('symdist.distances')

AGGREGATE = 'aggregate'
D_MAX = 1000
#: bases per piece handed to the counter when reading long runs
DEFAULT_CHUNK = 1 << 22


class DistanceHistogram(namedtuple('DistanceHistogram',
                                   ['w', 'counts', 'scope'])):

    """
    Absolute counts of inter-word distances for one word; ``counts`` maps
    distance to count and only holds positive counts.
    """

    __slots__ = ()

    @property
    def total(self):
        return sum(self.counts.values())


Interval = namedtuple('Interval', ['chromosome_id', 'start', 'end'])


def _empty(k, d_max):
    return sparse.csr_matrix((4 ** k, d_max + 1), dtype=np.int64)


def _canonical(matrix):
    matrix = sparse.csr_matrix(matrix, dtype=np.int64)
    matrix.sum_duplicates()
    matrix.eliminate_zeros()
    matrix.sort_indices()
    return matrix


class CountArchive(object):

    """
    Per-chromosome distance counts for every word of length k, with the
    provenance of the inputs they came from. Treat as immutable.
    """

    def __init__(self, k, d_max, chromosomes=None, provenance=()):
        check_k(k)
        if d_max < 1:
            raise InvalidArgumentException(
                source='d_max', details='must be >= 1, got %r' % d_max)
        self.k = k
        self.d_max = d_max
        self.chromosomes = OrderedDict()
        for chromosome_id, matrix in (chromosomes or {}).items():
            if matrix.shape != (4 ** k, d_max + 1):
                raise InvalidArgumentException(
                    source=chromosome_id,
                    details='count matrix has shape %r' % (matrix.shape,))
            self.chromosomes[chromosome_id] = _canonical(matrix)
        self.provenance = tuple(Provenance(*p) for p in provenance)
        self._aggregate = None

    def __str__(self):
        """To string"""
        return 'Distance counts k=%d d_max=%d over %d chromosomes' % (
            self.k, self.d_max, len(self.chromosomes))

    def __eq__(self, other):
        if not isinstance(other, CountArchive):
            return NotImplemented
        if (self.k, self.d_max, self.provenance) != \
                (other.k, other.d_max, other.provenance):
            return False
        if list(self.chromosomes) != list(other.chromosomes):
            return False
        for key, matrix in self.chromosomes.items():
            if (matrix != other.chromosomes[key]).nnz:
                return False
        return True

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    @property
    def word_count(self):
        return 4 ** self.k

    @property
    def chromosome_ids(self):
        return list(self.chromosomes)

    @property
    def aggregate(self):
        """
        Elementwise sum of the per-chromosome matrices.
        """
        if self._aggregate is None:
            total = _empty(self.k, self.d_max)
            for matrix in self.chromosomes.values():
                total = total + matrix
            self._aggregate = _canonical(total)
        return self._aggregate

    def matrix(self, scope=AGGREGATE):
        if scope == AGGREGATE:
            return self.aggregate
        try:
            return self.chromosomes[scope]
        except KeyError:
            raise InvalidArgumentException(
                source=scope, details='no such chromosome in archive')

    def histogram(self, word, scope=AGGREGATE):
        """
        Returns the :class:`DistanceHistogram` of one word.

        >>> archive.histogram('CG')
        DistanceHistogram(w=WordCode(k=2, code=6),
                          counts=OrderedDict([(2, 1), (3, 1), (4, 1), (5, 1)]),
                          scope='aggregate')
        """
        w = as_word(word, self.k)
        row = self.matrix(scope)[w.code]
        counts = OrderedDict(
            (int(d), int(c)) for d, c in zip(row.indices, row.data) if c)
        return DistanceHistogram(w, counts, scope)

    def total_counts(self, scope=AGGREGATE):
        """
        Per-word total of recorded distances, as an int64 vector.
        """
        return np.asarray(self.matrix(scope).sum(axis=1)).ravel()


class DistanceCounter(object):

    """
    Incremental inter-word distance counter.

    A last-occurrence table of 4^k positions links each occurrence to the
    previous one of the same word; links never cross segment boundaries.
    Pieces of one segment (see :class:`symdist.seq_io.FastaReader`) are
    handled as a single segment.
    """

    flush_threshold = 1 << 22

    def __init__(self, k, d_max=D_MAX):
        check_k(k)
        if d_max < 1:
            raise InvalidArgumentException(
                source='d_max', details='must be >= 1, got %r' % d_max)
        self.k = k
        self.d_max = d_max
        self._scanner = WordScanner(k)
        self._last = np.full(4 ** k, -1, dtype=np.int64)
        self._chromosomes = OrderedDict()
        self._current = None
        self._pending = ([], [])
        self._pending_size = 0
        self.logger = logging.getLogger('symdist.distances.DistanceCounter')

    def feed(self, segment):
        if segment.chromosome_id != self._current:
            self._finish_chromosome()
            self._current = segment.chromosome_id
            self._chromosomes.setdefault(self._current,
                                         _empty(self.k, self.d_max))
        codes, positions, reset = self._scanner.scan(segment)
        if reset:
            self._last.fill(-1)
        if not codes.size:
            return

        order = np.argsort(sortable(codes, self.k), kind='stable')
        sc = codes[order]
        sp = positions[order]
        same = sc[1:] == sc[:-1]

        # links inside this piece
        words = [sc[1:][same]]
        gaps = [sp[1:][same] - sp[:-1][same]]

        # links from the previous piece of the same segment
        first = np.ones(sc.size, dtype=bool)
        first[1:] = ~same
        fc = sc[first]
        fp = sp[first]
        prev = self._last[fc]
        linked = prev >= self._scanner.segment_start
        words.append(fc[linked])
        gaps.append(fp[linked] - prev[linked])

        last = np.ones(sc.size, dtype=bool)
        last[:-1] = ~same
        self._last[sc[last]] = sp[last]

        words = np.concatenate(words)
        gaps = np.concatenate(gaps)
        keep = gaps <= self.d_max
        self._pending[0].append(words[keep])
        self._pending[1].append(gaps[keep])
        self._pending_size += int(keep.sum())
        if self._pending_size >= self.flush_threshold:
            self._flush()

    def feed_all(self, segments):
        for segment in segments:
            self.feed(segment)
        return self

    def archive(self, provenance=()):
        """
        Returns the :class:`CountArchive` of everything fed so far.
        """
        self._finish_chromosome()
        return CountArchive(self.k, self.d_max, self._chromosomes, provenance)

    def _flush(self):
        if not self._pending_size:
            self._pending = ([], [])
            return
        words = np.concatenate(self._pending[0])
        gaps = np.concatenate(self._pending[1])
        counts = sparse.coo_matrix(
            (np.ones(words.size, dtype=np.int64), (words, gaps)),
            shape=(4 ** self.k, self.d_max + 1)).tocsr()
        self._chromosomes[self._current] = \
            self._chromosomes[self._current] + counts
        self._pending = ([], [])
        self._pending_size = 0

    def _finish_chromosome(self):
        if self._current is None:
            return
        self._flush()
        self.logger.info('counted %s: %d distances', self._current,
                         self._chromosomes[self._current].sum())


def count_distances(segments, k, d_max=D_MAX):
    """
    Counts inter-word distances of all words of length k over a segment
    stream and returns a :class:`CountArchive`. Distances above d_max are
    discarded.

    >>> archive = count_distances(open_fasta('example.fa'), 2)
    >>> dict(archive.histogram('CG').counts)
    {2: 1, 3: 1, 4: 1, 5: 1}
    """
    counter = DistanceCounter(k, d_max).feed_all(segments)
    provenance = ()
    if hasattr(segments, 'provenance'):
        provenance = (segments.provenance(),)
    return counter.archive(provenance)


def _count_file(job):
    path, k, d_max, strict_case, chunk_size = job
    reader = open_fasta(path, strict_case=strict_case, chunk_size=chunk_size)
    moduleLogger.info('counting %s (k=%d, d_max=%d)', path, k, d_max)
    return count_distances(reader, k, d_max)


def merge_archives(archives):
    """
    Elementwise sum of archives with equal k and d_max. Chromosomes keep
    their order of first appearance; a chromosome present in several
    archives is summed.
    """
    archives = list(archives)
    if not archives:
        raise InvalidArgumentException(
            source='archives', details='nothing to merge')
    k, d_max = archives[0].k, archives[0].d_max
    chromosomes = OrderedDict()
    provenance = []
    for archive in archives:
        if (archive.k, archive.d_max) != (k, d_max):
            raise InvalidArgumentException(
                source='archives',
                details='cannot merge k=%d/d_max=%d with k=%d/d_max=%d'
                        % (archive.k, archive.d_max, k, d_max))
        for key, matrix in archive.chromosomes.items():
            if key in chromosomes:
                chromosomes[key] = chromosomes[key] + matrix
            else:
                chromosomes[key] = matrix
        provenance.extend(archive.provenance)
    return CountArchive(k, d_max, chromosomes, provenance)


def count_files(paths, k, d_max=D_MAX, threads=1, strict_case=False,
                chunk_size=DEFAULT_CHUNK):
    """
    Counts several FASTA files (typically one per chromosome), in a
    process pool when threads > 1, and merges the results in path order.
    """
    jobs = [(path, k, d_max, strict_case, chunk_size) for path in paths]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
            archives = list(pool.map(_count_file, jobs))
    else:
        archives = [_count_file(job) for job in jobs]
    return merge_archives(archives)


def positions_at_distances(segments, word, targets):
    """
    Returns a dict mapping each target distance to the list of
    :class:`Interval` objects spanning consecutive occurrences of word at
    exactly that distance: from the first occurrence's start to the
    second occurrence's start + k (0-based, half-open).
    """
    w = as_word(word)
    targets = sorted(set(int(t) for t in targets))
    for target in targets:
        if target < 1:
            raise InvalidArgumentException(
                source='target_d', details='must be >= 1, got %r' % target)
    found = OrderedDict((t, []) for t in targets)
    scanner = WordScanner(w.k)
    last = -1
    for segment in segments:
        codes, positions, reset = scanner.scan(segment)
        if reset:
            last = -1
        occurrences = positions[codes == w.code]
        if not occurrences.size:
            continue
        if last >= scanner.segment_start:
            occurrences = np.concatenate(([last], occurrences))
        gaps = np.diff(occurrences)
        for target in targets:
            for i in np.nonzero(gaps == target)[0]:
                found[target].append(Interval(
                    segment.chromosome_id, int(occurrences[i]),
                    int(occurrences[i + 1]) + w.k))
        last = occurrences[-1]
    return found


def positions_at_distance(segments, word, target_d):
    """
    Intervals of consecutive occurrences of word separated by exactly
    target_d.

    >>> positions_at_distance(open_fasta('example.fa'), 'CG', 2)
    [Interval(chromosome_id='ex', start=13, end=17)]
    """
    return positions_at_distances(segments, word, [target_d])[int(target_d)]


def save_archive(archive, path, codec=None):
    """
    Writes an archive. The codec defaults to TSV for .tsv/.tsv.gz paths
    and to the binary format otherwise.
    """
    from symdist.codec_services import codec_for
    codec = codec or codec_for(path)
    with codec.open_for_write(path) as stream:
        codec.save(archive, stream)
    moduleLogger.debug('saved %s to %s', archive, path)


def load_archive(path, codec=None):
    """
    Reads an archive written by :func:`save_archive`.
    """
    from symdist.codec_services import codec_for
    codec = codec or codec_for(path)
    with codec.open_for_read(path) as stream:
        return codec.load(stream)
