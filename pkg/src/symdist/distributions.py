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
Relative-frequency distance distributions on the restricted domain
[k+1, domain_hi], their totals S^w, order statistics and the
first-quartile pair filter.
"""
import logging
from collections import namedtuple

import numpy as np

from symdist import messages
from symdist.exceptions import EmptyInputException, InvalidArgumentException
from symdist.util import write_output
from symdist.words import WordCode, as_word

moduleLogger = logging.getLogger('symdist.distributions')

DOMAIN_HI = 1000
QUARTILE = 0.25


class DistanceDistribution(object):

    """
    f^w on the integer domain [k+1, domain_hi]; ``f[i]`` is the relative
    frequency of distance ``domain_lo + i``. ``S`` is the total count the
    frequencies were normalized by (or, when built with
    ``all_distances=True``, the total over every recorded distance).
    """

    def __init__(self, w, domain_lo, domain_hi, f, S):
        self.w = w
        self.domain_lo = domain_lo
        self.domain_hi = domain_hi
        self.f = f
        self.S = S

    def __repr__(self):
        return '<DistanceDistribution %s [%d, %d] S=%d>' % (
            self.w, self.domain_lo, self.domain_hi, self.S)

    @property
    def R(self):
        return self.domain_hi - self.domain_lo

    @property
    def distances(self):
        return np.arange(self.domain_lo, self.domain_hi + 1)

    def frequency(self, distance):
        if not self.domain_lo <= distance <= self.domain_hi:
            return 0.0
        return float(self.f[distance - self.domain_lo])


def _check_domain(k, domain_hi):
    if domain_hi <= k + 1:
        raise InvalidArgumentException(
            source='domain_hi',
            details='domain [%d, %d] is empty or a single point'
                    % (k + 1, domain_hi))


def _normalize(counts):
    total = counts.sum(axis=-1)
    f = np.zeros(counts.shape, dtype=np.float64)
    np.divide(counts, np.expand_dims(total, -1), out=f,
              where=np.expand_dims(total, -1) > 0)
    return f, total


def to_distribution(h, k=None, domain_hi=DOMAIN_HI, all_distances=False):
    """
    Converts a :class:`symdist.distances.DistanceHistogram` into a
    :class:`DistanceDistribution`. Counts outside the domain are ignored.

    >>> dist = to_distribution(archive.histogram('CG'), 2)
    >>> dist.S, dist.frequency(3), dist.frequency(2)
    (3, 0.3333333333333333, 0.0)
    """
    w = h.w
    if k is None:
        k = w.k
    _check_domain(k, domain_hi)
    lo = k + 1
    counts = np.zeros(domain_hi - k, dtype=np.float64)
    for distance, count in h.counts.items():
        if lo <= distance <= domain_hi:
            counts[distance - lo] = count
    f, total = _normalize(counts)
    S = int(total)
    if all_distances:
        S = int(sum(h.counts.values()))
    return DistanceDistribution(w, lo, domain_hi, f, S)


def _check_archive_domain(archive, domain_hi):
    _check_domain(archive.k, domain_hi)
    if domain_hi > archive.d_max:
        raise InvalidArgumentException(
            source='domain_hi',
            details='domain reaches %d but distances were recorded up to %d'
                    % (domain_hi, archive.d_max))


def archive_distribution(archive, word, domain_hi=DOMAIN_HI,
                         all_distances=False):
    """
    Distribution of one word of an archive; the domain may not reach
    beyond the archive's recorded maximum distance.
    """
    _check_archive_domain(archive, domain_hi)
    return to_distribution(archive.histogram(word), archive.k, domain_hi,
                           all_distances)


class DistributionMatrix(object):

    """
    Dense distributions of every word of an archive: ``F`` has one row per
    word code, ``S`` one total per word.
    """

    def __init__(self, k, domain_hi, F, S):
        self.k = k
        self.domain_lo = k + 1
        self.domain_hi = domain_hi
        self.F = F
        self.S = S

    def distribution(self, word):
        w = as_word(word, self.k) if not isinstance(word, (int, np.integer)) \
            else WordCode(self.k, int(word))
        return DistanceDistribution(w, self.domain_lo, self.domain_hi,
                                    self.F[w.code], int(self.S[w.code]))


def distribution_matrix(archive, domain_hi=DOMAIN_HI, all_distances=False,
                        scope='aggregate'):
    """
    Builds the distributions of all 4^k words of an archive at once.
    """
    _check_archive_domain(archive, domain_hi)
    matrix =archive.matrix(scope)
    counts = matrix[:, archive.k + 1:domain_hi + 1].toarray().astype(
        np.float64)
    F, total = _normalize(counts)
    if all_distances:
        S = archive.total_counts(scope)
    else:
        S = total.astype(np.int64)
    moduleLogger.debug('built %d distributions on [%d, %d]',
                       F.shape[0], archive.k + 1, domain_hi)
    return DistributionMatrix(archive.k, domain_hi, F, S)


def quantile(values, p):
    """
    Quantile by linear interpolation between order statistics: with
    sorted x_1..x_N and h = (N-1)p + 1 the result is
    x_floor(h) + (h - floor(h)) (x_floor(h)+1 - x_floor(h)).

    >>> quantile(range(1, 11), 0.1)
    1.9
    """
    values = np.asarray(list(values) if not hasattr(values, 'shape')
                        else values, dtype=np.float64)
    if not values.size:
        raise EmptyInputException(source='values',
                                  details=messages.EMPTY_QUANTILE)
    if not 0.0 <= p <= 1.0:
        raise InvalidArgumentException(
            source='p', details='must be in [0, 1], got %r' % p)
    return float(np.quantile(values, p))


PairFilterResult = namedtuple('PairFilterResult',
                              ['threshold', 'retained', 'excluded'])


def _total(S_map, word):
    return S_map[word.code] if not isinstance(S_map, dict) \
        else S_map.get(word.code, S_map.get(word, 0))


def filter_pairs(pairs, S_map, p=QUARTILE):
    """
    Excludes every pair whose smaller total is at or below the p-quantile
    (first quartile by default) of S over all words. ``S_map`` is indexed
    by word code (array) or maps codes to totals.
    """
    values = S_map.values() if isinstance(S_map, dict) else S_map
    threshold = quantile(values, p)
    retained = []
    excluded = []
    for pair in pairs:
        low = min(_total(S_map, pair.w), _total(S_map, pair.w_bar))
        if low > threshold:
            retained.append(pair)
        else:
            excluded.append(pair)
    moduleLogger.info('pair filter: threshold %g, %d retained, %d excluded',
                      threshold, len(retained), len(excluded))
    return PairFilterResult(threshold, retained, excluded)


def write_distribution(dist, stream, header=(), as_json=False):
    """
    Writes the plot-ready ``distance<TAB>frequency`` dump of one
    distribution.
    """
    rows = [(int(d), float(f)) for d, f in zip(dist.distances, dist.f)]
    write_output(stream, ('distance', 'frequency'), rows, header,
                 [('word', str(dist.w)), ('S', int(dist.S))], as_json)
