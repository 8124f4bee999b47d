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
Strand-symmetric Markov null model.

A model of order m stores the counts of every (m+1)-mer, and of every
shorter word for back-off. Symmetrizing adds to each word's count the
count of its reversed complement, so u and rc(u) always carry the same
number.

Generation uses numpy's PCG64 bit generator seeded with an integer.
"""
import logging
from bisect import bisect_right

import numpy as np

from symdist import messages
from symdist.exceptions import EmptyInputException, InvalidArgumentException
from symdist.seq_io import SequenceSegment
from symdist.words import from_digits, reverse_complement_table, \
    rolling_codes, to_digits

moduleLogger = logging.getLogger('symdist.nullmodel')

GENERATOR = 'PCG64'


def _check_order(m):
    if m < 0:
        raise InvalidArgumentException(
            source='order', details='must be >= 0, got %r' % m)


class MarkovModel(object):

    """
    Transition counts of an order-m Markov chain over ACGT.

    ``tables[j]`` is a (4^j, 4) int64 array: row = context of length j,
    column = next base. ``counts`` is the order-m table.
    """

    def __init__(self, order, tables, symmetrized=False):
        _check_order(order)
        if len(tables) != order + 1:
            raise InvalidArgumentException(
                source='tables', details='expected %d tables, got %d'
                                         % (order + 1, len(tables)))
        self.order = order
        self.tables = [np.asarray(t, dtype=np.int64).reshape(4 ** j, 4)
                       for j, t in enumerate(tables)]
        self.symmetrized = symmetrized
        self.logger = logging.getLogger('symdist.nullmodel.MarkovModel')

    def __str__(self):
        """To string"""
        return 'Markov model of order %d%s' % (
            self.order, ' (strand-symmetric)' if self.symmetrized else '')

    @property
    def counts(self):
        return self.tables[self.order]

    @property
    def total(self):
        return int(self.counts.sum())

    def count(self, word):
        """
        Stored count of an (m+1)-mer, or of a shorter word.

        >>> model.count('AAA') == model.count('TTT')
        True
        """
        digits = to_digits(word)
        j = digits.size - 1
        if not 0 <= j <= self.order or (digits == 255).any():
            raise InvalidArgumentException(
                source='word', details='%r is not an ACGT word of length '
                                       '1..%d' % (word, self.order + 1))
        code = int(rolling_codes(digits, digits.size)[0])
        return int(self.tables[j].reshape(-1)[code])

    def probabilities(self, order=None):
        """
        Normalized transition rows; all-zero rows stay zero.
        """
        table = self.tables[self.order if order is None else order]
        totals = table.sum(axis=1, keepdims=True)
        out = np.zeros(table.shape, dtype=np.float64)
        np.divide(table, totals, out=out, where=totals > 0)
        return out

    def transition_rows(self):
        """
        Order-m rows with back-off applied: a context without counts uses
        the row of its suffix one base shorter, down to order 0.
        """
        rows = self.probabilities(0)
        for j in range(1, self.order + 1):
            probs = self.probabilities(j)
            empty = self.tables[j].sum(axis=1) == 0
            suffix = np.arange(4 ** j) & (4 ** (j - 1) - 1)
            probs[empty] = rows[suffix[empty]]
            rows = probs
        return rows


def train(segments, m, symmetrize=True):
    """
    Counts every word of length 1..m+1 inside the segments (never across
    a segment boundary) and returns a :class:`MarkovModel`.
    """
    _check_order(m)
    flat = [np.zeros(4 ** (j + 1), dtype=np.int64) for j in range(m + 1)]
    bases = 0
    for segment in segments:
        digits = to_digits(segment.bases)
        if (digits == 255).any():
            raise InvalidArgumentException(
                source=segment.chromosome_id,
                details='segment holds non-ACGT symbols')
        bases += digits.size
        for j in range(m + 1):
            codes = rolling_codes(digits, j + 1)
            if codes.size:
                flat[j] += np.bincount(codes, minlength=4 ** (j + 1))
    if symmetrize:
        flat = [t + t[reverse_complement_table(j + 1)]
                for j, t in enumerate(flat)]
    model = MarkovModel(m, flat, symmetrized=symmetrize)
    moduleLogger.info('trained %s on %d bases', model, bases)
    return model


def _cdf_rows(rows):
    cdf = np.cumsum(rows, axis=1)
    # the last base with mass ends at 1.0
    for row, probs in zip(cdf, rows):
        positive = np.nonzero(probs > 0)[0]
        if positive.size:
            row[positive[-1]:] = 1.0
    return cdf.tolist()


def generate(model, length, seed, chromosome_id='sim'):
    """
    Samples a sequence of ``length`` bases and returns it as one
    :class:`symdist.seq_io.SequenceSegment`. The first m bases are a
    context drawn by total count; later bases follow the transition rows.
    Identical (model, length, seed) give identical sequences.
    """
    m = model.order
    if length <= m:
        raise InvalidArgumentException(
            source='length', details='must exceed the order %d, got %r'
                                     % (m, length))
    if not model.total:
        raise EmptyInputException(source=str(model),
                                  details=messages.EMPTY_MODEL)
    rng = np.random.Generator(np.random.PCG64(seed))
    out = np.zeros(length, dtype=np.uint8)
    context = 0
    if m:
        weights = model.counts.sum(axis=1).astype(np.float64)
        starts = np.cumsum(weights / weights.sum())
        starts[-1] = 1.0
        context = int(np.searchsorted(starts, rng.random(), side='right'))
        for i in range(m):
            out[m - 1 - i] = (context >> (2 * i)) & 3
    cdf = _cdf_rows(model.transition_rows())
    mask = 4 ** m - 1
    draws = rng.random(length - m).tolist()
    for i, u in enumerate(draws, m):
        base = bisect_right(cdf[context], u)
        out[i] = base
        context = ((context << 2) | base) & mask
    moduleLogger.info('generated %d bases (%s, seed %s)', length,
                      GENERATOR, seed)
    return SequenceSegment(chromosome_id, 0, 0, from_digits(out))


def random_sequence(length, seed, chromosome_id='random'):
    """
    Uniform i.i.d. ACGT sequence as one segment.
    """
    if length < 0:
        raise InvalidArgumentException(
            source='length', details='must be >= 0, got %r' % length)
    rng = np.random.Generator(np.random.PCG64(seed))
    digits = rng.integers(0, 4, size=length, dtype=np.uint8)
    return SequenceSegment(chromosome_id, 0, 0, from_digits(digits))


def kmer_frequencies(bases, m):
    """
    Empirical relative frequencies of the (m+1)-mers of a sequence, by
    code.
    """
    _check_order(m)
    codes = rolling_codes(to_digits(bases), m + 1)
    counts = np.bincount(codes, minlength=4 ** (m + 1)).astype(np.float64)
    if codes.size:
        counts /= codes.size
    return counts
