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
Peak detection on distance distributions.

A window is h consecutive distances; its size is the mean absolute
difference of the h-1 successive frequency pairs inside it. Windows are
taken at every start (stride 1) and the n strongest pairwise-disjoint
ones are chosen greedily, ties going to the smaller start.
"""
import logging
from collections import namedtuple

import numpy as np

from symdist import messages
from symdist.exceptions import DomainTooShortException, \
    InvalidArgumentException
from symdist.util import write_output

moduleLogger = logging.getLogger('symdist.peaks')

H = 5
N = 3


class Peak(namedtuple('Peak', ['location', 'size', 'window'])):

    """
    A selected window: ``window`` is the inclusive (first, last) distance
    pair and ``location`` its midpoint (half-integer for even h).
    """

    __slots__ = ()


class PeakSet(namedtuple('PeakSet', ['w', 'peaks', 'v', 'R'])):

    """
    The n strongest peaks of one distribution in descending size order,
    the strongest size ``v`` and the domain range ``R``.
    """

    __slots__ = ()

    @property
    def peakless(self):
        return self.v <= 0


def _check(h):
    if h < 2:
        raise InvalidArgumentException(
            source='h', details='window width must be >= 2, got %r' % h)


def window_sizes(f, h):
    """
    Sizes of every width-h window of a frequency vector, by start index.
    The h-1 differences are summed left to right.
    """
    _check(h)
    f = np.asarray(f, dtype=np.float64)
    count = f.size - h + 1
    if count <= 0:
        return np.zeros(0, dtype=np.float64)
    diffs = np.abs(np.diff(f))
    total = diffs[:count].copy()
    for j in range(1, h - 1):
        total += diffs[j:j + count]
    return total / (h - 1)


def _midpoint(start, h):
    mid = start + (h - 1) / 2.0
    return int(mid) if mid == int(mid) else mid


def window_size(f, start, h):
    """
    Size of the window [start, start+h-1] of a
    :class:`symdist.distributions.DistanceDistribution`.

    >>> window_size(dist, 8, 5)
    0.0245
    """
    _check(h)
    index = start - f.domain_lo
    if index < 0 or start + h - 1 > f.domain_hi:
        raise InvalidArgumentException(
            source='start', details='window [%d, %d] leaves the domain '
                                    '[%d, %d]' % (start, start + h - 1,
                                                  f.domain_lo, f.domain_hi))
    return float(window_sizes(f.f[index:index + h], h)[0])


def find_peaks(f, h=H, n=N):
    """
    Returns the :class:`PeakSet` of the n strongest disjoint windows of a
    distribution.
    """
    _check(h)
    if n < 1:
        raise InvalidArgumentException(
            source='n', details='peak count must be >= 1, got %r' % n)
    length = f.f.size
    if length < n * h:
        raise DomainTooShortException(
            source=str(f.w),
            details=messages.DOMAIN_TOO_SHORT % (length, n, h))
    sizes = window_sizes(f.f, h)
    order = np.lexsort((np.arange(sizes.size), -sizes))
    blocked = np.zeros(sizes.size, dtype=bool)
    chosen = []
    for index in order:
        if blocked[index]:
            continue
        chosen.append(index)
        if len(chosen) == n:
            break
        blocked[max(0, index - h + 1):index + h] = True
    if len(chosen) < n:
        raise DomainTooShortException(
            source=str(f.w),
            details=messages.DOMAIN_TOO_SHORT % (length, n, h))
    peaks = []
    for index in chosen:
        start = f.domain_lo + int(index)
        peaks.append(Peak(_midpoint(start, h), float(sizes[index]),
                          (start, start + h - 1)))
    return PeakSet(f.w, tuple(peaks), peaks[0].size, f.R)


def write_peaks(peak_set, stream, header=(), as_json=False):
    """
    Writes ``rank<TAB>location<TAB>size``.
    """
    rows = [(rank, peak.location, peak.size)
            for rank, peak in enumerate(peak_set.peaks, 1)]
    meta = [('word', str(peak_set.w)), ('v', peak_set.v), ('R', peak_set.R)]
    write_output(stream, ('rank', 'location', 'size'), rows, header, meta,
                 as_json)
