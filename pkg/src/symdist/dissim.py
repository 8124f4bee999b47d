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
Dissimilarity between peaks and between distance distributions.

For two peaks with locations l1, l2 and sizes v1, v2 on a domain of range
R, normalized by a strongest-peak size V::

    (|l1 - l2| / R + 1) * (|v1 - v2| / V + 1) - 1

V is the strongest-peak size of the single distribution for
:func:`d1` and the smaller of the two strongest-peak sizes for
:func:`d2`. The distribution dissimilarity :func:`d` is the minimum over
all peak matchings of the summed :func:`d2` terms.
"""
import itertools
import logging
from collections import namedtuple

import numpy as np

from symdist import messages
from symdist.exceptions import InvalidArgumentException, \
    ParameterBoundException, PeaklessDistributionException
from symdist.peaks import H, N, find_peaks

moduleLogger = logging.getLogger('symdist.dissim')

#: exhaustive matching is enumerated up to this many peaks (8! = 40320)
MAX_PERMUTATION_PEAKS = 8

OK = 'ok'
EXCLUDED = 'excluded'
PEAKLESS = 'peakless'
PALINDROMIC = 'palindromic'


class DissimilarityParams(object):

    """
    Peak detection and comparison settings. ``k`` fixes the domain
    [k+1, domain_hi]; it may be left out until an archive supplies it.

    >>> params = DissimilarityParams(k=7)
    >>> params.domain, params.R
    ((8, 1000), 992)
    """

    def __init__(self, h=H, n=N, domain_hi=1000, k=None):
        if h < 2:
            raise InvalidArgumentException(
                source='h', details='window width must be >= 2, got %r' % h)
        if n < 1:
            raise InvalidArgumentException(
                source='n', details='peak count must be >= 1, got %r' % n)
        if n > MAX_PERMUTATION_PEAKS:
            raise ParameterBoundException(
                source='n', details=messages.TOO_MANY_PEAKS
                % MAX_PERMUTATION_PEAKS)
        if k is not None and domain_hi <= k + 1:
            raise InvalidArgumentException(
                source='domain_hi', details='domain [%d, %d] has no range'
                                            % (k + 1, domain_hi))
        self.h = h
        self.n = n
        self.domain_hi = domain_hi
        self.k = k

    def __repr__(self):
        return 'DissimilarityParams(h=%r, n=%r, domain_hi=%r, k=%r)' % (
            self.h, self.n, self.domain_hi, self.k)

    def with_k(self, k):
        return DissimilarityParams(self.h, self.n, self.domain_hi, k)

    @property
    def domain(self):
        if self.k is None:
            raise InvalidArgumentException(
                source='k', details='word length not set')
        return self.k + 1, self.domain_hi

    @property
    def R(self):
        lo, hi = self.domain
        return hi - lo


class PairRecord(namedtuple('PairRecord', [
        'pair', 'S_w', 'S_wbar', 'd', 'matching', 'status', 'v_w',
        'v_wbar'])):

    """
    Outcome of comparing the two members of a symmetric pair. ``d`` is NaN
    unless status is ``ok`` or ``palindromic``; ``matching[i]`` is the
    index of the w-bar peak matched with peak i of w.
    """

    __slots__ = ()

    @property
    def defined(self):
        return self.status == OK

    @property
    def strongest(self):
        """The member whose strongest peak is larger (w on ties)."""
        if self.v_wbar is not None and self.v_w is not None and \
                self.v_wbar > self.v_w:
            return self.pair.w_bar
        return self.pair.w


def _peak_cost(l1, l2, s1, s2, R, v):
    return (abs(l1 - l2) / float(R) + 1.0) * (abs(s1 - s2) / v + 1.0) - 1.0


def d1(p1, p2, R, v):
    """
    Dissimilarity of two peaks of one distribution whose strongest peak
    has size v; lies in [0, 3].

    >>> d1(Peak(100, 0.05, (98, 102)), Peak(150, 0.03, (148, 152)),
    ...    992, 0.05)
    0.47056451612903...
    """
    if v <= 0:
        raise PeaklessDistributionException(details=messages.PEAKLESS)
    return _peak_cost(p1.location, p2.location, p1.size, p2.size, R, v)


def d2(pi, pj, R, v, v_bar):
    """
    Dissimilarity of a peak of f^w and a peak of f^w-bar; symmetric in its
    two peaks.
    """
    low = min(v, v_bar)
    if low <= 0:
        raise PeaklessDistributionException(details=messages.PEAKLESS)
    return _peak_cost(pi.location, pj.location, pi.size, pj.size, R, low)


_PERMUTATIONS = {}


def permutations(n):
    """
    All n! permutations of range(n) as an (n!, n) array, lexicographic.
    """
    if n not in _PERMUTATIONS:
        if n > MAX_PERMUTATION_PEAKS:
            raise ParameterBoundException(
                source='n', details=messages.TOO_MANY_PEAKS
                % MAX_PERMUTATION_PEAKS)
        _PERMUTATIONS[n] = np.array(list(itertools.permutations(range(n))),
                                    dtype=np.intp).reshape(-1, n)
    return _PERMUTATIONS[n]


def cost_matrix(ps_w, ps_wbar):
    """
    Returns C with C[i, j] = d2(peak i of w, peak j of w-bar).
    """
    if len(ps_w.peaks) != len(ps_wbar.peaks):
        raise InvalidArgumentException(
            source='n', details='peak sets of %d and %d peaks'
                                % (len(ps_w.peaks), len(ps_wbar.peaks)))
    if ps_w.R != ps_wbar.R:
        raise InvalidArgumentException(
            source='R', details='domains differ: %r != %r'
                                % (ps_w.R, ps_wbar.R))
    low = min(ps_w.v, ps_wbar.v)
    if low <= 0:
        raise PeaklessDistributionException(
            source='%s/%s' % (ps_w.w, ps_wbar.w), details=messages.PEAKLESS)
    loc = np.array([p.location for p in ps_w.peaks], dtype=np.float64)
    loc_bar = np.array([p.location for p in ps_wbar.peaks], dtype=np.float64)
    size = np.array([p.size for p in ps_w.peaks], dtype=np.float64)
    size_bar = np.array([p.size for p in ps_wbar.peaks], dtype=np.float64)
    R = float(ps_w.R)
    return (np.abs(loc[:, None] - loc_bar[None, :]) / R + 1.0) * \
        (np.abs(size[:, None] - size_bar[None, :]) / low + 1.0) - 1.0


def d(ps_w, ps_wbar):
    """
    Minimum over all peak matchings of the summed :func:`d2` terms.
    Returns (value, matching); the first minimal permutation in
    lexicographic order is reported.
    """
    costs = cost_matrix(ps_w, ps_wbar)
    n = costs.shape[0]
    perms = permutations(n)
    totals = costs[np.arange(n), perms].sum(axis=1)
    best = int(np.argmin(totals))
    return float(totals[best]), tuple(int(j) for j in perms[best])


def greedy_dissimilarity(ps_w, ps_wbar):
    """
    Matches peaks largest-first (rank i with rank i); an upper bound
    on :func:`d`.
    """
    costs = cost_matrix(ps_w, ps_wbar)
    return float(np.trace(costs))


def compare_pair(pair, dist_w, dist_wbar, params):
    """
    Detects the peaks of both members of a symmetric pair and returns the
    :class:`PairRecord`. A palindromic word is its own partner and gets
    d = 0; a member without peak leaves d undefined.
    """
    ps_w = find_peaks(dist_w, params.h, params.n)
    if pair.palindromic:
        return PairRecord(pair, dist_w.S, dist_w.S, 0.0,
                          tuple(range(len(ps_w.peaks))), PALINDROMIC,
                          ps_w.v, ps_w.v)
    ps_wbar = find_peaks(dist_wbar, params.h, params.n)
    if ps_w.peakless or ps_wbar.peakless:
        moduleLogger.warning('%s: %s', pair, messages.PEAKLESS)
        return PairRecord(pair, dist_w.S, dist_wbar.S, float('nan'), None,
                          PEAKLESS, ps_w.v, ps_wbar.v)
    value, matching = d(ps_w, ps_wbar)
    return PairRecord(pair, dist_w.S, dist_wbar.S, value, matching, OK,
                      ps_w.v, ps_wbar.v)
