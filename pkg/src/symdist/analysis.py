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
The symmetric-pair pipeline: distributions for every word, the
first-quartile pair filter, dissimilarity of every retained pair,
summary statistics, percentile selection of extreme pairs and
localization of favoured distances per chromosome.
"""
import logging
import math
from collections import OrderedDict, namedtuple

import numpy as np
from scipy import sparse

from symdist import messages
from symdist.dissim import EXCLUDED, MAX_PERMUTATION_PEAKS, OK, \
    PEAKLESS, DissimilarityParams, PairRecord, compare_pair
from symdist.distances import D_MAX, CountArchive, positions_at_distances
from symdist.distributions import QUARTILE, archive_distribution, \
    distribution_matrix, filter_pairs, quantile
from symdist.exceptions import EmptyInputException, \
    InvalidArgumentException, PeaklessDistributionException
from symdist.peaks import H, N, find_peaks
from symdist.seq_io import iter_fasta
from symdist.util import NA, write_output
from symdist.words import as_word, enumerate_pairs

moduleLogger = logging.getLogger('symdist.analysis')

K = 7
LOW_PERCENTILE = 0.10
HIGH_PERCENTILE = 0.90
TOP_PAIRS = 15

__all__ = ['K', 'D_MAX', 'H', 'N', 'QUARTILE', 'LOW_PERCENTILE',
           'HIGH_PERCENTILE', 'TOP_PAIRS', 'MAX_PERMUTATION_PEAKS',
           'FiveNumber', 'five_number', 'SummaryStats', 'SelectionReport',
           'PipelineResult', 'ChromosomePronouncement',
           'LocalizationReport', 'record_key', 'run_pipeline',
           'most_dissimilar', 'localize', 'localize_top', 'inject_spike',
           'summary_rows', 'write_pairs', 'write_summary',
           'write_selection', 'write_localization', 'write_top',
           'export_bed']


class FiveNumber(namedtuple('FiveNumber',
                            ['min', 'q1', 'median', 'q3', 'max'])):

    """
    Minimum, quartiles and maximum of a sample.
    """

    __slots__ = ()


def five_number(values):
    """
    >>> five_number([1, 2, 3, 4, 5])
    FiveNumber(min=1.0, q1=2.0, median=3.0, q3=4.0, max=5.0)
    """
    values = np.asarray(list(values), dtype=np.float64)
    return FiveNumber(*[quantile(values, p)
                        for p in (0.0, 0.25, 0.5, 0.75, 1.0)])


def _five_or_none(values):
    values = list(values)
    return five_number(values) if values else None


SummaryStats = namedtuple('SummaryStats', [
    'S_words', 'ratio_all', 'ratio_retained', 'd_retained', 'threshold',
    'retained', 'excluded', 'peakless'])

SelectionReport = namedtuple('SelectionReport', [
    'low_cut', 'high_cut', 'low_pairs', 'high_pairs'])

PipelineResult = namedtuple('PipelineResult',
                            ['summary', 'selection', 'records'])

ChromosomePronouncement = namedtuple('ChromosomePronouncement', [
    'chromosome_id', 'favoured', 'total', 'ratio'])

LocalizationReport = namedtuple('LocalizationReport', [
    'word', 'favoured_distances', 'chromosomes', 'top_chromosome',
    'intervals'])


def _ratio(S_w, S_wbar):
    if not S_w or not S_wbar:
        return None
    return max(S_w / float(S_wbar), S_wbar / float(S_w))


def record_key(record):
    """
    Report order: defined d ascending, undefined last, then by word.
    """
    undefined = record.d is None or math.isnan(record.d)
    return (undefined, 0.0 if undefined else record.d, record.pair.w.code)


def _params_for(archive, params):
    params = params or DissimilarityParams()
    if params.k is None:
        return params.with_k(archive.k)
    if params.k != archive.k:
        raise InvalidArgumentException(
            source='k', details='parameters for k=%d, archive has k=%d'
                                % (params.k, archive.k))
    return params


def run_pipeline(archive, params=None, quartile=QUARTILE,
                 low=LOW_PERCENTILE, high=HIGH_PERCENTILE,
                 all_distances=False):
    """
    Runs the whole comparison over an archive and returns a
    :class:`PipelineResult` (summary, selection, records); records are
    sorted by :func:`record_key`.
    """
    params = _params_for(archive, params)
    matrix = distribution_matrix(archive, params.domain_hi, all_distances)
    moduleLogger.info('distributions on [%d, %d] for %d words',
                      matrix.domain_lo, matrix.domain_hi, matrix.S.size)
    pairs = enumerate_pairs(archive.k)
    filtered = filter_pairs(pairs, matrix.S, quartile)

    records = []
    for pair in filtered.excluded:
        records.append(PairRecord(
            pair, int(matrix.S[pair.w.code]), int(matrix.S[pair.w_bar.code]),
            float('nan'), None, EXCLUDED, None, None))
    for pair in filtered.retained:
        records.append(compare_pair(pair, matrix.distribution(pair.w.code),
                                    matrix.distribution(pair.w_bar.code),
                                    params))
    records.sort(key=record_key)
    moduleLogger.info('compared %d retained pairs', len(filtered.retained))

    D = [r.d for r in records if r.status == OK]
    if not D:
        raise EmptyInputException(
            source='pairs', details='no pair has a defined dissimilarity')
    low_cut = quantile(D, low)
    high_cut = quantile(D, high)
    defined = [r for r in records if r.status == OK]
    selection = SelectionReport(
        low_cut, high_cut,
        [r for r in defined if r.d <= low_cut],
        [r for r in defined if r.d >= high_cut])

    retained_codes = set(p.w.code for p in filtered.retained)
    ratios_all = []
    ratios_retained = []
    for pair in pairs:
        if pair.palindromic:
            continue
        ratio = _ratio(int(matrix.S[pair.w.code]),
                       int(matrix.S[pair.w_bar.code]))
        if ratio is None:
            continue
        ratios_all.append(ratio)
        if pair.w.code in retained_codes:
            ratios_retained.append(ratio)
    summary = SummaryStats(
        five_number(matrix.S), _five_or_none(ratios_all),
        _five_or_none(ratios_retained), five_number(D), filtered.threshold,
        len(filtered.retained), len(filtered.excluded),
        sum(1 for r in records if r.status == PEAKLESS))
    moduleLogger.info('|D| = %d, cuts %g / %g', len(D), low_cut, high_cut)
    return PipelineResult(summary, selection, records)


def most_dissimilar(records, count=TOP_PAIRS):
    """
    The ``count`` pairs with the largest defined d, largest first.
    """
    defined = [r for r in records if r.status == OK]
    defined.sort(key=lambda r: (-r.d, r.pair.w.code))
    return defined[:count]


def _fasta_paths(archive, fasta_paths):
    if fasta_paths:
        return list(fasta_paths)
    paths = [p.path for p in archive.provenance]
    if not paths:
        raise InvalidArgumentException(
            source='fasta', details='no sequence file given and none '
                                    'recorded in the archive')
    return paths


def localize(archive, word, params=None, fasta_paths=None,
             strict_case=False, intervals=True):
    """
    Finds the chromosome where the favoured distances of a word are most
    pronounced.

    The favoured distances are the locations of the selected peaks with
    positive size. Per chromosome, the ratio is the count of distances
    falling in those peaks' windows over the count of all distances of the
    word in the domain; the top chromosome has the highest ratio (smallest
    id on ties). With ``intervals`` set, the FASTA input is rescanned for
    the occurrences of the word on the top chromosome at each distance of
    the favoured windows.
    """
    params = _params_for(archive, params)
    w = as_word(word, archive.k)
    lo, hi = params.domain
    dist = archive_distribution(archive, w, hi)
    peak_set = find_peaks(dist, params.h, params.n)
    favoured = [p for p in peak_set.peaks if p.size > 0]
    if peak_set.peakless or not favoured:
        raise PeaklessDistributionException(source=str(w),
                                            details=messages.PEAKLESS)
    columns = sorted(set(d for p in favoured
                         for d in range(p.window[0], p.window[1] + 1)))

    table = []
    for chromosome_id, counts in archive.chromosomes.items():
        row = counts[w.code]
        total = int(row[:, lo:hi + 1].sum())
        hits = int(row[:, columns].sum())
        table.append(ChromosomePronouncement(
            chromosome_id, hits, total,
            hits / float(total) if total else 0.0))
    ranked = sorted(table, key=lambda c: (-c.ratio, c.chromosome_id))
    top = ranked[0].chromosome_id if ranked else None

    found = None
    if intervals and top is not None:
        segments = (s for s in iter_fasta(_fasta_paths(archive, fasta_paths),
                                          strict_case)
                    if s.chromosome_id == top)
        per_distance = positions_at_distances(segments, w, columns)
        found = sorted(i for hits in per_distance.values() for i in hits)
    moduleLogger.info('%s: favoured %s, top chromosome %s', w,
                      [p.location for p in favoured], top)
    return LocalizationReport(w, [p.location for p in favoured], table, top,
                              found)


def localize_top(archive, records, params=None, fasta_paths=None,
                 count=TOP_PAIRS, strict_case=False, intervals=False):
    """
    Localizes the member with the strongest peaks of each of the ``count``
    most dissimilar pairs and groups the reports by top chromosome.
    Returns an OrderedDict chromosome id -> list of (record, report).
    """
    grouped = OrderedDict()
    for record in most_dissimilar(records, count):
        report = localize(archive, record.strongest, params, fasta_paths,
                          strict_case, intervals)
        grouped.setdefault(report.top_chromosome, []).append(
            (record, report))
    return OrderedDict(sorted(grouped.items(), key=lambda kv: kv[0]))


def inject_spike(archive, word, distance, mass, h=H, chromosome=None):
    """
    Returns a copy of an archive where ``mass`` of the word's domain
    distribution sits in the h-wide window centred on ``distance``.

    The added counts follow a triangular profile over the window and are
    added to one chromosome (the first by default). The domain is
    [k+1, d_max].
    """
    w = as_word(word, archive.k)
    if not 0.0 < mass < 1.0:
        raise InvalidArgumentException(
            source='mass', details='must be in (0, 1), got %r' % mass)
    start = distance - h // 2
    end = start + h - 1
    if start < archive.k + 1 or end > archive.d_max:
        raise InvalidArgumentException(
            source='distance', details='window [%d, %d] leaves [%d, %d]'
                                       % (start, end, archive.k + 1,
                                          archive.d_max))
    chromosome = chromosome or (archive.chromosome_ids[0]
                                if archive.chromosomes else None)
    if chromosome not in archive.chromosomes:
        raise InvalidArgumentException(
            source=str(chromosome), details='no such chromosome in archive')
    base = archive.aggregate[w.code]
    S0 = int(base[:, archive.k + 1:].sum())
    if not S0:
        raise InvalidArgumentException(
            source=str(w), details='word has no distances to perturb')
    weights = np.array([min(i + 1, h - i) for i in range(h)],
                       dtype=np.float64)
    added = np.rint(mass * S0 / (1.0 - mass) * weights / weights.sum())
    spike = sparse.csr_matrix(
        (added.astype(np.int64),
         (np.full(h, w.code, dtype=np.int64), np.arange(start, end + 1))),
        shape=(archive.word_count, archive.d_max + 1))
    chromosomes = OrderedDict(archive.chromosomes)
    chromosomes[chromosome] = chromosomes[chromosome] + spike
    moduleLogger.info('injected %d distances for %s around %d on %s',
                      int(added.sum()), w, distance, chromosome)
    return CountArchive(archive.k, archive.d_max, chromosomes,
                        archive.provenance)


def _d(value):
    return NA if value is None or math.isnan(value) else value


def _pair_rows(records):
    return [(str(r.pair.w), str(r.pair.w_bar), r.S_w, r.S_wbar, _d(r.d),
             r.status) for r in records]


PAIR_COLUMNS = ('w', 'wbar', 'S_w', 'S_wbar', 'd', 'status')
SUMMARY_COLUMNS = ('statistic', 'min', 'q1', 'median', 'q3', 'max')
SELECTION_COLUMNS = ('side',) + PAIR_COLUMNS
LOCALIZATION_COLUMNS = ('chromosome', 'favoured', 'total', 'ratio')
TOP_COLUMNS = ('chromosome', 'word', 'w', 'wbar', 'd', 'favoured',
               'ratio')


def summary_rows(summary):
    """
    Rows of the summary table: one five-number line per statistic.
    """
    rows = []
    for name, five in (('S', summary.S_words),
                       ('ratio_all', summary.ratio_all),
                       ('ratio_retained', summary.ratio_retained),
                       ('d', summary.d_retained)):
        rows.append((name,) + (tuple(five) if five else (NA,) * 5))
    return rows


def _summary_meta(summary):
    return [('threshold', summary.threshold),
            ('retained', summary.retained),
            ('excluded', summary.excluded),
            ('peakless', summary.peakless)]


def _selection_rows(selection):
    return [('low',) + row for row in _pair_rows(selection.low_pairs)] + \
        [('high',) + row for row in _pair_rows(selection.high_pairs)]


def _selection_meta(selection):
    return [('low_cut', selection.low_cut), ('high_cut', selection.high_cut)]


def _localization_meta(report):
    return [('word', str(report.word)),
            ('favoured', ','.join(str(d) for d in
                                  report.favoured_distances)),
            ('top_chromosome', report.top_chromosome or NA)]


def _top_rows(grouped):
    rows = []
    for chromosome_id, entries in grouped.items():
        for record, report in entries:
            ratio = [c.ratio for c in report.chromosomes
                     if c.chromosome_id == chromosome_id]
            rows.append((chromosome_id, str(report.word),
                         str(record.pair.w), str(record.pair.w_bar),
                         record.d, ','.join(str(d) for d in
                                            report.favoured_distances),
                         ratio[0] if ratio else NA))
    return rows


def write_pairs(records, stream, header=(), as_json=False):
    """
    One line per pair: ``w, wbar, S_w, S_wbar, d, status``.
    """
    write_output(stream, PAIR_COLUMNS, _pair_rows(records), header,
                 as_json=as_json)


def write_summary(summary, stream, header=(), as_json=False):
    write_output(stream, SUMMARY_COLUMNS, summary_rows(summary), header,
                 _summary_meta(summary), as_json)


def write_selection(selection, stream, header=(), as_json=False):
    write_output(stream, SELECTION_COLUMNS, _selection_rows(selection),
                 header, _selection_meta(selection), as_json)


def write_localization(report, stream, header=(), as_json=False):
    rows = [tuple(c) for c in report.chromosomes]
    write_output(stream, LOCALIZATION_COLUMNS, rows, header,
                 _localization_meta(report), as_json)


def write_top(grouped, stream, header=(), as_json=False):
    write_output(stream, TOP_COLUMNS, _top_rows(grouped), header,
                 as_json=as_json)


def export_bed(intervals, path):
    """
    Writes 0-based half-open ``chrom<TAB>start<TAB>end`` lines.
    """
    with open(path, 'w') as f:
        for interval in intervals or ():
            f.write('%s\t%d\t%d\n' % (interval.chromosome_id,
                                      interval.start, interval.end))
