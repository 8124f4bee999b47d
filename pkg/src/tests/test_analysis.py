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
import io
import math

import pytest

from symdist.analysis import FiveNumber, export_bed, five_number, \
    inject_spike, localize, localize_top, most_dissimilar, run_pipeline, \
    write_pairs, write_selection, write_summary
from symdist.dissim import DissimilarityParams, PairRecord, d
from symdist.distances import Interval, count_distances, merge_archives
from symdist.distributions import to_distribution
from symdist.exceptions import InvalidArgumentException, \
    PeaklessDistributionException
from symdist.peaks import find_peaks
from symdist.seq_io import open_fasta
from symdist.words import SymmetricPair, WordCode
from .conftest import writeFasta
from .tools import naivePipeline

TOY_PARAMS = DissimilarityParams(h=5, n=3, domain_hi=60)


def _render(result):
    out = []
    for write, value in ((write_pairs, result.records),
                         (write_summary, result.summary),
                         (write_selection, result.selection)):
        stream = io.StringIO()
        write(value, stream, ['#symdist\ttest'])
        out.append(stream.getvalue())
    return out


class TestFiveNumber:

    """ Tests for the summary helpers """

    def testExample(self):
        assert FiveNumber(1, 2, 3, 4, 5) == five_number([1, 2, 3, 4, 5])

    def testBed(self, tmp_path):
        """BED lines are 0-based half-open chrom, start, end"""
        empty = str(tmp_path / 'empty.bed')
        export_bed([], empty)
        with open(empty) as f:
            assert '' == f.read()
        one = str(tmp_path / 'one.bed')
        export_bed([Interval('c1', 13, 20)], one)
        with open(one) as f:
            assert 'c1\t13\t20\n' == f.read()


@pytest.mark.usefixtures('toy_env')
class TestPipeline:

    """ Tests for :func:`run_pipeline` on a small random genome """

    def testMatchesOracle(self):
        """End-to-end d values equal the composed reference pipeline"""
        result = run_pipeline(self._toyArchive, TOY_PARAMS)
        expected = naivePipeline(self._toyRecords, 2, 5, 3, 60)
        got = dict(((str(r.pair.w), str(r.pair.w_bar)), r.d)
                   for r in result.records if r.status == 'ok')
        assert sorted(expected) == sorted(got)
        for key, value in expected.items():
            assert math.isclose(value, got[key], rel_tol=1e-9), key

    def testStatuses(self):
        """Palindromes get d = 0 and stay out of D"""
        result = run_pipeline(self._toyArchive, TOY_PARAMS)
        statuses = dict((str(r.pair.w), r.status) for r in result.records)
        assert 10 == len(result.records)
        for word in ('AT', 'CG', 'GC', 'TA'):
            assert statuses[word] in ('palindromic', 'excluded')
        summary = result.summary
        assert summary.retained + summary.excluded == 10
        defined = [r for r in result.records if r.status == 'ok']
        assert pytest.approx(summary.d_retained.max) == \
            max(r.d for r in defined)

    def testSorted(self):
        """Defined d ascending, undefined last"""
        records = run_pipeline(self._toyArchive, TOY_PARAMS).records
        values = [r.d for r in records]
        defined = [v for v in values if not math.isnan(v)]
        assert defined == sorted(defined)
        assert values[:len(defined)] == defined

    def testDeterministic(self):
        """Identical inputs give identical reports"""
        first = _render(run_pipeline(self._toyArchive, TOY_PARAMS))
        second = _render(run_pipeline(self._toyArchive, TOY_PARAMS))
        assert first == second

    def testScaleInvariance(self):
        """Multiplying every count keeps d and the ranking"""
        base = run_pipeline(self._toyArchive, TOY_PARAMS)
        doubled = run_pipeline(
            merge_archives([self._toyArchive, self._toyArchive]),
            TOY_PARAMS)
        assert [(r.pair, r.status) for r in base.records] == \
            [(r.pair, r.status) for r in doubled.records]
        for a, b in zip(base.records, doubled.records):
            assert (math.isnan(a.d) and math.isnan(b.d)) or a.d == b.d

    def testSwapInvariance(self):
        """Swapping the roles of w and w-bar keeps d"""
        for record in run_pipeline(self._toyArchive, TOY_PARAMS).records:
            if record.status != 'ok':
                continue
            peaks = [find_peaks(to_distribution(
                self._toyArchive.histogram(w), 2, 60), 5, 3)
                for w in (record.pair.w, record.pair.w_bar)]
            assert math.isclose(record.d, d(peaks[1], peaks[0])[0],
                                rel_tol=1e-12)

    def testSelection(self):
        """Cuts are the 10th and 90th percentiles of D"""
        archive = count_distances(open_fasta(self._toyPath), 3, 200)
        result = run_pipeline(archive, DissimilarityParams(domain_hi=200))
        D = sorted(r.d for r in result.records if r.status == 'ok')
        selection = result.selection
        assert selection.low_cut <= selection.high_cut
        assert all(r.d <= selection.low_cut for r in selection.low_pairs)
        assert all(r.d >= selection.high_cut for r in selection.high_pairs)
        for side in (selection.low_pairs, selection.high_pairs):
            assert abs(len(side) - 0.1 * len(D)) <= 1 + 0.1
        for five in (result.summary.S_words, result.summary.d_retained,
                     result.summary.ratio_all):
            assert list(five) == sorted(five)
        assert result.summary.ratio_all.min >= 1.0

    def testMismatchedK(self):
        with pytest.raises(InvalidArgumentException):
            run_pipeline(self._toyArchive,
                         DissimilarityParams(k=3, domain_hi=60))

    def testMostDissimilar(self):
        records = run_pipeline(self._toyArchive, TOY_PARAMS).records
        top = most_dissimilar(records, 2)
        assert 2 >= len(top)
        assert [r.d for r in top] == sorted([r.d for r in top],
                                            reverse=True)

    def testInjectSpike(self):
        """The spike carries the requested share of the domain total"""
        archive = self._toyArchive
        before = to_distribution(archive.histogram('AC'), 2, 60)
        spiked = inject_spike(archive, 'AC', 30, 0.05, h=5)
        after = to_distribution(spiked.histogram('AC'), 2, 60)
        added = after.S - before.S
        assert abs(added - 0.05 / 0.95 * before.S) <= 3
        assert archive.histogram('GT') == spiked.histogram('GT')
        window = [after.frequency(x) - before.frequency(x) * before.S /
                  float(after.S) for x in range(28, 33)]
        assert pytest.approx(0.05, abs=0.01) == sum(window)
        with pytest.raises(InvalidArgumentException):
            inject_spike(archive, 'AC', 4, 0.05)
        with pytest.raises(InvalidArgumentException):
            inject_spike(archive, 'AC', 30, 1.0)


class TestLocalize:

    """ Tests for favoured-distance localization """

    def _archive(self, tmp_path):
        records = [('c1', ('ACG' + 'T' * 297) * 5),
                   ('c2', ('ACG' + 'T' * 47) * 40)]
        path = writeFasta(tmp_path / 'loc.fa', records)
        return count_distances(open_fasta(path), 3), path

    def testFixedGap(self, tmp_path):
        """A word repeating at gap 50 only on c2 localizes to c2"""
        archive, _ = self._archive(tmp_path)
        report = localize(archive, 'ACG', DissimilarityParams(n=1))
        favoured, = report.favoured_distances
        # windows holding both flanks of the spike tie; the first wins
        assert 49 == favoured
        assert 'c2' == report.top_chromosome
        ratios = dict((c.chromosome_id, c.ratio) for c in report.chromosomes)
        assert {'c1': 0.0, 'c2': 1.0} == ratios
        assert 39 == len(report.intervals)
        for interval in report.intervals:
            assert 'c2' == interval.chromosome_id
            assert 53 == interval.end - interval.start

    def testExplicitFasta(self, tmp_path):
        """Sequence files given explicitly replace the provenance"""
        archive, path = self._archive(tmp_path)
        report = localize(archive, 'ACG', DissimilarityParams(n=1),
                          fasta_paths=[path])
        assert 39 == len(report.intervals)
        report = localize(archive, 'ACG', DissimilarityParams(n=1),
                          intervals=False)
        assert report.intervals is None

    def testPeakless(self, tmp_path):
        """A word without distances has no favoured distance"""
        archive, _ = self._archive(tmp_path)
        with pytest.raises(PeaklessDistributionException):
            localize(archive, 'GGG')

    def testDomainBeyondArchive(self, tmp_path):
        """The domain may not reach past the recorded distances"""
        _, path = self._archive(tmp_path)
        archive = count_distances(open_fasta(path), 3, 60)
        with pytest.raises(InvalidArgumentException):
            localize(archive, 'ACG', DissimilarityParams(n=1))
        report = localize(archive, 'ACG',
                          DissimilarityParams(n=1, domain_hi=60))
        assert 'c2' == report.top_chromosome

    def testTopGrouping(self, tmp_path):
        """The member with the larger strongest peak is localized"""
        archive, _ = self._archive(tmp_path)
        pair = SymmetricPair(WordCode.from_text('ACG'),
                             WordCode.from_text('CGT'), False)
        record = PairRecord(pair, 43, 39, 5.0, (0,), 'ok', 0.1, 0.2)
        grouped = localize_top(archive, [record],
                               DissimilarityParams(n=1))
        assert ['c2'] == list(grouped)
        (got, report), = grouped['c2']
        assert got is record
        assert 'CGT' == str(report.word)
