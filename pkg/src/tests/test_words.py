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
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from symdist.exceptions import InvalidArgumentException
from symdist.words import WordCode, WordScanner, decode, encode, \
    enumerate_pairs, reverse_complement, reverse_complement_code, \
    reverse_complement_table, rolling_codes, to_digits
from symdist.seq_io import SequenceSegment
from .tools import allWords, occurrences, reverseComplement

words = st.text(alphabet='ACGT', min_size=1, max_size=15)


class TestWordCode:

    """ Tests for packed words """

    def testEncode(self):
        """Encode uses A=0, C=1, G=2, T=3, first letter most significant"""
        assert 0 == encode('A')
        assert 3 == encode('T')
        assert 6 == encode('CG')
        assert 27 == encode('ACGT')
        assert encode('acgt') == encode('ACGT')

    def testEncodeRejects(self):
        """Non-ACGT text, empty text and words over 15 letters"""
        for bad in ('ACGN', '', 'A' * 16, 'AC-T'):
            with pytest.raises(InvalidArgumentException):
                encode(bad)

    def testDecodeRange(self):
        """Codes outside [0, 4^k) are rejected"""
        assert 'TT' == decode(15, 2)
        with pytest.raises(InvalidArgumentException):
            decode(16, 2)

    @given(words)
    def testDecodeInverse(self, word):
        """decode(encode(w)) == w"""
        assert word == decode(encode(word), len(word))
        assert word == str(WordCode.from_text(word))


class TestReverseComplement:

    """ Tests for reversed complements """

    def testExamples(self):
        """Glossary example and a palindrome"""
        assert 'GAATGGT' == str(reverse_complement('ACCATTC'))
        assert 'ACGT' == str(reverse_complement('ACGT'))
        assert 'T' == str(reverse_complement('A'))

    @given(words)
    def testInvolution(self, word):
        """rc(rc(w)) == w and rc agrees with the textual definition"""
        w = WordCode.from_text(word)
        assert w == reverse_complement(reverse_complement(w))
        assert reverseComplement(word) == str(reverse_complement(w))

    def testTable(self):
        """The vectorized table matches the scalar function"""
        for k in (1, 2, 3, 5):
            table = reverse_complement_table(k)
            for code in range(4 ** k):
                assert table[code] == reverse_complement_code(code, k)


class TestEnumeratePairs:

    """ Tests for symmetric pair enumeration """

    def testCounts(self):
        """4^k / 2 pairs for odd k; palindromes added for even k"""
        assert 32 == len(enumerate_pairs(3))
        pairs = enumerate_pairs(2)
        assert 10 == len(pairs)
        palindromes = sorted(str(p.w) for p in pairs if p.palindromic)
        assert ['AT', 'CG', 'GC', 'TA'] == palindromes

    def testCanonical(self):
        """Every word appears exactly once, with w <= w_bar"""
        seen = []
        for pair in enumerate_pairs(3):
            assert pair.w.code <= pair.w_bar.code
            assert str(pair.w_bar) == reverseComplement(str(pair.w))
            seen.extend({pair.w, pair.w_bar})
        assert sorted(seen) == sorted(WordCode.from_text(w)
                                      for w in allWords(3))


class TestScanning:

    """ Tests for rolling codes and the segment scanner """

    def testRollingCodes(self):
        """Codes of every window in position order"""
        codes = rolling_codes(to_digits('ACGTA'), 2)
        assert [1, 6, 11, 12] == codes.tolist()
        assert 0 == rolling_codes(to_digits('AC'), 3).size

    def testScannerPositions(self):
        """Positions are chromosome-relative"""
        scanner = WordScanner(2)
        codes, positions, reset = scanner.scan(
            SequenceSegment('c1', 1, 10, 'CGCG'))
        assert reset
        assert [6, 9, 6] == codes.tolist()
        assert [10, 11, 12] == positions.tolist()

    def testScannerJoinsPieces(self):
        """Pieces of one segment behave like the whole segment"""
        bases = 'ACGCGTTACGCG'
        whole = WordScanner(3)
        codes, positions, _ = whole.scan(SequenceSegment('c', 0, 5, bases))
        pieced = WordScanner(3)
        got_codes = []
        got_positions = []
        for start in range(0, len(bases), 4):
            c, p, _ = pieced.scan(SequenceSegment(
                'c', 0, 5 + start, bases[start:start + 4]))
            got_codes.extend(c.tolist())
            got_positions.extend(p.tolist())
        assert codes.tolist() == got_codes
        assert positions.tolist() == got_positions
        assert 5 == pieced.segment_start

    def testScannerFindsOccurrences(self):
        """Every occurrence of a word is reported at its start"""
        bases = 'AAAACGAAAACG'
        codes, positions, _ = WordScanner(3).scan(
            SequenceSegment('c', 0, 0, bases))
        hits = positions[codes == encode('AAA')]
        assert occurrences(bases, 'AAA') == hits.tolist()
        assert np.all(np.diff(positions) == 1)
