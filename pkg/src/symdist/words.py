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
Fixed-length words over {A,C,G,T}, packed two bits per base.

A word of length k is held as an integer in [0, 4^k) whose base-4 digits
are the letters (A=0, C=1, G=2, T=3), first letter most significant.
"""
import logging
from collections import namedtuple

import numpy as np

from symdist.exceptions import InvalidArgumentException

moduleLogger = logging.getLogger('symdist.words')

ALPHABET = 'ACGT'
MAX_K = 15

#: byte value -> digit, 255 for anything outside ACGT/acgt
DIGITS = np.full(256, 255, dtype=np.uint8)
for _digit, _letter in enumerate(ALPHABET):
    DIGITS[ord(_letter)] = _digit
    DIGITS[ord(_letter.lower())] = _digit
del _digit, _letter

_LETTERS = np.frombuffer(ALPHABET.encode('ascii'), dtype=np.uint8)


def check_k(k):
    """
    Raises :class:`InvalidArgumentException` unless 1 <= k <= MAX_K.
    """
    if not isinstance(k, (int, np.integer)) or not 1 <= k <= MAX_K:
        raise InvalidArgumentException(
            source='k', details='word length must be in [1, %d], got %r'
                                % (MAX_K, k))


class WordCode(namedtuple('WordCode', ['k', 'code'])):

    """
    Packed identity of a k-mer.

    >>> w = WordCode.from_text('ACGT')
    >>> w.code
    27
    >>> str(w)
    'ACGT'
    """

    __slots__ = ()

    @classmethod
    def from_text(cls, text):
        return cls(len(text), encode(text))

    @property
    def text(self):
        return decode(self.code, self.k)

    def __str__(self):
        return self.text


class SymmetricPair(namedtuple('SymmetricPair',
                               ['w', 'w_bar', 'palindromic'])):

    """
    A word and its reversed complement, canonical orientation w <= w_bar.
    """

    __slots__ = ()

    def __str__(self):
        return '%s/%s' % (self.w, self.w_bar)


def encode(text):
    """
    Returns the packed code of an ACGT text (case-insensitive).
    """
    if not text:
        raise InvalidArgumentException(source='word', details='empty word')
    check_k(len(text))
    code = 0
    for letter in text:
        digit = DIGITS[ord(letter)] if ord(letter) < 256 else 255
        if digit == 255:
            raise InvalidArgumentException(
                source='word', details='%r is not an ACGT word' % text)
        code = (code << 2) | int(digit)
    return code


def decode(code, k):
    """
    Returns the ACGT text of a packed code.
    """
    check_k(k)
    code = int(code)
    if not 0 <= code < 4 ** k:
        raise InvalidArgumentException(
            source='code', details='%d is outside [0, 4^%d)' % (code, k))
    letters = []
    for _ in range(k):
        letters.append(ALPHABET[code & 3])
        code >>= 2
    return ''.join(reversed(letters))


def as_word(word, k=None):
    """
    Accepts a :class:`WordCode` or ACGT text and returns a
    :class:`WordCode`, checking its length against k when given.
    """
    if not isinstance(word, WordCode):
        word = WordCode.from_text(word)
    if k is not None and word.k != k:
        raise InvalidArgumentException(
            source=str(word),
            details='word length %d does not match k=%d' % (word.k, k))
    return word


def reverse_complement_code(code, k):
    """
    Reversed complement of a packed code. The complement of a digit is
    3 - digit, i.e. the code xor 0b11 per base.
    """
    comp = int(code) ^ (4 ** k - 1)
    result = 0
    for _ in range(k):
        result = (result << 2) | (comp & 3)
        comp >>= 2
    return result


def reverse_complement(w):
    """
    Returns the reversed complement of a :class:`WordCode`.

    >>> str(reverse_complement(WordCode.from_text('ACCATTC')))
    'GAATGGT'
    """
    w = as_word(w)
    return WordCode(w.k, reverse_complement_code(w.code, w.k))


def reverse_complement_table(k):
    """
    Returns an int64 array rc such that rc[code] is the reversed complement
    of code, for all 4^k codes.
    """
    check_k(k)
    comp = np.arange(4 ** k, dtype=np.int64) ^ (4 ** k - 1)
    result = np.zeros_like(comp)
    for _ in range(k):
        result = (result << 2) | (comp & 3)
        comp = comp >> 2
    return result


def enumerate_pairs(k):
    """
    Returns every symmetric pair of words of length k in canonical
    orientation, sorted by w. Palindromic words pair with themselves.

    >>> len(enumerate_pairs(7))
    8192
    """
    check_k(k)
    rc = reverse_complement_table(k)
    codes = np.nonzero(np.arange(4 ** k) <= rc)[0]
    pairs = [SymmetricPair(WordCode(k, int(c)), WordCode(k, int(rc[c])),
                           bool(rc[c] == c))
             for c in codes]
    moduleLogger.debug('k=%d: %d symmetric pairs', k, len(pairs))
    return pairs


def to_digits(bases):
    """
    Maps an ACGT text (str or bytes) to a uint8 digit array. Symbols
    outside ACGT/acgt map to 255.
    """
    if isinstance(bases, str):
        bases = bases.encode('ascii')
    return DIGITS[np.frombuffer(bases, dtype=np.uint8)]


def from_digits(digits):
    """
    Inverse of :func:`to_digits` for valid digits; returns str.
    """
    return _LETTERS[np.asarray(digits, dtype=np.uint8)].tobytes().decode(
        'ascii')


def rolling_codes(digits, k):
    """
    Returns the int64 codes of every length-k window of a digit array,
    in position order. Shorter inputs give an empty array.
    """
    digits = np.asarray(digits)
    count = digits.size - k + 1
    if count <= 0:
        return np.zeros(0, dtype=np.int64)
    codes = np.zeros(count, dtype=np.int64)
    for j in range(k):
        codes <<= 2
        codes |= digits[j:j + count]
    return codes


def sortable(codes, k):
    """
    Narrowest integer view of codes, so stable sorts can use radix sort.
    """
    if k <= 8:
        return codes.astype(np.uint16)
    return codes.astype(np.int32)


class WordScanner(object):

    """
    Turns a stream of sequence segments into k-mer codes with
    chromosome-relative start positions.

    Consecutive pieces sharing (chromosome_id, segment_index) and
    adjacent offsets are treated as one segment: the last k-1 bases of a
    piece are carried over so that words spanning the cut are seen.
    """

    def __init__(self, k):
        check_k(k)
        self.k = k
        self.segment_start = None
        self._chromosome = None
        self._key = None
        self._next_offset = None
        self._high_water = 0
        self._tail = np.zeros(0, dtype=np.uint8)
        self._tail_pos = 0

    def scan(self, segment):
        """
        Returns (codes, positions, reset). ``reset`` is True when previous
        occurrence tracking must be discarded: the chromosome changed or
        the segment does not lie after everything seen so far.
        """
        digits = to_digits(segment.bases)
        reset = False
        if segment.chromosome_id != self._chromosome:
            self._chromosome = segment.chromosome_id
            self._high_water = 0
            self._key = None
            reset = True
        key = (segment.chromosome_id, segment.segment_index)
        if key == self._key and segment.start_offset == self._next_offset:
            digits = np.concatenate((self._tail, digits))
            first = self._tail_pos
        else:
            if segment.start_offset < self._high_water:
                reset = True
            self.segment_start = segment.start_offset
            first = segment.start_offset
        self._key = key
        self._next_offset = segment.start_offset + len(segment.bases)
        self._high_water = max(self._high_water, self._next_offset)

        keep = min(digits.size, self.k - 1)
        self._tail = digits[digits.size - keep:]
        self._tail_pos = first + digits.size - keep

        codes = rolling_codes(digits, self.k)
        positions = first + np.arange(codes.size, dtype=np.int64)
        return codes, positions, reset
