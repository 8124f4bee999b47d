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
This module contains common strings.
"""
SEQUENCE_BEFORE_HEADER = 'Sequence data found before the first FASTA header'
PEAKLESS = 'Distribution has no peak: the strongest peak size v is 0'
EMPTY_QUANTILE = 'Cannot compute a quantile of an empty collection'
EMPTY_MODEL = 'The Markov model holds no counts'
BAD_MAGIC = 'File does not start with the archive magic bytes'
TRUNCATED = 'Archive ended before the declared payload length'
CHECKSUM = 'Archive payload checksum does not match'
TOO_MANY_PEAKS = \
    'Exhaustive peak matching is limited to n <= %d peaks'
DOMAIN_TOO_SHORT = \
    'Domain of length %d cannot hold %d disjoint windows of width %d'
