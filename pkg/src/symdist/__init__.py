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
Define package contents so that they are easy to import.
"""

from symdist.seq_io import FastaReader, SequenceSegment, open_fasta
from symdist.words import WordCode, SymmetricPair, enumerate_pairs
from symdist.distances import CountArchive, DistanceCounter, \
    count_distances, load_archive, save_archive
from symdist.distributions import DistanceDistribution, archive_distribution, \
    distribution_matrix, to_distribution
from symdist.peaks import Peak, PeakSet, find_peaks
from symdist.dissim import DissimilarityParams, PairRecord, d
from symdist.analysis import localize, run_pipeline
from symdist.nullmodel import MarkovModel, generate, train

__version__ = '0.1.0.dev1'

__all__ = ["FastaReader",
           "SequenceSegment",
           "open_fasta",
           "WordCode",
           "SymmetricPair",
           "enumerate_pairs",
           "CountArchive",
           "DistanceCounter",
           "count_distances",
           "load_archive",
           "save_archive",
           "DistanceDistribution",
           "archive_distribution",
           "distribution_matrix",
           "to_distribution",
           "Peak",
           "PeakSet",
           "find_peaks",
           "DissimilarityParams",
           "PairRecord",
           "d",
           "localize",
           "run_pipeline",
           "MarkovModel",
           "generate",
           "train"]
