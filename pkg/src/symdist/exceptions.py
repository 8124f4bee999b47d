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
This module contains exceptions used throughout the API.

Every exception carries a short machine-readable ``status`` code, the
``source`` it relates to (a path, a word or a parameter name) and free
text ``details``.
"""


class SymDistException(Exception):

    """
    Common base class for all exceptions.
    """

    code = 'error'

    def __init__(self, status=None, source=None, details=None):
        if status is None:
            status = self.code
        Exception.__init__(
            self, "Error %s at %s \n %s" % (status, source, details))
        self.status = status
        self.source = source
        self.details = details


class InvalidArgumentException(SymDistException):

    """ InvalidArgumentException """

    code = 'invalid-argument'


class ParameterBoundException(InvalidArgumentException):

    """ Raised when a parameter exceeds a documented hard bound """

    code = 'parameter-bound'


class SequenceIOException(SymDistException):

    """ SequenceIOException """

    code = 'io'


class FastaFormatException(SymDistException):

    """ FastaFormatException """

    code = 'fasta-format'


class ArchiveFormatException(SymDistException):

    """ ArchiveFormatException """

    code = 'archive-format'


class ArchiveVersionException(ArchiveFormatException):

    """ ArchiveVersionException """

    code = 'archive-version'


class ArchiveChecksumException(ArchiveFormatException):

    """ ArchiveChecksumException """

    code = 'archive-checksum'


class ArchiveTruncatedException(ArchiveFormatException):

    """ ArchiveTruncatedException """

    code = 'archive-truncated'


class EmptyInputException(SymDistException):

    """ EmptyInputException """

    code = 'empty-input'


class DomainTooShortException(SymDistException):

    """ DomainTooShortException """

    code = 'domain-too-short'


class PeaklessDistributionException(SymDistException):

    """
    Raised when a dissimilarity needs the size of a strongest peak and
    that size is zero.
    """

    code = 'peakless'
