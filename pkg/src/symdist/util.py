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
This module contains handy utility functions.
"""
import hashlib
import json
import logging
import math

import numpy as np

moduleLogger = logging.getLogger('symdist.util')

NA = 'NA'
_BLOCK = 1 << 20


def file_digest(path):
    """
    Returns the SHA-256 hex digest of the raw bytes of a file.
    """
    sha = hashlib.sha256()
    with open(path, 'rb') as f:
        for block in iter(lambda: f.read(_BLOCK), b''):
            sha.update(block)
    return sha.hexdigest()


def format_number(value):
    """
    Formats a number for TSV output with 6 significant digits. Integers
    are written as integers, undefined values as NA.

    >>> format_number(2.0040322580645)
    '2.00403'
    >>> format_number(float('nan'))
    'NA'
    """
    if value is None:
        return NA
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return '%d' % value
    value = float(value)
    if math.isnan(value):
        return NA
    return '%.6g' % value


def to_json_value(value):
    """
    Converts numpy scalars and NaN to JSON-friendly values.
    """
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value) or math.isinf(value):
            return None
        return value
    return value


def header_lines(version, command=None, config=None, inputs=()):
    """
    Returns the '#'-prefixed header lines written on top of every TSV:
    tool version, config echo (sorted by key) and input digests.
    """
    lines = ['#symdist\t%s' % version]
    if command:
        lines.append('#command\t%s' % command)
    for key in sorted(config or {}):
        lines.append('#config\t%s=%s' % (key, config[key]))
    for path, digest in inputs:
        lines.append('#input\t%s\t%s' % (path, digest))
    return lines


def write_table(stream, columns, rows, header=(), meta=()):
    """
    Writes a TSV table: header lines, extra '#key<TAB>value' metadata,
    a '#'-prefixed column line, then one line per row.
    """
    for line in header:
        stream.write(line + '\n')
    for key, value in meta:
        stream.write('#%s\t%s\n' % (key, format_number(value)
                                   if not isinstance(value, str) else value))
    stream.write('#' + '\t'.join(columns) + '\n')
    for row in rows:
        stream.write('\t'.join(
            cell if isinstance(cell, str) else format_number(cell)
            for cell in row) + '\n')


def write_json(stream, columns, rows, meta=()):
    """
    Mirrors a table as a JSON document of records.
    """
    doc = {
        'meta': dict((key, to_json_value(value)) for key, value in meta),
        'records': [dict(zip(columns, [to_json_value(c) for c in row]))
                    for row in rows],
    }
    json.dump(doc, stream, indent=1, sort_keys=True)
    stream.write('\n')


def write_output(stream, columns, rows, header=(), meta=(), as_json=False):
    """
    Writes a table as TSV, or as JSON when ``as_json`` is set; the header
    lines then travel under the ``header`` key of the metadata.
    """
    if as_json:
        write_json(stream, columns, rows,
                   list(meta) + [('header', list(header))])
    else:
        write_table(stream, columns, rows, header, meta)
