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
Command-line entry point::

    symdist count --fasta chr1.fa --fasta chr2.fa --out genome.symd
    symdist report --archive genome.symd --outdir results
    symdist localize --archive genome.symd --word ACCATTC --bed hits.bed

Every table goes to a file or standard output with a '#' header carrying
the tool version, the analysis settings and the input digests. Logs go to
standard error. Exit status is 0 on success, 1 on a runtime error and 2
on a usage error.
"""
import argparse
import contextlib
import logging
import os
import sys

import symdist
from symdist import analysis
from symdist.dissim import MAX_PERMUTATION_PEAKS, DissimilarityParams
from symdist.distances import D_MAX, DEFAULT_CHUNK, count_files, \
    load_archive, save_archive
from symdist.distributions import QUARTILE, archive_distribution, \
    write_distribution
from symdist.exceptions import SymDistException
from symdist.nullmodel import GENERATOR, generate, train
from symdist.peaks import H, N, find_peaks, write_peaks
from symdist.seq_io import iter_fasta, write_fasta
from symdist.tsv import TsvCodec
from symdist.util import file_digest, header_lines
from symdist.words import MAX_K, as_word

moduleLogger = logging.getLogger('symdist.cli')

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'

#: settings echoed in output headers, per subcommand
_ECHO = {
    'count': ('k', 'd_max', 'strict_case'),
    'dist': ('word', 'd_max', 'all_distances'),
    'peaks': ('word', 'd_max', 'h', 'n'),
    'dissim': ('d_max', 'h', 'n', 'quartile', 'all_distances'),
    'report': ('d_max', 'h', 'n', 'quartile', 'low', 'high',
               'all_distances'),
    'localize': ('word', 'top', 'd_max', 'h', 'n', 'quartile',
                 'strict_case'),
    'simulate': ('order', 'symmetrize', 'length', 'seed'),
    'export': (),
}


class RunConfig(object):

    """
    Validated settings of one invocation. Attributes mirror the command
    line options; ``command`` names the subcommand.
    """

    def __init__(self, **kwargs):
        self.__dict__.update(kwargs)

    def __repr__(self):
        return 'RunConfig(%s)' % ', '.join(
            '%s=%r' % item for item in sorted(self.__dict__.items()))

    def echo(self):
        """
        The analysis settings written into output headers.
        """
        return dict((key, getattr(self, key))
                    for key in _ECHO.get(self.command, ())
                    if getattr(self, key, None) is not None)

    def params(self, k=None):
        return DissimilarityParams(h=self.h, n=self.n, domain_hi=self.d_max,
                                   k=k)


def _bounded(kind, lo, hi, name):
    def parse(text):
        try:
            value = kind(text)
        except ValueError:
            raise argparse.ArgumentTypeError('invalid %s: %r' % (name, text))
        if (lo is not None and value < lo) or (hi is not None and value > hi):
            raise argparse.ArgumentTypeError(
                '%s must be in [%s, %s], got %s'
                % (name, lo, '' if hi is None else hi, text))
        return value
    return parse


def _common(parser):
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='debug logging')
    parser.add_argument('-q', '--quiet', action='store_true',
                        help='warnings and errors only')
    parser.add_argument('--json', action='store_true',
                        help='write tables as JSON records instead of TSV')
    parser.add_argument('--threads', type=_bounded(int, 1, None, 'threads'),
                        default=os.cpu_count() or 1,
                        help='worker processes')


def _archive(parser):
    parser.add_argument('--archive', required=True,
                        help='count archive written by "symdist count"')


def _domain(parser):
    parser.add_argument('--dmax', dest='d_max',
                        type=_bounded(int, 2, None, 'dmax'), default=D_MAX,
                        help='upper end of the distance domain [k+1, dmax]')


def _peak_options(parser):
    parser.add_argument('--h', type=_bounded(int, 2, None, 'h'), default=H,
                        help='peak window width in distances')
    parser.add_argument('--n', type=_bounded(int, 1, MAX_PERMUTATION_PEAKS,
                                             'n'),
                        default=N,
                        help='number of peaks compared, at most %d'
                             % MAX_PERMUTATION_PEAKS)


def _probability(name):
    return _bounded(float, 0.0, 1.0, name)


def _quartile(parser):
    parser.add_argument('--quartile', type=_probability('quartile'),
                        default=QUARTILE,
                        help='pairs whose smaller S is at or below this '
                             'quantile of S are excluded')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='symdist',
        description='Inter-word distance distributions of symmetric word '
                    'pairs.')
    parser.add_argument('--version', action='version',
                        version='symdist %s' % symdist.__version__)
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True
    defaults = argparse.ArgumentDefaultsHelpFormatter

    p = sub.add_parser('count', formatter_class=defaults,
                       help='count inter-word distances of FASTA files')
    _common(p)
    p.add_argument('--fasta', action='append', required=True,
                   help='FASTA file, plain or gzip; repeat for several '
                        'files')
    p.add_argument('--k', type=_bounded(int, 1, MAX_K, 'k'),
                   default=analysis.K,
                   help='word length')
    p.add_argument('--dmax', dest='d_max', type=_bounded(int, 1, None,
                                                         'dmax'),
                   default=D_MAX, help='largest distance recorded')
    p.add_argument('--strict-case', action='store_true',
                   help='treat lowercase bases as separators')
    p.add_argument('--chunk-size', type=_bounded(int, 1, None,
                                                 'chunk-size'),
                   default=DEFAULT_CHUNK,
                   help='bases handed to the counter at a time')
    p.add_argument('--out', required=True,
                   help='archive path; .tsv or .tsv.gz selects the text '
                        'format')

    p = sub.add_parser('dist', formatter_class=defaults,
                       help='distance distribution of one word')
    _common(p)
    _archive(p)
    p.add_argument('--word', required=True)
    _domain(p)
    p.add_argument('--all-distances', action='store_true',
                   help='S counts every recorded distance, not only the '
                        'domain')
    p.add_argument('--out', help='output file (standard output if absent)')

    p = sub.add_parser('peaks', formatter_class=defaults,
                       help='strongest peaks of one word')
    _common(p)
    _archive(p)
    p.add_argument('--word', required=True)
    _domain(p)
    _peak_options(p)
    p.add_argument('--out', help='output file (standard output if absent)')

    p = sub.add_parser('dissim', formatter_class=defaults,
                       help='dissimilarity of every symmetric pair')
    _common(p)
    _archive(p)
    _domain(p)
    _peak_options(p)
    _quartile(p)
    p.add_argument('--all-distances', action='store_true',
                   help='S counts every recorded distance')
    p.add_argument('--out', help='pairs table (standard output if absent)')

    p = sub.add_parser('report', formatter_class=defaults,
                       help='pairs, summary and selection tables')
    _common(p)
    _archive(p)
    _domain(p)
    _peak_options(p)
    _quartile(p)
    p.add_argument('--low', type=_probability('low'),
                   default=analysis.LOW_PERCENTILE,
                   help='quantile of d below which pairs are selected as '
                        'similar')
    p.add_argument('--high', type=_probability('high'),
                   default=analysis.HIGH_PERCENTILE,
                   help='quantile of d above which pairs are selected as '
                        'dissimilar')
    p.add_argument('--all-distances', action='store_true',
                   help='S counts every recorded distance')
    p.add_argument('--outdir', required=True)

    p = sub.add_parser('localize', formatter_class=defaults,
                       help='chromosome where favoured distances are most '
                            'pronounced')
    _common(p)
    _archive(p)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument('--word', help='word to localize')
    target.add_argument('--top', type=_bounded(int, 1, None, 'top'),
                        help='localize the strongest member of the TOP most '
                             'dissimilar pairs (usually %d)'
                             % analysis.TOP_PAIRS)
    _domain(p)
    _peak_options(p)
    _quartile(p)
    p.add_argument('--fasta', action='append',
                   help='sequence file(s) for the BED intervals; defaults '
                        'to the inputs recorded in the archive')
    p.add_argument('--strict-case', action='store_true')
    p.add_argument('--bed', help='BED output of the word\'s intervals')
    p.add_argument('--outdir',
                   help='with --top: directory for the table and one BED '
                        'file per word')
    p.add_argument('--out', help='table (standard output if absent)')

    p = sub.add_parser('simulate', formatter_class=defaults,
                       help='sample a sequence from a Markov model')
    _common(p)
    p.add_argument('--train', action='append', required=True,
                   help='FASTA training input; repeat for several files')
    p.add_argument('--order', type=_bounded(int, 0, None, 'order'),
                   default=2, help='Markov order m')
    p.add_argument('--symmetrize', dest='symmetrize', action='store_true',
                   default=True,
                   help='mirror counts of reversed complements')
    p.add_argument('--no-symmetrize', dest='symmetrize',
                   action='store_false')
    p.add_argument('--length', type=_bounded(int, 1, None, 'length'),
                   required=True)
    p.add_argument('--seed', type=_bounded(int, 0, None, 'seed'),
                   default=42, help='%s seed' % GENERATOR)
    p.add_argument('--strict-case', action='store_true')
    p.add_argument('--out', required=True, help='FASTA output')

    p = sub.add_parser('export', formatter_class=defaults,
                       help='convert an archive to the TSV interchange '
                            'form')
    _common(p)
    _archive(p)
    p.add_argument('--out', required=True,
                   help='TSV path; a .gz suffix compresses it')
    return parser


def parse_args(argv=None):
    """
    Returns the :class:`RunConfig` of a command line; usage errors exit
    with status 2.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == 'localize' and args.top and not args.outdir:
        parser.error('localize --top needs --outdir')
    if args.command == 'report' and args.low > args.high:
        parser.error('--low must not exceed --high')
    values = dict(vars(args))
    values.setdefault('k', None)
    return RunConfig(**values)


@contextlib.contextmanager
def _output(path):
    if path is None or path == '-':
        yield sys.stdout
        sys.stdout.flush()
    else:
        with open(path, 'w', newline='\n') as f:
            yield f


def _header(config, inputs):
    return header_lines(symdist.__version__, config.command, config.echo(),
                        [(path, file_digest(path)) for path in inputs])


def _table_path(outdir, name, config):
    return os.path.join(outdir, name + ('.json' if config.json else '.tsv'))


def _load(config):
    archive = load_archive(config.archive)
    moduleLogger.info('loaded %s', archive)
    return archive


def _cmd_count(config):
    archive = count_files(config.fasta, config.k, config.d_max,
                          threads=config.threads,
                          strict_case=config.strict_case,
                          chunk_size=config.chunk_size)
    save_archive(archive, config.out)
    moduleLogger.info('wrote %s', config.out)


def _cmd_dist(config):
    archive = _load(config)
    dist = archive_distribution(archive, config.word, config.d_max,
                                config.all_distances)
    with _output(config.out) as out:
        write_distribution(dist, out, _header(config, [config.archive]),
                           config.json)


def _cmd_peaks(config):
    archive = _load(config)
    dist = archive_distribution(archive, config.word, config.d_max)
    peak_set = find_peaks(dist, config.h, config.n)
    with _output(config.out) as out:
        write_peaks(peak_set, out, _header(config, [config.archive]),
                    config.json)


def _pipeline(config, archive):
    return analysis.run_pipeline(
        archive, config.params(archive.k), config.quartile,
        getattr(config, 'low', analysis.LOW_PERCENTILE),
        getattr(config, 'high', analysis.HIGH_PERCENTILE),
        getattr(config, 'all_distances', False))


def _cmd_dissim(config):
    archive = _load(config)
    result = _pipeline(config, archive)
    with _output(config.out) as out:
        analysis.write_pairs(result.records, out,
                             _header(config, [config.archive]), config.json)


def _cmd_report(config):
    archive = _load(config)
    result = _pipeline(config, archive)
    header = _header(config, [config.archive])
    if not os.path.isdir(config.outdir):
        os.makedirs(config.outdir)
    for name, write, value in (
            ('pairs', analysis.write_pairs, result.records),
            ('summary', analysis.write_summary, result.summary),
            ('selection', analysis.write_selection, result.selection)):
        path = _table_path(config.outdir, name, config)
        with _output(path) as out:
            write(value, out, header, config.json)
        moduleLogger.info('wrote %s', path)


def _cmd_localize(config):
    archive = _load(config)
    params = config.params(archive.k)
    inputs = [config.archive] + list(config.fasta or [])
    if config.word:
        word = as_word(config.word, archive.k)
        report = analysis.localize(archive, word, params, config.fasta,
                                   config.strict_case,
                                   intervals=bool(config.bed))
        with _output(config.out) as out:
            analysis.write_localization(report, out,
                                        _header(config, inputs), config.json)
        if config.bed:
            analysis.export_bed(report.intervals, config.bed)
        return
    result = _pipeline(config, archive)
    grouped = analysis.localize_top(archive, result.records, params,
                                    config.fasta, config.top,
                                    config.strict_case, intervals=True)
    if not os.path.isdir(config.outdir):
        os.makedirs(config.outdir)
    with _output(_table_path(config.outdir, 'localization', config)) as out:
        analysis.write_top(grouped, out, _header(config, inputs),
                           config.json)
    for entries in grouped.values():
        for _, report in entries:
            analysis.export_bed(report.intervals, os.path.join(
                config.outdir, str(report.word) + '.bed'))


def _cmd_simulate(config):
    model = train(iter_fasta(config.train, config.strict_case), config.order,
                  config.symmetrize)
    segment = generate(model, config.length, config.seed)
    title = '%s order=%d symmetrized=%d generator=%s seed=%d' % (
        segment.chromosome_id, config.order, int(config.symmetrize),
        GENERATOR, config.seed)
    write_fasta([(title, segment.bases)], config.out)
    moduleLogger.info('wrote %d bases to %s', config.length, config.out)


def _cmd_export(config):
    archive = _load(config)
    save_archive(archive, config.out,
                 TsvCodec(compress=config.out.endswith('.gz')))


COMMANDS = {
    'count': _cmd_count,
    'dist': _cmd_dist,
    'peaks': _cmd_peaks,
    'dissim': _cmd_dissim,
    'report': _cmd_report,
    'localize': _cmd_localize,
    'simulate': _cmd_simulate,
    'export': _cmd_export,
}


def main(argv=None):
    config = parse_args(argv)
    level = logging.INFO
    if config.verbose:
        level = logging.DEBUG
    elif config.quiet:
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    try:
        COMMANDS[config.command](config)
    except SymDistException as e:
        sys.stderr.write('symdist: error %s at %s: %s\n'
                         % (e.status, e.source, e.details))
        return 1
    except (IOError, OSError) as e:
        sys.stderr.write('symdist: %s\n' % e)
        return 1
    return 0
