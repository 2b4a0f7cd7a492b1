import sys
import logging
import argparse
from fractions import Fraction
from shoppath.algorithms import solve, algorithms
from shoppath.bench import run_bench, load_suite
from shoppath.config import Config
from shoppath.data import (load_instance, write_instance, load_result,
                           write_result)
from shoppath.generate import (generate_random, generate_from_3dm,
                               ThreeDMInstance, read_triples, topologies)
from shoppath.instances import shop_kinds
from shoppath.schedules import validate_result
import shoppath.exceptions as ex

logger = logging.getLogger(__name__)

errors = (ex.ShopPathCritical, ex.InstanceNotValid, ex.DataMalformatted,
          ex.SchedulerNotApplicable, ex.InstanceTooLarge,
          ex.InfeasibleInstance, ex.BoundViolated)


def _emit(content, filename):
    """Write bytes to a file, or to stdout if no file is given"""

    if filename is None:
        sys.stdout.write(content.decode('utf-8'))
    else:
        with open(filename, 'wb') as out_file:
            out_file.write(content)

    return None


def run_solve(args):
    instance = load_instance(args.in_filename)
    result = solve(instance, args.alg, eps=args.eps, sae_n=args.sae_n,
                   guaranteed_n=args.guaranteed_n)

    logger.info(f'{result}. Notes: {result.notes}')

    _emit(write_result(result), args.out)

    return 0


def run_gen_random(args):
    instance = generate_random(vertices=args.vertices, arcs=args.arcs,
                               m=args.m, shop=args.shop,
                               durations=(args.min_duration,
                                          args.max_duration),
                               topology=args.topology, seed=args.seed,
                               max_ops=args.max_ops, distinct=args.distinct)
    _emit(write_instance(instance), args.out)

    return 0


def run_gen_3dm(args):
    tdm = ThreeDMInstance(args.n, read_triples(args.triples))
    logger.info(f'{tdm} has a perfect matching: {tdm.has_matching()}')

    instance = generate_from_3dm(tdm)
    _emit(write_instance(instance), args.out)

    return 0


def run_verify(args):
    instance = load_instance(args.in_filename)
    result = load_result(args.sched)

    report = validate_result(instance, result)
    print(report)

    return 0 if report.ok else 1


def run_bench_suite(args):
    suite, base_dir = load_suite(args.suite)
    report = run_bench(suite, base_dir=base_dir, eps=args.eps,
                       timings=args.timings)

    if args.out is None:
        sys.stdout.write(report.to_tsv())
    else:
        _emit(report.to_tsv().encode('utf-8'), f'{args.out}.tsv')
        _emit(report.to_json().encode('utf-8'), f'{args.out}.json')

    print(report.summary().to_string(index=False), file=sys.stderr)
    return report.exit_code


def get_parser():
    """Command line arguments of the shoppath program"""
    parser = argparse.ArgumentParser(prog='shoppath',
                                     description='Select an s-t path whose '
                                                 'arcs are jobs and schedule '
                                                 'them on an open or job shop')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for progress, -vv for debugging output')

    commands = parser.add_subparsers(dest='command', required=True)

    solve_parser = commands.add_parser('solve', help='Solve an instance')
    solve_parser.add_argument('--alg', choices=algorithms, required=True)
    solve_parser.add_argument('--eps', type=Fraction, default=None,
                              help=f'Accuracy, default {Config.eps}')
    solve_parser.add_argument('--in', dest='in_filename', required=True)
    solve_parser.add_argument('--out', default=None)
    solve_parser.add_argument('--sae-n', type=int, default=None,
                              help='Subset size of sae, default '
                                   f'{Config.sae_n_cap}')
    solve_parser.add_argument('--guaranteed-n', '--paper-n',
                              dest='guaranteed_n', action='store_true',
                              help='Use the subset size that guarantees '
                                   'the ratio of sae')
    solve_parser.set_defaults(function=run_solve)

    gen_parser = commands.add_parser('gen', help='Generate an instance')
    generators = gen_parser.add_subparsers(dest='generator', required=True)

    random_parser = generators.add_parser('random')
    random_parser.add_argument('--seed', type=int, default=0)
    random_parser.add_argument('--vertices', type=int, default=7)
    random_parser.add_argument('--arcs', type=int, default=14)
    random_parser.add_argument('--m', type=int, default=2)
    random_parser.add_argument('--shop', choices=shop_kinds, default='open')
    random_parser.add_argument('--min-duration', type=int, default=0)
    random_parser.add_argument('--max-duration', type=int, default=9)
    random_parser.add_argument('--topology', choices=topologies,
                               default='layered')
    random_parser.add_argument('--max-ops', type=int, default=None)
    random_parser.add_argument('--distinct', action='store_true',
                               help='Job shop jobs visit distinct machines')
    random_parser.add_argument('--out', default=None)
    random_parser.set_defaults(function=run_gen_random)

    tdm_parser = generators.add_parser('3dm')
    tdm_parser.add_argument('--n', type=int, required=True)
    tdm_parser.add_argument('--triples', required=True,
                            help='File with one "a, b, c" triple per line')
    tdm_parser.add_argument('--out', default=None)
    tdm_parser.set_defaults(function=run_gen_3dm)

    verify_parser = commands.add_parser('verify', help='Check a solution')
    verify_parser.add_argument('--in', dest='in_filename', required=True)
    verify_parser.add_argument('--sched', required=True)
    verify_parser.set_defaults(function=run_verify)

    bench_parser = commands.add_parser('bench', help='Benchmark a suite')
    bench_parser.add_argument('--suite', required=True)
    bench_parser.add_argument('--eps', type=Fraction, default=None)
    bench_parser.add_argument('--timings', action='store_true')
    bench_parser.add_argument('--out', default=None,
                              help='Prefix of the .tsv and .json reports')
    bench_parser.set_defaults(function=run_bench_suite)

    return parser


def main(argv=None):
    """
    Run a command

    :param argv: (list(str) | None) Arguments, sys.argv[1:] if None
    :return: (int) Exit code. 1 on a failed check, 2 on an error
    """
    args = get_parser().parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose,
                                                      logging.DEBUG)
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')

    try:
        return args.function(args)

    except errors as err:
        print(f'{type(err).__name__}: {err}', file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
