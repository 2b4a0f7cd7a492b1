import os
import json
import time
import logging
from fractions import Fraction
import pandas as pd
from shoppath.algorithms import solve, algorithms
from shoppath.config import Config
from shoppath.data import load_instance
from shoppath.generate import (generate_random, generate_from_3dm,
                               ThreeDMInstance)
from shoppath.instances import lower_bound, upper_bound
from shoppath.oracle import solve_exact
from shoppath.schedules import validate_result
import shoppath.exceptions as ex

logger = logging.getLogger(__name__)

suite_keys = ('eps', 'algorithms', 'instances', 'generate', 'tdm')
generate_keys = ('count', 'seed', 'vertices', 'arcs', 'm', 'shop',
                 'durations', 'topology', 'max_ops', 'distinct')

columns = ['instance', 'algorithm', 'status', 'makespan', 'optimum', 'ratio',
           'bound', 'bound_ok', 'valid']


def proven_bound(alg, m, eps):
    """
    Proven approximation ratio of an algorithm, None if only makespan ≥ OPT
    is guaranteed

    :param alg: (str)
    :param m: (int) Number of machines
    :param eps: (Fraction)
    :return: (Fraction | None)
    """
    bounds = {'sd': Fraction(m),
              'gar': 1 + eps,
              'rar': 2 + eps,
              'jjar': Fraction(3, 2) + eps,
              'oracle': Fraction(1)}

    return bounds.get(alg, None)


def _decimal(value):
    """Fraction rendered with a fixed number of decimals"""
    return 'n/a' if value is None else f'{float(value):.4f}'


class Report:

    def __str__(self):
        return f'Report(n_rows={len(self.rows)}, exit_code={self.exit_code})'

    @property
    def exit_code(self):
        """0 if no bound was violated and every schedule was valid"""
        if all(row['bound_ok'] and row['valid'] for row in self.rows):
            return 0

        return 1

    def table(self):
        """
        Rows of the report as a DataFrame

        :return: (pd.DataFrame)
        """
        names = columns + (['runtime'] if self.timings else [])
        return pd.DataFrame(self.rows, columns=names)

    def summary(self):
        """
        Largest and mean ratio of every algorithm over the instances with a
        known optimum

        :return: (pd.DataFrame)
        """
        table = self.table()
        table = table[table['ratio'] != 'n/a']

        if len(table) == 0:
            return pd.DataFrame(columns=['algorithm', 'n', 'max_ratio',
                                         'mean_ratio'])

        ratios = table.assign(ratio=table['ratio'].astype(float))
        summary = (ratios.groupby('algorithm', sort=True)['ratio']
                   .agg(n='count', max_ratio='max', mean_ratio='mean')
                   .reset_index())

        for column in ('max_ratio', 'mean_ratio'):
            summary[column] = summary[column].map(lambda x: f'{x:.4f}')

        return summary

    def header(self):
        """Parameters used for the run"""
        return {**Config.as_dict(), 'eps': str(self.eps)}

    def to_tsv(self):
        """Tab separated table preceded by '# key=value' header lines"""
        lines = [f'# {key}={value}' for key, value in self.header().items()]
        return ('\n'.join(lines) + '\n'
                + self.table().to_csv(sep='\t', index=False))

    def to_json(self):
        doc = {'header': self.header(),
               'rows': self.table().to_dict(orient='records'),
               'summary': self.summary().to_dict(orient='records'),
               'exit_code': self.exit_code}

        return json.dumps(doc, indent=2) + '\n'

    def add(self, **row):
        self.rows.append(row)
        return None

    def __init__(self, eps, timings=False):
        """
        Ratios of the makespans of approximation algorithms to the optimum

        :param eps: (Fraction) Accuracy the algorithms were run with

        :param timings: (bool) Include wall clock times, which makes the
                        report differ between runs
        """
        self.eps = eps
        self.timings = timings
        self.rows = []


def _check_keys(doc, keys, where):
    unknown = [key for key in doc if key not in keys]
    if len(unknown) > 0:
        raise ex.DataMalformatted(f'Unknown field(s) {unknown} in {where}')
    return None


def suite_instances(suite, base_dir='.'):
    """
    Named instances of a benchmark suite: instance files, random
    generator parameters and 3DM reductions

    :param suite: (dict)
    :param base_dir: (str) Directory instance file names are relative to
    :return: (list(tuple(str, shoppath.instances.Instance)))
    """
    _check_keys(suite, suite_keys, where='suite')
    instances = []

    for filename in suite.get('instances', []):
        path = os.path.join(base_dir, filename)
        instances.append((os.path.basename(filename), load_instance(path)))

    for i, params in enumerate(suite.get('generate', [])):
        _check_keys(params, generate_keys, where=f'generate[{i}]')
        params = dict(params)

        count, seed = params.pop('count', 1), params.pop('seed', 0)
        if 'durations' in params:
            params['durations'] = tuple(params['durations'])

        for s in range(seed, seed + count):
            name = (f'random-{params.get("shop", "open")}-m{params["m"]}'
                    f'-seed{s}')
            instances.append((name, generate_random(seed=s, **params)))

    for i, params in enumerate(suite.get('tdm', [])):
        _check_keys(params, ('n', 'triples'), where=f'tdm[{i}]')
        tdm = ThreeDMInstance(params['n'], params['triples'])
        instances.append((f'3dm-{i}', generate_from_3dm(tdm)))

    return instances


def _optimum(instance):
    try:
        return solve_exact(instance).makespan

    except (ex.InstanceTooLarge, ex.InfeasibleInstance) as err:
        logger.info(f'No optimum: {err}')
        return None


def _check(instance, result):
    """Is a result a feasible schedule within the trivial bounds?"""
    report = validate_result(instance, result)

    if not report.ok:
        logger.warning(f'Invalid schedule: {report}')
        return False

    return (lower_bound(instance, result.path) <= result.makespan
            <= upper_bound(instance, result.path))


def run_bench(suite, base_dir='.', eps=None, timings=False):
    """
    Run every algorithm of a suite on every instance and compare the
    makespans to the optimum where it can be found

    :param suite: (dict) e.g. {"algorithms": ["sd", "gar"],
                  "generate": [{"count": 10, "vertices": 7, "arcs": 14,
                                "m": 2}]}

    :param base_dir: (str)

    :param eps: (Fraction | None) Overrides the suite's "eps"

    :param timings: (bool)

    :return: (shoppath.bench.Report)
    """
    if eps is None:
        eps = suite.get('eps', Config.eps)
    eps = Fraction(eps)

    names = suite.get('algorithms', list(algorithms))
    for alg in names:
        if alg not in algorithms:
            raise ex.DataMalformatted(f'Unknown algorithm {alg}')

    report = Report(eps, timings=timings)

    for name, instance in suite_instances(suite, base_dir):
        logger.info(f'Benchmarking {name}: {instance}')
        optimum = _optimum(instance)

        for alg in names:
            row = dict(instance=name, algorithm=alg, status='ok',
                       makespan='', optimum='' if optimum is None else optimum,
                       ratio='n/a', bound='', bound_ok=True, valid=True)
            start = time.perf_counter()

            try:
                result = solve(instance, alg, eps=eps)

            except (ex.SchedulerNotApplicable, ex.InstanceTooLarge) as err:
                logger.info(f'Skipped {alg} on {name}: {err}')
                row['status'] = 'skipped'
                report.add(**row, **_runtime(timings, start))
                continue

            except ex.InfeasibleInstance as err:
                logger.info(f'{alg} found no path on {name}: {err}')
                row['status'] = 'infeasible'
                report.add(**row, **_runtime(timings, start))
                continue

            bound = proven_bound(alg, instance.m, eps)
            row.update(makespan=result.makespan,
                       bound=_decimal(bound) if bound is not None else '',
                       valid=_check(instance, result))

            if optimum is not None:
                if optimum == 0:
                    ratio = Fraction(1) if result.makespan == 0 else None
                else:
                    ratio = Fraction(result.makespan, optimum)

                row['ratio'] = _decimal(ratio) if ratio is not None else 'inf'
                row['bound_ok'] = (result.makespan >= optimum
                                   and (bound is None
                                        or (ratio is not None
                                            and ratio <= bound)))

            if not row['bound_ok']:
                logger.warning(f'{alg} violated its bound on {name}: '
                               f'{result.makespan} vs optimum {optimum}')

            report.add(**row, **_runtime(timings, start))

    return report


def _runtime(timings, start):
    if not timings:
        return {}

    return {'runtime': f'{time.perf_counter() - start:.4f}'}


def load_suite(filename):
    """
    Benchmark suite from a .json file

    :param filename: (str)
    :return: (tuple(dict, str)) Suite and the directory it is in
    """
    if not os.path.exists(filename):
        raise ex.ShopPathCritical(f'Suite file {filename} does not exist')

    with open(filename, 'r') as suite_file:
        try:
            suite = json.load(suite_file)

        except json.JSONDecodeError as err:
            raise ex.DataMalformatted(f'Invalid suite at line {err.lineno}: '
                                      f'{err.msg}')

    return suite, os.path.dirname(os.path.abspath(filename))
