from fractions import Fraction
from shoppath.algorithms import (SaeConfig, solve_sd, solve_gar, solve_rar,
                                 solve_jjar, solve_sae)
from shoppath.cli import main
from shoppath.data import load_instance, load_result
from shoppath.exact import schedule_exact_small
from shoppath.generate import (ThreeDMInstance, generate_from_3dm,
                               generate_random)
from shoppath.graphs import Graph
from shoppath.instances import Instance
from shoppath.jobs import Job
from shoppath.jobshop import schedule_jackson_j2, jackson_order_bound
from shoppath.openshop import gs_o2_makespan, schedule_gs_o2
from shoppath.oracle import enumerate_simple_paths, solve_exact
from shoppath.paths import (WeightVectorMap, minmax_path_exact,
                            minmax_path_fptas)
from shoppath.schedules import validate_schedule, validate_result
import numpy as np

eps = Fraction(1, 4)


def single_stage(shop_kind, m, jobs):
    """Instance with every job on its own parallel s-t arc"""
    graph = Graph(2, arcs=[(i, 0, 1) for i in range(len(jobs))], s=0, t=1)
    return Instance(shop_kind, m, graph, jobs)


def combination_instances(count, m, **kwargs):
    """Generated instances on 7 vertices and 14 arcs of both topologies"""

    for seed in range(count):
        topology = 'layered' if seed % 2 == 0 else 'uniform'
        yield generate_random(7, 14, m=m, topology=topology, seed=seed,
                              **kwargs)


def test_gs_o2_exact_at_scale():
    rng = np.random.default_rng(11)

    for _ in range(500):
        durations = rng.integers(0, 10, size=(int(rng.integers(1, 9)), 2))
        jobs = [Job.open(i, [int(a), int(b)])
                for i, (a, b) in enumerate(durations)]

        schedule = schedule_gs_o2(jobs)
        expected = max(int(durations[:, 0].sum()), int(durations[:, 1].sum()),
                       int(durations.sum(axis=1).max()))

        assert validate_schedule(single_stage('open', 2, jobs),
                                 list(range(len(jobs))), schedule).ok
        assert schedule.makespan == gs_o2_makespan(jobs) == expected
        assert (schedule.makespan
                == schedule_exact_small(jobs, 2, 'open',
                                        op_limit=16).makespan)


def test_jackson_j2_exact_at_scale():
    rng = np.random.default_rng(12)

    for _ in range(500):
        jobs = []
        for j in range(int(rng.integers(1, 7))):
            machines = [int(i) for i in rng.permutation(2)]
            n_ops = int(rng.integers(1, 3))
            jobs.append(Job(j, [(machine, int(rng.integers(1, 10)))
                                for machine in machines[:n_ops]]))

        schedule = schedule_jackson_j2(jobs)

        assert validate_schedule(single_stage('job', 2, jobs),
                                 list(range(len(jobs))), schedule).ok
        assert schedule.makespan <= max(jackson_order_bound(jobs))
        assert (schedule.makespan
                == schedule_exact_small(jobs, 2, 'job').makespan)


def test_gar_ratio_at_scale():

    for instance in combination_instances(200, m=2):
        optimum = solve_exact(instance).makespan
        result = solve_gar(instance, eps=eps)

        assert validate_result(instance, result).ok
        assert optimum <= result.makespan <= (1 + eps) * optimum


def test_rar_ratio_at_scale():

    for instance in combination_instances(200, m=3):
        optimum = solve_exact(instance, op_limit=18).makespan
        result = solve_rar(instance, eps=eps)

        assert validate_result(instance, result).ok
        assert optimum <= result.makespan <= (2 + eps) * optimum


def test_jjar_ratio_at_scale():

    for instance in combination_instances(200, m=2, shop='job', max_ops=2,
                                          distinct=True):
        optimum = solve_exact(instance).makespan
        result = solve_jjar(instance, eps=eps)

        assert validate_result(instance, result).ok
        assert (optimum <= result.makespan
                <= (Fraction(3, 2) + eps) * optimum)


def test_sd_ratio_at_scale():

    for seed in range(50):
        for m, vertices, arcs in ((2, 7, 14), (3, 5, 8)):
            for shop in ('open', 'job'):
                instance = generate_random(vertices, arcs, m=m, shop=shop,
                                           seed=seed)
                optimum = solve_exact(instance).makespan
                result = solve_sd(instance)

                assert validate_result(instance, result).ok
                assert optimum <= result.makespan <= m * optimum


def test_minmax_path_at_scale():
    rng = np.random.default_rng(13)

    for seed in range(300):
        topology = 'layered' if seed % 2 == 0 else 'uniform'
        instance = generate_random(7, 14, m=2 + seed % 2, topology=topology,
                                   seed=seed)

        weight_map = WeightVectorMap.from_instance(instance)
        graph = instance.graph
        paths = enumerate_simple_paths(graph)

        for required in ((), (int(rng.integers(instance.n)),)):
            values = [weight_map.value(path) for path in paths
                      if all(arc_id in path for arc_id in required)]

            path = minmax_path_exact(graph, weight_map, required)

            if len(values) == 0:
                assert path is None
                continue

            assert graph.is_simple_path(path)
            assert set(required) <= set(path)
            assert weight_map.value(path) == min(values)

            for accuracy in (Fraction(1, 10), Fraction(1, 2)):
                path = minmax_path_fptas(graph, weight_map, required,
                                         accuracy)
                assert set(required) <= set(path)
                assert (weight_map.value(path)
                        <= (1 + accuracy) * min(values))


def test_3dm_gap_at_scale():
    rng = np.random.default_rng(14)

    for _ in range(20):
        n = int(rng.integers(1, 4))
        m_t = int(rng.integers(n, 5))
        triples = [tuple(int(i) for i in rng.integers(0, n, size=3))
                   for _ in range(m_t)]

        tdm = ThreeDMInstance(n, triples)
        optimum = solve_exact(generate_from_3dm(tdm)).makespan

        if tdm.has_matching():
            assert optimum == 1
        else:
            assert optimum >= 2


def test_sae_at_scale():

    for seed in range(50):
        instance = generate_random(5, 8, m=2, seed=seed)
        optimum = solve_exact(instance).makespan

        for n in (1, 2):
            result = solve_sae(instance, SaeConfig(eps, n=n))

            assert validate_result(instance, result).ok
            assert result.makespan >= optimum


def _fuzz_args(rng):
    """Random generator arguments and the algorithms that apply to them"""
    vertices = int(rng.integers(3, 6))
    arcs = int(rng.integers(vertices - 1, 2 * vertices + 1))
    m = int(rng.integers(2, 4))
    shop = 'open' if rng.random() < 0.5 else 'job'
    topology = 'layered' if rng.random() < 0.5 else 'uniform'

    args = ['--vertices', str(vertices), '--arcs', str(arcs), '--m', str(m),
            '--shop', shop, '--topology', topology,
            '--seed', str(int(rng.integers(10**6)))]

    if shop == 'open':
        algs = ['sd', 'rar', 'sae', 'oracle'] + (['gar'] if m == 2 else [])
        return args, algs

    if m == 2 and rng.random() < 0.5:
        return args + ['--max-ops', '2', '--distinct'], ['sd', 'sar', 'jjar',
                                                         'oracle']

    return args + ['--max-ops', str(m)], ['sd', 'sar', 'oracle']


def test_cli_fuzz(tmp_path):
    rng = np.random.default_rng(15)
    instance_filename = str(tmp_path / 'instance.json')
    result_filename = str(tmp_path / 'result.json')

    for _ in range(1000):
        args, algs = _fuzz_args(rng)
        alg = algs[int(rng.integers(len(algs)))]

        assert main(['gen', 'random', '--out', instance_filename] + args) == 0
        assert main(['solve', '--alg', alg, '--in', instance_filename,
                     '--out', result_filename]) == 0
        assert main(['verify', '--in', instance_filename,
                     '--sched', result_filename]) == 0

        instance = load_instance(instance_filename)
        assert validate_result(instance, load_result(result_filename)).ok
