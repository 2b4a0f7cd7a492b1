import os
import logging
from itertools import combinations
import numpy as np
from shoppath.graphs import Graph
from shoppath.instances import Instance, shop_kinds
from shoppath.jobs import Job
import shoppath.exceptions as ex

logger = logging.getLogger(__name__)

topologies = ('layered', 'uniform')


class ThreeDMInstance:

    def __str__(self):
        return f'ThreeDMInstance(n={self.n}, m_t={self.m_t})'

    @property
    def m_t(self):
        """Number of triples"""
        return len(self.triples)

    def has_matching(self):
        """
        Is there a perfect matching: n triples that cover every element of
        each of the three sets exactly once? Decided by exhaustive search

        :return: (bool)
        """
        for chosen in combinations(self.triples, self.n):

            if all(len(set(triple[d] for triple in chosen)) == self.n
                   for d in range(3)):
                return True

        return False

    def _check(self):

        if self.n < 1:
            raise ex.InstanceNotValid('Need at least one element per set')

        if self.m_t < self.n:
            raise ex.InstanceNotValid(f'Need at least n={self.n} triples, '
                                      f'had {self.m_t}')

        for triple in self.triples:
            if len(triple) != 3 or any(not 0 <= i < self.n for i in triple):
                raise ex.InstanceNotValid(f'Triple {triple} is not three '
                                          f'indices in 0..{self.n - 1}')
        return None

    def __init__(self, n, triples):
        """
        Three dimensional matching instance over three sets of n elements

        :param n: (int) Number of elements in each set

        :param triples: (list(tuple(int, int, int))) (a, b, c) indices
        """
        self.n = int(n)
        self.triples = [tuple(int(i) for i in triple) for triple in triples]

        self._check()


def read_triples(filename):
    """
    Triples from a file with one triple per line, separated by commas or
    whitespace. Lines that are not three integers are skipped e.g.

    # a, b, c
    0, 1, 0
    1 0 1

    :param filename: (str)
    :return: (list(tuple(int, int, int)))
    """
    if not os.path.exists(filename):
        raise ex.ShopPathCritical(f'Triples file {filename} does not exist')

    triples = []

    with open(filename, 'r') as triples_file:
        for line in triples_file:
            items = line.replace(',', ' ').split()

            try:
                triple = tuple(int(item) for item in items)

            except ValueError:
                continue

            if len(triple) == 3:
                triples.append(triple)

    return triples


def _unit_job(job_id, m, machine):
    """Open shop job with unit time on one machine and zero on the rest"""
    return Job.open(job_id, [int(i == machine) for i in range(m)])


def generate_from_3dm(tdm):
    """
    Open shop instance that has a schedule of makespan one if and only if the
    3DM instance has a perfect matching. Every triple is a block of three
    arcs in series, with unit jobs on the machines of its elements, parallel
    to m_t - n dummy arcs with unit jobs on dummy machines. Blocks are
    chained from s to t. Machines: a_i -> i, b_i -> n+i, c_i -> 2n+i and
    dummies 3n..2n+m_t-1

    :param tdm: (shoppath.generate.ThreeDMInstance)
    :return: (shoppath.instances.Instance)
    """
    n, m_t = tdm.n, tdm.m_t
    m = 2 * n + m_t

    arcs, jobs = [], []

    def add(tail, head, machine):
        arc_id = len(arcs)
        arcs.append((arc_id, tail, head))
        jobs.append(_unit_job(arc_id, m, machine))

    for k, (a, b, c) in enumerate(tdm.triples):
        start, end = 3 * k, 3 * (k + 1)

        add(start, start + 1, a)
        add(start + 1, start + 2, n + b)
        add(start + 2, end, 2 * n + c)

        for d in range(m_t - n):
            add(start, end, 3 * n + d)

    graph = Graph(vertex_count=3 * m_t + 1, arcs=arcs, s=0, t=3 * m_t)
    logger.info(f'Built {graph} from {tdm}')

    return Instance('open', m, graph, jobs)


def _backbone(rng, vertices):
    """Random order of the vertices from s = 0 to t = vertices - 1"""
    inner = [int(v) for v in rng.permutation(np.arange(1, vertices - 1))]
    return [0] + inner + [vertices - 1]


def _extra_arc(rng, order, topology):
    """Random (tail, head) pair. A layered arc goes forwards in the backbone
    order so the graph stays acyclic"""
    i, j = sorted(int(p) for p in rng.choice(len(order), size=2,
                                             replace=False))

    if topology == 'layered' or rng.random() < 0.5:
        return order[i], order[j]

    return order[j], order[i]


def _random_ops(rng, shop, m, durations, max_ops, distinct):
    """Operations of one random job"""
    lo, hi = durations

    if shop == 'open':
        return [(i, int(d)) for i, d in
                enumerate(rng.integers(lo, hi + 1, size=m))]

    n_ops = int(rng.integers(1, max_ops + 1))

    if distinct:
        machines = rng.permutation(m)[:n_ops]
    else:
        machines = rng.integers(0, m, size=n_ops)

    return [(int(machine), int(rng.integers(lo, hi + 1)))
            for machine in machines]


def generate_random(vertices, arcs, m, shop='open', durations=(0, 9),
                    topology='layered', seed=0, max_ops=None, distinct=False):
    """
    Reproducible random instance. A backbone path from s through every
    vertex to t is always embedded, then the remaining arcs are added at
    random and the arc ids shuffled

    :param vertices: (int) ≥ 2

    :param arcs: (int) ≥ vertices - 1. Equal to it gives a single path

    :param m: (int) Number of machines

    :param shop: (str) 'open' | 'job'

    :param durations: (tuple(int, int)) Inclusive range of processing times

    :param topology: (str) 'layered' (acyclic, arcs go forwards) | 'uniform'

    :param seed: (int)

    :param max_ops: (int | None) Maximum operations of a job shop job.
                    Defaults to m

    :param distinct: (bool) Job shop jobs visit distinct machines

    :return: (shoppath.instances.Instance)
    """
    max_ops = m if max_ops is None else max_ops
    lo, hi = durations

    if shop not in shop_kinds or topology not in topologies:
        raise ex.InstanceNotValid(f'Unknown shop {shop} or topology '
                                  f'{topology}')

    if vertices < 2 or arcs < vertices - 1:
        raise ex.InstanceNotValid(f'{arcs} arcs can not connect {vertices} '
                                  f'vertices in a path')

    if m < 1 or max_ops < 1 or not 0 <= lo <= hi:
        raise ex.InstanceNotValid('Need m ≥ 1, max_ops ≥ 1 and '
                                  '0 ≤ min duration ≤ max duration')

    if distinct and max_ops > m:
        raise ex.InstanceNotValid(f'Can not visit {max_ops} distinct '
                                  f'machines out of {m}')

    rng = np.random.default_rng(seed)
    order = _backbone(rng, vertices)

    ends = list(zip(order, order[1:]))
    ends += [_extra_arc(rng, order, topology)
             for _ in range(arcs - len(ends))]

    shuffled = [ends[int(i)] for i in rng.permutation(len(ends))]
    graph = Graph(vertex_count=vertices,
                  arcs=[(i, tail, head) for i, (tail, head)
                        in enumerate(shuffled)],
                  s=0, t=vertices - 1)

    jobs = [Job(i, _random_ops(rng, shop, m, durations, max_ops, distinct))
            for i in range(arcs)]

    return Instance(shop, m, graph, jobs)
