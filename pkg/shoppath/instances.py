import numpy as np
import shoppath.exceptions as ex

shop_kinds = ('open', 'job')


class Instance:

    def __str__(self):
        return (f'Instance({self.shop_kind} shop, m={self.m}, '
                f'n={len(self.jobs)}, {self.graph})')

    def __eq__(self, other):
        return (isinstance(other, Instance)
                and self.shop_kind == other.shop_kind
                and self.m == other.m
                and self.graph.vertex_count == other.graph.vertex_count
                and (self.graph.s, self.graph.t) == (other.graph.s,
                                                     other.graph.t)
                and self.graph.arcs == other.graph.arcs
                and self.jobs == other.jobs)

    @property
    def n(self):
        """Number of jobs (= arcs)"""
        return len(self.jobs)

    @property
    def is_open(self):
        return self.shop_kind == 'open'

    @property
    def mu(self):
        """Maximum number of operations of any job"""
        return max((len(job) for job in self.jobs), default=0)

    def jobs_for(self, job_ids):
        """Job objects for a set or sequence of job ids"""
        return [self.jobs[j] for j in job_ids]

    def loads(self, job_ids=None):
        """
        Matrix of μ_ij p_ij for a set of jobs

        :param job_ids: (list(int) | None) All jobs if None
        :return: (np.ndarray) shape = (n, m) jobs as rows, machines as columns
        """
        if job_ids is None:
            job_ids = range(self.n)

        matrix = np.zeros(shape=(len(job_ids), self.m), dtype=np.int64)

        for row, j in enumerate(job_ids):
            matrix[row] = self.jobs[j].loads(self.m)

        return matrix

    def _check(self):
        """Check the instance invariants"""

        if self.shop_kind not in shop_kinds:
            raise ex.InstanceNotValid(f'Unknown shop kind {self.shop_kind}')

        if self.m < 1:
            raise ex.InstanceNotValid('Need at least one machine')

        # Bijection between arc ids and job ids
        job_ids = [job.job_id for job in self.jobs]
        if job_ids != list(range(self.graph.arc_count)):
            raise ex.InstanceNotValid('Must have one job per arc with '
                                      'job_id == arc_id, in order')

        for job in self.jobs:
            if any(machine >= self.m for machine in job.machines):
                raise ex.InstanceNotValid(f'{job} uses a machine ≥ m={self.m}')

            if self.is_open and sorted(job.machines) != list(range(self.m)):
                raise ex.InstanceNotValid(f'Open shop {job} must have exactly '
                                          f'one operation per machine')

            if not self.is_open and len(job) == 0:
                raise ex.InstanceNotValid(f'Job shop {job} has no operations')

        return None

    def __init__(self, shop_kind, m, graph, jobs):
        """
        Combination problem instance: a graph whose arcs are jobs, to be
        scheduled on an open or job shop with m machines

        :param shop_kind: (str) 'open' | 'job'

        :param m: (int) Number of machines

        :param graph: (shoppath.graphs.Graph)

        :param jobs: (list(shoppath.jobs.Job)) One job per arc, indexed by id
        """
        self.shop_kind = str(shop_kind)
        self.m = int(m)
        self.graph = graph
        self.jobs = sorted(jobs, key=lambda job: job.job_id)

        self._check()


def lower_bound(instance, job_set):
    """
    Trivial lower bound on the makespan of any schedule of a set of jobs:
    the maximum machine load or the longest job, whichever is larger

    :param instance: (shoppath.instances.Instance)
    :param job_set: (iterable(int)) Job ids
    :return: (int)
    """
    job_set = list(job_set)
    if len(job_set) == 0:
        return 0

    loads = instance.loads(job_set)
    return int(max(loads.sum(axis=0).max(), loads.sum(axis=1).max()))


def upper_bound(instance, job_set):
    """
    Total processing time of a set of jobs. No dense schedule is longer

    :param instance: (shoppath.instances.Instance)
    :param job_set: (iterable(int)) Job ids
    :return: (int)
    """
    return sum(instance.jobs[j].length for j in job_set)
