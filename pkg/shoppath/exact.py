import logging
from shoppath.config import Config
from shoppath.dense import dense_schedule
from shoppath.instances import shop_kinds
from shoppath.schedules import Assignment, Schedule
import shoppath.exceptions as ex

logger = logging.getLogger(__name__)


class BranchAndBound:
    """
    Depth first search over the order in which operations are started. Each
    node appends one operation at its earliest start, so every leaf is a
    semi-active schedule. From a node only the operations starting before
    the earliest possible completion C* are branched on (plus the operation
    achieving C*), which keeps at least one optimal schedule reachable
    """

    def __str__(self):
        return (f'BranchAndBound(n_ops={len(self.ops)}, best={self.best}, '
                f'n_nodes={self.n_nodes})')

    def _candidates(self, done, machine_ready, job_ready):
        """
        Operations that could be appended next, with their earliest start.
        Any pending operation of a job in an open shop, the next one in its
        chain in a job shop

        :return: (list(tuple(int, int))) (op, start) pairs
        """
        candidates = []

        for position, op_ids in enumerate(self.job_ops):
            pending = [o for o in op_ids if not done >> o & 1]
            if self.ordered:
                pending = pending[:1]

            for o in pending:
                _, _, machine, duration = self.ops[o]
                start = job_ready[position]

                # Zero duration operations never block a machine
                if duration > 0:
                    start = max(start, machine_ready[machine])

                candidates.append((o, start))

        return sorted(candidates, key=lambda c: (c[1], c[0]))

    def _lower_bound(self, done, machine_ready, job_ready):
        """Ready time plus remaining work of every machine and job"""
        machine_left = [0] * len(machine_ready)
        job_left = [0] * len(job_ready)

        for o, (position, _, machine, duration) in enumerate(self.ops):
            if not done >> o & 1:
                machine_left[machine] += duration
                job_left[position] += duration

        return max(max(r + l for r, l in zip(machine_ready, machine_left)),
                   max(r + l for r, l in zip(job_ready, job_left)))

    def _branch(self, done, machine_ready, job_ready):
        self.n_nodes += 1

        if done == self.all_done:
            makespan = max(job_ready)
            if makespan < self.best:
                self.best, self.best_starts = makespan, dict(self.starts)
            return None

        state = (done, tuple(machine_ready), tuple(job_ready))
        if state in self.seen:
            return None
        self.seen.add(state)

        if self._lower_bound(done, machine_ready, job_ready) >= self.best:
            return None

        candidates = self._candidates(done, machine_ready, job_ready)
        earliest = min(start + self.ops[o][3] for o, start in candidates)
        first = next(o for o, start in candidates
                     if start + self.ops[o][3] == earliest)

        for o, start in candidates:
            if start >= earliest and o != first:
                continue

            position, _, machine, duration = self.ops[o]

            next_machine_ready = list(machine_ready)
            if duration > 0:
                next_machine_ready[machine] = start + duration

            next_job_ready = list(job_ready)
            next_job_ready[position] = start + duration

            self.starts[o] = start
            self._branch(done | 1 << o, next_machine_ready, next_job_ready)
            del self.starts[o]

        return None

    def run(self, upper_bound):
        """
        Search for a schedule shorter than an upper bound

        :param upper_bound: (int) Makespan of a known feasible schedule
        :return: (dict(int, int) | None) Start time of every searched
                 operation, None if nothing shorter exists
        """
        self.best = upper_bound
        self._branch(0, [0] * self.m, [0] * len(self.job_ops))

        logger.debug(f'Searched {self.n_nodes} nodes, best makespan '
                     f'{self.best}')
        return self.best_starts

    def __init__(self, jobs, m, ordered, searched):
        """
        :param jobs: (list(shoppath.jobs.Job))

        :param m: (int) Number of machines

        :param ordered: (bool) Are the operations of each job a chain

        :param searched: (list(tuple(int, int))) (job position, op index)
                         pairs to search over, in chain order per job
        """
        self.m = m
        self.ordered = ordered

        # Operations as (job position, op index, machine, duration)
        self.ops = [(p, k, *jobs[p].ops[k]) for p, k in searched]
        self.job_ops = [[o for o, (p, _, _, _) in enumerate(self.ops)
                         if p == position] for position in range(len(jobs))]
        self.all_done = (1 << len(self.ops)) - 1

        self.starts = {}
        self.seen = set()
        self.n_nodes = 0

        self.best = None
        self.best_starts = None


def schedule_exact_small(jobs, m, shop_kind, op_limit=None):
    """
    Minimum makespan schedule of a small set of jobs by branch and bound,
    starting from a dense schedule as the incumbent

    :param jobs: (list(shoppath.jobs.Job))

    :param m: (int) Number of machines

    :param shop_kind: (str) 'open' | 'job'

    :param op_limit: (int | None) Largest number of operations to search
                     over. Zero duration operations of an open shop are not
                     searched, they are placed at time zero

    :return: (shoppath.schedules.Schedule)
    """
    if shop_kind not in shop_kinds:
        raise ex.SchedulerNotApplicable(f'Unknown shop kind {shop_kind}')

    op_limit = Config.exact_op_limit if op_limit is None else op_limit
    ordered = shop_kind == 'job'
    jobs = sorted(jobs, key=lambda job: job.job_id)

    for job in jobs:
        if any(machine >= m for machine in job.machines):
            raise ex.SchedulerNotApplicable(f'{job} uses a machine ≥ {m}')

    searched = [(p, k) for p, job in enumerate(jobs)
                for k, (_, duration) in enumerate(job.ops)
                if ordered or duration > 0]

    if len(searched) > op_limit:
        raise ex.InstanceTooLarge(f'{len(searched)} operations exceed the '
                                  f'exact solver limit of {op_limit}')

    incumbent = dense_schedule(jobs, m, ordered=ordered)
    op_starts = {(a.job_id, a.op_index): a.start for a in incumbent}

    if len(searched) > 0:
        search = BranchAndBound(jobs, m, ordered, searched)
        starts = search.run(upper_bound=incumbent.makespan)

        for o, start in (starts or {}).items():
            p, k, _, _ = search.ops[o]
            op_starts[(jobs[p].job_id, k)] = start

    # Operations that weren't searched have zero duration and start at 0
    searched = {(jobs[p].job_id, k) for p, k in searched}

    return Schedule(Assignment(job.job_id, k, machine,
                               op_starts[(job.job_id, k)]
                               if (job.job_id, k) in searched else 0,
                               duration)
                    for job in jobs
                    for k, (machine, duration) in enumerate(job.ops))
