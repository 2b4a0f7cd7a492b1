import logging
import math
from fractions import Fraction
from shoppath.config import Config
from shoppath.dense import dense_schedule
from shoppath.exact import schedule_exact_small
from shoppath.schedules import Schedule, finish
import shoppath.exceptions as ex

logger = logging.getLogger(__name__)


def _check_open(jobs, m):
    """Open shop jobs need exactly one operation on every machine"""

    for job in jobs:
        if sorted(job.machines) != list(range(m)):
            raise ex.SchedulerNotApplicable(f'{job} is not an open shop job '
                                            f'on {m} machines')
    return None


def gs_o2_makespan(jobs):
    """Optimal O2||Cmax makespan: max(longest job, load on M1, load on M2)"""
    return max(max((job.length for job in jobs), default=0),
               sum(job.load(0) for job in jobs),
               sum(job.load(1) for job in jobs))


def schedule_gs_o2(jobs):
    """
    Optimal two machine open shop schedule. Jobs are split into I (shorter on
    the first machine) and J (the rest). The job r in I with the largest
    first machine time, if that is no smaller than any second machine time in
    J, is processed first on the second machine and last on the first; the
    others are processed in the same order on both machines. Otherwise the
    same construction applies with the machines swapped

    :param jobs: (list(shoppath.jobs.Job))
    :return: (shoppath.schedules.Schedule)
    """
    _check_open(jobs, m=2)
    if len(jobs) == 0:
        return Schedule()

    ids = sorted(job.job_id for job in jobs)
    by_id = {job.job_id: job for job in jobs}

    def split(first, second):
        a = {j: by_id[j].load(first) for j in ids}
        b = {j: by_id[j].load(second) for j in ids}
        shorter = [j for j in ids if a[j] <= b[j]]
        longer = [j for j in ids if a[j] > b[j]]
        return a, b, shorter, longer

    first, second = 0, 1
    a, b, shorter, longer = split(first, second)

    if (max((a[j] for j in shorter), default=-1)
            < max((b[j] for j in longer), default=-1)):
        first, second = 1, 0
        a, b, shorter, longer = split(first, second)

    r = min(shorter, key=lambda j: (-a[j], j))
    others = [j for j in shorter if j != r] + longer

    def op(j, machine):
        return j, by_id[j].op_index(machine)

    machine_sequences = {first: [op(j, first) for j in others + [r]],
                         second: [op(j, second) for j in [r] + others]}

    job_sequences = {j: [op(j, first)[1], op(j, second)[1]] for j in others}
    job_sequences[r] = [op(r, second)[1], op(r, first)[1]]

    return Schedule.from_sequences(jobs, machine_sequences, job_sequences)


def racsmany_bound(schedule, jobs):
    """
    Bound on the makespan of a dense open shop schedule: the load of the
    machine M_l processing the last completed operation plus the length of
    its job J_k

    :param schedule: (shoppath.schedules.Schedule)
    :param jobs: (list(shoppath.jobs.Job))
    :return: (int)
    """
    if len(schedule) == 0:
        return 0

    last = schedule.last_completed()
    by_id = {job.job_id: job for job in jobs}

    return (sum(job.load(last.machine) for job in jobs)
            + by_id[last.job_id].length)


def schedule_dense_open(jobs, m):
    """
    Dense (greedy) open shop schedule, at most twice the optimum

    :param jobs: (list(shoppath.jobs.Job))
    :param m: (int) Number of machines
    :return: (shoppath.schedules.Schedule)
    """
    _check_open(jobs, m)
    schedule = dense_schedule(jobs, m, ordered=False)

    if schedule.makespan > racsmany_bound(schedule, jobs):
        raise ex.BoundViolated(f'Dense schedule makespan {schedule.makespan} '
                               f'exceeds {racsmany_bound(schedule, jobs)}')
    return schedule


def sw_alpha(jobs, m, eps):
    """
    Threshold α separating large and small jobs. Tries α_k = (ε/(m(3+ε)))^(2^k)
    for k = 0, 1, .. and takes the first for which the operations of small
    jobs with α²P < p ≤ αP total at most ε/(3+ε)·P, where P is the largest
    machine load

    :param jobs: (list(shoppath.jobs.Job))
    :param m: (int)
    :param eps: (Fraction)
    :return: (tuple(Fraction, int, list(int))) α, k and the large job ids
    """
    eps = Fraction(eps)
    base = eps / (m * (3 + eps))
    p_max = max((sum(job.load(i) for job in jobs) for i in range(m)),
                default=0)

    if p_max == 0:
        return base, 0, []

    alpha, checked = base, None

    # The candidate medium operation sets are disjoint so one of these is
    # small enough
    for k in range(math.ceil(m * (3 + eps) / eps)):
        large = [job.job_id for job in jobs
                 if any(duration >= alpha * p_max for _, duration in job.ops)]

        medium_total = sum(duration for job in jobs if job.job_id not in large
                           for _, duration in job.ops
                           if alpha**2 * p_max < duration <= alpha * p_max)

        checked = (alpha, k, large)
        if medium_total <= eps / (3 + eps) * p_max:
            break

        alpha = alpha**2

    return checked


def schedule_sw_om(jobs, m, eps, op_limit=None):
    """
    Open shop schedule from splitting jobs into large and small. The large
    jobs are scheduled optimally, then the operations of the small jobs are
    filled greedily into the idle time left on each machine

    :param jobs: (list(shoppath.jobs.Job))

    :param m: (int)

    :param eps: (Fraction) > 0

    :param op_limit: (int | None) Largest number of large job operations
                     scheduled exactly. Above this a dense schedule is used
                     and the result is marked as heuristic

    :return: (shoppath.schedules.Schedule)
    """
    _check_open(jobs, m)
    op_limit = Config.exact_op_limit if op_limit is None else op_limit

    if len(jobs) == 0:
        return Schedule()

    alpha, k, large_ids = sw_alpha(jobs, m, eps)
    large = [job for job in jobs if job.job_id in large_ids]
    small = [job for job in jobs if job.job_id not in large_ids]
    logger.info(f'SW split with α = {alpha} (k={k}): {len(large)} large and '
                f'{len(small)} small jobs')

    n_large_ops = sum(1 for job in large for _, d in job.ops if d > 0)

    if n_large_ops <= op_limit:
        large_schedule = schedule_exact_small(large, m, 'open', op_limit)

    else:
        logger.warning(f'{n_large_ops} large job operations exceed the exact '
                       f'limit of {op_limit}. Scheduling them greedily')
        large_schedule = dense_schedule(large, m, ordered=False,
                                        heuristic=True)

    reserved = {machine: [(a.start, finish(a))
                          for a in large_schedule.on_machine(machine)
                          if a.duration > 0]
                for machine in range(m)}

    small_schedule = dense_schedule(small, m, ordered=False,
                                    reserved=reserved)

    return Schedule(large_schedule.assignments + small_schedule.assignments,
                    heuristic=large_schedule.heuristic)
