from itertools import chain
from shoppath.schedules import Assignment, Schedule, finish
import shoppath.exceptions as ex


def _next_op(job, pending, machine, ordered):
    """Index of an operation of a job that could start on a machine"""

    if ordered:
        if len(pending) > 0 and job.ops[pending[0]][0] == machine:
            return pending[0]
        return None

    for k in pending:
        if job.ops[k][0] == machine:
            return k

    return None


def _fits(reserved, machine, start, duration):
    """Can an operation be processed on a machine without hitting a
    reserved interval?"""
    if duration == 0:
        return True

    return all(start >= end or begin >= start + duration
               for begin, end in reserved.get(machine, ()))


def dense_schedule(jobs, m, ordered, reserved=None, heuristic=False):
    """
    Greedy event-driven list scheduling. Whenever a machine is free and a job
    that is not being processed has an operation that could start on it,
    start that operation. Machines are considered in index order and jobs by
    smallest id

    :param jobs: (list(shoppath.jobs.Job))

    :param m: (int) Number of machines

    :param ordered: (bool) Are the operations of a job a chain (job shop) or
                    can they be processed in any order (open shop)

    :param reserved: (dict(int, list(tuple(int, int))) | None) Machine ->
                     [start, end) intervals that are already occupied

    :param heuristic: (bool) Flag to set on the returned schedule

    :return: (shoppath.schedules.Schedule)
    """
    reserved = {} if reserved is None else reserved
    jobs = sorted(jobs, key=lambda job: job.job_id)

    pending = {job.job_id: list(range(len(job))) for job in jobs}
    n_left = sum(len(job) for job in jobs)

    machine_free = [0] * m
    job_free = {job.job_id: 0 for job in jobs}
    reserved_ends = [end for intervals in reserved.values()
                     for _, end in intervals]

    assignments, time = [], 0

    while n_left > 0:

        # Zero duration operations can make more operations available at the
        # same time, so repeat until nothing more starts now
        started = True
        while started:
            started = False

            for machine in range(m):
                for job in jobs:
                    if machine_free[machine] > time:
                        break

                    if job_free[job.job_id] > time:
                        continue

                    k = _next_op(job, pending[job.job_id], machine, ordered)
                    if k is None:
                        continue

                    duration = job.ops[k][1]
                    if not _fits(reserved, machine, time, duration):
                        continue

                    assignments.append(Assignment(job.job_id, k, machine,
                                                  time, duration))
                    pending[job.job_id].remove(k)
                    machine_free[machine] = time + duration
                    job_free[job.job_id] = time + duration

                    n_left -= 1
                    started = True

        if n_left == 0:
            break

        later = [t for t in chain(machine_free, job_free.values(),
                                  reserved_ends) if t > time]
        if len(later) == 0:
            raise ex.ShopPathCritical('Dense scheduling could not progress')

        time = min(later)

    return Schedule(assignments, heuristic=heuristic)


def is_dense(schedule, jobs, ordered):
    """
    Replay a schedule and check no machine is idle at an event time while a
    free job has an operation of positive duration that could start on it

    :param schedule: (shoppath.schedules.Schedule)
    :param jobs: (list(shoppath.jobs.Job))
    :param ordered: (bool) Job shop chains
    :return: (bool)
    """
    starts = {(a.job_id, a.op_index): a for a in schedule}
    positive = [a for a in schedule if a.duration > 0]
    times = sorted(set([0] + [a.start for a in schedule]
                       + [finish(a) for a in schedule]))

    def busy(time, key):
        return any(a.start <= time < finish(a) for a in positive if key(a))

    for time in times:
        for job in jobs:
            if busy(time, lambda a: a.job_id == job.job_id):
                continue

            for k, (machine, duration) in enumerate(job.ops):
                if duration == 0 or starts[(job.job_id, k)].start <= time:
                    continue

                if ordered and any(finish(starts[(job.job_id, i)]) > time
                                   for i in range(k)):
                    continue

                if not busy(time, lambda a: a.machine == machine):
                    return False

    return True
