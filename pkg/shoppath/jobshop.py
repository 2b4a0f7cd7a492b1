from shoppath.dense import dense_schedule
from shoppath.schedules import Schedule
import shoppath.exceptions as ex


def johnson_order(pairs):
    """
    Johnson's rule for F2||Cmax: jobs shorter on the first machine in
    ascending order of their first machine time, then the rest in descending
    order of their second machine time. Ties are broken by the key

    :param pairs: (list(tuple(int, int, int))) (key, p1, p2)
    :return: (list(int)) Keys in processing order
    """
    first = sorted((p for p in pairs if p[1] < p[2]),
                   key=lambda p: (p[1], p[0]))
    second = sorted((p for p in pairs if p[1] >= p[2]),
                    key=lambda p: (-p[2], p[0]))

    return [key for key, _, _ in first + second]


def flow_makespan(pairs, order):
    """Makespan of a permutation flow shop schedule on two machines"""
    by_key = {key: (p1, p2) for key, p1, p2 in pairs}
    first_done = second_done = 0

    for key in order:
        p1, p2 = by_key[key]
        first_done += p1
        second_done = max(first_done, second_done) + p2

    return second_done


def _check_two_machine(jobs, flow=False):
    """Jobs with at most two operations on distinct machines of M1, M2"""

    for job in jobs:
        machines = job.machines

        if (len(machines) > 2 or len(set(machines)) != len(machines)
                or any(machine not in (0, 1) for machine in machines)):
            raise ex.SchedulerNotApplicable(f'{job} is not a two machine job '
                                            f'with at most two operations')

        if flow and machines == [1, 0]:
            raise ex.SchedulerNotApplicable(f'{job} is not processed in the '
                                            f'flow order M1 -> M2')
    return None


def _sequences(jobs, *orders):
    """Machine and job sequences from ordered groups of job ids, processing
    each machine's operations group after group"""
    by_id = {job.job_id: job for job in jobs}
    machine_sequences = {0: [], 1: []}

    for machine, groups in ((0, orders), (1, orders[::-1])):
        for order in groups:
            for j in order:
                if machine in by_id[j].machines:
                    machine_sequences[machine].append(
                        (j, by_id[j].op_index(machine)))

    job_sequences = {job.job_id: list(range(len(job))) for job in jobs}
    return machine_sequences, job_sequences


def _pairs(jobs, first, second):
    return [(job.job_id, job.load(first), job.load(second)) for job in jobs]


def schedule_johnson_f2(jobs):
    """
    Optimal two machine flow shop schedule by Johnson's rule

    :param jobs: (list(shoppath.jobs.Job)) Processed on M1 then M2
    :return: (shoppath.schedules.Schedule)
    """
    _check_two_machine(jobs, flow=True)
    order = johnson_order(_pairs(jobs, 0, 1))

    # Both machines process the jobs in the same order
    machine_sequences, job_sequences = _sequences(jobs, order)
    return Schedule.from_sequences(jobs, machine_sequences, job_sequences)


def _jackson_groups(jobs):
    """Jobs starting on M1 (J12, including M1-only jobs) and starting on M2
    (J21, including M2-only jobs)"""
    j12 = [job for job in jobs if len(job) > 0 and job.machines[0] == 0]
    j21 = [job for job in jobs if len(job) > 0 and job.machines[0] == 1]
    return j12, j21


def schedule_jackson_j2(jobs):
    """
    Optimal J2|op≤2|Cmax schedule by Jackson's rule. Jobs starting on M1
    (J12) and on M2 (J21) are each ordered by Johnson's rule; M1 processes
    J12 then J21 and M2 processes J21 then J12. A single operation job is
    treated as having a zero length second operation on the other machine

    :param jobs: (list(shoppath.jobs.Job))
    :return: (shoppath.schedules.Schedule)
    """
    _check_two_machine(jobs)
    j12, j21 = _jackson_groups(jobs)

    order12 = johnson_order(_pairs(j12, 0, 1))
    order21 = johnson_order(_pairs(j21, 1, 0))

    machine_sequences, job_sequences = _sequences(jobs, order12, order21)
    return Schedule.from_sequences(jobs, machine_sequences, job_sequences)


def jackson_order_bound(jobs):
    """
    Makespans of Johnson's rule after forcing every job to be processed in
    the order M1 -> M2 (C¹) and M2 -> M1 (C²). Jackson's rule is never worse
    than the larger of the two

    :param jobs: (list(shoppath.jobs.Job))
    :return: (tuple(int, int)) (C¹, C²)
    """
    _check_two_machine(jobs)

    forward, backward = _pairs(jobs, 0, 1), _pairs(jobs, 1, 0)
    return (flow_makespan(forward, johnson_order(forward)),
            flow_makespan(backward, johnson_order(backward)))


def schedule_dense_job(jobs, m):
    """
    Dense job shop schedule by greedy list scheduling of the next pending
    operation of every job

    :param jobs: (list(shoppath.jobs.Job))
    :param m: (int) Number of machines
    :return: (shoppath.schedules.Schedule)
    """
    for job in jobs:
        if any(machine >= m for machine in job.machines):
            raise ex.SchedulerNotApplicable(f'{job} uses a machine ≥ {m}')

    return dense_schedule(jobs, m, ordered=True)
