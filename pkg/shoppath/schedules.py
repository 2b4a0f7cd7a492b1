from collections import namedtuple, defaultdict
import networkx as nx
import shoppath.exceptions as ex


Assignment = namedtuple('Assignment',
                        ['job_id', 'op_index', 'machine', 'start', 'duration'])

Violation = namedtuple('Violation', ['kind', 'subject', 'assignments'])


def finish(assignment):
    return assignment.start + assignment.duration


class Schedule:

    def __str__(self):
        return f'Schedule(n_ops={len(self)}, makespan={self.makespan})'

    def __eq__(self, other):
        return (isinstance(other, Schedule)
                and self.assignments == other.assignments)

    def __len__(self):
        return len(self.assignments)

    def __iter__(self):
        return iter(self.assignments)

    @property
    def makespan(self):
        """Completion time of the last operation, 0 for an empty schedule"""
        return max((finish(a) for a in self.assignments), default=0)

    @property
    def job_ids(self):
        return sorted(set(a.job_id for a in self.assignments))

    def on_machine(self, machine):
        """Assignments on a machine, ordered by start time"""
        return sorted((a for a in self.assignments if a.machine == machine),
                      key=lambda a: (a.start, finish(a), a.job_id))

    def last_completed(self):
        """Assignment that finishes last, ties broken by machine index"""
        return max(self.assignments,
                   key=lambda a: (finish(a), a.duration, -a.machine))

    @classmethod
    def from_sequences(cls, jobs, machine_sequences, job_sequences,
                       heuristic=False):
        """
        Semi-active schedule from a sequencing of the operations on every
        machine and within every job. Start times are the longest paths in
        the resulting disjunctive graph

        :param jobs: (list(shoppath.jobs.Job))

        :param machine_sequences: (dict(int, list(tuple(int, int)))) Machine
                                  -> ordered (job_id, op_index) pairs

        :param job_sequences: (dict(int, list(int))) Job id -> ordered op
                              indexes. Operations not listed are unconstrained

        :return: (shoppath.schedules.Schedule)
        """
        jobs_by_id = {job.job_id: job for job in jobs}
        durations = {(job.job_id, k): duration
                     for job in jobs for k, (_, duration) in enumerate(job.ops)}

        dag = nx.DiGraph()
        dag.add_nodes_from(sorted(durations))

        for sequence in machine_sequences.values():
            for op, next_op in zip(sequence, sequence[1:]):
                dag.add_edge(op, next_op)

        for job_id, order in job_sequences.items():
            for k, next_k in zip(order, order[1:]):
                dag.add_edge((job_id, k), (job_id, next_k))

        try:
            ordered_ops = list(nx.topological_sort(dag))

        except nx.NetworkXUnfeasible:
            raise ex.ShopPathCritical('Operation sequences contain a cycle')

        starts = {}
        for op in ordered_ops:
            starts[op] = max((starts[prev] + durations[prev]
                              for prev in dag.predecessors(op)), default=0)

        assignments = []
        for (job_id, k), start in starts.items():
            machine, duration = jobs_by_id[job_id].ops[k]
            assignments.append(Assignment(job_id, k, machine, start, duration))

        return cls(assignments, heuristic=heuristic)

    def __init__(self, assignments=(), heuristic=False):
        """
        Timed operation assignments

        :param assignments: (iterable(shoppath.schedules.Assignment |
                            tuple(int, int, int, int, int)))

        :param heuristic: (bool) Was a guaranteed scheduler replaced by a
                          heuristic when producing this schedule
        """
        self.assignments = sorted(
            (Assignment(*(int(value) for value in item))
             for item in assignments),
            key=lambda a: (a.start, a.machine, a.job_id, a.op_index))

        self.heuristic = heuristic


class SolveResult:

    def __str__(self):
        return (f'SolveResult({self.algorithm}, path={list(self.path)}, '
                f'makespan={self.makespan})')

    def __eq__(self, other):
        return (isinstance(other, SolveResult)
                and self.path == other.path
                and self.schedule == other.schedule
                and self.makespan == other.makespan)

    def __init__(self, path, schedule, algorithm='', iterations=1,
                 trace=None, notes=None):
        """
        Chosen path, the jobs on it, their schedule and its makespan

        :param path: (iterable(int)) Arc ids from s to t

        :param schedule: (shoppath.schedules.Schedule)

        :param algorithm: (str) Name of the algorithm that produced this

        :param iterations: (int) Number of path/schedule rounds

        :param trace: (list(int)) Makespan found in every round

        :param notes: (list(str)) e.g. fallbacks taken
        """
        self.path = tuple(int(arc_id) for arc_id in path)
        self.job_set = self.path
        self.schedule = schedule
        self.makespan = schedule.makespan

        self.algorithm = algorithm
        self.iterations = iterations
        self.trace = list(trace) if trace is not None else [self.makespan]
        self.notes = list(notes) if notes is not None else []

        if schedule.heuristic and 'heuristic' not in self.notes:
            self.notes.append('heuristic')


class ValidationReport:

    def __str__(self):
        if self.ok:
            return 'ok'

        return '\n'.join(f'{v.kind}: {v.subject} {list(v.assignments)}'
                         for v in self.violations)

    @property
    def ok(self):
        return len(self.violations) == 0

    def kinds(self):
        return set(v.kind for v in self.violations)

    def add(self, kind, subject, *assignments):
        self.violations.append(Violation(kind, subject, tuple(assignments)))
        return None

    def __init__(self):
        self.violations = []


def _overlaps(report, kind, groups):
    """Add a violation for every pair of overlapping positive intervals"""

    for subject, assignments in sorted(groups.items()):

        # Zero duration operations occupy no time so can't overlap
        intervals = sorted((a for a in assignments if a.duration > 0),
                           key=lambda a: (a.start, finish(a)))

        for i, a in enumerate(intervals):
            for b in intervals[i+1:]:
                if b.start >= finish(a):
                    break
                report.add(kind, subject, a, b)

    return None


def validate_schedule(instance, job_set, schedule):
    """
    Check a schedule of a set of jobs is feasible: every operation appears
    exactly once with its machine and duration, machines and jobs process one
    operation at a time and job shop chains are respected

    :param instance: (shoppath.instances.Instance)

    :param job_set: (iterable(int)) Job ids that should be scheduled

    :param schedule: (shoppath.schedules.Schedule)

    :return: (shoppath.schedules.ValidationReport)
    """
    report = ValidationReport()
    job_set = set(job_set)
    placed = defaultdict(list)

    for a in schedule:
        if a.job_id not in job_set:
            report.add('unknown job', f'J{a.job_id}', a)
            continue

        job = instance.jobs[a.job_id]
        if not 0 <= a.op_index < len(job):
            report.add('unknown op', f'J{a.job_id}', a)
            continue

        if (a.machine, a.duration) != job.ops[a.op_index]:
            report.add('op mismatch', f'J{a.job_id}', a)

        if a.start < 0:
            report.add('negative start', f'J{a.job_id}', a)

        placed[(a.job_id, a.op_index)].append(a)

    for j in sorted(job_set):
        for k in range(len(instance.jobs[j])):
            if len(placed[(j, k)]) == 0:
                report.add('missing op', f'J{j}', )
            elif len(placed[(j, k)]) > 1:
                report.add('duplicate op', f'J{j}', *placed[(j, k)])

    by_machine, by_job = defaultdict(list), defaultdict(list)
    for a in schedule:
        if a.job_id in job_set:
            by_machine[f'M{a.machine}'].append(a)
            by_job[f'J{a.job_id}'].append(a)

    _overlaps(report, 'machine overlap', by_machine)
    _overlaps(report, 'job overlap', by_job)

    # Chains in a job shop must be processed in order
    if not instance.is_open:
        for j in sorted(job_set):
            for k in range(len(instance.jobs[j]) - 1):
                if len(placed[(j, k)]) == 0 or len(placed[(j, k+1)]) == 0:
                    continue

                a, b = placed[(j, k)][0], placed[(j, k+1)][0]
                if b.start < finish(a):
                    report.add('op order', f'J{j}', a, b)

    return report


def validate_result(instance, result):
    """
    Check a solve result: the path is a simple s-t path, its jobs are the job
    set and the schedule of them is feasible with a consistent makespan

    :param instance: (shoppath.instances.Instance)
    :param result: (shoppath.schedules.SolveResult)
    :return: (shoppath.schedules.ValidationReport)
    """
    if not instance.graph.is_simple_path(result.path):
        report = ValidationReport()
        report.add('path', f'{list(result.path)} is not a simple s-t path')
        return report

    report = validate_schedule(instance, result.path, result.schedule)

    if result.makespan != result.schedule.makespan:
        report.add('makespan', f'declared {result.makespan} but schedule '
                               f'finishes at {result.schedule.makespan}')

    return report
