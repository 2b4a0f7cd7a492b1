from shoppath.graphs import Graph
from shoppath.instances import Instance
from shoppath.jobs import Job
from shoppath.schedules import (Assignment, Schedule, SolveResult,
                                validate_schedule, validate_result)
from shoppath.exceptions import ShopPathCritical
import pytest


def o2_instance(*durations):
    """Open shop with two machines and one parallel s-t arc per job"""
    graph = Graph(2, arcs=[(i, 0, 1) for i in range(len(durations))],
                  s=0, t=1)
    return Instance('open', 2, graph, [Job.open(i, d)
                                       for i, d in enumerate(durations)])


def test_schedule():
    schedule = Schedule([(0, 1, 1, 3, 2), (0, 0, 0, 0, 3)])

    # Sorted by start time
    assert schedule.assignments[0] == Assignment(0, 0, 0, 0, 3)
    assert schedule.makespan == 5
    assert len(schedule) == 2
    assert schedule.job_ids == [0]
    assert schedule.on_machine(1) == [Assignment(0, 1, 1, 3, 2)]
    assert schedule.last_completed() == Assignment(0, 1, 1, 3, 2)

    assert Schedule().makespan == 0


def test_valid_schedule():
    instance = o2_instance([3, 2])
    schedule = Schedule([(0, 0, 0, 0, 3), (0, 1, 1, 3, 2)])

    report = validate_schedule(instance, [0], schedule)
    assert report.ok
    assert str(report) == 'ok'


def test_machine_overlap():
    instance = o2_instance([3, 0], [3, 0])
    schedule = Schedule([(0, 0, 0, 0, 3), (1, 0, 0, 0, 3),
                         (0, 1, 1, 0, 0), (1, 1, 1, 0, 0)])

    report = validate_schedule(instance, [0, 1], schedule)
    assert not report.ok
    assert report.kinds() == {'machine overlap'}


def test_job_overlap():
    instance = o2_instance([3, 2])
    schedule = Schedule([(0, 0, 0, 0, 3), (0, 1, 1, 1, 2)])

    assert validate_schedule(instance, [0], schedule).kinds() == {'job overlap'}


def test_op_order():
    graph = Graph(2, arcs=[(0, 0, 1)], s=0, t=1)
    instance = Instance('job', 2, graph, [Job(0, [(0, 2), (1, 2)])])

    # Chain M1 -> M2 processed the other way round
    schedule = Schedule([(0, 1, 1, 0, 2), (0, 0, 0, 2, 2)])

    report = validate_schedule(instance, [0], schedule)
    assert 'op order' in report.kinds()


def test_missing_and_unknown_ops():
    instance = o2_instance([3, 2], [1, 1])

    schedule = Schedule([(0, 0, 0, 0, 3)])
    assert 'missing op' in validate_schedule(instance, [0], schedule).kinds()

    schedule = Schedule([(0, 0, 0, 0, 3), (0, 1, 1, 3, 2), (1, 0, 0, 5, 1)])
    assert 'unknown job' in validate_schedule(instance, [0], schedule).kinds()

    schedule = Schedule([(0, 0, 0, 0, 3), (0, 1, 1, 3, 2), (0, 1, 1, 6, 2)])
    assert 'duplicate op' in validate_schedule(instance, [0], schedule).kinds()

    schedule = Schedule([(0, 0, 0, 0, 2), (0, 1, 1, 3, 2)])
    assert 'op mismatch' in validate_schedule(instance, [0], schedule).kinds()


def test_zero_durations_never_overlap():
    instance = o2_instance([3, 0])
    schedule = Schedule([(0, 0, 0, 0, 3), (0, 1, 1, 1, 0)])

    assert validate_schedule(instance, [0], schedule).ok


def test_from_sequences():
    jobs = [Job(0, [(0, 1), (1, 1)]), Job(1, [(1, 1), (0, 1)])]

    schedule = Schedule.from_sequences(jobs,
                                       machine_sequences={0: [(0, 0), (1, 1)],
                                                          1: [(1, 0), (0, 1)]},
                                       job_sequences={0: [0, 1], 1: [0, 1]})
    assert schedule.makespan == 2

    # Reversing both jobs gives a cycle of precedences
    with pytest.raises(ShopPathCritical):
        _ = Schedule.from_sequences(jobs,
                                    machine_sequences={0: [(0, 0), (1, 1)],
                                                       1: [(1, 0), (0, 1)]},
                                    job_sequences={0: [1, 0], 1: [1, 0]})


def test_solve_result():
    instance = o2_instance([3, 2], [1, 1])
    schedule = Schedule([(0, 0, 0, 0, 3), (0, 1, 1, 3, 2)])

    result = SolveResult([0], schedule, algorithm='test')
    assert result.job_set == (0,)
    assert result.makespan == 5
    assert result.trace == [5]
    assert validate_result(instance, result).ok

    # Two parallel arcs are not a path
    result = SolveResult([0, 1], schedule)
    assert validate_result(instance, result).kinds() == {'path'}

    result = SolveResult([0], schedule)
    result.makespan = 4
    assert validate_result(instance, result).kinds() == {'makespan'}

    result = SolveResult([0], Schedule(schedule.assignments, heuristic=True))
    assert 'heuristic' in result.notes
