from shoppath.generate import (generate_random, generate_from_3dm,
                               ThreeDMInstance)
from shoppath.graphs import Graph
from shoppath.instances import Instance
from shoppath.jobs import Job
from shoppath.openshop import gs_o2_makespan
from shoppath.oracle import enumerate_simple_paths, solve_exact
from shoppath.schedules import validate_result
from shoppath.exceptions import InfeasibleInstance, InstanceTooLarge
import pytest


def count_paths(graph, vertex=None, visited=()):
    """Number of simple paths from a vertex to t, counted recursively"""
    vertex = graph.s if vertex is None else vertex
    if vertex == graph.t:
        return 1

    return sum(count_paths(graph, head, visited + (vertex,))
               for _, head in graph.out_arcs(vertex)
               if head not in visited and head != vertex)


def test_enumerate_parallel():
    graph = Graph(2, arcs=[(0, 0, 1), (1, 0, 1)], s=0, t=1)
    assert enumerate_simple_paths(graph) == [(0,), (1,)]

    with pytest.raises(InstanceTooLarge):
        _ = enumerate_simple_paths(graph, limit=1)


def test_enumerate_diamond():
    graph = Graph(4, arcs=[(0, 0, 1), (1, 0, 2), (2, 1, 3), (3, 2, 3)],
                  s=0, t=3)
    assert enumerate_simple_paths(graph) == [(0, 2), (1, 3)]

    # A cycle back to s doesn't give any more simple paths
    graph = Graph(3, arcs=[(0, 0, 1), (1, 1, 0), (2, 1, 2)], s=0, t=2)
    assert enumerate_simple_paths(graph) == [(0, 2)]


def test_enumerate_3dm_gadget():
    tdm = ThreeDMInstance(n=1, triples=[(0, 0, 0), (0, 0, 0)])
    graph = generate_from_3dm(tdm).graph

    paths = enumerate_simple_paths(graph)
    assert len(paths) == 4 == count_paths(graph)
    assert all(graph.is_simple_path(path) for path in paths)


def test_enumerate_random():

    for seed in range(20):
        graph = generate_random(6, 10, m=2, seed=seed,
                                topology='uniform').graph
        assert len(enumerate_simple_paths(graph)) == count_paths(graph)


def test_solve_exact():
    graph = Graph(2, arcs=[(0, 0, 1), (1, 0, 1)], s=0, t=1)
    instance = Instance('open', 2, graph, [Job.open(0, [5, 0]),
                                           Job.open(1, [3, 3])])

    result = solve_exact(instance)
    assert result.path == (0,)
    assert result.makespan == 5
    assert result.algorithm == 'oracle'
    assert result.iterations == 2
    assert validate_result(instance, result).ok


def test_solve_exact_o2():

    for seed in range(20):
        instance = generate_random(5, 8, m=2, seed=seed)
        result = solve_exact(instance)

        assert validate_result(instance, result).ok
        assert result.makespan == min(
            gs_o2_makespan(instance.jobs_for(path))
            for path in enumerate_simple_paths(instance.graph))


def test_solve_exact_fewer_arcs():

    for seed in range(10):
        instance = generate_random(5, 8, m=2, shop='job', seed=seed)
        optimum = solve_exact(instance).makespan

        # Removing an arc can only remove paths
        graph = Graph(instance.graph.vertex_count, instance.graph.arcs[:-1],
                      s=instance.graph.s, t=instance.graph.t)
        if not graph.has_st_path():
            continue

        fewer = Instance('job', 2, graph, instance.jobs[:-1])
        assert solve_exact(fewer).makespan >= optimum


def test_solve_exact_infeasible():
    graph = Graph(3, arcs=[(0, 0, 1), (1, 2, 1)], s=0, t=2)
    instance = Instance('open', 1, graph, [Job.open(0, [1]),
                                           Job.open(1, [1])])

    with pytest.raises(InfeasibleInstance):
        _ = solve_exact(instance)
