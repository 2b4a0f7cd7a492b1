import logging
import networkx as nx
from shoppath.config import Config
from shoppath.exact import schedule_exact_small
from shoppath.instances import lower_bound
from shoppath.schedules import SolveResult
import shoppath.exceptions as ex

logger = logging.getLogger(__name__)


def enumerate_simple_paths(graph, limit=None):
    """
    All simple s-t paths of a graph, with parallel arcs giving distinct
    paths

    :param graph: (shoppath.graphs.Graph)

    :param limit: (int | None) Largest number of paths to enumerate

    :return: (list(tuple(int))) Arc id sequences, sorted lexicographically
    """
    limit = Config.path_limit if limit is None else limit
    paths = []

    for edges in nx.all_simple_edge_paths(graph, graph.s, graph.t):
        paths.append(tuple(key for _, _, key in edges))

        if len(paths) > limit:
            raise ex.InstanceTooLarge(f'More than {limit} simple s-t paths')

    logger.info(f'Enumerated {len(paths)} simple s-t paths')
    return sorted(paths)


def solve_exact(instance, path_limit=None, op_limit=None):
    """
    Optimal solution by scheduling the jobs of every simple s-t path
    exactly. Paths whose lower bound can't beat the incumbent are skipped,
    ties go to the lexicographically smallest path

    :param instance: (shoppath.instances.Instance)

    :param path_limit: (int | None) See enumerate_simple_paths

    :param op_limit: (int | None) See shoppath.exact.schedule_exact_small

    :return: (shoppath.schedules.SolveResult)
    """
    paths = enumerate_simple_paths(instance.graph, limit=path_limit)

    if len(paths) == 0:
        raise ex.InfeasibleInstance('No s-t path in the graph')

    best_path, best_schedule = None, None

    for path in paths:
        if (best_schedule is not None
                and lower_bound(instance, path) >= best_schedule.makespan):
            continue

        schedule = schedule_exact_small(instance.jobs_for(sorted(path)),
                                        m=instance.m,
                                        shop_kind=instance.shop_kind,
                                        op_limit=op_limit)

        if best_schedule is None or schedule.makespan < best_schedule.makespan:
            best_path, best_schedule = path, schedule

    return SolveResult(best_path, best_schedule, algorithm='oracle',
                       iterations=len(paths))
