from shoppath.jobs import Job
from shoppath.graphs import Graph
from shoppath.instances import Instance, lower_bound, upper_bound
from shoppath.schedules import (Schedule, SolveResult, validate_schedule,
                                validate_result)
from shoppath.paths import (WeightVectorMap, shortest_path, minmax_path_exact,
                            minmax_path_fptas)
from shoppath.algorithms import (UarConfig, SaeConfig, solve, solve_sd,
                                 solve_uar, solve_sae)
from shoppath.oracle import solve_exact
from shoppath.generate import (ThreeDMInstance, generate_from_3dm,
                               generate_random)
from shoppath.data import load_instance, save_instance

__all__ = ['Job',
           'Graph',
           'Instance',
           'lower_bound',
           'upper_bound',
           'Schedule',
           'SolveResult',
           'validate_schedule',
           'validate_result',
           'WeightVectorMap',
           'shortest_path',
           'minmax_path_exact',
           'minmax_path_fptas',
           'UarConfig',
           'SaeConfig',
           'solve',
           'solve_sd',
           'solve_uar',
           'solve_sae',
           'solve_exact',
           'ThreeDMInstance',
           'generate_from_3dm',
           'generate_random',
           'load_instance',
           'save_instance']
