import logging
import math
from fractions import Fraction
from itertools import combinations
from shoppath.config import Config
from shoppath.instances import upper_bound
from shoppath.jobshop import schedule_jackson_j2, schedule_dense_job
from shoppath.openshop import (schedule_gs_o2, schedule_dense_open,
                               schedule_sw_om)
from shoppath.oracle import solve_exact
from shoppath.paths import WeightVectorMap, shortest_path, minmax_path_fptas
from shoppath.schedules import SolveResult
import shoppath.exceptions as ex

logger = logging.getLogger(__name__)


def _gs_o2(instance, jobs):
    return schedule_gs_o2(jobs)


def _dense_open(instance, jobs):
    return schedule_dense_open(jobs, instance.m)


def _jackson_j2(instance, jobs):
    return schedule_jackson_j2(jobs)


def _dense_job(instance, jobs):
    return schedule_dense_job(jobs, instance.m)


# Scheduler name -> (function(instance, jobs), shop kind, required m)
schedulers = {'gs_o2':      (_gs_o2, 'open', 2),
              'dense_open': (_dense_open, 'open', None),
              'jackson_j2': (_jackson_j2, 'job', 2),
              'dense_job':  (_dense_job, 'job', None)}


def check_scheduler(instance, name):
    """Raise if a shop scheduler can't be used on an instance"""

    if name not in schedulers:
        raise ex.SchedulerNotApplicable(f'Unknown scheduler {name}. Must be '
                                        f'one of {list(schedulers)}')

    _, shop_kind, m = schedulers[name]

    if instance.shop_kind != shop_kind:
        raise ex.SchedulerNotApplicable(f'{name} needs a {shop_kind} shop, '
                                        f'had a {instance.shop_kind} shop')

    if m is not None and instance.m != m:
        raise ex.SchedulerNotApplicable(f'{name} needs m={m}, had '
                                        f'm={instance.m}')
    return None


def run_scheduler(instance, name, path):
    """Schedule the jobs on a path with a named shop scheduler"""
    function, _, _ = schedulers[name]
    return function(instance, instance.jobs_for(sorted(path)))


def sar_rho(m, mu, alpha=None):
    """
    Control parameter ρ = ln ln(mμ) / (2α ln²(mμ)) of SAR, as an exact
    fraction. The formula is not positive for mμ < 3 where ρ = 1/2 is used

    :param m: (int) Number of machines
    :param mu: (int) Maximum number of operations of a job
    :param alpha: (float | None) Constant of the job shop scheduler bound
    :return: (Fraction)
    """
    alpha = Config.sar_alpha if alpha is None else alpha
    x = m * mu

    if x < 3:
        return Fraction(1, 2)

    rho = math.log(math.log(x)) / (2 * alpha * math.log(x)**2)
    return Fraction(rho).limit_denominator(10**6)


class UarConfig:

    def __str__(self):
        return (f'UarConfig({self.name}, {self.scheduler}, ρ={self.rho}, '
                f'ε={self.eps})')

    @classmethod
    def gar(cls, eps=None):
        """GS algorithm for O2 with ρ = 1: a FPTAS"""
        return cls('gs_o2', rho=1, eps=eps, name='gar', ratio=1)

    @classmethod
    def rar(cls, eps=None):
        """Rácsmány's dense open shop schedules with ρ = 1/2"""
        return cls('dense_open', rho=Fraction(1, 2), eps=eps, name='rar',
                   ratio=2)

    @classmethod
    def jjar(cls, eps=None):
        """Jackson's rule for J2|op≤2 with ρ = 2/3"""
        return cls('jackson_j2', rho=Fraction(2, 3), eps=eps, name='jjar',
                   ratio=Fraction(3, 2))

    @classmethod
    def sar(cls, m, mu, eps=None, alpha=None):
        """Dense job shop schedules with ρ set from m and μ"""
        return cls('dense_job', rho=sar_rho(m, mu, alpha), eps=eps, name='sar')

    @property
    def path_eps(self):
        """Accuracy of the min-max path calls. Divided by the ratio of the
        scheduler so the combined ratio is ratio + ε"""
        if self.ratio is None:
            return self.eps

        return self.eps / self.ratio

    def __init__(self, scheduler, rho, eps=None, name='uar', ratio=None):
        """
        Parameters of the iterative re-weighting scheme

        :param scheduler: (str) Key of shoppath.algorithms.schedulers

        :param rho: (Fraction | int) > 0. Jobs at least ρ times the current
                    makespan are blocked

        :param eps: (Fraction | None) Accuracy ε of the combined algorithm

        :param name: (str)

        :param ratio: (Fraction | int | None) Approximation ratio of the
                      scheduler, if it has one
        """
        self.scheduler = scheduler
        self.rho = Fraction(rho)
        self.eps = Fraction(Config.eps if eps is None else eps)
        self.name = name
        self.ratio = None if ratio is None else Fraction(ratio)

        if self.rho <= 0 or self.eps <= 0:
            raise ex.ShopPathCritical('ρ and ε must be positive')


def guaranteed_sae_n(m, eps):
    """
    Subset size N = m(m(3+ε)/ε)^(2^(m(3+ε)/ε)) that guarantees a (1+ε)
    approximation, evaluated in log space

    :param m: (int)
    :param eps: (Fraction)
    :return: (int | float) N rounded up, math.inf if it overflows 64 bits
    """
    x = m * (3 + Fraction(eps)) / Fraction(eps)

    try:
        log_n = math.log(m) + 2**float(x) * math.log(x)

    except OverflowError:
        return math.inf

    if log_n >= math.log(2**63 - 1):
        return math.inf

    if x.denominator == 1:
        return m * int(x)**(2**int(x))

    return math.ceil(math.exp(log_n))


class SaeConfig:

    def __str__(self):
        return f'SaeConfig(ε={self.eps}, N={self.n})'

    def subset_count(self, n_jobs):
        """Number of size-N subsets that will be iterated over"""
        if self.n > n_jobs:
            return 1

        return math.comb(n_jobs, self.n)

    @classmethod
    def guaranteed(cls, m, eps=None):
        """Configuration with the N that guarantees the approximation ratio"""
        eps = Fraction(Config.eps if eps is None else eps)
        return cls(eps=eps, n=guaranteed_sae_n(m, eps))

    def __init__(self, eps=None, n=None):
        """
        Parameters of the subset enumeration scheme

        :param eps: (Fraction | None)
        :param n: (int | None) Subset size N. Defaults to Config.sae_n_cap
        """
        self.eps = Fraction(Config.eps if eps is None else eps)
        self.n = Config.sae_n_cap if n is None else n

        if self.eps <= 0 or self.n < 0:
            raise ex.ShopPathCritical('Need ε > 0 and N ≥ 0')


def _path_or_raise(path):
    if path is None:
        raise ex.InfeasibleInstance('No s-t path in the graph')
    return path


def solve_sd(instance):
    """
    Shortest path with every arc weighted by the total processing time of
    its job, then a dense schedule of the jobs on it. At most m times the
    optimum

    :param instance: (shoppath.instances.Instance)
    :return: (shoppath.schedules.SolveResult)
    """
    weights = [job.length for job in instance.jobs]
    path = _path_or_raise(shortest_path(instance.graph, weights))

    if instance.is_open:
        scheduler = 'gs_o2' if instance.m == 2 else 'dense_open'
    else:
        scheduler = 'dense_job'

    schedule = run_scheduler(instance, scheduler, path)
    logger.info(f'SD path {list(path)} scheduled by {scheduler}, '
                f'makespan {schedule.makespan}')

    return SolveResult(path, schedule, algorithm='sd')


def solve_uar(instance, config):
    """
    Iterative re-weighting: find a near optimal min-max path with the m
    machine loads of each job as its weights, schedule its jobs, then while
    the path has no blocked job and one of its jobs is at least ρ times the
    makespan, block every such job by giving it a large weight and repeat.
    The best schedule found is returned. The trace holds the best makespan
    after every round and so is non-increasing

    :param instance: (shoppath.instances.Instance)
    :param config: (shoppath.algorithms.UarConfig)
    :return: (shoppath.schedules.SolveResult)
    """
    check_scheduler(instance, config.scheduler)

    if instance.m > Config.max_criteria:
        raise ex.InstanceTooLarge(f'm={instance.m} criteria exceeds the '
                                  f'min-max path limit of '
                                  f'{Config.max_criteria}')

    lengths = [job.length for job in instance.jobs]
    weight_map = WeightVectorMap.from_instance(instance)
    total = upper_bound(instance, range(instance.n))
    big_weight = math.floor((1 + config.path_eps) * total) + 1

    path = _path_or_raise(minmax_path_fptas(instance.graph, weight_map,
                                            eps=config.path_eps))
    schedule = run_scheduler(instance, config.scheduler, path)

    best_path, best_schedule = path, schedule
    trace, blocked = [schedule.makespan], set()

    while len(blocked.intersection(path)) == 0:
        threshold = config.rho * schedule.makespan

        if not any(lengths[j] >= threshold for j in path):
            break

        blocked.update(j for j in range(instance.n)
                       if j not in blocked and lengths[j] >= threshold)

        path = minmax_path_fptas(instance.graph,
                                 weight_map.blocked(blocked, big_weight),
                                 eps=config.path_eps)
        if path is None:
            break

        schedule = run_scheduler(instance, config.scheduler, path)
        if schedule.makespan < best_schedule.makespan:
            best_path, best_schedule = path, schedule

        trace.append(best_schedule.makespan)
        logger.info(f'{config.name} round {len(trace)}: |D|={len(blocked)}, '
                    f'C\'max={schedule.makespan}, '
                    f'best={best_schedule.makespan}')

    # Every round blocks at least one more job
    assert len(trace) - 1 <= instance.n

    return SolveResult(best_path, best_schedule, algorithm=config.name,
                       iterations=len(trace), trace=trace)


def solve_gar(instance, eps=None):
    """(1+ε)-approximation for O2|shortest path|Cmax"""
    return solve_uar(instance, UarConfig.gar(eps))


def solve_rar(instance, eps=None):
    """(2+ε)-approximation for Om|shortest path|Cmax"""
    return solve_uar(instance, UarConfig.rar(eps))


def solve_jjar(instance, eps=None):
    """(3/2+ε)-approximation for J2|op≤2, shortest path|Cmax"""
    return solve_uar(instance, UarConfig.jjar(eps))


def solve_sar(instance, eps=None, alpha=None):
    """Dense job shop scheduling within the re-weighting scheme"""
    return solve_uar(instance, UarConfig.sar(instance.m, instance.mu, eps,
                                             alpha))


def solve_sae(instance, config):
    """
    Subset enumeration for the open shop. For every set of N jobs, jobs
    outside it that are larger than its smallest job are blocked, a near
    optimal min-max path through all N jobs' arcs is found (accuracy ε/3)
    and its jobs are scheduled by splitting into large and small jobs. If
    no subset admits a path the SD result is returned with a note

    :param instance: (shoppath.instances.Instance)
    :param config: (shoppath.algorithms.SaeConfig)
    :return: (shoppath.schedules.SolveResult)
    """
    if not instance.is_open:
        raise ex.SchedulerNotApplicable('SAE schedules open shops only')

    if not instance.graph.has_st_path():
        raise ex.InfeasibleInstance('No s-t path in the graph')

    if instance.m > Config.max_criteria:
        raise ex.InstanceTooLarge(f'm={instance.m} criteria exceeds the '
                                  f'min-max path limit of '
                                  f'{Config.max_criteria}')

    n_subsets = config.subset_count(instance.n)
    if n_subsets > Config.sae_subset_budget:
        raise ex.InstanceTooLarge(f'{n_subsets} subsets of size {config.n} '
                                  f'exceed the budget of '
                                  f'{Config.sae_subset_budget}')

    sizes = [job.size for job in instance.jobs]
    weight_map = WeightVectorMap.from_instance(instance)
    total = upper_bound(instance, range(instance.n))
    big_weight = math.floor((1 + config.eps / 3) * total) + 1

    if config.n > instance.n:
        subsets = [tuple(range(instance.n))]
    else:
        subsets = combinations(range(instance.n), config.n)

    best_path, best_schedule, trace = None, None, []

    for subset in subsets:
        smallest = min((sizes[j] for j in subset), default=math.inf)
        blocked = [k for k in range(instance.n)
                   if k not in subset and sizes[k] > smallest]

        path = minmax_path_fptas(instance.graph,
                                 weight_map.blocked(blocked, big_weight),
                                 required_arcs=subset, eps=config.eps / 3)
        if path is None:
            logger.debug(f'No path through jobs {subset}')
            continue

        schedule = schedule_sw_om(instance.jobs_for(sorted(path)),
                                  instance.m, config.eps)

        if best_schedule is None or schedule.makespan < best_schedule.makespan:
            best_path, best_schedule = path, schedule
            logger.info(f'SAE subset {subset}: makespan {schedule.makespan}')

        trace.append(best_schedule.makespan)

    if best_schedule is None:
        logger.warning('No subset of jobs admits a path. Falling back to SD')
        result = solve_sd(instance)
        result.algorithm = 'sae'
        result.notes.append('fallback to sd')
        return result

    return SolveResult(best_path, best_schedule, algorithm='sae',
                       iterations=n_subsets, trace=trace)


algorithms = ('sd', 'gar', 'rar', 'jjar', 'sar', 'sae', 'oracle')


def solve(instance, alg, eps=None, sae_n=None, guaranteed_n=False):
    """
    Solve an instance with a named algorithm

    :param instance: (shoppath.instances.Instance)

    :param alg: (str) One of shoppath.algorithms.algorithms

    :param eps: (Fraction | None)

    :param sae_n: (int | None) Subset size for SAE

    :param guaranteed_n: (bool) Use the N that guarantees SAE's ratio

    :return: (shoppath.schedules.SolveResult)
    """
    if alg == 'sd':
        return solve_sd(instance)

    if alg == 'gar':
        return solve_gar(instance, eps)

    if alg == 'rar':
        return solve_rar(instance, eps)

    if alg == 'jjar':
        return solve_jjar(instance, eps)

    if alg == 'sar':
        return solve_sar(instance, eps)

    if alg == 'sae':
        if guaranteed_n:
            return solve_sae(instance, SaeConfig.guaranteed(instance.m, eps))
        return solve_sae(instance, SaeConfig(eps, n=sae_n))

    if alg == 'oracle':
        return solve_exact(instance)

    raise ex.SchedulerNotApplicable(f'Unknown algorithm {alg}. Must be one '
                                    f'of {algorithms}')
