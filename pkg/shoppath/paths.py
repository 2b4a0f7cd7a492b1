import logging
from fractions import Fraction
from heapq import heappush, heappop
import numpy as np
import shoppath.exceptions as ex

logger = logging.getLogger(__name__)

int64_max = np.iinfo(np.int64).max


class WeightVectorMap:

    def __str__(self):
        return f'WeightVectorMap(n={self.n}, K={self.K})'

    def __getitem__(self, arc_id):
        """K-vector of weights of an arc as a tuple of ints"""
        return tuple(int(w) for w in self.weights[arc_id])

    def __len__(self):
        return self.n

    @property
    def n(self):
        return self.weights.shape[0]

    @property
    def K(self):
        return self.weights.shape[1]

    @property
    def W(self):
        """Largest total weight of any criterion, bounding every label"""
        if self.n == 0:
            return 0
        return max(int(w) for w in self.weights.sum(axis=0))

    def sums(self, path):
        """Total weight of a path for every criterion"""
        if len(path) == 0:
            return self.K * (0,)

        return tuple(int(w) for w in self.weights[list(path)].sum(axis=0))

    def value(self, path):
        """Min-max objective of a path: max_k Σ_{a_j ∈ P} w^k_j"""
        return max(self.sums(path), default=0)

    def blocked(self, arc_ids, big_weight):
        """
        Copy of this map with all the weights of some arcs set to a large
        value, so they are avoided by a min-max path

        :param arc_ids: (iterable(int))
        :param big_weight: (int)
        :return: (shoppath.paths.WeightVectorMap)
        """
        weights = self.weights.copy()
        weights[list(arc_ids)] = int(big_weight)
        return WeightVectorMap(weights)

    def summed(self):
        """Single criterion map of the total weight of each arc"""
        return WeightVectorMap(self.weights.sum(axis=1).reshape(-1, 1))

    def scaled(self, numerator, denominator):
        """Weights ⌊w·numerator/denominator⌋ computed exactly"""
        return WeightVectorMap([[int(w) * numerator // denominator
                                 for w in row] for row in self.weights])

    @staticmethod
    def _check(weights):
        """
        Weights must be non-negative integers in an (n, K) array and small
        enough to be summed in 64 bits

        :param weights: (np.ndarray) dtype=object
        """
        if weights.ndim != 2 or weights.shape[1] < 1:
            raise ex.InstanceNotValid('Weights must be an (n, K) array with '
                                      'K ≥ 1')

        for w in weights.flatten():
            if not isinstance(w, (int, np.integer)) or w < 0:
                raise ex.InstanceNotValid(f'Weight {w} is not a non-negative '
                                          f'integer')

        if sum(int(w) for w in weights.flatten()) > int64_max:
            raise ex.InstanceNotValid('Total weight overflows 64 bits')

        return None

    @classmethod
    def from_instance(cls, instance):
        """Weight vectors (μ_1j p_1j, .., μ_mj p_mj) of every job's arc"""
        if instance.n == 0:
            return cls(np.zeros(shape=(0, instance.m), dtype=np.int64))

        return cls(instance.loads())

    @classmethod
    def scalar(cls, weights):
        """Single criterion map from a list of weights"""
        return cls(np.array(weights, dtype=object).reshape(-1, 1))

    def __init__(self, weights):
        """
        K non-negative integer weights for every arc

        :param weights: (np.ndarray | list(list(int))) shape = (n, K) arcs as
                        rows, criteria as columns
        """
        weights = np.array(weights, dtype=object)

        # No arcs at all is a single criterion map
        if weights.size == 0 and weights.ndim < 2:
            weights = weights.reshape(-1, 1)

        self._check(weights)
        self.weights = weights.astype(np.int64)


class Label:

    def __repr__(self):
        return f'Label({self.vertex}, sums={self.sums}, flags={self.flags:b})'

    @property
    def arcs(self):
        """Arc ids of the partial path, reconstructed from predecessors"""

        if self._arcs is None:
            label, arcs = self, []
            while label.pred is not None:
                arcs.append(label.arc_id)
                label = label.pred

            self._arcs = tuple(reversed(arcs))

        return self._arcs

    def key(self):
        """Ordering used to pick between labels: (max, sums, arcs)"""
        return max(self.sums, default=0), self.sums, self.arcs

    def dominates(self, other):
        """
        Does this label dominate another at the same vertex? Any extension of
        the other label is then at least as good from this one: it has visited
        all the required arcs the other has, no vertex the other has not,
        and no larger sum. Equal sums are tie-broken on the arc sequence
        """
        if (self.flags | other.flags) != self.flags:
            return False

        if (self.visited | other.visited) != other.visited:
            return False

        if any(a > b for a, b in zip(self.sums, other.sums)):
            return False

        return self.sums != other.sums or self.arcs <= other.arcs

    def extend(self, arc_id, head, weights, flag):
        """
        New label from appending an arc to this partial path. A label with
        no visited vertices is part of a walk and never starts tracking them
        """
        visited = self.visited | (1 << head) if self.visited else 0

        return Label(vertex=head,
                     sums=tuple(a + w for a, w in zip(self.sums, weights)),
                     flags=self.flags | flag,
                     visited=visited,
                     pred=self,
                     arc_id=arc_id)

    def __init__(self, vertex, sums, flags=0, visited=0, pred=None,
                 arc_id=None):
        """
        Partial s-v path in the min-max dynamic programme

        :param vertex: (int) Vertex v the partial path ends at

        :param sums: (tuple(int)) Total weight per criterion

        :param flags: (int) Bit i is set iff required arc i is on the path

        :param visited: (int) Bit v is set iff vertex v is on the path, zero
                        if vertices are not tracked

        :param pred: (shoppath.paths.Label | None) Label this one extends

        :param arc_id: (int | None) Arc appended to the predecessor
        """
        self.vertex = vertex
        self.sums = sums
        self.flags = flags
        self.visited = visited
        self.pred = pred
        self.arc_id = arc_id

        self._arcs = None


class LabelSet:
    """Non-dominated labels S^u_v for every hop count u and vertex v"""

    def __len__(self):
        return sum(len(labels) for labels in self.cells.values())

    def __getitem__(self, item):
        return self.cells.get(item, [])

    def insert(self, u, label):
        """
        Add a label to S^u_v if no label there dominates it, removing any
        label it dominates

        :return: (bool) Was the label added
        """
        cell = self.cells.setdefault((u, label.vertex), [])

        if any(other.dominates(label) for other in cell):
            return False

        cell[:] = [other for other in cell if not label.dominates(other)]
        cell.append(label)
        return True

    def carry(self, u):
        """Initialise S^u_v as a copy of S^{u-1}_v for every vertex"""
        for (hop, vertex), labels in list(self.cells.items()):
            if hop == u - 1:
                self.cells[(u, vertex)] = list(labels)

        return None

    def __init__(self):
        self.cells = {}


def shortest_path(graph, weights):
    """
    Classic shortest s-t path with Dijkstra's algorithm. Ties between equal
    length paths are broken by the smallest arc id sequence

    :param graph: (shoppath.graphs.Graph)

    :param weights: (list(int)) Non-negative weight of every arc

    :return: (tuple(int) | None) Arc ids of the path, None if t is
             unreachable
    """
    if any(w < 0 for w in weights):
        raise ex.InstanceNotValid('Dijkstra requires non-negative weights')

    queue = [(0, (), graph.s)]
    settled = set()

    while len(queue) > 0:
        distance, path, vertex = heappop(queue)

        if vertex in settled:
            continue

        settled.add(vertex)
        if vertex == graph.t:
            return path

        for arc_id, head in graph.out_arcs(vertex):
            if head not in settled:
                heappush(queue, (distance + weights[arc_id],
                                 path + (arc_id,), head))

    return None


def shortcut_walk(graph, walk):
    """
    Remove the cycles of an s-t walk, leaving a simple path made of a subset
    of its arcs. With non-negative weights no sum increases

    :param graph: (shoppath.graphs.Graph)

    :param walk: (iterable(int)) Arc ids of the walk, in order

    :return: (tuple(int))
    """
    arcs, position = [], {graph.s: 0}

    for arc_id in walk:
        head = graph.head(arc_id)

        if head in position:
            del arcs[position[head]:]
            position = {v: i for v, i in position.items()
                        if i <= position[head]}
            continue

        arcs.append(arc_id)
        position[head] = len(arcs)

    return tuple(arcs)


def minmax_path_exact(graph, weight_map, required_arcs=()):
    """
    Exact min-max shortest path among the simple s-t paths visiting every
    required arc. Dynamic programme over (hop count, vertex) with labels
    holding the K partial sums and a visited flag per required arc, pruned by
    dominance.

    Without required arcs the labels are walks of at most |V| arcs and the
    best one is shortcut to a simple path, which keeps the number of labels
    bounded by the weights. With required arcs a shortcut could drop one, so
    labels also track their visited vertices and the search is exponential
    in |V| in the worst case

    :param graph: (shoppath.graphs.Graph)

    :param weight_map: (shoppath.paths.WeightVectorMap)

    :param required_arcs: (iterable(int)) Arc ids the path must contain

    :return: (tuple(int) | None) Arc ids of the path, None if no admissible
             path exists
    """
    required = sorted(set(required_arcs))
    flag_of = {arc_id: 1 << i for i, arc_id in enumerate(required)}
    all_flags = (1 << len(required)) - 1
    elementary = len(required) > 0
    W = weight_map.W

    label_set = LabelSet()
    frontier = [Label(graph.s, sums=weight_map.K * (0,),
                      visited=(1 << graph.s) if elementary else 0)]
    label_set.insert(0, frontier[0])

    for u in range(1, graph.vertex_count + 1):
        if len(frontier) == 0:
            break

        label_set.carry(u)
        added = []

        for label in frontier:

            # A path ending at t is complete and is never extended
            if label.vertex == graph.t:
                continue

            for arc_id, head in graph.out_arcs(label.vertex):
                if label.visited & (1 << head):
                    continue

                weights = weight_map[arc_id]
                if any(a + w > W for a, w in zip(label.sums, weights)):
                    continue

                new = label.extend(arc_id, head, weights,
                                   flag_of.get(arc_id, 0))
                if label_set.insert(u, new):
                    added.append(new)

        # Labels added then dominated within this hop are not extended
        frontier = [label for label in added
                    if label in label_set[(u, label.vertex)]]
        logger.debug(f'Hop {u}: {len(frontier)} new labels, '
                     f'{len(label_set)} stored')

    final_hop = max((hop for hop, vertex in label_set.cells
                     if vertex == graph.t), default=None)
    if final_hop is None:
        return None

    complete = [label for label in label_set[(final_hop, graph.t)]
                if label.flags == all_flags]
    if len(complete) == 0:
        return None

    best = min(complete, key=Label.key).arcs
    return best if elementary else shortcut_walk(graph, best)


def minmax_path_fptas(graph, weight_map, required_arcs=(), eps=Fraction(1, 4)):
    """
    Min-max shortest path within a factor (1 + eps) of the optimum among the
    simple s-t paths visiting every required arc. Weights are scaled and
    rounded down by θ = eps·L/(|V|-1) where L ≤ OPT is the min-max value of
    the path minimising the total weight, divided by K

    :param graph: (shoppath.graphs.Graph)

    :param weight_map: (shoppath.paths.WeightVectorMap)

    :param required_arcs: (iterable(int))

    :param eps: (Fraction | float) > 0

    :return: (tuple(int) | None)
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ex.InstanceNotValid('eps must be positive')

    # Minimising the sum over criteria is a K-approximation of the min-max
    summed_path = minmax_path_exact(graph, weight_map.summed(), required_arcs)
    if summed_path is None:
        return None

    upper = weight_map.value(summed_path)
    if upper == 0:
        return summed_path

    max_arcs = max(graph.vertex_count - 1, 1)
    theta = eps * Fraction(upper, weight_map.K) / max_arcs

    if theta <= 1:
        logger.debug(f'Scale factor {theta} ≤ 1, solving exactly')
        return minmax_path_exact(graph, weight_map, required_arcs)

    logger.debug(f'Scaling weights by 1/{theta}')
    scaled = weight_map.scaled(theta.denominator, theta.numerator)
    return minmax_path_exact(graph, scaled, required_arcs)
