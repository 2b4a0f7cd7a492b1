import networkx as nx
import shoppath.exceptions as ex


class Graph(nx.MultiDiGraph):
    """Directed multigraph whose arcs are keyed by their arc id"""

    def __str__(self):
        return (f'Graph(|V|={self.vertex_count}, |A|={self.arc_count}, '
                f's={self.s}, t={self.t})')

    @property
    def arc_count(self):
        return len(self.arc_ends)

    @property
    def arcs(self):
        """Ordered list of (arc_id, tail, head) tuples"""
        return [(arc_id, *self.arc_ends[arc_id])
                for arc_id in range(self.arc_count)]

    def tail(self, arc_id):
        return self.arc_ends[arc_id][0]

    def head(self, arc_id):
        return self.arc_ends[arc_id][1]

    def out_arcs(self, vertex):
        """
        Arcs leaving a vertex, sorted by arc id

        :param vertex: (int)
        :return: (list(tuple(int, int))) (arc_id, head) pairs
        """
        return sorted((key, head) for _, head, key
                      in self.out_edges(vertex, keys=True))

    def has_st_path(self):
        """Is there a directed path from s to t?"""
        return nx.has_path(self, self.s, self.t)

    def path_vertices(self, path):
        """
        Vertices visited by a sequence of arcs, starting from the tail of the
        first arc. Raises if consecutive arcs are not connected

        :param path: (list(int)) Arc ids
        :return: (list(int))
        """
        if len(path) == 0:
            return [self.s]

        vertices = [self.tail(path[0])]

        for arc_id in path:
            if self.tail(arc_id) != vertices[-1]:
                raise ex.InstanceNotValid(f'Arc {arc_id} does not continue '
                                          f'the path from {vertices[-1]}')
            vertices.append(self.head(arc_id))

        return vertices

    def is_simple_path(self, path):
        """Is a sequence of arc ids a simple directed s-t path?"""

        if any(not 0 <= arc_id < self.arc_count for arc_id in path):
            return False

        try:
            vertices = self.path_vertices(path)

        except ex.InstanceNotValid:
            return False

        return (len(path) > 0
                and vertices[0] == self.s
                and vertices[-1] == self.t
                and len(set(vertices)) == len(vertices))

    def add_arcs(self, arcs):
        """
        Add the vertices and (possibly parallel) arcs to the graph

        :param arcs: (list(tuple(int, int, int))) (arc_id, tail, head)
        """
        self.add_nodes_from(range(self.vertex_count))

        for arc_id, tail, head in arcs:

            if arc_id in self.arc_ends:
                raise ex.InstanceNotValid(f'Arc id {arc_id} is not unique')

            self.arc_ends[int(arc_id)] = (int(tail), int(head))
            self.add_edge(int(tail), int(head), key=int(arc_id))

        return None

    def _check(self):
        """Check the graph invariants"""

        if self.vertex_count < 1:
            raise ex.InstanceNotValid('A graph needs at least one vertex')

        if self.s == self.t:
            raise ex.InstanceNotValid('Source and sink must be different')

        for vertex in (self.s, self.t):
            if not 0 <= vertex < self.vertex_count:
                raise ex.InstanceNotValid(f'Vertex {vertex} not in graph')

        # Arc ids must be 0..n-1 so they can index the jobs
        if sorted(self.arc_ends) != list(range(self.arc_count)):
            raise ex.InstanceNotValid('Arc ids must be dense from 0')

        for arc_id, (tail, head) in self.arc_ends.items():
            if not (0 <= tail < self.vertex_count
                    and 0 <= head < self.vertex_count):
                raise ex.InstanceNotValid(f'Arc {arc_id} has an endpoint '
                                          f'outside the graph')
            if tail == head:
                raise ex.InstanceNotValid(f'Arc {arc_id} is a self-loop')

        return None

    def __init__(self, vertex_count, arcs, s, t):
        """
        Subclass of networkx.MultiDiGraph. Arcs are edges keyed by their arc
        id so parallel arcs are distinguished. Once initialised then calling
        self.add_edge() will break the arc mapping

        :param vertex_count: (int) Vertices are 0..vertex_count-1

        :param arcs: (list(tuple(int, int, int))) (arc_id, tail, head)

        :param s: (int) Source vertex

        :param t: (int) Sink vertex
        """
        super().__init__()

        self.vertex_count = int(vertex_count)
        self.s, self.t = int(s), int(t)

        self.arc_ends = {}                # Mapping from arc id -> (tail, head)
        self.add_arcs(arcs)

        self._check()
