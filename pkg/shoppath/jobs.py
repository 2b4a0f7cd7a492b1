import numpy as np
import shoppath.exceptions as ex


class Job:

    def __str__(self):
        ops_str = ",".join(f'M{machine}:{duration}'
                           for machine, duration in self.ops)
        return f'Job({self.job_id}, {ops_str})'

    def __repr__(self):
        return str(self)

    def __eq__(self, other):
        return (isinstance(other, Job)
                and self.job_id == other.job_id
                and self.ops == other.ops)

    def __hash__(self):
        return hash((self.job_id, self.ops))

    def __len__(self):
        return len(self.ops)

    @property
    def machines(self):
        """Machines visited by this job, in chain order. May have repeats"""
        return [machine for machine, _ in self.ops]

    @property
    def length(self):
        """Total processing time Σ_i μ_ij p_ij"""
        return sum(duration for _, duration in self.ops)

    @property
    def size(self):
        """Largest single operation, max_i p_ij. Used to order jobs by size"""
        return max((duration for _, duration in self.ops), default=0)

    def mu(self, machine):
        """Number of operations of this job on a machine (μ_ij)"""
        return sum(1 for m, _ in self.ops if m == machine)

    def load(self, machine):
        """Total processing time of this job on a machine (μ_ij p_ij)"""
        return sum(duration for m, duration in self.ops if m == machine)

    def loads(self, m):
        """
        Processing time of this job on every machine

        :param m: (int) Number of machines
        :return: (np.ndarray) shape = (m,)
        """
        loads = np.zeros(m, dtype=np.int64)

        for machine, duration in self.ops:
            loads[machine] += duration

        return loads

    def op_index(self, machine):
        """Index of the first operation of this job on a machine"""

        for k, (m, _) in enumerate(self.ops):
            if m == machine:
                return k

        raise ex.InstanceNotValid(f'{self} has no operation on M{machine}')

    def _check(self):
        """Operations must be (machine, duration) pairs of non-negative ints"""

        for machine, duration in self.ops:
            for value in (machine, duration):
                if not isinstance(value, (int, np.integer)) or value < 0:
                    raise ex.InstanceNotValid(f'Job {self.job_id} had an '
                                              f'invalid operation '
                                              f'({machine}, {duration})')
        return None

    @classmethod
    def open(cls, job_id, durations):
        """
        Open shop job with one operation per machine, in machine order

        :param job_id: (int)
        :param durations: (list(int)) Processing time on each machine
        :return: (shoppath.jobs.Job)
        """
        return cls(job_id, [(i, d) for i, d in enumerate(durations)])

    def __init__(self, job_id, ops):
        """
        Job corresponding to an arc of the graph. In an open shop the
        operations are one per machine and their order carries no meaning, in
        a job shop the operations are the processing chain

        :param job_id: (int) Identical to the arc id

        :param ops: (list(tuple(int, int))) (machine, duration) pairs
        """
        self.job_id = int(job_id)
        self.ops = tuple((int(machine), int(duration))
                         for machine, duration in ops)

        self._check()
