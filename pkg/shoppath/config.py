from fractions import Fraction


class Config:
    """
    Default parameters. Read at call time so they can be changed globally
    e.g. Config.exact_op_limit = 14, or overridden per call with keyword
    arguments
    """
    # Accuracy of the min-max path FPTAS and the combination algorithms
    eps = Fraction(1, 4)

    # Maximum number of (searched) operations in the exact shop solver
    exact_op_limit = 12

    # Maximum number of simple s-t paths the oracle will enumerate
    path_limit = 10000

    # Largest subset size N used by SAE unless the guaranteed N is requested
    sae_n_cap = 3

    # Maximum number of size-N subsets SAE will iterate over
    sae_subset_budget = 5000

    # Constant of the job shop scheduler bound used to set SAR's rho
    sar_alpha = 1

    # Largest number of criteria (= machines) for a min-max path call
    max_criteria = 4

    @classmethod
    def as_dict(cls):
        """All the defaults as a dictionary, for echoing into reports"""
        return {'eps': str(cls.eps),
                'exact_op_limit': cls.exact_op_limit,
                'path_limit': cls.path_limit,
                'sae_n_cap': cls.sae_n_cap,
                'sae_subset_budget': cls.sae_subset_budget,
                'sar_alpha': cls.sar_alpha,
                'max_criteria': cls.max_criteria}
