"""
VerificationControl Module

This module defines the `VerificationControl` class, which holds the configuration of a
verification run: which suite is run and over which bounds.

The suites are:
- "relations": 2·m(center) = Σ m(middle) at every site, with the parity flip of every move
- "oracle-vs-closed": relation oracle against the closed multiplicity formula
- "identities": the binomial identities behind the multiplicity recursion
- "covariant": superdimension of covariant modules against their Gl(m) × Gl(n) decomposition
- "hilbert": self-Ext dimensions against the Hilbert series of k[ζ_2, …, ζ_{2n}]
- "berezin": superdimensions of the powers of the Berezin
- "algorithm-iv": middle sets of the Kostant chains
- "factorial": completely unnested diagrams have multiplicity n!

Classes:
    - `VerificationControl`: Suite selection, bounds and worker count.
"""

from typing import Literal, Optional, get_args

SuiteName = Literal[
    "relations",
    "oracle-vs-closed",
    "identities",
    "covariant",
    "hilbert",
    "berezin",
    "algorithm-iv",
    "factorial",
]
SUITES: tuple[str, ...] = get_args(SuiteName)

MAX_N = 6
MAX_WINDOW_SPAN = 16
MAX_IDENTITY_BOUND = 200
MAX_J = 40


class VerificationControl:
    """
    A class that manages the configuration of a verification run.

    Attributes:
        suite (str): The suite to run, one of `SUITES`.
        window (tuple[int, int]): Inclusive window of the exhaustive ∨ subsets.
        max_n (int): Largest number of ∨ in the exhaustive checks.
        factorial_n (int): Largest number of ∨ in "factorial".
        samples (int): Number of random diagrams in "oracle-vs-closed".
        sample_n (int): Number of ∨ of the random diagrams.
        sample_window (tuple[int, int]): Window of the random diagrams.
        seed (int): Seed of the random samples.
        identity_bound (int): Largest argument in "identities".
        j_max (int): Largest degree in "hilbert".
        covariant_degree (int): Largest partition degree in "covariant".
        covariant_shapes (tuple[tuple[int, int], ...]): (m, n) pairs of "covariant".
        berezin_rank (int): Largest m in "berezin".
        berezin_power (int): Largest |k| in "berezin".
        workers (int): Number of worker threads.
    """

    def __init__(self):
        """
        Initializes the VerificationControl with default parameters.
        """
        self.suite: str = "relations"
        self.window = (0, 9)
        self.max_n = 4
        self.factorial_n = MAX_N
        self.samples = 200
        self.sample_n = 5
        self.sample_window = (0, 13)
        self.seed = 0
        self.identity_bound = 20
        self.j_max = 12
        self.covariant_degree = 8
        self.covariant_shapes = ((2, 1), (3, 1), (3, 2), (2, 2))
        self.berezin_rank = 3
        self.berezin_power = 3
        self.workers = 1

    def set_suite(self, suite: SuiteName):
        """
        Selects the suite.

        Raises:
            ValueError: If the suite is unknown.
        """
        if suite not in SUITES:
            raise ValueError(f"unknown suite '{suite}', choose one of {', '.join(SUITES)}")
        self.suite = suite

    def set_window(self, lower: int, upper: int):
        """
        Sets the window of the exhaustive checks.

        Raises:
            ValueError: If upper < lower or the span exceeds the documented limit.
        """
        _check_window(lower, upper)
        self.window = (lower, upper)

    def set_max_n(self, max_n: int):
        """
        Sets the largest number of ∨ of the exhaustive checks.

        Raises:
            ValueError: If max_n is not in [1, 6].
        """
        if not 1 <= max_n <= MAX_N:
            raise ValueError(f"max_n must lie in [1, {MAX_N}], got {max_n}")
        self.max_n = max_n

    def set_factorial_n(self, factorial_n: int):
        if not 1 <= factorial_n <= MAX_N:
            raise ValueError(f"factorial_n must lie in [1, {MAX_N}], got {factorial_n}")
        self.factorial_n = factorial_n

    def set_samples(
        self,
        samples: int,
        sample_n: Optional[int] = None,
        sample_window: Optional[tuple[int, int]] = None,
        seed: Optional[int] = None,
    ):
        """
        Configures the random diagrams of "oracle-vs-closed".

        Args:
            samples (int): Number of random diagrams, ≥ 0.
            sample_n (Optional[int]): Number of ∨ per diagram.
            sample_window (Optional[tuple[int, int]]): Window of the random diagrams.
            seed (Optional[int]): Random seed.

        Raises:
            ValueError: If a value is out of range.
        """
        if samples < 0:
            raise ValueError(f"samples must be non-negative, got {samples}")
        self.samples = samples
        if sample_n is not None:
            if not 1 <= sample_n <= MAX_N:
                raise ValueError(f"sample_n must lie in [1, {MAX_N}], got {sample_n}")
            self.sample_n = sample_n
        if sample_window is not None:
            _check_window(*sample_window)
            self.sample_window = tuple(sample_window)
        if self.sample_window[1] - self.sample_window[0] + 1 < self.sample_n:
            raise ValueError("the sample window is too small for sample_n labels")
        if seed is not None:
            self.seed = seed

    def set_identity_bound(self, bound: int):
        if not 1 <= bound <= MAX_IDENTITY_BOUND:
            raise ValueError(f"identity bound must lie in [1, {MAX_IDENTITY_BOUND}], got {bound}")
        self.identity_bound = bound

    def set_hilbert_bounds(self, max_n: int, j_max: int):
        """
        Sets the bounds of "hilbert".

        Raises:
            ValueError: If max_n is not in [1, 6] or j_max is not in [0, 40].
        """
        self.set_max_n(max_n)
        if not 0 <= j_max <= MAX_J:
            raise ValueError(f"j_max must lie in [0, {MAX_J}], got {j_max}")
        self.j_max = j_max

    def set_covariant(self, degree: int, shapes: Optional[tuple[tuple[int, int], ...]] = None):
        if degree < 0:
            raise ValueError(f"degree must be non-negative, got {degree}")
        self.covariant_degree = degree
        if shapes is not None:
            if any(m < n or n < 0 or m < 1 for m, n in shapes):
                raise ValueError(f"shapes must satisfy m >= n >= 0, m >= 1, got {shapes}")
            self.covariant_shapes = tuple(shapes)

    def set_berezin(self, rank: int, power: int):
        if not 1 <= rank <= MAX_N or power < 0:
            raise ValueError(f"need 1 <= rank <= {MAX_N} and power >= 0")
        self.berezin_rank = rank
        self.berezin_power = power

    def set_workers(self, workers: int):
        if workers < 1:
            raise ValueError(f"workers must be at least 1, got {workers}")
        self.workers = workers


def _check_window(lower: int, upper: int):
    if upper < lower:
        raise ValueError(f"window [{lower}, {upper}] is empty")
    if upper - lower + 1 > MAX_WINDOW_SPAN:
        raise ValueError(
            f"window [{lower}, {upper}] spans more than {MAX_WINDOW_SPAN} positions"
        )
