from starsym.betti import (  # noqa: F401
    BettiTable,
    betti_from_set_sizes,
    betti_table,
    closed_betti_table,
    regularity,
    strand_closed,
    top_strand_closed,
)
from starsym.config import Config, OracleLimits  # noqa: F401
from starsym.core import StarParams, binomial, enumerate_subsets  # noqa: F401
from starsym.enum import Ordering, OutputFormat  # noqa: F401
from starsym.generators import (  # noqa: F401
    count_generators_in_degree,
    enumerate_generators,
    enumerate_module_generators,
    enumerate_partitions,
    mu,
    partition_of,
    sdefect,
)
from starsym.normalform import NormalForm, normal_form, sdeg  # noqa: F401
from starsym.order import set_elements, set_size, tau_compare  # noqa: F401
from starsym.verify import run_verification  # noqa: F401

__version__ = "0.1.0"

__all__ = [
    # Parameters and settings
    "StarParams",
    "Config",
    "OracleLimits",
    # Combinatorics
    "binomial",
    "enumerate_subsets",
    "enumerate_partitions",
    # Monomials
    "NormalForm",
    "normal_form",
    "sdeg",
    # Generators
    "enumerate_generators",
    "enumerate_module_generators",
    "partition_of",
    "count_generators_in_degree",
    "mu",
    "sdefect",
    # Order and colon sets
    "Ordering",
    "tau_compare",
    "set_elements",
    "set_size",
    # Betti tables
    "BettiTable",
    "betti_table",
    "betti_from_set_sizes",
    "closed_betti_table",
    "strand_closed",
    "top_strand_closed",
    "regularity",
    # Tooling
    "OutputFormat",
    "run_verification",
    # Version
    "__version__",
]
