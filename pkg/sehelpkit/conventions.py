from typing import *

__all__ = [
    "LOG_BASE",
    "PAIR_CONVENTION",
    "TIE_TOLERANCE",
    "DISTRIBUTION_TOLERANCE",
    "SIGMA_LIMIT",
    "REPORT_DECIMALS",
    "BRUTE_FORCE_MAX_NODES",
    "ORBIT_ORACLE_MAX_NODES",
    "MIN_LOSS_GRAPH_NODES",
    "conventions_block",
]


# Entropies are in nats; k = 1 in H = -k * sum(p log p).
LOG_BASE = "e"

# Every unordered pair {s, t} is counted twice, as (s, t) and (t, s).
PAIR_CONVENTION = "ordered"

# Relative tolerance under which two weighted path lengths are considered equal.
TIE_TOLERANCE = 1e-9

# Maximum deviation of sum(p) from 1 accepted by `shannon`.
DISTRIBUTION_TOLERANCE = 1e-12

# Path multiplicities are 64-bit-class counts.
SIGMA_LIMIT = 2 ** 64 - 1

REPORT_DECIMALS = 4

BRUTE_FORCE_MAX_NODES = 14
ORBIT_ORACLE_MAX_NODES = 10

MIN_LOSS_GRAPH_NODES = 3


def conventions_block() -> Dict[str, Any]:
    return {
        "log_base": LOG_BASE,
        "entropy_unit": "nats",
        "pair_convention": PAIR_CONVENTION,
        "tie_tolerance": TIE_TOLERANCE,
        "weight_semantics": "length",
        "partition": "degree",
        "sigma_limit": SIGMA_LIMIT,
    }
