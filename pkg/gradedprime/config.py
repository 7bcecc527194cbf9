import os
import logging
from contextlib import contextmanager
from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler

# --- Configuration ---
load_dotenv() # Load environment variables from a .env file

# Carriers are bit-sets over at most this many indices
HARD_MAX_ORDER = 64
MAX_ORDER = min(HARD_MAX_ORDER, int(os.getenv("GRADEDPRIME_MAX_ORDER", str(HARD_MAX_ORDER))))

# Enumeration configuration
ENUMERATION_BUDGET = int(os.getenv("GRADEDPRIME_ENUM_BUDGET", "20000"))  # Max additive subgroups explored per carrier
BUDGET_WARNING_RATIO = 0.8

# Harness configuration
WORKERS = max(1, int(os.getenv("GRADEDPRIME_WORKERS", "1")))  # Threads used by the harness and ideal filtering
FACTOR_BOUND = int(os.getenv("GRADEDPRIME_FACTOR_BOUND", "4"))  # Longest product searched when factoring ideals
CHAIN_LIMIT = int(os.getenv("GRADEDPRIME_CHAIN_LIMIT", "4096"))  # Max chains of primes walked per structure

# Logging configuration
LOG_LEVEL = os.getenv("GRADEDPRIME_LOG_LEVEL", "WARNING").upper()

# Logs go to stderr so documents written to stdout stay parseable
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.WARNING),
    format="%(name)s: %(message)s",
    handlers=[RichHandler(console=Console(stderr=True), show_time=False, show_path=False)],
)


# Set for the length of one CLI command; plain module state so worker threads see it too
_limits = {"budget": None, "workers": None}


@contextmanager
def enumeration_limits(budget=None, workers=None):
    """Use budget and workers as the defaults for every enumeration inside the block"""
    saved = dict(_limits)
    if budget is not None:
        _limits["budget"] = int(budget)
    if workers is not None:
        _limits["workers"] = max(1, int(workers))
    try:
        yield
    finally:
        _limits.update(saved)


def resolve_budget(budget=None):
    """Explicit budgets win over enumeration_limits, which wins over the environment"""
    if budget is not None:
        return int(budget)
    if _limits["budget"] is not None:
        return _limits["budget"]
    return ENUMERATION_BUDGET


def resolve_workers(workers=None):
    """Explicit worker counts win over enumeration_limits, which wins over the environment"""
    if workers is not None:
        return max(1, int(workers))
    if _limits["workers"] is not None:
        return _limits["workers"]
    return WORKERS
