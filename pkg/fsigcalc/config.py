# fsigcalc/config.py
import os

from fsigcalc.exceptions import ConfigError

PRIME_LIMIT = 2 ** 31          # prime fields use p < 2^31 so products fit in int64
MAX_EXPONENT = 2 ** 20         # exponent guard for Poly
QQ_RANK_CELL_LIMIT = 2500      # M*N policy bound for rank over Q

DEFAULT_VERIFY_PRIMES = (31, 101)
DEFAULT_FSIG_PRIMES = (7, 11, 31, 101)
DEFAULT_GRID_COUNT = 10
CONVERGENCE_CONSTANT = 10      # |psi_p - psi| <= CONVERGENCE_CONSTANT / p

THREADS_ENV = "FSIG_THREADS"


def worker_count() -> int:
    """Worker cap for sweep/verify fan-out, read from FSIG_THREADS."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV} must be an integer >= 1, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{THREADS_ENV} must be an integer >= 1, got {value}")
    return value
