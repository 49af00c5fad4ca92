# fsigcalc/cli/sweep.py
import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

from sympy import isprime

from fsigcalc.config import DEFAULT_GRID_COUNT, worker_count
from fsigcalc.exceptions import DomainError
from fsigcalc.fsig.signature import ConvergenceRow, convergence_rows, limit_fsig_general

logger = logging.getLogger(__name__)

COLUMNS = ("p", "t_grid", "t", "psi_p", "psi_limit", "abs_diff")
FORMATS = ("csv", "json")


@dataclass(frozen=True)
class SweepConfig:
    a: int
    b: int
    c: int
    primes: Tuple[int, ...]
    u: int = 1
    v: int = 1
    count: int = DEFAULT_GRID_COUNT
    fmt: str = "csv"
    output: Optional[str] = None

    def validate(self) -> None:
        if not self.primes:
            raise DomainError("sweep needs at least one prime")
        bad = [p for p in self.primes if not isprime(p)]
        if bad:
            raise DomainError(f"not prime: {bad}")
        if self.count < 1:
            raise DomainError(f"grid count must be >= 1, got {self.count}")
        if self.fmt not in FORMATS:
            raise DomainError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        # raises on an invalid pair
        limit_fsig_general(self.a, self.b, self.c, self.u, self.v)

    def spec_dict(self):
        return {'a': self.a, 'b': self.b, 'c': self.c, 'u': self.u, 'v': self.v}


def _rows_for_prime(task: Tuple[int, int, int, int, int, int, int]) -> List[ConvergenceRow]:
    a, b, c, u, v, p, count = task
    return convergence_rows(a, b, c, u, v, [p], count)


def run_sweep(config: SweepConfig) -> List[ConvergenceRow]:
    config.validate()
    primes = sorted(set(config.primes))
    workers = min(worker_count(), len(primes))
    logger.info("sweep over %d primes with %d worker(s)", len(primes), workers)
    if workers <= 1:
        rows = convergence_rows(config.a, config.b, config.c, config.u, config.v, primes, config.count)
    else:
        tasks = [(config.a, config.b, config.c, config.u, config.v, p, config.count) for p in primes]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = [row for chunk in pool.map(_rows_for_prime, tasks) for row in chunk]
    return sorted(rows, key=lambda row: (row.p, row.t_grid))


def render_csv(rows: List[ConvergenceRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(COLUMNS)
    for row in rows:
        data = row.to_dict()
        writer.writerow([data[col] for col in COLUMNS])
    return buffer.getvalue()


def render_json(config: SweepConfig, rows: List[ConvergenceRow]) -> str:
    limit = limit_fsig_general(config.a, config.b, config.c, config.u, config.v)
    document = {
        'spec': config.spec_dict(),
        'lambda': str(limit.lam),
        'columns': list(COLUMNS),
        'rows': [row.to_dict() for row in rows],
    }
    return json.dumps(document, indent=2) + "\n"


def render(config: SweepConfig, rows: List[ConvergenceRow]) -> str:
    if config.fmt == "json":
        return render_json(config, rows)
    return render_csv(rows)
