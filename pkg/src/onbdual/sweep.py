"""Parameter sweeps over (q, n) with per-run reports."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .field import GF, is_prime, multiplicative_order, prime_power
from .onb1 import validate_params, verify_theorem


@dataclass(frozen=True)
class RunReport:
    p: int
    m: int
    n: int
    c_primal: int
    c_dual: int
    expected_dual: int
    structured_match: bool
    passed: bool
    elapsed_ms: float = 0.0

    @property
    def q(self) -> int:
        return self.p ** self.m


def is_valid_pair(q: int, n: int) -> bool:
    return n >= 2 and is_prime(n + 1) and q % (n + 1) != 0 and multiplicative_order(q, n + 1) == n


def valid_pairs(qs: Iterable[int], n_max: int) -> list[tuple[int, int]]:
    """All valid (q, n) with 2 <= n <= n_max, q ascending then n ascending."""
    return [(q, n) for q in sorted(set(qs)) for n in range(2, n_max + 1) if is_valid_pair(q, n)]


def run_one(q: int, n: int) -> RunReport:
    p, m = prime_power(q)
    start = time.perf_counter()
    report = verify_theorem(validate_params(GF(p, m), n))
    elapsed = (time.perf_counter() - start) * 1000.0
    return RunReport(p, m, n, report.c_primal, report.c_dual, report.expected_dual,
                     report.structured_match, report.passed, round(elapsed, 3))


def _run_pair(pair: tuple[int, int]) -> RunReport:
    return run_one(*pair)


def run_sweep(pairs: list[tuple[int, int]], jobs: int = 1) -> Iterator[RunReport]:
    """Yield reports in the order of ``pairs`` (worker results are reordered)."""
    if jobs <= 1:
        for pair in pairs:
            yield run_one(*pair)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_run_pair, pairs)
