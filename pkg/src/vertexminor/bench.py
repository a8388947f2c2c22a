"""Runtime measurements of the star solver against brute force."""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator

from .dh import random_dh
from .dhstar import solve_star
from .oracle import star_minor_bruteforce

ALGORITHMS = ("dh-star", "brute")


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    n: int
    trials: int
    median: float
    mean: float
    max: float

    def __post_init__(self) -> None:
        if self.trials <= 0:
            raise ValueError("trials must be positive")
        if min(self.median, self.mean, self.max) < 0:
            raise ValueError("durations must be non-negative")

    def to_dict(self) -> dict:
        return asdict(self)


def parse_sizes(text: str) -> list[int]:
    """``25,50,100`` or ``10..200`` (step 10) or ``10..200:5``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, rest = part.split("..", 1)
            hi, _, step = rest.partition(":")
            out += list(range(int(lo), int(hi) + 1, int(step or 10)))
        elif part:
            out.append(int(part))
    if not out or min(out) < 1:
        raise ValueError(f"bad size list {text!r}")
    return out


def instances(n: int, trials: int, targets: int, seed: int) -> Iterator[tuple]:
    """Reproducible (graph, target set) pairs for one size."""
    rng = random.Random(f"{seed}:{n}")
    for _ in range(trials):
        g = random_dh(n, rng)
        yield g, rng.sample(list(g.vertices), min(targets, n))


def time_instances(algorithm: str, pairs: Iterable[tuple]) -> list[float]:
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    out = []
    for g, targets in pairs:
        start = time.perf_counter()
        if algorithm == "dh-star":
            solve_star(g, targets)
        else:
            star_minor_bruteforce(g, targets)
        out.append(time.perf_counter() - start)
    return out


def run_bench(algorithm: str, sizes: Iterable[int], trials: int, targets: int, seed: int = 0) -> Iterator[BenchRecord]:
    for n in sizes:
        times = time_instances(algorithm, instances(n, trials, targets, seed))
        yield BenchRecord(algorithm, n, trials, statistics.median(times), statistics.fmean(times), max(times))
