"""Shared generators and CLI helpers for the test suite."""

from __future__ import annotations

import json
import random
import subprocess
import sys

from negcoeff import ClassParams, NegCoeffSeries, make_series, weight


def random_member(
    rng: random.Random,
    p: ClassParams,
    kmax: int = 48,
    max_terms: int = 6,
    sigma: float | None = None,
) -> NegCoeffSeries:
    """Random series whose weighted coefficient sum is scaled to sigma.

    With sigma omitted the result is a strict member (sigma < 1).
    """
    count = rng.randint(1, max_terms)
    ks = rng.sample(range(p.j + 1, kmax + 1), count)
    raw = {k: rng.uniform(0.1, 1.0) for k in ks}
    total = sum(weight(k, p) * a for k, a in raw.items())
    target = rng.uniform(0.05, 0.98) if sigma is None else sigma
    return make_series(p.j, {k: a * target / total for k, a in raw.items()})


def series_close(f: NegCoeffSeries, g: NegCoeffSeries, tol: float = 1e-12) -> bool:
    """Per-coefficient comparison treating absent keys as zero."""
    if f.j != g.j:
        return False
    for k in set(f.terms) | set(g.terms):
        a, b = f.terms.get(k, 0.0), g.terms.get(k, 0.0)
        if abs(a - b) > max(tol, tol * max(abs(a), abs(b))):
            return False
    return True


def run_cli(*args: str) -> subprocess.CompletedProcess:
    """Run the CLI exactly as a user would, via python -m."""
    return subprocess.run(
        [sys.executable, "-m", "negcoeff", *args], capture_output=True, text=True
    )


def write_json(directory, name: str, payload) -> str:
    path = directory / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)
