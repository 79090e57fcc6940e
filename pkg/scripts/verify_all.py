#!/usr/bin/env python3
"""End-to-end verification sweep, runnable outside the test suite.

Runs enumeration, recurrences, the Morse matching, homology, link
vanishing, and the Koszul sign check over a size range and prints one
status line per check. Exits nonzero when anything fails.

Usage:
    python3 scripts/verify_all.py            # defaults, n up to 8/9
    python3 scripts/verify_all.py --max-n 7  # faster sweep
"""

import argparse
import sys
import time
from dataclasses import dataclass
from math import factorial

from prewdvv import (
    build_direct,
    build_matching,
    build_recursive,
    covers_all_faces,
    critical_census,
    facet_count,
    f_recurrence,
    h_recurrence,
    h_vector_of,
    koszul_evidence,
    reduced_betti,
    reisner_check,
    verify_acyclic,
    verify_table1,
)


@dataclass
class SweepConfig:
    max_n: int          # ceiling for enumeration-based checks
    morse_n: int        # ceiling for the Morse suite
    integer_n: int      # ceiling for integer-mode homology
    reisner_n: int      # ceiling for link checks
    jobs: int


def _run(label, fn):
    started = time.monotonic()
    ok = fn()
    print(f"[{'PASS' if ok else 'FAIL'}] {label} ({time.monotonic() - started:.1f}s)")
    return ok


def sweep(config: SweepConfig) -> bool:
    results = []
    deltas = {}

    def delta(n):
        if n not in deltas:
            deltas[n] = build_direct(n)
        return deltas[n]

    results.append(_run(
        "reference h-vectors",
        lambda: verify_table1().ok))

    def check_counts():
        for n in range(3, config.max_n + 1):
            K = delta(n)
            if K.f_vector().entries != f_recurrence(n).entries:
                return False
            if h_vector_of(K.f_vector(), n - 3).entries != h_recurrence(n).entries:
                return False
            facets = K.facets()
            if len(facets) != facet_count(n):
                return False
            if any(len(f) - 1 != n - 4 for f in facets):
                return False
        return True

    results.append(_run(f"counts and purity, n<={config.max_n}", check_counts))

    results.append(_run(
        f"recursive construction, n<={config.max_n}",
        lambda: all(build_recursive(n)[0] == delta(n)
                    for n in range(3, config.max_n + 1))))

    def check_morse():
        for n in range(3, config.morse_n + 1):
            m = build_matching(n)
            if not covers_all_faces(m):
                return False
            if not verify_acyclic(m).acyclic:
                return False
            expected = {-1: 1} if n == 3 else {n - 4: factorial(n - 2)}
            if critical_census(m) != expected:
                return False
        return True

    results.append(_run(f"morse suite, n<={config.morse_n}", check_morse))

    def wedge_for(n):
        return {n - 4: factorial(n - 2)}

    def check_homology():
        for n in range(3, config.max_n + 1):
            if reduced_betti(delta(n), mode="field").nonzero() != wedge_for(n):
                return False
        for n in range(3, config.integer_n + 1):
            profile = reduced_betti(delta(n), mode="integer")
            if profile.nonzero() != wedge_for(n) or profile.torsion:
                return False
        return True

    results.append(_run(
        f"homology, field n<={config.max_n} / integer n<={config.integer_n}",
        check_homology))

    results.append(_run(
        f"link vanishing, n<={config.reisner_n}",
        lambda: all(reisner_check(n, jobs=config.jobs).ok
                    for n in range(3, config.reisner_n + 1))))

    results.append(_run(
        "koszul sign alternation, n<=8",
        lambda: all(koszul_evidence(n).alternating for n in range(3, 9))))

    return all(results)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=8,
                        help="largest size for enumeration checks (default 8)")
    parser.add_argument("--morse-n", type=int, default=9,
                        help="largest size for the Morse suite (default 9)")
    parser.add_argument("--integer-n", type=int, default=7,
                        help="largest size for integer homology (default 7)")
    parser.add_argument("--reisner-n", type=int, default=7,
                        help="largest size for link checks (default 7)")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker processes for link checks (default 1)")
    args = parser.parse_args()
    config = SweepConfig(max_n=args.max_n, morse_n=args.morse_n,
                         integer_n=args.integer_n, reisner_n=args.reisner_n,
                         jobs=args.jobs)
    ok = sweep(config)
    print("all checks passed" if ok else "FAILURES above")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
