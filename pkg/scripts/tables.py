#!/usr/bin/env python3
"""Print the combinatorial tables for a size range.

For each n: f-vector, h-vector, facet count, total faces, and the critical
census of the Morse matching. Markdown or CSV output.

Usage:
    python3 scripts/tables.py                 # n = 3..8, markdown
    python3 scripts/tables.py --to 10 --csv   # wider range, CSV
"""

import argparse
import sys
from dataclasses import dataclass
from math import factorial

from prewdvv import f_recurrence, facet_count, h_recurrence, total_face_count


@dataclass
class TableConfig:
    start: int
    stop: int
    csv: bool


def rows(config: TableConfig):
    for n in range(config.start, config.stop + 1):
        yield {
            "n": n,
            "f": f_recurrence(n).entries,
            "h": h_recurrence(n).entries,
            "facets": facet_count(n),
            "faces": total_face_count(n),
            "critical": factorial(n - 2),
        }


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--from", dest="start", type=int, default=3)
    parser.add_argument("--to", dest="stop", type=int, default=8)
    parser.add_argument("--csv", action="store_true",
                        help="CSV instead of a markdown table")
    args = parser.parse_args()
    if args.start < 3 or args.stop < args.start:
        parser.error("need 3 <= from <= to")
    config = TableConfig(start=args.start, stop=args.stop, csv=args.csv)

    if config.csv:
        print("n,f,h,facets,faces,critical")
        for r in rows(config):
            f = " ".join(map(str, r["f"]))
            h = " ".join(map(str, r["h"]))
            print(f'{r["n"]},{f},{h},{r["facets"]},{r["faces"]},{r["critical"]}')
    else:
        print("| n | f-vector | h-vector | facets | faces | critical |")
        print("|---|----------|----------|--------|-------|----------|")
        for r in rows(config):
            f = ", ".join(map(str, r["f"]))
            h = ", ".join(map(str, r["h"]))
            print(f'| {r["n"]} | {f} | {h} | {r["facets"]} '
                  f'| {r["faces"]} | {r["critical"]} |')
    return 0


if __name__ == "__main__":
    sys.exit(main())
