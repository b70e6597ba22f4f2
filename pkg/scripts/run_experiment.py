"""Run the fixer-comparison experiment and print the matrix.

Equivalent to `chromalint experiment run`; kept as a script so the experiment
can be driven without installing the console entry point.

Usage: python scripts/run_experiment.py [--seed N] [--max-rounds N] [--out FILE]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from chromalint.experiment import format_table, result_to_json, run_experiment  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-rounds", type=int, default=2000)
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    start = time.monotonic()
    result = run_experiment(seed=args.seed, max_rounds=args.max_rounds)
    print(format_table(result))
    print(f"elapsed: {time.monotonic() - start:.1f} s")
    if args.out:
        Path(args.out).write_text(result_to_json(result) + "\n", encoding="utf-8")
        print(f"matrix written to {args.out}")


if __name__ == "__main__":
    main()
