"""
Regenerate the discrepancy ledger used by the regression tests.

Usage:
    python scripts/freeze_ledger.py
    python scripts/freeze_ledger.py --max-order 16 --flags edges,degree

Review the diff before committing; the ledger is a lock on reviewed results.
"""

import argparse
import json
import sys
from pathlib import Path

# Add the src directory to Python path
SCRIPT_DIR = Path(__file__).parent
PROJECT_DIR = SCRIPT_DIR.parent
SRC_DIR = PROJECT_DIR / "src"

if str(SRC_DIR) not in sys.path:
    sys.path.insert(0, str(SRC_DIR))

from jacobson_lab.oracles import SearchBudget
from jacobson_lab.survey import FLAG_ORDER, CatalogFilter, run_survey
from jacobson_lab.utils import get_logger, setup_logging

DEFAULT_LEDGER = PROJECT_DIR / "tests" / "golden" / "discrepancy_ledger.json"

logger = get_logger(__name__)


def main() -> int:
    parser = argparse.ArgumentParser(description="Freeze survey discrepancy flags")
    parser.add_argument("--max-order", type=int, default=32)
    parser.add_argument(
        "--flags", default=",".join(FLAG_ORDER), help="Comma-separated flags to track (default: all)"
    )
    parser.add_argument("--vertex-limit", type=int, default=32, help="Oracle vertex limit")
    parser.add_argument("--out", type=Path, default=DEFAULT_LEDGER)
    args = parser.parse_args()

    setup_logging(level="INFO")
    tracked = [f for f in args.flags.split(",") if f]
    unknown = set(tracked) - set(FLAG_ORDER)
    if unknown:
        print(f"Unknown flags: {', '.join(sorted(unknown))}", file=sys.stderr)
        return 2

    reports = run_survey(
        CatalogFilter(max_order=args.max_order, include_local=True),
        SearchBudget.from_settings(vertex_limit=args.vertex_limit),
    )
    rings = {r.spec: [f for f in r.flags if f in tracked] for r in reports}
    args.out.parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w") as f:
        json.dump({"flags": tracked, "rings": rings}, f, indent=2)
        f.write("\n")
    logger.info(f"Froze {len(rings)} rings to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
