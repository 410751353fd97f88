#!/usr/bin/env python3
"""Download the real hypergraphs through the xgi package and store them as
XGI JSON files readable by `hypersimp --input`.

Edges with fewer than two members are dropped (the loader rejects them) and
the number dropped is reported per dataset.

    pip install xgi
    python3 scripts/fetch_datasets.py --out data
    HYPERSIMP_DATA_DIR=data ./build/tests/acceptance
"""

import argparse
import json
import sys
import tempfile
from pathlib import Path

DATASETS = [
    "disgenenet",
    "contact-high-school",
    "diseasome",
    "email-eu",
    "email-enron",
    "congress-bills",
    "ndc-substances",
    "contact-primary-school",
    "hospital-lyon",
    "tags-ask-ubuntu",
]


def clean(raw: dict) -> tuple[dict, int]:
    edges = raw.get("edge-dict", {})
    small = [e for e, members in edges.items() if len(members) < 2]
    for e in small:
        del edges[e]
        raw.get("edge-data", {}).pop(e, None)
    return raw, len(small)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="data", help="output directory")
    parser.add_argument("names", nargs="*", default=DATASETS, help="dataset names (default: all ten)")
    args = parser.parse_args()

    try:
        import xgi
    except ImportError:
        print("error: the xgi package is required (pip install xgi)", file=sys.stderr)
        return 1

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in args.names:
        with tempfile.TemporaryDirectory() as tmp:
            try:
                xgi.download_xgi_data(name, path=tmp)
                raw = json.loads((Path(tmp) / f"{name}.json").read_text())
            except Exception as exc:  # network errors, unknown names
                print(f"{name}: failed ({exc})", file=sys.stderr)
                failed += 1
                continue
        raw, dropped = clean(raw)
        (out / f"{name}.json").write_text(json.dumps(raw))
        print(f"{name}: {len(raw.get('edge-dict', {}))} edges, {dropped} singleton edges dropped")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
