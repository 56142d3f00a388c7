#!/usr/bin/env python3
"""
Example script that reads a directory of arrangement JSON documents, validates each one
and tabulates its basic invariants. The table is written to a CSV or JSON file if specified
(otherwise to stdout); documents that fail validation are listed with their errors.
"""
import argparse
import csv
import json
import logging

from pathlib import Path

from vg_algebra.arrangement import betti, chambers, is_generic_codim2
from vg_algebra.errors import VGException
from vg_algebra.loader import ArrangementLoader
from vg_algebra.vgalgebra import gheav_bruteforce, sqzero

logging.basicConfig(level=logging.INFO)
log = logging.getLogger(__name__)

HEADERS = ["file", "n", "ell", "chambers", "betti", "generic_codim2", "gheav", "sqzero"]


if __name__ == "__main__":
    parser = argparse.ArgumentParser()

    parser.add_argument('-i', '--input-dir', dest="input_dir", type=Path, required=True,
                        help='A directory of arrangement JSON documents')
    parser.add_argument('-o', '--output', dest="output", type=Path, required=False,
                        help='The output CSV or JSON to write the table to. If not provided, '
                        'results will just be written to stdout')
    parser.add_argument('--skip-algebra', dest="skip_algebra", action="store_true",
                        default=False,
                        help='Only tabulate chambers and Betti numbers')

    args = parser.parse_args()

    log.info(f"input_dir:\t{args.input_dir}")
    log.info(f"output:\t{args.output}")

    if not args.input_dir.is_dir():
        raise FileNotFoundError(f"Cannot find specified input directory: {args.input_dir}")

    loader = ArrangementLoader()
    rows = []
    failures = {}
    for path in sorted(args.input_dir.glob("*.json")):
        try:
            a = loader.load_text(path.read_text(encoding="utf-8"), path.name)
            row = {
                "file": path.name,
                "n": a.n,
                "ell": a.ell,
                "chambers": len(chambers(a)),
                "betti": " ".join(str(b) for b in betti(a)),
                "generic_codim2": is_generic_codim2(a),
                "gheav": "",
                "sqzero": "",
            }
            if not args.skip_algebra:
                row["gheav"] = len(gheav_bruteforce(a))
                row["sqzero"] = len(sqzero(a))
        except VGException as error:
            failures[path.name] = str(error)
            log.warning(f"{path.name} could not be processed")
            continue
        rows.append(row)

    if args.output:
        suffix = args.output.suffix
        if suffix == ".json":
            with args.output.open('w') as outfh:
                json.dump({"rows": rows, "failures": failures}, outfh, indent=4)
        elif suffix in ['.csv', '']:
            with args.output.open('w') as outfh:
                writer = csv.DictWriter(outfh, HEADERS)
                writer.writeheader()
                writer.writerows(rows)
        else:
            raise ValueError(f"Unsupported output suffix: {suffix}")
    else:
        for row in rows:
            print(json.dumps(row))

    for name, message in failures.items():
        print(f"{name}: {message}")

    log.info(f"{len(rows)} arrangements tabulated, {len(failures)} failed")
