#!/usr/bin/env python3
"""Convert the positive knots of the KnotInfo table into a knotsig catalogue.

Needs the `database_knotinfo` package (pip install database_knotinfo).
Writes one JSON record per line: the positive PD diagram of each knot and,
when KnotInfo lists a positive braid word, its closure as a second record.

KnotInfo reports signatures with the opposite sign, so the expected value is
the negated table entry; b1 of a positive diagram's Seifert surface is twice
the genus.
"""

import argparse
import ast
import json
import sys

from database_knotinfo import link_list

try:
    from importlib.metadata import version
    SOURCE = "KnotInfo via database_knotinfo " + version("database_knotinfo")
except Exception:  # pragma: no cover
    SOURCE = "KnotInfo via database_knotinfo"


def pd_text(tuples):
    return " ".join("X[" + ",".join(str(a) for a in t) + "]" for t in tuples)


def records(max_crossings):
    for k in link_list()[2:]:  # the first two rows are column descriptions
        if k.get("positive") != "Y":
            continue
        if int(k["crossing_number"]) > max_crossings:
            continue
        expected = {"sigma": -int(k["signature"]), "b1": 2 * int(k["three_genus"])}
        note = SOURCE + "; expected sigma = -signature, b1 = 2 * three_genus"
        yield {
            "name": k["name"],
            "pd": pd_text(ast.literal_eval(k["positive_pd_notation"])),
            "positive": True,
            "expected": expected,
            "provenance": note,
        }
        braid = k.get("positive_braid_notation", "")
        if braid and braid.startswith("["):
            letters = ast.literal_eval(braid)
            strands = max(abs(x) for x in letters) + 1
            yield {
                "name": k["name"] + " (braid)",
                "braid": f"{strands}: " + " ".join(str(x) for x in letters),
                "positive": True,
                "expected": expected,
                "provenance": note,
            }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-crossings", type=int, default=10)
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args()
    out = sys.stdout if args.output == "-" else open(args.output, "w")
    with out:
        for r in records(args.max_crossings):
            out.write(json.dumps(r, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
