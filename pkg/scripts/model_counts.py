"""Count models of the small bundled ontologies per domain size, and time
the SAT-backed search against plain enumeration on the first model.

    python scripts/model_counts.py [--max-domain N]
"""

import argparse
import time
from pathlib import Path

from dlkit.parser import parse_ontology
from dlkit.reasoner import CapExceeded, SearchConfig, check_consistency, count_interpretations, model_indices
from dlkit.rewrite import desugar

ONTOLOGIES = Path(__file__).resolve().parents[1] / "ontologies"
SMALL = ["mothers.dl", "ancestors.dl", "sons.dl", "contradiction.dl", "many_children.dl", "uncles.dl"]
CAP = 10**7


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-domain", type=int, default=3)
    args = ap.parse_args()
    sizes = range(1, args.max_domain + 1)

    header = " ".join(f"{'n=' + str(n):>22}" for n in sizes)
    print(f"{'ontology':18} {header}")
    for name in SMALL:
        o = desugar(parse_ontology((ONTOLOGIES / name).read_text()))
        cells = []
        for n in sizes:
            total = count_interpretations(o.signature, n)
            try:
                found = len(model_indices(o, n, max_interpretations=CAP))
                cells.append(f"{found}/{total}")
            except CapExceeded:
                cells.append(f"-/{total}")
        print(f"{name:18} " + " ".join(f"{c:>22}" for c in cells))

    print()
    print(f"{'ontology':18} {'ground s':>10} {'enumerate s':>12}")
    for name in SMALL:
        o = desugar(parse_ontology((ONTOLOGIES / name).read_text()))
        row = []
        for strategy in ("ground", "enumerate"):
            cfg = SearchConfig(max_domain_size=args.max_domain, strategy=strategy, max_interpretations=CAP)
            t = time.perf_counter()
            try:
                check_consistency(o, cfg)
                row.append(f"{time.perf_counter() - t:.3f}")
            except CapExceeded:
                row.append("cap")
        print(f"{name:18} {row[0]:>10} {row[1]:>12}")


if __name__ == "__main__":
    main()
