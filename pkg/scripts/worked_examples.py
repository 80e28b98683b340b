"""Run the worked inferences and consistency checks on the bundled ontologies.

    python scripts/worked_examples.py [--max-domain N] [--strategy ground|enumerate]
"""

import argparse
import time
from pathlib import Path

from dlkit.parser import parse_axiom, parse_ontology
from dlkit.reasoner import SearchConfig, Witness, check_consistency, check_entailment
from dlkit.rewrite import desugar

ONTOLOGIES = Path(__file__).resolve().parents[1] / "ontologies"

ENTAILMENTS = [
    ("mothers.dl", "julia : Parent"),
    ("mothers.dl", "julia : Female"),
    ("ancestors.dl", "(julia, john) : ancestorOf"),
    ("uncles.dl", "(charles, john) : uncleOf"),
    ("sons.dl", "john : Male"),
    ("sons.dl", "julia : Parent"),
    ("family.dl", "julia : Parent"),
    ("family.dl", "(john, julia) : childOf"),
]
CONSISTENCY = ["contradiction.dl", "many_children.dl", "family.dl"]


def load(name):
    return desugar(parse_ontology((ONTOLOGIES / name).read_text()))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-domain", type=int, default=3)
    ap.add_argument("--strategy", choices=("ground", "enumerate"), default="ground")
    args = ap.parse_args()
    cfg = SearchConfig(max_domain_size=args.max_domain, strategy=args.strategy)

    print(f"{'ontology':18} {'query':30} {'verdict':28} {'seconds':>8}")
    for name, text in ENTAILMENTS:
        o = load(name)
        t = time.perf_counter()
        v = check_entailment(o, parse_axiom(text, o.signature), cfg)
        dt = time.perf_counter() - t
        verdict = f"countermodel at size {v.size}" if isinstance(v, Witness) else f"not refuted up to {v.bound}"
        print(f"{name:18} {text:30} {verdict:28} {dt:8.3f}")
    print()
    for name in CONSISTENCY:
        t = time.perf_counter()
        v = check_consistency(load(name), cfg)
        dt = time.perf_counter() - t
        verdict = f"model at size {v.size}" if isinstance(v, Witness) else f"no model up to {v.bound}"
        print(f"{name:18} {'(consistency)':30} {verdict:28} {dt:8.3f}")


if __name__ == "__main__":
    main()
