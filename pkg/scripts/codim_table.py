"""Print codimensions, cocharacters and n-th roots for an algebra file.

    python scripts/codim_table.py --max-n 6 [--algebra path] [--cochar-n 5]
"""
import argparse
import time

from codimlab.algfile import data_path, load_algebra
from codimlab.asymptotics import UPPER_BOUND
from codimlab.codim import CodimEngine, EngineConfig, cocharacter_table
from codimlab.symmetric import format_partition


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--algebra", default=str(data_path("paper_L.alg")))
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--cochar-n", type=int, default=5)
    ap.add_argument("--rank", default="auto", choices=("exact", "modular", "auto"))
    args = ap.parse_args()

    alg = load_algebra(args.algebra)
    eng = CodimEngine(alg, config=EngineConfig(rank_mode=args.rank, codim_cap=args.max_n,
                                               cochar_cap=max(args.cochar_n, 1)))
    print("# n\tc_n\tc_n^(1/n)\tmethod\tseconds")
    for n in range(1, args.max_n + 1):
        t = time.perf_counter()
        c, rep = eng.codimension(n)
        print(f"{n}\t{c}\t{c ** (1 / n):.6f}\t{rep.method}\t{time.perf_counter() - t:.2f}")
    print(f"# upper bound for the roots: {UPPER_BOUND:.9f}")

    for n in range(1, args.cochar_n + 1):
        tab = cocharacter_table(alg, n, engine=eng)
        body = " + ".join(f"{m}[{format_partition(l)}]" for l, m, _, _ in tab.rows() if m)
        print(f"# chi_{n} = {body or '0'}   (sum m*dim = {tab.weighted_sum()})")


if __name__ == "__main__":
    main()
