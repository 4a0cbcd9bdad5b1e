"""Maximum of phi over the admissible region for a range of q, with the
partitions mu(n) built from the maximizer.

    python scripts/phi_landscape.py --q-max 10 --n 100 1000 10000
"""
import argparse
import math

from codimlab.asymptotics import closed_form_value, maximize_phi, mu_partition
from codimlab.symmetric import format_partition, specht_dim, theta_admissible


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q-max", type=int, default=10)
    ap.add_argument("--n", type=int, nargs="*", default=[100, 1000])
    args = ap.parse_args()

    print("# q\tphi_max\tclosed_form\terror\tpoint")
    for q in range(2, args.q_max + 1):
        r = maximize_phi(q)
        ref = closed_form_value(q) if q >= 3 else float("nan")
        pt = ",".join(f"{x:.6f}" for x in r.point)
        print(f"{q}\t{r.value:.12f}\t{ref:.12f}\t{abs(r.value - ref):.1e}\t{pt}")

    x = maximize_phi(5).point
    print("# n\tmu\tadmissible\tdim^(1/n)")
    for n in args.n:
        mu = mu_partition(x, n, pair_constraint=True)
        root = math.exp(math.log(specht_dim(mu)) / n)
        print(f"{n}\t{format_partition(mu)}\t{theta_admissible(mu)}\t{root:.6f}")


if __name__ == "__main__":
    main()
