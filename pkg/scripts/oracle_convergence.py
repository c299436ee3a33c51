#!/usr/bin/env python
"""Error of the prolate-coordinate overlap oracle against sin(Kd)/Kd as the
cutoff grows, with the fitted order in 1/xi_max."""
import argparse
import math

import numpy as np

from twopath.decoherence import QuadratureSpec, overlap_oracle


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kd", type=float, nargs="+", default=[0.5, 0.6283185, 1, 2, 3])
    ap.add_argument("--xi-max", type=float, nargs="+", default=[1e1, 1e2, 1e3, 1e4, 1e5])
    args = ap.parse_args()

    cut = np.array(args.xi_max)
    for kd in args.kd:
        sinc = math.sin(kd) / kd
        res = [overlap_oracle(kd, 1.0, QuadratureSpec(x)) for x in cut]
        err = np.array([abs(r.value - sinc) for r in res])
        order = -np.polyfit(np.log(cut), np.log(err), 1)[0]
        cells = "  ".join(f"{e:.3e}{'' if r.converged else '*'}" for e, r in zip(err, res))
        print(f"Kd={kd:<10g} sinc={sinc:+.8f}  errors: {cells}  order={order:.3f}")
    print("(* = node doubling moved the value by more than 1e-6)")


if __name__ == "__main__":
    main()
