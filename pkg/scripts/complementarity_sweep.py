#!/usr/bin/env python
"""Sweep pure states and compare the squared-difference information total
with the Shannon-entropy analogue."""
import argparse
import math

import numpy as np

from twopath.information import complementarity_split, info_measures, shannon_sum
from twopath.interferometer import port_probabilities
from twopath.states import TwoPathState


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-theta", type=int, default=41)
    ap.add_argument("--n-chi", type=int, default=73)
    args = ap.parse_args()

    totals, shannon = [], []
    print(f"{'a^2':>6} {'I_path':>8} {'I_interf':>9} {'min S':>8} {'max S':>8}")
    for theta in np.linspace(0, math.pi / 2, args.n_theta):
        row = []
        for chi in np.linspace(0, 2 * math.pi, args.n_chi, endpoint=False):
            p = port_probabilities(TwoPathState(math.cos(theta), math.sin(theta), chi))
            t = info_measures(p)
            totals.append(t.total)
            row.append(shannon_sum(p))
        split = complementarity_split(t)
        shannon.extend(row)
        print(f"{math.cos(theta) ** 2:6.3f} {split.i_path:8.5f} {split.i_interf:9.5f} "
              f"{min(row):8.5f} {max(row):8.5f}")
    totals = np.array(totals)
    print(f"\ninformation total: max |total - 1| = {np.max(np.abs(totals - 1)):.2e}")
    print(f"Shannon analogue ranges over [{min(shannon):.5f}, {max(shannon):.5f}]")


if __name__ == "__main__":
    main()
