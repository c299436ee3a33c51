#!/usr/bin/env python
"""Simulated double-slit runs: fringe contrast recovered from detected
positions, with and without a which-path photon record."""
import argparse

from twopath.decoherence import sinc_overlap
from twopath.double_slit import FringeGeometry, interference_information_integral
from twopath.montecarlo import estimate_visibility, sample_pattern
from twopath.states import DetectorOverlap, TwoPathState


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--kd", type=float, nargs="+", default=[0.0, 0.6283185, 1.5, 3.0])
    args = ap.parse_args()

    geom = FringeGeometry.from_wavelength(0.005, 0.1, 1.25e6)   # Y = 62.5 mm
    print(f"period Y = {geom.period:.4g} um")
    print(f"{'a^2':>5} {'Kd':>7} {'V_true':>8} {'V_est':>8} {'I_interf':>9}")
    seed = args.seed
    for asq in (0.5, 0.8, 0.95):
        state = TwoPathState.from_weight(asq, 0.3)
        for kd in args.kd:
            s = DetectorOverlap(sinc_overlap(kd, 1.0))
            run = sample_pattern(state, geom, args.samples, seed, overlap=s)
            seed += 1
            v = 2 * state.a * state.b * abs(s.overlap)
            print(f"{asq:5.2f} {kd:7.3f} {v:8.4f} {estimate_visibility(run, geom):8.4f} "
                  f"{interference_information_integral(state, geom):9.5f}")


if __name__ == "__main__":
    main()
