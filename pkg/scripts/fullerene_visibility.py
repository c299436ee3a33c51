#!/usr/bin/env python
"""Fringe visibility of hot molecules that emit N thermal photons.

Slit separation 1 um; sweeps the photon wavelength and count and puts the
sinc closed form next to the quadrature oracle.
"""
import argparse

from twopath.decoherence import EmissionModel, QuadratureSpec, overlap_oracle, visibility_after_emission


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--slit-sep", type=float, default=1.0)
    ap.add_argument("--wavelengths", type=float, nargs="+", default=[0.5, 1, 2, 5, 10, 20])
    ap.add_argument("--photons", type=int, nargs="+", default=[1, 2, 5, 20])
    ap.add_argument("--xi-max", type=float, default=1e4)
    args = ap.parse_args()

    print(f"{'lambda_um':>10} {'Kd':>8} " + " ".join(f"{'N=' + str(n):>10}" for n in args.photons)
          + f" {'oracle N=1':>11}")
    for lam in args.wavelengths:
        m = EmissionModel.from_wavelength(lam, args.slit_sep)
        vs = [visibility_after_emission(EmissionModel(m.K, m.d, n)) for n in args.photons]
        o = abs(overlap_oracle(m.K, m.d, QuadratureSpec(args.xi_max), check_convergence=False))
        print(f"{lam:10.3g} {m.K * m.d:8.4f} " + " ".join(f"{v:10.6f}" for v in vs) + f" {o:11.6f}")


if __name__ == "__main__":
    main()
