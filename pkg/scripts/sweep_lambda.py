#!/usr/bin/env python3
"""Sweep lambda and certify A(lambda) at every grid point.

Prints one row per lambda with the PSD/PPT margins, the witness pairing
at the default epsilon, the extremality solution dimension, and the
Schmidt verdict.  Exits nonzero if any certificate fails.
"""

import argparse
import sys

import numpy as np

import pptent as pt


def sweep(lams: list[float]) -> bool:
    header = (
        f"{'lambda':>10}  {'trace':>9}  {'min eig':>10}  {'pt min eig':>10}  "
        f"{'witness':>12}  {'ext dim':>7}  {'schmidt':>7}  ok"
    )
    print(header)
    print("-" * len(header))
    all_ok = True
    for lam in lams:
        s = pt.StateParams(lam)
        st = pt.build_state(s)
        rep = pt.verify_state(st)
        cert = pt.entanglement_witness(s)
        ext = pt.extremality_check(st.matrix)
        sc = pt.schmidt_number_certificate(s)
        ok = (
            rep.all_pass
            and cert.entangled_verdict
            and ext.extreme
            and ext.status == "confident"
            and sc.verdict == "2"
        )
        all_ok = all_ok and ok
        print(
            f"{lam:>10.6f}  {st.trace:>9.4f}  {rep.psd_min_eig:>10.2e}  "
            f"{rep.ppt_min_eig:>10.2e}  {cert.pairing_value:>12.6f}  "
            f"{ext.solution_dim:>7d}  {sc.verdict:>7}  {'yes' if ok else 'NO'}"
        )
    return all_ok


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min", type=float, default=0.3)
    parser.add_argument("--max", type=float, default=3.0)
    parser.add_argument("--steps", type=int, default=12)
    args = parser.parse_args()
    lams = [
        float(v)
        for v in np.geomspace(args.min, args.max, args.steps)
        if abs(v - 1.0) > 1e-3
    ]
    sys.exit(0 if sweep(lams) else 1)


if __name__ == "__main__":
    main()
