#!/usr/bin/env python3
"""End-to-end certification of the reference example at lambda = sqrt(2).

Reproduces every headline number: the classification of Phi[2,0,1] and
Phi[2,1,1/4], the boundary parameter sqrt(3)/2, the spectrum of A, the
witness pairing -0.525 at eps = 0.05, the extreme-ray check, and the
Schmidt-number-two certificate.
"""

import numpy as np

import pptent as pt


def main() -> None:
    print("== map classification ==")
    for abc in [(2, 0, 1), (3, 0, 0), (2, 1, 0.25)]:
        rep = pt.classify(pt.MapFamilyParams(*abc))
        print(
            f"Phi[{abc[0]},{abc[1]},{abc[2]}]: positive={rep.positive} "
            f"decomposable={rep.decomposable} CP={rep.completely_positive} "
            f"coCP={rep.completely_copositive} "
            f"boundary={rep.on_decomposability_boundary}"
        )

    alpha = pt.boundary_parameter(pt.MapFamilyParams(2, 0, 1))
    print(f"\nboundary parameter alpha(2,0,1) = {alpha!r}")
    print(f"         sqrt(3)/2              = {np.sqrt(3) / 2!r}")

    lam = float(np.sqrt(2))
    s = pt.StateParams(lam)
    st = pt.build_state(s)
    print(f"\n== state A(lambda={lam!r}) ==")
    print(f"trace = {st.trace!r}")
    print("eigenvalues:", np.round(np.linalg.eigvalsh(st.matrix), 12))

    rep = pt.verify_state(st)
    print(f"psd={rep.psd} ppt={rep.ppt} rank={rep.rank} "
          f"rank(A^tau)={rep.rank_partial_transpose}")
    for label, val in rep.face_pairings:
        print(f"  <A, {label}> = {val:+.3e}")

    cert = pt.entanglement_witness(s, 0.05)
    wp = cert.witness_params
    print(f"\nwitness Phi[{wp.a!r},{wp.b!r},{wp.c!r}] (eps=0.05): "
          f"pairing = {cert.pairing_value!r}, entangled={cert.entangled_verdict}")

    ext = pt.extremality_check(st.matrix)
    print(f"\nextreme ray: solution_dim={ext.solution_dim} "
          f"extreme={ext.extreme} gap_ratio={ext.gap_ratio:.2e}")

    sc = pt.schmidt_number_certificate(s)
    print(f"\nschmidt certificate: residual={sc.residual:.3e} "
          f"verdict={sc.verdict!r}")

    census = pt.rank_one_census(s)
    print(f"\nrank-one census: all_rank_one={census.all_rank_one} "
          f"span_dim={census.span_dim} "
          f"max_orthogonal_subset={census.max_orthogonal_subset} "
          f"upb_excluded={census.upb_excluded}")


if __name__ == "__main__":
    main()
