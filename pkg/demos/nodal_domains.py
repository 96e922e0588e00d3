"""Nodal domain counts on the 8-vertex all-input example.

The +-1 eigenfunction below (eigenvalue 0, k = r = 1) has one signless domain
but four signed ones, so the signed total exceeds k + r - 1.
"""

import numpy as np

from hyperlap import core, nodal
from hyperlap.operators import normalized_laplacian
from hyperlap.spectra import spectrum_normalized


def main():
    g = core.remark_4_3()
    f = core.REMARK_4_3_EIGENFUNCTION
    lam = float(f @ normalized_laplacian(g) @ f / (f @ f))
    sp = spectrum_normalized(g)
    print("spectrum:", np.round(sp.eigenvalues, 6).tolist())
    print(f"f = {f.astype(int).tolist()}, Lf = {lam:g} f")
    print("signless domains:", nodal.signless_nodal_count(g, f))
    print("signed domains (+, -):", nodal.signed_nodal_counts(g, f))
    print()
    print("per-eigenvector bounds (normalized operator):")
    for r in nodal.verify_courant(g, operators=("normalized",)):
        print(
            f"  k={r.eigen_index} r={r.multiplicity} lambda={r.eigenvalue:.4f} "
            f"signless {r.signless_count}<={r.bound_signless} "
            f"signed {r.positive_count + r.negative_count}<={r.bound_signed}"
        )


if __name__ == "__main__":
    main()
