"""Spectra of the named families next to their closed forms."""

from math import comb

import numpy as np

from hyperlap import bounds, core
from hyperlap.spectra import spectrum_normalized


def row(label, values, expected):
    gap = float(np.max(np.abs(np.sort(values) - np.sort(expected))))
    shown = (np.round(values, 6) + 0.0).tolist()
    print(f"{label:<28} {shown!s:<60} max gap {gap:.1e}")


def main():
    for n in (3, 4, 5):
        row(f"K{n}", spectrum_normalized(core.complete_graph(n)).eigenvalues, [0] + [n / (n - 1)] * (n - 1))
    for n in (2, 3, 4, 5):
        row(f"full_hyperedge({n})", spectrum_normalized(core.full_hyperedge(n)).eigenvalues, [0] * (n - 1) + [n])
    for n, r in ((6, 2), (8, 4)):
        g = core.copies(core.complete_graph(n // r), r)
        row(f"{r} copies of K{n // r}", spectrum_normalized(g).eigenvalues, [0] * r + [n / (n - r)] * (n - r))
    for n, c in ((4, 2), (5, 2), (5, 3)):
        g = core.c_complete_signless(n, c)
        row(f"signless {c}-complete, n={n}", spectrum_normalized(g).eigenvalues, [(n - c) / (n - 1)] * (n - 1) + [c])
    for n, c in ((4, 1), (5, 2), (6, 2)):
        g = core.symmetric_2c_complete(n, c)
        row(f"symmetric 2c, n={n} c={c}", spectrum_normalized(g).eigenvalues, [0] + [n / (n - 1)] * (n - 1))
        chi = bounds.chromatic_number(g)[0]
        degree = comb(n - 1, 2 * c - 1) * comb(2 * c, c) // 2
        print(f"{'':<28} degree {g.is_regular()} (formula {degree}), chi {chi}, chi/(chi-1) = {chi / (chi - 1):.6f}")


if __name__ == "__main__":
    main()
