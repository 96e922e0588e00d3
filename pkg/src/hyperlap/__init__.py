"""Normalized Laplacians of oriented hypergraphs: spectra, nodal domains, Cheeger and coloring bounds."""

from .core import (
    Hyperedge,
    HypergraphError,
    OrientedHypergraph,
    cartesian_product,
    dual,
    generate,
    random_corpus,
    restrict,
    validate,
    weak_delete,
)
from .io import parse, serialize
from .reports import BoundReport
from .spectra import (
    DEFAULT,
    EigenConfig,
    Spectrum,
    eigen_sym,
    spectrum_hyperedge,
    spectrum_normalized,
    spectrum_unnormalized,
    zero_multiplicities,
)

__all__ = [
    "BoundReport",
    "DEFAULT",
    "EigenConfig",
    "Hyperedge",
    "HypergraphError",
    "OrientedHypergraph",
    "Spectrum",
    "cartesian_product",
    "dual",
    "eigen_sym",
    "generate",
    "parse",
    "random_corpus",
    "restrict",
    "serialize",
    "spectrum_hyperedge",
    "spectrum_normalized",
    "spectrum_unnormalized",
    "validate",
    "weak_delete",
    "zero_multiplicities",
]
