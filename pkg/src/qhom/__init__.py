"""Exact graded homological algebra for quasi-projective and quasi-injective resolutions."""

__version__ = "0.1.0"

from .fields import Field
from .polynomials import PolyRing, Polynomial, QuotientRing
from .matrices import PolyMatrix
from .hilbert import HilbertSeries
from .modules import GradedModule, IsoWitness, is_isomorphic, power_decompose
from .complexes import (
    ChainComplex,
    ChainMap,
    cone,
    ext_module,
    free_resolution,
    koszul_complex,
    tor_module,
)
from .invariants import (
    bass_numbers,
    betti_numbers,
    depth,
    is_cm,
    is_gorenstein,
    krull_dim,
)
from .duality import cm_dual, dualize_quasi_resolution, dualizing_module, matlis_dual
from .quasires import (
    DimensionVerdict,
    QuasiResolutionCertificate,
    build_homotopies,
    koszul_qpres_residue_field,
    power_lift,
    qid_certified,
    qpd_certified,
    qpres_tensor_down,
)

__all__ = [
    "Field", "PolyRing", "Polynomial", "QuotientRing", "PolyMatrix", "HilbertSeries",
    "GradedModule", "IsoWitness", "is_isomorphic", "power_decompose",
    "ChainComplex", "ChainMap", "cone", "ext_module", "free_resolution", "koszul_complex",
    "tor_module", "bass_numbers", "betti_numbers", "depth", "is_cm", "is_gorenstein",
    "krull_dim", "cm_dual", "dualize_quasi_resolution", "dualizing_module", "matlis_dual",
    "DimensionVerdict", "QuasiResolutionCertificate", "build_homotopies",
    "koszul_qpres_residue_field", "power_lift", "qid_certified", "qpd_certified",
    "qpres_tensor_down",
]
