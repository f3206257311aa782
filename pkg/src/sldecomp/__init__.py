"""Tensor product decomposition of level-one affine sl(n) modules.

Outer multiplicities of V(Λ_0) ⊗ V(Λ_i) computed three ways: by enumerating
highest-weight partitions, by crystal operators on extended Young diagrams,
and by solving the theta-series linear system with Cramer's rule.
"""
from .crystal import AffineWeight, ExtendedYoungDiagram, Partition
from .decomp import MultiplicityTable, WeightLabel, enumerate_maximal, multiplicity_table, weight_label
from .identities import build_A, cramer_B, verify_master
from .qseries import QSeries, ThetaSpec, euler_phi, theta_expand

__all__ = [
    "AffineWeight",
    "ExtendedYoungDiagram",
    "MultiplicityTable",
    "Partition",
    "QSeries",
    "ThetaSpec",
    "WeightLabel",
    "build_A",
    "cramer_B",
    "enumerate_maximal",
    "euler_phi",
    "multiplicity_table",
    "theta_expand",
    "verify_master",
    "weight_label",
]
