"""Fixed-point data of finite rotation groups and their mod 2 lattice."""

from .groups import ICOS, OCT, TET, Cyclic, Dihedral, InvalidParameter, IsoType, build_group, subgroup_classes
from .rotations import DomainError, RotationModel, build_model
from .reps import Basis, PairClass, RepClass, pair_class_basis, rep_classes_of
from .fixedpoints import (
    BasisMismatch,
    FPFunction,
    conj_action_data,
    dihedral_sphere_data,
    induce,
    induced_conj_data,
    oracle_sphere_data,
)
from .lattice import ConstraintSystem, MembershipCertificate, constraints, dims, generators, membership, realizable
from .naming import group_label, parse_group

__all__ = [
    "ICOS", "OCT", "TET", "Cyclic", "Dihedral", "InvalidParameter", "IsoType", "build_group",
    "subgroup_classes", "DomainError", "RotationModel", "build_model", "Basis", "PairClass",
    "RepClass", "pair_class_basis", "rep_classes_of", "BasisMismatch", "FPFunction",
    "conj_action_data", "dihedral_sphere_data", "induce", "induced_conj_data",
    "oracle_sphere_data", "ConstraintSystem", "MembershipCertificate", "constraints", "dims",
    "generators", "membership", "realizable", "group_label", "parse_group",
]
