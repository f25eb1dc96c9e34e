"""Conjugacy class sizes, their divisor graphs and the structural checks built on them."""

from .classes import conjugacy_classes, class_product, centralizer, center, pi_regular_classes
from .constructors import GroupSpec, SpecError, build_group, parse_spec, load_generators, dump_generators
from .frobenius import is_frobenius, is_quasi_frobenius, p_complement_search
from .graphs import bipartite_divisor, delta_p, gamma, gamma_p, metrics
from .group import PermutationGroup
from .perm import Permutation
from .subgroups import normal_lattice
from .verify import SuiteConfig, VerificationReport, run_check, run_suite

__version__ = "0.1.0"

__all__ = [
    "Permutation", "PermutationGroup", "GroupSpec", "SpecError",
    "parse_spec", "build_group", "load_generators", "dump_generators",
    "conjugacy_classes", "class_product", "centralizer", "center", "pi_regular_classes",
    "normal_lattice", "is_frobenius", "is_quasi_frobenius", "p_complement_search",
    "gamma", "gamma_p", "delta_p", "bipartite_divisor", "metrics",
    "SuiteConfig", "VerificationReport", "run_check", "run_suite",
]
