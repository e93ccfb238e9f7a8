"""Ultra summit sets, their black and grey graphs, and conjugacy testing in B_n."""

from .braid_garside import SimpleElement
from .conjugacy import ConjugacyWitness, UssInvariants, to_sss, to_uss
from .kernel import IMPLEMENTATION
from .normal_form import BraidWord, GroupElement
from .solver import ConjugacyResult, brute_force_conjugate, solve, solve_full_uss
from .uss_graph import UssGraph, black_component, build_graph, grey_component

__version__ = "0.1.0"

__all__ = [
    "IMPLEMENTATION",
    "BraidWord",
    "ConjugacyResult",
    "ConjugacyWitness",
    "GroupElement",
    "SimpleElement",
    "UssGraph",
    "UssInvariants",
    "black_component",
    "brute_force_conjugate",
    "build_graph",
    "grey_component",
    "solve",
    "solve_full_uss",
    "to_sss",
    "to_uss",
]
