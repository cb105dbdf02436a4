"""Zero-divisor graphs of finite and graph inverse semigroups under the natural partial order."""

from .errors import AxiomError, Check, ParseError, TheoremViolation, ZdgError
from .semigroup import (FiniteSemigroup, InverseVerdict, OrderStructure, adjoin_zero,
                        check_associativity, find_zero, format_semigroup, meet_set,
                        natural_order, parse_semigroup, verify_inverse)
from .zdgraph import (DiamClass, GirthClass, ZdGraph, annihilator, build_gamma,
                      classify_diameter, classify_girth, minimal_nonzero, zero_divisors)
from .sigma import (BipartiteDecomposition, SigmaPartition, check_sigma_adjacency,
                    predict_diameter_sigma, predict_girth_sigma, sigma, verify_structure_theorem)
from .graph_inverse import (DirectedGraph, GPath, IGElement, build_gamma_ig, classify_ig,
                            enumerate_paths, idempotent_translate, ig_adjacent, ig_elements,
                            ig_inverse, ig_multiply, is_null_graph, parse_graph)

__version__ = "0.1.0"
