"""platkit: plat closures of braid words, Hilden moves, double-coset
invariant certificates, move search, and bounded stabilization graphs."""

from .braids import (BraidWord, Permutation, braid_rewrites, concat,
                     exponent_sum, free_reduce, invert, mirror,
                     parse_braid_word, permutation_of)
from .errors import PlatkitError
from .invariants import (CosetType, InvariantCertificate, alexander_plat,
                         burau, burau_cupcap_probe, certificate, coset_type,
                         jones_plat, kauffman_bracket_plat)
from .laurent import LaurentPolynomial
from .plats import (HildenCatalog, Matching, Plat, PlatDiagram, apply_move,
                    component_count, destabilize_syntactic, diagram_of, flip,
                    hilden_generators, plat_closure, pocket_move, stabilize)
from .platgraph import PlatGraph, cycle_check, distance, explore, to_dot, to_json
from .render import RenderSpec, render_svg
from .search import (DestabilizationFound, DistinctCertificates, Exhausted,
                     Found, Move, MoveTrace, SearchBudget,
                     destabilization_search, equivalence_search, verify_trace)

__version__ = "0.1.0"
