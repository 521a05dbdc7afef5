"""Graph homomorphisms, coloring flip graphs and Hom complexes."""

from .chromatic import ChromaticResult, chromatic_number, is_proper
from .complex import FacePoset, HomologyReport, betti_gf2, enumerate_cells, euler_characteristic
from .counterexample import classify, verify_certificates, verify_counts, verify_paper
from .errors import CapExceeded, GraphParseError, VerificationError
from .flip import ComponentReport, FlipGraph, build_flip_graph, components, is_edge, shortest_path
from .graph import Graph, generate, parse_graph, serialize
from .homs import HomSet, count_homs, enumerate_homs

__version__ = "0.1.0"
