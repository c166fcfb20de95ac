"""Exact tope graphs and Hamiltonian cycles of simplicial hyperplane arrangements."""

from .arrangement import Arrangement, delete, product, restrict
from .builder import PositiveSystem, RegionFrame, build_tope_graph, closest_root, cross_wall, initial_region, tope_graph
from .catalogue import FamilySpec, SignedPermutation, generate, signed_perm_adjacent, tope_of_signed_perm
from .dns import dns_cycle
from .hamilton import Fiber, Quadrilateral, fibers, glue, product_cycle, supersolvable_cycle, verify_certificate
from .lattice import build_lattice, supersolvable_decomposition
from .oracle import oracle_enumerate
from .scalar import Quad
from .search import search_cycle
from .topes import HamiltonCertificate, TopeGraph, adjacency, contract_graph, project_tope

__all__ = [
    "Arrangement", "delete", "product", "restrict",
    "PositiveSystem", "RegionFrame", "build_tope_graph", "closest_root", "cross_wall", "initial_region", "tope_graph",
    "FamilySpec", "SignedPermutation", "generate", "signed_perm_adjacent", "tope_of_signed_perm",
    "dns_cycle",
    "Fiber", "Quadrilateral", "fibers", "glue", "product_cycle", "supersolvable_cycle", "verify_certificate",
    "build_lattice", "supersolvable_decomposition",
    "oracle_enumerate",
    "Quad",
    "search_cycle",
    "HamiltonCertificate", "TopeGraph", "adjacency", "contract_graph", "project_tope",
]
