"""Exact cone parametrizations of canonical bases for simply-laced types.

String and Lusztig cones, GHKK potentials and Berenstein-Kazhdan decoration
functions on cluster charts, the monomial chart maps relating them, and the
polyhedral machinery to compare the resulting cones exactly.
"""
from .cartan import (CartanMatrix, Move, ReducedWord, build_cartan, cartan, convex_order, is_longest,
                     is_reduced, move_apply, move_path, reduced_words, star_involution, weyl_dim)
from .cluster import Seed, a_mutation, chart_transition, mutate_seed, quiver_of, seed_from_word, x_mutation
from .cones import build_cone, chart_map, cmm_map, d_map, phi_chart, phi_prime, polytope_points
from .errors import CanonicalConesError
from .polyhedral import ConeH, LatticeMap, cone_extreme_rays, cones_equal, transform_cone
from .posrat import PLMap, PosRat, RationalMap, TropForm, VarSet, compose, linear_matrix, substitute, trop_eval, trop_map, tropicalize
from .potentials import bk_component, ghkk_component, ghkk_component_via_mutation, total
from .transitions import (TransitionKind, cone_fn, crystal_eps_star, crystal_f_star, kashiwara_star,
                          transition_map)

__version__ = "0.1.0"
