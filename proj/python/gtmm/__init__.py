"""Group-theoretic matrix multiplication toolkit.

The heavy lifting lives in the C++ extension ``gtmm._gtmm``; this package
adds dict-based wrappers around its JSON-string interface.
"""

import json as _json

from gtmm import _gtmm
from gtmm._gtmm import (
    StructuralError,
    ResourceLimitError,
    UnsupportedError,
    InfeasibleError,
    build_easy_strong_usp,
    build_triangle_strong_usp,
    build_no3ap_set,
    build_triangle_free,
    capacity_constants,
    capacity_rate,
    naive_matmul,
    strong_to_local,
)

__version__ = _gtmm.__version__


def _loads(text):
    return _json.loads(text)


# -- constructions ----------------------------------------------------------

def build_swap_wreath_triple(n):
    return _loads(_gtmm.build_swap_wreath_triple(n))


def build_triangle_subgroups(n):
    return _loads(_gtmm.build_triangle_subgroups(n))


def strong_usp_to_tpp(puzzle_text, m):
    return _loads(_gtmm.strong_usp_to_tpp(puzzle_text, m))


def build_sdpp_trivial(n, k):
    return _loads(_gtmm.build_sdpp_trivial(n, k))


def build_sdpp_binomial(m, l):
    return _loads(_gtmm.build_sdpp_binomial(m, l))


def sdpp_to_tpp(family):
    return _loads(_gtmm.sdpp_to_tpp(_json.dumps(family)))


def build_stpp_example(n):
    return _loads(_gtmm.build_stpp_example(n))


def local_strong_usp_to_stpp(puzzle_text, l):
    return _loads(_gtmm.local_strong_usp_to_stpp(puzzle_text, l))


def local_usp_chart(l):
    return _loads(_gtmm.local_usp_chart(l))


def chart_to_stpp(chart, puzzle_text):
    return _loads(_gtmm.chart_to_stpp(_json.dumps(chart), puzzle_text))


def stpp_to_tpp(family):
    return _loads(_gtmm.stpp_to_tpp(_json.dumps(family)))


# -- verification -----------------------------------------------------------

def check_tpp(triple, budget=10**9, threads=1):
    return _loads(_gtmm.check_tpp_json(_json.dumps(triple), budget, threads))


def check_sdpp(family, budget=10**9):
    return _loads(_gtmm.check_sdpp_json(_json.dumps(family), budget))


def check_stpp(family, budget=10**9):
    return _loads(_gtmm.check_stpp_json(_json.dumps(family), budget))


def check_usp(puzzle_text):
    return _loads(_gtmm.check_usp(puzzle_text))


def check_strong_usp(puzzle_text):
    return _loads(_gtmm.check_strong_usp(puzzle_text))


def check_two_symbol_structure(puzzle_text):
    return _loads(_gtmm.check_two_symbol_structure(puzzle_text))


def check_local_usp(puzzle_text):
    return _loads(_gtmm.check_local_usp(puzzle_text))


def check_local_strong_usp(puzzle_text):
    return _loads(_gtmm.check_local_strong_usp(puzzle_text))


# -- bounds -------------------------------------------------------------------

def solve_omega_tpp(n, m, p, d_max, group_order):
    return _loads(_gtmm.solve_omega_tpp(n, m, p, d_max, group_order))


def solve_omega_asi(shapes, group_order):
    return _loads(_gtmm.solve_omega_asi_abelian(shapes, group_order))


def solve_omega_sdpp(pair_products, group_order):
    return _loads(_gtmm.solve_omega_sdpp_abelian(pair_products, group_order))


def solve_omega_sdpp_asymptotic(m):
    return _loads(_gtmm.solve_omega_sdpp_asymptotic(m))


def omega_from_strong_usp(size, k, m):
    return _loads(_gtmm.omega_from_strong_usp(size, k, m))


def omega_from_capacity(c, m):
    return _loads(_gtmm.omega_from_capacity(c, m))


def omega_from_alpha_beta(alpha, beta):
    return _loads(_gtmm.omega_from_alpha_beta(alpha, beta))


def chart_bound_scan(lo=3, hi=64, c=None):
    if c is None:
        c = capacity_constants()[1]
    return _loads(_gtmm.chart_bound_scan(lo, hi, c))


# -- matrix multiplication -----------------------------------------------------

def multiply_via_tpp(triple, a, b, assume_verified=False):
    return _gtmm.multiply_via_tpp(_json.dumps(triple), a, b, assume_verified)


def multiply_via_stpp(family, pairs, assume_verified=False):
    return _gtmm.multiply_via_stpp(_json.dumps(family), pairs, assume_verified)
