"""
Tests de expander
Grafos cúbicos, expansión exacta, cotas por conteo y aritmética final
"""
import math
import os
import random
import sys
from fractions import Fraction
from itertools import combinations

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import networkx as nx
import pytest

from modules.expander import (
    CubicGraph, Placement, bound_report, check_expansion, expansion_survey, gen_cubic,
    is_connected, subcubic_nonminor_certificate, theorem_inequality, theorem_scan,
    to_networkx, weight_tail, weight_tail_threshold
)
from modules.hypercube_core import CubeVertex
from modules.minor_embed import GuestGraph, complete_graph, cycle_graph, random_guest
from utils.errors import ParameterError, RetryExhaustedError, SizeError, ValidationError


def two_k4():
    edges = list(combinations(range(4), 2)) + list(combinations(range(4, 8), 2))
    return CubicGraph.from_edges(edges)


def k33():
    return CubicGraph.from_edges([(a, b) for a in range(3) for b in range(3, 6)])


# ============================================================================
# GRAFOS CÚBICOS
# ============================================================================

def test_cubic_graph_rules():
    with pytest.raises(ValidationError):
        CubicGraph.from_edges([(0, 1), (1, 2), (2, 0)])
    assert two_k4().two_n == 8


def test_gen_cubic_small_cases():
    g4 = gen_cubic(4, seed=1)
    assert nx.is_isomorphic(to_networkx(g4), nx.complete_graph(4))

    prism = nx.circular_ladder_graph(3)
    bipartite = nx.complete_bipartite_graph(3, 3)
    for seed in range(10):
        g6 = to_networkx(gen_cubic(6, seed))
        assert nx.is_isomorphic(g6, prism) or nx.is_isomorphic(g6, bipartite)


def test_gen_cubic_deterministic_and_regular():
    assert gen_cubic(20, seed=5).edges == gen_cubic(20, seed=5).edges
    for seed in range(30):
        g = gen_cubic(2 * random.Random(seed).randint(2, 15), seed)
        assert all(g.degree(v) == 3 for v in range(g.two_n))
        assert len(set(g.edges)) == len(g.edges) == 3 * g.two_n // 2


def test_gen_cubic_errors():
    with pytest.raises(ParameterError):
        gen_cubic(7, seed=0)
    with pytest.raises(ParameterError):
        gen_cubic(2, seed=0)
    with pytest.raises(RetryExhaustedError):
        gen_cubic(40, seed=0, max_resamples=0)


# ============================================================================
# EXPANSIÓN
# ============================================================================

def brute_expansion(g):
    """Segunda implementación: combinaciones explícitas y Fraction"""
    n = g.n_vertices // 2
    best = None
    for size in range(1, n + 1):
        for subset in combinations(range(g.n_vertices), size):
            s = set(subset)
            nbhd = {w for u in s for w in g.neighbors(u)} - s
            ratio = Fraction(len(nbhd), size)
            if best is None or ratio < best:
                best = ratio
    return best


def test_expansion_k4_and_k33():
    report = check_expansion(gen_cubic(4, seed=0))
    assert report.passes and report.worst_ratio == 1
    report = check_expansion(k33())
    assert report.passes and report.worst_ratio == 1


def test_expansion_two_k4():
    report = check_expansion(two_k4())
    assert not report.passes
    assert report.worst_ratio == 0
    assert report.worst_set == frozenset({0, 1, 2, 3})


def test_expansion_agrees_with_second_implementation():
    for seed in range(40):
        g = gen_cubic([4, 6, 8, 10][seed % 4], seed)
        report = check_expansion(g)
        assert report.worst_ratio == brute_expansion(g)
        s = report.worst_set
        nbhd = {w for u in s for w in g.neighbors(u)} - s
        assert Fraction(len(nbhd), len(s)) == report.worst_ratio
        assert 1 <= len(s) <= g.n_vertices // 2


def test_expansion_beta_is_exact():
    g = two_k4()
    assert check_expansion(g, Fraction(0)).passes
    report = check_expansion(k33(), Fraction(1))
    assert report.passes
    assert not check_expansion(k33(), Fraction(1) + Fraction(1, 10 ** 12)).passes


def test_expansion_size_limit():
    with pytest.raises(SizeError):
        check_expansion(gen_cubic(30, seed=1))
    with pytest.raises(SizeError):
        check_expansion(gen_cubic(12, seed=1), limit=10)


def test_expansion_survey_finds_expanders():
    table = expansion_survey([10, 12, 14], samples=100, seed=0)
    assert list(table["two_n"]) == [10, 12, 14]
    assert (table["passing"] >= 1).all()
    assert (table["passing"] <= table["connected"]).all()
    assert all(f == Fraction(p, 100) for f, p in zip(table["fraction"], table["passing"]))


def test_is_connected():
    assert not is_connected(two_k4())
    assert is_connected(k33())


# ============================================================================
# COTAS POR CONTEO
# ============================================================================

def q2_placement():
    return Placement.from_texts({0: "00", 1: "10", 2: "11", 3: "01"})


def test_bound_k4_on_q2():
    report = bound_report(complete_graph(4), q2_placement(), 2)
    assert report.hamming_sum == 8
    assert report.lower_bound == 6
    assert report.host_capacity == 4
    assert report.placements_checked == 24
    assert report.cut_sizes == (4, 4)
    assert report.side_sizes == (2, 2)
    assert report.weight_sum == 4
    assert report.expansion_lower_bound == Fraction(9, 50) * 4 - 2


def test_bound_single_edge():
    g = GuestGraph.from_edges([(0, 1)])
    report = bound_report(g, Placement.from_texts({0: "00", 1: "11"}), 2)
    assert report.hamming_sum == 2
    assert report.cut_sizes == (1, 1)
    assert report.side_sizes == (1, 1)


def test_bound_errors():
    with pytest.raises(ValidationError):
        Placement.from_texts({0: "00", 1: "00"})
    with pytest.raises(ValidationError):
        bound_report(complete_graph(4), Placement.from_texts({0: "00", 1: "10"}), 2)
    with pytest.raises(ValidationError):
        bound_report(complete_graph(4), q2_placement(), 3)
    with pytest.raises(ParameterError):
        bound_report(complete_graph(3), Placement.from_texts({0: "00", 1: "10", 2: "11"}), 2)


def test_cut_identity_random_placements():
    """100 colocaciones aleatorias: suma de |E_i| = suma de distancias"""
    rng = random.Random(99)
    for seed in range(100):
        g = random_guest(rng.randint(1, 30), seed)
        if g.n_vertices % 2:
            g = GuestGraph.from_edges(g.edges + [(g.n_vertices - 1, g.n_vertices)])
        d = max(1, math.ceil(math.log2(g.n_vertices))) + rng.randint(0, 3)
        values = rng.sample(range(1 << d), g.n_vertices)
        placement = Placement({u: CubeVertex(d, x) for u, x in enumerate(values)})
        report = bound_report(g, placement, d)
        direct = sum(bin(values[u] ^ values[w]).count("1") for u, w in g.edges)
        assert report.hamming_sum == direct == sum(report.cut_sizes)
        assert all(2 * s <= g.n_vertices for s in report.side_sizes)
        assert report.lower_bound == direct - g.n_vertices // 2


# ============================================================================
# CERTIFICADO DE NO-MENOR
# ============================================================================

def test_certificate_k4_q2():
    report = subcubic_nonminor_certificate(complete_graph(4), 2)
    assert report.certified
    assert report.min_lower_bound == 6
    assert report.host_capacity == 4


def test_certificate_inconclusive_cases():
    report = subcubic_nonminor_certificate(complete_graph(2), 1)
    assert not report.certified and report.min_lower_bound == 0
    report = subcubic_nonminor_certificate(cycle_graph(4), 2)
    assert not report.certified and report.min_lower_bound == 2


def test_certificate_enumerates_every_placement():
    """El mínimo sale de todas las colocaciones inyectivas, sin fijar ningún vértice"""
    g = cycle_graph(6)
    report = subcubic_nonminor_certificate(g, 3)
    assert report.placements_checked == math.perm(8, 6)
    assert not report.certified and report.min_lower_bound == 3
    report = subcubic_nonminor_certificate(cycle_graph(4), 3)
    assert report.placements_checked == math.perm(8, 4)
    assert report.min_lower_bound == 2


def test_certificate_too_many_vertices_for_host():
    report = subcubic_nonminor_certificate(complete_graph(4), 1)
    assert report.certified and report.min_lower_bound is None


def test_certificate_preconditions():
    with pytest.raises(ParameterError):
        subcubic_nonminor_certificate(
            GuestGraph.from_edges([(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (4, 5)]), 3)
    with pytest.raises(ParameterError):
        subcubic_nonminor_certificate(complete_graph(3), 2)
    with pytest.raises(SizeError):
        subcubic_nonminor_certificate(gen_cubic(8, seed=0), 3)
    with pytest.raises(SizeError):
        subcubic_nonminor_certificate(complete_graph(4), 5)


# ============================================================================
# ARITMÉTICA FINAL
# ============================================================================

def test_weight_tail_examples():
    assert weight_tail(4) == 5
    assert weight_tail(8) == 37
    for d in range(1, 65):
        assert weight_tail(d) == sum(math.comb(d, w) for w in range(0, d // 4 + 1))


def test_weight_tail_threshold():
    assert weight_tail(4) * 4 >= 2 ** 4
    assert weight_tail(8) * 8 >= 2 ** 8
    assert weight_tail_threshold(64) == (1, 9)


def test_theorem_inequality_examples():
    assert not theorem_inequality(100).holds
    assert not theorem_inequality(2000).holds
    report = theorem_inequality(2001)
    assert report.holds and report.tail_ok
    assert report.rhs == 2 ** 2001
    assert report.lhs == Fraction(81, 80) * 2 ** 2001 - Fraction(25 * 2 ** 2001, 2001)


def test_theorem_scan_matches_closed_form():
    assert theorem_scan(2001) == 2001
    assert theorem_scan(1500) is None
    for d in (1, 80, 1999, 2000, 2001, 2500):
        assert theorem_inequality(d).holds == (Fraction(1, 80) * d > 25)


def test_theorem_order_interval():
    report = theorem_inequality(10)
    lo, hi = report.order_interval
    assert lo % 2 == 0 and hi % 2 == 0
    assert Fraction(45 * 1024, 10) <= lo <= hi <= Fraction(50 * 1024, 10)
    assert report.edge_ceiling == Fraction(100 * 1024, 10)
