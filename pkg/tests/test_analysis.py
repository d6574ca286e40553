from fractions import Fraction
from itertools import groupby, product
import math

import networkx as nx
import pytest

from dupcode.analysis import (
    a_s,
    bound_lower,
    bound_report,
    bound_upper,
    coeff_lower,
    coeff_upper,
    conflict_graph,
    count_weight,
    count_weight_runs,
    exact_optimal,
    levenshtein_s,
    long_run_counts,
    max_independent_set,
    min_output_count,
    s_opt,
    typicality_stats,
    typical_mu,
    typical_omega,
)
from dupcode.codes import best_offset, make_spec
from dupcode.sidon import EnumerationLimitError
from dupcode.words import Word
from oracles import raw_ball, raw_long_runs, raw_weight, words_of_weight

import numpy as np


@pytest.mark.parametrize("q, k, t, s", [(2, 1, 3, 1), (2, 1, 1, 0), (3, 2, 9, 1), (2, 1, 5, 2), (2, 2, 4, 1)])
def test_s_opt_examples(q, k, t, s):
    assert s_opt(q, k, t) == s


@pytest.mark.parametrize("q", range(2, 6))
@pytest.mark.parametrize("k", range(1, 4))
def test_s_opt_is_minimiser_and_sequence_convex(q, k):
    for t in range(1, 13):
        seq = [a_s(q, k, t, s) for s in range(t + 1)]
        assert seq[s_opt(q, k, t)] == min(seq)
        for s in range(1, t):
            assert seq[s] ** 2 < seq[s - 1] * seq[s + 1]
            assert 2 * seq[s] <= seq[s - 1] + seq[s + 1]


def test_bound_examples():
    assert bound_lower(20, 2, 1, 1) == bound_upper(20, 2, 1, 1) == Fraction(2**20 * 2, 20)
    assert float(bound_lower(20, 2, 1, 1)) == pytest.approx(104857.6, abs=0)
    # binary, k = 1: coefficient 2^{t+s} s! (t-s)!
    assert coeff_upper(2, 1, 3) == 32
    assert coeff_upper(2, 1, 3) == 2 ** (3 + 1) * math.factorial(1) * math.factorial(2)
    assert coeff_lower(2, 3) == 8


def test_binary_bound_improves_from_t3():
    assert coeff_upper(2, 1, 2) == 8 == coeff_upper(2, 1, 2, s=0) == coeff_upper(2, 1, 2, s=levenshtein_s(2))
    for t in range(3, 20):
        assert coeff_upper(2, 1, t) < coeff_upper(2, 1, t, s=levenshtein_s(t))
    for t in (1, 2):
        assert coeff_upper(2, 1, t) == coeff_upper(2, 1, t, s=levenshtein_s(t))


@pytest.mark.parametrize("q", [2, 3, 4, 7])
@pytest.mark.parametrize("k", [1, 2, 5])
def test_t1_bounds_coincide(q, k):
    assert coeff_lower(q, 1) == coeff_upper(q, k, 1) == Fraction(q, q - 1)
    r = bound_report(50, q, 1, k)
    assert r.lower == r.upper


def test_bound_report_ordering():
    for q in range(2, 5):
        for k in range(1, 3):
            for t in range(1, 8):
                r = bound_report(40, q, t, k)
                assert r.lower <= r.upper
                assert r.to_json()["kind"] == "asymptotic coefficient evaluation"


def test_s0_upper_is_k_free():
    for t in range(1, 6):
        assert coeff_upper(2, 1, t, s=0) == coeff_upper(2, 3, t, s=0) == Fraction(2) ** t * math.factorial(t)


def test_min_output_count_examples():
    assert min_output_count(2, 1, 1, 1) == 3
    assert min_output_count(5, 3, 0, 0) == 1
    assert min_output_count(3, 2, 0, 2) == 1
    assert min_output_count(3, 1, 0, 2) == 0


@pytest.mark.parametrize("n, q, w, expected", [(5, 2, 2, 10), (4, 3, 2, 24), (7, 5, 0, 1)])
def test_count_weight(n, q, w, expected):
    assert count_weight(n, q, w) == expected


def test_count_weight_runs_examples():
    assert count_weight_runs(3, 2, 1, 1, 1) == 2
    assert count_weight_runs(3, 2, 1, 1, 2) == 1
    for n in range(6):
        for k in range(1, 4):
            for m in range(3):
                assert count_weight_runs(n, 3, 0, k, m) == (1 if m == (1 if n >= k else 0) else 0)


@pytest.mark.parametrize("q", [2, 3])
def test_count_weight_runs_exhaustive(q):
    for n in range(0, 9 if q == 3 else 11):
        tally = {}
        for s in product(range(q), repeat=n):
            w = raw_weight(s)
            for k in range(1, n + 2):
                key = (w, k, raw_long_runs(s, k))
                tally[key] = tally.get(key, 0) + 1
        for w in range(n + 1):
            for k in range(1, n + 2):
                total = 0
                for m in range(w + 2):
                    c = count_weight_runs(n, q, w, k, m)
                    assert c == tally.get((w, k, m), 0)
                    total += c
                assert total == count_weight(n, q, w)


def test_long_run_counts_vectorised():
    rng = np.random.default_rng(3)
    words = rng.integers(0, 3, size=(50, 23))
    for k in (1, 2, 3):
        got = long_run_counts(words, k)
        assert list(got) == [raw_long_runs(tuple(row), k) for row in words]


def test_typical_values():
    assert typical_omega(2) == 0.5 and typical_mu(2, 1) == 0.25
    assert typical_omega(4) == 0.75 and typical_mu(4, 1) == 0.1875


def test_typicality_small_n():
    r = typicality_stats(1, 2, 1, 2000, seed=4)
    assert abs(r.omega_hat - 0.5) < 0.05
    assert typicality_stats(1, 2, 1, 2000, seed=4) == r


@pytest.mark.parametrize("q, k", [(2, 1), (3, 2)])
def test_typicality_concentration(q, k):
    n = 2000
    r = typicality_stats(n, q, k, 300, seed=11)
    omega, mu = typical_omega(q), typical_mu(q, k)
    assert abs(r.omega_hat - omega) <= 3 * math.sqrt(omega * (1 - omega) / n)
    assert abs(r.mu_hat - mu) <= 0.01
    assert 0 <= r.mu_hat <= r.omega_hat <= 1


def _nx_optimal(q, n, t, k):
    """Independent oracle: raw-edit balls, conflict graph, max clique of the complement."""
    total = 0
    for w in range(n + 1):
        words = words_of_weight(q, n, w)
        balls = [raw_ball(x, t, 0, k) for x in words]
        G = nx.Graph()
        G.add_nodes_from(range(len(words)))
        for i in range(len(words)):
            for j in range(i + 1, len(words)):
                if balls[i] & balls[j]:
                    G.add_edge(i, j)
        clique, size = nx.max_weight_clique(nx.complement(G), weight=None)
        total += size
    return total


def test_exact_optimal_examples():
    r = exact_optimal(3, 2, 1, 1)
    assert r.size == 5 and r.per_weight == (1, 2, 1, 1)
    assert exact_optimal(1, 2, 1, 1).size == 2


@pytest.mark.parametrize(
    "n, q, t, k", [(3, 2, 1, 1), (5, 2, 1, 1), (6, 2, 2, 1), (5, 2, 1, 2), (4, 3, 1, 1), (4, 3, 2, 2)]
)
def test_exact_optimal_matches_networkx(n, q, t, k):
    assert exact_optimal(n, q, t, k).size == _nx_optimal(q, n, t, k)


@pytest.mark.parametrize("n, q, t, k", [(6, 2, 1, 1), (7, 2, 2, 1), (5, 3, 1, 2)])
def test_oracle_witness_is_a_code(n, q, t, k):
    from dupcode.verify import balls_disjoint

    r = exact_optimal(n, q, t, k)
    assert len(r.code) == r.size
    assert balls_disjoint(r.code, t, k, "ins").disjoint


@pytest.mark.parametrize("n, q, t, k", [(6, 2, 1, 1), (7, 2, 1, 1), (7, 2, 2, 1), (6, 2, 2, 2), (4, 3, 1, 1), (5, 3, 1, 2)])
def test_oracle_dominates_construction(n, q, t, k):
    r = exact_optimal(n, q, t, k)
    for w in range(n + 1):
        spec = make_spec(q, n, w, t, k)
        _, size = best_offset(q, n, w, t, k, spec.B)
        assert r.per_weight[w] >= size


def test_mis_small_graphs():
    # 5-cycle: independence number 2; path on 4 vertices: 2; empty graph on 3: 3
    cycle = [(1 << 1) | (1 << 4), (1 << 0) | (1 << 2), (1 << 1) | (1 << 3), (1 << 2) | (1 << 4), (1 << 3) | (1 << 0)]
    assert len(max_independent_set(cycle)) == 2
    path = [0b0010, 0b0101, 0b1010, 0b0100]
    assert len(max_independent_set(path)) == 2
    assert len(max_independent_set([0, 0, 0])) == 3


def test_mis_random_graphs_against_networkx():
    rng = np.random.default_rng(0)
    for trial in range(40):
        n = int(rng.integers(1, 18))
        G = nx.gnp_random_graph(n, float(rng.uniform(0.1, 0.7)), seed=trial)
        adj = [sum(1 << j for j in G[i]) for i in range(n)]
        members = max_independent_set(adj)
        assert all(not (adj[i] >> j & 1) for i in members for j in members)
        _, size = nx.max_weight_clique(nx.complement(G), weight=None)
        assert len(members) == size


def test_oracle_guards():
    with pytest.raises(EnumerationLimitError):
        exact_optimal(21, 2, 1, 1)
    with pytest.raises(EnumerationLimitError):
        exact_optimal(4, 2, 3, 1)
