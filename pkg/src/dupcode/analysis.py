"""Cardinality bounds, exact counting and a tiny-instance optimal-code oracle.

The bounds are asymptotic coefficient evaluations: for fixed (q, t, k) the
size M_q(n; t; k) of an optimal code satisfies, as n -> infinity,

    q^n/n^t (q/(q-1))^t  <~  M  <~  q^n/n^t (q/(q-1))^t q^{ks} s! (t-s)!

with s = floor((t+1)/(q^k+1)).  Neither side is a finite-n guarantee.
All arithmetic is exact (ints and Fractions).
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from dupcode.codes import weight_class
from dupcode.sidon import EnumerationLimitError
from dupcode.verify import BallSpec, ball_runs
from dupcode.words import Word, run_decomposition

DEFAULT_ORACLE_LIMIT = 1 << 20


# ---------------------------------------------------------------- bounds


def a_s(q: int, k: int, t: int, s: int) -> int:
    return q ** (k * s) * math.factorial(s) * math.factorial(t - s)


def s_opt(q: int, k: int, t: int) -> int:
    """Minimiser of q^{ks} s! (t-s)! over 0 <= s <= t."""
    if q < 2 or k < 1 or t < 1:
        raise ValueError("need q >= 2, k >= 1, t >= 1")
    return (t + 1) // (q**k + 1)


def coeff_lower(q: int, t: int) -> Fraction:
    return Fraction(q, q - 1) ** t


def coeff_upper(q: int, k: int, t: int, s: int | None = None) -> Fraction:
    if s is None:
        s = s_opt(q, k, t)
    return Fraction(q, q - 1) ** t * a_s(q, k, t, s)


def levenshtein_s(t: int) -> int:
    """The s used by the older binary bound: 0 for odd t, t/2 for even t."""
    return 0 if t % 2 else t // 2


def bound_lower(n: int, q: int, t: int, k: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(q**n, n**t) * coeff_lower(q, t)


def bound_upper(n: int, q: int, t: int, k: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(q**n, n**t) * coeff_upper(q, k, t)


@dataclass(frozen=True)
class BoundReport:
    n: int
    q: int
    t: int
    k: int
    s_opt: int
    lower: Fraction
    upper: Fraction
    coeff_lower: Fraction
    coeff_upper: Fraction

    def to_json(self) -> dict:
        return {
            "kind": "asymptotic coefficient evaluation",
            "n": self.n,
            "q": self.q,
            "t": self.t,
            "k": self.k,
            "s_opt": self.s_opt,
            "coeff_lower": str(self.coeff_lower),
            "coeff_upper": str(self.coeff_upper),
            "lower": str(self.lower),
            "upper": str(self.upper),
            "lower_float": float(self.lower),
            "upper_float": float(self.upper),
        }


def bound_report(n: int, q: int, t: int, k: int) -> BoundReport:
    return BoundReport(
        n, q, t, k, s_opt(q, k, t),
        bound_lower(n, q, t, k), bound_upper(n, q, t, k),
        coeff_lower(q, t), coeff_upper(q, k, t),
    )


def min_output_count(w: int, m: int, s: int, t: int) -> int:
    """C(w+s, s) * C(m-s, t-s): outputs of s insertions and t-s deletions, at least."""
    if not 0 <= s <= t:
        raise ValueError("need 0 <= s <= t")
    if m - s < t - s or m < s:
        return 0
    return math.comb(w + s, s) * math.comb(m - s, t - s)


# -------------------------------------------------------------- counting


def count_weight(n: int, q: int, w: int) -> int:
    if not 0 <= w <= n:
        return 0
    return math.comb(n, w) * (q - 1) ** w


def run_count_table(n: int, w: int, k: int) -> list[int]:
    """table[m] = number of run profiles (compositions of n-w into w+1 parts)
    with exactly m parts >= k."""
    zeros = n - w
    if zeros < 0:
        return []
    parts = w + 1
    # dp[z][m]: ways to fill the parts seen so far with z zeros and m long parts
    dp = [[0] * (parts + 1) for _ in range(zeros + 1)]
    dp[0][0] = 1
    for _ in range(parts):
        new = [[0] * (parts + 1) for _ in range(zeros + 1)]
        for z in range(zeros + 1):
            row = dp[z]
            for m, ways in enumerate(row):
                if not ways:
                    continue
                for r in range(zeros - z + 1):
                    new[z + r][m + (r >= k)] += ways
        dp = new
    return dp[zeros]


def count_weight_runs(n: int, q: int, w: int, k: int, m: int) -> int:
    """Words of length n, weight w, with exactly m zero-runs of length >= k."""
    if not 0 <= w <= n or m < 0:
        return 0
    table = run_count_table(n, w, k)
    return table[m] * (q - 1) ** w if m < len(table) else 0


# ------------------------------------------------------------ typicality


@dataclass(frozen=True)
class TypicalityReport:
    q: int
    k: int
    n: int
    samples: int
    seed: int
    omega: float
    mu: float
    omega_hat: float
    mu_hat: float
    omega_dev_quantiles: dict[str, float]
    mu_dev_quantiles: dict[str, float]

    def to_json(self) -> dict:
        return self.__dict__ | {}


def typical_omega(q: int) -> float:
    return (q - 1) / q


def typical_mu(q: int, k: int) -> float:
    return (q - 1) / q ** (k + 1)


def long_run_counts(words: np.ndarray, k: int) -> np.ndarray:
    """Per row, the number of maximal zero runs of length >= k."""
    rows, n = words.shape
    # a non-zero sentinel column on each side keeps runs inside their row
    padded = np.ones((rows, n + 2), dtype=np.int8)
    padded[:, 1:-1] = words == 0
    padded[:, 0] = 0
    padded[:, -1] = 0
    flat = padded.ravel()
    edges = np.diff(flat.astype(np.int8))
    starts = np.flatnonzero(edges == 1) + 1
    ends = np.flatnonzero(edges == -1) + 1
    lengths = ends - starts
    row_of = starts // (n + 2)
    return np.bincount(row_of[lengths >= k], minlength=rows)


def typicality_stats(n: int, q: int, k: int, samples: int, seed: int, batch: int = 200) -> TypicalityReport:
    if n < 1 or samples < 1:
        raise ValueError("need n >= 1 and samples >= 1")
    rng = np.random.default_rng(seed)
    weights = np.empty(samples)
    runs = np.empty(samples)
    for lo in range(0, samples, batch):
        hi = min(samples, lo + batch)
        words = rng.integers(0, q, size=(hi - lo, n), dtype=np.int32)
        weights[lo:hi] = np.count_nonzero(words, axis=1)
        runs[lo:hi] = long_run_counts(words, k)
    omega, mu = typical_omega(q), typical_mu(q, k)
    levels = (0.5, 0.9, 0.99)
    w_dev = np.abs(weights / n - omega)
    m_dev = np.abs(runs / n - mu)
    return TypicalityReport(
        q, k, n, samples, seed, omega, mu,
        float(weights.mean() / n), float(runs.mean() / n),
        {str(a): float(np.quantile(w_dev, a)) for a in levels},
        {str(a): float(np.quantile(m_dev, a)) for a in levels},
    )


# --------------------------------------------------------- exact oracle


def _components(adj: Sequence[int]) -> list[int]:
    left = (1 << len(adj)) - 1
    comps = []
    while left:
        v = left.bit_length() - 1
        comp, frontier = 0, 1 << v
        while frontier:
            comp |= frontier
            nxt = 0
            f = frontier
            while f:
                u = f.bit_length() - 1
                f &= ~(1 << u)
                nxt |= adj[u]
            frontier = nxt & ~comp
        comps.append(comp)
        left &= ~comp
    return comps


def max_independent_set(adj: Sequence[int]) -> list[int]:
    """Exact maximum independent set of a graph given as neighbour bitmasks.

    Branch and bound per connected component: vertices of degree <= 1 are
    taken greedily, otherwise branch on a maximum-degree vertex (take it /
    drop it).  The bound is a greedy clique cover of the remaining vertices.
    """

    def popcount(x: int) -> int:
        return bin(x).count("1")

    def clique_cover(mask: int) -> int:
        cliques = 0
        rest = mask
        while rest:
            v = rest.bit_length() - 1
            clique_nb = adj[v] & rest
            rest &= ~(1 << v)
            while clique_nb:
                u = clique_nb.bit_length() - 1
                rest &= ~(1 << u)
                clique_nb &= adj[u]
            cliques += 1
        return cliques

    best = [0, 0]  # size, members

    def solve(mask: int, taken: int, size: int) -> None:
        reduced = True
        while reduced:
            reduced = False
            m = mask
            while m:
                v = m.bit_length() - 1
                m &= ~(1 << v)
                if popcount(adj[v] & mask) <= 1:
                    taken |= 1 << v
                    size += 1
                    mask &= ~((1 << v) | adj[v])
                    m &= mask
                    reduced = True
        if not mask:
            if size > best[0]:
                best[:] = [size, taken]
            return
        if size + clique_cover(mask) <= best[0]:
            return
        v, deg = -1, -1
        m = mask
        while m:
            u = m.bit_length() - 1
            m &= ~(1 << u)
            d = popcount(adj[u] & mask)
            if d > deg:
                v, deg = u, d
        solve(mask & ~((1 << v) | adj[v]), taken | (1 << v), size + 1)
        solve(mask & ~(1 << v), taken, size)

    chosen = 0
    for comp in _components(adj):
        best[:] = [0, 0]
        solve(comp, 0, 0)
        chosen |= best[1]
    return [i for i in range(len(adj)) if chosen >> i & 1]


def conflict_graph(words: Sequence[Word], t: int, k: int) -> list[int]:
    """Neighbour bitmasks: x ~ y when t insertions of 0^k can map both to one output.

    Exactly-t insertion balls suffice: extra blocks in run 0 carry any
    smaller collision up to t insertions.
    """
    owners: dict[tuple[int, ...], list[int]] = defaultdict(list)
    spec = BallSpec(t, 0, k)
    for idx, x in enumerate(words):
        p = run_decomposition(x)
        for r in ball_runs(p.zero_runs, spec):
            owners[p.nonzeros + (-1,) + r].append(idx)
    adj = [0] * len(words)
    for group in owners.values():
        if len(group) > 1:
            mask = 0
            for i in group:
                mask |= 1 << i
            for i in group:
                adj[i] |= mask & ~(1 << i)
    return adj


@dataclass(frozen=True)
class OracleResult:
    n: int
    q: int
    t: int
    k: int
    size: int
    per_weight: tuple[int, ...]
    code: tuple[Word, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "t": self.t,
            "k": self.k,
            "size": self.size,
            "per_weight": list(self.per_weight),
            "code": [str(x) for x in self.code],
        }


def exact_optimal(n: int, q: int, t: int, k: int, limit: int = DEFAULT_ORACLE_LIMIT) -> OracleResult:
    """Largest code correcting t insertions of 0^k, by exact MIS per weight class."""
    if q**n > limit:
        raise EnumerationLimitError(f"q^n = {q ** n} exceeds the oracle limit {limit}")
    if t > 2:
        raise EnumerationLimitError("the oracle is restricted to t <= 2")
    per_weight = []
    code: list[Word] = []
    for w in range(n + 1):
        words = list(weight_class(q, n, w, limit))
        adj = conflict_graph(words, t, k)
        members = max_independent_set(adj)
        per_weight.append(len(members))
        code.extend(words[i] for i in members)
    return OracleResult(n, q, t, k, sum(per_weight), tuple(per_weight), tuple(sorted(code)))
