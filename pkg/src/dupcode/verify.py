"""Brute-force ground truth for 0^k-block insertion/deletion codes.

Balls are computed on run-length vectors: inserting a block adds k to one
run, deleting subtracts k from a run of length >= k.  Because edits only
add or subtract on run lengths, applying all insertions before all
deletions reaches every output that some interleaving reaches.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Literal, Sequence

from dupcode.channel import InfeasibleEditError, simulate, simulate_duplications
from dupcode.codes import CodeSpec, DecodingError, decode, dup_decode, enumerate_code
from dupcode.sidon import EnumerationLimitError
from dupcode.words import Word, assemble, phi_inv, run_decomposition

Mode = Literal["ins", "del", "indel"]

DEFAULT_BALL_LIMIT = 10**6


@dataclass(frozen=True)
class BallSpec:
    t_ins: int
    t_del: int
    k: int

    def __post_init__(self) -> None:
        if self.t_ins < 0 or self.t_del < 0 or self.k < 1:
            raise ValueError("need t_ins, t_del >= 0 and k >= 1")


def _distribute(runs: tuple[int, ...], count: int, k: int, sign: int) -> set[tuple[int, ...]]:
    out = set()
    for combo in combinations_with_replacement(range(len(runs)), count):
        new = list(runs)
        for i in combo:
            new[i] += sign * k
        if sign > 0 or all(r >= 0 for r in new):
            out.add(tuple(new))
    return out


def ball_runs(runs: tuple[int, ...], spec: BallSpec) -> set[tuple[int, ...]]:
    inserted = _distribute(runs, spec.t_ins, spec.k, +1)
    result: set[tuple[int, ...]] = set()
    for r in inserted:
        result |= _distribute(r, spec.t_del, spec.k, -1)
    return result


def output_ball(x: Word, spec: BallSpec, limit: int = DEFAULT_BALL_LIMIT) -> set[Word]:
    """Every word reachable by exactly t_ins insertions and t_del deletions of 0^k."""
    from math import comb

    p = run_decomposition(x)
    size = comb(p.w + spec.t_ins, spec.t_ins) * comb(p.w + spec.t_del, spec.t_del)
    if size > limit:
        raise EnumerationLimitError(f"ball enumeration of {size} patterns exceeds {limit}")
    return {assemble(p.with_runs(r)) for r in ball_runs(p.zero_runs, spec)}


def ball_specs(t: int, k: int, mode: Mode) -> list[BallSpec]:
    if mode == "ins":
        return [BallSpec(j, 0, k) for j in range(t + 1)]
    if mode == "del":
        return [BallSpec(0, j, k) for j in range(t + 1)]
    if mode == "indel":
        return [BallSpec(i, j, k) for i in range(t + 1) for j in range(t + 1 - i)]
    raise ValueError(f"unknown mode {mode!r}")


def full_ball(x: Word, t: int, k: int, mode: Mode = "indel") -> set[Word]:
    """Union of the balls for every edit budget allowed by the mode."""
    out: set[Word] = set()
    for spec in ball_specs(t, k, mode):
        out |= output_ball(x, spec)
    return out


@dataclass(frozen=True)
class Verdict:
    disjoint: bool
    witness: tuple[Word, Word, Word] | None = None  # (codeword, codeword, shared output)

    def to_json(self) -> dict:
        return {
            "disjoint": self.disjoint,
            "witness": None if self.witness is None else [str(w) for w in self.witness],
        }


def balls_disjoint(code: Iterable[Word], t: int, k: int, mode: Mode = "indel") -> Verdict:
    """Do the t-edit output sets of distinct codewords avoid each other?

    Outputs of different lengths never clash, so comparing full balls is the
    same as comparing per output length.  The reported witness is the
    lexicographically smallest (x, x', y) triple.
    """
    owners: dict[Word, list[Word]] = defaultdict(list)
    for x in sorted(set(code)):
        for y in full_ball(x, t, k, mode):
            owners[y].append(x)
    best = None
    for y, xs in owners.items():
        if len(xs) > 1:
            cand = (xs[0], xs[1], y)
            if best is None or (cand[0].symbols, cand[1].symbols, cand[2].symbols) < (
                best[0].symbols,
                best[1].symbols,
                best[2].symbols,
            ):
                best = cand
    return Verdict(best is None, best)


@dataclass
class TrialReport:
    trials: int
    failures: int
    domain: str
    by_pattern: dict[str, int] = field(default_factory=dict)
    first_failure: dict | None = None

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "failures": self.failures,
            "domain": self.domain,
            "by_pattern": dict(sorted(self.by_pattern.items())),
            "first_failure": self.first_failure,
        }


def roundtrip_trials(spec: CodeSpec, trials: int, seed: int, domain: str = "zero") -> TrialReport:
    """Random codeword, random <= t edits, decode, compare.

    ``domain="zero"`` mixes 0^k insertions and deletions; ``"duplication"``
    sends phi_k^{-1} codewords through up to t length-k duplications.
    """
    rng = random.Random(seed)
    code = enumerate_code(spec)
    if not code:
        raise ValueError("the code is empty")
    tally: Counter = Counter()
    failures = 0
    first = None
    for _ in range(trials):
        x = code[rng.randrange(len(code))]
        sub_seed = rng.randrange(2**63)
        total = rng.randint(0, spec.t)
        if domain == "duplication":
            x_dup = phi_inv(x, spec.k)
            try:
                trace = simulate_duplications(x_dup, total, spec.k, sub_seed)
            except InfeasibleEditError:
                trace = simulate_duplications(x_dup, 0, spec.k, sub_seed)
            label = f"dup{len(trace.events)}"
            try:
                ok = dup_decode(trace.output, spec) == x_dup
            except DecodingError:
                ok = False
        elif domain == "zero":
            t_del = rng.randint(0, total)
            t_ins = total - t_del
            while True:
                try:
                    trace = simulate(x, t_ins, t_del, spec.k, sub_seed)
                    break
                except InfeasibleEditError:
                    t_del -= 1
            label = f"ins{t_ins}_del{t_del}"
            try:
                ok = decode(trace.output, spec).codeword == x
            except DecodingError:
                ok = False
        else:
            raise ValueError(f"unknown domain {domain!r}")
        tally[label] += 1
        if not ok:
            failures += 1
            if first is None:
                first = trace.to_json()
    return TrialReport(trials, failures, domain, dict(tally), first)


def lemma_equivalence(code: Sequence[Word], t: int, k: int) -> dict[str, bool]:
    """Disjointness verdict for insertion-only, deletion-only and mixed balls."""
    return {mode: balls_disjoint(code, t, k, mode).disjoint for mode in ("ins", "del", "indel")}
