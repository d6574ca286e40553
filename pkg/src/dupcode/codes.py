"""Codes built from Sidon sets that correct t insertions of 0^k blocks.

The code with parameters (q, n, w, t, k, G, B, b) is

    { x in Z_q^n : wt(x) = w,  sum_{i=1..w} floor(r_i(x)/k) * b_i = b }

where r_i(x) is the run of zeros after the i-th non-zero symbol.  Inserting
u_i blocks into run i shifts the check-sum by sum u_i b_i, which the Sidon
property makes invertible.  Applying phi_k^{-1} to every codeword gives a
code for the k-duplication channel.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator, Sequence

from dupcode.sidon import (
    DEFAULT_ENUM_LIMIT,
    AbelianGroup,
    Element,
    EnumerationLimitError,
    SidonSet,
    find_collision,
    multiplicity_vectors,
    sidon_for,
)
from dupcode.words import RunProfile, Word, assemble, phi, phi_inv, run_decomposition

DEFAULT_CODE_LIMIT = 10**6


class DecodingError(ValueError):
    """The received word cannot be explained by at most t block edits."""


class SyndromeNotFoundError(DecodingError):
    pass


class AmbiguousDecodingError(DecodingError):
    pass


class SidonCollisionError(ValueError):
    pass


@dataclass(frozen=True)
class CodeSpec:
    q: int
    n: int
    w: int
    t: int
    k: int
    B: SidonSet
    b: Element

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError("q must be >= 2")
        if not 0 <= self.w <= self.n:
            raise ValueError("weight must satisfy 0 <= w <= n")
        if self.t < 0 or self.k < 1:
            raise ValueError("need t >= 0 and k >= 1")
        if len(self.B) != self.w:
            raise ValueError(f"|B| = {len(self.B)} but w = {self.w}")
        if self.B.t < self.t or self.B.exact_only:
            raise ValueError("B must be a full Sidon set of order >= t")
        object.__setattr__(self, "b", self.group.element(self.b))

    @property
    def group(self) -> AbelianGroup:
        return self.B.group

    @property
    def elements(self) -> tuple[Element, ...]:
        return self.B.elements

    def with_offset(self, b) -> "CodeSpec":
        return CodeSpec(self.q, self.n, self.w, self.t, self.k, self.B, self.group.element(b))

    @cached_property
    def syndrome_table(self) -> dict[Element, tuple[int, ...]]:
        return build_syndrome_table(self)

    def to_json(self, codewords: Sequence[Word] | None = None) -> dict:
        obj = {
            "q": self.q,
            "n": self.n,
            "w": self.w,
            "t": self.t,
            "k": self.k,
            "group": {"factors": list(self.group.factors)},
            "B": [list(e) for e in self.elements],
            "b": list(self.b),
        }
        if codewords is not None:
            obj["codewords"] = [str(c) for c in codewords]
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "CodeSpec":
        G = AbelianGroup(tuple(obj["group"]["factors"]))
        B = SidonSet(G, tuple(G.element(e) for e in obj["B"]), int(obj["t"]))
        return cls(obj["q"], obj["n"], obj["w"], obj["t"], obj["k"], B, G.element(obj["b"]))


def make_spec(q: int, n: int, w: int, t: int, k: int, b=None, method: str = "greedy") -> CodeSpec:
    """CodeSpec with a full B_t set from :func:`sidon_for`; b defaults to the best offset."""
    B = sidon_for(w, max(t, 1), method)
    if w == 0:
        B = SidonSet(B.group, (), max(t, 1))
    if b is None:
        b, _ = best_offset(q, n, w, t, k, B)
    return CodeSpec(q, n, w, t, k, B, B.group.element(b))


def _floor_sum(spec: CodeSpec, runs: Sequence[int]) -> Element:
    k = spec.k
    return spec.group.linear_combination([r // k for r in runs[1:]], spec.elements)


def checksum(x: Word, spec: CodeSpec) -> Element:
    p = run_decomposition(x)
    if p.w != spec.w:
        raise ValueError(f"word has weight {p.w}, code has weight {spec.w}")
    return _floor_sum(spec, p.zero_runs)


def is_codeword(x: Word, spec: CodeSpec) -> bool:
    if len(x) != spec.n or x.q != spec.q:
        return False
    p = run_decomposition(x)
    return p.w == spec.w and _floor_sum(spec, p.zero_runs) == spec.b


def weight_class(q: int, n: int, w: int, limit: int = DEFAULT_CODE_LIMIT) -> Iterator[Word]:
    """All words of length n and weight w, in lexicographic order."""
    size = math.comb(n, w) * (q - 1) ** w
    if size > limit:
        raise EnumerationLimitError(f"weight class has {size} words, limit is {limit}")
    words = []
    for support in combinations(range(n), w):
        for values in product(range(1, q), repeat=w):
            s = [0] * n
            for i, v in zip(support, values):
                s[i] = v
            words.append(tuple(s))
    words.sort()
    for s in words:
        yield Word(q, s)


def enumerate_code(spec: CodeSpec, limit: int = DEFAULT_CODE_LIMIT) -> list[Word]:
    return [x for x in weight_class(spec.q, spec.n, spec.w, limit) if is_codeword(x, spec)]


def offset_sizes(q: int, n: int, w: int, k: int, B: SidonSet, limit: int = DEFAULT_CODE_LIMIT) -> Counter:
    """Code size for every offset b (offsets with empty codes are absent)."""
    sizes: Counter = Counter()
    for x in weight_class(q, n, w, limit):
        runs = run_decomposition(x).zero_runs
        sizes[B.group.linear_combination([r // k for r in runs[1:]], B.elements)] += 1
    return sizes


def best_offset(q: int, n: int, w: int, t: int, k: int, B: SidonSet, limit: int = DEFAULT_CODE_LIMIT) -> tuple[Element, int]:
    """Offset giving the largest code; ties go to the smallest element."""
    sizes = offset_sizes(q, n, w, k, B, limit)
    if not sizes:
        return B.group.zero, 0
    best = max(sizes.values())
    return min(b for b, s in sizes.items() if s == best), best


def build_syndrome_table(spec: CodeSpec, limit: int = DEFAULT_ENUM_LIMIT) -> dict[Element, tuple[int, ...]]:
    """Map sum u_i b_i -> (u_1..u_w) over all u with sum <= t."""
    w, t = spec.w, spec.t
    count = math.comb(w + t, t)
    if count > limit:
        raise EnumerationLimitError(f"syndrome table would have {count} entries, limit is {limit}")
    table: dict[Element, tuple[int, ...]] = {}
    G = spec.group
    for vec in multiplicity_vectors(w, t):
        s = G.linear_combination(vec, spec.elements)
        if s in table:
            raise SidonCollisionError(
                f"B is not a Sidon set of order {t}: {table[s]} and {vec} both sum to {s}"
            )
        table[s] = vec
    return table


@dataclass(frozen=True)
class Decoded:
    codeword: Word
    pattern: tuple[int, ...]  # signed u_0..u_w: +blocks inserted, -blocks deleted per run
    method: str


def _apply_pattern(p: RunProfile, pattern: Sequence[int], k: int) -> RunProfile | None:
    runs = [r - k * u for r, u in zip(p.zero_runs, pattern)]
    if any(r < 0 for r in runs):
        return None
    return p.with_runs(runs)


def _algebraic(y: Word, p: RunProfile, spec: CodeSpec, d: int) -> Decoded | None:
    table = spec.syndrome_table
    G = spec.group
    s = _floor_sum(spec, p.zero_runs)
    # insertions raise the check-sum by sum u_i b_i, deletions lower it
    key = G.sub(s, spec.b) if d >= 0 else G.sub(spec.b, s)
    if key not in table:
        return None
    u = table[key]
    sign = 1 if d >= 0 else -1
    u0 = abs(d) - sum(u)
    if u0 < 0:
        return None
    pattern = tuple(sign * v for v in (u0,) + u)
    x_profile = _apply_pattern(p, pattern, spec.k)
    if x_profile is None:
        return None
    x = assemble(x_profile)
    if not is_codeword(x, spec):
        return None
    return Decoded(x, pattern, "syndrome")


def _signed_patterns(length: int, d: int, t: int) -> Iterator[tuple[int, ...]]:
    # vectors with sum == d and sum |u_i| <= t
    for support_size in range(0, t + 1):
        for support in combinations(range(length), support_size):
            for mags in product(range(1, t + 1), repeat=support_size):
                if sum(mags) > t:
                    continue
                for signs in product((1, -1), repeat=support_size):
                    vals = [m * s for m, s in zip(mags, signs)]
                    if sum(vals) != d:
                        continue
                    vec = [0] * length
                    for i, v in zip(support, vals):
                        vec[i] = v
                    yield tuple(vec)


def search_decode(y: Word, spec: CodeSpec) -> Decoded:
    """Exhaustive decoder over every edit pattern of at most t blocks."""
    p = run_decomposition(y)
    d = _net_blocks(y, spec)
    found: dict[Word, tuple[int, ...]] = {}
    for pattern in _signed_patterns(p.w + 1, d, spec.t):
        xp = _apply_pattern(p, pattern, spec.k)
        if xp is None:
            continue
        x = assemble(xp)
        if is_codeword(x, spec) and x not in found:
            found[x] = pattern
    if not found:
        raise SyndromeNotFoundError(f"no codeword within {spec.t} block edits of {y}")
    if len(found) > 1:
        raise AmbiguousDecodingError(f"{len(found)} codewords explain {y}: {sorted(map(str, found))}")
    (x, pattern), = found.items()
    return Decoded(x, pattern, "search")


def _net_blocks(y: Word, spec: CodeSpec) -> int:
    if y.q != spec.q:
        raise DecodingError(f"alphabet mismatch: word over Z_{y.q}, code over Z_{spec.q}")
    diff = len(y) - spec.n
    if diff % spec.k:
        raise DecodingError(f"length {len(y)} differs from n={spec.n} by a non-multiple of k={spec.k}")
    d = diff // spec.k
    if abs(d) > spec.t:
        raise DecodingError(f"net {d} blocks exceeds t={spec.t}")
    return d


def decode(y: Word, spec: CodeSpec) -> Decoded:
    """Recover the codeword from y after at most t insertions/deletions of 0^k.

    Pure insertions (or pure deletions) are undone with one syndrome lookup.
    Anything else falls back to :func:`search_decode`.
    """
    p = run_decomposition(y)
    if p.w != spec.w:
        raise DecodingError(f"received weight {p.w} differs from code weight {spec.w}")
    d = _net_blocks(y, spec)
    if spec.t == 0:
        if not is_codeword(y, spec):
            raise SyndromeNotFoundError(f"{y} is not a codeword")
        return Decoded(y, (0,) * (spec.w + 1), "syndrome")
    hit = _algebraic(y, p, spec, d)
    if hit is not None:
        return hit
    return search_decode(y, spec)


def encode(index: int, spec: CodeSpec, codebook: Sequence[Word] | None = None) -> Word:
    """Message index -> codeword in lexicographic order."""
    book = enumerate_code(spec) if codebook is None else codebook
    if not 0 <= index < len(book):
        raise IndexError(f"message index {index} outside [0, {len(book)})")
    return book[index]


def message_index(x: Word, spec: CodeSpec, codebook: Sequence[Word] | None = None) -> int:
    book = enumerate_code(spec) if codebook is None else codebook
    try:
        return list(book).index(x)
    except ValueError:
        raise ValueError(f"{x} is not a codeword") from None


def dup_encode(x: Word, spec: CodeSpec) -> Word:
    """Codeword of the 0^k code -> codeword of the duplication code."""
    if not is_codeword(x, spec):
        raise ValueError(f"{x} is not a codeword")
    return phi_inv(x, spec.k)


def dup_decode(y_dup: Word, spec: CodeSpec) -> Word:
    """Undo up to t length-k duplications of a duplication-domain codeword."""
    return phi_inv(decode(phi(y_dup, spec.k), spec).codeword, spec.k)


def dup_code(spec: CodeSpec) -> list[Word]:
    return sorted(phi_inv(x, spec.k) for x in enumerate_code(spec))
