"""Finite Abelian groups and Sidon sets of order t (B_t sets).

A set B is a *full* B_t set when all sums of at most t elements (with
repetition) are distinct, and *exact-only* when only sums of exactly t
elements are certified distinct.  Bose-Chowla yields exact-only sets;
:func:`augment_counts` upgrades them by appending a size counter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterator, Sequence

from dupcode.gf import GF, factor_prime_power

Element = tuple[int, ...]

DEFAULT_ENUM_LIMIT = 10**7
DEFAULT_FIELD_LIMIT = 1 << 20


class EnumerationLimitError(RuntimeError):
    pass


class SidonSearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product Z_{M_1} x ... x Z_{M_d}."""

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(int(m) for m in self.factors))
        if any(m < 1 for m in self.factors):
            raise ValueError("cyclic factor orders must be >= 1")

    @classmethod
    def cyclic(cls, m: int) -> "AbelianGroup":
        return cls((m,))

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def zero(self) -> Element:
        return (0,) * len(self.factors)

    def element(self, coords: Sequence[int] | int) -> Element:
        if isinstance(coords, int):
            coords = (coords,)
        coords = tuple(coords)
        if len(coords) != len(self.factors):
            raise ValueError(f"element {coords} has wrong arity for group {self.factors}")
        return tuple(c % m for c, m in zip(coords, self.factors))

    def contains(self, e: Element) -> bool:
        return len(e) == len(self.factors) and all(0 <= c < m for c, m in zip(e, self.factors))

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.factors))

    def sub(self, a: Element, b: Element) -> Element:
        return tuple((x - y) % m for x, y, m in zip(a, b, self.factors))

    def neg(self, a: Element) -> Element:
        return tuple(-x % m for x, m in zip(a, self.factors))

    def scale(self, c: int, a: Element) -> Element:
        return tuple((c * x) % m for x, m in zip(a, self.factors))

    def linear_combination(self, coeffs: Sequence[int], elems: Sequence[Element]) -> Element:
        acc = [0] * len(self.factors)
        for c, e in zip(coeffs, elems):
            if c:
                for j, x in enumerate(e):
                    acc[j] += c * x
        return tuple(a % m for a, m in zip(acc, self.factors))

    def elements(self) -> Iterator[Element]:
        return product(*(range(m) for m in self.factors))

    def product(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(self.factors + other.factors)


@dataclass(frozen=True)
class Collision:
    """Two distinct multiplicity vectors with the same sum."""

    first: tuple[int, ...]
    second: tuple[int, ...]
    value: Element


@dataclass(frozen=True)
class SidonSet:
    group: AbelianGroup
    elements: tuple[Element, ...]
    t: int
    exact_only: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(tuple(e) for e in self.elements))
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("Sidon set elements must be pairwise distinct")
        for e in self.elements:
            if not self.group.contains(e):
                raise ValueError(f"{e} is not an element of {self.group.factors}")

    def __len__(self) -> int:
        return len(self.elements)

    def subset(self, w: int) -> "SidonSet":
        """First w elements; a subset of a B_t set is still B_t."""
        if w > len(self.elements):
            raise ValueError(f"cannot take {w} elements from a set of size {len(self.elements)}")
        return SidonSet(self.group, self.elements[:w], self.t, self.exact_only)

    def check(self, limit: int = DEFAULT_ENUM_LIMIT) -> Collision | None:
        return find_collision(self.elements, self.group, self.t, self.exact_only, limit)

    def to_json(self) -> dict:
        return {
            "factors": list(self.group.factors),
            "elements": [list(e) for e in self.elements],
            "t": self.t,
            "exact_only": self.exact_only,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SidonSet":
        g = AbelianGroup(tuple(obj["factors"]))
        return cls(g, tuple(g.element(e) for e in obj["elements"]), int(obj["t"]), bool(obj.get("exact_only", False)))


def multiplicity_vectors(w: int, t: int, exact: bool = False) -> Iterator[tuple[int, ...]]:
    """All (u_1..u_w) with u_i >= 0 and sum <= t (== t when exact), by size then lex."""
    sizes = [t] if exact else range(t + 1)
    for u in sizes:
        for combo in combinations_with_replacement(range(w), u):
            vec = [0] * w
            for i in combo:
                vec[i] += 1
            yield tuple(vec)


def find_collision(
    B: Sequence[Element],
    G: AbelianGroup,
    t: int,
    exact_only: bool = False,
    limit: int = DEFAULT_ENUM_LIMIT,
) -> Collision | None:
    if t < 1:
        raise ValueError("order t must be >= 1")
    w = len(B)
    count = math.comb(w + t - 1, t) if exact_only else math.comb(w + t, t)
    if count > limit:
        raise EnumerationLimitError(f"{count} multiset sums exceed the limit {limit}")
    seen: dict[Element, tuple[int, ...]] = {}
    for vec in multiplicity_vectors(w, t, exact_only):
        s = G.linear_combination(vec, B)
        if s in seen:
            return Collision(seen[s], vec, s)
        seen[s] = vec
    return None


def is_sidon(
    B: Sequence[Element],
    G: AbelianGroup,
    t: int,
    exact_only: bool = False,
    limit: int = DEFAULT_ENUM_LIMIT,
) -> tuple[bool, Collision | None]:
    """Check the B_t property; on failure also return a collision witness."""
    c = find_collision([G.element(b) for b in B], G, t, exact_only, limit)
    return c is None, c


def _search_cyclic(m: int, w: int, t: int, forced: int | None = None, min_gcd: int = 1) -> list[int] | None:
    # Lexicographic DFS over subsets of Z_m.  Sum sets are bitmasks over Z_m:
    # by_size[u] marks the sums of u-multisets of the chosen elements.
    full = (1 << m) - 1

    def rot(mask: int, s: int) -> int:
        s %= m
        return ((mask << s) | (mask >> (m - s))) & full if s else mask

    def add(b: int, by_size: list[int], union: int):
        new = by_size[:]
        seen = union
        # multisets that use b exactly j times, on top of u others
        for j in range(1, t + 1):
            shift = j * b
            for u in range(t - j + 1):
                moved = rot(by_size[u], shift)
                if moved & seen:
                    return None
                seen |= moved
                new[u + j] |= moved
        return new, seen

    candidates = [b for b in range(1, m) if b != forced and math.gcd(b, m) >= min_gcd]
    chosen: list[int] = []

    def dfs(idx: int, by_size: list[int], union: int) -> bool:
        if len(chosen) == w:
            return True
        need = w - len(chosen)
        for pos in range(idx, len(candidates) - need + 1):
            b = candidates[pos]
            step = add(b, by_size, union)
            if step is None:
                continue
            chosen.append(b)
            if dfs(pos + 1, *step):
                return True
            chosen.pop()
        return False

    start = ([1] + [0] * t, 1)
    if forced is not None:
        step = add(forced, *start)
        if step is None:
            return None
        chosen.append(forced)
        start = step
    if dfs(0, *start):
        return sorted(chosen)
    return None


def _exists_cyclic(m: int, w: int, t: int) -> bool:
    # B is a full B_t set iff {0} | B has distinct sums of exactly t elements,
    # a property preserved by every affine map x -> u*x + c of Z_m.  Move the
    # pair of {0} | B whose difference has the smallest gcd with m to (0, d),
    # d = that gcd; then d is in B and every element has gcd >= d with m.
    for d in range(1, m):
        if m % d == 0 and _search_cyclic(m, w, t, forced=d, min_gcd=d) is not None:
            return True
    return False


@lru_cache(maxsize=None)
def greedy_sidon(w: int, t: int, max_modulus: int = 100_000) -> SidonSet:
    """Full B_t set of size w in the smallest cyclic group Z_M reached by the search.

    M increases from 1; for each M the subsets of Z_M are scanned in
    lexicographic order and the first B_t set of size w is returned.
    """
    if w < 1 or t < 1:
        raise ValueError("need w >= 1 and t >= 1")
    # all C(w+t, t) sums are distinct; for t >= 2, {0} | B is also a classical
    # Sidon set, whose w(w+1) nonzero differences are distinct
    lower = math.comb(w + t, t)
    if t >= 2:
        lower = max(lower, w * (w + 1) + 1)
    for m in range(lower, max_modulus + 1):
        if not _exists_cyclic(m, w, t):
            continue
        found = _search_cyclic(m, w, t)
        if found is not None:
            G = AbelianGroup.cyclic(m)
            return SidonSet(G, tuple((b,) for b in found), t, exact_only=False)
    raise SidonSearchError(f"no B_{t} set of size {w} in Z_M for M <= {max_modulus}")


@lru_cache(maxsize=None)
def bose_chowla(prime_power: int, t: int, field_limit: int = DEFAULT_FIELD_LIMIT) -> SidonSet:
    """Exact-only B_t set of size q' in Z_{q'^t - 1}.

    With theta a primitive element of GF(q'^t), the set is
    { log_theta(theta + a) : a in GF(q') }.
    """
    if t < 2:
        raise ValueError("Bose-Chowla needs t >= 2")
    if factor_prime_power(prime_power) is None:
        raise ValueError(f"{prime_power} is not a prime power")
    big = prime_power**t
    if big > field_limit:
        raise EnumerationLimitError(f"GF({big}) exceeds the field size limit {field_limit}")
    F = GF(big)
    theta = F.primitive
    logs = [F.log(F.add(theta, a)) for a in F.subfield(prime_power)]
    G = AbelianGroup.cyclic(big - 1)
    return SidonSet(G, tuple((v,) for v in logs), t, exact_only=True)


def augment_counts(B: SidonSet) -> SidonSet:
    """Embed into G x Z_{t+1} as (b_i, 1), making an exact-only set full."""
    G = B.group.product(AbelianGroup.cyclic(B.t + 1))
    return SidonSet(G, tuple(e + (1 % (B.t + 1),) for e in B.elements), B.t, exact_only=False)


def sidon_for(w: int, t: int, method: str = "greedy") -> SidonSet:
    """A full B_t set of size w, from the greedy search or Bose-Chowla."""
    if w == 0:
        return SidonSet(AbelianGroup.cyclic(1), (), t)
    if method == "greedy":
        return greedy_sidon(w, t)
    if method == "bose-chowla":
        if t == 1:
            return greedy_sidon(w, 1)
        qp = w
        while factor_prime_power(qp) is None:
            qp += 1
        return augment_counts(bose_chowla(qp, t)).subset(w)
    raise ValueError(f"unknown Sidon construction {method!r}")
