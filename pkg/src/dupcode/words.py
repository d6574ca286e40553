"""q-ary words, zero-run profiles and the difference transform phi_k.

A duplication of length k in a word becomes an insertion of ``0^k`` after
applying :func:`phi`, which is why the rest of the package works almost
exclusively with runs of zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_Q = 1 << 16


@dataclass(frozen=True, order=True)
class Word:
    """Immutable word over Z_q.

    Text form is a digit string for q <= 10 and a comma-separated list
    otherwise.
    """

    q: int
    symbols: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 2 <= self.q <= MAX_Q:
            raise ValueError(f"alphabet size must be in [2, {MAX_Q}], got {self.q}")
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        for s in self.symbols:
            if not 0 <= s < self.q:
                raise ValueError(f"symbol {s} outside Z_{self.q}")

    @classmethod
    def parse(cls, text: str, q: int) -> "Word":
        text = text.strip()
        if not text:
            return cls(q, ())
        if q <= 10 and "," not in text:
            return cls(q, tuple(int(c) for c in text.replace(" ", "")))
        return cls(q, tuple(int(c) for c in text.split(",")))

    @classmethod
    def zeros(cls, q: int, n: int) -> "Word":
        return cls(q, (0,) * n)

    def __str__(self) -> str:
        if self.q <= 10:
            return "".join(map(str, self.symbols))
        return ",".join(map(str, self.symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    @property
    def weight(self) -> int:
        return weight(self)


@dataclass(frozen=True)
class RunProfile:
    """``0^{r_0} a_1 0^{r_1} ... a_w 0^{r_w}``."""

    q: int
    zero_runs: tuple[int, ...]
    nonzeros: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "zero_runs", tuple(self.zero_runs))
        object.__setattr__(self, "nonzeros", tuple(self.nonzeros))
        if len(self.zero_runs) != len(self.nonzeros) + 1:
            raise ValueError("need exactly one more zero run than non-zero symbols")
        if any(r < 0 for r in self.zero_runs):
            raise ValueError("run lengths must be non-negative")
        for a in self.nonzeros:
            if not 1 <= a < self.q:
                raise ValueError(f"non-zero symbol {a} outside [1, {self.q - 1}]")

    @property
    def w(self) -> int:
        return len(self.nonzeros)

    @property
    def length(self) -> int:
        return self.w + sum(self.zero_runs)

    def with_runs(self, zero_runs: Sequence[int]) -> "RunProfile":
        return RunProfile(self.q, tuple(zero_runs), self.nonzeros)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "w": self.w,
            "zero_runs": list(self.zero_runs),
            "nonzeros": list(self.nonzeros),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RunProfile":
        p = cls(obj["q"], tuple(obj["zero_runs"]), tuple(obj["nonzeros"]))
        if "w" in obj and obj["w"] != p.w:
            raise ValueError("profile weight does not match its non-zero symbols")
        return p


def weight(x: Word) -> int:
    """Hamming weight (number of non-zero symbols)."""
    return sum(1 for s in x.symbols if s)


def run_decomposition(x: Word) -> RunProfile:
    runs = []
    nonzeros = []
    current = 0
    for s in x.symbols:
        if s == 0:
            current += 1
        else:
            runs.append(current)
            nonzeros.append(s)
            current = 0
    runs.append(current)
    return RunProfile(x.q, tuple(runs), tuple(nonzeros))


def assemble(p: RunProfile) -> Word:
    symbols: list[int] = [0] * p.zero_runs[0]
    for a, r in zip(p.nonzeros, p.zero_runs[1:]):
        symbols.append(a)
        symbols.extend([0] * r)
    return Word(p.q, tuple(symbols))


def count_long_runs(x: Word | RunProfile, k: int) -> int:
    """Number of runs of zeros of length >= k (r_0 included)."""
    p = x if isinstance(x, RunProfile) else run_decomposition(x)
    return sum(1 for r in p.zero_runs if r >= k)


def phi(x: Word, k: int) -> Word:
    """x_i = x~_i - x~_{i-k} (mod q), with x~_i = 0 for i <= 0."""
    if k < 1:
        raise ValueError("duplication length k must be >= 1")
    s, q = x.symbols, x.q
    return Word(q, tuple((s[i] - (s[i - k] if i >= k else 0)) % q for i in range(len(s))))


def phi_inv(x: Word, k: int) -> Word:
    if k < 1:
        raise ValueError("duplication length k must be >= 1")
    q = x.q
    out: list[int] = []
    for i, v in enumerate(x.symbols):
        out.append((v + (out[i - k] if i >= k else 0)) % q)
    return Word(q, tuple(out))


def all_words(q: int, n: int) -> Iterable[Word]:
    """Every word of Z_q^n in lexicographic order."""
    from itertools import product

    for symbols in product(range(q), repeat=n):
        yield Word(q, symbols)
