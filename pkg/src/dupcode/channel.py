"""Duplication and zero-block edits, plus a seeded random channel.

Zero-block edits are indexed by run (0..w), not by symbol position: every
position inside one run of zeros produces the same output.  Duplications
use 1-based start indices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Literal

from dupcode.words import Word, run_decomposition, assemble

EventKind = Literal["duplication", "zero_insertion", "zero_deletion"]


class InfeasibleEditError(ValueError):
    pass


@dataclass(frozen=True)
class EditEvent:
    kind: EventKind
    position: int
    k: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "position": self.position, "k": self.k}

    @classmethod
    def from_json(cls, obj: dict) -> "EditEvent":
        return cls(obj["kind"], int(obj["position"]), int(obj["k"]))


@dataclass(frozen=True)
class ChannelTrace:
    input: Word
    events: tuple[EditEvent, ...]
    output: Word

    def replay(self) -> Word:
        return apply_events(self.input, self.events)

    def to_json(self) -> dict:
        return {
            "q": self.input.q,
            "input": str(self.input),
            "events": [e.to_json() for e in self.events],
            "output": str(self.output),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ChannelTrace":
        q = obj["q"]
        return cls(
            Word.parse(obj["input"], q),
            tuple(EditEvent.from_json(e) for e in obj["events"]),
            Word.parse(obj["output"], q),
        )


def duplicate(x: Word, start: int, k: int) -> Word:
    """Insert a copy of x[start..start+k-1] (1-based) right after it."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if start < 1 or start + k - 1 > len(x):
        raise InfeasibleEditError(f"duplication start {start} out of range for length {len(x)}, k={k}")
    s = x.symbols
    end = start - 1 + k
    return Word(x.q, s[:end] + s[start - 1:end] + s[end:])


def insert_zero_block(x: Word, run_index: int, k: int) -> Word:
    if k < 1:
        raise ValueError("k must be >= 1")
    p = run_decomposition(x)
    if not 0 <= run_index <= p.w:
        raise InfeasibleEditError(f"run index {run_index} outside [0, {p.w}]")
    runs = list(p.zero_runs)
    runs[run_index] += k
    return assemble(p.with_runs(runs))


def delete_zero_block(x: Word, run_index: int, k: int) -> Word:
    if k < 1:
        raise ValueError("k must be >= 1")
    p = run_decomposition(x)
    if not 0 <= run_index <= p.w:
        raise InfeasibleEditError(f"run index {run_index} outside [0, {p.w}]")
    runs = list(p.zero_runs)
    if runs[run_index] < k:
        raise InfeasibleEditError(
            f"run {run_index} has length {runs[run_index]} < {k}, cannot delete a block"
        )
    runs[run_index] -= k
    return assemble(p.with_runs(runs))


def duplication_run_index(x_dup: Word, start: int, k: int) -> int:
    """Run of phi(x_dup) that receives the 0^k block when x_dup is duplicated at start.

    The block lands right after position start+k-1, so the run index is the
    weight of the transformed prefix up to that position.
    """
    from dupcode.words import phi

    end = start + k - 1
    return sum(1 for s in phi(x_dup, k).symbols[:end] if s)


def apply_event(x: Word, e: EditEvent) -> Word:
    if e.kind == "duplication":
        return duplicate(x, e.position, e.k)
    if e.kind == "zero_insertion":
        return insert_zero_block(x, e.position, e.k)
    if e.kind == "zero_deletion":
        return delete_zero_block(x, e.position, e.k)
    raise ValueError(f"unknown event kind {e.kind!r}")


def apply_events(x: Word, events) -> Word:
    for e in events:
        x = apply_event(x, e)
    return x


def simulate(x: Word, t_ins: int, t_del: int, k: int, seed: int) -> ChannelTrace:
    """Random 0^k-insertion/deletion channel.

    Edit kinds are shuffled into a random order; each edit picks its run
    uniformly among the runs where it is feasible.
    """
    if t_ins < 0 or t_del < 0:
        raise ValueError("error counts must be non-negative")
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = random.Random(seed)
    kinds: list[EventKind] = ["zero_insertion"] * t_ins + ["zero_deletion"] * t_del
    rng.shuffle(kinds)
    p = run_decomposition(x)
    runs = list(p.zero_runs)
    events = []
    for kind in kinds:
        if kind == "zero_insertion":
            i = rng.randrange(len(runs))
            runs[i] += k
        else:
            feasible = [i for i, r in enumerate(runs) if r >= k]
            if not feasible:
                raise InfeasibleEditError(f"no run of length >= {k} left to delete from")
            i = feasible[rng.randrange(len(feasible))]
            runs[i] -= k
        events.append(EditEvent(kind, i, k))
    return ChannelTrace(x, tuple(events), assemble(p.with_runs(runs)))


def simulate_duplications(x: Word, t: int, k: int, seed: int) -> ChannelTrace:
    """Random k-duplication channel: t duplications at uniform start positions."""
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = random.Random(seed)
    events = []
    y = x
    for _ in range(t):
        if len(y) < k:
            raise InfeasibleEditError(f"word of length {len(y)} has no substring of length {k}")
        start = rng.randrange(1, len(y) - k + 2)
        y = duplicate(y, start, k)
        events.append(EditEvent("duplication", start, k))
    return ChannelTrace(x, tuple(events), y)
