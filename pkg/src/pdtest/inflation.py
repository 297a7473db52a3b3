"""Inflations of bigraphs and the two execution procedures built on them."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import NamedTuple

import numpy as np

from . import _backend
from .bigraph import GramBigraph
from .errors import Disconnected, NotDefined, VertexOutOfRange


class Strategy(IntEnum):
    """Dotted-edge selection policy for the pair-inflation loop."""

    FIRST = 0
    LAST = 1
    FIRST_OR_LAST = 2
    UNIFORM_RANDOM = 3

    @property
    def randomized(self) -> bool:
        return self >= 2


def make_rng(seed: int | None = None) -> np.random.Generator:
    """PCG64 generator; identical seeds give identical draws on every platform."""
    return np.random.Generator(np.random.PCG64(seed))


def fresh_seed() -> int:
    """A 64-bit seed drawn from OS entropy, for runs where none was given."""
    return int(np.random.SeedSequence().generate_state(1, dtype=np.uint64)[0])


class InflationStep(NamedTuple):
    kind: str  # "V" or "P"
    a: int
    b: int | None = None

    def __str__(self):
        return f"V {self.a}" if self.kind == "V" else f"P {self.a} {self.b}"

    @classmethod
    def parse(cls, line: str) -> "InflationStep":
        parts = line.split()
        if parts[0] == "V" and len(parts) == 2:
            return cls("V", int(parts[1]))
        if parts[0] == "P" and len(parts) == 3:
            return cls("P", int(parts[1]), int(parts[2]))
        raise ValueError(f"bad trace line {line!r}")


STOP_REASONS = {0: "done", 1: "bound", 2: "guard", 3: "early-exit"}


@dataclass
class ExecutionLog:
    """Ordered inflation steps (1-based vertices) and why the run stopped."""

    steps: list[InflationStep] = field(default_factory=list)
    stop: str = "done"

    @property
    def pair_count(self) -> int:
        return sum(1 for s in self.steps if s.kind == "P")

    @property
    def vertex_count(self) -> int:
        return sum(1 for s in self.steps if s.kind == "V")

    @property
    def bound_exhausted(self) -> bool:
        return self.stop == "bound"

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def to_text(self) -> str:
        return "".join(f"{s}\n" for s in self.steps)

    @classmethod
    def from_text(cls, text: str) -> "ExecutionLog":
        return cls([InflationStep.parse(ln) for ln in text.splitlines() if ln.strip()])

    @classmethod
    def _from_kernel(cls, raw, stop, labels=None) -> "ExecutionLog":
        lab = (lambda i: i + 1) if labels is None else (lambda i: labels[i])
        steps = [
            InflationStep("V", lab(a)) if b < 0 else InflationStep("P", lab(a), lab(b))
            for a, b in raw
        ]
        return cls(steps, STOP_REASONS.get(stop, "done"))


def _draw_from(rng):
    if rng is None:
        return None
    return lambda k: int(rng.integers(k))


def _check_vertex(G, a):
    if not 1 <= a <= G.n:
        raise VertexOutOfRange(f"vertex {a} not in 1..{G.n}")


def inflate_at_vertex(G: GramBigraph, a: int) -> GramBigraph:
    """Swap solid and dotted edges at vertex ``a`` (1-based)."""
    _check_vertex(G, a)
    m = G.array.copy()
    _backend.kernels.inflate_vertex(m, a - 1)
    return GramBigraph(m, _trusted=True)


def inflate_at_pair(G: GramBigraph, a: int, b: int) -> GramBigraph:
    """Inflation at the pair ``(a, b)``: requires dotted edges between them.

    ``d_ab`` changes sign and ``d_bc <- d_bc - d_ac * d_ab`` for ``c`` not in
    ``{a, b}``; nothing else moves.
    """
    _check_vertex(G, a)
    _check_vertex(G, b)
    if a == b or G.array[a - 1, b - 1] <= 0:
        raise NotDefined(f"no dotted edge between {a} and {b}")
    m = G.array.copy()
    _backend.kernels.inflate_pair(m, a - 1, b - 1, False)
    return GramBigraph(m, _trusted=True)


def select_dotted_edge(G: GramBigraph, strategy: Strategy, rng=None):
    """1-based dotted pair ``(a, b)`` with ``a < b`` chosen per ``strategy``, or None."""
    strategy = Strategy(strategy)
    m = G.array
    k = _backend.kernels
    count = k.count_dotted(m)
    if count == 0:
        return None
    if strategy.randomized and rng is None:
        raise ValueError(f"strategy {int(strategy)} needs an rng")
    a, b = k.select_pair(m, int(strategy), _draw_from(rng), count)
    return a + 1, b + 1


def _pair_phase(m, strategy, bound, rng, guard, labels=None):
    raw, stop = _backend.kernels.pair_loop(m, int(strategy), int(bound), _draw_from(rng), guard)
    return ExecutionLog._from_kernel(raw, stop, labels)


def _root_phase(m, early_exit, guard, labels=None):
    raw, stop = _backend.kernels.root_loop(m, early_exit, guard)
    if stop == -1:
        raise Disconnected("no edge leaves the grown vertex set; the bigraph is disconnected")
    return ExecutionLog._from_kernel(raw, stop, labels)


def inflations_at_pair_bounded(G: GramBigraph, strategy: Strategy, bound: int, rng=None,
                               *, guard: bool = False):
    """Run the pair-inflation loop for at most ``bound`` inflations.

    Returns ``(result, log)``. ``log.stop`` is ``"bound"`` if dotted edges
    survived the bound, ``"guard"`` if ``guard`` is set and a coefficient
    left ``{-1, 0, 1}``.
    """
    strategy = Strategy(strategy)
    if strategy.randomized and rng is None:
        raise ValueError(f"strategy {int(strategy)} needs an rng")
    m = G.array.copy()
    log = _pair_phase(m, strategy, bound, rng, guard)
    return GramBigraph(m, _trusted=True), log


def inflations_to_pos_sincere_root(G: GramBigraph, early_exit: bool = False, *, guard: bool = False):
    """Transform a connected ``G`` so that its form has a positive sincere root.

    Grows ``S = {1}``; each round takes the lexicographically smallest
    ``(a, b)`` in ``S x (V - S)`` with ``d_ab != 0``, makes it dotted by a
    vertex inflation at ``b`` if needed, then inflates at ``(b, a)``.
    At most ``n - 1`` inflations of each kind.
    """
    m = G.array.copy()
    log = _root_phase(m, early_exit, guard)
    return GramBigraph(m, _trusted=True), log
