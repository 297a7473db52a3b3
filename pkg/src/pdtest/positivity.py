"""Positive definiteness tests by inflations.

Both tests triangularise the input, optionally reject coefficients outside
``{-1, 0, 1}`` up front, then inflate until the bigraph has no dotted edges
or an inflation budget depending only on ``n`` runs out. The input is
positive definite iff the resulting graph is a Dynkin graph, whose type is
reported as a by-product.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bigraph import GramBigraph, InputMatrix, coefficient_precheck, connected_components, triangularise
from .dynkin import DynkinType, _recognize
from .inflation import ExecutionLog, Strategy, _pair_phase, _root_phase, fresh_seed, make_rng
from .oracle import gauss_pos_def_test

ALGORITHMS = ("inflations", "root-inflations", "gauss")


def igfpos(n: int) -> int:
    """Maximal number of pair inflations needed on a positive bigraph with ``n`` vertices."""
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 3:
        return (n * n - n) // 2
    return {6: 30, 7: 56, 8: 112}.get(n, n * n - 2 * n)


def igfposs(n: int) -> int:
    """As :func:`igfpos` when the form already admits a positive sincere root."""
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 3:
        return 0
    return {6: 5, 7: 10, 8: 21}.get(n, n - 3)


@dataclass
class TestOutcome:
    __test__ = False  # keep pytest from collecting this class

    positive: bool
    dynkin: DynkinType | None
    algorithm: str
    strategy: Strategy | None = None
    seed: int | None = None
    elapsed: float = 0.0
    precheck_shortcircuit: bool = False
    bound_exhausted: bool = False
    guard_stop: bool = False
    root_log: ExecutionLog = field(default_factory=ExecutionLog)
    pair_log: ExecutionLog = field(default_factory=ExecutionLog)

    @property
    def log(self) -> ExecutionLog:
        """Both phases concatenated."""
        return ExecutionLog(self.root_log.steps + self.pair_log.steps, self.pair_log.stop)

    @property
    def pair_inflations(self) -> int:
        return self.root_log.pair_count + self.pair_log.pair_count

    @property
    def vertex_inflations(self) -> int:
        return self.root_log.vertex_count + self.pair_log.vertex_count

    @property
    def elapsed_ms(self) -> float:
        return round(self.elapsed * 1000.0, 3)

    def to_json(self) -> dict:
        return {
            "positive": self.positive,
            "dynkin": None if self.dynkin is None else str(self.dynkin),
            "pair_inflations": self.pair_inflations,
            "vertex_inflations": self.vertex_inflations,
            "algorithm": self.algorithm,
            "strategy": None if self.strategy is None else int(self.strategy),
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
            "precheck_shortcircuit": self.precheck_shortcircuit,
            "bound_exhausted": self.bound_exhausted,
            "guard_stop": self.guard_stop,
        }


def _prepare(A, strategy, seed, rng):
    G = A if isinstance(A, GramBigraph) else triangularise(A)
    strategy = Strategy(strategy)
    if strategy.randomized and rng is None:
        if seed is None:
            seed = fresh_seed()
        rng = make_rng(seed)
    return G, strategy, seed, rng


def _run(A, algorithm, strategy, seed, precheck, early_exit, rng):
    t0 = time.perf_counter()
    G, strategy, seed, rng = _prepare(A, strategy, seed, rng)
    out = TestOutcome(False, None, algorithm, strategy, seed if strategy.randomized else None)
    if precheck and not coefficient_precheck(G):
        out.precheck_shortcircuit = True
        out.elapsed = time.perf_counter() - t0
        return out
    comps = connected_components(G)
    positive = True
    dynkin = None
    for labels, H in comps:
        k = H.n
        m = H.array.copy()
        if algorithm == "root-inflations":
            rlog = _root_phase(m, early_exit, precheck, labels)
            out.root_log.steps += rlog.steps
            if rlog.stop == "guard":
                out.guard_stop = True
                positive = False
                break
            bound = igfposs(k)
        else:
            bound = igfpos(k)
        plog = _pair_phase(m, strategy, bound, rng, precheck, labels)
        out.pair_log.steps += plog.steps
        out.pair_log.stop = plog.stop
        if plog.stop == "bound":
            out.bound_exhausted = True
            positive = False
            break
        if plog.stop == "guard":
            out.guard_stop = True
            positive = False
            break
        dynkin = _recognize(m)
        if dynkin is None:
            positive = False
            break
    out.positive = positive
    out.dynkin = dynkin if positive and len(comps) == 1 else None
    out.elapsed = time.perf_counter() - t0
    return out


def pos_def_test_by_inflations(A: InputMatrix | GramBigraph, strategy: Strategy = Strategy.FIRST,
                               seed: int | None = None, precheck: bool = True, *, rng=None) -> TestOutcome:
    """Decide positive definiteness with the bounded pair-inflation loop alone.

    ``A`` may be an :class:`InputMatrix` or an already triangularised
    :class:`GramBigraph`. Disconnected inputs are tested per component; the
    Dynkin type is only reported for connected ones. Randomized strategies
    draw from ``rng`` if given, else from a generator seeded with ``seed``
    (a fresh seed is drawn and recorded when both are None).

    With ``precheck`` the run also stops as soon as any coefficient leaves
    ``{-1, 0, 1}``: inflations preserve positivity and positive bigraphs
    never carry such coefficients.
    """
    return _run(A, "inflations", strategy, seed, precheck, False, rng)


def pos_def_test_by_root_inflations(A: InputMatrix | GramBigraph, strategy: Strategy = Strategy.FIRST,
                                    seed: int | None = None, precheck: bool = True,
                                    early_exit: bool = True, *, rng=None) -> TestOutcome:
    """Positive-sincere-root preprocessing followed by a short pair-inflation loop.

    Same conventions as :func:`pos_def_test_by_inflations`. With
    ``early_exit`` the preprocessing stops at the first round boundary where
    no dotted edge is left.
    """
    return _run(A, "root-inflations", strategy, seed, precheck, early_exit, rng)


def gauss_outcome(A: InputMatrix | GramBigraph) -> TestOutcome:
    """The exact elimination oracle wrapped as a :class:`TestOutcome`."""
    t0 = time.perf_counter()
    if not isinstance(A, GramBigraph):
        triangularise(A)  # same input validation as the inflation tests
    positive = gauss_pos_def_test(A)
    out = TestOutcome(positive, None, "gauss")
    out.elapsed = time.perf_counter() - t0
    return out


def run_test(A, algorithm: str = "root-inflations", strategy: Strategy = Strategy.FIRST,
             seed: int | None = None, precheck: bool = True, early_exit: bool = True) -> TestOutcome:
    """Dispatch on the algorithm name used by the CLI and the benchmark."""
    if algorithm == "inflations":
        return pos_def_test_by_inflations(A, strategy, seed, precheck)
    if algorithm == "root-inflations":
        return pos_def_test_by_root_inflations(A, strategy, seed, precheck, early_exit)
    if algorithm == "gauss":
        return gauss_outcome(A)
    raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
