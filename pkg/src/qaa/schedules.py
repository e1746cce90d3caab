"""Parameter-schedule generators.

Produces the (beta, gamma) sequences this package can run: rejection-sampled
random amplification schedules, the optimal exact-search schedule, its
delta-perturbed variants, Chebyshev fixed-point schedules, and the recursive
pi/3 fixed-point program.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .subspace import (
    IterationParams,
    StateAngles,
    apply_iteration,
    initial_angles,
    is_qaao,
    optimal_params,
    wrap_pi,
)

KINDS = ("random-qaao", "optimal", "noisy-optimal", "fixed-point", "pi3")


@dataclass(frozen=True)
class ParameterSequence:
    """An ordered (beta, gamma) schedule plus generator metadata.

    `n` may be None for schedules that do not depend on the register size
    (the Chebyshev fixed-point family).  `queries_per_iteration` carries the
    oracle-accounting convention used when reporting query counts.
    """

    params: tuple[IterationParams, ...]
    kind: str
    n: Optional[int] = None
    m: int = 1
    seed: Optional[int] = None
    c: Optional[float] = None
    delta: Optional[float] = None
    queries_per_iteration: int = 1

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown schedule kind {self.kind!r}")
        if self.queries_per_iteration < 1:
            raise ValueError("queries_per_iteration must be positive")
        object.__setattr__(self, "params", tuple(self.params))

    def __len__(self) -> int:
        return len(self.params)

    def to_json(self) -> str:
        payload = {
            "kind": self.kind,
            "n": self.n,
            "m": self.m,
            "c": self.c,
            "delta": self.delta,
            "seed": self.seed,
            "queries_per_iteration": self.queries_per_iteration,
            "params": [[p.beta, p.gamma] for p in self.params],
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ParameterSequence":
        d = json.loads(text)
        return cls(
            params=tuple(IterationParams(b, g) for b, g in d["params"]),
            kind=d["kind"],
            n=d.get("n"),
            m=d.get("m", 1),
            seed=d.get("seed"),
            c=d.get("c"),
            delta=d.get("delta"),
            queries_per_iteration=d.get("queries_per_iteration", 1),
        )


def k_star(n: int, m: int = 1) -> int:
    """Optimal number of standard amplification steps before the closing step."""
    return math.floor(math.pi * math.sqrt(2**n / m) / 4.0 - 0.5)


def generate_qaao_sequence(
    n: int,
    m: int = 1,
    c: float = 1.5,
    seed: int = 0,
    target_threshold: float = 1.0,
    max_attempts: int = 10_000,
) -> ParameterSequence:
    """Rejection-sample a sequence of amplifying iterations.

    Draws (beta, gamma) uniformly on [-pi, pi]^2 and keeps a draw only when
    the amplification coefficient at the currently evolved state exceeds
    c/sqrt(N).  Once the state enters the closing region the exact optimal
    step is appended when target_threshold is 1; otherwise sampling stops as
    soon as the target probability reaches the threshold.  Deterministic for
    a fixed seed.
    """
    if c <= 1.0:
        raise ValueError(f"the predicate constant must exceed 1, got c={c}")
    if not 0.0 < target_threshold <= 1.0:
        raise ValueError(f"target_threshold must lie in (0, 1], got {target_threshold}")
    exact = target_threshold >= 1.0
    rng = np.random.default_rng(seed)
    state = initial_angles(n, m)
    theta0 = state.theta
    big_n = 2**n
    params: list[IterationParams] = []
    while True:
        if not exact and state.target_probability >= target_threshold:
            break
        if state.theta >= math.pi - 2.0 * theta0:
            if exact:
                closing = optimal_params(state, theta0)
                params.append(closing)
                state = apply_iteration(closing, state, theta0)
            break
        for _ in range(max_attempts):
            candidate = IterationParams(*rng.uniform(-math.pi, math.pi, 2))
            if is_qaao(candidate, state, theta0, big_n, c):
                break
        else:
            raise RuntimeError(
                f"no amplifying parameters found in {max_attempts} draws; "
                f"c={c} is likely too demanding for N={big_n}"
            )
        params.append(candidate)
        state = apply_iteration(candidate, state, theta0)
    return ParameterSequence(
        params=tuple(params), kind="random-qaao", n=n, m=m, seed=seed, c=c
    )


def optimal_sequence(n: int, m: int = 1) -> ParameterSequence:
    """The exact optimal schedule: K* standard steps plus one closing step.

    Valid in the regime 4*m <= N.  The closing parameters are computed at
    the evolved state and drive the target probability to exactly 1.
    """
    if 4 * m > 2**n:
        raise ValueError(f"need 4*m <= 2^n, got m={m}, n={n}")
    state = initial_angles(n, m)
    theta0 = state.theta
    params: list[IterationParams] = []
    for _ in range(k_star(n, m)):
        step = IterationParams(math.pi, wrap_pi(state.phi - math.pi))
        params.append(step)
        state = apply_iteration(step, state, theta0)
    closing = optimal_params(state, theta0)
    params.append(closing)
    return ParameterSequence(params=tuple(params), kind="optimal", n=n, m=m)


def noisy_optimal_sequence(
    n: int, delta: float, seed: int = 0, m: int = 1
) -> ParameterSequence:
    """The optimal schedule with each step's parameters offset by up to delta.

    Models imprecise preparation of the optimal parameters: every iteration
    computes the optimal (beta, gamma) at the state actually reached so far
    and applies one shared pulse error drawn uniformly from [-delta, delta]
    to both angles.  Offsetting beta and gamma together preserves their
    phase relation, which is what keeps the schedule robust; perturbing the
    two independently decoheres the relative phase and loses the target
    state for delta beyond roughly 0.1*pi.  On the ideal trajectory the
    leading parameters are (pi, pi) (mod 2*pi), so for small delta the
    draws stay inside [pi - delta, pi + delta] as in the noiseless case.
    """
    if not 0.0 <= delta < 0.5 * math.pi:
        raise ValueError(f"delta must lie in [0, pi/2), got {delta}")
    if 4 * m > 2**n:
        raise ValueError(f"need 4*m <= 2^n, got m={m}, n={n}")
    rng = np.random.default_rng(seed)
    state = initial_angles(n, m)
    theta0 = state.theta
    params: list[IterationParams] = []
    for _ in range(k_star(n, m) + 1):
        ideal = optimal_params(state, theta0)
        error = rng.uniform(-delta, delta)
        step = IterationParams(wrap_pi(ideal.beta + error), wrap_pi(ideal.gamma + error))
        params.append(step)
        state = apply_iteration(step, state, theta0)
    return ParameterSequence(
        params=tuple(params), kind="noisy-optimal", n=n, m=m, seed=seed, delta=delta
    )


def fixed_point_sequence(length: int, delta: float) -> ParameterSequence:
    """Chebyshev fixed-point schedule of a given length and error budget.

    With l = 2*length + 1 and eta^{-1} = T_{1/l}(1/delta) (the fractional
    Chebyshev value, computed as cosh(arccosh(1/delta)/l)):

        beta_i  = 2 * arccot( tan(2*pi*i / l) * sqrt(1 - eta^2) )
        gamma_i = beta_{length - i + 1}

    on the arccot branch with values in (-pi, pi).  Running the schedule
    keeps the final target probability above 1 - delta^2 once the length is
    large enough.  The schedule itself is independent of the register size.
    """
    if length < 1:
        raise ValueError(f"need at least one iteration, got {length}")
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    odd = 2 * length + 1
    eta = 1.0 / math.cosh(math.acosh(1.0 / delta) / odd)
    spread = math.sqrt(1.0 - eta * eta)
    betas = [
        2.0 * math.atan(1.0 / (math.tan(2.0 * math.pi * i / odd) * spread))
        for i in range(1, length + 1)
    ]
    params = tuple(
        IterationParams(betas[i], betas[length - 1 - i]) for i in range(length)
    )
    return ParameterSequence(
        params=params,
        kind="fixed-point",
        delta=delta,
        queries_per_iteration=2,
    )


# --- pi/3 fixed-point recursion -------------------------------------------

#: Primitive phase rotations of the pi/3 program: about the initial state
#: ("initial", angle) or about the target ("target", angle), each meaning
#: e^{-i * angle * projector}.  A "target" primitive costs one oracle query.
Pi3Op = tuple[str, float]

_PI3 = -math.pi / 3.0  # e^{+i pi/3} phases give the cubic error reduction

MAX_PI3_DEPTH = 8


@dataclass(frozen=True)
class Pi3Program:
    """Recursively expanded pi/3 fixed-point program.

    Level m+1 wraps level m as  U_{m+1} = U_m S(initial) U_m^dag S(target) U_m,
    written out as a flat primitive list in application order.  Depth 0 is
    the empty (identity) program.
    """

    depth: int
    ops: tuple[Pi3Op, ...] = field(default_factory=tuple)

    @property
    def oracle_queries(self) -> int:
        return sum(1 for kind, _ in self.ops if kind == "target")


def pi3_sequence(depth: int) -> Pi3Program:
    """Build the pi/3 program of a given recursion depth.

    The primitive count is 3x the previous level plus the two pi/3 phase
    rotations, so the oracle-query count is (3^depth - 1) / 2.
    """
    if not 0 <= depth <= MAX_PI3_DEPTH:
        raise ValueError(f"depth must lie in [0, {MAX_PI3_DEPTH}], got {depth}")
    ops: tuple[Pi3Op, ...] = ()
    for _ in range(depth):
        adjoint = tuple((kind, -angle) for kind, angle in reversed(ops))
        ops = ops + (("target", _PI3),) + adjoint + (("initial", _PI3),) + ops
    return Pi3Program(depth=depth, ops=ops)


def pi3_matrix(program: Pi3Program, theta0: float) -> np.ndarray:
    """2x2 unitary of the expanded program on the (|t>, |t_perp>) basis."""
    s0 = np.array([math.sin(0.5 * theta0), math.cos(0.5 * theta0)])
    u = np.eye(2, dtype=complex)
    for kind, angle in program.ops:
        if kind == "target":
            prim = np.diag([np.exp(-1j * angle), 1.0])
        else:
            prim = np.eye(2, dtype=complex) - (1.0 - np.exp(-1j * angle)) * np.outer(
                s0, s0
            )
        u = prim @ u
    return u


def pi3_failure_probability(depth: int, theta0: float) -> float:
    """1 - (target probability) after running the depth-m program from |s0>.

    Equals epsilon^(3^m) with epsilon the initial failure probability.
    """
    program = pi3_sequence(depth)
    s0 = np.array([math.sin(0.5 * theta0), math.cos(0.5 * theta0)], dtype=complex)
    final = pi3_matrix(program, theta0) @ s0
    return 1.0 - float(abs(final[0]) ** 2)
