"""Analytic model of amplitude amplification restricted to the target plane.

Every iteration G(beta, gamma) = D(beta) R(gamma) built from the uniform
initial state preserves the two-dimensional subspace spanned by the target
state |t> and the normalized non-target component |t_perp> of the initial
state.  Inside that plane a state is a pair of angles (theta, phi) with
target probability sin^2(theta/2), and one iteration is a 2x2 unitary.
This module implements the exact dynamics: increments, the QAAO predicate,
optimal parameters, and the geometry of the positive-increment region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

#: Tolerance for algebraic identities evaluated in double precision.
ALGEBRAIC_TOL = 1e-12

#: Gauge cutoff: below this squared amplitude the relative phase is undefined.
_POLE_EPS = 1e-300


class ModelConsistencyError(RuntimeError):
    """Closed-form and matrix-product increments disagree beyond tolerance.

    This signals an implementation defect, not a bad input.
    """


def wrap_pi(angle: float) -> float:
    """Reduce an angle to [-pi, pi] (pi maps to -pi)."""
    return (angle + math.pi) % TWO_PI - math.pi


def wrap_2pi(angle: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    return angle % TWO_PI


@dataclass(frozen=True)
class StateAngles:
    """Position (theta, phi) of a state in the target/complement plane.

    The state is e^{i*phi} sin(theta/2) |t> + cos(theta/2) |t_perp>, so the
    target probability is sin^2(theta/2).  phi is stored in [0, 2*pi); at
    the poles theta = 0, pi the phase is gauge and fixed to 0.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self) -> None:
        if not -ALGEBRAIC_TOL <= self.theta <= math.pi + ALGEBRAIC_TOL:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        object.__setattr__(self, "theta", min(max(self.theta, 0.0), math.pi))
        object.__setattr__(self, "phi", wrap_2pi(self.phi))

    @property
    def target_probability(self) -> float:
        return math.sin(0.5 * self.theta) ** 2

    def amplitudes(self) -> np.ndarray:
        """Complex pair (<t|s>, <t_perp|s>)."""
        return np.array(
            [
                np.exp(1j * self.phi) * math.sin(0.5 * self.theta),
                math.cos(0.5 * self.theta),
            ]
        )

    @classmethod
    def from_amplitudes(cls, a_target: complex, a_perp: complex) -> "StateAngles":
        """Angles of a_target |t> + a_perp |t_perp>, global phase discarded."""
        r_t = abs(a_target)
        r_p = abs(a_perp)
        theta = 2.0 * math.atan2(r_t, r_p)
        if r_t * r_t < _POLE_EPS or r_p * r_p < _POLE_EPS:
            return cls(theta, 0.0)
        phi = np.angle(a_target) - np.angle(a_perp)
        return cls(theta, wrap_2pi(phi))


@dataclass(frozen=True)
class IterationParams:
    """A single (beta, gamma) pair defining one iteration G(beta, gamma)."""

    beta: float
    gamma: float

    def __post_init__(self) -> None:
        for name, value in (("beta", self.beta), ("gamma", self.gamma)):
            if not -math.pi - ALGEBRAIC_TOL <= value <= math.pi + ALGEBRAIC_TOL:
                raise ValueError(f"{name} must lie in [-pi, pi], got {value}")
            object.__setattr__(self, name, float(value))


@dataclass(frozen=True)
class CoefficientSet:
    """Coefficients of the increment Delta = a*cos(theta) + b*sin(theta)."""

    a: float
    b: float
    c_coef: float
    varphi: float


def initial_angles(n: int, m: int = 1) -> StateAngles:
    """Angles of the uniform superposition over n qubits with m targets.

    theta_0 = 2*arcsin(sqrt(m/N)), phi_0 = 0, where N = 2^n.
    """
    if n < 1:
        raise ValueError(f"need at least one qubit, got n={n}")
    big_n = 2**n
    if not 1 <= m < big_n:
        raise ValueError(f"target count must satisfy 1 <= m < 2^n, got m={m}")
    return StateAngles(2.0 * math.asin(math.sqrt(m / big_n)), 0.0)


def coefficients(
    params: IterationParams, state: StateAngles, theta0: float
) -> CoefficientSet:
    """Closed-form increment coefficients for one iteration at a state.

    With varphi = phi - gamma:
        c = cos(beta/2) sin(varphi) + sin(beta/2) cos(varphi) cos(theta0)
        b = -c sin(beta/2) sin(theta0)
        a = sin^2(beta/2) sin^2(theta0)
    """
    varphi = wrap_2pi(state.phi - params.gamma)
    half = 0.5 * params.beta
    sin_half = math.sin(half)
    c = math.cos(half) * math.sin(varphi) + sin_half * math.cos(varphi) * math.cos(
        theta0
    )
    b = -c * sin_half * math.sin(theta0)
    a = sin_half**2 * math.sin(theta0) ** 2
    return CoefficientSet(a=a, b=b, c_coef=c, varphi=varphi)


def amplification_coefficient(
    beta: np.ndarray, gamma: np.ndarray, phi: float, theta0: float
) -> np.ndarray:
    """Vectorized b(beta, gamma): the O(N^{-1/2}) increment coefficient.

    Broadcasts over arrays of beta and gamma for grid and Monte Carlo use.
    """
    varphi = phi - np.asarray(gamma)
    half = 0.5 * np.asarray(beta)
    sin_half = np.sin(half)
    c = np.cos(half) * np.sin(varphi) + sin_half * np.cos(varphi) * np.cos(theta0)
    return -c * sin_half * np.sin(theta0)


def closed_form_increment(
    beta: np.ndarray,
    gamma: np.ndarray,
    theta: float,
    phi: float,
    theta0: float,
) -> np.ndarray:
    """Vectorized increment Delta = a*cos(theta) + b*sin(theta)."""
    half = 0.5 * np.asarray(beta)
    a = np.sin(half) ** 2 * math.sin(theta0) ** 2
    b = amplification_coefficient(beta, gamma, phi, theta0)
    return a * math.cos(theta) + b * math.sin(theta)


def iteration_matrix(params: IterationParams, theta0: float) -> np.ndarray:
    """2x2 unitary of G(beta, gamma) on the ordered basis (|t>, |t_perp>).

    R(gamma) multiplies the target amplitude by e^{-i*gamma}; D(beta) is
    1 - (1 - e^{-i*beta}) |s0><s0| with |s0> = (sin(theta0/2), cos(theta0/2)).
    """
    s0 = np.array([math.sin(0.5 * theta0), math.cos(0.5 * theta0)])
    diffusion = np.eye(2, dtype=complex) - (1.0 - np.exp(-1j * params.beta)) * np.outer(
        s0, s0
    )
    oracle = np.diag([np.exp(-1j * params.gamma), 1.0])
    return diffusion @ oracle


def increment(params: IterationParams, state: StateAngles, theta0: float) -> float:
    """Change in target probability caused by one iteration.

    Computed both from the closed form and from the 2x2 matrix action; the
    two must agree to ALGEBRAIC_TOL or a ModelConsistencyError is raised.
    Returns the matrix-product value.
    """
    coef = coefficients(params, state, theta0)
    closed = coef.a * math.cos(state.theta) + coef.b * math.sin(state.theta)
    after = iteration_matrix(params, theta0) @ state.amplitudes()
    matrix = float(abs(after[0]) ** 2) - state.target_probability
    if abs(matrix - closed) > 1e-12:
        raise ModelConsistencyError(
            f"closed-form increment {closed!r} deviates from matrix value "
            f"{matrix!r} at params={params}, state={state}, theta0={theta0}"
        )
    return matrix


def apply_iteration(
    params: IterationParams, state: StateAngles, theta0: float
) -> StateAngles:
    """Angles of G(beta, gamma)|s>, global phase discarded."""
    after = iteration_matrix(params, theta0) @ state.amplitudes()
    return StateAngles.from_amplitudes(after[0], after[1])


def is_qaao(
    params: IterationParams,
    state: StateAngles,
    theta0: float,
    n_states: int,
    c: float = 1.5,
) -> bool:
    """Whether the iteration amplifies at the O(N^{-1/2}) scale.

    The predicate is b(beta, gamma) > c / sqrt(N) for some c > 1.
    """
    if c <= 1.0:
        raise ValueError(f"the predicate constant must exceed 1, got c={c}")
    return coefficients(params, state, theta0).b > c / math.sqrt(n_states)


def optimal_params(state: StateAngles, theta0: float) -> IterationParams:
    """Parameters maximizing the increment at a state.

    For theta < pi - 2*theta0 the optimum is the standard amplification step
    (beta = pi, gamma = phi - pi).  Closer to the target the optimum is

        beta* = 2*arcsin(cos(theta/2) / sin(theta0)),
        gamma* = phi + pi - arctan(cot(beta*/2) sec(theta0)),

    and applying it drives the target probability to exactly 1.
    """
    theta, phi = state.theta, state.phi
    if theta < math.pi - 2.0 * theta0:
        return IterationParams(math.pi, wrap_pi(phi - math.pi))
    ratio = math.cos(0.5 * theta) / math.sin(theta0)
    beta = 2.0 * math.asin(min(max(ratio, -1.0), 1.0))
    half = 0.5 * beta
    # arctan(cot(beta/2) sec(theta0)) on the principal branch; the atan2 form
    # is exact at beta = 0 where the cotangent diverges.
    correction = math.atan2(math.cos(half), math.sin(half) * math.cos(theta0))
    return IterationParams(beta, wrap_pi(phi + math.pi - correction))


def region_boundary(beta: float, theta0: float) -> float:
    """The root varphi in (0, pi] of c(beta, varphi) = 0.

    The sign of b flips across this curve; the second root sits exactly pi
    away, so for every fixed beta != 0 the positive-b set of gamma has
    measure pi out of 2*pi.
    """
    half = 0.5 * beta
    if abs(math.sin(half)) < ALGEBRAIC_TOL:
        raise ValueError("the boundary is undefined at beta = 0 (b vanishes)")
    varphi = math.atan2(-math.sin(half) * math.cos(theta0), math.cos(half))
    varphi %= math.pi
    return math.pi if varphi == 0.0 else varphi


def qaao_region_fraction(
    state: StateAngles,
    theta0: float,
    samples: int,
    seed: int,
    threshold: float = 0.0,
) -> float:
    """Monte Carlo measure fraction of (beta, gamma) in [-pi, pi]^2 with b > threshold.

    Deterministic for a fixed seed.  The default threshold 0 estimates the
    half-measure amplification region; pass c/sqrt(N) for the strict predicate.
    """
    if samples < 1:
        raise ValueError(f"need at least one sample, got {samples}")
    rng = np.random.default_rng(seed)
    beta = rng.uniform(-math.pi, math.pi, samples)
    gamma = rng.uniform(-math.pi, math.pi, samples)
    b = amplification_coefficient(beta, gamma, state.phi, theta0)
    return float(np.mean(b > threshold))
