"""Full 2^n state-vector simulation of amplification circuits.

Ground truth for the analytic two-level model: the oracle phase and the
diffusion about the uniform state are applied exactly on all 2^n complex
amplitudes.  Basis ordering is big-endian: the leftmost character of a bit
string is qubit 0 and the most significant bit of the basis index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .subspace import IterationParams, StateAngles

#: Largest supported register; 2^24 amplitudes is the desk-scale cap.
MAX_QUBITS = 24

NORM_TOL = 1e-12


@dataclass(frozen=True)
class OracleSpec:
    """Marked basis states of an n-qubit search problem."""

    n: int
    targets: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one qubit, got n={self.n}")
        targets = frozenset(self.targets)
        object.__setattr__(self, "targets", targets)
        if not 1 <= len(targets) < 2**self.n:
            raise ValueError(
                f"need 1 <= |targets| < 2^n, got {len(targets)} for n={self.n}"
            )
        for t in targets:
            if len(t) != self.n or set(t) - {"0", "1"}:
                raise ValueError(f"target {t!r} is not an {self.n}-bit string")

    @classmethod
    def single(cls, target: str) -> "OracleSpec":
        return cls(n=len(target), targets=frozenset({target}))

    @property
    def m(self) -> int:
        return len(self.targets)

    def target_indices(self) -> np.ndarray:
        return np.array(sorted(int(t, 2) for t in self.targets), dtype=np.intp)


@dataclass(frozen=True)
class StateVector:
    """2^n complex amplitudes; index = big-endian bit string."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (2**self.n,):
            raise ValueError(
                f"expected {2 ** self.n} amplitudes for n={self.n}, got {amps.shape}"
            )
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm_defect(self) -> float:
        return abs(float(np.sum(np.abs(self.amplitudes) ** 2)) - 1.0)


def _check_dims(state: StateVector, oracle: OracleSpec) -> None:
    if state.n != oracle.n:
        raise ValueError(f"qubit counts disagree: state n={state.n}, oracle n={oracle.n}")


def uniform_state(n: int) -> StateVector:
    """H^{x n} |0...0>: every amplitude 2^{-n/2}."""
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count must lie in [1, {MAX_QUBITS}], got {n}")
    big_n = 2**n
    return StateVector(n, np.full(big_n, big_n**-0.5, dtype=complex))


def apply_oracle_phase(state: StateVector, oracle: OracleSpec, gamma: float) -> StateVector:
    """Multiply every target amplitude by e^{-i*gamma}."""
    _check_dims(state, oracle)
    amps = state.amplitudes.copy()
    amps[oracle.target_indices()] *= np.exp(-1j * gamma)
    return StateVector(state.n, amps)


def apply_diffusion(state: StateVector, beta: float) -> StateVector:
    """Phase rotation e^{-i*beta} about the uniform state.

    Rank-1 update via the mean amplitude: a -> a - (1 - e^{-i*beta}) * mean,
    exact and O(2^n).
    """
    mean = state.amplitudes.mean()
    return StateVector(state.n, state.amplitudes - (1.0 - np.exp(-1j * beta)) * mean)


def apply_iteration(
    state: StateVector, params: IterationParams, oracle: OracleSpec
) -> StateVector:
    """One full iteration: oracle phase R(gamma) first, then diffusion D(beta)."""
    return apply_diffusion(apply_oracle_phase(state, oracle, params.gamma), params.beta)


def target_probability(state: StateVector, oracle: OracleSpec) -> float:
    _check_dims(state, oracle)
    return float(np.sum(np.abs(state.amplitudes[oracle.target_indices()]) ** 2))


def project_to_angles(state: StateVector, oracle: OracleSpec) -> tuple[StateAngles, float]:
    """Decompose onto the plane spanned by |t> and |t_perp>.

    |t> is the uniform superposition of the m target strings and |t_perp>
    the normalized non-target part of the uniform state.  Returns the plane
    angles and the squared norm left outside the plane (the leakage, zero
    for any product of diffusion/oracle gates applied to the uniform state).
    """
    _check_dims(state, oracle)
    idx = oracle.target_indices()
    m = idx.size
    big_n = 2**state.n
    target_sum = state.amplitudes[idx].sum()
    a_target = target_sum / math.sqrt(m)
    a_perp = (state.amplitudes.sum() - target_sum) / math.sqrt(big_n - m)
    leakage = float(np.sum(np.abs(state.amplitudes) ** 2)) - abs(a_target) ** 2 - abs(a_perp) ** 2
    return StateAngles.from_amplitudes(a_target, a_perp), max(leakage, 0.0)


def sample_measurements(state: StateVector, shots: int, seed: int) -> dict[str, int]:
    """Multinomial readout histogram, deterministic per seed.

    Returns bit string -> count for observed outcomes only; counts sum to shots.
    """
    if shots < 1:
        raise ValueError(f"need at least one shot, got {shots}")
    probs = np.abs(state.amplitudes) ** 2
    probs = probs / probs.sum()
    counts = np.random.default_rng(seed).multinomial(shots, probs)
    width = state.n
    return {
        format(i, f"0{width}b"): int(c) for i, c in enumerate(counts) if c
    }
