"""Which (beta, gamma) pairs amplify?  A map of the parameter square.

At any point of a search trajectory the per-step probability gain is
Delta = A cos(theta) + B sin(theta), and the sign of B decides whether a
step helps asymptotically.  Exactly half of the parameter square [-pi,pi]^2
has B > 0, no matter where the trajectory currently sits: amplifying
parameters are abundant, not special.  This demo prints an ASCII map of
the region and checks the half-measure numerically.

Run:  python demos/02_parameter_region.py
"""

import math

import numpy as np

from qaa import (
    StateAngles,
    amplification_coefficient,
    initial_angles,
    qaao_region_fraction,
    region_boundary,
)

N_QUBITS = 8
GRID = 33


def main() -> None:
    theta0 = initial_angles(N_QUBITS).theta
    state = StateAngles(1.1, 0.7)

    axis = np.linspace(-math.pi, math.pi, GRID)
    b = amplification_coefficient(axis[:, None], axis[None, :], state.phi, theta0)
    print(f"sign of B over (beta down, gamma across), n={N_QUBITS}, "
          f"state (theta={state.theta}, phi={state.phi}):\n")
    for row in b:
        print("".join("#" if v > 0 else "." for v in row))

    fraction = qaao_region_fraction(state, theta0, samples=10**6, seed=0)
    print(f"\nMonte Carlo fraction with B > 0: {fraction:.4f}  (expected 0.5000)")

    beta = 1.3
    varphi = region_boundary(beta, theta0)
    print(f"boundary at beta={beta}: varphi = {varphi:.6f} and varphi + pi")
    c = math.cos(beta / 2) * math.sin(varphi) + math.sin(beta / 2) * math.cos(
        varphi
    ) * math.cos(theta0)
    print(f"coefficient C on the boundary: {c:.2e}  (a root)")


if __name__ == "__main__":
    main()
