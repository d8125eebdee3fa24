"""Where does a qubit saturate the product uncertainty bound?

For the pair (sigma_x, sigma_y) and the Bloch state (cos(t/2), e^{ip} sin(t/2)),
the slack works out to (sin(t)^2 sin(2p) / 2)^2: equality holds at the two
poles and along the four meridians p in {0, pi/2, pi, 3pi/2}, and nowhere
else.  The sweep below shows both regimes, and the pole witnesses carry the
phases pi/4 and 7pi/4.
"""

import math

import numpy as np

from qubounds import bloch_state, robertson, robertson_saturation_pure, schrodinger
from qubounds.goldens import SIGMA_X, SIGMA_Y


def main():
    print("product bound for (sigma_x, sigma_y) over the Bloch sphere")
    print(f"{'theta':>8} {'phi':>8} {'lhs':>10} {'rhs':>10} {'slack':>12}  saturated")
    for theta in (0.0, math.pi / 3, math.pi / 2):
        for phi in (0.0, math.pi / 8, math.pi / 4, math.pi / 2):
            psi = bloch_state(theta, phi)
            report = robertson(SIGMA_X, SIGMA_Y, psi)
            predicted = (math.sin(theta) ** 2 * math.sin(2 * phi) / 2) ** 2
            assert abs(report.lhs**2 - report.rhs**2 - predicted) < 1e-12
            print(
                f"{theta:8.3f} {phi:8.3f} {report.lhs:10.6f} {report.rhs:10.6f}"
                f" {report.slack:12.2e}  {report.saturated}"
            )

    print("\nwitness phases at the poles:")
    for theta, name in ((0.0, "north pole |0>"), (math.pi, "south pole |1>")):
        psi = bloch_state(theta, 0.0)
        cert = robertson_saturation_pure(SIGMA_X, SIGMA_Y, psi)
        print(
            f"  {name}: theta = {cert.theta:.6f} rad"
            f" ({cert.theta / math.pi:.3f} pi), residual = {cert.residual:.2e}"
        )

    print("\non a meridian the witness phase varies with latitude:")
    for theta in (math.pi / 4, math.pi / 2, 3 * math.pi / 4):
        cert = robertson_saturation_pure(SIGMA_X, SIGMA_Y, bloch_state(theta, 0.0))
        print(f"  theta = {theta:.4f}: witness phase = {cert.theta:.6f}"
              f" (atan(cos(theta)) mod 2 pi = {math.atan(math.cos(theta)) % (2 * math.pi):.6f})")

    print("\nthe stronger product bound is saturated at the pole too"
          " (the anticommutator term vanishes):")
    report = schrodinger(SIGMA_X, SIGMA_Y, bloch_state(0.0, 0.0))
    print(f"  lhs = {report.lhs:.6f}, rhs = {report.rhs:.6f}, saturated = {report.saturated}")


if __name__ == "__main__":
    main()
