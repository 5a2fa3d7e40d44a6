"""Closed-form reference solutions at t = 1, evaluated in mpmath at 100 digits.

* T1: y(1) = E_{a,1}(-lam) + E_{a,p+1}(-lam), lam = 3.
* MOL system: amplitude e_{a,1}(1; mu) + e_{a,p+a+1}(1; mu) of sin(pi x_j),
  mu = (2 - 2 cos(pi dx)) / dx^2, dx = 1/(M+1).

Values are printed as Rust tuples for the acceptance suite.
"""
import mpmath as mp

from ml_oracle import gml

mp.mp.dps = 100

T1_CASES = [("0.5", "2"), ("1.5", "3"), ("0.5", "3"), ("1.5", "4"), ("0.5", "4"),
            ("0.5", "6"), ("1.5", "2"), ("0.5", "5"), ("0.8", "3")]
PDE_CASES = [("0.6", "3", 16), ("0.8", "3", 8)]


def mu(m):
    dx = mp.mpf(1) / (m + 1)
    return (2 - 2 * mp.cos(mp.pi * dx)) / dx ** 2


if __name__ == "__main__":
    print("// (alpha, p, y(1)) for T1 with lambda = 3, y0 = 1")
    for a, p in T1_CASES:
        v = gml(a, 1, 1, 3) + gml(a, mp.mpf(p) + 1, 1, 3)
        print(f"({a}, {p}.0, {mp.nstr(v, 20)}),")
    print("// (alpha, p, M, amplitude at t = 1)")
    for a, p, m in PDE_CASES:
        u = mu(m)
        v = gml(a, 1, 1, u) + gml(a, mp.mpf(p) + mp.mpf(a) + 1, 1, u)
        print(f"({a}, {p}.0, {m}, {mp.nstr(v, 20)}),")
