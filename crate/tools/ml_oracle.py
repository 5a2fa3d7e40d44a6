"""High-precision reference values of e_{a,b}(t; z) = t^(b-1) E_{a,b}(-t^a z),
summed from the defining power series in mpmath at 100 digits.

Prints Rust tuples `(alpha, beta, t, z, value)` for the kernel accuracy grid
used by the acceptance suite, plus a few single values used in unit tests.
"""
import mpmath as mp

mp.mp.dps = 100


def ml(alpha, beta, x):
    alpha, beta, x = mp.mpf(alpha), mp.mpf(beta), mp.mpf(x)
    s = mp.mpf(0)
    k = 0
    peak = mp.mpf(0)
    while True:
        term = x ** k / mp.gamma(alpha * k + beta) if not (alpha * k + beta <= 0 and (alpha * k + beta) == int(alpha * k + beta)) else mp.mpf(0)
        s += term
        peak = max(peak, abs(term))
        if k > 10 and abs(term) < mp.mpf(10) ** -60 * max(abs(s), mp.mpf(10) ** -30) and abs(term) < peak:
            break
        k += 1
        if k > 20000:
            raise RuntimeError("no convergence")
    return s


def gml(alpha, beta, t, z):
    t = mp.mpf(t)
    if t == 0:
        return mp.mpf(1) if beta == 1 else mp.mpf(0)
    return t ** (mp.mpf(beta) - 1) * ml(alpha, beta, -t ** mp.mpf(alpha) * mp.mpf(z))


def r(x):
    return mp.nstr(x, 20, min_fixed=-1, max_fixed=-1) if x != 0 else "0.0"


if __name__ == "__main__":
    print("// (alpha, beta, j, z, e_{alpha,beta}(j; z))")
    for a in ["0.5", "0.8", "1.5"]:
        for db in ["0", "1", "2"]:
            b = mp.mpf(a) + int(db)
            for j in [1, 2, 8, 64]:
                for z in ["0.0", "0.05", "0.6"]:
                    v = gml(a, b, j, z)
                    print(f"({a}, {a} + {db}.0, {j}.0, {z}, {mp.nstr(v, 20)}),")
    print("// E_{0.5,0.5}(-1)", mp.nstr(ml("0.5", "0.5", -1), 20))
    print("// e_{0.8,0.8}(2; 0.3)", mp.nstr(gml("0.8", "0.8", 2, "0.3"), 20))
    for x in ["0.1", "0.5", "1.5", "2.5", "7.3", "33.3", "100.5", "171.5"]:
        print("// gamma", x, mp.nstr(mp.gamma(mp.mpf(float(x))), 20))
