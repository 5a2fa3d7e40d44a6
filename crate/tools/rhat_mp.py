"""High-precision moment kernels
R̂_k(j; w) = k! [e_{a,a+k+1}(j; w) - sum_{l<=k} e_{a,a+l+1}(j-1; w)/(k-l)!]
with e_{a,b}(t; w) = t^(b-1) E_{a,b}(-t^a w) summed from the power series.
Working precision grows with the argument so the alternating series keeps
enough digits after cancellation.

Prints Rust tuples `(alpha, w, k, j, value)`.
"""
import sys

import mpmath as mp


def ml(alpha, beta, x):
    s = mp.mpf(0)
    term_k = 0
    while True:
        g = alpha * term_k + beta
        term = x ** term_k / mp.gamma(g)
        s += term
        if term_k > 10 and abs(term) < mp.mpf(10) ** (-mp.mp.dps + 5) * max(abs(s), mp.mpf(10) ** -40):
            break
        term_k += 1
    return s


def gml(alpha, beta, t, w):
    if t == 0:
        return mp.mpf(1) if beta == 1 else mp.mpf(0)
    t = mp.mpf(t)
    return t ** (beta - 1) * ml(alpha, beta, -(t ** alpha) * w)


def r_hat(alpha, w, k, j):
    x = float(j) ** float(alpha) * float(w)
    mp.mp.dps = 40 + int(x ** (1.0 / float(alpha)) / 2.3) + 4 * k + 10
    alpha, w = mp.mpf(alpha), mp.mpf(w)
    out = gml(alpha, alpha + k + 1, j, w)
    if j > 1:
        for l in range(k + 1):
            out -= gml(alpha, alpha + l + 1, j - 1, w) / mp.factorial(k - l)
    return out * mp.factorial(k)


if __name__ == "__main__":
    alphas = ["0.5", "0.8", "1.0", "1.5", "1.9"]
    ws = ["0.0", "0.1", "2.0", "40.0"]
    for a in alphas:
        for w in ws:
            for k in [0, 1, 3, 6]:
                for j in [1, 2, 3, 17, 100, 1024]:
                    x = float(j) ** float(a) * float(w)
                    if x ** (1 / float(a)) > 2000:
                        continue
                    v = r_hat(mp.mpf(a), mp.mpf(w), k, j)
                    mp.mp.dps = 25
                    print(f"({a}, {w}, {k}, {j}, {mp.nstr(v, 20)}),")
                    sys.stdout.flush()
