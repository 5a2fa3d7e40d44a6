"""Poles and residues of the Caratheodory-Fejer rational approximation to
exp(x) on (-inf, 0], type (n, n), after Trefethen, Weideman and Schmelzer
(BIT 2006), computed in mpmath at 40 digits. The constant term at infinity
is dropped, so the emitted approximation is r(x) = sum_k c_k / (x - z_k).

The construction follows the reference cf.m, with the DFTs written out directly.
Roots of the singular vector polynomial are seeded from numpy and polished
by Newton iteration at full working precision.

Usage: python3 tools/cf_table_mp.py > crates/core/src/kernels/cf_table.rs
       python3 tools/cf_table_mp.py --check
"""
import sys
import mpmath as mp
import numpy as np

mp.mp.dps = 40


def cf_mp(n, K=75, nf=1024, scl=9):
    two_pi_i = 2j * mp.pi
    w = [mp.expjpi(mp.mpf(2 * i) / nf) for i in range(nf)]
    t = [x.real for x in w]
    F = []
    for ti in t:
        if ti + 1 < mp.mpf(10) ** -30:
            F.append(mp.mpf(0))
        else:
            F.append(mp.exp(scl * (ti - 1) / (ti + 1)))
    # c_m = Re(fft(F))_m / nf, m = 0..K
    c = [mp.fsum(F[i] * mp.cospi(mp.mpf(2 * m * i) / nf) for i in range(nf)) / nf
         for m in range(K + 1)]
    H = mp.matrix(K, K)
    for i in range(K):
        for j in range(K):
            H[i, j] = c[i + j + 1] if i + j + 1 <= K else mp.mpf(0)
    U, S, V = mp.svd_r(H)
    order = sorted(range(K), key=lambda i: -S[i])
    col = order[n]
    s = S[col]
    u = [U[K - 1 - i, col] for i in range(K)]  # U(K:-1:1, n+1)
    v = [V[col, i] for i in range(K)]  # V(:, n+1), V returned as V^T

    def dft_at(x, i):
        # numpy fft convention: sum_m x_m exp(-2 pi i m idx / nf)
        return mp.fsum(x[m] * mp.expjpi(-mp.mpf(2 * m * i) / nf) for m in range(len(x)))

    # analytic part f(w) = sum_m c_m w^m
    def polyval_asc(coeffs, x):
        acc = mp.mpc(0)
        for a in reversed(coeffs):
            acc = acc * x + a
        return acc

    # roots(v): v are descending coefficients
    vd = np.array([float(x) for x in v])
    seeds = np.roots(vd)
    seeds = [complex(z) for z in seeds if abs(z) > 1]
    assert len(seeds) == n, (n, len(seeds))

    def polyval_desc(p, x):
        acc = mp.mpc(0)
        for a in p:
            acc = acc * x + a
        return acc

    dv = [v[i] * (K - 1 - i) for i in range(K - 1)]
    qj = []
    for z0 in seeds:
        z = mp.mpc(z0)
        for _ in range(60):
            dz = polyval_desc(v, z) / polyval_desc(dv, z)
            z -= dz
            if abs(dz) < mp.mpf(10) ** (-mp.mp.dps + 3) * abs(z):
                break
        qj.append(z)

    qc = [mp.mpc(1)]
    for q in qj:
        qc = [a - q * b for a, b in zip(qc + [0], [0] + qc)]

    # rt(w_i) = f(w_i) - s w_i^K fft(u)_i / fft(v)_i
    pt = []
    for i in range(nf):
        wi = w[i]
        fi = polyval_asc(c, wi)
        bi = dft_at(u, i) / dft_at(v, i)
        rti = fi - s * wi ** K * bi
        pt.append(rti * polyval_desc(qc, wi))
    # ptc = real(fft(pt)/nf), keep first n+1, reversed
    ptc = [mp.re(dft_at(pt, m)) / nf for m in range(n + 1)]
    ptc = ptc[::-1]

    zi, ci = [], []
    for k, q in enumerate(qj):
        others = [qq for kk, qq in enumerate(qj) if kk != k]
        q2 = [mp.mpc(1)]
        for qq in others:
            q2 = [a - qq * b for a, b in zip(q2 + [0], [0] + q2)]
        ck = polyval_desc(ptc, q) / polyval_desc(q2, q)
        z = scl * (q - 1) ** 2 / (q + 1) ** 2
        zi.append(z)
        ci.append(4 * ck * z / (q ** 2 - 1))
    return zi, ci


def symmetrize(z, c):
    pairs = sorted(zip(z, c), key=lambda p: -p[0].imag)
    n = len(pairs)
    out = list(pairs)
    for i in range(n // 2):
        j = n - 1 - i
        zm = (pairs[i][0] + mp.conj(pairs[j][0])) / 2
        cm = (pairs[i][1] + mp.conj(pairs[j][1])) / 2
        out[i] = (zm, cm)
        out[j] = (mp.conj(zm), mp.conj(cm))
    if n % 2 == 1:
        m = n // 2
        out[m] = (mp.mpc(pairs[m][0].real, 0), mp.mpc(pairs[m][1].real, 0))
    return out


def sup_error(pairs):
    z = np.array([complex(p[0]) for p in pairs])
    c = np.array([complex(p[1]) for p in pairs])
    x = -np.concatenate([[0.0], np.logspace(-6, 4, 20000)])
    r = np.real(np.sum(c[None, :] / (x[:, None] - z[None, :]), axis=1))
    return np.max(np.abs(np.exp(x) - r))


if __name__ == "__main__":
    degrees = range(2, 17)
    if len(sys.argv) > 1 and sys.argv[1] == "--check":
        prev = None
        for n in degrees:
            e = sup_error(symmetrize(*cf_mp(n)))
            print(n, "%.3e" % e, "" if prev is None else "%.3f" % (prev / e), flush=True)
            prev = e
        sys.exit(0)
    out = sys.stdout
    out.write("// Generated by tools/cf_table_mp.py. Do not edit by hand.\n\n")
    out.write("/// `(degree, [(pole_re, pole_im, residue_re, residue_im); degree])`\n")
    out.write("#[rustfmt::skip]\n")
    out.write("pub(crate) static CF_TABLE: &[(usize, &[(f64, f64, f64, f64)])] = &[\n")
    for n in degrees:
        pairs = symmetrize(*cf_mp(n))
        sys.stderr.write("degree %d: sup error %.3e\n" % (n, sup_error(pairs)))
        out.write(f"    ({n}, &[\n")
        for z, c in pairs:
            vals = [float(z.real), float(z.imag), float(c.real), float(c.imag)]
            out.write("        (" + ", ".join(repr(v) for v in vals) + "),\n")
        out.write("    ]),\n")
    out.write("];\n")
