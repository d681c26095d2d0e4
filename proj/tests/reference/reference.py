"""Independent numpy reference for the frozen values in the C++ tests.

Every quantity is computed by direct summation over the defining sums; no
closed forms are shared with the library. Run: python3 reference.py
"""
import numpy as np


def order(x, n):
    L, v = 1, x % n
    while v != 1:
        v = v * x % n
        L += 1
    return L


def popcount(v):
    return bin(v).count("1")


def good(q, L):
    out = []
    for c in range(q):
        r = (L * c) % q
        if r > q // 2:
            r -= q
        if 2 * abs(r) < L:
            out.append(c)
    return out


def per_a_amplitudes(l, strict):
    """A[c, a] = (1/(3^l q)) sum_b h(b,c) e^{2 pi i b (b + c - a)/q}."""
    q = 1 << l
    b = np.arange(q)
    pc = np.array([popcount(i) for i in range(q)])
    out = np.zeros((q, q), complex)
    mask = q - 1
    for c in range(q):
        h = 2.0 ** (l - pc[b ^ c])
        bb, aa = b[:, None], b[None, :]
        phase = np.exp(2j * np.pi * ((bb * (bb + c - aa)) % q) / q)
        if strict:
            phase = phase * ((((~(bb ^ c)) & mask) & (aa ^ bb)) == 0)
        out[c] = (h[:, None] * phase).sum(0) / (3 ** l * q)
    return out


def grouped(A, L):
    return np.stack([A[:, k::L].sum(1) for k in range(L)], 1)


def shor(q, L, k):
    P = np.zeros(q)
    for c in range(q):
        a = np.arange(k, q, L)
        P[c] = abs(np.exp(2j * np.pi * (a * c % q) / q).sum() / q) ** 2
    return P


def r2(col, gs, floor_rel=1e-12):
    peak = col.max()
    nz = col[col > floor_rel * peak]
    return col[gs].max() / nz.min()


_cache = {}


def amps(l, strict):
    key = (l, strict)
    if key not in _cache:
        _cache[key] = per_a_amplitudes(l, strict)
    return _cache[key]


if __name__ == "__main__":
    np.set_printoptions(precision=17)
    print("# norms <S'|S'> (paper, strict)")
    for (n, x, l) in [(15, 2, 4), (33, 5, 6), (33, 5, 8), (51, 2, 8)]:
        L = order(x, n)
        vals = [(abs(grouped(amps(l, s), L)) ** 2).sum() for s in (False, True)]
        print(n, x, l, L, repr(vals[0]), repr(vals[1]))

    print("# top-L sets, paper mode, k=1")
    for (n, x) in [(33, 5), (51, 2)]:
        L = order(x, n)
        col = abs(grouped(amps(8, False), L)[:, 1]) ** 2
        print(n, x, sorted(int(c) for c in np.argsort(-col)[:L]), good(256, L))

    print("# normalized ratio at good c, N=33 x=5 k=1 paper")
    G = grouped(amps(8, False), 10)
    norm = (abs(G) ** 2).sum()
    col = abs(G[:, 1]) ** 2
    P = shor(256, 10, 1)
    print([repr(col[c] / norm / P[c]) for c in good(256, 10)])

    print("# leading-peak ratio max P_semi / max P, k=1 paper")
    for (n, x, l) in [(15, 2, 4), (33, 5, 6), (33, 5, 8)]:
        L = order(x, n)
        col = abs(grouped(amps(l, False), L)[:, 1]) ** 2
        P = shor(1 << l, L, 1)
        print(l, repr(col.max() / P.max()), repr((2 / 3) ** (2 * l)))

    print("# R2 with relative floor 1e-12, q=256 L=10 k=1")
    gs = good(256, 10)
    P = shor(256, 10, 1)
    print("quantum", repr(r2(P, gs)))
    for s in (False, True):
        col = abs(grouped(amps(8, s), 10)[:, 1]) ** 2
        print("strict" if s else "paper", repr(r2(col, gs)))

    print("# spot probabilities q=256 L=10")
    for s in (False, True):
        G = grouped(amps(8, s), 10)
        print("strict" if s else "paper", [repr(abs(G[c, k]) ** 2) for (c, k) in [(0, 0), (77, 1), (26, 1), (100, 3)]])
