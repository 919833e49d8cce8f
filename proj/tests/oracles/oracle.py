"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Nothing here shares code with the library. Exact moments of S_n are computed by
summing over every colouring theta: [m] -> [n] directly (not over set partitions
weighted by falling factorials), and leg moments by filtering all set partitions.
"""
from fractions import Fraction as F
from itertools import product, combinations
from functools import lru_cache
import json, sys


def set_partitions(n):
    def rec(i, rgs, mx):
        if i == n:
            yield tuple(rgs)
            return
        for v in range(mx + 2):
            rgs.append(v)
            yield from rec(i + 1, rgs, max(mx, v))
            rgs.pop()
    if n == 0:
        yield ()
        return
    yield from rec(0, [], -1)


def blocks_of(rgs):
    out = {}
    for i, v in enumerate(rgs):
        out.setdefault(v, []).append(i)
    return list(out.values())


def crossing(rgs):
    n = len(rgs)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    if rgs[a] == rgs[c] and rgs[b] == rgs[d] and rgs[a] != rgs[b]:
                        return True
    return False


@lru_cache(None)
def nc_list(n):
    return [p for p in set_partitions(n) if not crossing(p)]


def coloured_free_moment(colours, kappa):
    r = len(colours)
    total = F(0)
    for p in nc_list(r):
        ok = all(colours[i] == colours[blk[0]] for blk in blocks_of(p) for i in blk)
        if not ok:
            continue
        term = F(1)
        for blk in blocks_of(p):
            term *= kappa[len(blk)]
        total += term
    return total


def cumulants_from_moments_via_recursion(mom, K):
    # m_n = sum_{s=1}^{n} kappa_s * sum_{i1+..+is = n-s} m_i1...m_is  (first-block recursion)
    kappa = [F(0)] * (K + 1)
    m = [F(1)] + list(mom[1:K + 1])

    def comp(s, t):
        # sum over compositions of t into s nonnegative parts of prod m
        dp = [F(0)] * (t + 1)
        dp[0] = F(1)
        for _ in range(s):
            nd = [F(0)] * (t + 1)
            for a in range(t + 1):
                if dp[a]:
                    for b in range(t + 1 - a):
                        nd[a + b] += dp[a] * m[b]
            dp = nd
        return dp[t]

    for n in range(1, K + 1):
        acc = F(0)
        for s in range(1, n):
            acc += kappa[s] * comp(s, n - s)
        kappa[n] = m[n] - acc
    return kappa


def exact_sn_coefficient(m, n, ma, mb):
    """Returns (sum over theta) / (delta2^{floor(m/2)} n^{floor(m/2)}); the true value
    is this times sqrt(1/(delta2*n)) when m is odd."""
    K = max(len(ma), len(mb)) - 1
    ka = cumulants_from_moments_via_recursion(ma, len(ma) - 1)
    kb = cumulants_from_moments_via_recursion(mb, len(mb) - 1)
    lam = ma[1]
    sig2 = ma[2] - lam * lam
    delta2 = sig2 * (sig2 + 2 * lam * lam)
    total = F(0)
    for theta in product(range(n), repeat=m):
        for mask in range(1 << m):
            S = [k for k in range(m) if mask >> k & 1]
            cols = [theta[k] for k in S]
            term = (-lam * lam) ** (m - len(S))
            if term == 0:
                continue
            term *= coloured_free_moment(cols, ka) * coloured_free_moment(cols, kb)
            total += term
    h = m // 2
    return total / (delta2 ** h * F(n) ** h)


def pair_partitions(n):
    if n == 0:
        yield []
        return
    first = 0
    rest = list(range(1, n))
    def rec(elems):
        if not elems:
            yield []
            return
        a = elems[0]
        for i in range(1, len(elems)):
            b = elems[i]
            for tail in rec(elems[1:i] + elems[i + 1:]):
                yield [(a, b)] + tail
    yield from rec(list(range(n)))


def bicon_count(n):
    cnt = 0
    for pp in pair_partitions(n):
        k = len(pp)
        adj = [[False] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                if i != j:
                    (a, b), (c, d) = sorted(pp[i]), sorted(pp[j])
                    if a < c < b < d or c < a < d < b:
                        adj[i][j] = True
        colour = [-1] * k
        colour[0] = 0
        stack = [0]
        ok = True
        while stack:
            u = stack.pop()
            for v in range(k):
                if adj[u][v]:
                    if colour[v] == -1:
                        colour[v] = 1 - colour[u]
                        stack.append(v)
                    elif colour[v] == colour[u]:
                        ok = False
        if ok and all(c != -1 for c in colour):
            cnt += 1
    return cnt


def nc2(n):
    return [p for p in pair_partitions(n) if not any(
        a < c < b < d for (a, b) in p for (c, d) in p)]


def loops(top, bottom, npts):
    t = {}
    b = {}
    for x, y in top:
        t[x] = y; t[y] = x
    for x, y in bottom:
        b[x] = y; b[y] = x
    seen = set()
    c = 0
    for s in range(npts):
        if s in seen:
            continue
        c += 1
        x = s
        while True:
            seen.add(x)
            y = t[x]
            seen.add(y)
            x = b[y]
            if x == s:
                break
    return c


def meander_dist(m):
    hist = {}
    sys_ = nc2(2 * m)
    for top in sys_:
        for bot in sys_:
            c = loops(top, bot, 2 * m)
            hist[c] = hist.get(c, 0) + 1
    return dict(sorted(hist.items()))


def semicircle_moments(K, lam=F(0), var=F(1)):
    # moments of lam + sqrt(var) * s, s standard semicircle
    cat = [F(1)]
    base = [F(1)] + [F(0)] * K
    from math import comb
    for k in range(1, K + 1):
        if k % 2 == 0:
            j = k // 2
            base[k] = F(comb(2 * j, j), j + 1)
    out = [F(1)] + [F(0)] * K
    for k in range(1, K + 1):
        s = F(0)
        for i in range(k + 1):
            if i % 2 == 0:
                s += comb(k, i) * lam ** (k - i) * var ** (i // 2) * base[i]
        out[k] = s
    return out


def bernoulli_moments(K, lam, sig):
    # lam + sig * eps, eps = +-1 equally likely
    from math import comb
    out = [F(1)] + [F(0)] * K
    for k in range(1, K + 1):
        out[k] = sum(comb(k, i) * lam ** (k - i) * sig ** i for i in range(0, k + 1, 2))
    return out


def free_poisson_moments(K):
    # rate 1, jump 1: all free cumulants 1 -> moments are Catalan numbers (NC counts)
    out = [F(1)] + [F(0)] * K
    for k in range(1, K + 1):
        out[k] = F(len(nc_list(k)))
    return out


def mu_q_moments_direct(q, K):
    kz = [F(0)] * (K + 1)
    for n in range(2, K + 1, 2):
        kz[n] = F(1) if n == 2 else 2 * (q / 2) ** (n // 2) * bicon_count(n)
    return [F(1)] + [coloured_free_moment([0] * n, kz) for n in range(1, K + 1)]


if __name__ == "__main__":
    out = {}
    out["bicon"] = {n: bicon_count(n) for n in (2, 4, 6, 8, 10)}
    out["meander"] = {m: meander_dist(m) for m in range(1, 5)}
    # mu_1 free cumulants via classical moments of (X+Y)/sqrt2
    from math import comb
    sc = semicircle_moments(8)
    mu1 = [F(1)] + [sum(comb(k, i) * sc[i] * sc[k - i] for i in range(k + 1)) / F(2) ** (k // 2)
                    if k % 2 == 0 else F(0) for k in range(1, 9)]
    out["mu1_kappa_classical"] = [str(x) for x in cumulants_from_moments_via_recursion(mu1, 8)[1:]]
    out["mu_q_1_3"] = [str(x) for x in mu_q_moments_direct(F(1, 3), 8)[1:]]
    out["mu_q_9_10"] = [str(x) for x in mu_q_moments_direct(F(9, 10), 8)[1:]]
    inputs = {
        "centred_semicircle": (semicircle_moments(8), semicircle_moments(8)),
        "bernoulli_half": (bernoulli_moments(8, F(1, 2), F(1)), bernoulli_moments(8, F(1, 2), F(1))),
        "asym": (semicircle_moments(8, F(1), F(1)), free_poisson_moments(8)),
    }
    sn = {}
    for name, (ma, mb) in inputs.items():
        for m, n in ((2, 3), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)):
            sn[f"{name} m={m} n={n}"] = str(exact_sn_coefficient(m, n, ma, mb))
    out["sn"] = sn
    json.dump(out, sys.stdout, indent=1)
