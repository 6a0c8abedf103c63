"""Reference values frozen into the C++ tests.

Run with: python3 tests/oracle/derive_values.py

Discrete sampler distributions are obtained by exact rational enumeration
of every path through the two algorithms (no floating point); continuous
quantities use mpmath at 30 digits.
"""
from fractions import Fraction as F

import mpmath as mp
from scipy import stats

mp.mp.dps = 30


def algorithm_one(p, q):
    """Exact output law when I[p] >= I[q]."""
    p, q = [F(x) for x in p], [F(x) for x in q]
    ip, iq = sum(p), sum(q)
    excess = [max(a - b, 0) for a, b in zip(p, q)]
    e = sum(excess)
    out = [F(0)] * len(p)
    direct = min(ip - iq, e) / ip
    for z in range(len(p)):
        if e:
            out[z] += direct * excess[z] / e
    for x in range(len(p)):
        if q[x] == 0:
            continue
        reach = (1 - direct) * q[x] / iq
        if p[x] > q[x]:
            out[x] += reach
        else:
            out[x] += reach * p[x] / q[x]
            rejected = reach * (1 - p[x] / q[x])
            for z in range(len(p)):
                if rejected:
                    out[z] += rejected * excess[z] / e
    return out


def algorithm_two(p, q):
    """Exact output law when I[p] < I[q]: one cycle, then renormalize."""
    p, q = [F(x) for x in p], [F(x) for x in q]
    ip, iq = sum(p), sum(q)
    excess = [max(a - b, 0) for a, b in zip(p, q)]
    e = sum(excess)
    pa = e / (iq - ip + e) if e else F(0)
    ret = [F(0)] * len(p)
    for x in range(len(p)):
        if q[x] == 0:
            continue
        reach = q[x] / iq
        if p[x] > q[x]:
            ret[x] += reach
        else:
            ret[x] += reach * p[x] / q[x]
            rejected = reach * (1 - p[x] / q[x])
            for z in range(len(p)):
                if e:
                    ret[z] += rejected * pa * excess[z] / e
    stop = sum(ret)
    return [r / stop for r in ret], pa, stop


def expected_g(n, alpha, squares):
    alpha = F(alpha)
    if squares:
        return (alpha + 1) / (alpha + 3) * (n - 2) + F(2, 3)
    return (alpha + 1) / (alpha + 2) * (n - 2) + 1


def main():
    print("algorithm_one p=[3,1,2] q=[1,2,2]:", algorithm_one([3, 1, 2], [1, 2, 2]))
    print("algorithm_one p=[4,0] q=[1,0]:", algorithm_one([4, 0], [1, 0]))
    dist, pa, stop = algorithm_two([F(5, 2), F(1, 2)], [2, 2])
    print("algorithm_two p=[2.5,0.5] q=[2,2]:", dist, "p_a =", pa, "per-cycle stop =", stop)
    dist, pa, stop = algorithm_two([1, 2], [2, 2])
    print("algorithm_two p=[1,2] q=[2,2]:", dist, "p_a =", pa, "mean proposals =", 1 / stop)
    print("algorithm_two p=[1,1,1] q=[2,2,2] mean proposals:", 1 / algorithm_two([1, 1, 1], [2, 2, 2])[2])

    for n, squares in [(100, False), (100, True), (10_000, False), (2, False)]:
        v = expected_g(n, F(1, 2), squares)
        print(f"expected_g N={n} {'sum_sq' if squares else 'sum'}: {v} = {float(v)!r}")

    print("excess_quintic_from_uniform(0.5):", mp.nstr(1 - mp.mpf("0.5") ** mp.mpf("1.25"), 17))
    dens = lambda x: x ** mp.mpf(-0.5) + (1 - x) ** mp.mpf(-0.2)
    mass = mp.quad(dens, [0, 1])
    print("example1 mass:", mp.nstr(mass, 17))
    print("example1 mean:", mp.nstr(mp.quad(lambda x: x * dens(x), [0, 1]) / mass, 17))
    print("example1 E[x^2]:", mp.nstr(mp.quad(lambda x: x * x * dens(x), [0, 1]) / mass, 17))
    print("example1 cdf(0.25):", mp.nstr((2 * mp.sqrt(0.25) + mp.mpf(5) / 4 * (1 - mp.mpf(0.75) ** mp.mpf(0.8))) / mp.mpf(3.25), 17))

    print("ssa ar a=[9,1] mean proposals:", F(2) * 9 / 10)
    print("isomerization mean X_A(1):", mp.nstr(100 * mp.e ** -1, 17))

    ks = lambda lam: 2 * mp.nsum(lambda k: (-1) ** (k - 1) * mp.e ** (-2 * k * k * lam * lam), [1, mp.inf])
    for lam in (0.5, 1.0, 1.36):
        print(f"kolmogorov Q({lam}):", mp.nstr(ks(lam), 17))
    obs, probs = [30, 50, 20], [0.25, 0.5, 0.25]
    chi = sum((o - 100 * pr) ** 2 / (100 * pr) for o, pr in zip(obs, probs))
    print("chi-square [30,50,20] vs [.25,.5,.25]:", chi, stats.chi2.sf(chi, 2))


if __name__ == "__main__":
    main()
