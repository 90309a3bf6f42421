"""Independent oracles used to freeze expected values in the C++ test suites.

Cycles: distance to uniform via numpy FFT of the nontrivial-mode vector.
Hypercubes: distance via Krawtchouk polynomials (closed form by Hamming weight).
Thresholds: monotone bisection over these distance functions, confirmed by a
forward scan where the scan is short.
"""
import math
from fractions import Fraction
import numpy as np


def cycle_eigs(n, gens):
    r = len(gens)
    k = np.arange(n)
    lam = np.ones(n)
    acc = np.zeros(n)
    for a in gens:
        acc += np.cos(2 * np.pi * ((k * a) % n) / n)
    lam = (1 + 2 * acc) / (2 * r + 1)
    lam[0] = 1.0
    return lam


def cycle_distance(n, gens, t):
    lam = cycle_eigs(n, gens)
    c = lam ** t
    c[0] = 0.0
    dev = np.real(np.fft.ifft(c))  # (1/n) sum_k c_k e^{2 pi i k x / n}
    return float(np.sum(np.abs(dev)))


def hypercube_distance(d, t):
    n = 2 ** d
    total = 0.0
    for j in range(d + 1):  # weight of x
        dev = 0.0
        for w in range(1, d + 1):  # weight of k
            lam = (1 + 2 * (d - 2 * w)) / (2 * d + 1)
            # Krawtchouk K_w(j) = sum_s (-1)^s C(j,s) C(d-j, w-s)
            kw = sum((-1) ** s * math.comb(j, s) * math.comb(d - j, w - s) for s in range(0, w + 1))
            dev += lam ** t * kw
        dev /= n
        total += math.comb(d, j) * abs(dev)
    return total


def threshold(dist, level, cap):
    if dist(0) < level:
        raise ValueError("undefined")
    hi = 1
    while dist(hi) >= level:
        hi *= 2
        if hi > cap:
            raise ValueError("cap")
    lo = hi // 2  # dist(lo) >= level (or lo == 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if dist(mid) >= level:
            lo = mid
        else:
            hi = mid
    return lo


def ratio(dist, eps, cap):
    a = threshold(dist, eps, cap)
    b = threshold(dist, 1 - eps, cap)
    return a, b, (a / b if b >= 1 else None)


if __name__ == "__main__":
    eps = 0.05
    print("# cycle_single family, eps=0.05: n, t_eps, t_1meps, ratio, lambda_m, t_half, log_product")
    for p in range(6, 13):
        n = 2 ** p
        f = lambda t, n=n: cycle_distance(n, [1], t)
        a, b, q = ratio(f, eps, 10 * n * n)
        lam = cycle_eigs(n, [1])[1]
        th = threshold(f, 0.5, 10 * n * n)
        print(n, a, b, repr(q), repr(lam), th, repr(-math.log(lam) * th))
    print("# hypercube family: d, t_eps, t_1meps, ratio")
    for d in range(4, 12):
        f = lambda t, d=d: hypercube_distance(d, t)
        a, b, q = ratio(f, eps, 10 ** 6)
        print(d, a, b, repr(q))
    print("# Z/64 {1} cutoff ratio")
    f = lambda t: cycle_distance(64, [1], t)
    print(ratio(f, eps, 10 ** 6))
    print("# Z/8 {1} peres: t_half, lam_m")
    f = lambda t: cycle_distance(8, [1], t)
    th = threshold(f, 0.5, 10 ** 6)
    lam = cycle_eigs(8, [1])[1]
    print(th, repr((1 - lam) * th), repr(-math.log(lam) * th))
    print("# Z/8 {1} curve first 20")
    print([repr(cycle_distance(8, [1], t)) for t in range(20)])
    print("# Z/25 {1,7} short mode (exact rational linf)")
    best = None
    for k in range(1, 25):
        linf = max(abs(Fraction(k * a, 25) - math.floor(Fraction(k * a, 25) + Fraction(1, 2)) ) for a in (1, 7))
        # exact <x>: x - ceil(x - 1/2)
        def fr(x):
            return x - math.ceil(x - Fraction(1, 2))
        linf = max(abs(fr(Fraction(k * a, 25))) for a in (1, 7))
        if best is None or linf < best[1]:
            best = (k, linf)
    print(best, float(best[1]))
    print("# Z/5 {1,2} mu")
    mu = min(math.hypot(*(float(Fraction(k * a, 5) - math.ceil(Fraction(k * a, 5) - Fraction(1, 2))) for a in (1, 2))) for k in range(1, 5))
    print(repr(mu))
    print("# theta Z c=1", repr(sum(math.exp(-m * m) for m in range(-10, 11))))
