#!/usr/bin/env python3
# Independent numpy oracle for the distance sweep. Builds the Haar and
# subset moment operators straight from their defining sums and prints
# (d, s, k, lhs, bound, ratio) so the frozen ratio ceiling in the acceptance
# suite can be re-derived.
import itertools
import math
import sys

import numpy as np


def haar(d, k):
    n = d ** k
    m = np.zeros((n, n))
    norm = math.comb(d + k - 1, k) * math.factorial(k)
    for i in itertools.product(range(d), repeat=k):
        a = np.ravel_multi_index(i, (d,) * k)
        for p in itertools.permutations(range(k)):
            j = tuple(i[x] for x in p)
            m[a, np.ravel_multi_index(j, (d,) * k)] += 1.0 / norm
    return m


def subset(d, s, k):
    n = d ** k
    m = np.zeros((n, n))
    subs = list(itertools.combinations(range(d), s))
    for S in subs:
        v = np.zeros(d)
        v[list(S)] = 1.0 / math.sqrt(s)
        w = v
        for _ in range(k - 1):
            w = np.kron(w, v)
        m += np.outer(w, w)
    return m / len(subs)


def tn(m):
    return np.abs(np.linalg.eigvalsh(m)).sum()


def main():
    ds = [int(x) for x in sys.argv[1].split(",")] if len(sys.argv) > 1 else [6, 8, 10, 12]
    ks = [int(x) for x in sys.argv[2].split(",")] if len(sys.argv) > 2 else [1, 2, 3]
    worst = 0.0
    for d in ds:
        for k in ks:
            psi = haar(d, k)
            for s in range(k, d):
                lhs = tn(psi - subset(d, s, k))
                bound = k * k / d + k / math.sqrt(s) + s * k / d
                worst = max(worst, lhs / bound)
                print(f"{d},{s},{k},{lhs:.12f},{bound:.12f},{lhs / bound:.12f}", flush=True)
    print(f"max_ratio={worst:.12f}")


if __name__ == "__main__":
    main()
