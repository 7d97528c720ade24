"""Random generators and small independent oracles shared by the tests."""
from __future__ import annotations

import random
from itertools import permutations

from cliffordfactor.algebra import DH, H, S
from cliffordfactor.polynomial import AlgebraPolynomial, RealPolynomial
from cliffordfactor.rational import rat


def rand_rat(rng: random.Random, lo: int = -5, hi: int = 5, den: int = 1):
    d = rng.randint(1, den)
    return rat(rng.randint(lo * d, hi * d)) / d


def rand_element(rng: random.Random, alg, lo: int = -5, hi: int = 5, den: int = 1):
    return alg.element([rand_rat(rng, lo, hi, den) for _ in range(alg.dim)])


def rand_poly(rng: random.Random, alg, degree: int, monic: bool = False):
    cs = [rand_element(rng, alg) for _ in range(degree + 1)]
    if monic:
        cs[-1] = alg.one
    return AlgebraPolynomial(cs, alg)


def rand_study_dh(rng: random.Random, lo: int = -4, hi: int = 4):
    """A dual quaternion ``h`` with ``nu(t - h)`` real (Study condition on the vector part)."""
    while True:
        p = [rat(rng.randint(lo, hi)) for _ in range(4)]
        if any(p[1:]):
            break
    w = [rat(rng.randint(lo, hi)) for _ in range(3)]
    v = p[1:]
    # dual vector orthogonal to the primal vector: cross product with a random vector
    d = (v[1] * w[2] - v[2] * w[1], v[2] * w[0] - v[0] * w[2], v[0] * w[1] - v[1] * w[0])
    # the dual scalar part must vanish as well, otherwise nu picks up 2 eps (t - p0) d0
    return DH.element(p + [rat(0)] + list(d))


# --------------------------------------------------------------------------
# oracles


def hamilton_matrix(q):
    """Left-multiplication matrix of a Hamilton quaternion (ij = k), written out by hand."""
    a, b, c, d = q.c
    return [
        [a, -b, -c, -d],
        [b, a, -d, c],
        [c, d, a, -b],
        [d, -c, b, a],
    ]


def matvec(M, v):
    return tuple(sum((M[i][j] * v[j] for j in range(len(v))), rat(0)) for i in range(len(M)))


def sign_of_sort(seq):
    """Parity of the permutation sorting ``seq`` (bubble sort, counting swaps)."""
    seq = list(seq)
    swaps = 0
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                swaps += 1
    return -1 if swaps % 2 else 1


def blade_product_oracle(a: tuple, b: tuple, squares: dict):
    """Product of basis blades given as index tuples: concatenate, sort, contract."""
    word = list(a) + list(b)
    sign = sign_of_sort(word)
    word.sort()
    out = []
    i = 0
    while i < len(word):
        if i + 1 < len(word) and word[i] == word[i + 1]:
            sign *= squares[word[i]]
            i += 2
        else:
            out.append(word[i])
            i += 1
    return sign, tuple(out)


def count_orderings(n: int) -> int:
    return len(list(permutations(range(n))))


def real_poly(*coeffs) -> RealPolynomial:
    """Coefficients from the top degree down, like ``real_poly(1, -3, 2)`` for t^2-3t+2."""
    return RealPolynomial([rat(c) for c in reversed(coeffs)])
