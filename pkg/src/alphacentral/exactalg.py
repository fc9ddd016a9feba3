"""Exact linear algebra over integers and rationals.

Two independent routes are kept deliberately separate:

- charpoly_exact: Faddeev-LeVerrier run modulo a batch of word-size primes
  and reconstructed by CRT. The prime budget comes from a Hadamard-style
  bound on the coefficients, so the result is exact, not heuristic.
- det_exact: plain fraction-preserving Gaussian elimination. Slower, used
  as the cross-check oracle for the charpoly route.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n):
    # deterministic Miller-Rabin for n < 3.3e24
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes_below(limit, count):
    out = []
    p = limit - 1
    while len(out) < count:
        if _is_prime(p):
            out.append(p)
        p -= 2 if p % 2 else 1
        if p < 3:
            raise ValueError("prime supply exhausted")
    return out


def _crt_symmetric(residues, primes):
    """Combine residues into the integer of least absolute value."""
    x, prod = 0, 1
    for r, p in zip(residues, primes):
        h = (r - x) * pow(prod, -1, p) % p
        x += prod * h
        prod *= p
    if 2 * x > prod:
        x -= prod
    return x


def charpoly_int(M):
    """Exact characteristic polynomial of a square integer matrix.

    Parameters
    ----------
    M : sequence of sequences of int

    Returns
    -------
    list of int
        Monic coefficients in ascending degree order, length n+1.
    """
    n = len(M)
    if n == 0:
        return [1]
    rows = [[int(x) for x in row] for row in M]
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    bigb = max((abs(x) for r in rows for x in r), default=0)

    # coefficient c_k is a sum of C(n,k) k x k minors, each Hadamard-bounded
    # by (sqrt(k) * B)^k
    bits = n + n * (0.5 * math.log2(max(n, 2)) + math.log2(max(bigb, 2))) + 16
    # primes must satisfy n * (p-1)^2 < 2^63 for the int64 matmul
    pmax = int(math.isqrt((2 ** 63 - 1) // max(n, 1)))
    pmax = min(pmax, 2 ** 30)
    nprimes = int(bits // math.log2(pmax)) + 2
    primes = _primes_below(pmax, nprimes)

    K = len(primes)
    parr = np.array(primes, dtype=np.int64).reshape(K, 1, 1)
    A = np.empty((K, n, n), dtype=np.int64)
    for k, p in enumerate(primes):
        A[k] = np.array([[x % p for x in row] for row in rows], dtype=np.int64)

    # Faddeev-LeVerrier: M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A(M_k + c_k I)
    coeffs_mod = np.zeros((K, n + 1), dtype=np.int64)
    inv = {j: np.array([pow(j, -1, p) for p in primes], dtype=np.int64)
           for j in range(1, n + 1)}
    pflat = np.array(primes, dtype=np.int64)
    Mk = A.copy()
    idx = np.arange(n)
    for j in range(1, n + 1):
        tr = np.einsum("kii->k", Mk) % pflat
        cj = (-tr % pflat) * inv[j] % pflat
        coeffs_mod[:, j] = cj
        if j < n:
            B = Mk.copy()
            B[:, idx, idx] = (B[:, idx, idx] + cj[:, None]) % pflat[:, None]
            Mk = (A @ B) % parr

    # charpoly = x^n + c_1 x^{n-1} + ... + c_n
    out = [0] * (n + 1)
    out[n] = 1
    for j in range(1, n + 1):
        out[n - j] = _crt_symmetric([int(c) for c in coeffs_mod[:, j]], primes)
    return out


def charpoly_exact(M):
    """Exact characteristic polynomial of a square matrix with Fraction entries.

    Scales by the lcm of denominators, runs the integer engine, and maps the
    coefficients back: if p is the charpoly of c*M then the charpoly of M has
    coefficients p_k * c^(k-n).

    Returns ascending Fraction coefficients, monic.
    """
    n = len(M)
    rows = [[Fraction(x) for x in row] for row in M]
    c = 1
    for row in rows:
        for x in row:
            c = c * x.denominator // math.gcd(c, x.denominator)
    scaled = [[x * c for x in row] for row in rows]
    assert all(x.denominator == 1 for row in scaled for x in row)
    ints = charpoly_int([[x.numerator for x in row] for row in scaled])
    return [Fraction(ints[k], c ** (n - k)) for k in range(n + 1)]


def det_exact(M):
    """Determinant by exact Gaussian elimination over Fractions.

    Independent of the charpoly route; used to cross-check it.
    """
    rows = [[Fraction(x) for x in row] for row in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    sign = 1
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            sign = -sign
        pivot = rows[col][col]
        det *= pivot
        for r in range(col + 1, n):
            factor = rows[r][col] / pivot
            if factor == 0:
                continue
            rows[r][col] = Fraction(0)
            for cix in range(col + 1, n):
                rows[r][cix] -= factor * rows[col][cix]
    return sign * det
