"""The degree/adjacency interpolation family A_alpha = alpha*D + (1-alpha)*A,
its spectra, characteristic polynomials, coronals, Hoffman polynomials, and
energy.

Two scalar modes run through this module. Float mode (numpy float64) backs
every oracle comparison; exact mode (Fraction entries, alpha passed as a
Fraction) backs cospectrality certificates where float equality would prove
nothing. Functions dispatch on the dtype of their inputs.

Numerical contracts (absolute unless noted):

- TOL_EIG:      relative eigensolver residual, ||M V - V L|| <= TOL_EIG*n*||M||
- TOL_NUM:      value comparisons against closed forms
- CLUSTER_TOL:  adjacent-gap threshold when grouping eigenvalues into
                (value, multiplicity) pairs
- TOL_HOFFMAN:  max-norm of P(A) - J for the Hoffman polynomial
- TOL_SING:     minimum allowed distance from a resolvent evaluation point
                to the spectrum
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exactalg
from .errors import InternalCheckError, ParameterError, PreconditionError, SingularityError
from .graphs import adjacency_matrix, is_connected, regularity

TOL_EIG = 1e-12
TOL_NUM = 1e-9
CLUSTER_TOL = 1e-7
TOL_HOFFMAN = 1e-8
TOL_SING = 1e-8


# ---------------------------------------------------------------------------
# domain types

@dataclass(frozen=True)
class Spectrum:
    """All real eigenvalues, descending, with a clustered multiplicity view.

    values keeps the raw solver output; groups is the clustered view used
    to compare against closed-form multiplicity claims.
    """

    values: tuple
    groups: tuple

    @classmethod
    def from_values(cls, values, cluster_tol=CLUSTER_TOL):
        vals = sorted((float(v) for v in values), reverse=True)
        groups = []
        for v in vals:
            if groups and groups[-1][0] - v < cluster_tol:
                rep, mult = groups[-1]
                groups[-1] = (rep, mult + 1)
            else:
                groups.append((v, 1))
        return cls(tuple(vals), tuple(groups))

    @property
    def n(self):
        return len(self.values)

    def to_json(self):
        return {"values": list(self.values),
                "groups": [[v, m] for v, m in self.groups]}

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial, coefficients in ascending degree order.

    Coefficients are floats or Fractions; mixing is not supported. The zero
    polynomial is the empty/zero tuple; otherwise the leading coefficient
    is nonzero.
    """

    coeffs: tuple

    @classmethod
    def of(cls, coeffs):
        cs = list(coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0 * x if not self.coeffs else self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial.of(out)
        return Polynomial.of([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __add__(self, other):
        a, b = list(self.coeffs), list(other.coeffs)
        if len(a) < len(b):
            a, b = b, a
        for i, c in enumerate(b):
            a[i] += c
        return Polynomial.of(a)

    def __sub__(self, other):
        return self + (-1) * other

    def as_float(self):
        return Polynomial.of([float(c) for c in self.coeffs])

    def to_json(self):
        cs = [str(c) if isinstance(c, Fraction) else float(c) for c in self.coeffs]
        return {"coeffs": cs}


@dataclass(frozen=True)
class RationalFunction:
    """Ratio of two polynomials; the carrier for matrix coronals."""

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self):
        if all(c == 0 for c in self.denominator.coeffs):
            raise ParameterError("rational function with zero denominator")

    def __call__(self, x):
        return self.numerator(x) / self.denominator(x)


# ---------------------------------------------------------------------------
# the matrix family

def a_alpha_matrix(G, alpha):
    """alpha*D(G) + (1-alpha)*A(G).

    Row i sums to degree d_i for every alpha; the trace is 2*m*alpha.
    A Fraction alpha selects exact mode and yields an object array of
    Fractions; a float yields float64.
    """
    _check_alpha(alpha, allow_one=True)
    deg = G.degree_sequence
    if isinstance(alpha, Fraction):
        M = np.empty((G.n, G.n), dtype=object)
        M[:] = Fraction(0)
        one = Fraction(1)
        for i in range(G.n):
            M[i, i] = alpha * deg[i]
        for i, j in G.edges:
            M[i, j] = M[j, i] = one - alpha
        return M
    A = adjacency_matrix(G)
    return alpha * np.diag(np.asarray(deg, dtype=float)) + (1.0 - alpha) * A


def _check_alpha(alpha, allow_one):
    hi_ok = alpha <= 1 if allow_one else alpha < 1
    if not (0 <= alpha and hi_ok):
        span = "[0, 1]" if allow_one else "[0, 1)"
        raise ParameterError(f"alpha must lie in {span}, got {alpha}")


def _require_symmetric(M):
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ParameterError(f"expected a square matrix, got shape {M.shape}")
    if not (M == M.T).all():
        raise ParameterError("matrix is not exactly symmetric")
    return M


def _as_float_matrix(M):
    M = np.asarray(M)
    if M.dtype == object:
        return np.array([[float(x) for x in row] for row in M])
    return M.astype(float, copy=False)


# ---------------------------------------------------------------------------
# eigensolving

def eigenvalues_sym(M, cluster_tol=CLUSTER_TOL):
    """All eigenvalues of a symmetric matrix, descending, as a Spectrum.

    Backed by numpy's symmetric eigensolver. The backward-stability
    contract ||M V - V L||_F <= TOL_EIG * n * ||M||_2 is checked on every
    call and raising InternalCheckError on violation.
    """
    M = _require_symmetric(M)
    Mf = _as_float_matrix(M)
    n = Mf.shape[0]
    w, V = np.linalg.eigh(Mf)
    scale = max(abs(w[0]), abs(w[-1]), 1e-300)
    resid = np.linalg.norm(Mf @ V - V * w)
    if resid > TOL_EIG * n * scale:
        raise InternalCheckError(
            f"eigensolver residual {resid:.3e} exceeds {TOL_EIG:.0e} * n * ||M||")
    return Spectrum.from_values(w[::-1], cluster_tol)


def char_poly(M):
    """Characteristic polynomial det(lambda*I - M), monic, ascending coeffs.

    Exact mode (object/Fraction entries) runs the CRT Faddeev-LeVerrier
    engine and returns Fraction coefficients. Float mode multiplies out the
    eigenvalues of the (symmetric) input.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ParameterError(f"expected a square matrix, got shape {M.shape}")
    if M.dtype == object or np.issubdtype(M.dtype, np.integer):
        return Polynomial.of(exactalg.charpoly_exact(M.tolist()))
    vals = eigenvalues_sym(M).values
    coeffs = np.poly(np.array(vals))  # descending, monic
    return Polynomial.of(list(coeffs[::-1]))


# ---------------------------------------------------------------------------
# coronals: Gamma_M(x) = sum of entries of (xI - M)^{-1}

def coronal_eval(M, x):
    """Evaluate the coronal of a symmetric matrix at x by one linear solve.

    Raises SingularityError when x is within TOL_SING of an eigenvalue.
    """
    M = _require_symmetric(M)
    Mf = _as_float_matrix(M)
    w = np.linalg.eigvalsh(Mf)
    gap = np.min(np.abs(w - float(x)))
    if gap < TOL_SING:
        raise SingularityError(
            f"x={x} is within {gap:.2e} of the spectrum (tolerance {TOL_SING:.0e})")
    n = Mf.shape[0]
    ones = np.ones(n)
    u = np.linalg.solve(float(x) * np.eye(n) - Mf, ones)
    return float(ones @ u)


def coronal_regular(n, a):
    """Coronal of any n x n matrix with constant row sum a: n / (x - a).

    For an r-regular graph both A and A_alpha have row sums r, so this is
    their coronal with a = r.
    """
    if n < 1:
        raise ParameterError(f"order must be >= 1, got {n}")
    return RationalFunction(Polynomial.of([n]), Polynomial.of([-a, 1]))


def coronal_kpq_alpha(p, q, alpha):
    """Closed-form coronal of A_alpha(K_{p,q}).

    ((p+q)x - alpha(p+q)^2 + 2pq) / (x^2 - alpha(p+q)x + (2 alpha - 1)pq).
    At alpha = 0 this reduces to the adjacency coronal of K_{p,q}.
    """
    if p < 1 or q < 1:
        raise ParameterError(f"need p, q >= 1, got ({p}, {q})")
    _check_alpha(alpha, allow_one=True)
    s = p + q
    num = Polynomial.of([-alpha * s * s + 2 * p * q, s])
    den = Polynomial.of([(2 * alpha - 1) * p * q, -alpha * s, 1])
    return RationalFunction(num, den)


# ---------------------------------------------------------------------------
# Hoffman polynomial

def hoffman_poly(G):
    """Polynomial P with P(A(G)) = J for a connected regular graph.

    Built from the clustered distinct adjacency eigenvalues r = l_1 > l_2 >
    ... > l_t as n * prod(x - l_i) / prod(r - l_i) over i >= 2. The defining
    identity is verified to TOL_HOFFMAN before returning.
    """
    r = regularity(G)
    if r is None:
        raise PreconditionError("Hoffman polynomial needs a regular graph")
    if not is_connected(G):
        raise PreconditionError("Hoffman polynomial needs a connected graph")
    A = adjacency_matrix(G)
    groups = eigenvalues_sym(A).groups
    rest = [v for v, _ in groups[1:]]
    poly = Polynomial.of([1.0])
    denom = 1.0
    for li in rest:
        poly = poly * Polynomial.of([-li, 1.0])
        denom *= (r - li)
    poly = (G.n / denom) * poly
    PA = _poly_on_matrix(poly, A)
    dev = np.max(np.abs(PA - np.ones((G.n, G.n))))
    if dev > TOL_HOFFMAN:
        raise InternalCheckError(f"||P(A) - J||_max = {dev:.3e} exceeds {TOL_HOFFMAN:.0e}")
    return poly


def _poly_on_matrix(poly, A):
    n = A.shape[0]
    acc = np.zeros((n, n))
    for c in reversed(poly.coeffs):
        acc = acc @ A + float(c) * np.eye(n)
    return acc


# ---------------------------------------------------------------------------
# energy

def a_alpha_energy(G, alpha):
    """Sum of |eigenvalue - 2*alpha*m/n| over the spectrum of A_alpha(G).

    Defined for alpha in [0, 1); reduces to (1-alpha) times the adjacency
    energy on regular graphs.
    """
    _check_alpha(alpha, allow_one=False)
    spec = eigenvalues_sym(a_alpha_matrix(G, float(alpha)))
    shift = 2.0 * float(alpha) * G.m / G.n
    return float(sum(abs(v - shift) for v in spec.values))
