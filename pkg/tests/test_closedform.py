import random
from fractions import Fraction

import numpy as np
import pytest

from alphacentral import (Graph, InternalCheckError, PreconditionError,
                          a_alpha_matrix, central_graph, central_vertex_join,
                          char_poly, charpoly_central_regular, charpoly_cvjoin,
                          eigenvalues_sym, generate, quadratic_roots,
                          solve_poly_real, spectrum_central_regular,
                          spectrum_cvjoin_kpq, spectrum_cvjoin_regular)
from alphacentral.closedform import TOL_MATCH
from alphacentral.exactalg import det_exact
from alphacentral.spectra import Polynomial

PAW = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)], "paw")


def _oracle(graph, a):
    return eigenvalues_sym(a_alpha_matrix(graph, a))


def _max_dev(spec1, spec2):
    assert spec1.n == spec2.n
    return max(abs(x - y) for x, y in zip(spec1.values, spec2.values))


# --- root finding

def test_quadratic_roots_simple():
    assert quadratic_roots(Polynomial.of([-1.0, 0.0, 1.0])) == [1.0, -1.0]


def test_quadratic_roots_wide_scale():
    # (x - 1e6)(x - 1e-6): naive formula loses the small root
    p = Polynomial.of([1.0, -(1e6 + 1e-6), 1.0])
    big, small = quadratic_roots(p)
    assert big == pytest.approx(1e6, rel=1e-12)
    assert small == pytest.approx(1e-6, rel=1e-9)


def test_solve_poly_real_examples():
    assert solve_poly_real(Polynomial.of([-1.0, 0.0, 1.0])) == pytest.approx([1.0, -1.0])
    roots = solve_poly_real(Polynomial.of([-6.0, 11.0, -6.0, 1.0]))
    assert roots == pytest.approx([3.0, 2.0, 1.0], abs=1e-9)


def test_solve_poly_real_multiple_root():
    # (x - 2)(x - 5)^3: companion roots alone are only good to ~1e-5 here
    p = Polynomial.of([-250.0, 275.0, -105.0, 17.0, -1.0]) * -1.0
    roots = solve_poly_real(p)
    assert roots == pytest.approx([5.0, 5.0, 5.0, 2.0], abs=1e-10)


def test_solve_poly_real_rejects_complex():
    with pytest.raises(InternalCheckError):
        solve_poly_real(Polynomial.of([1.0, 0.0, 1.0]))  # x^2 + 1


# --- central graph closed form

def test_central_k3_alpha0_factors():
    fac = charpoly_central_regular(generate("complete", [3]), 0.0)
    assert fac.linear_mult == 0 and fac.order == 6
    by_label = {f.label: f for f in fac.factors}
    assert np.allclose(by_label["principal"].poly.coeffs, [-4, 0, 1], atol=1e-12)
    eig = [f for f in fac.factors if f.label.startswith("base-eigenvalue")]
    assert len(eig) == 1 and eig[0].mult == 2
    assert np.allclose(eig[0].poly.coeffs, [-1, 0, 1], atol=1e-9)


def test_central_k3_alpha1_all_two():
    spec = spectrum_central_regular(generate("complete", [3]), 1.0)
    assert spec.n == 6
    assert all(abs(v - 2.0) < 1e-10 for v in spec.values)


def test_central_petersen_leading_exponent():
    for a in (0.0, 0.5):
        fac = charpoly_central_regular(generate("petersen"), a)
        assert fac.linear_mult == 5  # m - n = n(r-2)/2 = 10/2
        assert fac.linear_root == 2 * a


@pytest.mark.parametrize("family,params", [("cycle", [4]), ("petersen", [])])
@pytest.mark.parametrize("a", [0.0, 0.25, 0.5, 1.0])
def test_central_spectrum_matches_oracle(family, params, a):
    g = generate(family, params)
    closed = spectrum_central_regular(g, a)
    oracle = _oracle(central_graph(g), a)
    assert _max_dev(closed, oracle) <= TOL_MATCH


def test_central_preconditions():
    with pytest.raises(PreconditionError, match="r >= 2"):
        spectrum_central_regular(generate("complete", [2]), 0.5)
    with pytest.raises(PreconditionError, match="regular"):
        spectrum_central_regular(generate("complete_bipartite", [2, 3]), 0.5)
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2),
                                         (3, 4), (4, 5), (3, 5)])
    with pytest.raises(PreconditionError, match="connected"):
        spectrum_central_regular(two_triangles, 0.5)
    # the error directs callers to the oracle path
    with pytest.raises(PreconditionError, match="eigenvalues_sym"):
        spectrum_central_regular(generate("complete", [2]), 0.5)


def test_central_alpha_one_is_degree_multiset():
    g = generate("cycle", [5])
    spec = spectrum_central_regular(g, 1.0)
    degrees = sorted(central_graph(g).degree_sequence, reverse=True)
    assert np.allclose(spec.values, degrees, atol=1e-9)


# --- join closed form

def test_cvjoin_k3_k2_degree_and_point_values():
    # full polynomial of degree 8; evaluated against the exact elimination
    # determinant of (xI - A) for the explicitly built join
    fac = charpoly_cvjoin(generate("complete", [3]), generate("complete", [2]), 0.0)
    assert fac.order == 8
    j = central_vertex_join(generate("complete", [3]), generate("complete", [2]))
    A = [[1 if j.has_edge(i, k) else 0 for k in range(j.n)] for i in range(j.n)]
    for x in (0, 1, 3):
        det = det_exact([[x * (i == k) - A[i][k] for k in range(j.n)]
                         for i in range(j.n)])
        assert fac.evaluate(float(x)) == pytest.approx(float(det), rel=1e-9, abs=1e-9)


def test_cvjoin_cubic_roots_cover_oracle_remainder():
    # at alpha=0 the cubic must account for the oracle eigenvalues that the
    # linear and quadratic factors do not
    g1, g2 = generate("complete", [3]), generate("complete", [2])
    fac = charpoly_cvjoin(g1, g2, 0.0)
    cubic = next(f for f in fac.factors if f.label == "coronal")
    roots = sorted(solve_poly_real(cubic.poly), reverse=True)
    oracle = list(_oracle(central_vertex_join(g1, g2), 0.0).values)
    accounted = sorted([-1.0, 1.0, 1.0, -1.0, -1.0])  # g2 shift + quadratics
    remainder = list(oracle)
    for v in accounted:
        remainder.remove(min(remainder, key=lambda w: abs(w - v)))
    assert np.allclose(sorted(roots), sorted(remainder), atol=1e-8)


def test_cvjoin_petersen_k23_via_graph_argument():
    # a non-regular complete bipartite G2 reroutes to the quartic form
    g1 = generate("petersen")
    fac = charpoly_cvjoin(g1, generate("complete_bipartite", [2, 3]), 0.5)
    assert fac.order == 30
    spec = spectrum_cvjoin_kpq(g1, 2, 3, 0.5)
    oracle = _oracle(central_vertex_join(g1, generate("complete_bipartite", [2, 3])), 0.5)
    assert _max_dev(spec, oracle) <= TOL_MATCH


def test_cvjoin_leading_exponent_petersen():
    for second in (generate("complete", [2]), (2, 3)):
        fac = charpoly_cvjoin(generate("petersen"), second, 0.25)
        assert fac.linear_mult == 5  # m1 - n1


@pytest.mark.parametrize("a", [0.0, 0.5, 1.0])
@pytest.mark.parametrize("g2family,g2params", [
    ("complete", [2]), ("complete", [3]), ("cycle", [5]),
])
def test_cvjoin_regular_matches_oracle(a, g2family, g2params):
    g1 = generate("cycle", [6])
    g2 = generate(g2family, g2params)
    closed = spectrum_cvjoin_regular(g1, g2, a)
    oracle = _oracle(central_vertex_join(g1, g2), a)
    assert closed.n == oracle.n == g1.n + g1.m + g2.n
    assert _max_dev(closed, oracle) <= TOL_MATCH


def test_cvjoin_c4_k3_zero_multiplicity_subdivision_factor():
    # C4 has m = n, so 2 alpha never appears from the subdivision factor
    fac = charpoly_cvjoin(generate("cycle", [4]), generate("complete", [3]), 0.75)
    assert fac.linear_mult == 0


@pytest.mark.parametrize("p,q", [(1, 1), (2, 3), (3, 3)])
@pytest.mark.parametrize("a", [0.0, 0.5, 1.0])
def test_cvjoin_kpq_matches_oracle(p, q, a):
    g1 = generate("cycle", [4])
    closed = spectrum_cvjoin_kpq(g1, p, q, a)
    built = central_vertex_join(g1, generate("complete_bipartite", [p, q]))
    oracle = _oracle(built, a)
    assert closed.n == g1.n + g1.m + p + q
    assert _max_dev(closed, oracle) <= TOL_MATCH


def test_cvjoin_kpq_k3_case():
    # K3 joined with K_{2,3}: 3 + 3 + 5 = 11 eigenvalues
    g1 = generate("complete", [3])
    closed = spectrum_cvjoin_kpq(g1, 2, 3, 0.0)
    built = central_vertex_join(g1, generate("complete_bipartite", [2, 3]))
    assert closed.n == built.n == 11
    assert _max_dev(closed, _oracle(built, 0.0)) <= TOL_MATCH


def test_cvjoin_kpq_coronal_contributes_four_roots():
    fac = charpoly_cvjoin(generate("petersen"), (2, 3), 0.25)
    coronal = next(f for f in fac.factors if f.label == "coronal")
    assert coronal.degree == 4 and coronal.mult == 1


def test_cvjoin_petersen_1_1_no_part_factors():
    # q-1 = p-1 = 0: the shifted part eigenvalues are absent
    fac = charpoly_cvjoin(generate("petersen"), (1, 1), 0.5)
    assert not any(f.label.startswith("bipartite-part") for f in fac.factors)


def test_cvjoin_kpq_part_multiplicity():
    # alpha (n1 + p) appears q - 1 times for (C4, p=2, q=4)
    fac = charpoly_cvjoin(generate("cycle", [4]), (2, 4), 0.25)
    part_q = next(f for f in fac.factors if f.label == "bipartite-part-q")
    assert part_q.mult == 3
    root = -part_q.poly.coeffs[0] / part_q.poly.coeffs[1]
    assert root == pytest.approx(0.25 * (4 + 2))


def test_cvjoin_preconditions():
    with pytest.raises(PreconditionError, match="r >= 2"):
        charpoly_cvjoin(generate("complete", [2]), generate("complete", [3]), 0.5)
    with pytest.raises(PreconditionError, match="regular"):
        charpoly_cvjoin(PAW, generate("complete", [3]), 0.5)
    with pytest.raises(PreconditionError, match="regular"):
        spectrum_cvjoin_regular(generate("complete", [3]), PAW, 0.5)


def test_cvjoin_generic_g2_evaluates():
    # PAW is neither regular nor complete bipartite: the coronal factor is
    # evaluable only, and the product still reproduces the characteristic
    # polynomial pointwise
    g1 = generate("complete", [3])
    fac = charpoly_cvjoin(g1, PAW, 0.3)
    assert fac.order == 3 + 3 + 4
    with pytest.raises(PreconditionError):
        fac.roots()
    built = central_vertex_join(g1, PAW)
    poly = char_poly(a_alpha_matrix(built, 0.3))
    for x in (12.0, -4.7, 20.25):
        assert fac.evaluate(x) == pytest.approx(poly(x), rel=1e-8)


def test_cvjoin_random_points_against_exact_charpoly():
    # rational alpha: the factored form evaluated at random points agrees
    # with the exact characteristic polynomial of the explicit matrix
    rng = random.Random(5)
    g1, g2 = generate("complete", [3]), generate("cycle", [5])
    alpha = Fraction(1, 4)
    fac = charpoly_cvjoin(g1, g2, float(alpha))
    exact = char_poly(a_alpha_matrix(central_vertex_join(g1, g2), alpha))
    for _ in range(5):
        x = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
        want = float(exact(x))
        got = fac.evaluate(float(x))
        assert got == pytest.approx(want, rel=1e-9, abs=1e-9)


def test_factor_degree_accounting():
    cases = [
        charpoly_central_regular(generate("petersen"), 0.5),
        charpoly_cvjoin(generate("cycle", [6]), generate("complete", [3]), 0.25),
        charpoly_cvjoin(generate("petersen"), (3, 3), 0.75),
        charpoly_cvjoin(generate("complete", [3]), PAW, 0.4),
    ]
    for fac in cases:
        total = fac.linear_mult + sum(f.degree * f.mult for f in fac.factors)
        assert total == fac.order


def test_cvjoin_alpha_one_is_degree_multiset():
    g1, g2 = generate("petersen"), generate("cycle", [5])
    spec = spectrum_cvjoin_regular(g1, g2, 1.0)
    degrees = sorted(central_vertex_join(g1, g2).degree_sequence, reverse=True)
    assert np.allclose(spec.values, degrees, atol=1e-9)


def test_factored_charpoly_json():
    fac = charpoly_cvjoin(generate("petersen"), (2, 3), 0.5)
    j = fac.to_json()
    assert j["linear"] == {"root": 1.0, "mult": 5}
    assert any(f["label"] == "coronal" and len(f["coeffs"]) == 5 for f in j["factors"])
