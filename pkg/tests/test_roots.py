import random
from fractions import Fraction

import numpy as np
import pytest

from specls.graph import build_graph
from specls.roots import (
    FamilyPolynomial,
    charpoly_exact,
    count_roots,
    family_lambda,
    lambda_interval_exact,
    largest_root_interval,
    poly_eval,
    sign_at_largest_root,
    sturm_chain,
)

TOL = Fraction(1, 10**12)


def random_graph(rng, n, p=0.5):
    return build_graph(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    )


def test_family_poly_known_values():
    # even-order matching polynomial at n=6: x^3 - x^2 - 9x + 3
    p = FamilyPolynomial("Y_even", 6).coefficients()
    assert p == [Fraction(3), Fraction(-9), Fraction(-1), Fraction(1)]
    # odd order n=7: x^3 - x^2 - 12x + 6
    p = FamilyPolynomial("Y_odd", 7).coefficients()
    assert p == [Fraction(6), Fraction(-12), Fraction(-1), Fraction(1)]


def test_family_lambda_matches_eigensolver():
    for tag, n, build in [
        ("Y_even", 6, None),
        ("Y_odd", 7, None),
        ("Y_even", 20, None),
        ("T_star4", 9, None),
        ("T_star4", 13, None),
        ("C4_embed", 11, None),
        ("C4_embed", 15, None),
    ]:
        lo, hi = family_lambda(FamilyPolynomial(tag, n), TOL)
        from specls.families import embed_into_turan2, small_cycle, t_n2q, y_n2q

        if tag in ("Y_even", "Y_odd"):
            g = y_n2q(n, 1).graph
        elif tag == "T_star4":
            g = t_n2q(n, 4).graph
        else:
            g = embed_into_turan2(n, small_cycle(4)).graph
        A = np.zeros((n, n))
        for u, v in g.edges():
            A[u, v] = A[v, u] = 1
        lam = np.linalg.eigvalsh(A)[-1]
        assert float(lo) - 1e-9 <= lam <= float(hi) + 1e-9


def test_family_lambda_validity():
    with pytest.raises(ValueError):
        family_lambda(FamilyPolynomial("Y_even", 7), TOL)
    with pytest.raises(ValueError):
        family_lambda(FamilyPolynomial("T_star4", 7), TOL)
    with pytest.raises(ValueError):
        family_lambda(FamilyPolynomial("T_star4", 12), TOL)
    with pytest.raises(ValueError):
        family_lambda(FamilyPolynomial("C4_embed", 10), TOL)
    with pytest.raises(ValueError):
        family_lambda(FamilyPolynomial("nope", 8), TOL)
    with pytest.raises(ValueError):
        family_lambda(FamilyPolynomial("Y_even", 8), Fraction(0))


def test_charpoly_small_cases():
    k2 = build_graph(2, [(0, 1)])
    assert charpoly_exact(k2) == [-1, 0, 1]
    k3 = build_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert charpoly_exact(k3) == [-2, -3, 0, 1]  # (x-2)(x+1)^2


def test_charpoly_matches_numpy():
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng, rng.randrange(1, 9))
        coeffs = charpoly_exact(g)
        A = np.zeros((g.n, g.n))
        for u, v in g.edges():
            A[u, v] = A[v, u] = 1
        eig = np.linalg.eigvalsh(A)
        for lam in eig:
            val = sum(c * lam**i for i, c in enumerate(coeffs))
            assert abs(val) < 1e-6 * max(1.0, abs(lam)) ** g.n


def test_lambda_interval_exact_contains_eigenvalue():
    rng = random.Random(6)
    for _ in range(40):
        g = random_graph(rng, rng.randrange(1, 9))
        lo, hi = lambda_interval_exact(g)
        A = np.zeros((g.n, g.n))
        for u, v in g.edges():
            A[u, v] = A[v, u] = 1
        lam = float(np.linalg.eigvalsh(A)[-1]) if g.n else 0.0
        assert float(lo) - 1e-9 <= lam <= float(hi) + 1e-9
        assert hi - lo <= Fraction(1, 10**12)


def test_largest_root_with_repeated_roots():
    # two disjoint triangles: lambda = 2 is a double root of the charpoly
    g = build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    lo, hi = lambda_interval_exact(g)
    assert lo <= 2 <= hi


def test_sturm_counts():
    # (x-1)(x-2)(x-3)
    p = [Fraction(-6), Fraction(11), Fraction(-6), Fraction(1)]
    chain = sturm_chain(p)
    assert count_roots(chain, Fraction(0), Fraction(4)) == 3
    assert count_roots(chain, Fraction(3, 2), Fraction(5, 2)) == 1
    lo, hi = largest_root_interval(p, Fraction(1, 2), Fraction(9, 2), Fraction(1, 10**9))
    assert lo <= 3 <= hi


def test_sign_at_largest_root():
    k3 = build_graph(3, [(0, 1), (0, 2), (1, 2)])
    p = [Fraction(c) for c in charpoly_exact(k3)]  # largest root 2
    q = [Fraction(-2), Fraction(0), Fraction(1)]  # x^2 - 2 > 0 at 2
    assert sign_at_largest_root(p, q, Fraction(1, 2), Fraction(7, 2)) == 1
    q = [Fraction(-4), Fraction(0), Fraction(1)]  # x^2 - 4 == 0 at 2
    assert sign_at_largest_root(p, q, Fraction(1, 2), Fraction(7, 2)) == 0
    q = [Fraction(-5), Fraction(0), Fraction(1)]  # x^2 - 5 < 0 at 2
    assert sign_at_largest_root(p, q, Fraction(1, 2), Fraction(7, 2)) == -1


def test_poly_eval():
    p = [Fraction(1), Fraction(2), Fraction(3)]  # 3x^2 + 2x + 1
    assert poly_eval(p, Fraction(2)) == 17
