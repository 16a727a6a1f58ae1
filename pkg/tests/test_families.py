import pytest

from gtfaces.engine import h_polynomial
from gtfaces.families import (Family, f_12k3, family_h, family_signature,
                              generating_function, geometric, h_12k3, h_123k,
                              h_223k, h_pair_matrix, phi, phi_root_form_value)
from gtfaces.poly import IntPoly, series_coeffs
from gtfaces.signatures import dimension


def test_phi_values():
    assert phi(0).coeffs == ()
    assert phi(1).coeffs == (1,)
    assert phi(2).coeffs == (0, 1, 1)            # s^2 + s
    assert phi(3).coeffs == (0, 0, 0, 2, 1)      # s^4 + 2 s^3
    assert phi(4).coeffs == (0, 0, 0, -1, 1, 3, 1)  # s^6 + 3 s^5 + s^4 - s^3
    with pytest.raises(ValueError):
        phi(-1)


def test_phi_recurrence_and_degree():
    b = IntPoly([0, 1, 1])
    a = IntPoly([0, 0, -1])
    for k in range(1, 21):
        assert phi(k + 1) == b * phi(k) + a * phi(k - 1)
        assert phi(k).degree == 2 * k - 2
        assert phi(k).evaluate(1) == k


@pytest.mark.parametrize("s", [2, 3])
def test_phi_root_form_spot_check(s):
    for k in range(1, 11):
        exact = phi(k).evaluate(s)
        approx = phi_root_form_value(k, s)
        assert abs(approx - exact) <= 1e-9 * abs(exact)
    assert phi_root_form_value(0, 2) == 0.0


def test_geometric():
    assert geometric(0).coeffs == (1,)
    assert geometric(3).coeffs == (1, 1, 1, 1)
    # expanded form of (s^(n+1) - 1)/(s - 1): multiply back by (s - 1)
    n = 5
    assert geometric(n) * IntPoly([-1, 1]) == IntPoly.monomial(n + 1) - IntPoly([1])
    with pytest.raises(ValueError):
        geometric(-1)


def test_h_12k3_examples():
    assert h_12k3(5).coeffs == (1, 2, 3, 4, 5, 6, 7, 6, 5, 4, 3, 1)
    assert h_12k3(0).coeffs == (1, 1)
    assert h_12k3(2).coeffs == (1, 2, 3, 4, 3, 1)


@pytest.mark.parametrize("k", range(13))
def test_h_12k3_hill_shape(k):
    h = h_12k3(k).coeffs
    assert len(h) == 2 * k + 2 and h[-1] == 1
    body = h[:-1]
    for i in range(len(body) - 1):
        if i < k + 1:
            assert body[i + 1] - body[i] == 1
        else:
            assert body[i + 1] - body[i] == -1
    # piecewise closed form of the same vector
    for i, c in enumerate(body):
        assert c == (i + 1 if i <= k + 1 else 2 * k + 3 - i)


@pytest.mark.parametrize("k", range(9))
def test_h_12k3_matches_engine(k):
    assert h_12k3(k) == h_polynomial(family_signature(Family.GZ_12K3, k))


def test_f_12k3_examples():
    assert f_12k3(0).coeffs == (2, 1)
    assert f_12k3(1).coeffs == (7, 11, 6, 1)
    assert f_12k3(5) == h_12k3(5).shift(1)


@pytest.mark.parametrize("k", range(9))
def test_f_12k3_equals_shifted_h(k):
    assert f_12k3(k) == h_12k3(k).shift(1)


def test_h_123k_examples():
    assert h_123k(3).coeffs == (1, 2, 3, 4, 6, 8, 5, 1)
    assert h_123k(0).coeffs == (1, 1)
    assert h_123k(1).coeffs == (1, 2, 3, 1)


def test_h_223k_examples():
    assert h_223k(0).coeffs == (1,)
    assert h_223k(1).coeffs == (1, 1, 1)
    assert h_223k(3).coeffs == (1, 1, 1, 1, 2, 3, 1)


@pytest.mark.parametrize("k", range(7))
def test_coupled_families_match_engine(k):
    assert h_123k(k) == h_polynomial(family_signature(Family.GZ_123K, k))
    assert h_223k(k) == h_polynomial(family_signature(Family.GZ_223K, k))


@pytest.mark.parametrize("k", range(13))
def test_h_pair_matrix_matches_formulas(k):
    pair = h_pair_matrix(k)
    assert pair.h_123k == h_123k(k)
    assert pair.h_223k == h_223k(k)


def test_h_pair_matrix_base_case():
    pair = h_pair_matrix(0)
    assert pair.h_123k.coeffs == (1, 1)
    assert pair.h_223k.coeffs == (1,)


@pytest.mark.parametrize("family,per_k", [
    (Family.GZ_123K, h_123k),
    (Family.GZ_223K, h_223k),
])
def test_generating_functions(family, per_k):
    coeffs = series_coeffs(generating_function(family), 12)
    for k, h in enumerate(coeffs):
        assert h == per_k(k)


def test_generating_function_leading_terms():
    assert series_coeffs(generating_function("123k"), 0)[0].coeffs == (1, 1)
    assert series_coeffs(generating_function("223k"), 0)[0].coeffs == (1,)
    with pytest.raises(ValueError):
        generating_function(Family.GZ_12K3)


def test_family_signature_mapping():
    assert family_signature("12k3", 5).mults == (1, 5, 1)
    assert family_signature("12k3", 0).mults == (1, 1)
    assert family_signature("123k", 3).mults == (1, 1, 3)
    assert family_signature("123k", 0).mults == (1, 1)
    assert family_signature("223k", 2).mults == (2, 2)
    assert family_signature("223k", 0).mults == (2,)
    with pytest.raises(ValueError):
        family_signature("12k3", -1)
    with pytest.raises(ValueError):
        family_signature("nope", 1)


@pytest.mark.parametrize("family", list(Family))
def test_family_h_degree_matches_dimension(family):
    for k in range(7):
        sig = family_signature(family, k)
        h = family_h(family, k)
        assert h.degree == dimension(sig)
        assert h.coeff(0) == 1 and h.coeffs[-1] == 1


def test_degenerate_members_are_known_shapes():
    # k = 0 members: segment, segment, point
    assert family_h("12k3", 0) == IntPoly([1, 1])
    assert family_h("123k", 0) == IntPoly([1, 1])
    assert family_h("223k", 0) == IntPoly([1])
    # k = 1 of 223k is a triangle
    assert family_h("223k", 1).shift(1).coeffs == (3, 3, 1)
