import random
from fractions import Fraction

import pytest

from supergraph import InvalidParameter, PolynomialZ, char_poly_integer, complete_graph


def test_arithmetic_basics():
    x = PolynomialZ.x()
    p = (x + PolynomialZ.one()) ** 2
    assert p.coeffs == (1, 2, 1)
    assert (p - p) == PolynomialZ.zero()
    assert (p * 0) == PolynomialZ.zero()
    assert p.degree == 2 and p.is_monic()
    assert PolynomialZ.zero().degree == -1
    assert (2 * x).coeffs == (0, 2)


def test_evaluation():
    p = PolynomialZ((7, -3, -3, 1))  # x^3 - 3x^2 - 3x + 7
    assert p(0) == 7
    assert p(1) == 2
    assert p(-2) == -7
    assert p(Fraction(1, 2)) == Fraction(39, 8)
    assert abs(p(1.0) - 2.0) < 1e-12


def test_from_roots_and_multiplicity():
    p = PolynomialZ.from_roots([(0, 1), (4, 1), (1, 2)])
    assert p.coeffs == tuple(
        (PolynomialZ((0, 1)) * PolynomialZ((-4, 1)) * PolynomialZ((-1, 1)) ** 2).coeffs
    )
    assert p.root_multiplicity(1) == 2
    assert p.root_multiplicity(4) == 1
    assert p.root_multiplicity(2) == 0
    q, rem = p.deflate(0)
    assert rem == 0 and q.degree == 3


def test_pow_and_errors():
    x = PolynomialZ.x()
    assert (x ** 0) == PolynomialZ.one()
    with pytest.raises(InvalidParameter):
        x ** -1


def test_str():
    assert str(PolynomialZ((7, -3, -3, 1))) == "x^3 - 3x^2 - 3x + 7"
    assert str(PolynomialZ((0, -1))) == "-x"
    assert str(PolynomialZ.zero()) == "0"
    assert str(PolynomialZ((5,))) == "5"


def test_json_round_trip_big_coefficients():
    p = PolynomialZ((10 ** 40, -(3 ** 50), 1))
    assert PolynomialZ.from_json_dict(p.to_json_dict()) == p
    assert p.to_json_dict()["coeffs"][0] == str(10 ** 40)


def test_char_poly_k3():
    p = char_poly_integer(complete_graph(3).adjacency_matrix())
    assert p.coeffs == (-2, -3, 0, 1)  # x^3 - 3x - 2
    assert p == PolynomialZ((1, 1)) ** 2 * PolynomialZ((-2, 1))  # (x+1)^2 (x-2)


def test_char_poly_identity():
    p = char_poly_integer([[1, 0], [0, 1]])
    assert p == PolynomialZ((-1, 1)) ** 2


def _cofactor_char_poly(matrix):
    """Naive expansion-by-minors determinant of xI - M over the polynomial ring."""
    n = len(matrix)
    x = PolynomialZ.x()
    entries = [
        [
            (x if i == j else PolynomialZ.zero()) - PolynomialZ((matrix[i][j],))
            for j in range(n)
        ]
        for i in range(n)
    ]

    def det(rows, cols):
        if len(cols) == 1:
            return entries[rows[0]][cols[0]]
        total = PolynomialZ.zero()
        sign = 1
        for idx, c in enumerate(cols):
            minor = det(rows[1:], cols[:idx] + cols[idx + 1:])
            total = total + sign * (entries[rows[0]][c] * minor)
            sign = -sign
        return total

    return det(tuple(range(n)), tuple(range(n)))


def test_char_poly_against_cofactor_oracle():
    rng = random.Random(2024)
    for _ in range(5):
        n = 6
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = rng.choice((-1, 0, 1))
                m[i][j] = m[j][i] = v
        assert char_poly_integer(m) == _cofactor_char_poly(m)
    # the recursion is valid for non-symmetric matrices too
    for _ in range(3):
        n = 5
        m = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        assert char_poly_integer(m) == _cofactor_char_poly(m)


def test_char_poly_is_monic_of_full_degree():
    rng = random.Random(7)
    for n in (1, 2, 4, 7):
        m = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        p = char_poly_integer(m)
        assert p.degree == n and p.is_monic()


def test_char_poly_rejects_nonsquare():
    with pytest.raises(InvalidParameter):
        char_poly_integer([[1, 2, 3], [4, 5, 6]])
