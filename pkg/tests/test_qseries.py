from fractions import Fraction as F

import pytest

from moonshine.errors import (CutoffUnderflow, DataExhausted, NotInvertible,
                              NotUnimodular)
from moonshine.qseries import (FracSeries, dedekind_epsilon, eta, eta_quotient,
                               lambda_n, mock_theta, newform, series_arith,
                               unary_theta)


def heads(series, n):
    out = []
    for e, c in series.items():
        out.append((e, c))
        if len(out) == n:
            break
    return out


def test_eta_pentagonal():
    e = eta(13)
    assert heads(e, 5) == [(F(1, 24), 1), (F(25, 24), -1), (F(49, 24), -1),
                           (F(121, 24), 1), (F(169, 24), 1)]


def test_eta_cube_is_odd_theta():
    assert eta_quotient([(1, 3)], 15) == unary_theta(2, 1, 15)


def test_unary_theta_eta_expressions():
    assert unary_theta(3, 1, 12) == eta_quotient([(2, 5), (4, -2)], 12)
    assert unary_theta(3, 2, 12) == eta_quotient([(1, 2), (4, 2), (2, -1)], 12).scale(2)
    assert unary_theta(4, 2, 12) == eta_quotient([(2, 3)], 12).scale(2)


def test_unary_theta_leading():
    s = unary_theta(3, 1, 2)
    assert s.low() == F(1, 12) and s.coefficient(F(1, 12)) == 1


def test_theta_relation_l4_l2():
    lhs = unary_theta(4, 1, 8).rescale(2) - unary_theta(4, 3, 8).rescale(2)
    assert lhs == unary_theta(2, 1, 15)


def test_lambda_small():
    l2 = lambda_n(2, 6)
    assert [l2.coefficient(k) for k in range(6)] == [F(1, 12), 2, 2, 8, 2, 12]
    assert lambda_n(3, 1).coefficient(0) == F(1, 4)


def test_lambda_low_coefficients_are_n_sigma():
    from moonshine.qseries import divisor_sigma
    for n in (2, 3, 5, 7, 11):
        ln = lambda_n(n, n)
        for k in range(1, n):
            assert ln.coefficient(k) == n * divisor_sigma(k)


def test_newforms():
    f11 = newform("f11", 8)
    assert [f11.coefficient(k) for k in range(1, 8)] == [1, -2, -1, 2, 1, 2, -2]
    assert newform("f44", 28).coefficient(5) == -3
    f23b = newform("f23b", 5)
    assert f23b.low() == 2 and f23b.coefficient(2) == 1
    f23a = newform("f23a", 4)
    assert f23a.coefficient(1) == 1 and f23a.coefficient(2) == 0


def test_f44_data_exhausted():
    with pytest.raises(DataExhausted):
        newform("f44", 40)


def test_invert_geometric():
    s = FracSeries(1, {0: 1, 1: -1}, 6)
    assert [s.invert().coefficient(k) for k in range(5)] == [1] * 5


def test_invert_requires_leading():
    with pytest.raises(NotInvertible):
        FracSeries.zero(5).invert()


def test_rescale_halves_exponents():
    s = eta_quotient([(1, 3)], 4).rescale(F(1, 2))
    assert s.low() == F(1, 16)
    assert s.coefficient(F(1, 16) + F(1, 2)) == -3


def test_split_partitions(rng):
    terms = [(F(rng.randint(-40, 40), 8), rng.randint(-5, 5)) for _ in range(30)]
    s = FracSeries.from_terms(terms, 10)
    parts = [s.split(F(k, 8)) for k in range(8)]
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    assert total == s


def test_split_parity_example():
    s = FracSeries.from_terms([(F(-1, 16), 3), (F(7, 16), 5), (F(15, 16), 7)], 2)
    kept = s.split(F(-1, 16))
    assert kept.coefficient(F(-1, 16)) == 3
    assert kept.coefficient(F(15, 16)) == 7
    assert kept.coefficient(F(7, 16)) == 0


def test_ring_axioms_randomized(rng):
    def rand_series():
        return FracSeries.from_terms(
            [(F(rng.randint(0, 12), 3), F(rng.randint(-9, 9), rng.randint(1, 3)))
             for _ in range(6)], 5)

    for _ in range(10):
        a, b, c = rand_series(), rand_series(), rand_series()
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_mul_inverse_roundtrip():
    e = eta(10)
    assert (e * e.invert()).truncate(8) == FracSeries.one(8)


def test_coefficient_beyond_cutoff_raises():
    with pytest.raises(CutoffUnderflow):
        eta(3).coefficient(5)


def test_mock_theta_heads():
    f = mock_theta("f", 7)
    assert [f.coefficient(k) for k in range(6)] == [1, 1, -2, 3, -3, 3]
    mu = mock_theta("mu2", 6)
    assert [mu.coefficient(k) for k in range(5)] == [1, -1, 1, 2, -1]
    u0 = mock_theta("U0", 5)
    assert [u0.coefficient(k) for k in range(5)] == [1, 1, 1, 0, 1]


def test_mock_theta_order10_heads():
    phi10 = mock_theta("phi10", 5)
    assert phi10.coefficient(0) == 1
    x = mock_theta("X", 5)
    assert x.coefficient(0) == 1 and x.coefficient(1) == -1


def test_series_arith_dispatch():
    a = FracSeries(1, {0: 1, 1: 2}, 5)
    assert series_arith(a, a, "add") == a.scale(2)
    assert series_arith(a, None, "shift", exponent=F(1, 2)).low() == F(1, 2)


def test_dedekind_epsilon_values():
    assert dedekind_epsilon(1, 1, 0, 1) == 23      # e(-1/24)
    assert dedekind_epsilon(1, 5, 0, 1) == 19      # e(-5/24)
    assert dedekind_epsilon(0, -1, 1, 0) == 3      # e(1/8)


def test_dedekind_epsilon_translation_rule(rng):
    mats = [(1, 0, 1, 1), (0, -1, 1, 0), (2, 1, 3, 2), (5, 2, 7, 3)]
    for a, b, c, d in mats:
        assert a * d - b * c == 1
        base = dedekind_epsilon(a, b, c, d)
        for m in (1, 2, 5, 24):
            assert dedekind_epsilon(a + m * c, b + m * d, c, d) == (base - m) % 24
            assert dedekind_epsilon(a, a * m + b, c, c * m + d) == (base - m) % 24


def test_dedekind_epsilon_negation():
    assert dedekind_epsilon(-1, 0, 0, -1) == 6     # e(1/4)
    with pytest.raises(NotUnimodular):
        dedekind_epsilon(1, 1, 1, 1)


def test_render_canonical_form():
    s = eta_quotient([(1, 3)], 4)
    assert s.render(2) == "q^(1/8)*(1 - 3*q^(1) + ...)"
    assert s.render(3) == "q^(1/8)*(1 - 3*q^(1) + 5*q^(3))"
