from fractions import Fraction

import pytest

import boundedcf as bc


def test_real_round_trip():
    assert bc.cf_expand(Fraction(3, 7)) == [2, 3]
    assert bc.cf_expand("1/2") == [2]
    assert bc.reconstruct([2, 3]) == Fraction(3, 7)
    big = Fraction(10**30 + 7, 3 * 10**30 + 1)
    assert bc.reconstruct(bc.cf_expand(big)) == big
    with pytest.raises(ValueError):
        bc.cf_expand("7/3")


def test_complex_round_trip():
    assert bc.cf_expand_complex(1, "(3-1w)/(7)") == ["2+1w", "1+3w"]
    assert bc.reconstruct_complex(1, ["2+1w", "1+3w"]) == "(3-1w)/(7)"
    assert bc.height_squared(1, "(3-1w)/(7)") == 49
    assert bc.height_squared(1, "0") == 0


def test_counts_and_brute_force():
    t = bc.enumerate_real(2, 5)
    assert bc.omega_count(t, 5) == 4
    assert bc.sigma_count(t, 5) == 2
    fast = bc.enumerate_real(3, 500, collect_lengths=True, threads=2)
    assert fast == bc.brute_force_real(3, 500)
    assert sum(fast.counts()) == fast.total()
    assert fast.to_csv().startswith("n,")


def test_dimension_and_fit():
    r = bc.solve_dimension(2)
    assert abs(r["delta"] - 0.5312805062772051) < 1e-11
    assert bc.leading_eigenvalue(3, 0.0) == pytest.approx(3.0)
    assert bc.solve_pole(2, 0.1)["s0"] > r["delta"]
    table = bc.enumerate_real(2, 2**14)
    fit = bc.omega_fit(table, [2**k for k in range(8, 15)])
    assert abs(fit["slope"] - 2 * r["delta"]) < 0.05


def test_complex_enumeration():
    t = bc.enumerate_complex(1, 100)
    assert t.total() > 0
    assert bc.default_alphabet(1, 8)
