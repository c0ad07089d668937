from fractions import Fraction

import pytest

import fracpart


def test_coefficients():
    assert fracpart.coefficients(-1, 5) == [1, 1, 2, 3, 5, 7]
    assert fracpart.coefficients(Fraction(-1, 8), 5)[5] == Fraction(55615, 262144)
    assert fracpart.coefficients("1/13", 7)[7] == Fraction(-3395395, 62748517)


def test_eta_power():
    a = fracpart.eta_power(2, 13)
    assert a[1] == 1 and a[13] == -2
    assert all(c == 0 for n, c in enumerate(a) if n % 12 != 1)
    with pytest.raises(fracpart.PreconditionError):
        fracpart.eta_power(0, 5)


def test_padic_ord():
    assert fracpart.padic_ord(Fraction(-49, 8), 7) == 2
    assert fracpart.padic_ord(0, 5) is None
    assert fracpart.padic_ord(Fraction(3, 250), 5) == -3


def test_search_helpers():
    assert fracpart.is_d_satisfactory(6, 7)
    assert not fracpart.is_d_satisfactory(2, 13)
    assert fracpart.find_w(13, 1) == 12
    assert fracpart.find_residues(6, 7, 1, 1) == [5]
    assert fracpart.find_residues(2, 13, 12, 1) == [(13**12 - 1) // 12]
    assert fracpart.a2_prime_power_sequence(13, 1, 2) == [1, 11, 3]


def test_verify():
    cert = fracpart.verify("t1", Fraction(-1, 8), 7, 5, d=6, n_max=10)
    assert cert["status"] == "VERIFIED_IN_RANGE"
    assert cert["modulus_power"] == 2
    assert list(cert)[0] == "family" and list(cert)[-1] == "artifact_version"
    with pytest.raises(fracpart.PreconditionError):
        fracpart.verify("t1", Fraction(-1, 8), 13, 5, d=6, n_max=10)
    with pytest.raises(fracpart.PreconditionError):
        fracpart.verify("t3", "2/(13^13+1)", 13, "(13^12-1)/12")
