import pytest

import gibgcd
from gibgcd import GibonacciSpec


def test_terms_and_characteristic():
    assert gibgcd.fib(4) == 3
    assert gibgcd.fib(-5) == 5
    assert gibgcd.lucas(3) == 4
    assert gibgcd.fib(200) == 280571172992510140037611932413038677189525
    spec = GibonacciSpec(2, 7)
    assert gibgcd.gib_term(spec, 16) == 8129
    assert spec.characteristic == 31
    assert GibonacciSpec(-1, 3).characteristic == 11


def test_squares_gcd_forms_agree():
    spec = GibonacciSpec(3, 1)
    for k, expected in [(7, 1), (3, 2), (5, 11), (15, 22)]:
        assert gibgcd.gcd_squares_closed(spec, k) == expected
        assert gibgcd.gcd_squares_parity(spec, k) == expected
        assert gibgcd.gcd_power_bruteforce(spec, k, 2, 10) == expected
    c = gibgcd.gcd_squares_classified(GibonacciSpec(0, 2), 4, True)
    assert c.value == 12
    assert c.scale_factor == 4
    assert c.oracle_agrees is True
    assert c.case_tag == gibgcd.CaseTag.EvenFiveNotDividesMu


def test_first_power_and_maximality():
    spec = GibonacciSpec(2, 7)
    assert gibgcd.gcd_firstpower_closed(spec, 15) == 62
    report = gibgcd.odd_k_maximality(spec, 15)
    assert report.hypothesis_holds
    assert report.predicted_value == 62
    d, primitive = gibgcd.reduce_to_primitive(GibonacciSpec(4, 6))
    assert d == 2 and (primitive.g0, primitive.g1) == (2, 3)


def test_pisano():
    assert gibgcd.lucas_pisano(5) == 4
    assert gibgcd.fib_pisano(10) == 60
    assert gibgcd.pisano_period(GibonacciSpec(0, 1), 2).period == 3


def test_big_seed_round_trip():
    big = 10**40 + 7
    spec = GibonacciSpec(big, 1)
    assert spec.g0 == big
    assert gibgcd.gib_term(spec, 2) == big + 1


def test_errors():
    with pytest.raises(gibgcd.DegenerateSequenceError):
        gibgcd.gcd_squares_closed(GibonacciSpec(0, 0), 3)
    with pytest.raises(gibgcd.PreconditionError):
        gibgcd.gcd_squares_closed(GibonacciSpec(0, 1), 0)
    with pytest.raises(ValueError):
        gibgcd.fib_pisano(1)
