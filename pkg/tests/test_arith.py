"""Factored-modulus arithmetic: totients, canonicalization, CRT."""
import math
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from idemod.arith import (
    EnumerationCapError,
    Factorization,
    build_modulus,
    canon,
    canonicalize,
    check_enum,
    crt_combine,
    factorize,
    lcm_all,
    mod_pow,
    multiplicative_order,
    valuation,
)


def _brute_phi_sieve(n):
    phi = list(range(n + 1))
    for p in range(2, n + 1):
        if phi[p] == p:  # p prime
            for k in range(p, n + 1, p):
                phi[k] -= phi[k] // p
    return phi


@lru_cache(maxsize=None)
def _brute_unit_count(q):
    """Number of units mod q, by direct gcd scan."""
    return sum(1 for u in range(1, q + 1) if math.gcd(u, q) == 1)


def test_phi_psi_brute_force_agreement_and_divisibility():
    phi = _brute_phi_sieve(2000)
    for m in range(1, 2001):
        mod = build_modulus(m)
        assert mod.phi == phi[m]
        brute_psi = lcm_all(
            _brute_unit_count(p**a) for p, a in mod.factorization.factors
        )
        assert mod.psi == brute_psi
        assert mod.phi % mod.psi == 0


def test_omega_square_free_flags():
    for m in range(1, 2001):
        mod = build_modulus(m)
        assert mod.omega == len(mod.factorization.factors)
        assert mod.square_free == all(a == 1 for _, a in mod.factorization.factors)


def test_parity_flags_odd_m():
    for m in range(1, 1001, 2):
        mod = build_modulus(m)
        assert mod.weakly_even
        assert not mod.barely_even


def test_parity_flags_even_m():
    assert build_modulus(2).barely_even and build_modulus(2).weakly_even
    assert not build_modulus(4).barely_even and build_modulus(4).weakly_even
    assert not build_modulus(8).weakly_even
    assert build_modulus(12).weakly_even and not build_modulus(12).barely_even


@given(a=st.integers(-(10**9), 10**9), m=st.integers(1, 500))
def test_canonicalize_congruent_and_in_range(a, m):
    c = canonicalize(a, m)
    assert 1 <= c <= m
    assert (c - a) % m == 0


def test_canon_zero_class():
    assert canon(0, 12) == 12
    assert canon(12, 12) == 12
    assert canon(-12, 12) == 12
    assert canon(-1, 12) == 11


@given(st.data())
@settings(max_examples=200)
def test_crt_roundtrip(data):
    primes = [2, 3, 5, 7, 11, 13]
    chosen = data.draw(st.lists(st.sampled_from(primes), unique=True, min_size=1))
    pairs = []
    for p in chosen:
        exp = data.draw(st.integers(1, 3))
        q = p**exp
        pairs.append((data.draw(st.integers(0, q - 1)), build_modulus(q)))
    x, mod = crt_combine(pairs)
    assert mod.m == math.prod(q.m for _, q in pairs)
    assert 1 <= x <= mod.m
    for a, q in pairs:
        assert x % q.m == a % q.m


def test_crt_rejects_non_coprime():
    with pytest.raises(ValueError):
        crt_combine([(1, build_modulus(6)), (2, build_modulus(4))])


def test_factorization_validates():
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))
    with pytest.raises(ValueError):
        Factorization(12, ((3, 1), (2, 2)))
    with pytest.raises(ValueError):
        Factorization(4, ((2, 0),))


@given(n=st.integers(1, 10**6))
@settings(max_examples=300)
def test_factorize_reconstructs(n):
    fact = factorize(n)
    assert math.prod(p**a for p, a in fact.factors) == n


def test_factorize_large_semiprime():
    n = 1000003 * 1000033
    fact = factorize(n)
    assert fact.factors == ((1000003, 1), (1000033, 1))


def test_mod_pow_rejects_nonpositive_exponent():
    with pytest.raises(ValueError):
        mod_pow(12, 5, 0)
    assert mod_pow(12, 5, 2) == 1
    assert mod_pow(12, -1, 2) == 1


def test_valuation():
    assert valuation(24, 2) == 3
    assert valuation(24, 3) == 1
    assert valuation(7, 2) == 0
    with pytest.raises(ValueError):
        valuation(0, 2)


def test_multiplicative_order_matches_brute_force():
    for n in range(1, 200):
        for a in range(1, n + 1):
            if math.gcd(a, n) != 1:
                continue
            x = a % n
            k = 1
            while x != 1 % n:
                x = x * a % n
                k += 1
            assert multiplicative_order(a, n) == k


def test_enumeration_cap(monkeypatch):
    monkeypatch.setenv("IDEM_MAX_ENUM", "100")
    with pytest.raises(EnumerationCapError):
        check_enum(101)
    check_enum(100)
