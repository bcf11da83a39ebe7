"""Factored-modulus arithmetic.

Residues are canonical integers in {1..m}, where the value m itself stands
for the residue class of 0.  Every public operation canonicalizes its integer
inputs at the boundary, so callers may pass arbitrary integers.
"""
from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from functools import lru_cache, reduce

DEFAULT_MAX_ENUM = 1_000_000

# Above this, trial division alone is too slow and Pollard rho takes over.
_TRIAL_DIVISION_LIMIT = 10**12


class EnumerationCapError(Exception):
    """A full-set enumeration was requested for a modulus beyond the cap."""

    def __init__(self, m: int, cap: int):
        super().__init__(f"modulus {m} exceeds enumeration cap {cap}")
        self.m = m
        self.cap = cap


def max_enum() -> int:
    """Current enumeration cap (env IDEM_MAX_ENUM, default 1,000,000)."""
    return int(os.environ.get("IDEM_MAX_ENUM", DEFAULT_MAX_ENUM))


def check_enum(m: int) -> None:
    cap = max_enum()
    if m > cap:
        raise EnumerationCapError(m, cap)


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), primes ascending

    def __post_init__(self):
        prod = 1
        for p, a in self.factors:
            if a <= 0:
                raise ValueError(f"nonpositive exponent in {self.factors}")
            prod *= p**a
        if prod != self.value:
            raise ValueError(f"factors {self.factors} do not multiply to {self.value}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be distinct and ascending")


@dataclass(frozen=True)
class Modulus:
    m: int
    factorization: Factorization
    phi: int
    psi: int
    omega: int
    square_free: bool
    weakly_even: bool
    barely_even: bool

    @property
    def prime_powers(self) -> tuple[int, ...]:
        return tuple(p**a for p, a in self.factorization.factors)

    def __repr__(self):  # keep cached instances readable in test output
        return f"Modulus({self.m})"


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # Deterministic for n < 3.3e24 with these bases.
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorize(n: int) -> Factorization:
    """Prime factorization of n >= 1; n = 1 gives an empty factor list."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}: need a positive integer")
    counts: dict[int, int] = {}

    def _account(p: int):
        counts[p] = counts.get(p, 0) + 1

    rest = n
    for p in (2, 3):
        while rest % p == 0:
            _account(p)
            rest //= p
    d = 5
    while d * d <= rest and d * d <= _TRIAL_DIVISION_LIMIT:
        for q in (d, d + 2):
            while rest % q == 0:
                _account(q)
                rest //= q
        d += 6

    stack = [rest] if rest > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if _is_probable_prime(v):
            _account(v)
            continue
        f = _pollard_rho(v)
        stack.append(f)
        stack.append(v // f)

    # _account counted multiplicity one per division for trial primes, but the
    # rho branch pushes full cofactors; recount cleanly from the tally.
    flat: dict[int, int] = {}
    for p, c in counts.items():
        flat[p] = flat.get(p, 0) + c
    return Factorization(n, tuple(sorted(flat.items())))


@lru_cache(maxsize=None)
def build_modulus(n: int) -> Modulus:
    """Modulus with all derived totients and parity flags populated."""
    if n < 1:
        raise ValueError(f"invalid modulus {n}: need a positive integer")
    fact = factorize(n)
    phi = 1
    psi = 1
    for p, a in fact.factors:
        t = p ** (a - 1) * (p - 1)
        phi *= t
        psi = psi * t // math.gcd(psi, t)
    v2 = 0
    if fact.factors and fact.factors[0][0] == 2:
        v2 = fact.factors[0][1]
    return Modulus(
        m=n,
        factorization=fact,
        phi=phi,
        psi=psi,
        omega=len(fact.factors),
        square_free=all(a == 1 for _, a in fact.factors),
        weakly_even=v2 <= 2,
        barely_even=v2 == 1,
    )


def canon(a: int, m: int) -> int:
    """Representative of a mod m in {1..m} (m stands for the zero class)."""
    b = a % m
    return m if b == 0 else b


def canonicalize(a: int, m: Modulus | int) -> int:
    mm = m.m if isinstance(m, Modulus) else m
    if mm < 1:
        raise ValueError(f"invalid modulus {mm}")
    return canon(a, mm)


def mod_pow(m: Modulus | int, a: int, k: int) -> int:
    """a^k mod m, canonical.  k = 0 is rejected: the zeroth power is defined
    elsewhere through the generalized order."""
    if k < 1:
        raise ValueError(f"exponent {k} not allowed: mod_pow needs k >= 1")
    mm = m.m if isinstance(m, Modulus) else m
    return canon(pow(canon(a, mm), k, mm), mm)


def valuation(n: int, p: int) -> int:
    """p-adic valuation of n != 0."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def multiplicative_order(a: int, n: int) -> int:
    """Classical order of a in the unit group mod n; requires gcd(a, n) = 1."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    t = build_modulus(n).phi
    o = t
    for q, _ in factorize(t).factors:
        while o % q == 0 and pow(a, o // q, n) == 1:
            o //= q
    return o


def lcm_all(values) -> int:
    return reduce(math.lcm, values, 1)


def crt_combine(pairs: list[tuple[int, Modulus]]) -> tuple[int, Modulus]:
    """Combine congruences x = a_i (mod m_i) over pairwise coprime moduli.

    Returns the canonical solution together with the product modulus.
    """
    if not pairs:
        raise ValueError("crt_combine needs at least one congruence")
    x = 0
    mod = 1
    for a, mi in pairs:
        m = mi.m if isinstance(mi, Modulus) else mi
        if math.gcd(mod, m) != 1:
            raise ValueError(f"moduli are not pairwise coprime (offending modulus {m})")
        a = a % m
        # x' = x (mod mod), x' = a (mod m)
        inv = pow(mod, -1, m) if m > 1 else 0
        x = x + mod * ((a - x) * inv % m)
        mod *= m
    return canon(x, mod), build_modulus(mod)
