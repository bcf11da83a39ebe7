"""Normal and regular residues, class groups, orbits, and relative orders.

A residue a is *regular* when a^(|a|+1) = a, i.e. its powers cycle through a
group with identity its idempotent class e.  R_m^e denotes the regular
residues with class e.  A residue is *normal* when a^k is idempotent exactly
for the multiples of |a|.  Regular implies normal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import Modulus, build_modulus, canon, check_enum, valuation
from .idempotents import (
    IdempotentSet,
    enumerate_idempotents,
    idem_class,
    index,
    is_idempotent,
    order,
    signed_power,
    _order_parts,
)


@dataclass(frozen=True)
class ResidueClassification:
    modulus: Modulus
    a: int
    is_normal: bool
    is_regular: bool
    order: int
    idem_class: int
    mu: int
    delta: int


def mu(m: int | Modulus, a: int) -> int:
    """The divisor m1 of m on which a's idempotent class is congruent to 1
    (the complementary divisor m/m1 carries the zero part)."""
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    a = canon(a, mod.m)
    out = 1
    for p, alpha in mod.factorization.factors:
        if a % p != 0:
            out *= p**alpha
    return out


def delta(m: int | Modulus, a: int) -> int:
    """Smallest n with a^n regular: max over shared primes p of
    ceil(alpha_p / v_p(a)), and 1 for (a, m) = 1."""
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    a = canon(a, mod.m)
    _, T = _order_parts(mod, a)
    return T


def is_regular(m: int | Modulus, a: int) -> bool:
    """Every prime of m dividing a must divide a to the full power in m."""
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    a = canon(a, mod.m)
    return all(
        a % p != 0 or a % p**alpha == 0 for p, alpha in mod.factorization.factors
    )


def is_normal(m: int | Modulus, a: int) -> bool:
    """Normal exactly when the tail length T does not exceed the cycle
    length L, so the idempotent exponents are the multiples of |a|."""
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    a = canon(a, mod.m)
    L, T = _order_parts(mod, a)
    return T <= L


def classify(m: int | Modulus, a: int) -> ResidueClassification:
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    a = canon(a, mod.m)
    info = order(mod, a)
    return ResidueClassification(
        modulus=mod,
        a=a,
        is_normal=is_normal(mod, a),
        is_regular=is_regular(mod, a),
        order=info.order,
        idem_class=info.idem_class,
        mu=mu(mod, a),
        delta=delta(mod, a),
    )


def regular_set(m: int | Modulus, e: int | None = None) -> list[int]:
    """R_m, or the class R_m^e for an idempotent e."""
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    check_enum(mod.m)
    if e is not None and not is_idempotent(mod, e):
        raise ValueError(f"{e} is not idempotent modulo {mod.m}")
    out = []
    for a in range(1, mod.m + 1):
        if not is_regular(mod, a):
            continue
        if e is None or idem_class(mod, a) == canon(e, mod.m):
            out.append(a)
    return out


def normal_set(m: int | Modulus, e: int | None = None) -> list[int]:
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    check_enum(mod.m)
    if e is not None and not is_idempotent(mod, e):
        raise ValueError(f"{e} is not idempotent modulo {mod.m}")
    out = []
    for a in range(1, mod.m + 1):
        if not is_normal(mod, a):
            continue
        if e is None or idem_class(mod, a) == canon(e, mod.m):
            out.append(a)
    return out


@dataclass(frozen=True)
class OrbitSet:
    modulus: Modulus
    generator: int
    elements: frozenset[int]


def orbit(m: int | Modulus, a: int) -> OrbitSet:
    """orb_m(a) = {a^1, ..., a^|a|} mod m."""
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    a = canon(a, mod.m)
    n = order(mod, a).order
    elems = set()
    x = 1 % mod.m
    for _ in range(n):
        x = x * a % mod.m
        elems.add(canon(x, mod.m))
    return OrbitSet(mod, a, frozenset(elems))


@dataclass(frozen=True)
class StructureTable:
    """Per-modulus tables shared by the orbit/omega machinery."""

    modulus: Modulus
    idempotents: IdempotentSet
    regulars: tuple[int, ...]
    orders: dict[int, int]  # a -> |a|_m, over regulars
    classes: dict[int, int]  # a -> idem class, over regulars
    orbits: dict[int, frozenset[int]]  # a -> orb(a), over regulars


@lru_cache(maxsize=None)
def structure_table(m: int) -> StructureTable:
    mod = build_modulus(m)
    check_enum(m)
    regs = tuple(regular_set(mod))
    orders = {}
    classes = {}
    orbits = {}
    for a in regs:
        info = order(mod, a)
        orders[a] = info.order
        classes[a] = info.idem_class
        orbits[a] = orbit(mod, a).elements
    return StructureTable(
        modulus=mod,
        idempotents=enumerate_idempotents(mod),
        regulars=regs,
        orders=orders,
        classes=classes,
        orbits=orbits,
    )


def _require_same_class(mod: Modulus, b: int, c: int) -> int:
    for x in (b, c):
        if not is_regular(mod, x):
            raise ValueError(f"{x} is not regular modulo {mod.m}")
    eb = idem_class(mod, b)
    ec = idem_class(mod, c)
    if eb != ec:
        raise ValueError(
            f"operands {b} and {c} lie in different classes modulo {mod.m} "
            f"({eb} vs {ec})"
        )
    return eb


def orbit_gcd(m: int | Modulus, b: int, c: int) -> int:
    """D_m(b, c): gcd of the exponents n <= |b| with b^n in orb(c).  Only
    defined for regular operands sharing an idempotent class."""
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    b = canon(b, mod.m)
    c = canon(c, mod.m)
    _require_same_class(mod, b, c)
    target = orbit(mod, c).elements
    g = 0
    x = 1 % mod.m
    for n in range(1, order(mod, b).order + 1):
        x = x * b % mod.m
        if canon(x, mod.m) in target:
            g = math.gcd(g, n)
    return g


def relative_order(m: int | Modulus, a: int, b: int) -> int:
    """|a,b|_m = |orb(a) ∩ orb(b)| = |a|_m / D_m(a, b)."""
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    return order(mod, a).order // orbit_gcd(mod, a, b)


def equivalent(m: int | Modulus, a: int, b: int) -> bool:
    """a ~ b: same idempotent class, same order, and a is a power of b."""
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    a = canon(a, mod.m)
    b = canon(b, mod.m)
    for x in (a, b):
        if not is_regular(mod, x):
            raise ValueError(f"{x} is not regular modulo {mod.m}")
    ia = order(mod, a)
    ib = order(mod, b)
    return (
        ia.idem_class == ib.idem_class
        and ia.order == ib.order
        and index(mod, b, a) is not None
    )


def _coprime_split(x: int, y: int) -> tuple[int, int]:
    """(u, v) with u | x, v | y, (u, v) = 1 and u*v = lcm(x, y)."""
    u, v = x, y
    while True:
        g = math.gcd(u, v)
        if g == 1:
            return u, v
        # Move the shared part entirely to the side holding more of it.
        for p in _prime_divisors(g):
            if valuation(x, p) >= valuation(y, p):
                while v % p == 0:
                    v //= p
            else:
                while u % p == 0:
                    u //= p


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def join_witness(m: int | Modulus, b: int, c: int, a: int) -> int:
    """Given regular b, c with a common class and a in orb(b) ∩ orb(c),
    produce d in the same class with a in orb(d) and |d| = lcm(|b|, |c|).

    Construction: raise b and c to kill the shared part of their orders,
    leaving coprime orders whose product is the lcm; the product of those
    powers has the right order, and if a is not directly in its orbit an
    exhaustive scan over the class finds a valid witness.
    """
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    b = canon(b, mod.m)
    c = canon(c, mod.m)
    a = canon(a, mod.m)
    e = _require_same_class(mod, b, c)
    if not is_regular(mod, a) or idem_class(mod, a) != e:
        raise ValueError(f"{a} is not in the class of {b} and {c} modulo {mod.m}")
    if a not in orbit(mod, b).elements or a not in orbit(mod, c).elements:
        raise ValueError(f"{a} is not in both orbits of {b} and {c} modulo {mod.m}")
    nb = order(mod, b).order
    nc = order(mod, c).order
    target = math.lcm(nb, nc)
    u, v = _coprime_split(nb, nc)
    d = canon(pow(b, nb // u, mod.m) * pow(c, nc // v, mod.m), mod.m)
    if order(mod, d).order == target and a in orbit(mod, d).elements:
        return d
    check_enum(mod.m)
    for cand in regular_set(mod, e):
        if order(mod, cand).order == target and a in orbit(mod, cand).elements:
            return cand
    raise AssertionError(
        f"no witness of order {target} through {a} modulo {mod.m}"
    )


def class_product(m: int | Modulus, e: int) -> int:
    """Product of all elements of R_m^e modulo m."""
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    if not is_idempotent(mod, e):
        raise ValueError(f"{e} is not idempotent modulo {mod.m}")
    out = 1
    for a in regular_set(mod, e):
        out = out * a % mod.m
    return canon(out, mod.m)
