"""Solvability of x^k = a (mod m): exhaustive solving, the idempotent-power
criterion for regular a, the omega invariant, and generalized primitive roots.

omega_m(a) is the largest order among regular residues whose orbit contains
a.  The solvability criterion for regular a reads: x^k = a is solvable iff
a^(omega/(k, omega)) is idempotent.  No shortcut for omega is known, so it is
computed by exhaustive orbit membership with per-modulus caching.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import Modulus, build_modulus, canon, check_enum
from .idempotents import idem_class, is_idempotent
from .residues import is_regular, structure_table


@dataclass(frozen=True)
class CongruenceSolution:
    modulus: Modulus
    k: int
    a: int
    solutions: tuple[int, ...]
    regular_solutions: tuple[int, ...]
    solvable: bool
    bc01_verdict: bool | None  # present only when a is regular


@dataclass(frozen=True)
class OmegaInfo:
    modulus: Modulus
    a: int
    omega_a: int
    omega_set: tuple[int, ...]  # the maximizing generators, sorted
    ind_sup: int  # omega_a / |a|_m


@lru_cache(maxsize=None)
def _omega_cache(m: int, a: int) -> OmegaInfo:
    mod = build_modulus(m)
    check_enum(m)
    table = structure_table(m)
    a = canon(a, m)
    if not is_regular(mod, a):
        raise ValueError(f"{a} is not regular modulo {m}")
    best = 0
    maximizers: list[int] = []
    for b in table.regulars:
        if a in table.orbits[b]:
            n = table.orders[b]
            if n > best:
                best = n
                maximizers = [b]
            elif n == best:
                maximizers.append(b)
    # a is in its own orbit, so best >= |a|_m > 0.
    return OmegaInfo(mod, a, best, tuple(sorted(maximizers)), best // table.orders[a])


def omega_info(m: int | Modulus, a: int) -> OmegaInfo:
    mm = m.m if isinstance(m, Modulus) else m
    return _omega_cache(mm, canon(a, mm))


def solvable_bc01(m: int | Modulus, k: int, a: int) -> bool:
    """Criterion for regular a: x^k = a solvable iff a^(w/(k,w)) is
    idempotent, where w = omega_m(a)."""
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    a = canon(a, mod.m)
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    if not is_regular(mod, a):
        raise ValueError(f"{a} is not regular modulo {mod.m}: criterion inapplicable")
    w = omega_info(mod, a).omega_a
    return is_idempotent(mod, pow(a, w // math.gcd(k, w), mod.m))


def solve(m: int | Modulus, k: int, a: int) -> CongruenceSolution:
    """Exhaustive solution set of x^k = a, with the regular subset and, for
    regular a, the criterion verdict alongside."""
    mod = m if isinstance(m, Modulus) else build_modulus(m)
    check_enum(mod.m)
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    a = canon(a, mod.m)
    sols = tuple(x for x in range(1, mod.m + 1) if pow(x, k, mod.m) == a % mod.m)
    regs = tuple(x for x in sols if is_regular(mod, x))
    verdict = solvable_bc01(mod, k, a) if is_regular(mod, a) else None
    return CongruenceSolution(mod, k, a, sols, regs, bool(sols), verdict)


@lru_cache(maxsize=None)
def gen_primitive_roots(m: int) -> tuple[int, ...]:
    """G_m = {g regular: omega_m(g) = |g|_m}; always nonempty."""
    check_enum(m)
    table = structure_table(m)
    out = []
    for g in table.regulars:
        if omega_info(table.modulus, g).omega_a == table.orders[g]:
            out.append(g)
    return tuple(out)


def omega_set(m: int | Modulus, a: int) -> tuple[int, ...]:
    return omega_info(m, a).omega_set
