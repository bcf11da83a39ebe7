"""Kernels of x^2 = kx and the square-root structure over odd moduli.

For (k, m) = 1 the solution set of x^2 = kx is exactly k*E_m, so it inherits
the idempotent combinatorics.  k is canonicalized, with k = m standing for
the k = 0 equation x^2 = 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import Modulus, build_modulus, canon, check_enum
from .idempotents import enumerate_idempotents, is_idempotent
from .residues import mu, structure_table


def _resolve(m: int | Modulus) -> Modulus:
    return m if isinstance(m, Modulus) else build_modulus(m)


@dataclass(frozen=True)
class QuadraticKernel:
    modulus: Modulus
    k: int
    solutions: tuple[int, ...]

    def rbar(self, r: int) -> int:
        """The paired solution (k - r) mod m."""
        return canon(self.k - r, self.modulus.m)

    def __contains__(self, r: int) -> bool:
        return canon(r, self.modulus.m) in set(self.solutions)


def kernel(m: int | Modulus, k: int) -> QuadraticKernel:
    """All x with x^2 = kx (mod m), by scan; for (k, m) = 1 the scan must
    coincide with k*E_m, and that is asserted."""
    mod = _resolve(m)
    check_enum(mod.m)
    k = canon(k, mod.m)
    return _kernel_cached(mod, k)


@lru_cache(maxsize=4096)
def _kernel_cached(mod: Modulus, k: int) -> QuadraticKernel:
    sols = tuple(
        x for x in range(1, mod.m + 1) if x * x % mod.m == k * x % mod.m
    )
    if math.gcd(k, mod.m) == 1:
        built = sorted(
            canon(k * e, mod.m) for e in enumerate_idempotents(mod).elements
        )
        if list(sols) != built:
            raise AssertionError(
                f"scan and k*E_m construction disagree for m={mod.m}, k={k}"
            )
    return QuadraticKernel(mod, k, sols)


def root_decompose(m: int | Modulus, a: int, b: int, r: int) -> int:
    """For (b - a, m) = 1 and r solving (x-a)(x-b) = 0, the unique idempotent
    e with r = ae + b(1-e), recovered as e = (r-b)(a-b)^(-1)."""
    mod = _resolve(m)
    mm = mod.m
    if math.gcd(b - a, mm) != 1:
        raise ValueError(f"b - a = {b - a} is not a unit modulo {mm}")
    if (r - a) * (r - b) % mm != 0:
        raise ValueError(f"{r} does not solve (x-{a})(x-{b}) = 0 modulo {mm}")
    e = canon((r - b) * pow(a - b, -1, mm), mm)
    if not is_idempotent(mod, e):
        raise AssertionError(f"decomposition of r={r} is not idempotent (m={mm})")
    if canon(a * e + b * (1 - e), mm) != canon(r, mm):
        raise AssertionError(f"decomposition of r={r} does not recompose (m={mm})")
    return e


@dataclass(frozen=True)
class SqrtStructure:
    modulus: Modulus
    e: int
    roots: tuple[int, ...]  # regular solutions of x^2 = e
    size_formula: int  # 2^omega(mu_m(e))
    product: int
    product_formula: int  # (-1)^(2^(omega(mu)-1)) * e


def sqrt_structure(m: int | Modulus, e: int) -> SqrtStructure:
    """Regular square roots of an idempotent e over odd m, with the size and
    product formulas evaluated alongside."""
    mod = _resolve(m)
    if mod.m % 2 == 0:
        raise ValueError(f"modulus {mod.m} is even: structure result needs odd m")
    if not is_idempotent(mod, e):
        raise ValueError(f"{e} is not idempotent modulo {mod.m}")
    check_enum(mod.m)
    e = canon(e, mod.m)
    table = structure_table(mod.m)
    roots = tuple(
        x for x in table.regulars if x * x % mod.m == e % mod.m
    )
    om = build_modulus(mu(mod, e)).omega
    prod = 1
    for x in roots:
        prod = prod * x % mod.m
    sign = (-1) ** (2 ** (om - 1)) if om >= 1 else -1
    return SqrtStructure(
        modulus=mod,
        e=e,
        roots=roots,
        size_formula=2**om,
        product=canon(prod, mod.m),
        product_formula=canon(sign * e, mod.m),
    )


def kernel_op(m: int | Modulus, k: int, r: int, e: int, which: str) -> int:
    """Mix a kernel element with an idempotent: r o e = re + (k-r)(1-e) or
    r (x) e = k - (k-r)(1-e); both land back in the kernel."""
    mod = _resolve(m)
    mm = mod.m
    k = canon(k, mm)
    ker = kernel(mod, k)
    r = canon(r, mm)
    if r not in ker:
        raise ValueError(f"{r} does not solve x^2 = {k}x modulo {mm}")
    if not is_idempotent(mod, e):
        raise ValueError(f"{e} is not idempotent modulo {mm}")
    e = canon(e, mm)
    rb = k - r
    if which == "circ":
        return canon(r * e + rb * (1 - e), mm)
    if which == "otimes":
        return canon(k - rb * (1 - e), mm)
    raise ValueError(f"unknown kernel operator {which!r}")


def class_kernel_op(m: int | Modulus, e: int, r1: int, r2: int, which: str) -> int:
    """Combine two elements of the kernel of x^2 = ex (bars taken against
    k = e): r1 o r2 = r1 r2 + rbar1 rbar2, r1 (x) r2 = e - rbar1 rbar2."""
    mod = _resolve(m)
    mm = mod.m
    if not is_idempotent(mod, e):
        raise ValueError(f"{e} is not idempotent modulo {mm}")
    e = canon(e, mm)
    ker = kernel(mod, e)
    r1 = canon(r1, mm)
    r2 = canon(r2, mm)
    for r in (r1, r2):
        if r not in ker:
            raise ValueError(f"{r} does not solve x^2 = {e}x modulo {mm}")
    rb1, rb2 = e - r1, e - r2
    if which == "circ":
        return canon(r1 * r2 + rb1 * rb2, mm)
    if which == "otimes":
        return canon(e - rb1 * rb2, mm)
    raise ValueError(f"unknown kernel operator {which!r}")
