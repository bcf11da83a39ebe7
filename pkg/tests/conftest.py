"""Shared brute-force sweeps, cached so the property suite and the
acceptance gate pay for each expensive computation once per session."""
import math
from functools import lru_cache

from idemod.arith import build_modulus, canon
from idemod.audit import run_audit
from idemod.algebra import verify_algebra
from idemod.counting import rho_closed_form
from idemod.congruence import solvable_bc01
from idemod.residues import class_product, is_regular, mu, structure_table
from idemod.quadratic import sqrt_structure

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(criterion: str, ok: bool, detail: str):
    ACCEPTANCE_LINES.append(
        f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
    )


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@lru_cache(maxsize=None)
def brute_orders(m: int) -> tuple[int, ...]:
    """Generalized orders of 1..m by iterating to the first idempotent."""
    out = []
    for a in range(1, m + 1):
        x = a % m
        n = 1
        while x * x % m != x:
            x = x * a % m
            n += 1
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=None)
def brute_regular_set(m: int) -> frozenset[int]:
    """a with a^(|a|+1) = a, using the brute-force orders."""
    orders = brute_orders(m)
    return frozenset(
        a for a in range(1, m + 1) if pow(a, orders[a - 1] + 1, m) == a % m
    )


@lru_cache(maxsize=None)
def power_image(m: int, k: int) -> frozenset[int]:
    """{x^k mod m} in 0..m-1 form."""
    return frozenset(pow(x, k, m) for x in range(1, m + 1))


@lru_cache(maxsize=1)
def bc01_sweep(bound: int = 150, kmax: int = 30):
    """Criterion verdict vs exhaustive solvability for regular a."""
    mismatches = []
    for m in range(2, bound + 1):
        table = structure_table(m)
        for k in range(1, kmax + 1):
            img = power_image(m, k)
            for a in table.regulars:
                if solvable_bc01(m, k, a) != (a % m in img):
                    mismatches.append((m, k, a))
    return mismatches


@lru_cache(maxsize=1)
def algebra_sweep(bound: int = 1000):
    """Moduli at which any operator-algebra law fails."""
    failures = []
    for m in range(1, bound + 1):
        rep = verify_algebra(m)
        if not rep.ok:
            failures.append((m, [l.law for l in rep.laws if not l.passed]))
    return failures


@lru_cache(maxsize=1)
def counting_sweep(bound: int = 500, kmax: int = 60):
    """Closed-form rho failures on weakly even moduli."""
    failures = []
    for m in range(2, bound + 1):
        mod = build_modulus(m)
        if not mod.weakly_even:
            continue
        table = structure_table(m)
        one = canon(1, m)
        unit_orders = [
            table.orders[a] for a in table.regulars if table.classes[a] == one
        ]
        for k in range(1, kmax + 1):
            direct = sum(1 for n in unit_orders if k % n == 0)
            if rho_closed_form(mod, k) != direct:
                failures.append((m, k, direct, rho_closed_form(mod, k)))
    return failures


@lru_cache(maxsize=1)
def quadratic_sweep(bound: int = 299):
    """Square-root structure and class-product failures on odd moduli."""
    failures = []
    for m in range(3, bound + 1, 2):
        table = structure_table(m)
        for e in table.idempotents.elements:
            rep = sqrt_structure(m, e)
            if len(rep.roots) != rep.size_formula:
                failures.append((m, e, "size", len(rep.roots), rep.size_formula))
            if rep.product != rep.product_formula:
                failures.append((m, e, "product", rep.product, rep.product_formula))
            om = build_modulus(mu(m, e)).omega
            sign = (-1) ** (2 ** (om - 1)) if om >= 1 else -1
            if class_product(m, e) != canon(sign * e, m):
                failures.append((m, e, "class-product", class_product(m, e)))
    return failures


@lru_cache(maxsize=1)
def audit_100():
    return run_audit(2, 100)
