"""Empirical theorem audit: sweep moduli, test every registered statement,
and report counterexamples.

Each registry entry replays one statement over a modulus (or once globally,
for statements that do not mention a modulus; those run with the sentinel
modulus 0).  Conditional statements are audited as conditionals: instances
failing the hypothesis are skipped, never counted as passes.  Statements with
zero findings are marked verified-on-range — never "proved".
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .arith import Modulus, build_modulus, canon, lcm_all
from .idempotents import (
    enumerate_idempotents,
    idem_class,
    index,
    is_idempotent,
    order,
    signed_power,
)
from .oracle import (
    oracle_idempotents,
    oracle_is_normal,
    oracle_is_regular,
    oracle_order,
    oracle_solve,
)
from .residues import (
    class_product,
    delta,
    is_normal,
    is_regular,
    join_witness,
    mu,
    orbit,
    orbit_gcd,
    regular_set,
    relative_order,
    structure_table,
)
from .congruence import gen_primitive_roots, omega_info, solvable_bc01
from .counting import (
    builtin_function,
    classify_function,
    lcm_lift,
    orbit_union_size,
    r_count,
    rho_closed_form,
    rho_count,
    rho_prime_power,
)
from .algebra import basis_map, verify_algebra
from .quadratic import kernel, root_decompose, sqrt_structure, kernel_op, class_kernel_op


@dataclass(frozen=True)
class AuditFinding:
    theorem_id: str
    modulus: int
    witness: dict
    expected: object
    actual: object

    def sort_key(self):
        return (self.modulus, self.theorem_id, sorted(self.witness.items()))

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "modulus": self.modulus,
            "witness": self.witness,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class TheoremResult:
    theorem_id: str
    status: str  # "verified-on-range" | "counterexamples"
    findings: list[AuditFinding] = field(default_factory=list)


@dataclass
class AuditReport:
    lo: int
    hi: int
    results: list[TheoremResult]

    def to_json(self) -> dict:
        return {
            "range": [self.lo, self.hi],
            "theorems": [
                {
                    "id": r.theorem_id,
                    "status": r.status,
                    "findings": [f.to_json() for f in r.findings],
                }
                for r in self.results
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


class _Ctx:
    """Shared per-modulus scratch tables for the checks."""

    def __init__(self, m: int):
        self.m = m
        self.mod = build_modulus(m)
        self.table = structure_table(m)
        self.E = list(self.table.idempotents.elements)
        self.Eset = set(self.E)
        self.R = list(self.table.regulars)
        self.Rset = set(self.R)
        self.orders = self.table.orders
        self.classes = self.table.classes
        self.orbits = self.table.orbits
        self.N = [a for a in range(1, m + 1) if is_normal(m, a)]
        self.Nset = set(self.N)
        # ind maps for regular elements: value -> smallest exponent.
        self.ind: dict[int, dict[int, int]] = {}
        for b in self.R:
            walk: dict[int, int] = {}
            x = 1 % m
            for k in range(1, self.orders[b] + 1):
                x = x * b % m
                walk.setdefault(canon(x, m), k)
            self.ind[b] = walk
        self.by_class: dict[int, list[int]] = {}
        for a in self.R:
            self.by_class.setdefault(self.classes[a], []).append(a)
        self._images: dict[int, frozenset[int]] = {}

    def images(self, k: int) -> frozenset[int]:
        """{x^k mod m : x in Z_m} in 0..m-1 form, for solvability lookups."""
        if k not in self._images:
            mm = self.m
            self._images[k] = frozenset(pow(x, k, mm) for x in range(1, mm + 1))
        return self._images[k]

    def nind(self, b: int, a: int) -> int | None:
        """ind_b a for arbitrary b via bounded walk."""
        return index(self.m, b, a)


@lru_cache(maxsize=None)
def _ctx(m: int) -> _Ctx:
    return _Ctx(m)


@lru_cache(maxsize=None)
def _algebra_report(m: int):
    return verify_algebra(m)


def _divisor_pairs(m: int):
    divs = [d for d in range(1, m + 1) if m % d == 0]
    for m1 in divs:
        for m2 in divs:
            if math.lcm(m1, m2) == m:
                yield m1, m2


def _finding(tid, m, witness, expected, actual):
    return AuditFinding(tid, m, witness, expected, actual)


# ---------------------------------------------------------------- in series


def check_in02(m):
    c = _ctx(m)
    for a in range(1, m + 1):
        if canon(pow(a, c.mod.phi, m), m) not in c.Eset:
            yield _finding("in02", m, {"a": a}, "a^phi idempotent", "not idempotent")


def check_in12(m):
    c = _ctx(m)
    for a in range(1, m + 1):
        if canon(pow(a, c.mod.psi, m), m) not in c.Eset:
            yield _finding("in12", m, {"a": a}, "a^psi idempotent", "not idempotent")


def check_in03(m):
    c = _ctx(m)
    for a in range(1, m + 1):
        idems = set()
        x = 1 % m
        for k in range(1, 2 * c.mod.phi + 1):
            x = x * a % m
            v = canon(x, m)
            if v in c.Eset:
                idems.add(v)
        if len(idems) > 1:
            yield _finding(
                "in03", m, {"a": a}, "single idempotent power", sorted(idems)
            )


def check_in05(m):
    c = _ctx(m)
    for m1, m2 in _divisor_pairs(m):
        if m1 == m or m2 == m:
            continue
        e1 = set(oracle_idempotents(m1))
        e2 = set(oracle_idempotents(m2))
        for e in range(1, m + 1):
            both = canon(e, m1) in e1 and canon(e, m2) in e2
            if (canon(e, m) in c.Eset) != both:
                yield _finding(
                    "in05",
                    m,
                    {"m1": m1, "m2": m2, "e": e},
                    canon(e, m) in c.Eset,
                    both,
                )
                return


def check_in06(m):
    c = _ctx(m)
    brute = oracle_idempotents(m)
    if list(c.E) != brute:
        yield _finding("in06", m, {}, brute, list(c.E))
    if len(c.E) != 2**c.mod.omega:
        yield _finding("in06", m, {"size": True}, 2**c.mod.omega, len(c.E))


def check_in07(m):
    c = _ctx(m)
    for k in range(1, m + 1):
        size = len({canon(k * e, m) for e in c.E})
        expect = 2 ** build_modulus(m // math.gcd(k, m)).omega
        if size != expect:
            yield _finding("in07", m, {"k": k}, expect, size)


def check_in08(m):
    c = _ctx(m)
    for a in range(1, m + 1):
        if pow(a, c.mod.phi, m) != pow(math.gcd(a, m), c.mod.phi, m):
            yield _finding("in08", m, {"a": a}, "a^phi == gcd(a,m)^phi", "differs")


def check_in11(m):
    c = _ctx(m)
    for a in range(1, m + 1, max(1, m // 40)):
        for k in range(1, min(2 * c.mod.phi, 40) + 1):
            for n in range(k, k + 6):
                if pow(a, k + n, m) == pow(a, k, m):
                    if canon(pow(a, n, m), m) not in c.Eset:
                        yield _finding(
                            "in11", m, {"a": a, "k": k, "n": n},
                            "a^n idempotent", "not idempotent",
                        )


# ---------------------------------------------------------------- nn series


def _power_groups(m, a, bound):
    groups: dict[int, list[int]] = {}
    x = 1 % m
    for k in range(1, bound + 1):
        x = x * a % m
        groups.setdefault(x, []).append(k)
    return groups


def check_nn02(m):
    c = _ctx(m)
    phi = c.mod.phi
    for a in range(1, m + 1):
        n = order(m, a).order
        inference = all(
            all((k - ks[0]) % n == 0 for k in ks)
            for ks in _power_groups(m, a, 2 * phi).values()
        )
        if inference != (a in c.Nset):
            yield _finding("nn02", m, {"a": a}, a in c.Nset, inference)


def check_nn03(m):
    c = _ctx(m)
    for a in c.N:
        n = order(m, a).order
        for k in range(1, min(2 * c.mod.phi, 60) + 1):
            expect = n // math.gcd(k, n)
            actual = order(m, canon(pow(a, k, m), m)).order
            if actual != expect:
                yield _finding("nn03", m, {"a": a, "k": k}, expect, actual)


def check_nn04(m):
    for m1, m2 in _divisor_pairs(m):
        if m1 == m or m2 == m:
            continue
        n1 = {canon(a, m1) for a in _ctx(m1).N}
        n2 = {canon(a, m2) for a in _ctx(m2).N}
        for a in range(1, m + 1):
            if canon(a, m1) in n1 and canon(a, m2) in n2:
                if not is_normal(m, a):
                    yield _finding(
                        "nn04", m, {"m1": m1, "m2": m2, "a": a}, "normal", "not normal"
                    )
                    continue
                expect = math.lcm(order(m1, a).order, order(m2, a).order)
                actual = order(m, a).order
                if actual != expect:
                    yield _finding(
                        "nn04", m, {"m1": m1, "m2": m2, "a": a, "order": True},
                        expect, actual,
                    )


def check_nn05(m):
    c = _ctx(m)
    for a in c.N:
        x = 1 % m
        for n in range(1, min(2 * c.mod.phi, 40) + 1):
            x = x * a % m
            if canon(x, m) not in c.Nset:
                yield _finding("nn05", m, {"a": a, "n": n}, "normal", "not normal")


def check_nn06(m):
    for m1 in range(2, m):
        if m % m1 != 0:
            continue
        n1 = {canon(a, m1) for a in _ctx(m1).N}
        for a in range(1, m + 1):
            if canon(a, m1) in n1:
                if order(m, a).order % order(m1, a).order != 0:
                    yield _finding(
                        "nn06", m, {"m1": m1, "a": a},
                        f"|a|_{m1} divides |a|_{m}",
                        (order(m1, a).order, order(m, a).order),
                    )


def check_nn07(m):
    c = _ctx(m)
    for b in c.N:
        nb = order(m, b).order
        eb = idem_class(m, b)
        seen: dict[int, int] = {}
        x = 1 % m
        for k in range(1, 2 * c.mod.phi + 1):
            x = x * b % m
            seen.setdefault(canon(x, m), k)
        for a, ind in seen.items():
            if a not in c.Nset or idem_class(m, a) != eb:
                continue
            for k in range(1, 16):
                g = math.gcd(k, nb)
                if canon(pow(a, nb // g, m), m) in c.Eset and ind % g != 0:
                    yield _finding(
                        "nn07", m, {"a": a, "b": b, "k": k},
                        "(k,|b|) | ind_b(a)", (g, ind),
                    )


def check_nn08(m):
    c = _ctx(m)
    for a in c.N:
        inv = signed_power(m, a, -1)
        if not is_normal(m, inv):
            yield _finding("nn08", m, {"a": a}, "inverse normal", "not normal")
        if order(m, inv).order != order(m, a).order:
            yield _finding(
                "nn08", m, {"a": a, "order": True},
                order(m, a).order, order(m, inv).order,
            )


def check_nn08_third(m):
    """The claimed identity (a^-1)^-1 = a^(|a|+1) for all normal a.  It fails
    for normal non-regular a (e.g. m=12, a=2), so it is reported, not
    asserted elsewhere."""
    c = _ctx(m)
    for a in c.N:
        inv2 = signed_power(m, signed_power(m, a, -1), -1)
        rhs = canon(pow(a, order(m, a).order + 1, m), m)
        if inv2 != rhs:
            yield _finding("nn08-third", m, {"a": a}, inv2, rhs)


# ---------------------------------------------------------------- rn series


def check_rn02(m):
    c = _ctx(m)
    for a in c.R:
        if a not in c.Nset:
            yield _finding("rn02", m, {"a": a}, "regular implies normal", "not normal")


def check_rn03(m):
    c = _ctx(m)
    phi = c.mod.phi
    for a in range(1, m + 1):
        n = order(m, a).order
        groups = _power_groups(m, a, 2 * phi)
        forward = all(
            all((k - ks[0]) % n == 0 for k in ks) for ks in groups.values()
        )
        backward = all(
            pow(a, k, m) == pow(a, k + n, m) for k in range(1, min(n, 30) + 1)
        )
        if (forward and backward) != (a in c.Rset):
            yield _finding("rn03", m, {"a": a}, a in c.Rset, (forward, backward))
        if a in c.Rset:
            x = 1 % m
            for k in range(1, 2 * n + 1):
                x = x * a % m
                if (canon(x, m) in c.Eset) != (k % n == 0):
                    yield _finding(
                        "rn03", m, {"a": a, "k": k, "second": True},
                        k % n == 0, canon(x, m) in c.Eset,
                    )


def check_rn06(m):
    c = _ctx(m)
    for e, members in c.by_class.items():
        ms = set(members)
        for a in members:
            if canon(a * e, m) != a:
                yield _finding("rn06", m, {"e": e, "a": a}, "e is identity", "fails")
            inv = signed_power(m, a, -1)
            if inv not in ms or canon(a * inv, m) != e:
                yield _finding("rn06", m, {"e": e, "a": a}, "inverse in class", inv)
            if sum(1 for b in members if canon(a * b, m) == e) != 1:
                yield _finding("rn06", m, {"e": e, "a": a}, "unique inverse", "fails")
        for a in members[::3] or members:
            for b in members[::3] or members:
                if canon(a * b, m) not in ms:
                    yield _finding("rn06", m, {"e": e, "a": a, "b": b},
                                   "closure", canon(a * b, m))


def check_rn07(m):
    c = _ctx(m)
    phi = c.mod.phi
    pts = sorted({-2 * phi, -phi, -3, -2, -1, 1, 2, 3, phi, 2 * phi})
    for a in c.R[:: max(1, len(c.R) // 25)]:
        for n in range(1, min(2 * phi, 12) + 1):
            if signed_power(m, pow(a, n, m), -1) != signed_power(m, a, -n):
                yield _finding("rn07", m, {"a": a, "n": n},
                               "(a^n)^-1 == a^-n", "differs")
        for i in pts:
            for j in pts:
                lhs = signed_power(m, a, i + j) if i + j != 0 else signed_power(m, a, 0)
                rhs = canon(signed_power(m, a, i) * signed_power(m, a, j), m)
                if lhs != rhs:
                    yield _finding("rn07", m, {"a": a, "i": i, "j": j}, lhs, rhs)


def check_rn09(m):
    c = _ctx(m)
    for b in c.R[:: max(1, len(c.R) // 20)]:
        nb = c.orders[b]
        for cc in c.by_class[c.classes[b]]:
            tgt = c.orbits[cc]
            for n in range(1, min(2 * nb, 12) + 1):
                for k in range(n, min(2 * nb, 12) + 1):
                    lhs = (
                        canon(pow(b, n, m), m) in tgt
                        and canon(pow(b, k, m), m) in tgt
                    )
                    rhs = canon(pow(b, math.gcd(n, k), m), m) in tgt
                    if lhs != rhs:
                        yield _finding(
                            "rn09", m, {"b": b, "c": cc, "n": n, "k": k}, rhs, lhs
                        )


def check_rn11(m):
    c = _ctx(m)
    for e, members in c.by_class.items():
        for b in members:
            nb = c.orders[b]
            for cc in members:
                D = orbit_gcd(m, b, cc)
                inter = c.orbits[b] & c.orbits[cc]
                if nb % D != 0:
                    yield _finding("rn11", m, {"b": b, "c": cc}, "D | |b|", D)
                if canon(pow(b, D, m), m) not in c.orbits[cc]:
                    yield _finding("rn11", m, {"b": b, "c": cc, "power": True},
                                   "b^D in orb(c)", D)
                if inter != c.orbits[canon(pow(b, D, m), m)]:
                    yield _finding("rn11", m, {"b": b, "c": cc, "orbits": True},
                                   "orb(b) & orb(c) == orb(b^D)", D)
                if len(inter) != nb // D:
                    yield _finding("rn11", m, {"b": b, "c": cc, "size": True},
                                   nb // D, len(inter))
                for k in range(1, min(2 * nb, 10) + 1):
                    if (canon(pow(b, k, m), m) in c.orbits[cc]) != (k % D == 0):
                        yield _finding("rn11", m, {"b": b, "c": cc, "k": k},
                                       k % D == 0, "membership differs")


def check_rn13(m):
    c = _ctx(m)
    for e, members in c.by_class.items():
        for b in members:
            nb = c.orders[b]
            for a, ind in c.ind[b].items():
                for k in range(1, 13):
                    g = math.gcd(k, nb)
                    lhs = ind % g == 0
                    rhs = canon(pow(a, nb // g, m), m) in c.Eset
                    if lhs != rhs:
                        yield _finding("rn13", m, {"a": a, "b": b, "k": k}, lhs, rhs)


def check_rn14(m):
    c = _ctx(m)
    for e, members in c.by_class.items():
        for a in members:
            na = c.orders[a]
            for b in members:
                nb = c.orders[b]
                nab = c.orders[canon(a * b, m)]
                g, l = math.gcd(na, nb), math.lcm(na, nb)
                if (g == 1) != (nab == na * nb):
                    yield _finding("rn14", m, {"a": a, "b": b, "first": True},
                                   g == 1, nab == na * nb)
                if l % nab != 0 or nab % (l // g) != 0:
                    yield _finding("rn14", m, {"a": a, "b": b, "second": True},
                                   f"{l // g} | |ab| | {l}", nab)
                if pow(a, nb, m) == pow(b, na, m) and na != nb:
                    yield _finding("rn14", m, {"a": a, "b": b, "third": True},
                                   "equal orders", (na, nb))


def check_rn15(m):
    c = _ctx(m)
    for e, members in c.by_class.items():
        step = max(1, len(members) // 12)
        for b in members[::step]:
            for cc in members[::step]:
                inter = c.orbits[b] & c.orbits[cc]
                target = math.lcm(c.orders[b], c.orders[cc])
                for a in sorted(inter)[:3]:
                    try:
                        d = join_witness(m, b, cc, a)
                    except AssertionError:
                        yield _finding("rn15", m, {"b": b, "c": cc, "a": a},
                                       f"witness of order {target}", "none found")
                        continue
                    if c.orders[d] != target or a not in c.orbits[d]:
                        yield _finding("rn15", m, {"b": b, "c": cc, "a": a},
                                       f"witness of order {target}", d)


def check_rn16(m):
    c = _ctx(m)
    for a in range(1, m + 1):
        dfn = oracle_is_regular(m, a)
        div = is_regular(m, a)
        gcd_char = math.gcd(a, m // math.gcd(a, m)) == 1
        gcd_member = is_regular(m, math.gcd(a, m))
        if not (dfn == div == gcd_char == gcd_member):
            yield _finding("rn16", m, {"a": a},
                           "all characterizations agree",
                           (dfn, div, gcd_char, gcd_member))


def check_rn17(m):
    c = _ctx(m)
    for a in c.N:
        lhs = a in c.Rset
        rhs = signed_power(m, signed_power(m, a, -1), -1) == a
        if lhs != rhs:
            yield _finding("rn17", m, {"a": a}, lhs, rhs)


def check_rn18(m):
    c = _ctx(m)
    phi = c.mod.phi
    for a in range(1, m + 1):
        am = pow(a, m, m)
        if m - phi >= 1 and (am != pow(a, m - phi, m) or am != pow(a, m + phi, m)):
            yield _finding("rn18", m, {"a": a}, "a^m == a^(m-phi) == a^(m+phi)",
                           "differs")
        if m - phi >= 1 and not is_regular(m, pow(a, m - phi, m)):
            yield _finding("rn18", m, {"a": a, "reg": True},
                           "a^(m-phi) regular", "not regular")
        if phi >= 2 and a in c.Nset and order(m, a).order < phi:
            if not is_regular(m, pow(a, phi - 1, m)):
                yield _finding("rn18", m, {"a": a, "third": True},
                               "a^(phi-1) regular", "not regular")


def check_rn19(m):
    c = _ctx(m)
    if (len(c.R) == m) != c.mod.square_free:
        yield _finding("rn19", m, {}, c.mod.square_free, len(c.R) == m)


def check_rn20(m):
    for a in range(1, m + 1):
        if is_regular(m, a) != oracle_is_regular(m, a):
            yield _finding("rn20", m, {"a": a},
                           oracle_is_regular(m, a), is_regular(m, a))


def check_rn21(m):
    c = _ctx(m)
    phi = c.mod.phi
    for a in range(1, m + 1):
        exists = any(pow(a, n, m) == a % m for n in range(2, 2 * phi + 2))
        if exists != (a in c.Rset):
            yield _finding("rn21", m, {"a": a}, a in c.Rset, exists)


def check_rn22(m):
    c = _ctx(m)
    for m1, m2 in _divisor_pairs(m):
        if m1 == m or m2 == m:
            continue
        r1 = {canon(a, m1) for a in _ctx(m1).R}
        r2 = {canon(a, m2) for a in _ctx(m2).R}
        for a in range(1, m + 1):
            both = canon(a, m1) in r1 and canon(a, m2) in r2
            if (a in c.Rset) != both:
                yield _finding("rn22", m, {"m1": m1, "m2": m2, "a": a},
                               both, a in c.Rset)
            elif a in c.Rset:
                expect = math.lcm(order(m1, a).order, order(m2, a).order)
                if order(m, a).order != expect:
                    yield _finding("rn22", m,
                                   {"m1": m1, "m2": m2, "a": a, "order": True},
                                   expect, order(m, a).order)


def check_rn23(m):
    c = _ctx(m)
    pps = c.mod.prime_powers
    for a in range(1, m + 1):
        comp = all(is_regular(q, a) for q in pps)
        if (a in c.Rset) != comp:
            yield _finding("rn23", m, {"a": a}, comp, a in c.Rset)
        elif a in c.Rset:
            expect = lcm_all(order(q, a).order for q in pps)
            if order(m, a).order != expect:
                yield _finding("rn23", m, {"a": a, "order": True},
                               expect, order(m, a).order)
    formula = 1
    for p, al in c.mod.factorization.factors:
        formula *= 1 + p ** (al - 1) * (p - 1)
    if len(c.R) != formula:
        yield _finding("rn23", m, {"size": True}, formula, len(c.R))


def check_rn24(m):
    c = _ctx(m)
    for a in c.R[:: max(1, len(c.R) // 20)]:
        na = c.orders[a]
        for b in c.N:
            nbm = order(m, b).order
            if nbm % na != 0:
                continue
            for n in range(1, 11):
                if canon(pow(b, n, m), m) in c.orbits[a]:
                    if index(m, b, canon(pow(a, n, m), m)) is None:
                        yield _finding("rn24", m, {"a": a, "b": b, "n": n},
                                       "ind_b(a^n) exists", "missing")


def check_rn25(m):
    c = _ctx(m)
    for a in c.R[:: max(1, len(c.R) // 20)]:
        for b in c.R[:: max(1, len(c.R) // 20)]:
            if c.orders[a] != c.orders[b]:
                continue
            for n in range(1, 11):
                lhs = canon(pow(b, n, m), m) in c.orbits[a]
                rhs = canon(pow(a, n, m), m) in c.orbits[b]
                if lhs != rhs:
                    yield _finding("rn25", m, {"a": a, "b": b, "n": n}, lhs, rhs)


def check_rn26(m):
    c = _ctx(m)
    for a in c.R[:: max(1, len(c.R) // 20)]:
        for b in c.R[:: max(1, len(c.R) // 20)]:
            nb = c.orders[b]
            for n in range(1, min(2 * nb, 10) + 1):
                if math.gcd(n, nb) == 1 and canon(pow(b, n, m), m) in c.orbits[a]:
                    if not c.orbits[b] <= c.orbits[a]:
                        yield _finding("rn26", m, {"a": a, "b": b, "n": n},
                                       "orb(b) subset of orb(a)", "not contained")


def check_rn27(m):
    c = _ctx(m)
    for a in c.R[:: max(1, len(c.R) // 20)]:
        na = c.orders[a]
        for b in c.R[:: max(1, len(c.R) // 20)]:
            nb = c.orders[b]
            if na % nb != 0:
                continue
            for n in range(1, min(2 * nb, 10) + 1):
                if math.gcd(n, nb) == 1 and canon(pow(a, n, m), m) in c.orbits[b]:
                    if not c.orbits[b] <= c.orbits[a]:
                        yield _finding("rn27", m, {"a": a, "b": b, "n": n},
                                       "orb(b) subset of orb(a)", "not contained")


def check_rn28(m):
    c = _ctx(m)
    for a in c.R[:: max(1, len(c.R) // 20)]:
        na = c.orders[a]
        for b in c.R[:: max(1, len(c.R) // 20)]:
            lhs = c.orbits[a] == c.orbits[b]
            rhs = c.orders[b] == na and any(
                math.gcd(n, na) == 1 and canon(pow(a, n, m), m) in c.orbits[b]
                for n in range(1, na + 1)
            )
            if lhs != rhs:
                yield _finding("rn28", m, {"a": a, "b": b}, lhs, rhs)


def check_rn29(m):
    c = _ctx(m)
    for a in c.R[:: max(1, len(c.R) // 16)]:
        na = c.orders[a]
        for b in c.R[:: max(1, len(c.R) // 16)]:
            if c.orders[b] % na != 0:
                continue
            joint = any(
                a in c.orbits[cc] and b in c.orbits[cc] for cc in c.R
            )
            if joint != (a in c.orbits[b]):
                yield _finding("rn29", m, {"a": a, "b": b}, a in c.orbits[b], joint)


def check_rn30(m):
    c = _ctx(m)
    for b in c.R:
        nb = c.orders[b]
        for a, ind in c.ind[b].items():
            for d in range(1, nb + 1):
                if nb % d != 0:
                    continue
                lhs = c.orders[a] == d
                q, r = divmod(ind * d, nb)
                rhs = r == 0 and math.gcd(q, d) == 1
                if lhs != rhs:
                    yield _finding("rn30", m, {"a": a, "b": b, "d": d}, lhs, rhs)


def check_rn31(m):
    c = _ctx(m)
    for e in c.E:
        lhs = set(c.by_class.get(e, []))
        rhs = {
            canon(e * a, m)
            for a in range(1, m + 1)
            if canon(pow(a, order(m, a).order, m), m) == e
        }
        if lhs != rhs:
            yield _finding("rn31", m, {"e": e}, sorted(lhs), sorted(rhs))


def check_rn32(m):
    c = _ctx(m)
    for e, members in c.by_class.items():
        for a in members:
            for b in members:
                if math.gcd(c.orders[a], c.orders[b]) == 1:
                    if c.orbits[a] & c.orbits[b] != {e}:
                        yield _finding("rn32", m, {"a": a, "b": b},
                                       {e}, sorted(c.orbits[a] & c.orbits[b]))


def check_rn33(m):
    c = _ctx(m)
    for e, members in c.by_class.items():
        step = max(1, len(members) // 14)
        for a in members[::step]:
            na = c.orders[a]
            for b in members[::step]:
                nb = c.orders[b]
                dab = orbit_gcd(m, a, b)
                dba = orbit_gcd(m, b, a)
                if (dab == dba) != (na == nb):
                    yield _finding("rn33", m, {"a": a, "b": b, "first": True},
                                   na == nb, dab == dba)
                if dab * nb != dba * na:
                    yield _finding("rn33", m, {"a": a, "b": b, "second": True},
                                   "D(a,b)/D(b,a) == |a|/|b|", (dab, dba, na, nb))
                inner = c.orders[canon(pow(a, dab, m), m)]
                if dab != c.orders[canon(pow(a, inner, m), m)]:
                    yield _finding("rn33", m, {"a": a, "b": b, "third": True},
                                   dab, c.orders[canon(pow(a, inner, m), m)])
                for n in range(1, 7):
                    if orbit_gcd(m, canon(pow(a, n, m), m), b) != dab // math.gcd(n, dab):
                        yield _finding("rn33", m,
                                       {"a": a, "b": b, "n": n, "fourth": True},
                                       dab // math.gcd(n, dab),
                                       orbit_gcd(m, canon(pow(a, n, m), m), b))
                    if math.gcd(na // dab, dba) == 1:
                        got = orbit_gcd(m, a, canon(pow(b, n, m), m))
                        want = dab * math.gcd(n, na // dab)
                        if got != want:
                            yield _finding("rn33", m,
                                           {"a": a, "b": b, "n": n, "fifth": True},
                                           want, got)


def check_rn35(m):
    c = _ctx(m)
    for e, members in c.by_class.items():
        step = max(1, len(members) // 14)
        for a in members[::step]:
            na = c.orders[a]
            for b in members[::step]:
                nb = c.orders[b]
                rab = relative_order(m, a, b)
                if rab != relative_order(m, b, a):
                    yield _finding("rn35", m, {"a": a, "b": b, "sym": True},
                                   rab, relative_order(m, b, a))
                if relative_order(m, a, a) != na:
                    yield _finding("rn35", m, {"a": a, "self": True},
                                   na, relative_order(m, a, a))
                if math.gcd(na, nb) == 1 and rab != 1:
                    yield _finding("rn35", m, {"a": a, "b": b, "coprime": True},
                                   1, rab)
                if b in c.orbits[a] and rab != nb:
                    yield _finding("rn35", m, {"a": a, "b": b, "member": True},
                                   nb, rab)
                dab = orbit_gcd(m, a, b)
                for n in range(1, 7):
                    if math.gcd(rab, dab) == 1:
                        got = relative_order(m, canon(pow(a, n, m), m), b)
                        want = rab // math.gcd(n, rab)
                        if got != want:
                            yield _finding("rn35", m,
                                           {"a": a, "b": b, "n": n, "fifth": True},
                                           want, got)
                    for k in range(1, 5):
                        bk = canon(pow(b, k, m), m)
                        if math.gcd(rab, orbit_gcd(m, a, bk) * orbit_gcd(m, b, a)) == 1:
                            got = relative_order(m, canon(pow(a, n, m), m), bk)
                            want = rab // math.gcd(n * math.gcd(k, rab), rab)
                            if got != want:
                                yield _finding("rn35", m,
                                               {"a": a, "b": b, "n": n, "k": k,
                                                "sixth": True},
                                               want, got)


def check_rn36(m):
    c = _ctx(m)
    for e in c.E:
        m1 = mu(m, e)
        m2 = m // m1
        decomps = [
            (d, m // d)
            for d in range(1, m + 1)
            if m % d == 0 and e % d == 1 % d and e % (m // d) == 0
        ]
        if decomps != [(m1, m2)]:
            yield _finding("rn36", m, {"e": e}, [(m1, m2)], decomps)
        for a in range(1, m + 1):
            member = math.gcd(a, m1) == 1 and a % m2 == 0
            in_class = a in c.Rset and c.classes.get(a) == e
            if member != in_class:
                yield _finding("rn36", m, {"e": e, "a": a}, in_class, member)
            elif member and order(m, a).order != order(m1, a).order:
                yield _finding("rn36", m, {"e": e, "a": a, "order": True},
                               order(m1, a).order, order(m, a).order)


def check_rn38(m):
    c = _ctx(m)
    for a in c.R:
        na = c.orders[a]
        for d in range(1, na + 1):
            if na % d:
                continue
            count = sum(1 for b in c.orbits[a] if c.orders[b] == d)
            if count != build_modulus(d).phi:
                yield _finding("rn38", m, {"a": a, "d": d},
                               build_modulus(d).phi, count)
        eq_count = sum(
            1
            for b in c.by_class[c.classes[a]]
            if c.orders[b] == na and a in c.orbits[b]
        )
        if eq_count != build_modulus(na).phi:
            yield _finding("rn38", m, {"a": a, "equiv": True},
                           build_modulus(na).phi, eq_count)


def check_rn40(m):
    c = _ctx(m)
    def equiv(x, y):
        return (
            c.classes[x] == c.classes[y]
            and c.orders[x] == c.orders[y]
            and x in c.orbits[y]
        )
    sampled = c.R[:: max(1, len(c.R) // 14)]
    for a in sampled:
        if not equiv(a, a):
            yield _finding("rn40", m, {"a": a}, "reflexive", "fails")
        for b in sampled:
            if equiv(a, b) != equiv(b, a):
                yield _finding("rn40", m, {"a": a, "b": b}, "symmetric", "fails")
            for cc in sampled:
                if equiv(a, b) and equiv(b, cc) and not equiv(a, cc):
                    yield _finding("rn40", m, {"a": a, "b": b, "c": cc},
                                   "transitive", "fails")


def check_rn41(m):
    c = _ctx(m)
    for b in c.N:
        walk = set()
        x = 1 % m
        for _ in range(2 * c.mod.phi):
            x = x * b % m
            walk.add(canon(x, m))
        nbm = order(m, b).order
        for a in walk:
            if a not in c.Rset:
                continue
            e = c.classes[a]
            cand = canon(b * e, m)
            ok = (
                cand in c.Rset
                and c.classes.get(cand) == e
                and c.orders[cand] == nbm
                and a in c.orbits[cand]
            )
            if not ok:
                ok = any(
                    c.orders[cc] == nbm and a in c.orbits[cc]
                    for cc in c.by_class[e]
                )
            if not ok:
                yield _finding("rn41", m, {"a": a, "b": b},
                               f"witness of order {nbm}", "none")


def check_rn42(m):
    if m % 2 == 0:
        return
    c = _ctx(m)
    for e in c.E:
        om = build_modulus(mu(m, e)).omega
        sign = (-1) ** (2 ** (om - 1)) if om >= 1 else -1
        expect = canon(sign * e, m)
        actual = class_product(m, e)
        if actual != expect:
            yield _finding("rn42", m, {"e": e}, expect, actual)


# ---------------------------------------------------------------- bc series


def check_bc01(m):
    c = _ctx(m)
    for k in range(1, 31):
        img = c.images(k)
        for a in c.R:
            oracle = a % m in img
            if solvable_bc01(m, k, a) != oracle:
                yield _finding("bc01", m, {"a": a, "k": k},
                               oracle, not oracle)


def check_bc03(m):
    c = _ctx(m)
    phi = c.mod.phi
    for a in range(1, m + 1):
        for k in range(1, 31):
            if a % m in c.images(k):
                if canon(pow(a, phi // math.gcd(k, phi), m), m) not in c.Eset:
                    yield _finding("bc03", m, {"a": a, "k": k},
                                   "necessary condition", "violated")


def check_bc04(m):
    c = _ctx(m)
    for b in c.R[:: max(1, len(c.R) // 16)]:
        nb = c.orders[b]
        for a, ind in c.ind[b].items():
            for k in range(1, 13):
                if ind % math.gcd(k, nb) == 0:
                    if a % m not in c.images(k):
                        yield _finding("bc04", m, {"a": a, "b": b, "k": k},
                                       "solvable", "unsolvable")


def check_bc05(m):
    c = _ctx(m)
    for b in c.R[:: max(1, len(c.R) // 10)]:
        nb = c.orders[b]
        e_nb = set(oracle_idempotents(nb))
        for a, ind in c.ind[b].items():
            if not is_regular(nb, ind):
                continue
            e = idem_class(nb, ind)
            for k in range(1, 9):
                if a % m not in c.images(k):
                    continue
                for l in range(1, nb + 1):
                    kl = canon(k * l, nb)
                    if kl != e or not is_regular(nb, kl):
                        continue
                    for n in range(1, 4):
                        exp = l * ind + n * (nb // math.gcd(k, nb))
                        x = canon(pow(b, exp, m), m)
                        if pow(x, k, m) != a % m:
                            yield _finding(
                                "bc05", m,
                                {"a": a, "b": b, "k": k, "l": l, "n": n},
                                "power lands in solution set", x,
                            )


def check_bc06(m):
    c = _ctx(m)
    for e, members in c.by_class.items():
        for k in range(1, 13):
            reg_count: dict[int, int] = {}
            for x in c.R:
                t = pow(x, k, m)
                reg_count[t] = reg_count.get(t, 0) + 1
            se = reg_count.get(e % m, 0)
            for a in members:
                na = reg_count.get(a % m, 0)
                if na and na != se:
                    yield _finding("bc06", m, {"a": a, "e": e, "k": k}, se, na)


def check_bc07(m):
    c = _ctx(m)
    for k in range(1, 13):
        img = c.images(k)
        reg_img = {pow(x, k, m) for x in c.R}
        for a in c.R:
            if a % m in img and a % m not in reg_img:
                yield _finding("bc07", m, {"a": a, "k": k},
                               "regular solution exists", "none regular")


def check_bc08(m):
    c = _ctx(m)
    ks = list(range(1, 9))
    for a in c.R:
        for k1 in ks:
            for k2 in ks:
                both = a % m in c.images(k1) and a % m in c.images(k2)
                joint = a % m in c.images(math.lcm(k1, k2))
                if both != joint:
                    yield _finding("bc08", m, {"a": a, "k1": k1, "k2": k2},
                                   both, joint)


def check_bc09(m):
    c = _ctx(m)
    phi, psi = c.mod.phi, c.mod.psi
    for a in c.R:
        for k in range(1, 31):
            mk = a % m in c.images(k)
            for k2 in (math.gcd(k, phi), math.gcd(k, psi)):
                if mk != (a % m in c.images(k2)):
                    yield _finding("bc09", m, {"a": a, "k": k, "k2": k2},
                                   mk, not mk)


# ---------------------------------------------------------------- pr series


def check_pr02(m):
    c = _ctx(m)
    G = set(gen_primitive_roots(m))
    for a in c.R:
        info = omega_info(m, a)
        extra = [b for b in info.omega_set if b not in G]
        if extra:
            yield _finding("pr02", m, {"a": a}, "Omega(a) subset of G", extra)
    for g in G:
        if g not in omega_info(m, g).omega_set:
            yield _finding("pr02", m, {"g": g}, "g in Omega(g)", "missing")
    if not G:
        yield _finding("pr02", m, {}, "G nonempty", "empty")


def check_pr03(m):
    c = _ctx(m)
    sampled = c.R[:: max(1, len(c.R) // 20)]
    for a in sampled:
        for b in sampled:
            if (
                c.classes[a] == c.classes[b]
                and c.orders[a] == c.orders[b]
                and a in c.orbits[b]
            ):
                wa = omega_info(m, a).omega_a
                wb = omega_info(m, b).omega_a
                if wa != wb:
                    yield _finding("pr03", m, {"a": a, "b": b}, wa, wb)


def check_pr04(m):
    for m1, m2 in _divisor_pairs(m):
        if m1 == m or m2 == m or m1 == 1 or m2 == 1:
            continue
        g1 = set(gen_primitive_roots(m1))
        g2 = set(gen_primitive_roots(m2))
        gm = set(gen_primitive_roots(m))
        for g in range(1, m + 1):
            if canon(g, m1) in g1 and canon(g, m2) in g2 and canon(g, m) not in gm:
                yield _finding("pr04", m, {"m1": m1, "m2": m2, "g": g},
                               "g in G_m", "missing")


def check_pr05(m):
    c = _ctx(m)
    for a in c.R[:: max(1, len(c.R) // 16)]:
        info = omega_info(m, a)
        for g in info.omega_set:
            ng = c.orders[g]
            for n in range(1, 2 * ng + 1):
                lhs = canon(pow(g, n, m), m) in info.omega_set
                rhs = math.gcd(n, ng) == 1
                if lhs != rhs:
                    yield _finding("pr05", m, {"a": a, "g": g, "n": n}, rhs, lhs)


def check_pr06(m):
    c = _ctx(m)
    for a in c.R[:: max(1, len(c.R) // 16)]:
        info = omega_info(m, a)
        oset = set(info.omega_set)
        for g in c.by_class[c.classes[a]]:
            if (g in oset) != (signed_power(m, g, -1) in oset):
                yield _finding("pr06", m, {"a": a, "g": g},
                               "closed under inverse", g)


def check_omega_phi_cyclic(m):
    """The remark that omega_m(a) = phi(m) is attained iff the unit-class
    group R_m^1 is cyclic."""
    c = _ctx(m)
    units = c.by_class.get(canon(1, m), [])
    cyclic = any(c.orders[u] == len(units) for u in units)
    attained = any(omega_info(m, a).omega_a == c.mod.phi for a in c.R)
    if cyclic != attained:
        yield _finding("omega-phi-cyclic", m, {}, cyclic, attained)


# ---------------------------------------------------------------- fs series


def check_fs02(m):
    c = _ctx(m)
    phi = c.mod.phi
    for e in c.E:
        mue = mu(m, e)
        for k in range(1, min(phi, 30) + 1):
            if r_count(m, e, k) != r_count(mue, canon(1, mue), k):
                yield _finding("fs02", m, {"e": e, "k": k},
                               r_count(mue, canon(1, mue), k), r_count(m, e, k))
            if rho_count(m, e, k) != rho_count(mue, canon(1, mue), k):
                yield _finding("fs02", m, {"e": e, "k": k, "rho": True},
                               rho_count(mue, canon(1, mue), k), rho_count(m, e, k))
    if c.mod.weakly_even:
        one = canon(1, m)
        for k1 in range(1, min(phi, 30) + 1):
            for k2 in range(k1, min(phi, 30) + 1):
                if math.gcd(k1, k2) != 1 or k1 * k2 > phi:
                    continue
                if r_count(m, one, k1 * k2) != r_count(m, one, k1) * r_count(m, one, k2):
                    yield _finding("fs02", m, {"k1": k1, "k2": k2, "mult": "r"},
                                   r_count(m, one, k1) * r_count(m, one, k2),
                                   r_count(m, one, k1 * k2))
                if rho_count(m, one, k1 * k2) != rho_count(m, one, k1) * rho_count(m, one, k2):
                    yield _finding("fs02", m, {"k1": k1, "k2": k2, "mult": "rho"},
                                   rho_count(m, one, k1) * rho_count(m, one, k2),
                                   rho_count(m, one, k1 * k2))


def check_fs03(m):
    c = _ctx(m)
    if not c.mod.weakly_even:
        return
    one = canon(1, m)
    for q in (2, 3, 5, 7, 11, 13):
        beta = 1
        while c.mod.psi % q**beta == 0:
            rho_f = rho_prime_power(m, q, beta)
            if rho_f != rho_count(m, one, q**beta):
                yield _finding("fs03", m, {"q": q, "beta": beta},
                               rho_count(m, one, q**beta), rho_f)
            prev = rho_count(m, one, q ** (beta - 1)) if beta > 1 else 1
            if r_count(m, one, q**beta) != rho_f - prev:
                yield _finding("fs03", m, {"q": q, "beta": beta, "r": True},
                               rho_f - prev, r_count(m, one, q**beta))
            beta += 1
    delta_count = sum(
        1 for p, al in c.mod.factorization.factors
        if (p ** (al - 1) * (p - 1)) % 2 == 0
    )
    if c.mod.psi % 2 == 0:
        if r_count(m, one, 2) != 2**delta_count - 1:
            yield _finding("fs03", m, {"q": 2, "beta": 1, "rq": True},
                           2**delta_count - 1, r_count(m, one, 2))


def check_fs04(m):
    c = _ctx(m)
    if not c.mod.weakly_even:
        return
    one = canon(1, m)
    for k in range(1, min(2 * c.mod.phi, 60) + 1):
        if rho_closed_form(m, k) != rho_count(m, one, k):
            yield _finding("fs04", m, {"k": k},
                           rho_count(m, one, k), rho_closed_form(m, k))


def check_fs05(m):
    c = _ctx(m)
    for e in c.E:
        for k in range(1, c.mod.phi + 1):
            res = orbit_union_size(m, e, k)
            if res.true_size != res.formula_value:
                yield _finding("fs05", m, {"e": e, "k": k},
                               res.formula_value, res.true_size)


def check_fs06(m):
    c = _ctx(m)
    if not c.mod.weakly_even:
        return
    phi = c.mod.phi
    for e in c.E:
        for k1 in range(1, min(phi, 24) + 1):
            for k2 in range(k1, min(phi, 24) + 1):
                if math.gcd(k1, k2) != 1 or k1 * k2 > phi:
                    continue
                u12 = orbit_union_size(m, e, k1 * k2).true_size
                u1 = orbit_union_size(m, e, k1).true_size
                u2 = orbit_union_size(m, e, k2).true_size
                if u12 != u1 * u2:
                    yield _finding("fs06", m, {"e": e, "k1": k1, "k2": k2},
                                   u1 * u2, u12)


def check_fs12(m):
    c = _ctx(m)
    if not c.mod.weakly_even:
        return
    for e in c.E:
        vals = {k: rho_count(m, e, k) for k in range(1, min(2 * c.mod.phi, 48) + 1)}
        for k1 in vals:
            for k2 in range(2 * k1, max(vals) + 1, k1):
                if vals[k2] % vals[k1] != 0:
                    yield _finding("fs12", m, {"e": e, "k1": k1, "k2": k2},
                                   "rho(k1) | rho(k2)", (vals[k1], vals[k2]))


_FS_CORPUS = ("phi", "psi", "identity", "const", "gcd:6", "gcd:12", "gcd:30")
_FS_BOUND = 120


def check_fs09(_m):
    for name in _FS_CORPUS:
        f = builtin_function(name)
        cls = classify_function(f, _FS_BOUND)
        vals = {x: f(x) for x in range(1, _FS_BOUND + 1)}
        split = True
        for a in range(1, _FS_BOUND + 1):
            for b in range(a, _FS_BOUND // a + 1):
                if math.gcd(a, b) == 1 and vals[a * b] != math.lcm(vals[a], vals[b]):
                    split = False
                    break
            if not split:
                break
        if cls.is_qm != (cls.is_di and split):
            yield _finding("fs09", 0, {"f": name}, cls.is_qm, (cls.is_di, split))


def check_fs10(_m):
    for name in _FS_CORPUS:
        f = builtin_function(name)
        cls = classify_function(f, _FS_BOUND)
        vals = {x: f(x) for x in range(1, _FS_BOUND + 1)}
        lcm_div = True
        for a in range(1, _FS_BOUND + 1):
            for b in range(a, _FS_BOUND + 1):
                l = math.lcm(a, b)
                if l <= _FS_BOUND and vals[l] % math.lcm(vals[a], vals[b]) != 0:
                    lcm_div = False
                    break
            if not lcm_div:
                break
        if cls.is_di != lcm_div:
            yield _finding("fs10", 0, {"f": name}, cls.is_di, lcm_div)


def check_fs11(_m):
    injectives = {"identity": lambda x: x, "shifted": lambda x: x * 2**x}
    for name, f in injectives.items():
        vals = {x: f(x) for x in range(1, 61)}
        cls = classify_function(f, 60)
        if not cls.is_qm:
            continue
        for a in range(1, 61):
            for b in range(1, 61):
                if (b % a == 0) != (vals[b] % vals[a] == 0):
                    yield _finding("fs11", 0, {"f": name, "a": a, "b": b},
                                   b % a == 0, vals[b] % vals[a] == 0)


def check_fs13(_m):
    lifts = {
        "phi-lift": lambda q: build_modulus(q).phi,
        "identity-lift": lambda q: q,
    }
    for name, g in lifts.items():
        f = lambda x: lcm_lift(g, x)
        cls = classify_function(f, _FS_BOUND)
        if not cls.is_qm:
            yield _finding("fs13", 0, {"g": name}, "lifted f in QM",
                           cls.witnesses.get("QM"))


# ---------------------------------------------------------------- ia series

_IA_LAWS = {
    "ia02": ("mixing-product", "mixing-power"),
    "ia03": ("closure",),
    "ia05": ("basis-map",),
    "ia06": ("circ-group", "circ-translation-injective"),
    "ia07": ("otimes-ring",),
    "ia08": ("circ-group", "otimes-ring"),
    "ia09": ("identity-catalog",),
    "ia10": ("identity-catalog", "otimes-nary"),
    "ia11": ("shift-decomposition", "otimes-nary", "identity-catalog"),
}


def _ia_check(tid):
    def run(m):
        rep = _algebra_report(m)
        for law in rep.laws:
            if law.law in _IA_LAWS[tid] and not law.passed:
                yield _finding(tid, m, {"law": law.law}, "law holds",
                               law.counterexample)
    return run


# ---------------------------------------------------------------- sd series


def check_sd02(m):
    c = _ctx(m)
    for k in range(1, m + 1):
        if math.gcd(k, m) != 1:
            continue
        scan = {x for x in range(1, m + 1) if x * x % m == k * x % m}
        built = {canon(k * e, m) for e in c.E}
        if scan != built:
            yield _finding("sd02", m, {"k": k}, sorted(built), sorted(scan))


def check_sd03(m):
    for a in range(0, min(m, 8)):
        for b in range(a + 1, a + 1 + min(m, 8)):
            if math.gcd(b - a, m) != 1:
                continue
            roots = [r for r in range(1, m + 1) if (r - a) * (r - b) % m == 0]
            seen = set()
            for r in roots:
                try:
                    e = root_decompose(m, a, b, r)
                except (AssertionError, ValueError) as exc:
                    yield _finding("sd03", m, {"a": a, "b": b, "r": r},
                                   "unique idempotent decomposition", str(exc))
                    continue
                if e in seen:
                    yield _finding("sd03", m, {"a": a, "b": b, "r": r},
                                   "distinct idempotents per root", e)
                seen.add(e)


def check_sd04(m):
    c = _ctx(m)
    for a in range(1, m + 1):
        if math.gcd(2 * a, m) != 1:
            continue
        roots = [r for r in range(1, m + 1) if r * r % m == a % m]
        for r1 in roots:
            matches = [
                e for e in c.E if canon(r1 - roots[0] * (2 * e - 1), m) == m
            ]
            if len(matches) != 1:
                yield _finding("sd04", m, {"a": a, "r1": r1, "r2": roots[0]},
                               "unique e with r1 = r2(e - ebar)", matches)


def check_sd05(m):
    v2 = 0
    mm = m
    while mm % 2 == 0:
        mm //= 2
        v2 += 1
    if not (v2 == 0 or (v2 == 2 and mm % 2 == 1)):
        return
    c = _ctx(m)
    roots = {r for r in range(1, m + 1) if r * r % m == 1 % m}
    images = {canon(2 * e - 1, m) for e in c.E}
    if roots != images or len(images) != len(c.E):
        yield _finding("sd05", m, {}, sorted(roots), sorted(images))


def check_sd07(m):
    c = _ctx(m)
    for k in range(1, m + 1, max(1, m // 12)):
        ker = kernel(m, k)
        sols = set(ker.solutions)
        for r in ker.solutions:
            if ker.rbar(r) not in sols:
                yield _finding("sd07", m, {"k": k, "r": r}, "rbar closed", ker.rbar(r))
            for e in c.E:
                for which in ("circ", "otimes"):
                    out = kernel_op(m, k, r, e, which)
                    if out not in sols:
                        yield _finding("sd07", m, {"k": k, "r": r, "e": e,
                                                   "op": which},
                                       "closed", out)


def check_sd08(m):
    c = _ctx(m)
    for k in range(1, m + 1, max(1, m // 12)):
        ker = kernel(m, k)
        for e in c.E:
            image = {kernel_op(m, k, r, e, "circ") for r in ker.solutions}
            if image != set(ker.solutions):
                yield _finding("sd08", m, {"k": k, "e": e},
                               "circ-translation permutes kernel",
                               sorted(image))


def check_sd10(m):
    c = _ctx(m)
    for e in c.E:
        ker = kernel(m, e)
        sols = set(ker.solutions)
        rs = list(ker.solutions)[:: max(1, len(ker.solutions) // 10)]
        for r1 in rs:
            for r2 in rs:
                for which in ("circ", "otimes"):
                    out = class_kernel_op(m, e, r1, r2, which)
                    if out not in sols:
                        yield _finding("sd10", m, {"e": e, "r1": r1, "r2": r2,
                                                   "op": which},
                                       "closed", out)


def check_sd11(m):
    c = _ctx(m)
    for e in c.E:
        members = c.by_class.get(e, [])
        ker = kernel(m, e)
        step = max(1, len(members) // 8)
        for r in list(ker.solutions)[:: max(1, len(ker.solutions) // 6)]:
            rb = canon(e - r, m)
            for a in members[::step]:
                for b in members[::step]:
                    for cd, d in ((2, 5), (3, 7), (m - 1, 11)):
                        lhs = (a * r + b * rb) * (cd * r + d * rb) % m
                        rhs = (a * cd % m * r + b * d % m * rb) % m
                        if lhs != rhs:
                            yield _finding("sd11", m,
                                           {"e": e, "r": r, "a": a, "b": b,
                                            "c": cd, "d": d},
                                           rhs, lhs)
                    for n in (2, 3, 5):
                        lhs = pow(a * r + b * rb, n, m)
                        rhs = (pow(a, n, m) * r + pow(b, n, m) * rb) % m
                        if lhs != rhs:
                            yield _finding("sd11", m,
                                           {"e": e, "r": r, "a": a, "b": b,
                                            "n": n},
                                           rhs, lhs)


def check_sd12(m):
    c = _ctx(m)
    for e, members in c.by_class.items():
        ms = set(members)
        for k in members:
            inter = {x for x in kernel(m, k).solutions if x in ms}
            if inter != {k}:
                yield _finding("sd12", m, {"e": e, "k": k}, [k], sorted(inter))


def check_sd13(m):
    c = _ctx(m)
    for k in range(1, m + 1, max(1, m // 12)):
        ker = kernel(m, k)
        for r in ker.solutions:
            for e in c.E:
                eb = canon(1 - e, m)
                lhs = canon(k - kernel_op(m, k, r, e, "circ"), m)
                if lhs != kernel_op(m, k, r, eb, "circ"):
                    yield _finding("sd13", m, {"k": k, "r": r, "e": e},
                                   "bar of r o e == r o ebar", lhs)
                if lhs != kernel_op(m, k, ker.rbar(r), e, "circ"):
                    yield _finding("sd13", m, {"k": k, "r": r, "e": e,
                                               "second": True},
                                   "bar of r o e == rbar o e", lhs)
                for e2 in c.E:
                    left = kernel_op(m, k, kernel_op(m, k, r, e, "circ"), e2, "circ")
                    right = kernel_op(
                        m, k, r,
                        canon(e * e2 + (1 - e) * (1 - e2), m), "circ",
                    )
                    if left != right:
                        yield _finding("sd13", m, {"k": k, "r": r, "e1": e,
                                                   "e2": e2, "assoc": True},
                                       right, left)


def check_sd14(m):
    c = _ctx(m)
    for k in range(1, m + 1):
        if math.gcd(k, m) != 1:
            continue
        ker = kernel(m, k)
        for r in ker.solutions:
            images = {}
            for e in c.E:
                out = kernel_op(m, k, r, e, "circ")
                if out in images and images[out] != e:
                    yield _finding("sd14", m, {"k": k, "r": r},
                                   "injective in e", (images[out], e))
                images[out] = e


def check_sd15(m):
    if m % 2 == 0:
        return
    c = _ctx(m)
    for e in c.E:
        rep = sqrt_structure(m, e)
        if len(rep.roots) != rep.size_formula:
            yield _finding("sd15", m, {"e": e}, rep.size_formula, len(rep.roots))
        if rep.product != rep.product_formula:
            yield _finding("sd15", m, {"e": e, "product": True},
                           rep.product_formula, rep.product)
        images = {canon(e * (2 * e0 - 1), m) for e0 in c.E}
        stray = [r for r in rep.roots if r not in images]
        if stray:
            yield _finding("sd15", m, {"e": e, "parametrization": True},
                           "roots of form e(e0 - ebar0)", stray)
        if e != m:
            for e0 in c.E:
                if canon(e * (2 * e0 - 1), m) == canon(e * (1 - 2 * e0), m):
                    yield _finding("sd15", m, {"e": e, "e0": e0},
                                   "no self-negation", "collision")


# ---------------------------------------------------------------- registry

THEOREMS: dict[str, tuple[str, object]] = {
    "in02": ("sweep", check_in02),
    "in03": ("sweep", check_in03),
    "in05": ("sweep", check_in05),
    "in06": ("sweep", check_in06),
    "in07": ("sweep", check_in07),
    "in08": ("sweep", check_in08),
    "in11": ("sweep", check_in11),
    "in12": ("sweep", check_in12),
    "nn02": ("sweep", check_nn02),
    "nn03": ("sweep", check_nn03),
    "nn04": ("sweep", check_nn04),
    "nn05": ("sweep", check_nn05),
    "nn06": ("sweep", check_nn06),
    "nn07": ("sweep", check_nn07),
    "nn08": ("sweep", check_nn08),
    "nn08-third": ("sweep", check_nn08_third),
    "rn02": ("sweep", check_rn02),
    "rn03": ("sweep", check_rn03),
    "rn06": ("sweep", check_rn06),
    "rn07": ("sweep", check_rn07),
    "rn09": ("sweep", check_rn09),
    "rn11": ("sweep", check_rn11),
    "rn13": ("sweep", check_rn13),
    "rn14": ("sweep", check_rn14),
    "rn15": ("sweep", check_rn15),
    "rn16": ("sweep", check_rn16),
    "rn17": ("sweep", check_rn17),
    "rn18": ("sweep", check_rn18),
    "rn19": ("sweep", check_rn19),
    "rn20": ("sweep", check_rn20),
    "rn21": ("sweep", check_rn21),
    "rn22": ("sweep", check_rn22),
    "rn23": ("sweep", check_rn23),
    "rn24": ("sweep", check_rn24),
    "rn25": ("sweep", check_rn25),
    "rn26": ("sweep", check_rn26),
    "rn27": ("sweep", check_rn27),
    "rn28": ("sweep", check_rn28),
    "rn29": ("sweep", check_rn29),
    "rn30": ("sweep", check_rn30),
    "rn31": ("sweep", check_rn31),
    "rn32": ("sweep", check_rn32),
    "rn33": ("sweep", check_rn33),
    "rn35": ("sweep", check_rn35),
    "rn36": ("sweep", check_rn36),
    "rn38": ("sweep", check_rn38),
    "rn40": ("sweep", check_rn40),
    "rn41": ("sweep", check_rn41),
    "rn42": ("sweep", check_rn42),
    "bc01": ("sweep", check_bc01),
    "bc03": ("sweep", check_bc03),
    "bc04": ("sweep", check_bc04),
    "bc05": ("sweep", check_bc05),
    "bc06": ("sweep", check_bc06),
    "bc07": ("sweep", check_bc07),
    "bc08": ("sweep", check_bc08),
    "bc09": ("sweep", check_bc09),
    "pr02": ("sweep", check_pr02),
    "pr03": ("sweep", check_pr03),
    "pr04": ("sweep", check_pr04),
    "pr05": ("sweep", check_pr05),
    "pr06": ("sweep", check_pr06),
    "omega-phi-cyclic": ("sweep", check_omega_phi_cyclic),
    "fs02": ("sweep", check_fs02),
    "fs03": ("sweep", check_fs03),
    "fs04": ("sweep", check_fs04),
    "fs05": ("sweep", check_fs05),
    "fs06": ("sweep", check_fs06),
    "fs09": ("global", check_fs09),
    "fs10": ("global", check_fs10),
    "fs11": ("global", check_fs11),
    "fs12": ("sweep", check_fs12),
    "fs13": ("global", check_fs13),
    "ia02": ("sweep", _ia_check("ia02")),
    "ia03": ("sweep", _ia_check("ia03")),
    "ia05": ("sweep", _ia_check("ia05")),
    "ia06": ("sweep", _ia_check("ia06")),
    "ia07": ("sweep", _ia_check("ia07")),
    "ia08": ("sweep", _ia_check("ia08")),
    "ia09": ("sweep", _ia_check("ia09")),
    "ia10": ("sweep", _ia_check("ia10")),
    "ia11": ("sweep", _ia_check("ia11")),
    "sd02": ("sweep", check_sd02),
    "sd03": ("sweep", check_sd03),
    "sd04": ("sweep", check_sd04),
    "sd05": ("sweep", check_sd05),
    "sd07": ("sweep", check_sd07),
    "sd08": ("sweep", check_sd08),
    "sd10": ("sweep", check_sd10),
    "sd11": ("sweep", check_sd11),
    "sd12": ("sweep", check_sd12),
    "sd13": ("sweep", check_sd13),
    "sd14": ("sweep", check_sd14),
    "sd15": ("sweep", check_sd15),
}


def run_audit(lo: int, hi: int, theorems: list[str] | None = None) -> AuditReport:
    """Audit every registered statement over m in [lo, hi], deterministic."""
    if lo < 2 or hi < lo:
        raise ValueError(f"invalid range [{lo}, {hi}]")
    ids = list(THEOREMS) if theorems is None else list(theorems)
    for tid in ids:
        if tid not in THEOREMS:
            raise ValueError(f"unknown theorem id {tid!r}")
    results = []
    for tid in ids:
        scope, fn = THEOREMS[tid]
        findings: list[AuditFinding] = []
        if scope == "global":
            findings.extend(fn(0))
        else:
            for m in range(lo, hi + 1):
                findings.extend(fn(m))
        findings.sort(key=lambda f: f.sort_key())
        status = "verified-on-range" if not findings else "counterexamples"
        results.append(TheoremResult(tid, status, findings))
    return AuditReport(lo, hi, results)
