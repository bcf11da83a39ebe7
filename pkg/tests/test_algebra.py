"""Operator algebra on the idempotents and the subset correspondence."""
import pytest

from idemod.algebra import (
    basis_map,
    circ,
    complement,
    idem_op,
    otimes,
    simdiff,
    verify_algebra,
)
from idemod.idempotents import enumerate_idempotents
from conftest import algebra_sweep


def test_all_laws_hold_up_to_1000():
    assert algebra_sweep() == []


def test_translation_is_bijective():
    for m in range(1, 1001, 7):
        es = enumerate_idempotents(m).elements
        for e2 in es:
            assert len({circ(m, e2, e) for e in es}) == len(es)


def test_basis_bijection_and_size():
    for m in range(1, 1001, 3):
        bm = basis_map(m)
        es = enumerate_idempotents(m).elements
        assert len(set(bm.member_sets.values())) == len(es)
        assert len(es) == 2 ** len(bm.basis)


def test_operator_values_mod_12():
    # E_12 = {1, 4, 9, 12}; the subsets of {4, 3} mirror the operators.
    assert complement(12, 4) == 9
    assert circ(12, 4, 9) == 12
    assert circ(12, 4, 4) == 1
    assert otimes(12, 4, 9) == 1
    assert otimes(12, 4, 12) == 4
    assert simdiff(12, 4, 9) == 4
    assert simdiff(12, 4, 4) == 1


def test_operators_reject_non_idempotent_operands():
    with pytest.raises(ValueError):
        complement(12, 5)
    with pytest.raises(ValueError):
        circ(12, 4, 5)
    with pytest.raises(ValueError):
        idem_op(12, "circ", 4)
    with pytest.raises(ValueError):
        idem_op(12, "complement", 4, 9)
    with pytest.raises(ValueError):
        idem_op(12, "nope", 4, 9)


def test_report_records_all_laws():
    rep = verify_algebra(60)
    assert rep.ok
    law_names = {l.law for l in rep.laws}
    assert {
        "mixing-product",
        "mixing-power",
        "closure",
        "circ-group",
        "circ-translation-injective",
        "otimes-ring",
        "identity-catalog",
        "otimes-nary",
        "basis-map",
    } <= law_names
