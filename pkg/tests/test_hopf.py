import pytest

from ldiag.diagram import EMPTY, concat, deck, parse_matrix
from ldiag.errors import UnverifiedStructureError
from ldiag.formal import DiagramSum, TensorSum
from ldiag.hopf import (
    LDIAG,
    MQSYM,
    HopfStructure,
    antipode,
    coproduct_t0,
    coproduct_t0_white,
    coproduct_t1,
    counit,
    verify_hopf_axioms,
)
from ldiag.poly import QC, ZERO


def m(text):
    return parse_matrix(text)


def test_structure_validation():
    assert LDIAG.verified and MQSYM.verified
    assert not HopfStructure(0, 0, 1).verified
    assert not HopfStructure(2, 1, 1).verified
    with pytest.raises(ValueError):
        HopfStructure(0, 0, 2)
    with pytest.raises(ValueError):
        HopfStructure(1, 1, 1, "white-split")


class TestCoproducts:
    def test_t0_examples(self):
        assert coproduct_t0(m("1")) == TensorSum({(EMPTY, m("1")): 1, (m("1"), EMPTY): 1})
        assert coproduct_t0(m("1 1")) == TensorSum(
            {(EMPTY, m("1 1")): 1, (m("1 1"), EMPTY): 1, (m("1"), m("1")): 2}
        )
        assert coproduct_t0(EMPTY) == TensorSum({(EMPTY, EMPTY): 1})

    def test_t1_examples(self):
        d = m("1 1")
        assert coproduct_t1(d) == TensorSum({(EMPTY, d): 1, (m("1"), m("1")): 1, (d, EMPTY): 1})
        t = coproduct_t1(m("1 2"))
        assert t[(m("1"), m("2"))] == 1 and t[(m("2"), m("1"))] == ZERO
        assert coproduct_t1(m("2")) == TensorSum({(EMPTY, m("2")): 1, (m("2"), EMPTY): 1})

    def test_term_counts(self):
        for d in deck(3):
            assert sum(c.terms[(0, 0)] for _, c in coproduct_t0(d).items()) == 2**d.q
            assert len(coproduct_t1(d)) == d.q + 1

    def test_grading(self):
        for d in deck(3):
            for delta in (coproduct_t0, coproduct_t1, coproduct_t0_white):
                for a, b in delta(d):
                    assert a.total_weight + b.total_weight == d.total_weight

    def test_white_split_differs(self):
        d = m("1 1")
        assert coproduct_t0_white(d) == TensorSum({(EMPTY, d): 1, (d, EMPTY): 1})


def test_counit():
    assert counit(DiagramSum.unit()) == 1
    assert counit(DiagramSum.of(m("1"))) == ZERO
    assert counit(DiagramSum({EMPTY: 3, m("1"): QC})) == 3
    assert counit(EMPTY) == 1


class TestAntipode:
    @pytest.mark.parametrize("h", [LDIAG, MQSYM])
    def test_primitive(self, h):
        assert antipode(m("1"), h) == DiagramSum.of(m("1"), -1)
        assert antipode(EMPTY, h) == DiagramSum.unit()

    def test_mqsym_example(self):
        assert antipode(m("1 1"), MQSYM) == DiagramSum(
            {m("1 1"): -1, m("1 0; 0 1"): 1, m("0 1; 1 0"): 1, m("1; 1"): 1}
        )

    def test_ldiag_reverses_factors(self):
        # For the concatenation monoid with a primitive-generated coproduct,
        # S is an anti-morphism.
        a, b = m("1"), m("2")
        s = antipode(concat(a, b), LDIAG)
        assert s[concat(b, a)] == 1

    def test_unverified_rejected(self):
        with pytest.raises(UnverifiedStructureError):
            antipode(m("1"), HopfStructure(0, 0, 1))


class TestAxiomHarness:
    def test_ldiag(self):
        r = verify_hopf_axioms(deck(2), LDIAG)
        assert r.all_passed and r.cocommutative.passed

    def test_mqsym(self):
        r = verify_hopf_axioms(deck(3), MQSYM)
        assert r.all_passed
        assert not r.cocommutative.passed
        assert r.cocommutative.counterexample == ["1 2"]

    def test_white_split_variant(self):
        r = verify_hopf_axioms(deck(3), HopfStructure(0, 0, 0, "white-split"))
        assert r.all_passed and r.cocommutative.passed

    def test_mixed_structure_fails_with_counterexample(self):
        r = verify_hopf_axioms(deck(2), HopfStructure(0, 0, 1))
        assert not r.all_passed
        assert "bialgebra_compatibility" in r.failures()
        assert r.axioms["bialgebra_compatibility"].counterexample == ["1", "1"]
        obj = r.to_json_obj()
        assert obj["structure"]["status"] == "unverified"
        for res in r.axioms.values():
            assert res.passed or res.counterexample

    def test_row_cut_rejected(self):
        # Cutting rows instead of columns is not compatible with the (1,1)
        # product: on ([1],[1]) it yields 3 middle terms where 2 are needed.
        from ldiag.diagram import restrict_rows
        from ldiag.product import specialized_basis_product

        def row_cut(d):
            return TensorSum(
                ((restrict_rows(d, tuple(range(k))), restrict_rows(d, tuple(range(k, d.p)))), 1)
                for k in range(d.p + 1)
            )

        one = m("1")
        lhs = TensorSum()
        for f, c in specialized_basis_product(one, one, 1, 1).items():
            lhs = lhs + row_cut(f).scale(c)
        rhs = row_cut(one).componentwise_product(
            row_cut(one), lambda a, b: specialized_basis_product(a, b, 1, 1)
        )
        middle = lambda t: sum(  # noqa: E731
            c.terms[(0, 0)] for (a, b), c in t.items() if not a.is_empty and not b.is_empty
        )
        assert (middle(lhs), middle(rhs)) == (3, 2)
