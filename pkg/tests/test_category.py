import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewact.category import (FINSET, TERMINAL_CAT, FinPresCat, Functor, NatFamily, Opposite,
                              all_arrows, check_category_laws, check_functor_laws, check_naturality,
                              identity_functor, opposite, opposite_functor)
from skewact.errors import CompositionError, StructureError
from skewact.finset import (FinFn, FinSet, NotIso, compose, constant, exponential_set, fn_power,
                            product_set)
from skewact.instances.kan import arrow_category

SMALL = [FinSet.range(n) for n in range(3)]


def z2():
    return FinPresCat.from_monoid((0, 1), lambda g, f: (g + f) % 2, 0, name="BZ2")


class TestFinSetCategory:
    def test_category_laws_on_all_small_arrows(self):
        rep = check_category_laws(FINSET, all_arrows(SMALL[1:]))
        assert rep.ok and len(rep.checked) > 0

    def test_then_is_diagram_order(self):
        X = FinSet.range(2)
        swap = FinFn(X, X, [1, 0])
        c0 = constant(X, X, 0)
        assert FINSET.then(swap, c0) == compose(c0, swap)

    def test_hom_enumerates_functions(self):
        assert len(list(FINSET.hom(FinSet.range(2), FinSet.range(3)))) == 9

    def test_difference_on_non_parallel_raises(self):
        with pytest.raises(StructureError):
            FINSET.difference(FinFn.identity(SMALL[1]), FinFn.identity(SMALL[2]))


class TestOpposite:
    def test_composition_reverses(self):
        op = opposite(FINSET)
        X, Y = FinSet.range(1), FinSet.range(2)
        f = FinFn(X, Y, [1])  # Y -> X in the opposite
        g = FinFn(Y, Y, [1, 0])  # Y -> Y
        assert op.compose(f, g) == compose(g, f)
        assert op.dom(f) == Y and op.cod(f) == X

    def test_double_opposite_unwraps(self):
        assert opposite(opposite(FINSET)) is FINSET
        assert isinstance(opposite(FINSET), Opposite)

    def test_laws_hold_in_opposite(self):
        assert check_category_laws(opposite(FINSET), all_arrows(SMALL[1:])).ok

    def test_power_is_a_functor_on_the_opposite(self):
        two = FinSet.range(2)
        P = Functor(opposite(FINSET), FINSET, lambda X: exponential_set(X, two), lambda f: fn_power(f, FinFn.identity(two)),
                    name="2^(-)")
        arrows = all_arrows(SMALL)
        assert check_functor_laws(P, arrows).ok
        assert opposite_functor(P).source == FINSET


class TestPresentedCategories:
    def test_monoid_category_passes(self):
        rep = check_category_laws(z2())
        assert rep.ok and rep.count("associativity") == 8

    def test_terminal_and_arrow(self):
        assert check_category_laws(TERMINAL_CAT).ok
        C = arrow_category()
        assert check_category_laws(C).ok
        assert C.non_identity() == ["u"]
        assert C.hom(0, 1) == ["u"] and C.hom(1, 0) == []

    def test_missing_table_entry_is_reported(self):
        C = FinPresCat(("a",), {"id": ("a", "a"), "e": ("a", "a")}, {"a": "id"},
                       {("id", "id"): "id", ("id", "e"): "e", ("e", "id"): "e"}, name="partial")
        rep = check_category_laws(C)
        assert not rep.ok and rep.failures[0].axiom == "totality"

    def test_non_associative_table_fails(self):
        # left-zero on {1, x, y} except x.y = x, y.x = x: not associative
        els = ("1", "x", "y")
        table = {("x", "x"): "y", ("x", "y"): "x", ("y", "x"): "x", ("y", "y"): "x"}
        op = lambda g, f: f if g == "1" else g if f == "1" else table[(g, f)]  # noqa: E731
        rep = check_category_laws(FinPresCat.from_monoid(els, op, "1"))
        assert rep.failures_for("associativity")

    def test_compose_rejects_mismatched_ends(self):
        C = arrow_category()
        with pytest.raises(CompositionError):
            C.compose("u", "u")

    def test_invert_finds_group_inverse(self):
        assert z2().invert(1) == 1
        assert isinstance(arrow_category().invert("u"), NotIso)

    def test_generated_rejects_composable_graph(self):
        with pytest.raises(ValueError):
            FinPresCat.generated((0, 1, 2), {"f": (0, 1), "g": (1, 2)})


class TestFunctorsAndNaturality:
    def test_product_functor_laws(self):
        K = FinSet.range(2)
        F = Functor(FINSET, FINSET, lambda X: product_set(X, K),
                    lambda f: FinFn.build(product_set(f.dom, K), product_set(f.cod, K),
                                          lambda p: (f(p[0]), p[1])), name="(-)xK")
        assert check_functor_laws(F, all_arrows(SMALL)).ok

    def test_broken_functor_fails(self):
        F = Functor(FINSET, FINSET, lambda X: X,
                    lambda f: FinFn(f.dom, f.cod, list(reversed(f.images))), name="rev")
        assert not check_functor_laws(F, all_arrows(SMALL)).ok

    def test_identity_family_is_natural(self):
        I = identity_functor(FINSET)
        t = NatFamily("id", FINSET, FinFn.identity, (FINSET,), I.mor, I.mor)
        assert check_naturality(t, [(f,) for f in all_arrows(SMALL)]).ok

    def test_at_raises_index_error_outside_family(self):
        t = NatFamily("partial", FINSET, {SMALL[1]: FinFn.identity(SMALL[1])}.__getitem__)
        with pytest.raises(IndexError):
            t.at(SMALL[2])

    @given(st.integers(1, 2), st.integers(0, 2))
    def test_all_arrows_covers_hom_sets(self, n, m):
        X, Y = FinSet.range(n), FinSet("abc"[:m])
        arrows = all_arrows([X, Y])
        assert sum(1 for f in arrows if f.dom == X and f.cod == Y) == m ** n
        assert len(arrows) == n ** n + m ** n + n ** m + m ** m
