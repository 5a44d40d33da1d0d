import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewact.category import TERMINAL_CAT, check_functor_laws
from skewact.coherence import (check_adjunction_triangles, check_skew_monoidal, check_strong_action,
                               opposite_skew)
from skewact.construction import build_skew_structure
from skewact.errors import FunctorError, MonoidError, SchemaError, StructureError
from skewact.finset import FinFn, FinSet
from skewact.instances import kan, monoid, powers
from skewact.instances.registry import build_bundle, category_from_listing, functor_from_listing

PAL = monoid.finset_palette(2)


class TestMonoids:
    def test_enumeration_matches_known_counts(self):
        # monoids up to isomorphism: 1 of order 1, 2 of order 2, 7 of order 3
        ms = monoid.enumerate_monoids(3)
        assert [sum(1 for M in ms if M.order == n) for n in (1, 2, 3)] == [1, 2, 7]

    def test_enumerated_tables_are_pairwise_non_isomorphic(self):
        import itertools
        ms = [M for M in monoid.enumerate_monoids(3) if M.order == 3]
        for M, N in itertools.combinations(ms, 2):
            for p in itertools.permutations(range(1, 3)):
                f = dict(zip(range(3), (0,) + p))
                assert any(f[M.op(x, y)] != N.op(f[x], f[y]) for x in range(3) for y in range(3))

    @pytest.mark.parametrize("rows,message", [
        ([[0, 1], [1, 0], [0, 0]], "3x3"),
        ([[0, 1], [1, 2]], "not an element"),
        ([[1, 0], [0, 1]], "identity"),
        ([[0, 1, 2], [1, 2, 2], [2, 1, 2]], "associative"),
    ])
    def test_invalid_tables_are_rejected(self, rows, message):
        with pytest.raises(MonoidError, match=message):
            monoid.MonoidTable.from_rows(rows)

    def test_predicates(self):
        assert monoid.MonoidTable.cyclic(3).is_group()
        assert not monoid.MonoidTable.boolean_or().is_group()
        assert monoid.MonoidTable.boolean_or().is_commutative()

    @pytest.mark.parametrize("M,expected", [
        (monoid.MonoidTable.cyclic(2), 1 + 1 + 2),         # involutions on 0, 1, 2 points
        (monoid.MonoidTable.boolean_or(), 1 + 1 + 3),      # idempotents on 0, 1, 2 points
        (monoid.MonoidTable.trivial(), 3),
    ])
    def test_mset_enumeration_counts(self, M, expected):
        assert len(monoid.enumerate_msets(M, 2)) == expected

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_shear_is_bijective_for_cyclic_groups(self, n):
        assert monoid.shear_is_bijective(monoid.MonoidTable.cyclic(n))

    def test_shear_oracle_rejects_non_groups(self):
        assert not monoid.shear_is_bijective(monoid.MonoidTable.boolean_or())


class TestMonoidWarping:
    def test_free_forgetful_adjunction(self):
        M = monoid.MonoidTable.cyclic(3)
        inst = monoid.monoid_warping(M)
        assert check_adjunction_triangles(inst.adjunction, PAL, monoid.enumerate_msets(M, 2)).ok
        assert check_strong_action(inst.action, monoid.enumerate_msets(M, 1), PAL).ok

    def test_free_functor_is_a_functor(self):
        from skewact.category import all_arrows
        M = monoid.MonoidTable.cyclic(2)
        inst = monoid.monoid_warping(M)
        assert check_functor_laws(inst.adjunction.left, all_arrows(PAL)).ok

    def test_closed_candidates_have_expected_sizes(self):
        M = monoid.MonoidTable.cyclic(2)
        left, right = monoid.closedness_witness_monoid(M)
        B, C = FinSet("ab"), FinSet("xy")
        assert len(left.obj(B, C)) == (2 ** 2) ** 2  # (C^B)^M
        assert len(right.obj(B, C)) == 2 ** (2 * 2)  # C^(M x A)


class TestPowers:
    @pytest.mark.parametrize("j", [0, 1, 2])
    def test_copower_cardinality(self, j):
        inst = powers.copower_instance(FinSet.range(j))
        D = build_skew_structure(inst.action, inst.adjunction)
        for c in PAL:
            for d in PAL:
                assert len(D.t(c, d)) == powers.copower_tensor_size(len(c), len(d), j)

    @pytest.mark.parametrize("j", [0, 1, 2])
    def test_power_cardinality(self, j):
        inst = powers.power_instance(FinSet.range(j))
        D = build_skew_structure(inst.action, inst.adjunction)
        for c in PAL:
            for d in PAL:
                assert len(D.t(c, d)) == len(d) ** (j ** len(c))

    def test_power_skew_axioms_at_j1(self):
        inst = powers.power_instance(FinSet.range(1))
        D = build_skew_structure(inst.action, inst.adjunction, palette=PAL)
        assert check_skew_monoidal(D, PAL).ok

    @pytest.mark.parametrize("j", [0, 1])
    def test_copower_through_opposite_mirrors_power_reports(self, j):
        # FinSet^op is not FinSet, so the mirror is compared on report shape:
        # same orientation, same axiom labels and counts, both passing.
        cop = powers.copower_instance(FinSet.range(j))
        pw = powers.power_instance(FinSet.range(j))
        mirrored = opposite_skew(build_skew_structure(cop.action, cop.adjunction))
        direct = build_skew_structure(pw.action, pw.adjunction)
        assert mirrored.orientation == direct.orientation
        a, b = check_skew_monoidal(mirrored, PAL), check_skew_monoidal(direct, PAL)
        assert a.ok and b.ok
        assert sorted(x for x, _ in a.checked) == sorted(x for x, _ in b.checked)

    def test_exponential_cardinality(self):
        inst = powers.exponential_warping_instance(FinSet.range(2))
        D = build_skew_structure(inst.action, inst.adjunction)
        assert len(D.t(FinSet("ab"), FinSet("xyz"))) == 2 * 3 ** 2


class TestKan:
    def test_functor_validation(self):
        C = kan.arrow_category()
        X, Y = FinSet("a"), FinSet("xy")
        with pytest.raises(FunctorError):
            kan.TabFunctor.build(C, {0: X, 1: Y}, {"u": FinFn(Y, X, ["a", "a"])})
        F = kan.TabFunctor.build(C, {0: X, 1: Y}, {"u": FinFn(X, Y, ["y"])})
        assert F.mors["u"]("a") == "y"

    @given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 3))
    def test_lan_over_terminal_matches_pointwise_formula(self, j, g, d):
        o = TERMINAL_CAT.objects[0]
        J = kan.TabFunctor.build(TERMINAL_CAT, {o: FinSet.range(j)})
        G = kan.TabFunctor.build(TERMINAL_CAT, {o: FinSet("abc"[:g])})
        res = kan.left_kan_extension(J, G, FinSet.range(d))
        assert len(res.carrier) == d ** j * g

    def test_lan_along_arrow_identifies_along_u(self):
        C = kan.arrow_category()
        one, two = FinSet("a"), FinSet("ab")
        J = kan.TabFunctor.build(C, {0: one, 1: one}, {"u": FinFn.identity(one)})
        G = kan.TabFunctor.build(C, {0: one, 1: two}, {"u": FinFn(one, two, ["a"])})
        # J is constant at 1, so Lan_J G(d) is the colimit of G copied |d| times
        res = kan.left_kan_extension(J, G, FinSet.range(3))
        assert len(res.carrier) == 3 * 2

    def test_functor_category_instance_terminal(self):
        J, pal = kan.default_kan_palette(TERMINAL_CAT, 2)
        inst = kan.functor_category_instance(TERMINAL_CAT, J, pal)
        D = build_skew_structure(inst.action, inst.adjunction, palette=pal)
        assert D.unit == J
        assert check_skew_monoidal(D, pal).ok


class TestRegistry:
    def test_unknown_kind(self):
        with pytest.raises(SchemaError):
            build_bundle({"kind": "torus"}, 2, None)

    def test_unknown_monoid_name(self):
        with pytest.raises(SchemaError):
            build_bundle({"kind": "monoid", "monoid": "Q8"}, 2, None)

    def test_power_marks_large_j_infeasible(self):
        assert build_bundle({"kind": "power", "j": 2}, 2, None).infeasible
        assert build_bundle({"kind": "power", "j": 1}, 2, None).infeasible is None

    def test_max_objects_caps_palettes(self):
        b = build_bundle({"kind": "monoid", "monoid": "Z2"}, 2, 2)
        assert len(b.a_palette) == 2 and len(b.v_palette) == 2

    def test_category_listing_round_trip(self):
        C = category_from_listing({"objects": ["x", "y"], "arrows": {"f": ["x", "y"]}})
        assert C.non_identity() == ["f"]
        F = functor_from_listing(C, {"objects": {"x": 1, "y": 2}, "arrows": {"f": [1]}}, "F")
        assert F.mors["f"]("a") == "b"

    def test_category_listing_with_missing_composite_is_rejected(self):
        with pytest.raises(StructureError):
            category_from_listing({"objects": ["x"], "arrows": {"e": ["x", "x"]}})

    def test_category_listing_with_loop(self):
        C = category_from_listing({"objects": ["x"], "arrows": {"e": ["x", "x"]},
                                   "compose": [["e", "e", "e"]], "name": "idem"})
        assert C.compose("e", "e") == "e"

    def test_theorem_checks_for_monoid_bundle(self):
        b = build_bundle({"kind": "monoid", "monoid": "Z3"}, 2, None)
        b.skew = build_skew_structure(b.action, b.adjunction)
        rep = b.theorem_checks()
        assert rep.ok
        assert rep.count("gamma-formula") == len(b.a_palette) ** 3
