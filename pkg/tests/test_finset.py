import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewact.errors import CompositionError, DiagramError
from skewact.finset import (EMPTY, Diagram, DiagramArrow, FinFn, FinSet, NotIso, Tagged, UnionFind,
                            all_functions, coequalizer, compose, compose_all, constant, coproduct,
                            exponential, exponential_set, finite_colimit, fn_power, fn_product,
                            invert, is_iso, label_key, product, product_set, singleton)


def sets(max_size=3):
    return st.integers(0, max_size).map(FinSet.range)


@st.composite
def functions(draw, dom=None, cod=None):
    dom = dom if dom is not None else draw(sets())
    cod = cod if cod is not None else draw(sets())
    if len(dom) and not len(cod):
        cod = FinSet.range(1)
    images = [draw(st.sampled_from(cod.elements)) for _ in dom.elements]
    return FinFn(dom, cod, images)


@st.composite
def composable_triples(draw):
    A, B, C, D = (draw(sets()) for _ in range(4))
    f = draw(functions(A, B if len(B) or not len(A) else FinSet.range(1)))
    g = draw(functions(f.cod, C if len(C) or not len(f.cod) else FinSet.range(1)))
    h = draw(functions(g.cod, D if len(D) or not len(g.cod) else FinSet.range(1)))
    return f, g, h


class TestFinSet:
    def test_elements_keep_order_and_reject_duplicates(self):
        X = FinSet(["b", "a"])
        assert X.elements == ("b", "a")
        assert X.index == {"b": 0, "a": 1}
        with pytest.raises(ValueError, match="duplicate"):
            FinSet(["b", "a", "b"])

    def test_equality_ignores_name(self):
        assert FinSet([1, 2], name="x") == FinSet([1, 2])

    def test_singleton_and_empty(self):
        assert len(singleton()) == 1 and len(EMPTY) == 0

    def test_label_order_is_total_across_types(self):
        labels = [Tagged("fn", (1,)), "a", 3, (1, "a"), None]
        assert sorted(labels, key=label_key)[0] is None


class TestFunctions:
    def test_rejects_images_outside_codomain(self):
        with pytest.raises(Exception):
            FinFn(FinSet.range(1), FinSet.range(1), [5])

    def test_compose_checks_boundary(self):
        f = FinFn.identity(FinSet.range(2))
        g = FinFn.identity(FinSet.range(3))
        with pytest.raises(CompositionError):
            compose(g, f)

    @given(composable_triples())
    def test_composition_is_associative(self, fgh):
        f, g, h = fgh
        assert compose(h, compose(g, f)) == compose(compose(h, g), f) == compose_all(f, g, h)

    @given(functions())
    def test_identities_are_units(self, f):
        assert compose(f, FinFn.identity(f.dom)) == f == compose(FinFn.identity(f.cod), f)

    @given(functions())
    def test_invert_agrees_with_bijectivity(self, f):
        inv = invert(f)
        bijective = len(set(f.images)) == len(f.dom) == len(f.cod)
        assert is_iso(f) == bijective
        if bijective:
            assert compose(inv, f) == FinFn.identity(f.dom)
            assert compose(f, inv) == FinFn.identity(f.cod)
        else:
            assert isinstance(inv, NotIso) and inv.reason

    def test_not_iso_names_collision(self):
        f = constant(FinSet.range(2), FinSet.range(2), 0)
        inv = invert(f)
        assert isinstance(inv, NotIso) and not inv
        assert "not injective" in inv.reason

    @pytest.mark.parametrize("n,m", [(0, 0), (0, 2), (2, 0), (1, 3), (3, 2)])
    def test_all_functions_counts(self, n, m):
        fns = list(all_functions(FinSet.range(n), FinSet.range(m)))
        assert len(fns) == m ** n
        assert len(set(fns)) == len(fns)

    def test_first_difference_reports_earliest_element(self):
        X = FinSet.range(3)
        f = FinFn(X, X, [0, 1, 2])
        g = FinFn(X, X, [0, 2, 1])
        assert f.first_difference(g) == 1
        assert f.first_difference(f) is None


class TestLimitsAndExponentials:
    @given(sets(), sets())
    def test_product_projections_and_pairing(self, X, Y):
        P = product(X, Y)
        assert len(P.obj) == len(X) * len(Y)
        assert P.pair(P.p1, P.p2) == FinFn.identity(P.obj)

    @given(sets(), sets())
    def test_coproduct_copairing(self, X, Y):
        S = coproduct(X, Y)
        assert len(S.obj) == len(X) + len(Y)
        assert S.copair(S.i1, S.i2) == FinFn.identity(S.obj)

    @given(sets(2), sets(2), sets(2))
    def test_curry_uncurry_round_trip(self, Z, X, Y):
        E = exponential(X, Y)
        assert len(E.obj) == len(Y) ** len(X)
        for f in itertools.islice(all_functions(product_set(Z, X), Y), 20):
            g = E.curry(f, Z)
            assert E.uncurry(g) == f
            assert compose(E.ev, fn_product(g, FinFn.identity(X))) == f

    @given(functions(), functions())
    def test_fn_power_is_functorial_in_both_slots(self, f, g):
        # identity on both slots
        idp = fn_power(FinFn.identity(f.cod), FinFn.identity(g.dom))
        assert idp == FinFn.identity(exponential_set(f.cod, g.dom))
        # contravariant in the first slot, covariant in the second
        for h in exponential_set(f.cod, g.dom).elements:
            out = fn_power(f, g)(h)
            direct = compose(g, compose(FinFn(f.cod, g.dom, h.value), f))
            assert out.value == direct.images


def _components_oracle(objects, arrows):
    """Connected components by breadth-first search, independent of UnionFind."""
    nodes = [(l, x) for l, X in objects.items() for x in X.elements]
    adj = {n: set() for n in nodes}
    for a in arrows:
        for x, y in zip(a.fn.dom.elements, a.fn.images):
            adj[(a.src, x)].add((a.tgt, y))
            adj[(a.tgt, y)].add((a.src, x))
    seen, count = set(), 0
    for n in nodes:
        if n in seen:
            continue
        count += 1
        todo = [n]
        while todo:
            m = todo.pop()
            if m not in seen:
                seen.add(m)
                todo.extend(adj[m] - seen)
    return count


class TestColimits:
    def test_union_find_classes(self):
        uf = UnionFind(range(5))
        uf.union(0, 3)
        uf.union(3, 4)
        classes = uf.classes()
        assert sorted(map(sorted, classes.values())) == [[0, 3, 4], [1], [2]]

    @given(st.data())
    def test_colimit_size_matches_component_count(self, data):
        objects = {i: data.draw(sets()) for i in range(3)}
        arrows = []
        for k in range(data.draw(st.integers(0, 3))):
            s, t = data.draw(st.integers(0, 2)), data.draw(st.integers(0, 2))
            if len(objects[s]) and not len(objects[t]):
                continue
            arrows.append(DiagramArrow(k, s, t, data.draw(functions(objects[s], objects[t]))))
        col = finite_colimit(Diagram(objects, arrows))
        assert len(col.obj) == _components_oracle(objects, arrows)
        for a in arrows:
            assert compose(col.injections[a.tgt], a.fn) == col.injections[a.src]

    def test_coequalizer_universal_property(self):
        X, Y = FinSet.range(2), FinSet.range(4)
        f, g = FinFn(X, Y, [0, 1]), FinFn(X, Y, [1, 2])
        col = coequalizer(f, g)
        assert len(col.obj) == 2
        Z = FinSet("pq")
        q = FinFn(Y, Z, ["p", "p", "p", "q"])
        u = col.factor({"src": compose(q, f), "tgt": q}, Z)
        assert compose(u, col.injections["tgt"]) == q

    def test_factor_rejects_non_cocone(self):
        X, Y = FinSet.range(1), FinSet.range(2)
        col = coequalizer(FinFn(X, Y, [0]), FinFn(X, Y, [1]))
        Z = FinSet.range(2)
        with pytest.raises(DiagramError):
            col.factor({"src": FinFn(X, Z, [0]), "tgt": FinFn.identity(Y)}, Z)

    def test_class_label_is_smallest_member(self):
        X, Y = FinSet.range(1), FinSet.range(2)
        col = coequalizer(FinFn(X, Y, [1]), FinFn(X, Y, [0]))
        assert col.cls("tgt", 1) == col.cls("tgt", 0)
