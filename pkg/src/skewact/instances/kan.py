"""Functor categories ``[C, FinSet]`` warped by left Kan extension.

Endofunctors of FinSet act on ``[C, FinSet]`` by postcomposition.  Fixing
``J: C -> FinSet`` gives ``J_* = (-) . J`` with left adjoint ``Lan_J``, so
the warped tensor is ``G (.) F = Lan_J G . F`` with unit J.

``Lan_J G (d)`` is computed pointwise as the colimit of ``G . pr`` over the
comma category ``(J | d)`` whose objects are pairs ``(c, f: Jc -> d)``.
Endofunctors are formal expressions evaluated lazily and memoized per set;
equality of their natural transformations is decided on a fixed list of
probe sets.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..category import Bifunctor, Category, FinPresCat, Functor
from ..coherence import LEFT, AdjunctionData, SkewMonoidalData, StrongActionData
from ..errors import CompositionError, FunctorError
from ..finset import (Colimit, Diagram, DiagramArrow, FinFn, FinSet, NotIso, all_functions,
                      compose, fn_label, finite_colimit, invert, label_fn, product_set, fn_product)
from ..report import Difference


# -- [C, FinSet] --------------------------------------------------------------

class TabFunctor:
    """A functor ``C -> FinSet`` given by its values on objects and morphisms."""

    __slots__ = ("category", "objs", "mors", "name", "_key", "_hash")

    def __init__(self, category: FinPresCat, objs: dict, mors: dict, name: str | None = None):
        self.category = category
        self.objs = dict(objs)
        self.mors = dict(mors)
        self.name = name
        self._key = (tuple(self.objs[c] for c in category.objects),
                     tuple(self.mors[f] for f in sorted(category.morphisms, key=repr)))
        self._hash = hash(self._key)

    def validate(self) -> TabFunctor:
        C = self.category
        for f, (d, c) in C.morphisms.items():
            h = self.mors.get(f)
            if h is None:
                raise FunctorError(f"{self!r}: no function for morphism {f!r}")
            if h.dom != self.objs[d] or h.cod != self.objs[c]:
                raise FunctorError(f"{self!r}: {f!r} has the wrong boundary")
        for o in C.objects:
            if self.mors[C.identity(o)] != FinFn.identity(self.objs[o]):
                raise FunctorError(f"{self!r}: identity at {o!r} is not preserved")
        for (g, f), h in C.table.items():
            if compose(self.mors[g], self.mors[f]) != self.mors[h]:
                raise FunctorError(f"{self!r}: composite {g} . {f} = {h} is not preserved")
        return self

    @classmethod
    def build(cls, category: FinPresCat, objs: dict, arrows: dict | None = None, name=None) -> TabFunctor:
        """Identities are filled in; ``arrows`` gives the non-identity morphisms."""
        mors = {category.identity(o): FinFn.identity(objs[o]) for o in category.objects}
        mors.update(arrows or {})
        return cls(category, objs, mors, name).validate()

    def __eq__(self, other):
        return isinstance(other, TabFunctor) and self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.name:
            return self.name
        return "<" + ",".join(f"{c}:{len(self.objs[c])}" for c in self.category.objects) + ">"


@dataclass(frozen=True)
class NatTrans:
    dom: TabFunctor
    cod: TabFunctor
    comps: tuple  # aligned with category.objects

    def at(self, c) -> FinFn:
        return self.comps[self.dom.category.objects.index(c)]


class FunctorCat(Category):
    def __init__(self, C: FinPresCat):
        self.C = C
        self.name = f"[{C.name},FinSet]"

    def nat(self, dom, cod, fn: Callable) -> NatTrans:
        return NatTrans(dom, cod, tuple(fn(c) for c in self.C.objects))

    def identity(self, obj):
        return NatTrans(obj, obj, tuple(FinFn.identity(obj.objs[c]) for c in self.C.objects))

    def compose(self, g, f):
        if f.cod != g.dom:
            raise CompositionError(f.cod, g.dom)
        return NatTrans(f.dom, g.cod, tuple(compose(b, a) for b, a in zip(g.comps, f.comps)))

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def difference(self, f, g):
        self.check_parallel(f, g)
        for c, a, b in zip(self.C.objects, f.comps, g.comps):
            x = a.first_difference(b)
            if x is not None:
                return Difference((c, x), a(x), b(x))
        return None

    def invert(self, f):
        comps = []
        for c, a in zip(self.C.objects, f.comps):
            inv = invert(a)
            if isinstance(inv, NotIso):
                return NotIso(inv.reason, (c,) + inv.witness)
            comps.append(inv)
        return NatTrans(f.cod, f.dom, tuple(comps))

    def hom(self, a, b):
        choices = [list(all_functions(a.objs[c], b.objs[c])) for c in self.C.objects]
        out = []
        for comps in itertools.product(*choices):
            t = NatTrans(a, b, comps)
            if all(compose(t.at(cod), a.mors[f]) == compose(b.mors[f], t.at(d))
                   for f, (d, cod) in self.C.morphisms.items()):
                out.append(t)
        return out

    def __eq__(self, other):
        return isinstance(other, FunctorCat) and other.C == self.C

    def __hash__(self):
        return hash(("Fun", self.C))


# -- endofunctor expressions --------------------------------------------------

class Endo:
    """An endofunctor of FinSet, evaluated on demand.

    Subclasses implement ``_obj`` and ``_mor``; results are memoized.
    Equality is structural on ``key``.
    """

    key: tuple = ()

    def __init__(self):
        self._obj_cache: dict = {}
        self._mor_cache: dict = {}

    def obj(self, S: FinSet) -> FinSet:
        out = self._obj_cache.get(S)
        if out is None:
            out = self._obj_cache[S] = self._obj(S)
        return out

    def mor(self, h: FinFn) -> FinFn:
        out = self._mor_cache.get(h)
        if out is None:
            out = self._mor_cache[h] = self._mor(h)
        return out

    def factors(self) -> tuple:
        return (self,)

    def __eq__(self, other):
        return isinstance(other, Endo) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def apply(self, G: TabFunctor) -> TabFunctor:
        """Postcomposition ``self . G``."""
        C = G.category
        return TabFunctor(C, {c: self.obj(G.objs[c]) for c in C.objects},
                          {f: self.mor(G.mors[f]) for f in C.morphisms}, name=f"{self!r}.{G!r}")


class IdEndo(Endo):
    key = ("id",)

    def _obj(self, S):
        return S

    def _mor(self, h):
        return h

    def factors(self):
        return ()

    def __repr__(self):
        return "Id"


class ProdEndo(Endo):
    """``K x (-)``."""

    def __init__(self, K: FinSet, name: str | None = None):
        super().__init__()
        self.K = K
        self.key = ("prod", K)
        self.name = name or f"{K!r}x-"

    def _obj(self, S):
        return product_set(self.K, S)

    def _mor(self, h):
        return fn_product(FinFn.identity(self.K), h)

    def __repr__(self):
        return self.name


class CompEndo(Endo):
    """``F1 . F2 . ... . Fn`` (applied right to left)."""

    def __init__(self, factors: tuple):
        super().__init__()
        self._factors = factors
        self.key = ("comp",) + tuple(f.key for f in factors)

    def factors(self):
        return self._factors

    def _obj(self, S):
        for f in reversed(self._factors):
            S = f.obj(S)
        return S

    def _mor(self, h):
        for f in reversed(self._factors):
            h = f.mor(h)
        return h

    def __repr__(self):
        return "(" + ".".join(map(repr, self._factors)) + ")"


_ID = IdEndo()
_INTERN: dict = {}


def _intern(e: Endo) -> Endo:
    """Share one instance per key so memo tables are shared too."""
    return _INTERN.setdefault(e.key, e)


def endo_compose(F: Endo, G: Endo) -> Endo:
    fs = F.factors() + G.factors()
    if not fs:
        return _ID
    if len(fs) == 1:
        return fs[0]
    return _intern(CompEndo(fs))


@dataclass(frozen=True)
class EndoNat:
    """A natural transformation between endofunctor expressions."""

    dom: Endo
    cod: Endo
    component: Callable = field(compare=False)
    cache: dict = field(default_factory=dict, compare=False, repr=False)

    def at(self, S: FinSet) -> FinFn:
        out = self.cache.get(S)
        if out is None:
            out = self.cache[S] = self.component(S)
        return out


class EndoCat(Category):
    """Endofunctors of FinSet; morphism equality is tested on ``probes``."""

    def __init__(self, probes: Sequence[FinSet]):
        self.probes = tuple(probes)
        self.name = "[FinSet,FinSet]"

    def identity(self, obj):
        return EndoNat(obj, obj, lambda S: FinFn.identity(obj.obj(S)))

    def compose(self, g, f):
        if f.cod != g.dom:
            raise CompositionError(f.cod, g.dom)
        return EndoNat(f.dom, g.cod, lambda S: compose(g.at(S), f.at(S)))

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def difference(self, f, g):
        self.check_parallel(f, g)
        for S in self.probes:
            a, b = f.at(S), g.at(S)
            x = a.first_difference(b)
            if x is not None:
                return Difference((S, x), a(x), b(x))
        return None

    def invert(self, f):
        comps = {}
        for S in self.probes:
            inv = invert(f.at(S))
            if isinstance(inv, NotIso):
                return NotIso(inv.reason, (S,) + inv.witness)
            comps[S] = inv
        return EndoNat(f.cod, f.dom, lambda S: comps[S] if S in comps else invert(f.at(S)))

    def __eq__(self, other):
        return isinstance(other, EndoCat) and other.probes == self.probes

    def __hash__(self):
        return hash(("Endo", self.probes))


def horizontal(alpha: EndoNat, beta: EndoNat) -> EndoNat:
    """``alpha . beta: F.G -> F'.G'``, component ``alpha_{G'S} . F(beta_S)``."""
    F = alpha.dom
    return EndoNat(endo_compose(alpha.dom, beta.dom), endo_compose(alpha.cod, beta.cod),
                   lambda S: compose(alpha.at(beta.cod.obj(S)), F.mor(beta.at(S))))


def endo_monoidal(probes: Sequence[FinSet]) -> SkewMonoidalData:
    """Strict monoidal structure by composition; all constraints identities."""
    cat = EndoCat(probes)
    tensor = Bifunctor(cat, cat, cat, endo_compose, horizontal, name="o")
    return SkewMonoidalData(
        cat, tensor, _ID,
        lambda X, Y, Z: cat.identity(endo_compose(endo_compose(X, Y), Z)),
        lambda X: cat.identity(X), lambda X: cat.identity(X), LEFT, name="(Endo,o)")


# -- Lan ----------------------------------------------------------------------

@dataclass
class LanResult:
    """``Lan_J G`` evaluated at ``d``."""

    J: TabFunctor
    G: TabFunctor
    d: FinSet
    comma: list  # objects (c, f) with f: Jc -> d
    colimit: Colimit

    @property
    def carrier(self) -> FinSet:
        return self.colimit.obj

    def element(self, c, f: FinFn, x):
        """The class of ``x in G(c)`` sitting over ``(c, f)``."""
        return self.colimit.cls((c, fn_label(f)), x)

    def cocone(self, c, f: FinFn) -> FinFn:
        return self.colimit.injections[(c, fn_label(f))]


def left_kan_extension(J: TabFunctor, G: TabFunctor, d: FinSet) -> LanResult:
    C = J.category
    comma, objects, arrows = [], {}, []
    for c in C.objects:
        for f in all_functions(J.objs[c], d):
            node = (c, fn_label(f))
            comma.append((c, f))
            objects[node] = G.objs[c]
    for u, (c, c2) in C.morphisms.items():
        Ju, Gu = J.mors[u], G.mors[u]
        for f2 in all_functions(J.objs[c2], d):
            f = compose(f2, Ju)
            arrows.append(DiagramArrow((u, fn_label(f2)), (c, fn_label(f)), (c2, fn_label(f2)), Gu))
    return LanResult(J, G, d, comma, finite_colimit(Diagram(objects, arrows)))


class LanEndo(Endo):
    def __init__(self, J: TabFunctor, G: TabFunctor):
        super().__init__()
        self.J, self.G = J, G
        self.key = ("lan", J, G)
        self._lan: dict = {}

    def lan(self, d: FinSet) -> LanResult:
        out = self._lan.get(d)
        if out is None:
            out = self._lan[d] = left_kan_extension(self.J, self.G, d)
        return out

    def _obj(self, S):
        return self.lan(S).carrier

    def _mor(self, h):
        src, tgt = self.lan(h.dom), self.lan(h.cod)
        J = self.J

        def image(rep):
            (c, fl), x = rep
            f = label_fn(J.objs[c], h.dom, fl)
            return tgt.element(c, compose(h, f), x)

        return FinFn.build(src.carrier, tgt.carrier, image, check=False)

    def __repr__(self):
        return f"Lan({self.G!r})"


def lan_endo(J: TabFunctor, G: TabFunctor) -> LanEndo:
    return _intern(LanEndo(J, G))


# -- the instance ---------------------------------------------------------------

@dataclass
class FunctorCategoryInstance:
    C: FinPresCat
    J: TabFunctor
    acting: SkewMonoidalData
    category: FunctorCat
    action: StrongActionData
    adjunction: AdjunctionData
    palette: list


def functor_category_instance(C: FinPresCat, J: TabFunctor, palette: Sequence[TabFunctor],
                              extra_probes: Sequence[FinSet] = ()) -> FunctorCategoryInstance:
    """Postcomposition action of FinSet endofunctors on ``[C, FinSet]``,
    warped at ``J`` via ``Lan_J -| (-) . J``.  Multiplicator and unitor are
    identities."""
    for G in list(palette) + [J]:
        if G.category != C:
            raise FunctorError(f"{G!r} is not a functor on {C.name}")
        G.validate()
    probes = []
    for G in list(palette) + [J]:
        for S in G.objs.values():
            if S not in probes:
                probes.append(S)
    for S in extra_probes:
        if S not in probes:
            probes.append(S)
    V = endo_monoidal(probes)
    Vc = V.category
    A = FunctorCat(C)

    def act_mor(alpha: EndoNat, beta: NatTrans) -> NatTrans:
        F = alpha.dom
        return A.nat(alpha.dom.apply(beta.dom), alpha.cod.apply(beta.cod),
                     lambda c: compose(alpha.at(beta.cod.objs[c]), F.mor(beta.at(c))))

    action = Bifunctor(Vc, A, A, lambda F, G: F.apply(G), act_mor, name="postcompose")

    def m(X, Y, G):
        return A.identity(endo_compose(X, Y).apply(G))

    def u(G):
        return A.identity(G)

    S = StrongActionData(V, A, action, m, u, LEFT, m, u, name="postcompose")

    def lan_mor(beta: NatTrans) -> EndoNat:
        src, tgt = lan_endo(J, beta.dom), lan_endo(J, beta.cod)

        def comp(d):
            a, b = src.lan(d), tgt.lan(d)
            return FinFn.build(a.carrier, b.carrier,
                               lambda rep: b.colimit.cls(rep[0], beta.at(rep[0][0])(rep[1])), check=False)

        return EndoNat(src, tgt, comp)

    Lan = Functor(A, Vc, lambda G: lan_endo(J, G), lan_mor, name="Lan_J")
    Jstar = Functor(Vc, A, lambda X: X.apply(J),
                    lambda alpha: A.nat(alpha.dom.apply(J), alpha.cod.apply(J),
                                        lambda c: alpha.at(J.objs[c])), name="(-).J")

    def unit(G):
        L = lan_endo(J, G)
        return A.nat(G, L.apply(J), lambda c: FinFn.build(
            G.objs[c], L.obj(J.objs[c]),
            lambda x: L.lan(J.objs[c]).element(c, FinFn.identity(J.objs[c]), x), check=False))

    def counit(X: Endo):
        XJ = X.apply(J)
        L = lan_endo(J, XJ)

        def comp(d):
            res = L.lan(d)

            def image(rep):
                (c, fl), x = rep
                return X.mor(label_fn(J.objs[c], d, fl))(x)

            return FinFn.build(res.carrier, X.obj(d), image, check=False)

        return EndoNat(L, X, comp)

    adj = AdjunctionData(Lan, Jstar, unit, counit, "LL", J, name="Lan_J -| (-).J")
    return FunctorCategoryInstance(C, J, V, A, S, adj, list(palette))


def arrow_category() -> FinPresCat:
    """``0 -> 1``."""
    return FinPresCat.generated((0, 1), {"u": (0, 1)}, name="2")


def default_kan_palette(C: FinPresCat, max_size: int = 2) -> tuple[TabFunctor, list[TabFunctor]]:
    """A J and a few functors with values of size at most ``max_size``."""
    from ..category import TERMINAL_CAT
    sets = [FinSet("abcdefgh"[:k]) for k in range(max_size + 1)]
    if C == TERMINAL_CAT or len(C.objects) == 1 and not C.non_identity():
        o = C.objects[0]
        J = TabFunctor.build(C, {o: sets[min(1, max_size)]}, name="J")
        pal = [TabFunctor.build(C, {o: S}, name=f"G{len(S)}") for S in sets]
        return J, pal
    nonid = C.non_identity()
    if len(C.objects) != 2 or len(nonid) != 1:
        raise ValueError("default palette covers the terminal and the arrow category")
    u = nonid[0]
    x, y = C.morphisms[u]
    top = sets[-1]
    one = sets[min(1, max_size)]
    J = TabFunctor.build(C, {x: one, y: top},
                         {u: FinFn(one, top, one.elements[:1] * len(one))}, name="J")
    pal = [
        TabFunctor.build(C, {x: sets[0], y: one}, {u: FinFn(sets[0], one, ())}, name="G0"),
        TabFunctor.build(C, {x: one, y: one}, {u: FinFn.identity(one)}, name="G1"),
        TabFunctor.build(C, {x: top, y: one}, {u: FinFn(top, one, one.elements[:1] * len(top))},
                         name="G2"),
    ]
    return J, pal
