"""Computable categories, functors, bifunctors and natural families.

Categories with infinitely many objects are handled by checking laws on a
finite palette of objects or arrows supplied by the caller.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import CompositionError, StructureError
from .finset import FinFn, FinSet, NotIso, all_functions, compose, invert
from .report import CheckReport, Difference


class Category:
    """Interface for a category whose morphism equality is decidable on any
    pair of parallel morphisms."""

    name = "C"

    def identity(self, obj):
        raise NotImplementedError

    def compose(self, g, f):
        """``g . f``; raises CompositionError on a boundary mismatch."""
        raise NotImplementedError

    def dom(self, f):
        raise NotImplementedError

    def cod(self, f):
        raise NotImplementedError

    def difference(self, f, g) -> Difference | None:
        """None if ``f == g``.  Raises StructureError if they are not parallel."""
        raise NotImplementedError

    def invert(self, f):
        """The inverse of ``f`` or a :class:`NotIso`."""
        raise NotImplementedError

    def describe(self, obj) -> str:
        return repr(obj)

    def hom(self, a, b):
        """Enumerate ``Hom(a, b)``; only finite-hom categories implement this."""
        raise NotImplementedError(f"{self.name} does not enumerate hom-sets")

    def same_object(self, a, b) -> bool:
        return a == b

    def equal(self, f, g) -> bool:
        return self.difference(f, g) is None

    def then(self, *fs):
        """Composite in diagram order: ``then(f, g, h) == h . g . f``."""
        out = fs[0]
        for f in fs[1:]:
            out = self.compose(f, out)
        return out

    def check_parallel(self, f, g):
        if not (self.same_object(self.dom(f), self.dom(g)) and self.same_object(self.cod(f), self.cod(g))):
            raise StructureError(
                f"compared morphisms are not parallel: {self.dom(f)!r}->{self.cod(f)!r} "
                f"vs {self.dom(g)!r}->{self.cod(g)!r}")

    def __repr__(self):
        return self.name


class FinSetCat(Category):
    name = "FinSet"

    def identity(self, obj):
        return FinFn.identity(obj)

    def compose(self, g, f):
        return compose(g, f)

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def difference(self, f, g):
        self.check_parallel(f, g)
        x = f.first_difference(g)
        return None if x is None else Difference(x, f(x), g(x))

    def invert(self, f):
        return invert(f)

    def hom(self, a, b):
        return all_functions(a, b)


FINSET = FinSetCat()


class Opposite(Category):
    """The formal opposite; morphisms are the underlying morphisms of the base."""

    def __init__(self, base: Category):
        self.base = base
        self.name = f"{base.name}^op"

    def identity(self, obj):
        return self.base.identity(obj)

    def compose(self, g, f):
        return self.base.compose(f, g)

    def dom(self, f):
        return self.base.cod(f)

    def cod(self, f):
        return self.base.dom(f)

    def difference(self, f, g):
        return self.base.difference(f, g)

    def invert(self, f):
        return self.base.invert(f)

    def hom(self, a, b):
        return self.base.hom(b, a)

    def describe(self, obj):
        return self.base.describe(obj)

    def same_object(self, a, b):
        return self.base.same_object(a, b)

    def __eq__(self, other):
        return isinstance(other, Opposite) and other.base == self.base

    def __hash__(self):
        return hash(("op", self.base))


def opposite(cat: Category) -> Category:
    """Formal opposite, unwrapping a double opposite."""
    return cat.base if isinstance(cat, Opposite) else Opposite(cat)


@dataclass(frozen=True)
class FinPresCat(Category):
    """A finitely presented category: named objects and morphisms with a full
    composition table ``(g, f) -> g . f`` on composable pairs."""

    objects: tuple
    morphisms: dict  # name -> (dom, cod)
    identity_of: dict  # object -> identity morphism name
    table: dict  # (g, f) -> h
    name: str = "C"

    def identity(self, obj):
        return self.identity_of[obj]

    def compose(self, g, f):
        if self.morphisms[f][1] != self.morphisms[g][0]:
            raise CompositionError(self.morphisms[f][1], self.morphisms[g][0])
        try:
            return self.table[(g, f)]
        except KeyError:
            raise StructureError(f"composition table has no entry for {g} . {f}") from None

    def dom(self, f):
        return self.morphisms[f][0]

    def cod(self, f):
        return self.morphisms[f][1]

    def difference(self, f, g):
        self.check_parallel(f, g)
        return None if f == g else Difference(f, f, g)

    def invert(self, f):
        d, c = self.morphisms[f]
        for g, (gd, gc) in self.morphisms.items():
            if gd == c and gc == d and self.table.get((g, f)) == self.identity_of[d] \
                    and self.table.get((f, g)) == self.identity_of[c]:
                return g
        return NotIso("no inverse", (f,))

    def hom(self, a, b) -> list:
        return [f for f, (d, c) in self.morphisms.items() if d == a and c == b]

    def non_identity(self) -> list:
        ids = set(self.identity_of.values())
        return [f for f in self.morphisms if f not in ids]

    def __hash__(self):
        return hash((self.objects, tuple(sorted(self.morphisms.items(), key=repr))))

    def __eq__(self, other):
        return (isinstance(other, FinPresCat) and self.objects == other.objects
                and self.morphisms == other.morphisms and self.table == other.table)

    @classmethod
    def discrete(cls, objects: Sequence, name="D") -> FinPresCat:
        objs = tuple(objects)
        ids = {o: f"id_{o}" for o in objs}
        return cls(objs, {ids[o]: (o, o) for o in objs}, ids,
                   {(ids[o], ids[o]): ids[o] for o in objs}, name)

    @classmethod
    def from_monoid(cls, elements: Sequence, op: Callable, unit, name="BM") -> FinPresCat:
        """One-object category of a monoid (table need not be validated)."""
        els = tuple(elements)
        return cls(("*",), {e: ("*", "*") for e in els}, {"*": unit},
                   {(g, f): op(g, f) for g in els for f in els}, name)

    @classmethod
    def generated(cls, objects: Sequence, arrows: dict, name="C") -> FinPresCat:
        """Free category on a graph with no composable pair of non-identity
        arrows (e.g. a single arrow ``x -> y``)."""
        objs = tuple(objects)
        ids = {o: f"id_{o}" for o in objs}
        morphisms = {ids[o]: (o, o) for o in objs}
        morphisms.update(arrows)
        table = {}
        for f, (d, c) in morphisms.items():
            table[(ids[c], f)] = f
            table[(f, ids[d])] = f
        for f, (d, c) in arrows.items():
            for g, (d2, c2) in arrows.items():
                if d2 == c:
                    raise ValueError("generated() only handles graphs without composable arrows")
        return cls(objs, morphisms, ids, table, name)


TERMINAL_CAT = FinPresCat.discrete(["*"], name="1")


@dataclass(frozen=True)
class Functor:
    source: Category
    target: Category
    obj: Callable
    mor: Callable
    name: str = "F"

    def __repr__(self):
        return self.name


def identity_functor(cat: Category) -> Functor:
    return Functor(cat, cat, lambda x: x, lambda f: f, name=f"Id_{cat.name}")


def opposite_functor(F: Functor) -> Functor:
    return Functor(opposite(F.source), opposite(F.target), F.obj, F.mor, name=f"{F.name}^op")


@dataclass(frozen=True)
class Bifunctor:
    left: Category
    right: Category
    target: Category
    obj: Callable
    mor: Callable
    name: str = "(x)"

    def __repr__(self):
        return self.name


def apply_bifunctor(B: Bifunctor, f, g):
    return B.mor(f, g)


def product_bifunctor() -> Bifunctor:
    from .finset import fn_product, product_set
    return Bifunctor(FINSET, FINSET, FINSET, product_set, fn_product, name="x")


@dataclass(frozen=True)
class NatFamily:
    """A family of morphisms indexed by tuples of objects.

    ``source`` and ``target`` send a tuple of morphisms (one per index slot)
    to the image morphism of the source/target functor; ``slots`` lists the
    category each index ranges over, and ``category`` is where the components
    live.
    """

    name: str
    category: Category
    component: Callable
    slots: tuple = ()
    source: Callable | None = None
    target: Callable | None = None

    def __call__(self, *objs):
        return self.component(*objs)

    def at(self, *objs):
        try:
            return self.component(*objs)
        except (KeyError, LookupError) as e:
            raise IndexError(f"{self.name} has no component at {objs!r}") from e


def _describe_mor(cat: Category, f) -> str:
    return f"{cat.describe(cat.dom(f))}->{cat.describe(cat.cod(f))}"


def check_category_laws(cat: Category, palette: Sequence | None = None) -> CheckReport:
    """Identity and associativity laws on a palette of morphisms (all
    morphisms for a FinPresCat)."""
    rep = CheckReport(f"category-laws[{cat.name}]")
    if palette is None:
        if not isinstance(cat, FinPresCat):
            raise ValueError("a palette is required unless the category is finitely presented")
        palette = list(cat.morphisms)
        for f in palette:
            for g in palette:
                if cat.cod(f) == cat.dom(g):
                    ok = (g, f) in cat.table
                    rep.record("totality", (g, f), detail=None if ok else "missing entry")
        if rep.failures:
            return rep
    label = (lambda f: f) if isinstance(cat, FinPresCat) else (lambda f: _describe_mor(cat, f))
    for f in palette:
        rep.record("left-identity", (label(f),),
                   cat.difference(cat.compose(cat.identity(cat.cod(f)), f), f))
        rep.record("right-identity", (label(f),),
                   cat.difference(cat.compose(f, cat.identity(cat.dom(f))), f))
    for f, g, h in itertools.product(palette, repeat=3):
        if cat.same_object(cat.cod(f), cat.dom(g)) and cat.same_object(cat.cod(g), cat.dom(h)):
            lhs = cat.compose(cat.compose(h, g), f)
            rhs = cat.compose(h, cat.compose(g, f))
            rep.record("associativity", (label(h), label(g), label(f)), cat.difference(lhs, rhs))
    return rep


def check_functor_laws(F: Functor, palette: Sequence) -> CheckReport:
    rep = CheckReport(f"functor-laws[{F.name}]")
    C, D = F.source, F.target
    objs = []
    for f in palette:
        for o in (C.dom(f), C.cod(f)):
            if not any(C.same_object(o, p) for p in objs):
                objs.append(o)
    for o in objs:
        rep.record("preserves-identity", (C.describe(o),),
                   D.difference(F.mor(C.identity(o)), D.identity(F.obj(o))))
    for f, g in itertools.product(palette, repeat=2):
        if C.same_object(C.cod(f), C.dom(g)):
            rep.record("preserves-composition", (_describe_mor(C, g), _describe_mor(C, f)),
                       D.difference(F.mor(C.compose(g, f)), D.compose(F.mor(g), F.mor(f))))
    return rep


def check_naturality(t: NatFamily, arrows: Sequence[tuple]) -> CheckReport:
    """For each tuple of arrows ``f``: ``target(f) . t(dom f) == t(cod f) . source(f)``."""
    rep = CheckReport(f"naturality[{t.name}]")
    cat = t.category
    for fs in arrows:
        doms = tuple(s.dom(f) for s, f in zip(t.slots, fs))
        cods = tuple(s.cod(f) for s, f in zip(t.slots, fs))
        lhs = cat.compose(t.target(*fs), t.at(*doms))
        rhs = cat.compose(t.at(*cods), t.source(*fs))
        rep.record("naturality", tuple(_describe_mor(s, f) for s, f in zip(t.slots, fs)),
                   cat.difference(lhs, rhs))
    return rep


def all_arrows(objects: Sequence[FinSet]) -> list[FinFn]:
    """Every function between members of a palette of finite sets."""
    return [f for X in objects for Y in objects for f in all_functions(X, Y)]
