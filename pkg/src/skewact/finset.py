"""Finite sets, total functions between them, and the finite (co)limits the
instances are built from.

Every morphism in the package ultimately bottoms out in a :class:`FinFn`, and
equality of morphisms is extensional comparison of tables.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import CompositionError, DiagramError

Label = Hashable

STAR = "*"


class Tagged:
    """A structured label such as ``inl(x)`` or a function table ``fn(...)``.

    Plain tuples are used for pairs; tagged labels never compare equal to a
    tuple, so ``inl(x)`` cannot collide with a pair ``("inl", x)``.
    """

    __slots__ = ("tag", "value", "_hash")

    def __init__(self, tag: str, value: Label):
        self.tag = tag
        self.value = value
        self._hash = hash((Tagged, tag, value))

    def __eq__(self, other):
        if self is other:
            return True
        return (type(other) is Tagged and self._hash == other._hash
                and self.tag == other.tag and self.value == other.value)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.tag == "fn":
            return "fn[" + ",".join(map(repr, self.value)) + "]"
        return f"{self.tag}({self.value!r})"


def inl(x):
    return Tagged("inl", x)


def inr(x):
    return Tagged("inr", x)


_TYPE_RANK = {type(None): 0, bool: 1, int: 1, str: 2, tuple: 3, Tagged: 4, frozenset: 5}


def label_key(label: Label):
    """Total canonical order on labels, used for colimit representatives and
    for sorting derived carriers."""
    t = type(label)
    rank = _TYPE_RANK.get(t)
    if rank is None:
        return (9, t.__name__, repr(label))
    if rank == 3:
        return (3, tuple(label_key(x) for x in label))
    if rank == 4:
        return (4, label.tag, label_key(label.value))
    if rank == 5:
        return (5, tuple(sorted(label_key(x) for x in label)))
    if rank == 0:
        return (0,)
    return (rank, label)


class FinSet:
    """An ordered finite set of distinct labels.

    Equality is equality of the element sequences; ``name`` is cosmetic.
    """

    __slots__ = ("elements", "index", "name", "_hash")

    def __init__(self, elements: Iterable[Label] = (), name: str | None = None):
        elems = tuple(elements)
        index = {x: i for i, x in enumerate(elems)}
        if len(index) != len(elems):
            seen = set()
            dup = next(x for x in elems if x in seen or seen.add(x))
            raise ValueError(f"duplicate label {dup!r}")
        self.elements = elems
        self.index = index
        self.name = name
        self._hash = hash(elems)

    @classmethod
    def range(cls, n: int, name: str | None = None) -> FinSet:
        return cls(range(n), name=name)

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, FinSet) and self._hash == other._hash
                and self.elements == other.elements)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.name:
            return self.name
        if len(self.elements) > 6:
            shown = ",".join(map(repr, self.elements[:4]))
            return "{" + shown + f",...({len(self.elements)})" + "}"
        return "{" + ",".join(map(repr, self.elements)) + "}"


def singleton(label: Label = STAR) -> FinSet:
    return FinSet((label,), name="1")


EMPTY = FinSet((), name="0")


class FinFn:
    """A total function ``dom -> cod`` stored as a table aligned with
    ``dom.elements``."""

    __slots__ = ("dom", "cod", "images", "_hash")

    def __init__(self, dom: FinSet, cod: FinSet, images: Sequence[Label], check: bool = True):
        images = tuple(images)
        if check:
            if len(images) != len(dom):
                raise ValueError(f"table has {len(images)} entries, domain has {len(dom)}")
            for x, y in zip(dom.elements, images):
                if y not in cod.index:
                    raise ValueError(f"image {y!r} of {x!r} is not in codomain {cod!r}")
        self.dom = dom
        self.cod = cod
        self.images = images
        self._hash = None

    @classmethod
    def build(cls, dom: FinSet, cod: FinSet, fn: Callable[[Label], Label], check: bool = True) -> FinFn:
        return cls(dom, cod, [fn(x) for x in dom.elements], check=check)

    @classmethod
    def from_dict(cls, dom: FinSet, cod: FinSet, table: Mapping[Label, Label]) -> FinFn:
        missing = [x for x in dom.elements if x not in table]
        if missing:
            raise ValueError(f"table is not total: no image for {missing[0]!r}")
        return cls(dom, cod, [table[x] for x in dom.elements])

    @classmethod
    def identity(cls, X: FinSet) -> FinFn:
        return cls(X, X, X.elements, check=False)

    def __call__(self, x: Label) -> Label:
        return self.images[self.dom.index[x]]

    def as_dict(self) -> dict:
        return dict(zip(self.dom.elements, self.images))

    def first_difference(self, other: FinFn):
        """First domain element (in domain order) where the tables disagree."""
        for x, a, b in zip(self.dom.elements, self.images, other.images):
            if a != b:
                return x
        return None

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, FinFn) and self.dom == other.dom
                and self.cod == other.cod and self.images == other.images)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dom, self.cod, self.images))
        return self._hash

    def __repr__(self):
        pairs = ", ".join(f"{x!r}->{y!r}" for x, y in zip(self.dom.elements, self.images))
        if len(pairs) > 120:
            pairs = pairs[:117] + "..."
        return f"FinFn({self.dom!r} -> {self.cod!r}: {pairs})"


def compose(g: FinFn, f: FinFn) -> FinFn:
    """``g . f``."""
    if f.cod != g.dom:
        raise CompositionError(f.cod, g.dom)
    gi, gd = g.images, g.dom.index
    return FinFn(f.dom, g.cod, [gi[gd[y]] for y in f.images], check=False)


def compose_all(*fs: FinFn) -> FinFn:
    """Compose in diagrammatic order: ``compose_all(f, g, h) == h . g . f``."""
    out = fs[0]
    for f in fs[1:]:
        out = compose(f, out)
    return out


def constant(dom: FinSet, cod: FinSet, y: Label) -> FinFn:
    return FinFn(dom, cod, [y] * len(dom))


@dataclass(frozen=True)
class NotIso:
    """Returned by :func:`invert` for non-bijections."""

    reason: str  # "not injective" | "not surjective"
    witness: tuple

    def __bool__(self):
        return False


def invert(f: FinFn) -> FinFn | NotIso:
    seen: dict = {}
    for x, y in zip(f.dom.elements, f.images):
        if y in seen:
            return NotIso("not injective", (seen[y], x))
        seen[y] = x
    for y in f.cod.elements:
        if y not in seen:
            return NotIso("not surjective", (y,))
    return FinFn(f.cod, f.dom, [seen[y] for y in f.cod.elements], check=False)


def is_iso(f: FinFn) -> bool:
    return not isinstance(invert(f), NotIso)


def all_functions(X: FinSet, Y: FinSet) -> Iterator[FinFn]:
    """Every function ``X -> Y`` in lexicographic order of image tuples."""
    for images in itertools.product(Y.elements, repeat=len(X)):
        yield FinFn(X, Y, images, check=False)


# -- products ---------------------------------------------------------------

@lru_cache(maxsize=None)
def product_set(X: FinSet, Y: FinSet) -> FinSet:
    return FinSet([(x, y) for x in X.elements for y in Y.elements])


@dataclass(frozen=True)
class Product:
    obj: FinSet
    p1: FinFn
    p2: FinFn

    def pair(self, f: FinFn, g: FinFn) -> FinFn:
        if f.dom != g.dom:
            raise CompositionError(f.dom, g.dom, "pairing needs a common domain")
        return FinFn(f.dom, self.obj, list(zip(f.images, g.images)), check=False)


def product(X: FinSet, Y: FinSet) -> Product:
    P = product_set(X, Y)
    return Product(P,
                   FinFn(P, X, [p[0] for p in P.elements], check=False),
                   FinFn(P, Y, [p[1] for p in P.elements], check=False))


def fn_product(f: FinFn, g: FinFn) -> FinFn:
    """``f x g`` between product sets."""
    fi, fd, gi, gd = f.images, f.dom.index, g.images, g.dom.index
    dom = product_set(f.dom, g.dom)
    return FinFn(dom, product_set(f.cod, g.cod),
                 [(fi[fd[x]], gi[gd[y]]) for x, y in dom.elements], check=False)


# -- coproducts -------------------------------------------------------------

@lru_cache(maxsize=None)
def coproduct_set(X: FinSet, Y: FinSet) -> FinSet:
    return FinSet([inl(x) for x in X.elements] + [inr(y) for y in Y.elements])


@dataclass(frozen=True)
class Coproduct:
    obj: FinSet
    i1: FinFn
    i2: FinFn

    def copair(self, f: FinFn, g: FinFn) -> FinFn:
        if f.cod != g.cod:
            raise CompositionError(f.cod, g.cod, "copairing needs a common codomain")
        return FinFn(self.obj, f.cod,
                     [f(t.value) if t.tag == "inl" else g(t.value) for t in self.obj.elements],
                     check=False)


def coproduct(X: FinSet, Y: FinSet) -> Coproduct:
    S = coproduct_set(X, Y)
    return Coproduct(S,
                     FinFn(X, S, [inl(x) for x in X.elements], check=False),
                     FinFn(Y, S, [inr(y) for y in Y.elements], check=False))


# -- exponentials -----------------------------------------------------------

def fn_label(f: FinFn) -> Tagged:
    """The element of ``Y^X`` naming ``f: X -> Y``."""
    return Tagged("fn", f.images)


def label_fn(X: FinSet, Y: FinSet, label: Tagged) -> FinFn:
    return FinFn(X, Y, label.value, check=False)


@lru_cache(maxsize=None)
def exponential_set(X: FinSet, Y: FinSet) -> FinSet:
    return FinSet(Tagged("fn", images) for images in itertools.product(Y.elements, repeat=len(X)))


@dataclass(frozen=True)
class Exponential:
    """``Y^X`` with evaluation ``Y^X x X -> Y``."""

    base: FinSet  # X
    target: FinSet  # Y
    obj: FinSet
    ev: FinFn

    def curry(self, f: FinFn, Z: FinSet) -> FinFn:
        """``Z -> Y^X`` from ``f: Z x X -> Y``."""
        if f.dom != product_set(Z, self.base) or f.cod != self.target:
            raise CompositionError(f.dom, product_set(Z, self.base), "curry")
        return FinFn(Z, self.obj,
                     [Tagged("fn", tuple(f((z, x)) for x in self.base.elements)) for z in Z.elements],
                     check=False)

    def uncurry(self, g: FinFn) -> FinFn:
        if g.cod != self.obj:
            raise CompositionError(g.cod, self.obj, "uncurry")
        xi = self.base.index
        dom = product_set(g.dom, self.base)
        return FinFn(dom, self.target, [g(z).value[xi[x]] for z, x in dom.elements], check=False)


def exponential(X: FinSet, Y: FinSet) -> Exponential:
    E = exponential_set(X, Y)
    xi = X.index
    dom = product_set(E, X)
    ev = FinFn(dom, Y, [h.value[xi[x]] for h, x in dom.elements], check=False)
    return Exponential(X, Y, E, ev)


def fn_power(f: FinFn, g: FinFn) -> FinFn:
    """For ``f: X' -> X`` and ``g: Y -> Y'`` the map ``Y^X -> Y'^X'``,
    ``h |-> g . h . f``."""
    src = exponential_set(f.cod, g.dom)
    tgt = exponential_set(f.dom, g.cod)
    xi = f.cod.index
    gi, gd = g.images, g.dom.index
    fimg = f.images
    return FinFn(src, tgt,
                 [Tagged("fn", tuple(gi[gd[h.value[xi[x]]]] for x in fimg)) for h in src.elements],
                 check=False)


# -- colimits ---------------------------------------------------------------

class UnionFind:
    """Disjoint sets whose representative is the smallest member under
    :func:`label_key`."""

    def __init__(self, items: Iterable[Label] = ()):
        self.parent: dict = {}
        self._key: dict = {}
        for x in items:
            self.add(x)

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self._key[x] = label_key(x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self._key[ry] < self._key[rx]:
            rx, ry = ry, rx
        self.parent[ry] = rx

    def classes(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


@dataclass(frozen=True)
class DiagramArrow:
    name: Label
    src: Label
    tgt: Label
    fn: FinFn


@dataclass(frozen=True)
class Diagram:
    """Finite sets indexed by object labels plus one function per arrow.

    When ``index`` (a finite presented category) is supplied, ``arrows`` must
    contain one entry per morphism of ``index`` and functoriality is
    validated; otherwise the arrows are just a graph and identities may be
    omitted.
    """

    objects: Mapping[Label, FinSet]
    arrows: Sequence[DiagramArrow] = ()
    index: Any = None


@dataclass
class Colimit:
    obj: FinSet
    injections: dict
    _rep: dict = field(repr=False)
    diagram: Diagram = field(repr=False, default=None)

    def cls(self, label: Label, x: Label) -> Label:
        """The element of the colimit containing ``x`` from component ``label``."""
        return self._rep[(label, x)]

    def factor(self, cocone: Mapping[Label, FinFn], target: FinSet) -> FinFn:
        """The unique map out of the colimit through which ``cocone`` factors."""
        for a in self.diagram.arrows:
            lhs = compose(cocone[a.tgt], a.fn)
            if lhs != cocone[a.src]:
                raise DiagramError(f"cocone does not commute with arrow {a.name!r}")
        table = {}
        for (label, x), rep in self._rep.items():
            table.setdefault(rep, cocone[label](x))
        return FinFn(self.obj, target, [table[r] for r in self.obj.elements], check=False)


def _check_functorial(diagram: Diagram):
    idx = diagram.index
    by_name = {a.name: a for a in diagram.arrows}
    for name, (d, c) in idx.morphisms.items():
        if name not in by_name:
            raise DiagramError(f"no function given for index arrow {name!r}")
        a = by_name[name]
        if a.fn.dom != diagram.objects[d] or a.fn.cod != diagram.objects[c]:
            raise DiagramError(f"arrow {name!r} has wrong boundary")
    for obj in idx.objects:
        i = by_name[idx.identity_of[obj]].fn
        if i != FinFn.identity(diagram.objects[obj]):
            raise DiagramError(f"identity at {obj!r} is not sent to an identity")
    for (g, f), h in idx.table.items():
        lhs = compose(by_name[g].fn, by_name[f].fn)
        if lhs != by_name[h].fn:
            raise DiagramError(f"composite {g} . {f} = {h} is not preserved")


def finite_colimit(diagram: Diagram) -> Colimit:
    """Colimit of a finite diagram of finite sets.

    The carrier is the quotient of the tagged disjoint union by the smallest
    equivalence relation identifying ``(s, x)`` with ``(t, fn(x))`` for every
    arrow; each class is labelled by its smallest member.
    """
    if diagram.index is not None:
        _check_functorial(diagram)
    uf = UnionFind((label, x) for label, X in diagram.objects.items() for x in X.elements)
    for a in diagram.arrows:
        for x, y in zip(a.fn.dom.elements, a.fn.images):
            uf.union((a.src, x), (a.tgt, y))
    rep = {e: uf.find(e) for e in uf.parent}
    carrier = FinSet(sorted(set(rep.values()), key=label_key))
    injections = {
        label: FinFn(X, carrier, [rep[(label, x)] for x in X.elements], check=False)
        for label, X in diagram.objects.items()
    }
    return Colimit(carrier, injections, rep, diagram)


def coequalizer(f: FinFn, g: FinFn) -> Colimit:
    if f.dom != g.dom or f.cod != g.cod:
        raise DiagramError("coequalizer needs parallel arrows")
    return finite_colimit(Diagram({"src": f.dom, "tgt": f.cod},
                                  (DiagramArrow("f", "src", "tgt", f),
                                   DiagramArrow("g", "src", "tgt", g))))
