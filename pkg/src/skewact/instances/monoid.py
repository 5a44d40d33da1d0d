"""Warping FinSet by a finite monoid M.

V is the category of finite M-sets with the cartesian tensor, acting on
FinSet by ``(X, .) * B = UX x B``.  Fixing ``J = 1`` gives ``J_* = U(-) x 1``
with the free M-set functor ``M x (-)`` as left adjoint, so the warped
tensor is ``A (.) B = M x A x B`` (stored as ``((m, a), b)``).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from ..category import FINSET, Bifunctor, Category, Functor
from ..coherence import (LEFT, RIGHT, AdjunctionData, BraidingData, InternalHomCandidate,
                         SkewMonoidalData, StrongActionData)
from ..errors import CompositionError, MonoidError, StructureError
from ..finset import (STAR, FinFn, FinSet, NotIso, Tagged, compose, exponential_set,
                      fn_product, invert, product_set, singleton)
from ..report import CheckReport, Difference


@dataclass(frozen=True)
class MonoidTable:
    """A monoid on ``elements`` with row-major table ``table[i][j] = e_i + e_j``."""

    elements: tuple
    table: tuple
    unit: object
    name: str = field(default="M", compare=False)

    def __post_init__(self):
        n = len(self.elements)
        if n == 0:
            raise MonoidError("a monoid needs at least one element")
        if len(set(self.elements)) != n:
            raise MonoidError("duplicate monoid elements")
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise MonoidError(f"operation table must be {n}x{n}")
        els = set(self.elements)
        for r in self.table:
            for v in r:
                if v not in els:
                    raise MonoidError(f"table entry {v!r} is not an element")
        if self.unit not in els:
            raise MonoidError(f"unit {self.unit!r} is not an element")
        for x in self.elements:
            if self.op(self.unit, x) != x or self.op(x, self.unit) != x:
                raise MonoidError(f"{self.unit!r} is not a two-sided identity (fails at {x!r})")
        for x, y, z in itertools.product(self.elements, repeat=3):
            if self.op(self.op(x, y), z) != self.op(x, self.op(y, z)):
                raise MonoidError(f"not associative at ({x!r}, {y!r}, {z!r})")

    @cached_property
    def _index(self):
        return {e: i for i, e in enumerate(self.elements)}

    def op(self, x, y):
        i = self._index
        return self.table[i[x]][i[y]]

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def carrier(self) -> FinSet:
        return FinSet(self.elements, name=self.name)

    def is_commutative(self) -> bool:
        return all(self.op(x, y) == self.op(y, x) for x in self.elements for y in self.elements)

    def is_group(self) -> bool:
        """Decided by searching the table for two-sided inverses."""
        return all(any(self.op(x, y) == self.unit and self.op(y, x) == self.unit
                       for y in self.elements) for x in self.elements)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], name="M") -> MonoidTable:
        """Elements ``0..n-1`` with ``0`` the identity."""
        n = len(rows)
        return cls(tuple(range(n)), tuple(tuple(r) for r in rows), 0, name)

    @classmethod
    def cyclic(cls, n: int) -> MonoidTable:
        return cls.from_rows([[(i + j) % n for j in range(n)] for i in range(n)], name=f"Z{n}")

    @classmethod
    def trivial(cls) -> MonoidTable:
        return cls.from_rows([[0]], name="1")

    @classmethod
    def boolean_or(cls) -> MonoidTable:
        return cls.from_rows([[0, 1], [1, 1]], name="OR")


def _canonical_table(rows: tuple, n: int) -> tuple:
    best = None
    for perm in itertools.permutations(range(1, n)):
        p = (0,) + perm
        inv = [0] * n
        for i, q in enumerate(p):
            inv[q] = i
        relabeled = tuple(tuple(p[rows[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        if best is None or relabeled < best:
            best = relabeled
    return best


def enumerate_monoids(max_order: int = 3) -> list[MonoidTable]:
    """Every monoid of order at most ``max_order`` up to isomorphism, by
    brute-force search over tables with ``0`` as identity."""
    out = []
    for n in range(1, max_order + 1):
        seen = set()
        free = [(i, j) for i in range(1, n) for j in range(1, n)]
        for values in itertools.product(range(n), repeat=len(free)):
            rows = [[0] * n for _ in range(n)]
            for i in range(n):
                rows[0][i] = i
                rows[i][0] = i
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            if any(rows[rows[x][y]][z] != rows[x][rows[y][z]]
                   for x in range(n) for y in range(n) for z in range(n)):
                continue
            canon = _canonical_table(tuple(map(tuple, rows)), n)
            if canon not in seen:
                seen.add(canon)
        for k, canon in enumerate(sorted(seen)):
            out.append(MonoidTable.from_rows(canon, name=f"M{n}.{k}"))
    return out


# -- M-sets -----------------------------------------------------------------

class MSet:
    """A finite M-set: carrier plus the table of ``m . x``."""

    __slots__ = ("monoid", "carrier", "acts", "name", "_hash")

    def __init__(self, monoid: MonoidTable, carrier: FinSet, act, name: str | None = None,
                 check: bool = True):
        self.monoid = monoid
        self.carrier = carrier
        if callable(act):
            self.acts = tuple(tuple(act(m, x) for x in carrier.elements) for m in monoid.elements)
        else:
            self.acts = tuple(tuple(r) for r in act)
        self.name = name
        self._hash = hash((carrier, self.acts))
        if check:
            self._validate()

    def _validate(self):
        M, X = self.monoid, self.carrier
        for x in X.elements:
            if self.act(M.unit, x) != x:
                raise StructureError(f"unit does not act trivially on {x!r}")
            for m, n in itertools.product(M.elements, repeat=2):
                if self.act(M.op(m, n), x) != self.act(m, self.act(n, x)):
                    raise StructureError(f"action is not associative at ({m!r}, {n!r}, {x!r})")

    def act(self, m, x):
        return self.acts[self.monoid._index[m]][self.carrier.index[x]]

    def __eq__(self, other):
        return (isinstance(other, MSet) and self._hash == other._hash
                and self.carrier == other.carrier and self.acts == other.acts)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.name:
            return self.name
        return f"MSet{self.carrier!r}"


@dataclass(frozen=True)
class MSetHom:
    dom: MSet
    cod: MSet
    fn: FinFn

    def __call__(self, x):
        return self.fn(x)


class MSetCat(Category):
    def __init__(self, monoid: MonoidTable):
        self.monoid = monoid
        self.name = f"{monoid.name}-Set"

    def hom_of(self, dom: MSet, cod: MSet, fn: FinFn, check: bool = False) -> MSetHom:
        if check:
            for m in self.monoid.elements:
                for x in dom.carrier.elements:
                    if fn(dom.act(m, x)) != cod.act(m, fn(x)):
                        raise StructureError(f"map is not equivariant at ({m!r}, {x!r})")
        return MSetHom(dom, cod, fn)

    def identity(self, obj):
        return MSetHom(obj, obj, FinFn.identity(obj.carrier))

    def compose(self, g, f):
        if f.cod != g.dom:
            raise CompositionError(f.cod, g.dom)
        return MSetHom(f.dom, g.cod, compose(g.fn, f.fn))

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def difference(self, f, g):
        self.check_parallel(f, g)
        x = f.fn.first_difference(g.fn)
        return None if x is None else Difference(x, f.fn(x), g.fn(x))

    def invert(self, f):
        inv = invert(f.fn)
        return inv if isinstance(inv, NotIso) else MSetHom(f.cod, f.dom, inv)

    def hom(self, a, b):
        from ..finset import all_functions
        return [self.hom_of(a, b, fn) for fn in all_functions(a.carrier, b.carrier)
                if all(fn(a.act(m, x)) == b.act(m, fn(x))
                       for m in self.monoid.elements for x in a.carrier.elements)]

    def describe(self, obj):
        return repr(obj)

    def __eq__(self, other):
        return isinstance(other, MSetCat) and other.monoid == self.monoid

    def __hash__(self):
        return hash(("MSet", self.monoid))


def trivial_mset(M: MonoidTable, X: FinSet, name=None) -> MSet:
    return MSet(M, X, lambda m, x: x, name=name, check=False)


def free_mset(M: MonoidTable, A: FinSet) -> MSet:
    """``M x A`` with ``n . (m, a) = (n + m, a)``."""
    return MSet(M, product_set(M.carrier, A), lambda n, ma: (M.op(n, ma[0]), ma[1]),
                name=f"F({A!r})", check=False)


def mset_product(X: MSet, Y: MSet) -> MSet:
    name = f"({X!r}x{Y!r})" if X.name and Y.name else None
    return MSet(X.monoid, product_set(X.carrier, Y.carrier),
                lambda m, xy: (X.act(m, xy[0]), Y.act(m, xy[1])), name=name, check=False)


def enumerate_msets(M: MonoidTable, max_size: int) -> list[MSet]:
    """Every M-set structure on ``{0..k-1}`` for ``k <= max_size``."""
    out = []
    for k in range(max_size + 1):
        X = FinSet.range(k)
        maps = list(itertools.product(range(k), repeat=k))
        for choice in itertools.product(maps, repeat=M.order):
            acts = dict(zip(M.elements, choice))
            if acts[M.unit] != tuple(range(k)):
                continue
            if all(acts[M.op(m, n)][x] == acts[m][acts[n][x]]
                   for m in M.elements for n in M.elements for x in range(k)):
                out.append(MSet(M, X, [acts[m] for m in M.elements],
                                name=f"X{k}.{len(out)}", check=False))
    return out


def mset_monoidal(M: MonoidTable) -> SkewMonoidalData:
    """Finite M-sets, cartesian product with diagonal action, unit ``1``."""
    cat = MSetCat(M)
    I = trivial_mset(M, singleton(), name="1")

    def tensor_mor(f, g):
        return MSetHom(mset_product(f.dom, g.dom), mset_product(f.cod, g.cod), fn_product(f.fn, g.fn))

    tensor = Bifunctor(cat, cat, cat, mset_product, tensor_mor, name="x")

    def gamma(X, Y, Z):
        src = mset_product(mset_product(X, Y), Z)
        tgt = mset_product(X, mset_product(Y, Z))
        return MSetHom(src, tgt, FinFn.build(src.carrier, tgt.carrier,
                                             lambda p: (p[0][0], (p[0][1], p[1])), check=False))

    def lam(X):
        src = mset_product(I, X)
        return MSetHom(src, X, FinFn.build(src.carrier, X.carrier, lambda p: p[1], check=False))

    def rho(X):
        tgt = mset_product(X, I)
        return MSetHom(X, tgt, FinFn.build(X.carrier, tgt.carrier, lambda x: (x, STAR), check=False))

    return SkewMonoidalData(cat, tensor, I, gamma, lam, rho, LEFT, name=f"{M.name}-Set")


def mset_swap(V: SkewMonoidalData) -> BraidingData:
    def c(X, Y):
        src, tgt = mset_product(X, Y), mset_product(Y, X)
        return MSetHom(src, tgt, FinFn.build(src.carrier, tgt.carrier, lambda p: (p[1], p[0]),
                                             check=False))
    return BraidingData(V, c)


@dataclass
class MonoidInstance:
    monoid: MonoidTable
    acting: SkewMonoidalData
    action: StrongActionData
    adjunction: AdjunctionData
    braiding: BraidingData


def monoid_warping(M: MonoidTable) -> MonoidInstance:
    """Action, free/forgetful adjunction and swap braiding for ``M``."""
    V = mset_monoidal(M)
    Vc = V.category
    J = singleton()

    def act_obj(X: MSet, B: FinSet):
        return product_set(X.carrier, B)

    def act_mor(f: MSetHom, g: FinFn):
        return fn_product(f.fn, g)

    action = Bifunctor(Vc, FINSET, FINSET, act_obj, act_mor, name="U(-)x(-)")

    def m(X, Y, B):
        src = product_set(mset_product(X, Y).carrier, B)
        tgt = product_set(X.carrier, product_set(Y.carrier, B))
        return FinFn.build(src, tgt, lambda p: (p[0][0], (p[0][1], p[1])), check=False)

    def m_inv(X, Y, B):
        src = product_set(X.carrier, product_set(Y.carrier, B))
        tgt = product_set(mset_product(X, Y).carrier, B)
        return FinFn.build(src, tgt, lambda p: ((p[0], p[1][0]), p[1][1]), check=False)

    def u(B):
        return FinFn.build(product_set(singleton(), B), B, lambda p: p[1], check=False)

    def u_inv(B):
        return FinFn.build(B, product_set(singleton(), B), lambda b: (STAR, b), check=False)

    S = StrongActionData(V, FINSET, action, m, u, LEFT, m_inv, u_inv, name=f"{M.name}-warp")

    free = Functor(FINSET, Vc, lambda A: free_mset(M, A),
                   lambda f: MSetHom(free_mset(M, f.dom), free_mset(M, f.cod),
                                     fn_product(FinFn.identity(M.carrier), f)),
                   name="M x (-)")
    forget = Functor(Vc, FINSET, lambda X: act_obj(X, J),
                     lambda f: fn_product(f.fn, FinFn.identity(J)), name="U(-)x1")

    def unit(A):
        return FinFn.build(A, act_obj(free_mset(M, A), J), lambda a: ((M.unit, a), STAR), check=False)

    def counit(X):
        FX = free_mset(M, act_obj(X, J))
        return MSetHom(FX, X, FinFn.build(FX.carrier, X.carrier,
                                          lambda p: X.act(p[0], p[1][0]), check=False))

    adj = AdjunctionData(free, forget, unit, counit, "LL", J, name=f"free-forget[{M.name}]")
    return MonoidInstance(M, V, S, adj, mset_swap(V))


def finset_palette(max_size: int) -> list[FinSet]:
    """One set of each size ``0..max_size`` with letter labels."""
    letters = "abcdefghijklmnopqrstuvwxyz"
    return [FinSet(letters[:k], name="{" + ",".join(letters[:k]) + "}") for k in range(max_size + 1)]


def monoid_gamma_formula(M: MonoidTable, A: FinSet, B: FinSet, C: FinSet) -> FinFn:
    """Elementwise associator ``(n, (m, a, b), c) -> (m + n, a, (n, b, c))``."""
    MA = product_set(M.carrier, A)
    src = product_set(product_set(M.carrier, product_set(MA, B)), C)
    MB = product_set(M.carrier, B)
    tgt = product_set(MA, product_set(MB, C))
    return FinFn.build(src, tgt, lambda p: ((M.op(p[0][1][0][0], p[0][0]), p[0][1][0][1]),
                                            ((p[0][0], p[0][1][1]), p[1])), check=False)


def monoid_lambda_formula(M: MonoidTable, B: FinSet) -> FinFn:
    src = product_set(product_set(M.carrier, singleton()), B)
    return FinFn.build(src, B, lambda p: p[1], check=False)


def monoid_rho_formula(M: MonoidTable, A: FinSet) -> FinFn:
    tgt = product_set(product_set(M.carrier, A), singleton())
    return FinFn.build(A, tgt, lambda a: ((M.unit, a), STAR), check=False)


# -- instance-level theorems -----------------------------------------------

def shear_is_bijective(M: MonoidTable) -> bool:
    """Whether ``(m, n) -> (m + n, m)`` is a bijection of ``M x M``."""
    images = {(M.op(m, n), m) for m in M.elements for n in M.elements}
    return len(images) == M.order ** 2


@dataclass
class GroupIffResult:
    is_group: bool
    associator_invertible: bool
    oracle: bool
    witness: str | None

    @property
    def consistent(self) -> bool:
        return self.is_group == self.associator_invertible == self.oracle


def group_iff_associator_invertible(M: MonoidTable, palette: Sequence[FinSet],
                                    skew: SkewMonoidalData | None = None) -> GroupIffResult:
    """Compare "M is a group" with "every associator component on the
    palette is invertible" and with the shear-map oracle."""
    if skew is None:
        from ..construction import build_skew_structure
        inst = monoid_warping(M)
        skew = build_skew_structure(inst.action, inst.adjunction)
    nonempty = [A for A in palette if len(A)]
    if not nonempty:
        raise ValueError("palette needs a nonempty carrier")
    inv_all, witness = True, None
    for A, B, C in itertools.product(nonempty, repeat=3):
        inv = invert(skew.gamma(A, B, C))
        if isinstance(inv, NotIso):
            inv_all = False
            witness = f"gamma at ({A!r}, {B!r}, {C!r}): {inv.reason} {inv.witness!r}"
            break
    return GroupIffResult(M.is_group(), inv_all, shear_is_bijective(M), witness)


def unit_invertibility(M: MonoidTable, palette: Sequence[FinSet],
                       skew: SkewMonoidalData | None = None) -> CheckReport:
    """Invertibility of the unitors on the palette, compared with ``|M| = 1``."""
    if skew is None:
        from ..construction import build_skew_structure
        inst = monoid_warping(M)
        skew = build_skew_structure(inst.action, inst.adjunction)
    rep = CheckReport("unit-invertibility")
    all_inv = True
    for A in palette:
        for fam, f in (("lambda", skew.lam(A)), ("rho", skew.rho(A))):
            inv = invert(f)
            if isinstance(inv, NotIso):
                all_inv = False
                rep.notes.append(f"{fam} at {A!r}: {inv.reason} {inv.witness!r}")
    trivial = M.order == 1
    rep.notes.insert(0, f"unitors invertible on palette: {all_inv}; |M| = {M.order}")
    rep.record("unitors-invertible-iff-trivial", (M.name,),
               detail=None if all_inv == trivial else "theorem violation")
    return rep


def closedness_witness_monoid(M: MonoidTable) -> tuple[InternalHomCandidate, InternalHomCandidate]:
    """Left closed: ``<B,C> = U((C^B)^M) x 1`` with the cofree action.
    Right closed: ``<A,C> = C^(M x A)``."""
    Mc = M.carrier
    midx = Mc.index

    def left_obj(B, C):
        return product_set(exponential_set(Mc, exponential_set(B, C)), singleton())

    def left_transpose(A, B, C, f):
        return FinFn.build(A, left_obj(B, C), lambda a: (Tagged("fn", tuple(
            Tagged("fn", tuple(f(((m, a), b)) for b in B.elements)) for m in Mc.elements)), STAR),
            check=False)

    def left_untranspose(A, B, C, g):
        bidx = B.index
        src = product_set(product_set(Mc, A), B)
        return FinFn.build(src, C, lambda p: g(p[0][1])[0].value[midx[p[0][0]]].value[bidx[p[1]]],
                           check=False)

    def left_param(p, C):
        # p: B' -> B gives <B,C> -> <B',C>
        B, B2 = p.cod, p.dom
        bidx = B.index
        return FinFn.build(left_obj(B, C), left_obj(B2, C), lambda e: (Tagged("fn", tuple(
            Tagged("fn", tuple(phi.value[bidx[p(b)]] for b in B2.elements)) for phi in e[0].value)), STAR),
            check=False)

    def left_value(B, h):
        C, C2 = h.dom, h.cod
        return FinFn.build(left_obj(B, C), left_obj(B, C2), lambda e: (Tagged("fn", tuple(
            Tagged("fn", tuple(h(c) for c in phi.value)) for phi in e[0].value)), STAR), check=False)

    left = InternalHomCandidate(LEFT, left_obj, left_transpose, left_untranspose, left_param,
                                left_value, name="U(cofree(C^B))x1")

    def right_obj(A, C):
        return exponential_set(product_set(Mc, A), C)

    def right_transpose(A, B, C, f):
        MA = product_set(Mc, A)
        return FinFn.build(B, right_obj(A, C),
                           lambda b: Tagged("fn", tuple(f((ma, b)) for ma in MA.elements)), check=False)

    def right_untranspose(A, B, C, g):
        MA = product_set(Mc, A)
        src = product_set(MA, B)
        return FinFn.build(src, C, lambda p: g(p[1]).value[MA.index[p[0]]], check=False)

    def right_param(p, C):
        A, A2 = p.cod, p.dom
        MA, MA2 = product_set(Mc, A), product_set(Mc, A2)
        return FinFn.build(right_obj(A, C), right_obj(A2, C), lambda e: Tagged("fn", tuple(
            e.value[MA.index[(m, p(a))]] for m, a in MA2.elements)), check=False)

    def right_value(A, h):
        return FinFn.build(right_obj(A, h.dom), right_obj(A, h.cod),
                           lambda e: Tagged("fn", tuple(h(c) for c in e.value)), check=False)

    right = InternalHomCandidate(RIGHT, right_obj, right_transpose, right_untranspose, right_param,
                                 right_value, name="C^(MxA)")
    return left, right
