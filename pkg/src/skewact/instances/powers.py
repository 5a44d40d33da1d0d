"""Copower, power and exponential-warping instances over FinSet.

copower: V = (FinSet, x) acts on FinSet by ``X . c = X x c`` (the X-fold
    copower); ``J_* = (-) x j`` has right adjoint ``c |-> c^j``, giving a
    right skew tensor ``c (.) d = c^j x d``.
power: V = (FinSet^op, x) acts on FinSet by ``X |> c = c^X``; ``J_* = j^(-)``
    has left adjoint ``c |-> j^c`` (into FinSet^op), giving a left skew
    tensor ``c (.) d = d^(j^c)``.
exponential warping: V = (FinSet, x) acts on the right by ``A * X = A x X``;
    ``J^* = J x (-)`` has right adjoint ``(-)^J``, giving a left skew tensor
    ``P (.) A = P x A^J`` with a right braiding induced by the swap.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..category import FINSET, Bifunctor, Functor
from ..coherence import (LEFT, RIGHT, AdjunctionData, BraidingData, SkewMonoidalData,
                         StrongActionData, opposite_skew)
from ..finset import (FinFn, FinSet, Tagged, exponential, exponential_set, fn_power,
                      fn_product, product_set, singleton)
from .cartesian import (_assoc, _assoc_inv, _left_unit, _left_unit_inv, _right_unit,
                        finset_cartesian, finset_cartesian_right, finset_swap)


@dataclass
class ActionInstance:
    acting: SkewMonoidalData
    action: StrongActionData
    adjunction: AdjunctionData
    braiding: BraidingData | None = None


def _cartesian_action(V: SkewMonoidalData) -> StrongActionData:
    """``X . c = X x c`` with ``m`` the associator and ``u`` the left unitor."""
    act = Bifunctor(FINSET, FINSET, FINSET, product_set, fn_product, name="x")
    return StrongActionData(V, FINSET, act, _assoc, _left_unit, LEFT,
                            lambda X, Y, B: _assoc_inv(X, Y, B), _left_unit_inv, name="copower")


def copower_instance(j: FinSet) -> ActionInstance:
    V = finset_cartesian()
    S = _cartesian_action(V)
    Jstar = Functor(FINSET, FINSET, lambda X: product_set(X, j),
                    lambda f: fn_product(f, FinFn.identity(j)), name="(-)xj")
    Jsharp = Functor(FINSET, FINSET, lambda c: exponential_set(j, c),
                     lambda g: fn_power(FinFn.identity(j), g), name="(-)^j")

    def unit(X):
        return FinFn.build(X, exponential_set(j, product_set(X, j)),
                           lambda x: Tagged("fn", tuple((x, k) for k in j.elements)), check=False)

    def counit(c):
        return exponential(j, c).ev

    adj = AdjunctionData(Jstar, Jsharp, unit, counit, "LR", j, name="(-)xj -| (-)^j")
    return ActionInstance(V, S, adj)


def copower_tensor_size(c: int, d: int, j: int) -> int:
    return d * c ** j


def finset_op_cartesian() -> SkewMonoidalData:
    """``(FinSet^op, x, 1)`` as left skew data (the opposite of the right
    skew presentation with inverse constraints)."""
    return opposite_skew(finset_cartesian_right())


def power_instance(j: FinSet) -> ActionInstance:
    V = finset_op_cartesian()
    Vc = V.category  # FinSet^op

    act = Bifunctor(Vc, FINSET, FINSET, lambda X, c: exponential_set(X, c), fn_power, name="power")

    def m(X, Y, c):
        # c^(X x Y) -> (c^Y)^X, currying
        XY = product_set(X, Y)
        src = exponential_set(XY, c)
        tgt = exponential_set(X, exponential_set(Y, c))
        idx = XY.index
        return FinFn.build(src, tgt, lambda h: Tagged("fn", tuple(
            Tagged("fn", tuple(h.value[idx[(x, y)]] for y in Y.elements)) for x in X.elements)),
            check=False)

    def m_inv(X, Y, c):
        XY = product_set(X, Y)
        src = exponential_set(X, exponential_set(Y, c))
        yi, xi = Y.index, X.index
        return FinFn.build(src, exponential_set(XY, c), lambda h: Tagged("fn", tuple(
            h.value[xi[x]].value[yi[y]] for x, y in XY.elements)), check=False)

    def u(c):
        return FinFn.build(exponential_set(singleton(), c), c, lambda h: h.value[0], check=False)

    def u_inv(c):
        return FinFn.build(c, exponential_set(singleton(), c), lambda x: Tagged("fn", (x,)), check=False)

    S = StrongActionData(V, FINSET, act, m, u, LEFT, m_inv, u_inv, name="power")

    Jstar = Functor(Vc, FINSET, lambda X: exponential_set(X, j),
                    lambda f: fn_power(f, FinFn.identity(j)), name="j^(-)")
    Jshriek = Functor(FINSET, Vc, lambda c: exponential_set(c, j),
                      lambda g: fn_power(g, FinFn.identity(j)), name="j^(-)op")

    def unit(c):
        # c -> j^(j^c), e |-> (h |-> h(e))
        E = exponential_set(c, j)
        ci = c.index
        return FinFn.build(c, exponential_set(E, j),
                           lambda e: Tagged("fn", tuple(h.value[ci[e]] for h in E.elements)), check=False)

    def counit(X):
        # in FinSet^op: j^(j^X) -> X, i.e. the function X -> j^(j^X)
        E = exponential_set(X, j)
        xi = X.index
        return FinFn.build(X, exponential_set(E, j),
                           lambda x: Tagged("fn", tuple(h.value[xi[x]] for h in E.elements)), check=False)

    adj = AdjunctionData(Jshriek, Jstar, unit, counit, "LL", j, name="j^(-) -| j^(-)")
    return ActionInstance(V, S, adj)


def power_tensor_size(c: int, d: int, j: int) -> int:
    return d ** (j ** c)


def exponential_warping_instance(J: FinSet) -> ActionInstance:
    V = finset_cartesian()
    act = Bifunctor(FINSET, FINSET, FINSET, product_set, fn_product, name="x")
    # right action: m(A,X,Y): (A x X) x Y -> A x (X x Y), u(A): A -> A x 1
    S = StrongActionData(V, FINSET, act, _assoc, _right_unit, RIGHT,
                         _assoc_inv, lambda A: FinFn.build(product_set(A, singleton()), A,
                                                           lambda p: p[0], check=False),
                         name="right-cartesian")
    Jupper = Functor(FINSET, FINSET, lambda X: product_set(J, X),
                     lambda f: fn_product(FinFn.identity(J), f), name="Jx(-)")
    Jsharp = Functor(FINSET, FINSET, lambda A: exponential_set(J, A),
                     lambda g: fn_power(FinFn.identity(J), g), name="(-)^J")

    def unit(X):
        return FinFn.build(X, exponential_set(J, product_set(J, X)),
                           lambda x: Tagged("fn", tuple((k, x) for k in J.elements)), check=False)

    def counit(A):
        ji = J.index
        return FinFn.build(product_set(J, exponential_set(J, A)), A,
                           lambda p: p[1].value[ji[p[0]]], check=False)

    adj = AdjunctionData(Jupper, Jsharp, unit, counit, "RR", J, name="Jx(-) -| (-)^J")
    return ActionInstance(V, S, adj, finset_swap(V))


def exponential_tensor_size(p: int, a: int, j: int) -> int:
    return p * a ** j
