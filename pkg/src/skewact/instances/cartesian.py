"""FinSet with the cartesian product, and its action on itself."""
from __future__ import annotations

from dataclasses import dataclass

from ..category import FINSET, Functor, identity_functor, product_bifunctor
from ..coherence import LEFT, AdjunctionData, BraidingData, SkewMonoidalData, StrongActionData
from ..errors import StructureError
from ..finset import STAR, FinFn, FinSet, NotIso, product_set, singleton


def _assoc(X, Y, Z):
    return FinFn.build(product_set(product_set(X, Y), Z), product_set(X, product_set(Y, Z)),
                       lambda p: (p[0][0], (p[0][1], p[1])), check=False)


def _assoc_inv(X, Y, Z):
    return FinFn.build(product_set(X, product_set(Y, Z)), product_set(product_set(X, Y), Z),
                       lambda p: ((p[0], p[1][0]), p[1][1]), check=False)


def _left_unit(X):
    return FinFn.build(product_set(singleton(), X), X, lambda p: p[1], check=False)


def _left_unit_inv(X):
    return FinFn.build(X, product_set(singleton(), X), lambda x: (STAR, x), check=False)


def _right_unit(X):
    return FinFn.build(X, product_set(X, singleton()), lambda x: (x, STAR), check=False)


def _right_unit_inv(X):
    return FinFn.build(product_set(X, singleton()), X, lambda p: p[0], check=False)


def finset_cartesian() -> SkewMonoidalData:
    """``(FinSet, x, 1)`` as left skew data: ``gamma = a``, ``lam = l``,
    ``rho = r^-1`` (so ``rho: A -> A x 1``)."""
    return SkewMonoidalData(FINSET, product_bifunctor(), singleton(), _assoc, _left_unit,
                            _right_unit, LEFT, name="(FinSet,x)")


def finset_cartesian_right() -> SkewMonoidalData:
    """The same monoidal category presented as right skew data, with the
    inverse constraints."""
    from ..coherence import RIGHT
    return SkewMonoidalData(FINSET, product_bifunctor(), singleton(), _assoc_inv, _left_unit_inv,
                            _right_unit_inv, RIGHT, name="(FinSet,x)r")


def swap(X: FinSet, Y: FinSet) -> FinFn:
    return FinFn.build(product_set(X, Y), product_set(Y, X), lambda p: (p[1], p[0]), check=False)


def finset_swap(V: SkewMonoidalData | None = None) -> BraidingData:
    return BraidingData(V or finset_cartesian(), swap)


def reversal(X: FinSet) -> FinFn:
    """The involution reversing the element order of ``X``."""
    return FinFn(X, X, tuple(reversed(X.elements)), check=False)


def mutated_cartesian() -> SkewMonoidalData:
    """Cartesian data whose associator is pre-composed with an involution on
    the first factor.  Reversal commutes with products, so the pentagon
    survives; the unit axioms fail once that factor has two points."""
    from ..finset import compose, fn_product

    def gamma(X, Y, Z):
        return compose(fn_product(reversal(X), FinFn.identity(product_set(Y, Z))), _assoc(X, Y, Z))

    return SkewMonoidalData(FINSET, product_bifunctor(), singleton(), gamma, _left_unit,
                            _right_unit, LEFT, name="(FinSet,x)-mutated")


@dataclass
class SelfActionInstance:
    acting: SkewMonoidalData
    action: StrongActionData
    adjunction: AdjunctionData


def self_action_instance(V: SkewMonoidalData) -> SelfActionInstance:
    """V acting on itself by its tensor, fixed at ``J = I``.

    ``J_* = (-) (x) I`` has the identity functor as left adjoint with unit
    ``rho`` and counit ``rho^-1``; the multiplicator is the associator and
    the unitor is the left unitor.  The right unitor must be invertible.
    """
    if V.orientation != LEFT:
        raise ValueError("self_action_instance expects left skew data")
    cat = V.category
    action = StrongActionData(V, cat, V.tensor, V.gamma, V.lam, LEFT, name=f"self[{V.name}]")
    I = V.unit

    def counit(X):
        inv = cat.invert(V.rho(X))
        if isinstance(inv, NotIso):
            raise StructureError(f"right unitor at {X!r} is not invertible: {inv.reason}")
        return inv

    right = Functor(cat, cat, lambda X: V.t(X, I), lambda f: V.tm(f, cat.identity(I)), name="(-)xI")
    adj = AdjunctionData(identity_functor(cat), right, V.rho, counit, "LL", I, name="id-|(-)xI")
    return SelfActionInstance(V, action, adj)
