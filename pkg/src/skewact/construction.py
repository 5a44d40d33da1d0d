"""Skew monoidal structures from a strong action and an adjunction.

The native construction takes a left action ``*`` of V on A, an object J of
A and a left adjoint ``J_!`` to ``J_* = (-)*J``, and produces

    A (.) B = J_!A * B
    gamma   = m . (fusion * C)
    lambda  = u . (eps_I * A) . (J_!(u_J^-1) * A)
    rho     = eta

where the fusion map is the strength ``eps . J_!(m^-1 . (X*eta))`` at
``X = J_!A``.  The other three action/adjoint combinations are reduced to
this one by passing to opposite categories and reversed tensors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .category import Bifunctor
from .coherence import (LEFT, RIGHT, AdjunctionData, BraidingData, MonoidalFunctorData,
                        SkewBraidingData, SkewMonoidalData, StrongActionData,
                        as_left_action, check_adjunction_triangles, check_hexagons,
                        opposite_action, opposite_adjunction, opposite_skew, reverse_skew)
from .errors import AdjunctionError, BraidingError, StructureError
from .finset import NotIso
from .report import CheckReport


# -- transposes -------------------------------------------------------------

def adjoint_transpose(adj: AdjunctionData, f, X):
    """``f: FX -> Y`` to ``G(f) . eta_X: X -> GY``."""
    C = adj.left.source
    return C.compose(adj.right.mor(f), adj.unit(X))


def adjoint_untranspose(adj: AdjunctionData, g, Y):
    """``g: X -> GY`` to ``eps_Y . F(g): FX -> Y``."""
    D = adj.left.target
    return D.compose(adj.counit(Y), adj.left.mor(g))


# -- normalized action access ----------------------------------------------

class ActionOps:
    """Forward/backward multiplicator and unitor of a left action,
    independent of the orientation of the acting category.

    Forward means ``m: (X.Y)*A -> X*(Y*A)`` and ``u: I*A -> A``; for a
    right-skew acting category the stored components point the other way.
    """

    def __init__(self, S: StrongActionData):
        if S.handedness != LEFT:
            raise ValueError("ActionOps needs a left action")
        self.S = S
        self.A = S.carrier
        self.V = S.acting
        self._stored_forward = S.acting.orientation == LEFT
        self._inv: dict = {}

    def _inverse(self, key, f, given: Callable | None, args):
        if key in self._inv:
            return self._inv[key]
        if given is not None:
            g = given(*args)
        else:
            g = self.A.invert(f)
            if isinstance(g, NotIso):
                raise StructureError(f"{key[0]} component at {args!r} is not invertible: "
                                     f"{g.reason} {g.witness!r}")
        self._inv[key] = g
        return g

    def _stored_m_inv(self, X, Y, B):
        return self._inverse(("m", X, Y, B), None if self.S.m_inv else self.S.m(X, Y, B),
                             self.S.m_inv, (X, Y, B))

    def _stored_u_inv(self, B):
        return self._inverse(("u", B), None if self.S.u_inv else self.S.u(B), self.S.u_inv, (B,))

    def m(self, X, Y, B):
        return self.S.m(X, Y, B) if self._stored_forward else self._stored_m_inv(X, Y, B)

    def m_inv(self, X, Y, B):
        return self._stored_m_inv(X, Y, B) if self._stored_forward else self.S.m(X, Y, B)

    def u(self, B):
        return self.S.u(B) if self._stored_forward else self._stored_u_inv(B)

    def u_inv(self, B):
        return self._stored_u_inv(B) if self._stored_forward else self.S.u(B)

    def act(self, X, B):
        return self.S.act(X, B)

    def actm(self, f, g):
        return self.S.actm(f, g)


# -- strength and fusion ----------------------------------------------------

@dataclass
class FusionData:
    """Strength ``sigma(X,B): J_!(X*B) -> X . J_!B`` and the fusion map
    ``fusion(A,B) = sigma(J_!A, B)``.

    ``strength_override`` replaces the computed strength (used to test that
    the transpose equations detect a wrong one).
    """

    action: StrongActionData
    adj: AdjunctionData
    strength_override: Callable | None = None
    _ops: ActionOps = field(init=False, repr=False)
    _cache: dict = field(init=False, default_factory=dict, repr=False)

    def __post_init__(self):
        self._ops = ActionOps(self.action)

    def _transposed(self, X, B):
        """``m^-1 . (X*eta_B): X*B -> (X . J_!B)*J``."""
        ops, adj = self._ops, self.adj
        V = self.action.acting
        FB = adj.left.obj(B)
        return ops.A.compose(ops.m_inv(X, FB, adj.anchor),
                             ops.actm(V.id(X), adj.unit(B)))

    def computed_strength(self, X, B):
        key = ("s", X, B)
        if key not in self._cache:
            V = self.action.acting
            self._cache[key] = adjoint_untranspose(
                self.adj, self._transposed(X, B), V.t(X, self.adj.left.obj(B)))
        return self._cache[key]

    def strength(self, X, B):
        if self.strength_override is not None:
            return self.strength_override(X, B)
        return self.computed_strength(X, B)

    def fusion(self, A, B):
        return self.strength(self.adj.left.obj(A), B)

    def check(self, v_palette: Sequence, a_palette: Sequence) -> CheckReport:
        """Both transpose equations for the strength at every ``(X, B)`` and
        for the fusion map at every ``(A, B)``."""
        rep = CheckReport("transpose-equations")
        ops, adj = self._ops, self.adj
        Ac, Vc = ops.A, self.action.acting.category
        J = adj.anchor
        pairs = [(X, B, "strength") for X in v_palette for B in a_palette]
        pairs += [(adj.left.obj(A), B, "fusion") for A in a_palette for B in a_palette]
        for X, B, kind in pairs:
            objs = (Vc.describe(X), Ac.describe(B))
            sigma = self.strength(X, B)
            lhs = Ac.compose(ops.actm(sigma, Ac.identity(J)), adj.unit(ops.act(X, B)))
            rep.record(f"AT[{kind}]", objs, Ac.difference(lhs, self._transposed(X, B)))
            rep.record(f"AT*[{kind}]", objs, Vc.difference(self.computed_strength(X, B), sigma))
        return rep


def build_strength(action: StrongActionData, adj: AdjunctionData, X, B):
    """The strength component at ``(X, B)`` (native LL data)."""
    return FusionData(action, adj).strength(X, B)


def build_fusion(action: StrongActionData, adj: AdjunctionData, A, B):
    return FusionData(action, adj).fusion(A, B)


# -- the structure ----------------------------------------------------------

def _native_structure(action: StrongActionData, adj: AdjunctionData,
                      fusion: FusionData | None = None) -> SkewMonoidalData:
    ops = ActionOps(action)
    fusion = fusion or FusionData(action, adj)
    A = action.carrier
    V = action.acting
    F = adj.left
    J = adj.anchor
    I = V.unit

    def tensor_obj(a, b):
        return ops.act(F.obj(a), b)

    def tensor_mor(f, g):
        return ops.actm(F.mor(f), g)

    tensor = Bifunctor(A, A, A, tensor_obj, tensor_mor, name="J_!(-)*(-)")

    def gamma(a, b, c):
        return A.compose(ops.m(F.obj(a), F.obj(b), c),
                         ops.actm(fusion.fusion(a, b), A.identity(c)))

    unit_counit = []

    def iota_hat():
        # eps_I . J_!(u_J^-1): J_!J -> I
        if not unit_counit:
            unit_counit.append(V.category.compose(adj.counit(I), F.mor(ops.u_inv(J))))
        return unit_counit[0]

    def lam(b):
        return A.compose(ops.u(b), ops.actm(iota_hat(), A.identity(b)))

    def rho(a):
        return adj.unit(a)

    return SkewMonoidalData(A, tensor, J, gamma, lam, rho, LEFT, name=f"warp[{action.name}]")


@dataclass
class LLPresentation:
    """Native data equivalent to a given variant, plus how to transport the
    result back."""

    action: StrongActionData
    adj: AdjunctionData
    steps: tuple  # applied in order to the native result

    def finish(self, D: SkewMonoidalData) -> SkewMonoidalData:
        for step in self.steps:
            D = step(D)
        return D


def ll_presentation(action: StrongActionData, adj: AdjunctionData, variant: str) -> LLPresentation:
    """Reduce a variant to native left-action/left-adjoint data.

    LR: pass to opposites (the right adjoint becomes a left adjoint).
    RL: read the right action as a left action of the reversed tensor.
    RR: both.
    """
    if variant != adj.variant:
        raise ValueError(f"variant {variant!r} does not match adjunction variant {adj.variant!r}")
    if variant == "LL":
        _require(action, LEFT, variant)
        return LLPresentation(action, adj, ())
    if variant == "LR":
        _require(action, LEFT, variant)
        return LLPresentation(opposite_action(action), opposite_adjunction(adj, "LL"),
                              (opposite_skew,))
    if variant == "RL":
        _require(action, RIGHT, variant)
        return LLPresentation(as_left_action(action), replace_variant(adj, "LL"), (reverse_skew,))
    _require(action, RIGHT, variant)
    left = as_left_action(action)
    return LLPresentation(opposite_action(left), opposite_adjunction(adj, "LL"),
                          (opposite_skew, reverse_skew))


def replace_variant(adj: AdjunctionData, variant: str) -> AdjunctionData:
    return AdjunctionData(adj.left, adj.right, adj.unit, adj.counit, variant, adj.anchor, adj.name)


def _require(action, handedness, variant):
    if action.handedness != handedness:
        raise ValueError(f"variant {variant} needs a {handedness} action")


def build_skew_structure(action: StrongActionData, adj: AdjunctionData, variant: str | None = None,
                         palette: Sequence | None = None) -> SkewMonoidalData:
    """The skew monoidal structure on the acted-upon category.

    With a palette, the triangle identities are checked first (on the palette
    and on the images of the left adjoint of the native presentation) and
    failure raises AdjunctionError.
    """
    variant = variant or adj.variant
    pres = ll_presentation(action, adj, variant)
    if palette is not None:
        native = pres.adj
        rep = check_adjunction_triangles(native, list(palette),
                                         [native.left.obj(a) for a in palette])
        if not rep.ok:
            raise AdjunctionError("triangle identities fail: " + rep.failures[0].describe())
    return pres.finish(_native_structure(pres.action, pres.adj))


# -- induced monoidal functors ---------------------------------------------

def build_lax_on_right_adjoint(action: StrongActionData, adj: AdjunctionData,
                               skew: SkewMonoidalData | None = None) -> MonoidalFunctorData:
    """``phi(X,Y) = m^-1 . (eps_X * J_*Y)`` and ``iota = u_J^-1`` on ``J_*``."""
    ops = ActionOps(action)
    skew = skew or build_skew_structure(action, adj, "LL")
    A = action.carrier
    J = adj.anchor
    G = adj.right

    def phi(X, Y):
        return A.compose(ops.m_inv(X, Y, J), ops.actm(adj.counit(X), A.identity(G.obj(Y))))

    return MonoidalFunctorData(G, action.acting, skew, phi, ops.u_inv(J), "lax")


def build_oplax_on_left_adjoint(action: StrongActionData, adj: AdjunctionData,
                                skew: SkewMonoidalData | None = None,
                                fusion: FusionData | None = None) -> MonoidalFunctorData:
    """``phi_hat = fusion`` and ``iota_hat = eps_I . J_!(u_J^-1)`` on ``J_!``."""
    ops = ActionOps(action)
    fusion = fusion or FusionData(action, adj)
    skew = skew or _native_structure(action, adj, fusion)
    V = action.acting
    iota_hat = V.category.compose(adj.counit(V.unit), adj.left.mor(ops.u_inv(adj.anchor)))
    return MonoidalFunctorData(adj.left, skew, V, fusion.fusion, iota_hat, "oplax")


# -- invertibility ----------------------------------------------------------

@dataclass
class ProbeResult:
    """Which constraint components are invertible on a palette.

    ``witnesses`` keeps the first non-invertible component per family.
    """

    invertible: dict
    witnesses: dict
    implication_holds: bool
    palette_size: int

    def to_report(self) -> CheckReport:
        rep = CheckReport("probes")
        for fam, ok in self.invertible.items():
            rep.notes.append(f"{fam}: {'invertible' if ok else 'NOT invertible'} on palette"
                             + ("" if ok else f" ({self.witnesses[fam]})"))
        rep.record("fusion-and-eps_I-invertible-implies-gamma-lambda-invertible", (),
                   detail=None if self.implication_holds else "implication violated")
        return rep


def invertibility_probe(skew: SkewMonoidalData, fusion: FusionData, adj: AdjunctionData,
                        palette: Sequence) -> ProbeResult:
    """Invert every gamma, lambda, rho and fusion component on the palette and
    the counit at the unit, then test the implication that invertible fusion
    maps and counit at I force invertible gamma and lambda."""
    cat = skew.category
    Vc = fusion.action.acting.category
    invertible, witnesses = {}, {}

    def probe(fam, c, objs, f):
        inv = c.invert(f)
        invertible.setdefault(fam, True)
        if isinstance(inv, NotIso):
            if invertible[fam]:
                witnesses[fam] = (f"at ({', '.join(c.describe(o) for o in objs)}): "
                                  f"{inv.reason} {inv.witness!r}")
            invertible[fam] = False

    for a in palette:
        for b in palette:
            for c in palette:
                probe("gamma", cat, (a, b, c), skew.gamma(a, b, c))
            probe("fusion", Vc, (a, b), fusion.fusion(a, b))
        probe("lambda", cat, (a,), skew.lam(a))
        probe("rho", cat, (a,), skew.rho(a))
    I = fusion.action.acting.unit
    probe("eps_I", Vc, (I,), adj.counit(I))
    premise = invertible["fusion"] and invertible["eps_I"]
    holds = (not premise) or (invertible["gamma"] and invertible["lambda"])
    return ProbeResult(invertible, witnesses, holds, len(palette))


# -- braidings --------------------------------------------------------------

def build_braiding(action: StrongActionData, adj: AdjunctionData, c: BraidingData, variant: str,
                   palette: Sequence, skew: SkewMonoidalData | None = None) -> SkewBraidingData:
    """Skew braiding induced by a braiding ``c`` on the acting category.

    RR (right braiding): ``s(P,A,B) = m^-1 . (P * c) . m`` with ``c`` at
    ``(J^#A, J^#B)``.  LL (left braiding): ``s(P,A,B) = m . (c * P) . m^-1``
    with ``c`` at ``(J_!A, J_!B)``.
    """
    if variant not in ("RR", "LL"):
        raise ValueError("braidings are constructed for variants RR and LL")
    V = action.acting
    A = action.carrier
    skew = skew or build_skew_structure(action, adj, variant)
    if variant == "RR":
        img = adj.right.obj
    else:
        img = adj.left.obj
    hex_palette = []
    for a in palette:
        o = img(a)
        if not any(V.category.same_object(o, p) for p in hex_palette):
            hex_palette.append(o)
    rep = check_hexagons(c, hex_palette)
    if not rep.ok:
        raise BraidingError("braiding fails its hexagons: " + rep.failures[0].describe())

    if variant == "RR":
        if action.handedness != RIGHT:
            raise ValueError("RR needs a right action")
        minv: dict = {}

        def m_inv(P, X, Y):
            key = (P, X, Y)
            if key not in minv:
                g = A.invert(action.m(P, X, Y)) if action.m_inv is None else action.m_inv(P, X, Y)
                if isinstance(g, NotIso):
                    raise StructureError(f"multiplicator at {key!r} is not invertible")
                minv[key] = g
            return minv[key]

        def s(P, a, b):
            X, Y = img(a), img(b)
            return A.then(action.m(P, X, Y),
                          action.action.mor(A.identity(P), c.c(X, Y)),
                          m_inv(P, Y, X))

        return SkewBraidingData(skew, s, RIGHT)

    ops = ActionOps(action)

    def s(P, a, b):
        X, Y = img(a), img(b)
        return A.then(ops.m_inv(X, Y, P), ops.actm(c.c(X, Y), A.identity(P)), ops.m(Y, X, P))

    return SkewBraidingData(skew, s, LEFT)
