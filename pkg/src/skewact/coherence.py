"""Structure types and axiom suites.

Axioms that only involve the tensor, the constraints and a braiding-like
family are written once as pairs of paths (in diagram order) and evaluated
against concrete data; see :data:`SKEW_AXIOMS` and :data:`RIGHT_BRAIDING_AXIOMS`.
Right-skew data is checked by passing to the formal opposite, and left
braidings by passing to the opposite of the reversed structure.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace
from typing import Any, Callable, Sequence

from .category import Bifunctor, Category, Functor, opposite
from .errors import StructureError
from .finset import NotIso
from .report import CheckReport

LEFT, RIGHT = "left", "right"


def _flip(orientation: str) -> str:
    return RIGHT if orientation == LEFT else LEFT


@dataclass(frozen=True)
class SkewMonoidalData:
    """A skew monoidal category.

    Left orientation: ``gamma(A,B,C): (A.B).C -> A.(B.C)``, ``lam(A): I.A -> A``,
    ``rho(A): A -> A.I``.  Right orientation reverses all three.
    """

    category: Category
    tensor: Bifunctor
    unit: Any
    gamma: Callable
    lam: Callable
    rho: Callable
    orientation: str = LEFT
    name: str = "skew"

    def t(self, a, b):
        return self.tensor.obj(a, b)

    def tm(self, f, g):
        return self.tensor.mor(f, g)

    def id(self, obj):
        return self.category.identity(obj)


def opposite_skew(D: SkewMonoidalData) -> SkewMonoidalData:
    """The same data read in the opposite category; flips the orientation."""
    cat = opposite(D.category)
    tensor = Bifunctor(cat, cat, cat, D.tensor.obj, D.tensor.mor, name=D.tensor.name)
    return replace(D, category=cat, tensor=tensor, orientation=_flip(D.orientation),
                   name=f"{D.name}^op")


def reverse_skew(D: SkewMonoidalData) -> SkewMonoidalData:
    """``A (x)rev B = B (x) A``; flips the orientation."""
    t = D.tensor
    tensor = Bifunctor(t.right, t.left, t.target,
                       lambda a, b: t.obj(b, a), lambda f, g: t.mor(g, f), name=f"{t.name}^rev")
    return SkewMonoidalData(D.category, tensor, D.unit,
                            lambda a, b, c: D.gamma(c, b, a), D.rho, D.lam,
                            _flip(D.orientation), f"{D.name}^rev")


@dataclass(frozen=True)
class StrongActionData:
    """A strong action of ``acting`` on ``carrier``.

    Left action of a left-skew V: ``m(X,Y,A): (X.Y)*A -> X*(Y*A)`` and
    ``u(A): I*A -> A``.  Right action of a left-skew V: ``m(A,X,Y):
    (A*X)*Y -> A*(X.Y)`` and ``u(A): A -> A*I``.  For a right-skew V both
    directions are reversed.  ``m_inv``/``u_inv`` may be supplied to avoid
    computing inverses.
    """

    acting: SkewMonoidalData
    carrier: Category
    action: Bifunctor
    m: Callable
    u: Callable
    handedness: str = LEFT
    m_inv: Callable | None = None
    u_inv: Callable | None = None
    name: str = "action"

    def act(self, x, a):
        return self.action.obj(x, a)

    def actm(self, f, g):
        return self.action.mor(f, g)


def opposite_action(S: StrongActionData) -> StrongActionData:
    V = opposite_skew(S.acting)
    A = opposite(S.carrier)
    act = S.action
    left, right = (V.category, A) if S.handedness == LEFT else (A, V.category)
    return replace(S, acting=V, carrier=A,
                   action=Bifunctor(left, right, A, act.obj, act.mor, name=act.name),
                   name=f"{S.name}^op")


def as_left_action(S: StrongActionData) -> StrongActionData:
    """A right action of V as a left action of the reversed V."""
    if S.handedness != RIGHT:
        raise ValueError("as_left_action expects a right action")
    act = S.action
    m, m_inv = S.m, S.m_inv
    return StrongActionData(
        reverse_skew(S.acting), S.carrier,
        Bifunctor(S.acting.category, S.carrier, S.carrier,
                  lambda x, a: act.obj(a, x), lambda f, g: act.mor(g, f), name=f"{act.name}^rev"),
        lambda x, y, a: m(a, y, x), S.u, LEFT,
        None if m_inv is None else (lambda x, y, a: m_inv(a, y, x)), S.u_inv,
        name=f"{S.name}^rev")


VARIANTS = ("LL", "LR", "RL", "RR")


@dataclass(frozen=True)
class AdjunctionData:
    """``left -| right`` with ``unit(X): X -> right(left(X))`` and
    ``counit(Y): left(right(Y)) -> Y``.

    ``anchor`` is the object J whose induced functor is one of the two
    adjoints; ``variant`` says which (see :data:`VARIANTS`).
    """

    left: Functor
    right: Functor
    unit: Callable
    counit: Callable
    variant: str
    anchor: Any
    name: str = "adj"

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")


def opposite_adjunction(adj: AdjunctionData, variant: str) -> AdjunctionData:
    from .category import opposite_functor
    return AdjunctionData(opposite_functor(adj.right), opposite_functor(adj.left),
                          adj.counit, adj.unit, variant, adj.anchor, f"{adj.name}^op")


@dataclass(frozen=True)
class MonoidalFunctorData:
    """Lax: ``phi(X,Y): FX.FY -> F(X.Y)``, ``iota: I -> F I``.
    Oplax: ``phi(X,Y): F(X.Y) -> FX.FY``, ``iota: F I -> I``."""

    functor: Functor
    source: SkewMonoidalData
    target: SkewMonoidalData
    phi: Callable
    iota: Any
    direction: str = "lax"


@dataclass(frozen=True)
class BraidingData:
    host: SkewMonoidalData
    c: Callable


@dataclass(frozen=True)
class SkewBraidingData:
    """Right: ``s(P,A,B): (P.A).B -> (P.B).A``.  Left: ``s(P,A,B):
    A.(B.P) -> B.(A.P)``."""

    host: SkewMonoidalData
    s: Callable
    side: str = RIGHT


@dataclass(frozen=True)
class InternalHomCandidate:
    """A proposed right adjoint to one of the tensor's partial functors.

    ``side="left"``: ``(-).B -| <B,->``, ``transpose(A,B,C,f)`` is the map
    ``A -> <B,C>``.  ``side="right"``: ``A.(-) -| <A,->``, the transpose is
    ``B -> <A,C>``.  ``obj(P, C)`` gives ``<P,C>`` for the parameter P,
    ``param_mor(p, C)`` the contravariant action of ``p: P' -> P`` and
    ``value_mor(P, h)`` the covariant action of ``h: C -> C'``.
    """

    side: str
    obj: Callable
    transpose: Callable
    untranspose: Callable
    param_mor: Callable
    value_mor: Callable
    name: str = "<-,->"


# -- sampling ---------------------------------------------------------------

@dataclass(frozen=True)
class Sampling:
    """Tuple budget per axiom; beyond it, tuples are sampled with ``seed``."""

    limit: int | None = None
    seed: int = 0


def _tuples(palette: Sequence, n: int, sampling: Sampling | None, report: CheckReport, axiom: str):
    total = len(palette) ** n
    if sampling is None or sampling.limit is None or total <= sampling.limit:
        return list(itertools.product(palette, repeat=n))
    rng = random.Random(f"{sampling.seed}:{axiom}")
    picks = sorted(rng.sample(range(total), sampling.limit))
    report.notes.append(f"{axiom}: subsampled {sampling.limit} of {total} tuples (seed {sampling.seed})")
    out = []
    for i in picks:
        tup = []
        for _ in range(n):
            i, r = divmod(i, len(palette))
            tup.append(palette[r])
        out.append(tuple(reversed(tup)))
    return out


# -- path expressions -------------------------------------------------------
# objects: a variable name, or ("t", x, y) for x.y
# morphisms: ("g",A,B,C) ("l",A) ("r",A) ("s",P,A,B) ("id",X)
#            ("tl", m, X) for m.X and ("tr", X, m) for X.m

def T(x, y):
    return ("t", x, y)


def g_(a, b, c):
    return ("g", a, b, c)


def s_(p, a, b):
    return ("s", p, a, b)


def lam_(a):
    return ("l", a)


def rho_(a):
    return ("r", a)


def id_(x):
    return ("id", x)


def tl(m, x):
    return ("tl", m, x)


def tr(x, m):
    return ("tr", x, m)


SKEW_AXIOMS = {
    "LSkM1": (("A", "B", "C", "D"),
              [tl(g_("A", "B", "C"), "D"), g_("A", T("B", "C"), "D"), tr("A", g_("B", "C", "D"))],
              [g_(T("A", "B"), "C", "D"), g_("A", "B", T("C", "D"))]),
    "LSkM2": (("A", "B"), [rho_(T("A", "B")), g_("A", "B", "I")], [tr("A", rho_("B"))]),
    "LSkM3": (("A", "B"), [g_("I", "A", "B"), lam_(T("A", "B"))], [tl(lam_("A"), "B")]),
    "LSkM4": ((), [rho_("I"), lam_("I")], [id_("I")]),
    "LSkM5": (("A", "B"), [tl(rho_("A"), "B"), g_("A", "I", "B"), tr("A", lam_("B"))],
              [id_(T("A", "B"))]),
}

RIGHT_BRAIDING_AXIOMS = {
    "RSkBr1": (("P", "A", "B", "C"),
               [s_(T("P", "A"), "B", "C"), tl(s_("P", "A", "C"), "B"), s_(T("P", "C"), "A", "B")],
               [tl(s_("P", "A", "B"), "C"), s_(T("P", "B"), "A", "C"), tl(s_("P", "B", "C"), "A")]),
    "RSkBr2": (("P", "A", "B", "C"),
               [tl(s_("P", "A", "B"), "C"), s_(T("P", "B"), "A", "C"), tl(g_("P", "B", "C"), "A")],
               [g_(T("P", "A"), "B", "C"), s_("P", "A", T("B", "C"))]),
    "RSkBr3": (("P", "A", "B", "C"),
               [s_(T("P", "A"), "B", "C"), tl(s_("P", "A", "C"), "B"), g_(T("P", "C"), "A", "B")],
               [tl(g_("P", "A", "B"), "C"), s_("P", T("A", "B"), "C")]),
    "RSkBr4": (("P", "A", "B", "C"),
               [tl(g_("P", "A", "B"), "C"), g_("P", T("A", "B"), "C"), tr("P", s_("A", "B", "C"))],
               [s_(T("P", "A"), "B", "C"), tl(g_("P", "A", "C"), "B"), g_("P", T("A", "C"), "B")]),
}


def _dual_obj(o):
    if isinstance(o, tuple):
        return T(_dual_obj(o[2]), _dual_obj(o[1]))
    return o


def _dual_mor(m):
    k = m[0]
    d = _dual_obj
    if k == "g":
        return g_(d(m[3]), d(m[2]), d(m[1]))
    if k == "l":
        return rho_(d(m[1]))
    if k == "r":
        return lam_(d(m[1]))
    if k == "s":
        return s_(d(m[1]), d(m[2]), d(m[3]))
    if k == "id":
        return id_(d(m[1]))
    if k == "tl":
        return tr(d(m[2]), _dual_mor(m[1]))
    if k == "tr":
        return tl(_dual_mor(m[2]), d(m[1]))
    raise ValueError(k)


def dualize_axioms(axioms: dict, rename: Callable[[str], str] = lambda s: s) -> dict:
    """Transport axioms stated for ``(A^op, (x)rev)`` back to ``(A, (x))``:
    tensors and associator indices are reversed, unitors swap, and each path
    is read backwards."""
    return {rename(name): (vars_, [_dual_mor(m) for m in reversed(lhs)],
                           [_dual_mor(m) for m in reversed(rhs)])
            for name, (vars_, lhs, rhs) in axioms.items()}


LEFT_BRAIDING_AXIOMS = dualize_axioms(RIGHT_BRAIDING_AXIOMS, lambda s: s.replace("RSkBr", "LSkBr"))


def render_obj(o, top=True) -> str:
    if isinstance(o, tuple):
        inner = f"{render_obj(o[1], False)}⊛{render_obj(o[2], False)}"
        return inner if top else f"({inner})"
    return o


def render_mor(m) -> str:
    k, r = m[0], render_obj
    if k == "g":
        return f"γ[{r(m[1])},{r(m[2])},{r(m[3])}]"
    if k == "l":
        return f"λ[{r(m[1])}]"
    if k == "r":
        return f"ρ[{r(m[1])}]"
    if k == "s":
        return f"s^{r(m[1])}[{r(m[2])},{r(m[3])}]"
    if k == "id":
        return f"id[{r(m[1])}]"
    if k == "tl":
        return f"({render_mor(m[1])})⊛{r(m[2], False)}"
    return f"{r(m[1], False)}⊛({render_mor(m[2])})"


def render_axioms(axioms: dict) -> str:
    lines = []
    for name, (_, lhs, rhs) in axioms.items():
        left = " ∘ ".join(render_mor(m) for m in reversed(lhs))
        right = " ∘ ".join(render_mor(m) for m in reversed(rhs))
        lines.append(f"{name}: {left}\n{' ' * len(name)}  = {right}")
    return "\n".join(lines)


def _eval_obj(D: SkewMonoidalData, env: dict, o):
    if isinstance(o, tuple):
        return D.t(_eval_obj(D, env, o[1]), _eval_obj(D, env, o[2]))
    return env[o]


def _eval_mor(D: SkewMonoidalData, env: dict, families: dict, m):
    k = m[0]
    ob = lambda o: _eval_obj(D, env, o)  # noqa: E731
    if k == "g":
        return D.gamma(ob(m[1]), ob(m[2]), ob(m[3]))
    if k == "l":
        return D.lam(ob(m[1]))
    if k == "r":
        return D.rho(ob(m[1]))
    if k == "id":
        return D.id(ob(m[1]))
    if k == "tl":
        return D.tm(_eval_mor(D, env, families, m[1]), D.id(ob(m[2])))
    if k == "tr":
        return D.tm(D.id(ob(m[1])), _eval_mor(D, env, families, m[2]))
    return families[k](*(ob(x) for x in m[1:]))


def check_axioms(D: SkewMonoidalData, axioms: dict, palette: Sequence, suite: str,
                 families: dict | None = None, sampling: Sampling | None = None) -> CheckReport:
    """Evaluate each axiom's two paths on every tuple of palette objects."""
    families = families or {}
    rep = CheckReport(suite)
    cat = D.category
    for name, (vars_, lhs, rhs) in axioms.items():
        for objs in _tuples(palette, len(vars_), sampling, rep, name):
            env = dict(zip(vars_, objs))
            env["I"] = D.unit
            left = cat.then(*(_eval_mor(D, env, families, m) for m in lhs))
            right = cat.then(*(_eval_mor(D, env, families, m) for m in rhs))
            rep.record(name, [cat.describe(o) for o in objs], cat.difference(left, right))
    return rep


# -- suites -----------------------------------------------------------------

def check_skew_monoidal(D: SkewMonoidalData, palette: Sequence, sampling: Sampling | None = None) -> CheckReport:
    """LSkM1 on quadruples, LSkM2/3/5 on pairs, LSkM4 once.

    Right-skew data is checked as left-skew data on the opposite category.
    """
    if D.orientation == RIGHT:
        return check_skew_monoidal(opposite_skew(D), palette, sampling)
    return check_axioms(D, SKEW_AXIOMS, palette, "skew-monoidal", sampling=sampling)


def _check_invertible(rep: CheckReport, cat: Category, label: str, objs, f):
    inv = cat.invert(f)
    if isinstance(inv, NotIso):
        rep.fail(label, [cat.describe(o) for o in objs], f"{inv.reason}: {inv.witness!r}")
    else:
        rep.record(label, [cat.describe(o) for o in objs])


def check_strong_action(S: StrongActionData, v_palette: Sequence, a_palette: Sequence,
                        sampling: Sampling | None = None) -> CheckReport:
    """LAct1-3 (or their right-action analogues) and invertibility of every
    multiplicator and unitor component on the palettes."""
    if S.acting.orientation == RIGHT:
        rep = check_strong_action(opposite_action(S), v_palette, a_palette, sampling)
        return rep
    V, A = S.acting, S.carrier
    Vc = V.category
    rep = CheckReport("strong-action")
    I = V.unit
    d = A.describe
    dv = Vc.describe
    if S.handedness == LEFT:
        for X, Y, Z in _tuples(v_palette, 3, sampling, rep, "LAct1"):
            for B in a_palette:
                lhs = A.then(S.actm(V.gamma(X, Y, Z), A.identity(B)),
                             S.m(X, V.t(Y, Z), B),
                             S.actm(Vc.identity(X), S.m(Y, Z, B)))
                rhs = A.then(S.m(V.t(X, Y), Z, B), S.m(X, Y, S.act(Z, B)))
                rep.record("LAct1", (dv(X), dv(Y), dv(Z), d(B)), A.difference(lhs, rhs))
        for X in v_palette:
            for B in a_palette:
                lhs = A.then(S.m(I, X, B), S.u(S.act(X, B)))
                rep.record("LAct2", (dv(X), d(B)), A.difference(lhs, S.actm(V.lam(X), A.identity(B))))
                lhs = A.then(S.actm(V.rho(X), A.identity(B)), S.m(X, I, B),
                             S.actm(Vc.identity(X), S.u(B)))
                rep.record("LAct3", (dv(X), d(B)), A.difference(lhs, A.identity(S.act(X, B))))
        for X, Y in itertools.product(v_palette, repeat=2):
            for B in a_palette:
                _check_invertible(rep, A, "m-invertible", (X, Y, B), S.m(X, Y, B))
    else:
        for X, Y, Z in _tuples(v_palette, 3, sampling, rep, "RAct1"):
            for B in a_palette:
                lhs = A.then(S.actm(S.m(B, X, Y), Vc.identity(Z)),
                             S.m(B, V.t(X, Y), Z),
                             S.actm(A.identity(B), V.gamma(X, Y, Z)))
                rhs = A.then(S.m(S.act(B, X), Y, Z), S.m(B, X, V.t(Y, Z)))
                rep.record("RAct1", (d(B), dv(X), dv(Y), dv(Z)), A.difference(lhs, rhs))
        for X in v_palette:
            for B in a_palette:
                lhs = A.then(S.actm(S.u(B), Vc.identity(X)), S.m(B, I, X),
                             S.actm(A.identity(B), V.lam(X)))
                rep.record("RAct2", (d(B), dv(X)), A.difference(lhs, A.identity(S.act(B, X))))
                lhs = A.then(S.u(S.act(B, X)), S.m(B, X, I))
                rep.record("RAct3", (d(B), dv(X)),
                           A.difference(lhs, S.actm(A.identity(B), V.rho(X))))
        for X, Y in itertools.product(v_palette, repeat=2):
            for B in a_palette:
                _check_invertible(rep, A, "m-invertible", (B, X, Y), S.m(B, X, Y))
    for B in a_palette:
        _check_invertible(rep, A, "u-invertible", (B,), S.u(B))
    return rep


def check_adjunction_triangles(adj: AdjunctionData, left_palette: Sequence,
                               right_palette: Sequence) -> CheckReport:
    """``counit(F X) . F(unit X) = id`` on ``left_palette`` (objects of the
    left adjoint's source) and ``G(counit Y) . unit(G Y) = id`` on
    ``right_palette``."""
    F, G = adj.left, adj.right
    C, D = F.source, F.target
    rep = CheckReport("adjunction")
    for X in left_palette:
        FX = F.obj(X)
        lhs = D.compose(adj.counit(FX), F.mor(adj.unit(X)))
        rep.record("triangle-left", (C.describe(X),), D.difference(lhs, D.identity(FX)))
    for Y in right_palette:
        GY = G.obj(Y)
        lhs = C.compose(G.mor(adj.counit(Y)), adj.unit(GY))
        rep.record("triangle-right", (D.describe(Y),), C.difference(lhs, C.identity(GY)))
    return rep


def check_lax_monoidal(Fd: MonoidalFunctorData, palette: Sequence,
                       sampling: Sampling | None = None) -> CheckReport:
    if Fd.direction != "lax":
        raise ValueError("check_lax_monoidal needs direction 'lax'")
    F, S, Tg, phi, iota = Fd.functor, Fd.source, Fd.target, Fd.phi, Fd.iota
    Tc = Tg.category
    rep = CheckReport("lax-monoidal")
    d = S.category.describe
    for X, Y, Z in _tuples(palette, 3, sampling, rep, "lax-associativity"):
        FX, FY, FZ = F.obj(X), F.obj(Y), F.obj(Z)
        lhs = Tc.then(Tg.tm(phi(X, Y), Tg.id(FZ)), phi(S.t(X, Y), Z), F.mor(S.gamma(X, Y, Z)))
        rhs = Tc.then(Tg.gamma(FX, FY, FZ), Tg.tm(Tg.id(FX), phi(Y, Z)), phi(X, S.t(Y, Z)))
        rep.record("lax-associativity", (d(X), d(Y), d(Z)), Tc.difference(lhs, rhs))
    for X in palette:
        FX = F.obj(X)
        lhs = Tc.then(Tg.tm(iota, Tg.id(FX)), phi(S.unit, X), F.mor(S.lam(X)))
        rep.record("lax-left-unit", (d(X),), Tc.difference(lhs, Tg.lam(FX)))
        lhs = Tc.then(Tg.rho(FX), Tg.tm(Tg.id(FX), iota), phi(X, S.unit))
        rep.record("lax-right-unit", (d(X),), Tc.difference(lhs, F.mor(S.rho(X))))
    return rep


def check_oplax_monoidal(Fd: MonoidalFunctorData, palette: Sequence,
                         sampling: Sampling | None = None) -> CheckReport:
    if Fd.direction != "oplax":
        raise ValueError("check_oplax_monoidal needs direction 'oplax'")
    F, S, Tg, phi, iota = Fd.functor, Fd.source, Fd.target, Fd.phi, Fd.iota
    Tc = Tg.category
    rep = CheckReport("oplax-monoidal")
    d = S.category.describe
    for X, Y, Z in _tuples(palette, 3, sampling, rep, "oplax-associativity"):
        FX, FY, FZ = F.obj(X), F.obj(Y), F.obj(Z)
        lhs = Tc.then(F.mor(S.gamma(X, Y, Z)), phi(X, S.t(Y, Z)), Tg.tm(Tg.id(FX), phi(Y, Z)))
        rhs = Tc.then(phi(S.t(X, Y), Z), Tg.tm(phi(X, Y), Tg.id(FZ)), Tg.gamma(FX, FY, FZ))
        rep.record("oplax-associativity", (d(X), d(Y), d(Z)), Tc.difference(lhs, rhs))
    for X in palette:
        FX = F.obj(X)
        lhs = Tc.then(phi(S.unit, X), Tg.tm(iota, Tg.id(FX)), Tg.lam(FX))
        rep.record("oplax-left-unit", (d(X),), Tc.difference(lhs, F.mor(S.lam(X))))
        lhs = Tc.then(F.mor(S.rho(X)), phi(X, S.unit), Tg.tm(Tg.id(FX), iota))
        rep.record("oplax-right-unit", (d(X),), Tc.difference(lhs, Tg.rho(FX)))
    return rep


def check_hexagons(b: BraidingData, palette: Sequence, symmetric: bool = False,
                   sampling: Sampling | None = None) -> CheckReport:
    """Both hexagon identities for ``c`` on a (genuinely monoidal) host, and
    invertibility of ``c``; with ``symmetric`` also ``c[Y,X] . c[X,Y] = id``."""
    V, c = b.host, b.c
    cat = V.category
    rep = CheckReport("hexagons")
    d = cat.describe

    def a_inv(x, y, z):
        inv = cat.invert(V.gamma(x, y, z))
        if isinstance(inv, NotIso):
            raise StructureError(f"associator at {(x, y, z)!r} is not invertible: host is not monoidal")
        return inv

    for X, Y, Z in _tuples(palette, 3, sampling, rep, "hexagon-1"):
        lhs = cat.then(V.gamma(X, Y, Z), c(X, V.t(Y, Z)), V.gamma(Y, Z, X))
        rhs = cat.then(V.tm(c(X, Y), V.id(Z)), V.gamma(Y, X, Z), V.tm(V.id(Y), c(X, Z)))
        rep.record("hexagon-1", (d(X), d(Y), d(Z)), cat.difference(lhs, rhs))
        lhs = cat.then(a_inv(X, Y, Z), c(V.t(X, Y), Z), a_inv(Z, X, Y))
        rhs = cat.then(V.tm(V.id(X), c(Y, Z)), a_inv(X, Z, Y), V.tm(c(X, Z), V.id(Y)))
        rep.record("hexagon-2", (d(X), d(Y), d(Z)), cat.difference(lhs, rhs))
    for X, Y in itertools.product(palette, repeat=2):
        _check_invertible(rep, cat, "c-invertible", (X, Y), c(X, Y))
        if symmetric:
            lhs = cat.compose(c(Y, X), c(X, Y))
            rep.record("c-symmetry", (d(X), d(Y)), cat.difference(lhs, V.id(V.t(X, Y))))
    return rep


def check_right_braiding(sb: SkewBraidingData, palette: Sequence,
                         sampling: Sampling | None = None) -> CheckReport:
    """RSkBr1-4 on quadruples and invertibility of every ``s`` component."""
    if sb.side != RIGHT:
        raise ValueError("check_right_braiding needs side 'right'")
    if sb.host.orientation != LEFT:
        raise ValueError("right braidings are checked on left skew monoidal hosts")
    rep = check_axioms(sb.host, RIGHT_BRAIDING_AXIOMS, palette, "right-braiding",
                       families={"s": sb.s}, sampling=sampling)
    cat = sb.host.category
    for P, A, B in itertools.product(palette, repeat=3):
        _check_invertible(rep, cat, "s-invertible", (P, A, B), sb.s(P, A, B))
    return rep


def left_braiding_dual(sb: SkewBraidingData) -> SkewBraidingData:
    """A left braiding on ``(A, .)`` is a right braiding on
    ``(A^op, .rev)`` with the same components."""
    return SkewBraidingData(opposite_skew(reverse_skew(sb.host)), sb.s, RIGHT)


def check_left_braiding(sb: SkewBraidingData, palette: Sequence,
                        sampling: Sampling | None = None) -> CheckReport:
    """The four left-braiding axioms, obtained by checking RSkBr1-4 on the
    opposite of the reversed structure (listed in :data:`LEFT_BRAIDING_AXIOMS`)."""
    if sb.side != LEFT:
        raise ValueError("check_left_braiding needs side 'left'")
    if sb.host.orientation != LEFT:
        raise ValueError("left braidings are checked on left skew monoidal hosts")
    inner = check_right_braiding(left_braiding_dual(sb), palette, sampling)
    rename = lambda a: a.replace("RSkBr", "LSkBr")  # noqa: E731
    rep = CheckReport("left-braiding",
                      [(rename(a), o) for a, o in inner.checked],
                      [replace(f, axiom=rename(f.axiom)) for f in inner.failures],
                      inner.errors, [rename(n) for n in inner.notes])
    return rep


def check_symmetry(sb: SkewBraidingData, palette: Sequence) -> CheckReport:
    """``s(P,B,A) . s(P,A,B) = id`` on all palette triples."""
    cat = sb.host.category
    rep = CheckReport(f"{sb.side}-symmetry")
    for P, A, B in itertools.product(palette, repeat=3):
        first = sb.s(P, A, B)
        lhs = cat.compose(sb.s(P, B, A), first)
        rep.record("symmetry", (cat.describe(P), cat.describe(A), cat.describe(B)),
                   cat.difference(lhs, cat.identity(cat.dom(first))))
    return rep


def check_closedness(D: SkewMonoidalData, hom: InternalHomCandidate, palette: Sequence,
                     arrows: Sequence = ()) -> CheckReport:
    """Enumerate ``Hom(A.B, C)`` and the transposed hom-set, check the
    transpose is a bijection with the given inverse, and check naturality of
    the transpose in each slot against ``arrows``."""
    cat = D.category
    rep = CheckReport(f"{hom.side}-closedness")
    d = cat.describe
    left_side = hom.side == LEFT
    for A, B, C in itertools.product(palette, repeat=3):
        P, X = (B, A) if left_side else (A, B)  # parameter, transposed variable
        objs = (d(A), d(B), d(C))
        source = list(cat.hom(D.t(A, B), C))
        target = list(cat.hom(X, hom.obj(P, C)))
        if len(source) != len(target):
            rep.fail("hom-count", objs, f"|Hom(A.B,C)|={len(source)} but |Hom(X,<P,C>)|={len(target)}")
            continue
        rep.record("hom-count", objs)
        try:
            problem = _closed_bijection(cat, hom, A, B, C, source, target)
        except StructureError as exc:
            problem = f"transpose has the wrong shape: {exc}"
        rep.record("bijection", objs, detail=problem)
        for arrow in arrows:
            for slot in ("A", "B", "C"):
                try:
                    problem = _closed_naturality(D, hom, A, B, C, slot, arrow, source)
                except StructureError as exc:
                    problem = f"transpose has the wrong shape: {exc}"
                if problem is not False:
                    rep.record(f"naturality-{slot}", objs + (f"{d(cat.dom(arrow))}->{d(cat.cod(arrow))}",),
                               detail=problem)
    return rep


def _closed_bijection(cat, hom, A, B, C, source, target):
    images = set()
    for f in source:
        tf = hom.transpose(A, B, C, f)
        if not cat.equal(hom.untranspose(A, B, C, tf), f):
            return f"untranspose(transpose(f)) != f for f={f!r}"
        images.add(tf)
    if len(images) != len(source):
        return "transpose is not injective"
    for g in target:
        if not cat.equal(hom.transpose(A, B, C, hom.untranspose(A, B, C, g)), g):
            return f"transpose(untranspose(g)) != g for g={g!r}"
    return None


def _closed_naturality(D, hom, A, B, C, slot, arrow, source):
    """False if the arrow does not fit the slot; None if natural; else a witness."""
    cat = D.category
    left_side = hom.side == LEFT
    src, tgt = cat.dom(arrow), cat.cod(arrow)
    for f in source:
        tf = hom.transpose(A, B, C, f)
        if slot == "A":
            if not cat.same_object(tgt, A):
                return False
            lhs = hom.transpose(src, B, C, cat.compose(f, D.tm(arrow, cat.identity(B))))
            rhs = cat.compose(tf, arrow) if left_side else cat.compose(hom.param_mor(arrow, C), tf)
        elif slot == "B":
            if not cat.same_object(tgt, B):
                return False
            lhs = hom.transpose(A, src, C, cat.compose(f, D.tm(cat.identity(A), arrow)))
            rhs = cat.compose(hom.param_mor(arrow, C), tf) if left_side else cat.compose(tf, arrow)
        else:
            if not cat.same_object(src, C):
                return False
            lhs = hom.transpose(A, B, tgt, cat.compose(arrow, f))
            rhs = cat.compose(hom.value_mor(B if left_side else A, arrow), tf)
        diff = cat.difference(lhs, rhs)
        if diff is not None:
            return f"f={f!r}: {diff.witness!r}"
    return None
