"""Instance kinds, their parameters, and the suites that apply to each.

A :class:`Bundle` packages an action, an adjunction and everything the
suites need (palettes, optional braiding, closedness candidates, extra
instance-level theorem checks).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from ..category import FINSET, TERMINAL_CAT, FinPresCat, all_arrows, check_category_laws
from ..coherence import AdjunctionData, BraidingData, SkewMonoidalData, StrongActionData
from ..construction import FusionData, adjoint_transpose, adjoint_untranspose, ll_presentation
from ..errors import SchemaError, StructureError
from ..finset import FinFn, FinSet
from ..report import CheckReport
from . import cartesian, kan, monoid, powers


def _named_monoid(name: str) -> monoid.MonoidTable:
    if name == "trivial":
        return monoid.MonoidTable.trivial()
    if name == "OR":
        return monoid.MonoidTable.boolean_or()
    if name.startswith("Z") and name[1:].isdigit() and int(name[1:]) >= 1:
        return monoid.MonoidTable.cyclic(int(name[1:]))
    raise SchemaError("monoid", f"unknown monoid {name!r} (use trivial, OR, Zn or a table)")


@dataclass
class Bundle:
    kind: str
    label: str
    variant: str
    action: StrongActionData
    adjunction: AdjunctionData
    a_palette: list
    v_palette: list
    skew: SkewMonoidalData | None = None
    fusion: FusionData | None = None
    braiding: BraidingData | None = None
    braiding_variant: str | None = None
    closedness: tuple = ()
    arrows: list = field(default_factory=list)
    theorem_checks: Callable[[], CheckReport] | None = None
    header: list = field(default_factory=list)
    infeasible: str | None = None  # why coherence suites cannot run at these bounds

    @property
    def native(self) -> bool:
        return self.variant == "LL"


KINDS = {
    "monoid": "warping of FinSet by a finite monoid; params: monoid (trivial|OR|Zn) or table (row-major, 0 = identity)",
    "self-action": "(FinSet, x) acting on itself, J = I; params: mutated (bool, breaks the associator)",
    "copower": "FinSet acting on FinSet by X x c, right adjoint (-)^j (right skew); params: j (size)",
    "power": "FinSet^op acting on FinSet by c^X, left adjoint j^(-) (left skew); params: j (size)",
    "exponential": "right action A x X, right adjoint (-)^J, swap braiding (right braiding); params: j (size)",
    "kan": "[C, FinSet] warped by Lan_J; params: category (terminal|arrow|presentation), j, functors",
}


def _letters(k: int) -> FinSet:
    return FinSet("abcdefghijklmnop"[:k])


def _cap(pal, max_objects):
    return pal[:max_objects] if max_objects else pal


def build_bundle(params: dict, max_size: int, max_objects: int | None) -> Bundle:
    kind = params["kind"]
    if kind == "monoid":
        return _monoid_bundle(params, max_size, max_objects)
    if kind == "self-action":
        V = cartesian.mutated_cartesian() if params.get("mutated") else cartesian.finset_cartesian()
        inst = cartesian.self_action_instance(V)
        pal = _cap(monoid.finset_palette(max_size), max_objects)
        b = Bundle(kind, f"self-action{'[mutated]' if params.get('mutated') else ''}", "LL",
                   inst.action, inst.adjunction, pal, pal)
        b.fusion = FusionData(inst.action, inst.adjunction)
        b.braiding, b.braiding_variant = None, None
        b.theorem_checks = lambda: _self_action_theorems(b, V)
        b.arrows = all_arrows(pal)
        return b
    if kind in ("copower", "power", "exponential"):
        jn = int(params.get("j", 2))
        j = FinSet.range(jn)
        pal = _cap(monoid.finset_palette(max_size), max_objects)
        if kind == "copower":
            inst = powers.copower_instance(j)
            b = Bundle(kind, f"copower[|j|={jn}]", "LR", inst.action, inst.adjunction, pal, pal)
            b.theorem_checks = lambda: _cardinality_theorem(b, powers.copower_tensor_size, "|c.d| = |d||c|^|j|", jn)
        elif kind == "power":
            inst = powers.power_instance(j)
            b = Bundle(kind, f"power[|j|={jn}]", "LL", inst.action, inst.adjunction, pal, pal)
            b.fusion = FusionData(inst.action, inst.adjunction)
            b.theorem_checks = lambda: _cardinality_theorem(b, powers.power_tensor_size, "|c.d| = |d|^(|j|^|c|)", jn)
            if jn >= 2 and max_size >= 1:
                b.infeasible = (f"power tensor d^(j^c) nests doubly exponentially; with |j|={jn} the "
                                f"fusion maps pass through sets of size |j|^(|j|^n) with n >= 16")
        else:
            inst = powers.exponential_warping_instance(j)
            b = Bundle(kind, f"exponential[|J|={jn}]", "RR", inst.action, inst.adjunction, pal, pal,
                       braiding=inst.braiding, braiding_variant="RR")
            b.theorem_checks = lambda: _cardinality_theorem(b, powers.exponential_tensor_size, "|P.A| = |P||A|^|J|", jn)
        if b.fusion is None:
            # strength of the native presentation the construction reduces to
            pres = ll_presentation(b.action, b.adjunction, b.variant)
            b.fusion = FusionData(pres.action, pres.adj)
        b.arrows = all_arrows(pal)
        return b
    if kind == "kan":
        return _kan_bundle(params, max_size, max_objects)
    raise SchemaError("kind", f"unknown instance kind {kind!r}; known: {', '.join(KINDS)}")


def _monoid_bundle(params, max_size, max_objects) -> Bundle:
    if "table" in params:
        M = monoid.MonoidTable.from_rows(params["table"], name=params.get("name", "M"))
    else:
        M = _named_monoid(str(params.get("monoid", "Z2")))
    inst = monoid.monoid_warping(M)
    pal = _cap(monoid.finset_palette(max_size), max_objects)
    vpal = monoid.enumerate_msets(M, max_size)
    frees = [monoid.free_mset(M, A) for A in pal if len(A) <= 1]
    vpal = _cap(vpal + [X for X in frees if X not in vpal], max_objects)
    b = Bundle("monoid", f"monoid[{M.name}]", "LL", inst.action, inst.adjunction, pal, vpal,
               braiding=inst.braiding, braiding_variant="LL")
    b.fusion = FusionData(inst.action, inst.adjunction)
    b.closedness = monoid.closedness_witness_monoid(M)
    b.arrows = [f for f in all_arrows(pal) if len(f.dom) and len(f.cod)][:4]
    b.header.append("associator convention: (n,(m,a,b),c) -> (n+m, a, (n,b,c)); "
                    "agrees with (m+n, ...) exactly when M is commutative"
                    + ("" if M.is_commutative() else f"; {M.name} is NOT commutative"))
    b.theorem_checks = lambda: _monoid_theorems(b, M)
    return b


def _kan_bundle(params, max_size, max_objects) -> Bundle:
    spec = params.get("category", "arrow")
    if spec == "terminal":
        C = TERMINAL_CAT
    elif spec == "arrow":
        C = kan.arrow_category()
    elif isinstance(spec, dict):
        C = category_from_listing(spec)
    else:
        raise SchemaError("category", f"expected terminal, arrow or a presentation, got {spec!r}")
    if "functors" in params:
        J = functor_from_listing(C, params["j"], "J")
        pal = [functor_from_listing(C, f, f.get("name", f"G{i}")) for i, f in enumerate(params["functors"])]
    else:
        J, pal = kan.default_kan_palette(C, min(max_size, 2))
    pal = _cap(pal, max_objects)
    inst = kan.functor_category_instance(C, J, pal, extra_probes=monoid.finset_palette(min(max_size, 2)))
    vpal = [kan.IdEndo(), *(kan.lan_endo(J, G) for G in pal[:2])]
    b = Bundle("kan", f"kan[{C.name}]", "LL", inst.action, inst.adjunction, pal, vpal)
    b.fusion = FusionData(inst.action, inst.adjunction)
    b.header.append(f"V-morphism equality decided on {len(inst.acting.category.probes)} probe sets; "
                    "[C,FinSet]-morphism equality is exact (componentwise)")
    b.theorem_checks = lambda: _kan_theorems(b, C, J)
    return b


def category_from_listing(spec: dict) -> FinPresCat:
    objs = tuple(spec["objects"])
    arrows = {str(k): tuple(v) for k, v in (spec.get("arrows") or {}).items()}
    ids = {o: f"id_{o}" for o in objs}
    morphisms = {ids[o]: (o, o) for o in objs}
    morphisms.update(arrows)
    table = {}
    for f, (d, c) in morphisms.items():
        if d not in objs or c not in objs:
            raise StructureError(f"arrow {f!r} has an unknown endpoint")
        table[(ids[c], f)] = f
        table[(f, ids[d])] = f
    for g, f, h in spec.get("compose") or []:
        table[(str(g), str(f))] = str(h)
    C = FinPresCat(objs, morphisms, ids, table, name=spec.get("name", "C"))
    rep = check_category_laws(C)
    if not rep.ok:
        raise StructureError("category presentation is not a category: " + rep.failures[0].describe())
    return C


def functor_from_listing(C: FinPresCat, spec: dict, name: str) -> kan.TabFunctor:
    """``{objects: {o: size}, arrows: {f: [image indices]}}``."""
    objs = {o: _letters(int(spec["objects"][o])) for o in C.objects}
    arrows = {}
    for f, images in (spec.get("arrows") or {}).items():
        d, c = C.morphisms[str(f)]
        arrows[str(f)] = FinFn(objs[d], objs[c], [objs[c].elements[i] for i in images])
    return kan.TabFunctor.build(C, objs, arrows, name=name)


# -- instance-level theorem checks ---------------------------------------------

def _roundtrips(rep: CheckReport, adj: AdjunctionData, pairs, max_hom: int = 16):
    """Transpose/untranspose are mutually inverse on every enumerated hom-set."""
    C, D = adj.left.source, adj.left.target
    for X, Y in pairs:
        FX, GY = adj.left.obj(X), adj.right.obj(Y)
        try:
            homs = list(D.hom(FX, Y))
            homs2 = list(C.hom(X, GY))
        except NotImplementedError:
            return
        if len(homs) > max_hom or len(homs2) > max_hom:
            continue
        objs = (C.describe(X), D.describe(Y))
        bad = next((f for f in homs if not D.equal(adjoint_untranspose(adj, adjoint_transpose(adj, f, X), Y), f)), None)
        rep.record("untranspose-transpose", objs, detail=None if bad is None else repr(bad))
        bad = next((g for g in homs2 if not C.equal(adjoint_transpose(adj, adjoint_untranspose(adj, g, Y), X), g)), None)
        rep.record("transpose-untranspose", objs, detail=None if bad is None else repr(bad))


def _monoid_theorems(b: Bundle, M: monoid.MonoidTable) -> CheckReport:
    rep = CheckReport("theorem-checks")
    D = b.skew
    pal = b.a_palette
    if M.is_commutative():
        for A, B_, C in itertools.product(pal, repeat=3):
            rep.record("gamma-formula", (repr(A), repr(B_), repr(C)),
                       FINSET.difference(D.gamma(A, B_, C), monoid.monoid_gamma_formula(M, A, B_, C)))
    else:
        rep.notes.append(f"gamma-formula skipped: {M.name} is not commutative")
    for A in pal:
        rep.record("lambda-formula", (repr(A),), FINSET.difference(D.lam(A), monoid.monoid_lambda_formula(M, A)))
        rep.record("rho-formula", (repr(A),), FINSET.difference(D.rho(A), monoid.monoid_rho_formula(M, A)))
        rep.record("rho-equals-eta", (repr(A),), FINSET.difference(D.rho(A), b.adjunction.unit(A)))
    g = monoid.group_iff_associator_invertible(M, pal, D)
    rep.notes.append(f"group: {g.is_group}; associator invertible on palette: {g.associator_invertible}; "
                     f"(m,n)->(m+n,m) bijective: {g.oracle}" + (f"; {g.witness}" if g.witness else ""))
    rep.record("group-iff-associator-invertible", (M.name,), detail=None if g.consistent else "theorem violation")
    u = monoid.unit_invertibility(M, pal, D)
    rep = rep.merge(u, "theorem-checks")
    rep = rep.merge(b.fusion.check(b.v_palette, pal), "theorem-checks")
    _roundtrips(rep, b.adjunction, [(A, X) for A in pal for X in b.v_palette])
    return rep


def _self_action_theorems(b: Bundle, V: SkewMonoidalData) -> CheckReport:
    rep = CheckReport("theorem-checks")
    D = b.skew
    for A, B_, C in itertools.product(b.a_palette, repeat=3):
        rep.record("recovers-associator", (repr(A), repr(B_), repr(C)),
                   FINSET.difference(D.gamma(A, B_, C), V.gamma(A, B_, C)))
    for A in b.a_palette:
        rep.record("rho-equals-eta", (repr(A),), FINSET.difference(D.rho(A), b.adjunction.unit(A)))
    return rep.merge(b.fusion.check(b.v_palette, b.a_palette), "theorem-checks")


def _cardinality_theorem(b: Bundle, formula, label: str, j: int) -> CheckReport:
    rep = CheckReport("theorem-checks")
    for c, d in itertools.product(b.a_palette, repeat=2):
        got = len(b.skew.t(c, d))
        want = formula(len(c), len(d), j)
        rep.record(label, (repr(c), repr(d)), detail=None if got == want else f"{got} != {want}")
    if b.fusion is not None and not b.infeasible:
        rep = rep.merge(b.fusion.check(b.v_palette, b.a_palette), "theorem-checks")
    return rep


def _kan_theorems(b: Bundle, C: FinPresCat, J) -> CheckReport:
    rep = CheckReport("theorem-checks")
    rep.record("unit-is-J", (repr(J),), detail=None if b.skew.unit == J else "unit differs from J")
    for G in b.a_palette:
        rep.record("rho-equals-eta", (repr(G),),
                   b.skew.category.difference(b.skew.rho(G), b.adjunction.unit(G)))
    if len(C.objects) == 1 and not C.non_identity():
        o = C.objects[0]
        for G in b.a_palette:
            for d in monoid.finset_palette(2):
                res = kan.left_kan_extension(J, G, d)
                want = len(d) ** len(J.objs[o]) * len(G.objs[o])
                rep.record("lan-pointwise-cardinality", (repr(G), repr(d)),
                           detail=None if len(res.carrier) == want else f"{len(res.carrier)} != {want}")
    return rep.merge(b.fusion.check(b.v_palette, b.a_palette), "theorem-checks")
