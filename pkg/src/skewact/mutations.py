"""Single-point mutations of passing instances.

Each fixture perturbs one ingredient of an instance that passes its suite and
reruns that suite; a sound checker must report at least one failure with a
witness.  The fixtures are addressable by name from check plans.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

from .category import (FINSET, FinPresCat, NatFamily, all_arrows, check_category_laws,
                       check_functor_laws, check_naturality, identity_functor)
from .coherence import (RIGHT, BraidingData, InternalHomCandidate, check_adjunction_triangles, check_closedness,
                        check_hexagons, check_lax_monoidal, check_left_braiding,
                        check_oplax_monoidal, check_right_braiding, check_skew_monoidal,
                        check_strong_action, check_symmetry)
from .construction import (FusionData, build_braiding, build_lax_on_right_adjoint,
                           build_oplax_on_left_adjoint, build_skew_structure, invertibility_probe)
from .finset import (STAR, FinFn, FinSet, Tagged, compose, constant, exponential_set, fn_power,
                     fn_product, product_set)
from .instances import cartesian, monoid, powers
from .report import CheckReport


@dataclass(frozen=True)
class Mutation:
    name: str
    suite: str
    description: str
    run: Callable[[], CheckReport]


def _z2():
    M = monoid.MonoidTable.cyclic(2)
    return M, monoid.monoid_warping(M)


def _pal(n=2):
    return monoid.finset_palette(n)


def rho_shift() -> CheckReport:
    M, inst = _z2()
    D = build_skew_structure(inst.action, inst.adjunction)
    bad = replace(D, rho=lambda A: FinFn.build(A, D.t(A, D.unit), lambda a: ((1, a), STAR), check=False))
    return check_skew_monoidal(bad, _pal())


def twisted_associator() -> CheckReport:
    return check_skew_monoidal(cartesian.mutated_cartesian(), _pal())


def constant_unitor() -> CheckReport:
    M, inst = _z2()
    S = inst.action

    def u(B):
        src = product_set(FinSet([STAR]), B)
        return constant(src, B, B.elements[0]) if len(B) else FinFn(src, B, ())

    bad = replace(S, u=u, u_inv=None)
    return check_strong_action(bad, monoid.enumerate_msets(M, 2), _pal())


def twisted_counit() -> CheckReport:
    M, inst = _z2()
    adj = inst.adjunction

    def counit(X):
        e = adj.counit(X)
        return replace(e, fn=FinFn(e.fn.dom, e.fn.cod,
                                   [X.act(M.op(1, p[0]), p[1][0]) for p in e.fn.dom.elements]))

    return check_adjunction_triangles(replace(adj, counit=counit), _pal(), monoid.enumerate_msets(M, 2))


def lax_involution() -> CheckReport:
    M, inst = _z2()
    lax = build_lax_on_right_adjoint(inst.action, inst.adjunction)
    G = lax.functor

    def phi(X, Y):
        XY = monoid.mset_product(X, Y)
        sigma = monoid.MSetHom(XY, XY, FinFn.build(XY.carrier, XY.carrier, lambda p: XY.act(1, p), check=False))
        return compose(G.mor(sigma), lax.phi(X, Y))

    return check_lax_monoidal(replace(lax, phi=phi), monoid.enumerate_msets(M, 2))


def oplax_translation() -> CheckReport:
    M, inst = _z2()
    op = build_oplax_on_left_adjoint(inst.action, inst.adjunction)
    V = op.target

    def phi(A, B):
        f = op.phi(A, B)
        FA = inst.adjunction.left.obj(A)
        tau = monoid.MSetHom(FA, FA, FinFn.build(FA.carrier, FA.carrier, lambda p: (M.op(1, p[0]), p[1]),
                                                 check=False))
        return V.category.compose(V.tm(tau, V.id(inst.adjunction.left.obj(B))), f)

    return check_oplax_monoidal(replace(op, phi=phi), _pal())


def _reversal(X):
    return cartesian.reversal(X)


def _rotation(X):
    els = X.elements
    return FinFn(X, X, els[1:] + els[:1], check=False)


def right_braiding_reversed_pivot() -> CheckReport:
    inst = powers.exponential_warping_instance(FinSet.range(1))
    sb = build_braiding(inst.action, inst.adjunction, inst.braiding, "RR", _pal())
    D = sb.host

    def s(P, A, B):
        return compose(D.tm(D.tm(_reversal(P), D.id(B)), D.id(A)), sb.s(P, A, B))

    return check_right_braiding(replace(sb, s=s), _pal())


def left_braiding_reversed_pivot() -> CheckReport:
    M, inst = _z2()
    sb = build_braiding(inst.action, inst.adjunction, inst.braiding, "LL", _pal())
    D = sb.host

    def s(P, A, B):
        return compose(D.tm(D.id(B), D.tm(D.id(A), _reversal(P))), sb.s(P, A, B))

    return check_left_braiding(replace(sb, s=s), _pal())


def symmetry_three_cycle() -> CheckReport:
    inst = powers.exponential_warping_instance(FinSet.range(1))
    pal = _pal(3)
    sb = build_braiding(inst.action, inst.adjunction, inst.braiding, "RR", pal)
    D = sb.host

    def s(P, A, B):
        return compose(D.tm(D.tm(_rotation(P), D.id(B)), D.id(A)), sb.s(P, A, B))

    return check_symmetry(replace(sb, s=s), pal)


def hexagon_twist() -> CheckReport:
    V = cartesian.finset_cartesian()

    def c(X, Y):
        return compose(fn_product(_reversal(Y), FinFn.identity(X)), cartesian.swap(X, Y))

    return check_hexagons(BraidingData(V, c), _pal())


def closedness_wrong_exponent() -> CheckReport:
    """Transpose through ``C^A`` by restricting to the unit of M."""
    M, inst = _z2()
    D = build_skew_structure(inst.action, inst.adjunction)

    def obj(A, C):
        return exponential_set(A, C)

    def transpose(A, B, C, f):
        return FinFn.build(B, obj(A, C), lambda b: Tagged("fn", tuple(
            f(((M.unit, a), b)) for a in A.elements)), check=False)

    def untranspose(A, B, C, g):
        src = D.t(A, B)
        return FinFn.build(src, C, lambda p: g(p[1]).value[A.index[p[0][1]]], check=False)

    def param(p, C):
        return fn_power(p, FinFn.identity(C))

    def value(A, h):
        return fn_power(FinFn.identity(A), h)

    bad = InternalHomCandidate(RIGHT, obj, transpose, untranspose, param, value, name="C^A")
    return check_closedness(D, bad, _pal())


def probe_collapsed_associator() -> CheckReport:
    M = monoid.MonoidTable.trivial()
    inst = monoid.monoid_warping(M)
    fusion = FusionData(inst.action, inst.adjunction)
    D = build_skew_structure(inst.action, inst.adjunction)

    def gamma(A, B, C):
        g = D.gamma(A, B, C)
        if len(g.cod) == 0:
            return g
        return compose(constant(g.cod, g.cod, g.cod.elements[0]), g)

    return invertibility_probe(replace(D, gamma=gamma), fusion, inst.adjunction, _pal()).to_report()


def theorem_rho_formula() -> CheckReport:
    from .instances.registry import build_bundle
    b = build_bundle({"kind": "monoid", "monoid": "Z2"}, 2, None)
    D = build_skew_structure(b.action, b.adjunction)
    b.skew = replace(D, rho=lambda A: FinFn.build(A, D.t(A, D.unit), lambda a: ((1, a), STAR), check=False))
    return b.theorem_checks()


def transpose_wrong_strength() -> CheckReport:
    M, inst = _z2()
    good = FusionData(inst.action, inst.adjunction)
    V = inst.acting

    def strength(X, B):
        f = good.computed_strength(X, B)
        cod = f.cod
        twist = monoid.MSetHom(cod, cod, FinFn.build(cod.carrier, cod.carrier, lambda p: cod.act(1, p),
                                                     check=False))
        return V.category.compose(twist, f)

    return FusionData(inst.action, inst.adjunction, strength).check(monoid.enumerate_msets(M, 2), _pal())


def category_bad_identity() -> CheckReport:
    table = {(g, f): (g + f) % 2 for g in (0, 1) for f in (0, 1)}
    table[(0, 1)] = 0
    C = FinPresCat(("*",), {0: ("*", "*"), 1: ("*", "*")}, {"*": 0}, table, "Z2-mutated")
    return check_category_laws(C)


def functor_constant_morphisms() -> CheckReport:
    M, inst = _z2()
    F = inst.adjunction.left

    def mor(f):
        src, tgt = F.obj(f.dom), F.obj(f.cod)
        if not len(tgt.carrier):
            return F.mor(f)
        return monoid.MSetHom(src, tgt, constant(src.carrier, tgt.carrier, tgt.carrier.elements[0]))

    return check_functor_laws(replace(F, mor=mor), all_arrows(_pal(2)[1:]))


def naturality_fixed_point() -> CheckReport:
    I = identity_functor(FINSET)
    t = NatFamily("pick-first", FINSET, lambda X: constant(X, X, X.elements[0]), (FINSET,),
                  I.mor, I.mor)
    return check_naturality(t, [(f,) for f in all_arrows(_pal(2)[1:])])


MUTATIONS: dict[str, Mutation] = {m.name: m for m in [
    Mutation("skew-rho-shift", "skew", "Z2 warping with rho(a) = ((1,a),*)", rho_shift),
    Mutation("skew-twisted-associator", "skew", "cartesian associator that reverses its first factor", twisted_associator),
    Mutation("action-constant-unitor", "action", "Z2 action with u replaced by a constant map", constant_unitor),
    Mutation("adjunction-twisted-counit", "adjunction", "free/forgetful counit acting by m+1 instead of m", twisted_counit),
    Mutation("lax-involution", "lax", "phi post-composed with the action of 1 in Z2", lax_involution),
    Mutation("oplax-translation", "oplax", "fusion map pre-translated by 1 on the J_!A factor", oplax_translation),
    Mutation("braiding-right-reversed-pivot", "braiding-right", "s post-composed with the reversal of P", right_braiding_reversed_pivot),
    Mutation("braiding-left-reversed-pivot", "braiding-left", "non-equivariant s reversing the pivot P", left_braiding_reversed_pivot),
    Mutation("symmetry-three-cycle", "symmetry", "s post-composed with a rotation of P", symmetry_three_cycle),
    Mutation("closedness-wrong-exponent", "closedness", "internal hom C^A in place of C^(MxA)", closedness_wrong_exponent),
    Mutation("probes-collapsed-associator", "probes", "trivial monoid with gamma collapsed to a constant", probe_collapsed_associator),
    Mutation("theorem-rho-formula", "theorem-checks", "Z2 formulas compared against a shifted rho", theorem_rho_formula),
    Mutation("hexagon-twist", "hexagons", "swap followed by a reversal", hexagon_twist),
    Mutation("transpose-wrong-strength", "transpose-equations", "strength post-composed with the action of 1", transpose_wrong_strength),
    Mutation("category-bad-identity", "category-laws", "Z2 table with 0.1 = 0", category_bad_identity),
    Mutation("functor-constant-morphisms", "functor-laws", "free functor sending every map to a constant", functor_constant_morphisms),
    Mutation("naturality-fixed-point", "naturality", "family picking the first element", naturality_fixed_point),
]}
