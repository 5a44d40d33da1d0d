"""Acceptance criteria.  Each test prints one PASS/FAIL line; the lines are
collected again in the terminal summary."""

import itertools
import time

from skewact.category import TERMINAL_CAT
from skewact.cli import SUITES, CheckPlan, _left_palette, run_instance, run_mutation
from skewact.coherence import check_lax_monoidal, check_oplax_monoidal, check_skew_monoidal
from skewact.construction import (adjoint_transpose, adjoint_untranspose, build_lax_on_right_adjoint,
                                  build_oplax_on_left_adjoint, build_skew_structure)
from skewact.finset import FinFn, FinSet, is_iso, product_set
from skewact.instances import kan, monoid, powers
from skewact.instances.registry import build_bundle
from skewact.mutations import MUTATIONS

PAL = monoid.finset_palette(2)
MONOIDS = monoid.enumerate_monoids(3)
RESULTS: dict[int, str] = {}


def verdict(n: int, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def table_params(M):
    return {"kind": "monoid", "table": [list(r) for r in M.table], "name": M.name}


def skew_of(b):
    b.skew = build_skew_structure(b.action, b.adjunction)
    return b.skew


def test_criterion_01_monoid_family_skew_axioms():
    start = time.perf_counter()
    failures, lskm1 = 0, set()
    for M in MONOIDS:
        inst = monoid.monoid_warping(M)
        rep = check_skew_monoidal(build_skew_structure(inst.action, inst.adjunction), PAL)
        failures += len(rep.failures) + len(rep.errors)
        lskm1.add(rep.count("LSkM1"))
    elapsed = time.perf_counter() - start
    ok = failures == 0 and lskm1 == {len(PAL) ** 4} and elapsed <= 60 and len(MONOIDS) == 10
    verdict(1, ok, f"{len(MONOIDS)} monoids, LSkM1-5 at carriers <= 2, "
                   f"{failures} failures, {elapsed:.1f}s")


def test_criterion_02_elementwise_formulas():
    mismatches, compared = 0, 0
    commutative = [M for M in MONOIDS if M.is_commutative()]
    for M in commutative:
        inst = monoid.monoid_warping(M)
        D = build_skew_structure(inst.action, inst.adjunction)
        for A, B, C in itertools.product(PAL, repeat=3):
            # (n, (m, a, b), c) -> (m + n, a, (n, b, c)), written out independently
            MA, MB = product_set(M.carrier, A), product_set(M.carrier, B)
            src = product_set(product_set(M.carrier, product_set(MA, B)), C)
            tgt = product_set(MA, product_set(MB, C))
            want = FinFn.build(src, tgt, lambda p: ((M.op(p[0][1][0][0], p[0][0]), p[0][1][0][1]),
                                                    ((p[0][0], p[0][1][1]), p[1])))
            mismatches += D.gamma(A, B, C) != want
            compared += 1
        for A in PAL:
            one = D.unit
            lam = FinFn.build(product_set(product_set(M.carrier, one), A), A, lambda p: p[1])
            rho = FinFn.build(A, product_set(product_set(M.carrier, A), one),
                              lambda a: ((M.unit, a), one.elements[0]))
            mismatches += (D.lam(A) != lam) + (D.rho(A) != rho)
            compared += 2
    verdict(2, mismatches == 0 and compared > 0,
            f"{len(commutative)} commutative monoids, {compared} components, {mismatches} mismatches")


def test_criterion_03_group_iff_associator_invertible():
    mismatches = 0
    for M in MONOIDS:
        shear = FinFn.build(product_set(M.carrier, M.carrier), product_set(M.carrier, M.carrier),
                            lambda p: (M.op(p[0], p[1]), p[0]))
        g = monoid.group_iff_associator_invertible(M, PAL)
        mismatches += g.associator_invertible != is_iso(shear)
        u = monoid.unit_invertibility(M, PAL)
        D = skew_of(build_bundle(table_params(M), 2, None))
        all_inv = all(is_iso(f) for A in PAL for f in (D.lam(A), D.rho(A)))
        mismatches += (not u.ok) + (all_inv != (M.order == 1))
    verdict(3, mismatches == 0, f"{len(MONOIDS)} monoids, {mismatches} mismatches")


def test_criterion_04_lax_and_oplax_on_z2():
    M = monoid.MonoidTable.cyclic(2)
    b = build_bundle({"kind": "monoid", "monoid": "Z2"}, 2, None)
    D = skew_of(b)
    lax = check_lax_monoidal(build_lax_on_right_adjoint(b.action, b.adjunction, D), b.v_palette)
    oplax = check_oplax_monoidal(build_oplax_on_left_adjoint(b.action, b.adjunction, D, b.fusion), b.a_palette)
    ok = lax.ok and oplax.ok and len(lax.checked) > 0 and len(oplax.checked) > 0
    verdict(4, ok, f"{M.name}: lax {len(lax.checked)} checks/{len(lax.failures)} failed, "
                   f"oplax {len(oplax.checked)} checks/{len(oplax.failures)} failed")


def all_bundles():
    params = [table_params(M) for M in MONOIDS]
    params += [{"kind": "self-action"}]
    params += [{"kind": k, "j": j} for k in ("copower", "exponential") for j in (0, 1, 2)]
    params += [{"kind": "power", "j": j} for j in (0, 1, 2)]
    params += [{"kind": "kan", "category": c} for c in ("terminal", "arrow")]
    return [build_bundle(p, 2, None) for p in params]


def test_criterion_05_transpose_calculus():
    bad, equations, trips, skipped = [], 0, 0, []
    for b in all_bundles():
        if b.infeasible:
            skipped.append(b.label)
            continue
        rep = b.fusion.check(b.v_palette, b.a_palette)
        equations += len(rep.checked)
        if not rep.ok or not rep.checked:
            bad.append(f"{b.label}: transpose equations")
        adj = b.adjunction
        left, right = _left_palette(b)
        C, D = adj.left.source, adj.left.target
        checked_here = 0
        for X, Y in itertools.product(left, right):
            for cat, homs, back in (
                (D, lambda: D.hom(adj.left.obj(X), Y),
                 lambda f: adjoint_untranspose(adj, adjoint_transpose(adj, f, X), Y)),
                (C, lambda: C.hom(X, adj.right.obj(Y)),
                 lambda g: adjoint_transpose(adj, adjoint_untranspose(adj, g, Y), X)),
            ):
                try:
                    hs = list(itertools.islice(homs(), 17))
                except NotImplementedError:
                    continue  # hom-sets of endofunctor categories are not enumerable
                if len(hs) > 16:
                    continue
                for f in hs:
                    trips += 1
                    checked_here += 1
                    if not cat.equal(back(f), f):
                        bad.append(f"{b.label}: round trip at {X!r}, {Y!r}")
        if not checked_here:
            bad.append(f"{b.label}: no enumerable hom-set")
    verdict(5, not bad, f"{equations} transpose equations, {trips} round trips, "
                        f"skipped infeasible {skipped}; problems: {bad[:3]}")


def test_criterion_06_braidings():
    start = time.perf_counter()
    plan = CheckPlan(instances=[])
    problems, counts = [], {}
    runs = [({"kind": "exponential", "j": j}, ("braiding-right", "symmetry")) for j in (0, 1, 2)]
    runs += [(table_params(M), ("braiding-left", "symmetry")) for M in MONOIDS if M.is_commutative()]
    for params, suites in runs:
        s = run_instance(params, plan, suites)
        got = {r.suite: len(r.checked) for r in s.reports if r.suite not in ("strong-action", "adjunction")}
        if s.errors or any(not r.ok for r in s.reports) or len(got) != 2 or not all(got.values()):
            problems.append(s.label)
        for k, v in got.items():
            counts[k] = counts.get(k, 0) + v
    elapsed = time.perf_counter() - start
    verdict(6, not problems and elapsed <= 120,
            f"{len(runs)} instances, checks {counts}, {elapsed:.1f}s; problems: {problems}")


def test_criterion_07_kan_extension():
    problems = []
    for cat in ("terminal", "arrow"):
        b = build_bundle({"kind": "kan", "category": cat}, 2, None)
        D = skew_of(b)
        objs = kan.arrow_category().objects if cat == "arrow" else TERMINAL_CAT.objects
        sizes_ok = all(len(G.objs[o]) <= 2 for G in b.a_palette for o in objs)
        rep = check_skew_monoidal(D, b.a_palette)
        if not (rep.ok and len(b.a_palette) >= 3 and D.unit == b.adjunction.anchor and sizes_ok):
            problems.append(f"{cat}: {rep.summary()}")
    # C = 1: Lan_J G(d) = Hom(J*, d) x G*, with one coproduct injection per f: J* -> d
    o = TERMINAL_CAT.objects[0]
    cases = 0
    for j, g, d in itertools.product(range(3), repeat=3):
        J = kan.TabFunctor.build(TERMINAL_CAT, {o: FinSet.range(j)})
        G = kan.TabFunctor.build(TERMINAL_CAT, {o: FinSet("xy"[:g])})
        dd = FinSet("pq"[:d])
        res = kan.left_kan_extension(J, G, dd)
        homs = [f for c, f in res.comma]
        images = [res.cocone(o, f)(x) for f in homs for x in G.objs[o].elements]
        cases += 1
        if len(homs) != d ** j or len(res.carrier) != d ** j * g or sorted(map(repr, images)) != \
                sorted(map(repr, res.carrier.elements)):
            problems.append(f"Lan at |J|={j}, |G|={g}, |d|={d}")
        if any(res.cocone(o, f)(x) != res.element(o, f, x) for f in homs for x in G.objs[o].elements):
            problems.append(f"cocone/element disagree at |J|={j}, |G|={g}, |d|={d}")
    verdict(7, not problems, f"terminal and arrow categories pass LSkM1-5 with unit J; "
                             f"{cases} pointwise Lan cases; problems: {problems}")


def test_criterion_08_copower_and_power():
    problems, notes = [], []
    for kind, js, size in (("copower", (0, 1, 2), powers.copower_tensor_size),
                           ("power", (0, 1, 2), powers.power_tensor_size)):
        for j in js:
            b = build_bundle({"kind": kind, "j": j}, 2, None)
            D = skew_of(b)
            for c, d in itertools.product(PAL, repeat=2):
                want = len(d) * len(c) ** j if kind == "copower" else len(d) ** (j ** len(c))
                if len(D.t(c, d)) != want or size(len(c), len(d), j) != want:
                    problems.append(f"{b.label} cardinality at {len(c)}, {len(d)}")
            if b.infeasible:
                notes.append(f"{b.label}: cardinality only")
                continue
            rep = check_skew_monoidal(D, PAL)
            if not rep.ok or rep.count("LSkM1") != len(PAL) ** 4:
                problems.append(f"{b.label}: {rep.summary()}")
    verdict(8, not problems, f"copower |j| <= 2 and power |j| <= 2; {'; '.join(notes)}; "
                             f"problems: {problems}")


def test_criterion_09_closedness():
    plan = CheckPlan(instances=[])
    problems, counts = [], []
    for name in ("trivial", "Z2"):
        s = run_instance({"kind": "monoid", "monoid": name}, plan, ("closedness",))
        reps = [r for r in s.reports if r.suite.endswith("closedness")]
        if s.errors or len(reps) != 2:
            problems.append(f"{name}: {s.errors or len(reps)}")
        for r in reps:
            counts.append(len(r.checked))
            if not r.ok or not r.count("bijection") or not any(
                    a.startswith("naturality") for a, _ in r.checked):
                problems.append(f"{name}: {r.summary()}")
    verdict(9, not problems, f"left and right candidates for trivial and Z2, checks {counts}; "
                             f"problems: {problems}")


def test_criterion_10_every_mutation_is_caught():
    covered = {m.suite for m in MUTATIONS.values()}
    missed = []
    for name in MUTATIONS:
        s = run_mutation(name)
        failures = [f for r in s.reports for f in r.failures]
        if s.errors or not failures or not all(f.witness for f in failures):
            missed.append(name)
    ok = not missed and set(SUITES) <= covered
    verdict(10, ok, f"{len(MUTATIONS)} fixtures over {len(covered)} suites, "
                    f"uncovered suites {sorted(set(SUITES) - covered)}, undetected {missed}")
