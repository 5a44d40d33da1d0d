"""Tabulate the warped structure for every monoid of order at most 3.

Columns: order, commutative, group, associator invertible on the palette,
unitors invertible, LSkM checks run and failed, seconds.
"""

import argparse
import time

from skewact.coherence import check_skew_monoidal
from skewact.construction import build_skew_structure
from skewact.finset import is_iso
from skewact.instances import monoid


def survey(max_order: int, max_size: int):
    pal = monoid.finset_palette(max_size)
    for M in monoid.enumerate_monoids(max_order):
        start = time.perf_counter()
        inst = monoid.monoid_warping(M)
        D = build_skew_structure(inst.action, inst.adjunction)
        rep = check_skew_monoidal(D, pal)
        g = monoid.group_iff_associator_invertible(M, pal, D)
        unitors = all(is_iso(f) for A in pal for f in (D.lam(A), D.rho(A)))
        yield (M.name, M.order, M.is_commutative(), M.is_group(), g.associator_invertible, unitors,
               len(rep.checked), len(rep.failures), time.perf_counter() - start)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--max-size", type=int, default=2)
    args = p.parse_args()
    cols = ("monoid", "|M|", "comm", "group", "gamma iso", "units iso", "checks", "failed", "s")
    print("  ".join(f"{c:>9}" for c in cols))
    for row in survey(args.max_order, args.max_size):
        *rest, secs = row
        print("  ".join(f"{str(v):>9}" for v in rest) + f"  {secs:9.2f}")


if __name__ == "__main__":
    main()
