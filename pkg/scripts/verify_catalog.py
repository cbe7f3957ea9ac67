"""Sweep the four catalog families over arities and fields.

For each (family, arity, field) cell the script runs the fundamental
identity check on a monomial window, generates the subalgebra from the
symmetrized bracket, and prints one table row with the instance count
and the graded dimensions.  Exits nonzero if any cell fails.
"""

import argparse
import sys

from nlielab.catalog import algebra_O, algebra_S, algebra_SW, algebra_W
from nlielab.fields import field_from_name
from nlielab.liegen import check_admissible
from nlielab.multilinear import bracket_to_symmetric
from nlielab.nlie import check_filippov
from nlielab.universal import WElement

FAMILIES = {
    "O": algebra_O,
    "S": algebra_S,
    "W": algebra_W,
    "SW": algebra_SW,
}


def survey_cell(family: str, n: int, field, window: int, cap: int):
    """Returns (fj, admissible_report_or_None); the polynomial families
    have infinite carriers, so only the finite family gets the pair
    analysis."""
    alg = FAMILIES[family](n, field)
    if family != "O":
        fj = check_filippov(alg, keys=alg.window_keys(window), mode="sorted")
        return fj, None
    fj = check_filippov(alg, mode="full")
    mm = bracket_to_symmetric(alg.space, alg.arity, alg.bracket_parity,
                              alg.bracket_keys)
    rep = check_admissible(mm.space, WElement.from_map(mm), cap=cap)
    return fj, rep


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--families", default="O,S,W,SW",
                    help="comma-separated subset of O,S,W,SW")
    ap.add_argument("--n", default="3,4", help="comma-separated arities")
    ap.add_argument("--field", default="q", help="q or fp:P")
    ap.add_argument("--window", type=int, default=2,
                    help="monomial degree window for the infinite families")
    ap.add_argument("--cap", type=int, default=4,
                    help="degree cap for subalgebra generation")
    args = ap.parse_args(argv)

    field = field_from_name(args.field)
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    arities = [int(t) for t in args.n.split(",")]
    bad = [f for f in families if f not in FAMILIES]
    if bad:
        ap.error("unknown family %s" % ", ".join(bad))

    print("%-4s %-3s %-6s %10s %6s %-28s %s" %
          ("fam", "n", "field", "instances", "FI", "graded dims", "admissible"))
    failures = 0
    for family in families:
        for n in arities:
            fj, rep = survey_cell(family, n, field, args.window, args.cap)
            if rep is None:
                dims, status = "-", "not_decided"
            else:
                dims = " ".join("%d:%d" % (d, rep.graded_dims[d])
                                for d in sorted(rep.graded_dims))
                status = {True: "yes", False: "NO"}.get(rep.admissible,
                                                        "not_decided")
            print("%-4s %-3d %-6s %10d %6s %-28s %s" %
                  (family, n, field.name, fj.instances,
                   "ok" if fj.ok else "FAIL", dims, status))
            if not fj.ok or (rep is not None and rep.admissible is False):
                failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
