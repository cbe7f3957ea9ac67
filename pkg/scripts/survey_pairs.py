"""Run the realization/catalog pairings and print every check.

Each pairing realizes one catalog bracket inside a polynomial vector
field algebra and compares the induced structure constants against the
catalog table.  The global proportionality scalar is printed when the
tables match.
"""

import argparse
import sys

from nlielab.fields import field_from_name
from nlielab.realizations import verify_pair

STATUS = {True: "pass", False: "FAIL", None: "----"}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--which", default="i,ii,iii,iv",
                    help="comma-separated subset of i,ii,iii,iv")
    ap.add_argument("--n", type=int, default=3, help="bracket arity")
    ap.add_argument("--xwindow", type=int, default=2,
                    help="even-variable degree window")
    ap.add_argument("--field", default="q", help="q or fp:P")
    args = ap.parse_args(argv)

    field = field_from_name(args.field)
    failures = 0
    for which in [w.strip() for w in args.which.split(",") if w.strip()]:
        rep = verify_pair(which, args.n, xwindow=args.xwindow, field=field)
        print("pair %-3s %s against %s (xwindow %d)" %
              (which, rep.realization, rep.catalog, args.xwindow))
        for check in rep.checks:
            print("  [%s] %-32s %s" %
                  (STATUS[check.ok], check.name, check.detail))
            if check.ok is False:
                failures += 1
        if rep.scalar is not None:
            print("  global scalar: %s" % rep.scalar)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
