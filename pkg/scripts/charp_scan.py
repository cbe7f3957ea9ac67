"""Scan prime-field seeds for identity residues and degree growth.

For every prime p and multiplier s in range the script builds the
arity sp+1 seed, reports the fundamental identity residue (asserted
only for odd arity), and compares subalgebra growth over GF(p) against
the rational control at the same arity.
"""

import argparse
import sys

from nlielab.charp import (
    CharPSeed,
    charp_fj_check,
    charp_generation,
    q_control,
)

PRIMES = (2, 3, 5, 7, 11, 13)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=5, help="largest prime")
    ap.add_argument("--smax", type=int, default=2, help="largest multiplier")
    ap.add_argument("--cap", type=int, default=12,
                    help="degree cap for generation profiles")
    ap.add_argument("--control", action="store_true",
                    help="also profile the rational control at each arity")
    args = ap.parse_args(argv)

    print("%-4s %-3s %-4s %-9s %-8s %s" %
          ("p", "s", "n", "residue", "regime", "growth"))
    for p in [q for q in PRIMES if q <= args.pmax]:
        for s in range(1, args.smax + 1):
            seed = CharPSeed(p, s)
            rep = charp_fj_check(seed)
            regime = "asserted" if rep.asserted else "reported"
            gen = charp_generation(seed, cap=args.cap)
            if gen.bound_holds:
                growth = "stops at degree %d" % gen.max_degree
            else:
                growth = ("degree %d exceeds bound %d via %r" %
                          (gen.max_degree, gen.n - 1, gen.violation))
            print("%-4d %-3d %-4d %-9s %-8s %s" %
                  (p, s, seed.n, rep.residue, regime, growth))
            if args.control:
                ctl = q_control(seed.n, args.cap)
                tag = ("stops at degree %d" % ctl.max_degree
                       if ctl.bound_holds else
                       "degree %d exceeds bound %d via %r" %
                       (ctl.max_degree, ctl.n - 1, ctl.violation))
                print("%24scontrol  %s" % ("", tag))
    return 0


if __name__ == "__main__":
    sys.exit(main())
