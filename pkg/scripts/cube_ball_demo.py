"""Check whether a simplex in [0,1]^n whose n-fold dilation absorbs the cube
also absorbs the ball of radius sqrt(n)/2 about the cube centre.

Without arguments runs two built-in 3-dimensional cases (a Hadamard simplex and
a non-regular one); otherwise pass simplex JSON files.
"""
import argparse
import json

from simplex_absorption import Simplex, hadamard_simplex, unit_cube, xi
from simplex_absorption.errors import PreconditionFailed
from simplex_absorption.oracle import corollary5_check
from simplex_absorption.simplex import simplex_from_dict

NON_REGULAR_3 = [["0", "1/2", "0"], ["1", "1/2", "0"], ["1/2", "1", "1"], ["1/2", "0", "1"]]


def report(label, s):
    try:
        rep = corollary5_check(s)
    except PreconditionFailed as exc:
        print(json.dumps({"case": label, "precondition_failed": str(exc)}))
        return
    out = {"case": label, "xi_cube": str(xi(unit_cube(s.n, s.mode), s).value), **rep.to_dict()}
    print(json.dumps(out, indent=2))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("files", nargs="*")
    p.add_argument("--mode", choices=("float", "rational"), default="rational")
    args = p.parse_args()
    if not args.files:
        report("hadamard_simplex(3)", hadamard_simplex(3, "rational"))
        report("non-regular tetrahedron", Simplex(NON_REGULAR_3, "rational"))
        return
    for path in args.files:
        with open(path) as fh:
            report(path, simplex_from_dict(json.load(fh), args.mode))


if __name__ == "__main__":
    main()
