"""Command-line surface: build, check, compute, serialize.

Every subcommand writes a deterministic line-oriented text report; scalars
are printed as exact rationals ("p/q"), never floats, so outputs can be
compared byte for byte.  Exit codes: 0 on success, 1 when a check ran and
found failures (the failing items are listed), 2 on usage or parse errors.

Output schemas by subcommand:

  build-model / model-of-complex
      the DGL file format of emit_dgl (header, gens, trunc, d-lines)
  homology
      "homology", "trunc <N>", then "H[<q>] = <dim>" per degree
  malcev
      "malcev", "trunc <N>", then "stage <k>: dim <d> new <w>" per stage
  pi
      "pi_<n> dim <d>" plus "abelian <yes|no>" when n = 1
  bch
      the element serialization of the product of the free generators
  whitney
      "whitney n=<n>" then one "<identity> ok|FAIL" line per identity
  check
      one "<axiom> ok" or "<axiom> FAIL <item>: <residue>" line per axiom,
      then a final "ok" or "FAIL" line
"""

import argparse
import sys
from itertools import combinations, product

from .lie import (ConfigError, DomainError, SolveError, StructError,
                  generator_elt, GenSet)
from .serialize import ParseError, emit_dgl, emit_element, parse_dgl
from .series import bch
from .simplex import ModelFamily, check_model_axioms
from .complexes import minimal_model, model_of_complex, parse_complex
from .homology import (homology, linear_homology, malcev_tower, pi_n,
                       tower_layers)
from . import whitney as wh

FLAVORS = ("seed", "inductive", "symmetric")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so run() owns exit codes."""

    def error(self, message):
        raise _UsageError(message)


def _build_parser():
    top = _Parser(prog="freedgl", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", metavar="command")

    def common(p, trunc=True, flavor=False, out=False):
        if trunc:
            p.add_argument("--trunc", type=int, default=4, metavar="N",
                           help="bracket-length truncation (default 4)")
        if flavor:
            p.add_argument("--flavor", choices=FLAVORS, default="seed",
                           help="model construction flavor (default seed)")
        if out:
            p.add_argument("--out", metavar="PATH",
                           help="write the report here instead of stdout")

    p = sub.add_parser("build-model", help="serialize a simplex model")
    p.add_argument("--n", type=int, required=True, metavar="DIM",
                   help="simplex dimension")
    common(p, flavor=True, out=True)

    p = sub.add_parser("model-of-complex",
                       help="serialize the model of a complex file")
    p.add_argument("--complex", required=True, metavar="PATH")
    common(p, out=True)

    p = sub.add_parser("homology",
                       help="homology dims of a model or a complex")
    p.add_argument("--model", metavar="PATH",
                   help="serialized DGL file (full bracket homology)")
    p.add_argument("--complex", metavar="PATH",
                   help="complex file (linear homology of its model)")
    p.add_argument("--degrees", metavar="LO:HI",
                   help="degree window for the model route; use the "
                        "--degrees=LO:HI form when LO is negative")
    common(p)

    p = sub.add_parser("malcev", help="group tower dims of a complex")
    p.add_argument("--complex", required=True, metavar="PATH")
    p.add_argument("--basepoint", type=int, default=0, metavar="V")
    common(p)

    p = sub.add_parser("pi", help="homotopy group dims of a complex")
    p.add_argument("--complex", required=True, metavar="PATH")
    p.add_argument("--n", type=int, required=True, metavar="K",
                   help="which homotopy group (K >= 1)")
    p.add_argument("--basepoint", type=int, default=0, metavar="V")
    common(p)

    p = sub.add_parser("bch", help="product of free degree-0 generators")
    p.add_argument("--count", type=int, default=2, metavar="K",
                   help="number of generators (default 2)")
    common(p)

    p = sub.add_parser("whitney", help="polynomial form identity suite")
    p.add_argument("--n", type=int, required=True, metavar="DIM")
    p.add_argument("--check", action="store_true",
                   help="run the identity suite")
    common(p, trunc=False)

    p = sub.add_parser("check", help="axiom checks on a model")
    p.add_argument("--model", metavar="PATH",
                   help="serialized DGL file (d-squared check)")
    p.add_argument("--n", type=int, metavar="DIM",
                   help="build and check a simplex model instead")
    common(p, flavor=True)
    return top


def _validate(args):
    if getattr(args, "trunc", 4) < 1:
        raise _UsageError("--trunc must be >= 1")
    if getattr(args, "n", 0) is not None and getattr(args, "n", 0) < 0:
        raise _UsageError("--n must be >= 0")
    if args.command == "pi" and args.n < 1:
        raise _UsageError("--n must be >= 1 for pi")
    if args.command == "bch" and args.count < 2:
        raise _UsageError("--count must be >= 2")
    if args.command == "homology":
        if (args.model is None) == (args.complex is None):
            raise _UsageError("give exactly one of --model / --complex")
    if args.command == "check":
        if (args.model is None) == (args.n is None):
            raise _UsageError("give exactly one of --model / --n")


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise _UsageError("cannot read %s: %s" % (path, e)) from None


def _emit(args, text):
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_build_model(args):
    fam = ModelFamily(args.trunc, args.flavor)
    model = fam.model(args.n)
    return _emit(args, emit_dgl(model.dgl))


def _cmd_model_of_complex(args):
    K = parse_complex(_read(args.complex))
    cm = model_of_complex(K, args.trunc)
    return _emit(args, emit_dgl(cm.dgl))


def _parse_degrees(text):
    lo, sep, hi = text.partition(":")
    if not sep:
        raise _UsageError("--degrees wants LO:HI")
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise _UsageError("--degrees wants integers") from None
    if lo > hi:
        raise _UsageError("--degrees window is empty")
    return list(range(lo, hi + 1))


def _cmd_homology(args):
    lines = ["homology"]
    if args.model:
        L = parse_dgl(_read(args.model))
        degrees = _parse_degrees(args.degrees) if args.degrees else None
        report = homology(L, degrees=degrees)
        lines.append("trunc %d" % L.N)
        for q in report.degrees:
            lines.append("H[%d] = %d" % (q, report.entries[q]["h"]))
    else:
        K = parse_complex(_read(args.complex))
        cm = model_of_complex(K, args.trunc)
        dims, _ = linear_homology(cm.dgl)
        lines.append("trunc %d" % args.trunc)
        for q in sorted(dims):
            lines.append("H[%d] = %d" % (q, dims[q]))
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_malcev(args):
    K = parse_complex(_read(args.complex))
    quotients = malcev_tower(K, args.basepoint, args.trunc)
    layers = tower_layers(quotients)
    lines = ["malcev", "trunc %d" % args.trunc]
    for k, (q, new) in enumerate(zip(quotients, layers), start=1):
        lines.append("stage %d: dim %d new %d" % (k, q.dim, new))
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_pi(args):
    K = parse_complex(_read(args.complex))
    M = minimal_model(K, args.basepoint, args.trunc)
    group = pi_n(M, args.n)
    if args.n == 1:
        lines = ["pi_1 dim %d" % group.dim,
                 "abelian %s" % ("yes" if group.is_abelian() else "no")]
    else:
        lines = ["pi_%d dim %d" % (args.n, group["h"])]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_bch(args):
    names = ["x%d" % i for i in range(1, args.count + 1)]
    gens = GenSet([(n, 0) for n in names])
    elts = [generator_elt(gens, args.trunc, n) for n in names]
    sys.stdout.write(emit_element(bch(*elts)) + "\n")
    return 0


def _whitney_suite(n):
    """Identity suite: each entry is (label, ok)."""
    def faces():
        for k in range(n + 1):
            yield from combinations(range(n + 1), k + 1)

    results = []
    ok = all(wh.face_integral(wh.elementary_form(f, n), f) == 1
             for f in faces())
    results.append(("integral_normalization", ok))

    ok = all(wh.integrate_p(wh.whitney_i(wh.Cochain(n, {f: 1}))) ==
             wh.Cochain(n, {f: 1}) for f in faces())
    results.append(("projection_splits_inclusion", ok))

    ok = all(wh.exterior_d(wh.whitney_i(wh.Cochain(n, {f: 1}))) ==
             wh.whitney_i(wh.cochain_d(wh.Cochain(n, {f: 1})))
             for f in faces())
    results.append(("inclusion_chain_map", ok))

    ok = True
    exp_pool = [e for e in product(range(3), repeat=n) if sum(e) <= 2]
    dts_pool = [s for k in range(n) for s in combinations(range(1, n + 1), k)]
    for e in exp_pool:
        for s in dts_pool:
            u = wh.PolyForm(n, {(e, s): 1})
            if wh.integrate_p(wh.exterior_d(u)) != wh.cochain_d(
                    wh.integrate_p(u)):
                ok = False
    results.append(("projection_chain_map", ok))

    ok = all(wh.restrict(wh.elementary_form(f, n), sub).is_zero()
             for f in faces() for sub in faces()
             if not set(f) <= set(sub))
    results.append(("restriction_locality", ok))
    return results


def _cmd_whitney(args):
    if args.n < 0:
        raise _UsageError("--n must be >= 0")
    lines = ["whitney n=%d" % args.n]
    code = 0
    if args.check:
        for label, ok in _whitney_suite(args.n):
            lines.append("%s %s" % (label, "ok" if ok else "FAIL"))
            if not ok:
                code = 1
    else:
        for k in range(args.n + 1):
            for face in combinations(range(args.n + 1), k + 1):
                form = wh.elementary_form(face, args.n)
                lines.append("w_%s = %s" % ("".join(map(str, face)), form))
    sys.stdout.write("\n".join(lines) + "\n")
    return code


def _cmd_check(args):
    lines = ["check"]
    failed = False
    if args.model:
        L = parse_dgl(_read(args.model))
        residues = [(name, r) for name, r in L.check_d_squared()]
        if residues:
            failed = True
            for name, r in residues:
                lines.append("d_squared FAIL %s: %s" % (name,
                                                        emit_element(r)))
        else:
            lines.append("d_squared ok")
    else:
        fam = ModelFamily(args.trunc, args.flavor)
        model = fam.model(args.n)
        report = check_model_axioms(model)
        for key in ("d_squared", "vertices_mc", "linear_part", "cofaces"):
            items = report[key]
            if not items:
                lines.append("%s ok" % key)
                continue
            failed = True
            for item in items:
                if isinstance(item, tuple):
                    name = item[0] if len(item) == 2 else "%s %s" % item[:2]
                    r = item[-1]
                    lines.append("%s FAIL %s: %s"
                                 % (key, name, emit_element(r)))
                else:
                    lines.append("%s FAIL %s" % (key, item))
    lines.append("FAIL" if failed else "ok")
    sys.stdout.write("\n".join(lines) + "\n")
    return 1 if failed else 0


_DISPATCH = {
    "build-model": _cmd_build_model,
    "model-of-complex": _cmd_model_of_complex,
    "homology": _cmd_homology,
    "malcev": _cmd_malcev,
    "pi": _cmd_pi,
    "bch": _cmd_bch,
    "whitney": _cmd_whitney,
    "check": _cmd_check,
}


def run(argv):
    """Parse argv (no program name) and execute; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise _UsageError("a subcommand is required")
        _validate(args)
        return _DISPATCH[args.command](args)
    except _UsageError as e:
        sys.stderr.write("usage error: %s\n" % e)
        return 2
    except ParseError as e:
        sys.stderr.write("parse error: %s\n" % e)
        return 2
    except (ConfigError, DomainError, StructError, SolveError) as e:
        sys.stderr.write("error: %s\n" % e)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
