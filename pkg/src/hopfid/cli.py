"""Command line interface.

Subcommands:
  normalform   reduce an expression to its canonical form in an algebra
  coproduct    apply the coproduct of a Hopf algebra to an element
  mu           evaluate the universal map of an object on a free polynomial
  verify       test whether a named or written polynomial is an identity
  distinguish  compare two objects of one family through their identities
  catalog      list the named identities of a family
  selfcheck    run the structural axiom suites for a family

Exit status: 0 for computed or verified results, 1 for falsified verdicts
(an identity that fails, objects that are distinguished, a failing check
suite), 2 for usage, parse, or spec errors.  Output is text by default;
--format json emits one deterministic JSON document.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .comodule import (
    ComoduleAlgebra,
    GaloisObjectSpec,
    Symbolic,
    check_comodule,
    galois_object,
)
from .exprparse import (
    MatrixSpec,
    ParseError,
    parse_expression,
    parse_hopf_spec,
    parse_object_spec,
)
from .hopf import check_hopf_axioms, coproduct
from .identities import (
    Distinguished,
    bind_to_object,
    catalog,
    coinvariant_P,
    coinvariant_Q,
    commutator_identity,
    distinguish,
    mu,
    verify_matrix_identity,
)
from .ncalg import check_confluence

__all__ = ["main"]


class _Usage(ValueError):
    pass


def _galois_spec(text) -> GaloisObjectSpec:
    spec = parse_object_spec(text)
    if isinstance(spec, MatrixSpec):
        raise _Usage(
            "this command needs a comodule algebra spec like taft:2;a=1;c=0"
        )
    return spec


def _symbolic_note(A: ComoduleAlgebra) -> str:
    names = [k for k, v in A.spec.values if isinstance(v, Symbolic)]
    if not names:
        return ""
    return " (symbolic " + ", ".join(names) + ")"


# -- subcommand handlers --------------------------------------------------------
# each returns (result dict, list of text lines, exit code)


def _cmd_normalform(args, timings):
    if ";" in args.algebra:
        spec = _galois_spec(args.algebra)
        alg = galois_object(spec).algebra
        shown = spec.render()
    else:
        hopf = parse_hopf_spec(args.algebra)
        alg = hopf.algebra
        shown = args.algebra.strip()
    start = time.perf_counter()
    elem = parse_expression(args.expression, alg, args.max_degree)
    timings["normalform"] = time.perf_counter() - start
    result = {
        "algebra": shown,
        "normal_form": str(elem),
        "terms": len(elem.terms),
    }
    return result, [f"normal form in {shown}: {elem}"], 0


def _cmd_coproduct(args, timings):
    hopf = parse_hopf_spec(args.hopf)
    elem = parse_expression(args.expression, hopf.algebra, args.max_degree)
    start = time.perf_counter()
    image = coproduct(hopf, elem)
    timings["coproduct"] = time.perf_counter() - start
    result = {"hopf": hopf.name, "coproduct": str(image)}
    return result, [f"coproduct in {hopf.name}: {image}"], 0


def _cmd_mu(args, timings):
    spec = _galois_spec(args.object)
    A = galois_object(spec)
    poly = parse_expression(args.expression, A.hopf, args.max_degree)
    start = time.perf_counter()
    image = mu(poly, A)
    timings["mu"] = time.perf_counter() - start
    result = {
        "object": spec.render(),
        "image": str(image),
        "zero": image.is_zero(),
    }
    return result, [f"mu image in {A.name}: {image}"], 0


def _named_identity(name, A):
    """Resolve a catalog name against an object; returns (kind, payload)."""
    for cat_name, template in catalog(A.hopf):
        if name == cat_name:
            return "single", bind_to_object(template, A)
    if name.startswith("coinv_P:"):
        h = parse_expression(name[len("coinv_P:"):], A.hopf.algebra)
        return "commutators", coinvariant_P(h)
    if name.startswith("coinv_Q:"):
        body = name[len("coinv_Q:"):]
        if "," not in body:
            raise _Usage("coinv_Q takes two elements: coinv_Q:<h>,<h'>")
        left, right = body.split(",", 1)
        h = parse_expression(left, A.hopf.algebra)
        h2 = parse_expression(right, A.hopf.algebra)
        return "commutators", coinvariant_Q(h, h2)
    return None


def _cmd_verify(args, timings):
    name = args.identity.strip()
    if name.startswith("standard:"):
        spec = parse_object_spec(args.object)
        if not isinstance(spec, MatrixSpec):
            raise _Usage(
                "standard:<m> verifies against a matrix target; "
                "use --object matrix:<k>"
            )
        m = int(name[len("standard:"):])
        start = time.perf_counter()
        holds = verify_matrix_identity(m, spec.k)
        timings["verify"] = time.perf_counter() - start
        result = {
            "object": spec.render(),
            "identity": name,
            "verified": holds,
        }
        if holds:
            lines = [f"{name}: identity verified on {spec.k}x{spec.k} matrices"]
        else:
            lines = [f"{name}: not an identity on {spec.k}x{spec.k} matrices"]
        return result, lines, 0 if holds else 1
    spec = _galois_spec(args.object)
    A = galois_object(spec)
    resolved = _named_identity(name, A)
    if resolved is None and (
        name == "taft_pc"
        or name.split(":", 1)[0] in ("taft_pc", "en_ci", "en_dij")
    ):
        raise _Usage(
            f"identity {name!r} is not in the catalog of {A.hopf.name}"
        )
    start = time.perf_counter()
    shown = name
    if resolved is None:
        poly = parse_expression(name, A.hopf, args.max_degree)
        witness = mu(poly, A)
        holds = witness.is_zero()
    elif resolved[0] == "single":
        witness = mu(resolved[1], A)
        holds = witness.is_zero()
    else:
        core = resolved[1]
        holds = True
        witness = None
        for z in A.hopf.basis():
            z_elem = A.hopf.algebra.element({z: 1})
            image = mu(commutator_identity(core, z_elem), A)
            if not image.is_zero():
                holds = False
                witness = image
                break
    timings["verify"] = time.perf_counter() - start
    result = {
        "object": spec.render(),
        "identity": name,
        "verified": holds,
    }
    if holds:
        lines = [f"{shown}: identity verified{_symbolic_note(A)}"]
    else:
        result["witness"] = str(witness)
        lines = [
            f"{shown}: not an identity for {A.name}",
            f"witness mu-image: {witness}",
        ]
    return result, lines, 0 if holds else 1


def _auto_prime(first: GaloisObjectSpec, second: GaloisObjectSpec):
    """Prime the second spec's symbolic values that collide with the first.

    Without this, two objects described by the same free parameter letter
    would compare as one object; the primed copy keeps them distinct while
    staying symbolic.
    """
    taken = {
        (k, v.prime) for k, v in first.values if isinstance(v, Symbolic)
    }
    changed = []
    for k, v in second.values:
        if isinstance(v, Symbolic):
            prime = v.prime
            while (k, prime) in taken:
                prime += 1
            changed.append((k, Symbolic(prime)))
        else:
            changed.append((k, v))
    return GaloisObjectSpec(second.family, second.n, tuple(changed))


def _cmd_distinguish(args, timings):
    first = _galois_spec(args.first)
    second = _galois_spec(args.second)
    if first.family != second.family or first.n != second.n:
        raise _Usage(
            f"cannot compare {first.render()} with {second.render()}: "
            "different families"
        )
    second = _auto_prime(first, second)
    A = galois_object(first)
    B = galois_object(second)
    start = time.perf_counter()
    verdict = distinguish(A, B)
    timings["distinguish"] = time.perf_counter() - start
    result = {"first": first.render(), "second": second.render()}
    if isinstance(verdict, Distinguished):
        result["verdict"] = "distinguished"
        result["identity"] = verdict.identity
        result["direction"] = verdict.direction
        result["witness"] = str(verdict.witness)
        lines = [str(verdict)]
        return result, lines, 1
    result["verdict"] = "isomorphic"
    result["note"] = verdict.note
    return result, [str(verdict)], 0


def _cmd_catalog(args, timings):
    hopf = parse_hopf_spec(args.hopf)
    start = time.perf_counter()
    entries = catalog(hopf)
    timings["catalog"] = time.perf_counter() - start
    listed = [
        {"name": name, "degree": poly.degree(), "polynomial": str(poly)}
        for name, poly in entries
    ]
    result = {"hopf": hopf.name, "count": len(listed), "identities": listed}
    lines = [f"{hopf.name}: {len(listed)} catalog identities"]
    for row in listed:
        lines.append(f"  {row['name']}  (degree {row['degree']})")
        lines.append(f"    {row['polynomial']}")
    return result, lines, 0


def _random_element(rng, alg, max_len=3, n_terms=3):
    terms = {}
    gens = len(alg.generators)
    for _ in range(n_terms):
        word = tuple(rng.randrange(gens) for _ in range(rng.randrange(max_len + 1)))
        coeff = rng.randrange(-3, 4)
        if coeff:
            elem_word = alg.element({word: coeff})
            for w, c in elem_word.terms.items():
                terms[w] = terms.get(w, 0) + c
    total = alg.zero()
    for w, c in terms.items():
        total = total + alg.element({w: c})
    return total


def _cmd_selfcheck(args, timings):
    hopf = parse_hopf_spec(args.hopf)
    rng = random.Random(args.seed)
    checks = []

    start = time.perf_counter()
    axioms = check_hopf_axioms(hopf)
    checks.append(("hopf axioms", axioms.ok, str(axioms)))
    timings["hopf_axioms"] = time.perf_counter() - start

    start = time.perf_counter()
    conf = check_confluence(hopf.algebra)
    checks.append(("hopf confluence", conf.ok, str(conf)))
    timings["confluence"] = time.perf_counter() - start

    if hopf.family == "taft":
        generic = parse_object_spec(f"taft:{hopf.n}")
    else:
        generic = parse_object_spec(f"en:{hopf.n}")
    A = galois_object(generic)
    start = time.perf_counter()
    comod = check_comodule(A)
    checks.append(("coaction suite", comod.ok, str(comod)))
    conf_a = check_confluence(A.algebra)
    checks.append(("object confluence", conf_a.ok, str(conf_a)))
    timings["coaction"] = time.perf_counter() - start

    start = time.perf_counter()
    assoc_ok = True
    for _ in range(100):
        e1 = _random_element(rng, A.algebra)
        e2 = _random_element(rng, A.algebra)
        e3 = _random_element(rng, A.algebra)
        if (e1 * e2) * e3 != e1 * (e2 * e3):
            assoc_ok = False
            break
    checks.append(("seeded associativity", assoc_ok, "100 random triples"))
    timings["associativity"] = time.perf_counter() - start

    ok = all(passed for _, passed, _ in checks)
    result = {
        "hopf": hopf.name,
        "passed": ok,
        "checks": [
            {"name": name, "passed": passed} for name, passed, _ in checks
        ],
    }
    lines = []
    for name, passed, detail in checks:
        mark = "ok" if passed else "FAIL"
        lines.append(f"{mark:4} {name}")
        if not passed:
            lines.append(f"     {detail}")
    lines.append(
        f"{hopf.name}: self check {'passed' if ok else 'FAILED'}"
    )
    return result, lines, 0 if ok else 1


# -- dispatch -------------------------------------------------------------------


def _add_common(parser, default):
    # the shared flags sit on the root parser and on every subcommand, so
    # both "hopfid --format json verify .." and "hopfid verify .. --format
    # json" work; the subcommand copies default to SUPPRESS so an unset
    # flag never clobbers a value the root parser already recorded
    parser.add_argument(
        "--format", choices=("text", "json"), default=default,
        help="output format (default text)",
    )
    parser.add_argument(
        "--seed", type=int, default=default,
        help="seed for randomized checks (default 0)",
    )
    parser.add_argument(
        "--max-degree", type=int, default=default,
        help="refuse expression expansions past this degree",
    )
    parser.add_argument(
        "--timings", action="store_const", const=True, default=default,
        help="include wall-clock timings in the output",
    )


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, argparse.SUPPRESS)
    parser = argparse.ArgumentParser(
        prog="hopfid",
        description=(
            "Exact symbolic computations with Taft and E(n) Hopf algebras, "
            "their comodule algebras, and polynomial identities."
        ),
    )
    _add_common(parser, None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalform", parents=[common],
                       help="canonical form of an expression")
    p.add_argument("--algebra", required=True,
                   help="hopf spec (taft:3) or object spec (taft:3;a=1;c=0)")
    p.add_argument("expression")
    p.set_defaults(handler=_cmd_normalform)

    p = sub.add_parser("coproduct", parents=[common],
                       help="apply a Hopf coproduct")
    p.add_argument("--hopf", required=True, help="hopf spec, e.g. taft:2")
    p.add_argument("expression")
    p.set_defaults(handler=_cmd_coproduct)

    p = sub.add_parser("mu", parents=[common],
                       help="evaluate the universal map on an object")
    p.add_argument("--object", required=True,
                   help="object spec, e.g. taft:2;a=1;c=sym")
    p.add_argument("expression", help="free polynomial, e.g. 'Y*X - q*X*Y'")
    p.set_defaults(handler=_cmd_mu)

    p = sub.add_parser("verify", parents=[common],
                       help="check a polynomial identity")
    p.add_argument("--object", required=True,
                   help="object spec, or matrix:<k> for standard:<m>")
    p.add_argument("identity",
                   help="catalog name (taft_pc, en_ci:1, coinv_P:y, "
                        "standard:4) or a free expression")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("distinguish", parents=[common],
                       help="compare two objects by their identities")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=_cmd_distinguish)

    p = sub.add_parser("catalog", parents=[common],
                       help="list the identity catalog of a family")
    p.add_argument("--hopf", required=True, help="hopf spec, e.g. en:2")
    p.set_defaults(handler=_cmd_catalog)

    p = sub.add_parser("selfcheck", parents=[common],
                       help="run the structural check suites")
    p.add_argument("--hopf", required=True, help="hopf spec, e.g. en:2")
    p.set_defaults(handler=_cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    args.format = args.format or "text"
    args.seed = 0 if args.seed is None else args.seed
    args.timings = bool(args.timings)
    timings = {}
    try:
        result, lines, code = args.handler(args, timings)
    except (ParseError, _Usage) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        payload = {
            "command": args.command,
            "input": _echo_input(args),
            "result": result,
        }
        if args.timings:
            payload["timings"] = {
                k: round(v, 6) for k, v in sorted(timings.items())
            }
        print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)
        if args.timings:
            for k, v in sorted(timings.items()):
                print(f"time {k}: {v:.6f}s")
    return code


def _echo_input(args):
    skip = {
        "command", "format", "seed", "max_degree", "timings", "handler",
    }
    return {
        k: v for k, v in sorted(vars(args).items())
        if k not in skip and v is not None
    }


if __name__ == "__main__":
    sys.exit(main())
