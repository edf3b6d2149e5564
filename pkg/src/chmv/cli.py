"""Command-line interface.

Commands: classify (structural predicates of an algebra or multiset),
dual (apply the appropriate functor), homs (hom-set enumeration or
counting), eval (evaluate an MV term), selftest (run the verification
suites).  Exit codes: 0 ok, 1 domain error, 2 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import algebra as alg
from . import duality as dual
from . import dsl
from . import multiset as ms
from . import structure as st
from . import verify

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INTERNAL = 2


@dataclass
class CommandResult:
    status: str  # "ok" or "error"
    payload: object = None
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.status == "ok" else EXIT_DOMAIN


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text().strip()
    return text


def _parse_object(text: str):
    """An algebra or a multiset, told apart by the leading brace."""
    if text.lstrip().startswith("{"):
        return dsl.parse_multiset(text)
    return dsl.parse_algebra(text)


def _profile_of_input(obj) -> ms.Profile:
    if isinstance(obj, ms.EMultiset):
        return ms.profile_of(obj)
    return ms.profile_of(dual.H_obj(obj))


def cmd_classify(spec: str) -> CommandResult:
    profile = _profile_of_input(_parse_object(spec))
    report = {
        "hyperarchimedean": st.is_hyperarchimedean(profile),
        "stone": st.is_stone(profile),
        "projective": st.is_projective(profile),
        "extremally_disconnected": st.is_extremally_disconnected(profile),
        "urysohn_strauss": st.urysohn_strauss_holds(profile),
    }
    report["profile"] = ms.profile_to_json(profile)
    return CommandResult("ok", report)


def cmd_dual(spec: str) -> CommandResult:
    obj = _parse_object(spec)
    if isinstance(obj, ms.EMultiset):
        out = dual.F_obj(obj)
        shape = " * ".join(str(c) for _, c in out.factors) if out.factors else "[]"
        encoded: object = dual.algebra_to_json(out)
    else:
        out = dual.H_obj(obj)
        shape = dsl.render(out)
        encoded = ms.multiset_to_json(out)
    return CommandResult("ok", {"dual": shape, "object": encoded})


def cmd_homs(src: str, dst: str, mode: str = "count") -> CommandResult:
    a, b = _parse_object(src), _parse_object(dst)
    if isinstance(a, ms.EMultiset) != isinstance(b, ms.EMultiset):
        return CommandResult(
            "error", None, ["source and target must both be algebras or both multisets"]
        )
    if isinstance(a, ms.EMultiset):
        items = list(ms.enumerate_morphisms(a, b))
        listing = [{"map": dict(m.mapping)} for m in items]
    else:
        items = list(dual.enumerate_continuous_homs(a, b))
        listing = [{"index_map": dict(h.index_map)} for h in items]
    payload: dict = {"count": len(items)}
    if mode == "list":
        payload["homs"] = listing
    return CommandResult("ok", payload)


def _parse_element(text: str, A: alg.ProductAlgebra) -> alg.Element:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [p.strip() for p in body.split(",")] if body else []
    return alg.make_element(A, [Fraction(p) for p in parts])


def cmd_eval(term_text: str, algebra_text: str, env_text: str) -> CommandResult:
    A = dsl.parse_algebra(algebra_text)
    term = dsl.parse_term(term_text)
    env = {}
    if env_text:
        for binding in env_text.split(";"):
            name, _, value = binding.partition("=")
            if not value:
                return CommandResult("error", None, [f"bad binding {binding!r}"])
            env[name.strip()] = _parse_element(value, A)
    result = dsl.eval_term(term, env, A)
    return CommandResult("ok", dual.element_to_json(result))


def cmd_selftest(
    scale: str = "small",
    seed: int = 0,
    samples: int = 100,
    bound: int = 10 ** 6,
    inject_fault: bool = False,
) -> CommandResult:
    results = verify.run_all(
        scale, seed=seed, samples=samples, bound=bound, inject_fault=inject_fault
    )
    payload = {
        "suites": [
            {"name": r.name, "ok": r.ok, "checks": r.checks, "failures": r.failures[:5]}
            for r in results
        ],
        "ok": all(r.ok for r in results),
    }
    result = CommandResult("ok" if payload["ok"] else "error", payload)
    if not payload["ok"]:
        result.diagnostics = [r.line() for r in results if not r.ok]
    return result


def _emit(result: CommandResult, fmt: str) -> None:
    if fmt == "json":
        print(
            json.dumps(
                {
                    "status": result.status,
                    "payload": result.payload,
                    "diagnostics": result.diagnostics,
                },
                indent=2,
                default=str,
            )
        )
        return
    if isinstance(result.payload, dict) and "suites" in result.payload:
        for suite in result.payload["suites"]:
            mark = "PASS" if suite["ok"] else "FAIL"
            line = f"{mark} {suite['name']} ({suite['checks']} checks)"
            if not suite["ok"] and suite["failures"]:
                line += f": {suite['failures'][0]}"
            print(line)
        print("ok" if result.payload["ok"] else "FAILED")
    elif result.payload is not None:
        print(json.dumps(result.payload, indent=2, default=str))
    for message in result.diagnostics:
        print(message, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chmv",
        description="Products of Lukasiewicz chains, their multiset duals, and structural checks.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="structural predicates of an algebra or multiset")
    p.add_argument("spec")

    p = sub.add_parser("dual", help="dual object under the appropriate functor")
    p.add_argument("spec")

    p = sub.add_parser("homs", help="enumerate or count morphisms")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--mode", choices=("count", "list"), default="count")

    p = sub.add_parser("eval", help="evaluate an MV term over a product algebra")
    p.add_argument("term")
    p.add_argument("--algebra", required=True)
    p.add_argument("--env", default="", help='bindings like "x=(1/2, 0); y=(1, 1)"')

    p = sub.add_parser("selftest", help="run the verification suites")
    p.add_argument("--scale", choices=("small", "full"), default="small")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--bound", type=int, default=10 ** 6)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


_DOMAIN_ERRORS = (ValueError, ZeroDivisionError, OSError)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "classify":
            result = cmd_classify(_read_arg(args.spec))
        elif args.command == "dual":
            result = cmd_dual(_read_arg(args.spec))
        elif args.command == "homs":
            result = cmd_homs(_read_arg(args.src), _read_arg(args.dst), args.mode)
        elif args.command == "eval":
            result = cmd_eval(
                _read_arg(args.term), _read_arg(args.algebra), args.env
            )
        else:
            result = cmd_selftest(
                args.scale,
                seed=args.seed,
                samples=args.samples,
                bound=args.bound,
                inject_fault=args.inject_fault,
            )
    except _DOMAIN_ERRORS as exc:
        result = CommandResult("error", None, [str(exc)])
        _emit(result, args.format)
        return EXIT_DOMAIN
    except Exception as exc:  # invariant breach
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(result, args.format)
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
