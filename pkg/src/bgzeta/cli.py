"""Command-line surface: every operation as a subcommand with stable output.

Global flags may appear before or after the subcommand.  JSON mode is the
machine interface; text output is human-facing.  Exit codes: 0 success,
1 golden-check mismatch (verify-paper), 2 validation error, 3 capacity
error, 4 internal contract violation.

elapsed_ms is emitted as null unless --timings is passed, so that output
for a fixed configuration is byte-identical across runs and --jobs
widths.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import bernoulli as _bern
from . import polyring as _poly
from . import zeta as _zeta
from .errors import (BGZetaError, CapacityError, ContractViolationError,
                     ValidationError)
from .ff import Field, make_tower
from .textio import parse_poly

DEFAULTS = {
    "p": None, "q": None, "field_modulus": None, "f": None, "m": None,
    "n": None, "part": None, "d": None, "dmax": None,
    "cap": _zeta.DEFAULT_CAP, "jobs": 1, "seed": 0,
    "json": False, "timings": False, "factorial_exponent": False,
}


def _common_flags() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    c.add_argument("--p", type=int, help="prime characteristic")
    c.add_argument("--q", type=int, help="field size as a prime power")
    c.add_argument("--field-modulus", help="modulus of F_q over F_p, e.g. y^2+y+1")
    c.add_argument("--f", help="monic irreducible f(u) over F_p, e.g. u^2+1")
    c.add_argument("--m", help="monic irreducible modulus m over F_q, e.g. T^2+1")
    c.add_argument("--n", help="exponent, or an inclusive range a..b")
    c.add_argument("--part", choices=["minus", "plus", "both"])
    c.add_argument("--d", type=int, help="target degree for the search")
    c.add_argument("--dmax", type=int, help="largest modulus degree for survey")
    c.add_argument("--cap", type=int, help="iteration cap (default 10^6)")
    c.add_argument("--jobs", type=int, help="parallel workers for survey")
    c.add_argument("--seed", type=int, help="seed for factorization search order")
    c.add_argument("--json", action="store_true", help="machine-readable output")
    c.add_argument("--timings", action="store_true",
                   help="include real elapsed_ms in reports")
    c.add_argument("--factorial-exponent", action="store_true",
                   help="search with L = d! instead of lcm(1..d)")
    return c


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    root = argparse.ArgumentParser(
        prog="bgzeta", parents=[common],
        description="Bernoulli-Goss polynomials and divisibility of reduced "
                    "zeta factors of cyclotomic function fields")
    sub = root.add_subparsers(dest="command", required=True)
    sub.add_parser("bn", parents=[common],
                   help="Bernoulli-Goss polynomial and scalar for n")
    sub.add_parser("balpha", parents=[common],
                   help="factored norm value of B_n at a root of f")
    fp = sub.add_parser("factor", parents=[common],
                        help="factor a polynomial in T over F_q")
    fp.add_argument("poly", help="polynomial in T to factor")
    sub.add_parser("zetabar", parents=[common],
                   help="reduced zeta factor(s) of a modulus m")
    sub.add_parser("criterion", parents=[common],
                   help="decide f | reduced zeta factor of m, with witness")
    sub.add_parser("survey", parents=[common],
                   help="criterion over every modulus of degree <= dmax")
    sub.add_parser("search", parents=[common],
                   help="construct a modulus of degree > d with f dividing")
    sub.add_parser("verify-paper", parents=[common],
                   help="replay all golden values and report pass/fail")
    return root


@dataclass
class RunConfig:
    command: str
    fq: "Field | None"
    f: object
    m: object
    n_values: "list[int] | None"
    part: "str | None"
    d: "int | None"
    dmax: "int | None"
    cap: int
    jobs: int
    seed: int
    json_mode: bool
    timings: bool
    factorial_exponent: bool
    poly_text: "str | None" = None


def _resolve_field(opts: dict) -> "Field | None":
    p, q, mod = opts["p"], opts["q"], opts["field_modulus"]
    if q is None and p is None:
        return None
    if q is not None:
        char = _char_of(q)
        if p is not None and p != char:
            raise ValidationError(f"--p {p} conflicts with --q {q} (characteristic {char})")
        p = char
        e = 0
        qq = q
        while qq > 1:
            qq //= p
            e += 1
        if p ** e != q:
            raise ValidationError(f"--q {q} is not a prime power")
        if mod is not None:
            field = make_tower(p, mod)
            if field.order != q:
                raise ValidationError(
                    f"--field-modulus gives order {field.order}, but --q is {q}")
            return field
        return make_tower(p) if e == 1 else make_tower(p, e)
    return make_tower(p, mod) if mod is not None else make_tower(p)


def _char_of(q: int) -> int:
    if q < 2:
        raise ValidationError(f"--q must be at least 2, got {q}")
    d = 2
    while d * d <= q:
        if q % d == 0:
            return d
        d += 1
    return q


def _parse_n(text: "str | None") -> "list[int] | None":
    if text is None:
        return None
    try:
        if ".." in text:
            a, b = text.split("..")
            lo, hi = int(a), int(b)
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise ValidationError(f"--n expects an integer or a..b, got {text!r}") from None


def make_config(args: argparse.Namespace) -> RunConfig:
    opts = dict(DEFAULTS)
    opts.update({k: v for k, v in vars(args).items() if k not in ("command", "poly")})
    fq = _resolve_field(opts)
    f = m = None
    if opts["f"] is not None:
        if fq is None:
            raise ValidationError("--f needs a field (--q or --p)")
        f = parse_poly(fq.prime_subfield(), opts["f"], var="u")
    if opts["m"] is not None:
        if fq is None:
            raise ValidationError("--m needs a field (--q or --p)")
        m = parse_poly(fq, opts["m"], var="T")
    return RunConfig(
        command=args.command, fq=fq, f=f, m=m,
        n_values=_parse_n(opts["n"]), part=opts["part"], d=opts["d"],
        dmax=opts["dmax"], cap=opts["cap"], jobs=opts["jobs"],
        seed=opts["seed"], json_mode=opts["json"], timings=opts["timings"],
        factorial_exponent=opts["factorial_exponent"],
        poly_text=getattr(args, "poly", None))


def _need(cfg: RunConfig, **what):
    for name, value in what.items():
        if value is None:
            raise ValidationError(f"subcommand {cfg.command!r} requires --{name}")


def _emit(cfg: RunConfig, payload, text_lines: "list[str]") -> None:
    if cfg.json_mode:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        for line in text_lines:
            print(line)


def cmd_bn(cfg: RunConfig) -> int:
    _need(cfg, field=cfg.fq, n=cfg.n_values)
    rows, lines = [], []
    for n in cfg.n_values:
        up = _bern.bernoulli_poly(n, cfg.fq, cfg.cap)
        sc = _bern.bernoulli_scalar(n, cfg.fq, cfg.cap)
        rows.append({"n": n, "bernoulli_poly": up.to_json(),
                     "bernoulli_scalar": str(sc)})
        lines.append(f"n = {n}: B_n(u) = {up}")
        lines.append(f"{'':{len(f'n = {n}: ')}}B_n    = {sc}")
    _emit(cfg, rows, lines)
    return 0


def cmd_balpha(cfg: RunConfig) -> int:
    _need(cfg, field=cfg.fq, f=cfg.f, n=cfg.n_values)
    ctx = _bern.root_context(cfg.f, cfg.fq)
    rows, lines = [], []
    for n in cfg.n_values:
        value = _bern.bernoulli_norm(n, ctx, cfg.cap)
        fac = _poly.factor(value, cfg.seed)
        rows.append({"n": n, "norm_value": str(value),
                     "factorization": fac.to_json(), "display": str(fac)})
        lines.append(f"n = {n}: {fac}")
    _emit(cfg, rows, lines)
    return 0


def cmd_factor(cfg: RunConfig) -> int:
    _need(cfg, field=cfg.fq)
    if not cfg.poly_text:
        raise ValidationError("factor needs a polynomial argument")
    poly = parse_poly(cfg.fq, cfg.poly_text, var="T")
    fac = _poly.factor(poly, cfg.seed)
    _emit(cfg, {"poly": str(poly), **fac.to_json(), "display": str(fac)},
          [f"{poly} = {fac}"])
    return 0


def _parts(cfg: RunConfig) -> "list[str]":
    if cfg.part in (None, "both"):
        return [_zeta.MINUS, _zeta.PLUS]
    return [cfg.part]


def cmd_zetabar(cfg: RunConfig) -> int:
    _need(cfg, field=cfg.fq, m=cfg.m)
    rows, lines = [], []
    for part in _parts(cfg):
        rz = _zeta.reduced_zeta(cfg.m, part, cfg.cap)
        rows.append({"q": cfg.fq.order, "m": str(cfg.m), "part": part,
                     "reduced_zeta": [int(c) for c in rz.poly.coeffs],
                     "display": str(rz.poly)})
        lines.append(f"Zbar_{part}({cfg.m}) = {rz.poly}")
    _emit(cfg, rows, lines)
    return 0


def _report_lines(r) -> "list[str]":
    out = [f"m = {r.modulus}  part = {r.part}  verdict = "
           f"{'divides' if r.verdict else 'does not divide'}"
           + (f"  witness n = {r.witness}" if r.witness is not None else "")]
    out.append(f"  reduced factor: {r.reduced.poly}")
    if r.note:
        out.append(f"  note: {r.note}")
    return out


def cmd_criterion(cfg: RunConfig) -> int:
    _need(cfg, field=cfg.fq, f=cfg.f, m=cfg.m)
    rows, lines = [], []
    for part in _parts(cfg):
        rep = _zeta.criterion_check(cfg.f, cfg.m, part, cfg.cap)
        rows.append(rep.to_json_dict(cfg.timings))
        lines.extend(_report_lines(rep))
    _emit(cfg, rows, lines)
    return 0


def cmd_survey(cfg: RunConfig) -> int:
    _need(cfg, field=cfg.fq, f=cfg.f, dmax=cfg.dmax)
    part = cfg.part or "both"
    reports = _zeta.survey(cfg.f, cfg.fq, cfg.dmax, part, cfg.cap, cfg.jobs)
    rows = [r.to_json_dict(cfg.timings) for r in reports]
    headers = ("m", "part", "verdict", "witness", "reduced factor")
    table = [(str(r.modulus), r.part, "yes" if r.verdict else "no",
              str(r.witness) if r.witness is not None else "-",
              str(r.reduced.poly)) for r in reports]
    widths = [max(len(h), *(len(row[i]) for row in table)) if table else len(h)
              for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in table]
    _emit(cfg, rows, lines)
    return 0


def cmd_search(cfg: RunConfig) -> int:
    _need(cfg, field=cfg.fq, f=cfg.f, d=cfg.d, part=cfg.part)
    if cfg.part == "both":
        raise ValidationError("search needs a single part, minus or plus")
    result = _zeta.find_divisible_modulus(cfg.f, cfg.fq, cfg.d, cfg.part,
                                          cfg.cap, cfg.factorial_exponent)
    lines = [f"m = {result.modulus}  (degree {result.modulus.degree()})",
             f"witness b = {result.witness}"]
    lines += [f"  {step}" for step in result.trace]
    _emit(cfg, result.to_json_dict(cfg.timings), lines)
    return 0


# -- verify-paper golden battery -------------------------------------------


def _golden_checks() -> "list[tuple[str, object, object]]":
    """(name, expected, computed) for every pinned golden value."""
    F2, F3 = make_tower(2), make_tower(3)
    F4 = make_tower(2, "y^2+y+1")
    f2 = parse_poly(F2, "u^2+u+1", var="u")
    f3 = parse_poly(F3, "u^2+1", var="u")
    ctx2 = _bern.root_context(f2, F2)
    ctx3 = _bern.root_context(f3, F3)
    m31 = parse_poly(F3, "T^2+1")
    checks = []

    def norm2(n):
        return str(_poly.factor(_bern.bernoulli_norm(n, ctx2)))

    def norm3(n):
        return str(_poly.factor(_bern.bernoulli_norm(n, ctx3)))

    checks.append(("q2 norm units at n=1,2,4", ["1", "1", "1"],
                   [norm2(n) for n in (1, 2, 4)]))
    checks.append(("q2 norm at n=3", "(T^4+T+1)", norm2(3)))
    checks.append(("q2 norm at n=5 factors",
                   "(T^4+T^3+1)(T^4+T^3+T^2+T+1)", norm2(5)))
    checks.append(("q2 norm at n=6 factors", "(T^4+T+1)^2", norm2(6)))
    checks.append(("q3 norm units at n=1,3", ["1", "1"],
                   [norm3(n) for n in (1, 3)]))
    checks.append(("q3 norm at n=5,7 factors",
                   ["(T^2+1)(T^2+T+2)(T^2+2*T+2)"] * 2,
                   [norm3(n) for n in (5, 7)]))

    plus_survey = _zeta.survey(f2, F2, 3, part=_zeta.PLUS)
    checks.append(("q2 plus part fails for all deg<=3 moduli",
                   [False] * 5, [r.verdict for r in plus_survey]))
    minus_reports = [_zeta.criterion_check(f3, parse_poly(F3, mt), _zeta.MINUS)
                     for mt in ("T^2+1", "T^2+T+2", "T^2+2*T+2")]
    checks.append(("q3 minus part divides for the three quadratics",
                   [(True, 5)] * 3,
                   [(r.verdict, r.witness) for r in minus_reports]))

    checks.append(("irreducibility of T^4+T+1 over F_2", True,
                   _poly.is_irreducible(parse_poly(F2, "T^4+T+1"))))
    checks.append(("irreducibility of T^2+1 over F_3", True,
                   _poly.is_irreducible(m31)))
    checks.append(("monic irreducible quadratics over F_3",
                   ["T^2+1", "T^2+T+2", "T^2+2*T+2"],
                   [str(p) for p in _poly.enumerate_monic_irreducible(F3, 2)]))
    checks.append(("power sum s_2(1) vanishes over F_2", True,
                   _bern.power_sum_exact(2, 1, F2).is_zero()))
    checks.append(("binomial (19 choose 9) = -1 mod 3", 2,
                   _bern.binom_mod(19, 9, 3)))
    checks.append(("B_q(u) = 1 for q = 2, 3, 4", ["1"] * 3,
                   [str(_bern.bernoulli_poly(F.order, F)) for F in (F2, F3, F4)]))
    checks.append(("B_2(q-1)(u) = 1 for q = 2, 3, 4", ["1"] * 3,
                   [str(_bern.bernoulli_poly(2 * (F.order - 1), F))
                    for F in (F2, F3, F4)]))
    checks.append(("norm units at n = q and n = 2(q-1)", ["1"] * 4,
                   [str(_bern.bernoulli_norm(n, ctx3)) for n in (3, 4)]
                   + [str(_bern.bernoulli_norm(n, ctx2)) for n in (2, 2)]))
    checks.append(("modular route divisible at n=5, m=T^2+1", True,
                   _bern.bernoulli_norm_mod(5, ctx3, m31).divisible))
    r5 = _bern.bernoulli_norm_mod(5, ctx3, m31)
    r13 = _bern.bernoulli_norm_mod(13, ctx3, m31)
    checks.append(("congruent exponents give equal residues (5 vs 13 mod 8)",
                   True, r5.values == r13.values))
    checks.append(("reduced minus factor is 1 over F_2", "1",
                   str(_zeta.reduced_zeta(parse_poly(F2, "T^3+T+1"),
                                          _zeta.MINUS).poly)))
    checks.append(("class number minus component false over F_2",
                   False,
                   _zeta.class_number_divisibility(parse_poly(F2, "T^3+T+1"))[0]))
    try:
        _zeta.find_divisible_modulus(f2, F2, 2, _zeta.MINUS)
        refused = False
    except ValidationError:
        refused = True
    checks.append(("search refuses the empty minus part at q=2", True, refused))
    checks.append(("construction norms have positive degree",
                   [True, True, True],
                   [_bern.bernoulli_norm(1 + 1 * 2 ** 2, ctx2).degree() > 0,
                    _bern.bernoulli_norm(1 + 2 * 3 ** 2, ctx3).degree() > 0,
                    _bern.bernoulli_norm(2 + 2 * 3 ** 2, ctx3).degree() > 0]))
    return checks


def cmd_verify_paper(cfg: RunConfig) -> int:
    results = []
    for name, expected, computed in _golden_checks():
        results.append({"name": name, "pass": expected == computed,
                        "expected": expected, "computed": computed})
    failures = [r for r in results if not r["pass"]]
    if cfg.json_mode:
        print(json.dumps({"checks": results, "all_pass": not failures}, indent=2,
                         default=str))
    else:
        for r in results:
            print(("ok   " if r["pass"] else "FAIL ") + r["name"])
            if not r["pass"]:
                print(f"     expected {r['expected']!r}, computed {r['computed']!r}")
        print(f"{len(results) - len(failures)}/{len(results)} golden checks pass"
              + ("" if not failures else f"; first failing: {failures[0]['name']}"))
        if not failures:
            print("all golden checks pass")
    return 0 if not failures else 1


COMMANDS = {
    "bn": cmd_bn,
    "balpha": cmd_balpha,
    "factor": cmd_factor,
    "zetabar": cmd_zetabar,
    "criterion": cmd_criterion,
    "survey": cmd_survey,
    "search": cmd_search,
    "verify-paper": cmd_verify_paper,
}


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    json_mode = getattr(args, "json", False)
    try:
        cfg = make_config(args)
        return COMMANDS[args.command](cfg)
    except BGZetaError as exc:
        code = 2
        if isinstance(exc, CapacityError):
            code = 3
        elif isinstance(exc, ContractViolationError):
            code = 4
        if json_mode:
            print(json.dumps({"error": {"type": type(exc).__name__,
                                        "message": str(exc), "exit_code": code}}))
        else:
            print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
