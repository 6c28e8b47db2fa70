"""Command-line interface: queries against a chosen root system and ell,
plus batch verification suites with machine-readable reports.

Every command emits deterministic JSON on stdout (sorted keys, integers
only), or plain text with --text.  Exit codes: 0 success, 1 a verification
property failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import affine, characters, quantum, translation, verify, weyl
from .roots import (
    CartanMatrixError,
    CartanSpec,
    RootSystem,
    build,
    format_weight,
    parse_root,
    parse_weight,
    root_system,
)

# commands that rely on the validated fundamental-alcove wall convention
_REQUIRED_FLAGS = {
    "alcove": ("odd", "coprime_to_three_if_g2", "greater_than_coxeter"),
    "translate": ("odd", "coprime_to_three_if_g2", "greater_than_coxeter"),
}


class CliError(ValueError):
    pass


def _add_type_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", help="series name such as A2, or a bare letter with --rank")
    p.add_argument("--rank", type=int, help="rank, when --type is a bare letter")
    p.add_argument("--cartan", help="path to a JSON file holding a Cartan matrix")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", dest="as_json", action="store_true", default=True,
                       help="JSON output (default)")
    group.add_argument("--text", dest="as_json", action="store_false",
                       help="plain-text output")
    p.add_argument("--force", action="store_true",
                   help="run even when ell fails a required validity flag")


def _resolve_rs(args) -> RootSystem:
    if getattr(args, "cartan", None):
        with open(args.cartan, "r", encoding="utf-8") as fh:
            rows = json.load(fh)
        return build(CartanSpec.from_matrix(rows))
    if not getattr(args, "type", None):
        raise CliError("a root system is required: --type, or --cartan FILE")
    name = args.type
    if getattr(args, "rank", None) is not None:
        if len(name) != 1:
            raise CliError("--rank goes with a bare series letter, e.g. --type A --rank 3")
        name = f"{name}{args.rank}"
    return root_system(name.upper())


def _weight_map_json(ch: characters.Character) -> dict:
    return {format_weight(w): m for w, m in ch.items()}


def _check_ell_flags(command: str, rs: RootSystem, ell: int, force: bool) -> dict:
    report = rs.validate_ell(ell)
    needed = _REQUIRED_FLAGS.get(command, ())
    missing = [flag for flag in needed if not getattr(report, flag)]
    if missing and not force:
        raise CliError(
            f"ell={ell} fails required validity flags {missing} for `{command}`; "
            "pass --force to run anyway"
        )
    return report.as_dict()


# -- command handlers --------------------------------------------------------


def _cmd_info(args) -> dict:
    rs = _resolve_rs(args)
    out = {
        "command": "info",
        "type": rs.name or "custom",
        "rank": rs.n,
        "cartan": [list(row) for row in rs.cartan],
        "symmetrizers": list(rs.d),
        "positive_roots": [list(b) for b in rs.positive_roots],
        "num_positive": rs.num_positive,
        "coxeter_number": rs.h,
    }
    if rs.indecomposable:
        out["highest_root"] = list(rs.highest_root)
        out["highest_short_root"] = list(rs.highest_short_root)
    if args.ell is not None:
        out["ell_report"] = rs.validate_ell(args.ell).as_dict()
    return out


def _cmd_linkage(args) -> dict:
    rs = _resolve_rs(args)
    lam = parse_weight(args.src, rs.n)
    mu = parse_weight(args.dst, rs.n)
    ell_report = _check_ell_flags("linkage", rs, args.ell, args.force)
    return {
        "command": "linkage",
        "from": list(lam),
        "to": list(mu),
        "variant": args.variant,
        "linked": affine.linked(rs, args.ell, lam, mu, args.variant),
        "ell_report": ell_report,
    }


def _cmd_strong_linkage(args) -> dict:
    rs = _resolve_rs(args)
    mu = parse_weight(args.src, rs.n)
    lam = parse_weight(args.dst, rs.n)
    ell_report = _check_ell_flags("strong-linkage", rs, args.ell, args.force)
    chain = affine.strongly_linked(rs, args.ell, mu, lam)
    out = {
        "command": "strong-linkage",
        "from": list(mu),
        "to": list(lam),
        "strongly_linked": chain is not None,
        "ell_report": ell_report,
    }
    if chain is not None and args.chain:
        out["chain"] = [list(w) for w in chain.weights]
        out["steps"] = [{"root": list(b), "m": m} for b, m in chain.steps]
    return out


def _cmd_block(args) -> dict:
    rs = _resolve_rs(args)
    lam0 = parse_weight(args.weight, rs.n) if args.weight else (0,) * rs.n
    ell_report = _check_ell_flags("block", rs, args.ell, args.force)
    members = affine.enumerate_block(rs, args.ell, lam0, args.box)
    return {
        "command": "block",
        "box": args.box,
        "weight": list(lam0),
        "weights": [list(w) for w in members],
        "contains_zero": (0,) * rs.n in members,
        "ell_report": ell_report,
    }


def _cmd_alcove(args) -> dict:
    rs = _resolve_rs(args)
    lam = parse_weight(args.weight, rs.n)
    ell_report = _check_ell_flags("alcove", rs, args.ell, args.force)
    pos = affine.fundamental_alcove_position(rs, args.ell, lam)
    out = {
        "command": "alcove",
        "weight": list(lam),
        "position": pos.kind,
        "ell_report": ell_report,
    }
    if pos.kind == "wall":
        out["walls"] = [{"root": list(b), "m": m} for b, m in pos.walls]
    else:
        loc = affine.locate_alcove(rs, args.ell, lam)
        out["word"] = list(loc.word)
        out["rep"] = list(loc.rep)
        out["length"] = len(loc.word)
    return out


def _cmd_bwb(args) -> dict:
    rs = _resolve_rs(args)
    mu = parse_weight(args.weight, rs.n)
    analysis = weyl.bwb_analysis(rs, mu)
    if analysis.singular:
        return {"command": "bwb", "status": "singular", "weight": list(mu)}
    return {
        "command": "bwb",
        "status": "regular",
        "weight": list(mu),
        "lambda": list(analysis.lam),
        "degree": analysis.degree,
        # 1-based, matching the affine convention (s1..sn finite, s0 affine)
        "word": [i + 1 for i in analysis.word],
    }


def _cmd_char(args) -> dict:
    rs = _resolve_rs(args)
    lam = parse_weight(args.highest, rs.n)
    ch = characters.weyl_character(rs, lam)
    return {
        "command": "char",
        "highest": list(lam),
        "weights": _weight_map_json(ch),
        "dimension": ch.dim(),
    }


def _cmd_euler(args) -> dict:
    rs = _resolve_rs(args)
    mu = parse_weight(args.weight, rs.n)
    analysis = weyl.bwb_analysis(rs, mu)
    ch = characters.euler_characteristic(rs, mu)
    out = {"command": "euler", "weight": list(mu), "zero": not bool(ch)}
    if ch:
        out["sign"] = -1 if analysis.degree % 2 else 1
        out["lambda"] = list(analysis.lam)
        out["degree"] = analysis.degree
        out["weights"] = _weight_map_json(ch)
    return out


def _cmd_kostant(args) -> dict:
    rs = _resolve_rs(args)
    sigma = parse_root(args.root, rs.n)
    if args.parts is None:
        count = characters.kostant_partition(rs, sigma)
    else:
        count = characters.kostant_partition_with_parts(rs, sigma, args.parts)
    out = {"command": "kostant", "root": list(sigma), "count": count}
    if args.parts is not None:
        out["parts"] = args.parts
    return out


def _cmd_stabilize(args) -> dict:
    rs = _resolve_rs(args)
    mu = parse_weight(args.mu, rs.n)
    tau = parse_weight(args.tau, rs.n)
    cert = characters.stabilization_nu(rs, mu, tau)
    return {
        "command": "stabilize",
        "mu": list(mu),
        "tau": list(tau),
        "N": cert.N,
        "nu": list(cert.nu),
        "target": list(cert.target),
        "verma": cert.verma_mult,
        "weyl": cert.weyl_mult,
    }


def _cmd_ext_dim(args) -> dict:
    rs = _resolve_rs(args)
    zeta = parse_weight(args.zeta, rs.n)
    eta = parse_weight(args.eta, rs.n)
    dim = characters.ext_b_dimension(rs, zeta, eta, args.n, args.ell)
    return {
        "command": "ext-dim",
        "zeta": list(zeta),
        "eta": list(eta),
        "n": args.n,
        "dimension": dim,
    }


def _parse_word(text: str) -> tuple[int, ...]:
    tokens = [t for chunk in text.replace(",", " ").split() for t in [chunk.strip()] if t]
    out = []
    for tok in tokens:
        if not tok.startswith("s") or not tok[1:].isdigit():
            raise CliError(f"bad word token {tok!r}; expected s0, s1, ...")
        out.append(int(tok[1:]))
    return tuple(out)


def _cmd_translate(args) -> dict:
    rs = _resolve_rs(args)
    lam = parse_weight(args.lam, rs.n)
    mu = parse_weight(args.mu, rs.n)
    ell_report = _check_ell_flags("translate", rs, args.ell, args.force)
    datum = translation.wall_datum(rs, args.ell, lam, mu)
    w_a = affine.element_from_word(rs, _parse_word(args.word))
    analysis = translation.analyze(rs, args.ell, datum, w_a)
    return {
        "command": "translate",
        "lambda": list(lam),
        "mu": list(mu),
        "word": list(_parse_word(args.word)),
        "nu1": list(analysis.nu1),
        "to_wall": list(analysis.to_wall),
        "out_weights": [list(w) for w in analysis.out_weights],
        "case": analysis.case,
        "triangle_ok": analysis.triangle.ok,
        "ell_report": ell_report,
    }


def _cmd_quantum(args) -> dict:
    t = getattr(args, "t", None)
    if args.op == "qint":
        poly = quantum.qint(args.n, args.d)
    elif args.op == "qfact":
        poly = quantum.qfact(args.n, args.d)
    else:
        poly = quantum.qbinom(args.n, t, args.d)
    out = {"command": "quantum", "op": args.op, "n": args.n, "d": args.d}
    if t is not None:
        out["t"] = t
    if args.ell is None:
        out["coefficients"] = {str(e): c for e, c in poly.items()}
    else:
        out["ell"] = args.ell
        out["residue"] = list(quantum.specialize(poly, args.ell).coeffs)
    return out


def _parse_cases(text: str):
    # "A1:5,A2:5" -> (("A1", 5), ("A2", 5))
    out = []
    for chunk in text.split(","):
        name, _, ell = chunk.strip().partition(":")
        if not ell:
            raise CliError(f"bad case {chunk!r}; expected TYPE:ELL")
        out.append((name.upper(), int(ell)))
    return tuple(out)


def _cmd_verify(args) -> tuple[dict, int]:
    suite = args.suite
    if suite == "prop-aff":
        ells = _parse_range(args.ell_range)
        reports = [verify.verify_affine_lattices(tuple(args.types.split(",")), ells)]
    elif suite == "triangle":
        if args.cases:
            cases = _parse_cases(args.cases)
            reports = [verify.verify_triangle(cases, args.max_length)]
        else:
            cfg = verify.load_grids()["triangle"][args.grid]
            reports = [verify.verify_triangle(tuple(map(tuple, cfg["cases"])),
                                              cfg["max_length"])]
    elif suite == "bwb-grid":
        reports = [verify.verify_bwb(args.type or "A2", args.box)]
    elif suite == "quantum-integrality":
        reports = [verify.verify_quantum()]
    elif suite == "alcove-walls":
        cases = _parse_cases(args.cases) if args.cases else None
        if cases is None:
            cfg = verify.load_grids()["alcove"]
            reports = [verify.verify_alcove_geometry(
                tuple(map(tuple, cfg["wall_cases"])),
                tuple(map(tuple, cfg["word_cases"])),
                cfg["word_max_length"],
                tuple(map(tuple, cfg["monotone_cases"])),
                cfg["monotone_max_height"],
            )]
        else:
            reports = [verify.verify_alcove_geometry(
                wall_cases=cases, word_cases=(), monotone_cases=())]
    elif suite == "strong-linkage":
        cases = _parse_cases(args.cases) if args.cases else \
            tuple(map(tuple, verify.load_grids()["strong_linkage"]["cases"]))
        reports = [verify.verify_strong_linkage(cases, args.box_multiplier)]
    elif suite == "characters":
        reports = [verify.verify_characters()]
    elif suite == "stabilization":
        reports = [verify.verify_stabilization()]
    elif suite == "all":
        reports = verify.verify_all()
    else:  # pragma: no cover
        raise CliError(f"unknown verify suite {suite!r}")
    ok = all(r.ok for r in reports)
    payload = {
        "command": "verify",
        "suite": suite,
        "ok": ok,
        "reports": [r.as_dict() for r in reports],
    }
    return payload, 0 if ok else 1


def _parse_range(text: str):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise CliError(f"bad range {text!r}; expected LO..HI")
    return range(int(lo), int(hi) + 1)


# -- wiring --------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="linkage-lab",
                                  description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    def cmd(name, needs_ell=False, ell_optional=False):
        p = sub.add_parser(name)
        _add_type_args(p)
        if needs_ell:
            p.add_argument("--ell", type=int, required=True)
        elif ell_optional:
            p.add_argument("--ell", type=int, default=None)
        _add_output_args(p)
        return p

    cmd("info", ell_optional=True)

    p = cmd("linkage", needs_ell=True)
    p.add_argument("--from", dest="src", required=True, metavar="WEIGHT")
    p.add_argument("--to", dest="dst", required=True, metavar="WEIGHT")
    p.add_argument("--variant", choices=affine.VARIANTS, default="WDl")

    p = cmd("strong-linkage", needs_ell=True)
    p.add_argument("--from", dest="src", required=True, metavar="WEIGHT",
                   help="the lower weight")
    p.add_argument("--to", dest="dst", required=True, metavar="WEIGHT",
                   help="the upper weight")
    p.add_argument("--chain", action="store_true", help="print the witnessing chain")

    p = cmd("block", needs_ell=True)
    p.add_argument("--weight", default=None, metavar="WEIGHT",
                   help="block representative (default 0)")
    p.add_argument("--box", type=int, required=True)

    p = cmd("alcove", needs_ell=True)
    p.add_argument("--weight", required=True, metavar="WEIGHT")

    p = cmd("bwb")
    p.add_argument("--weight", required=True, metavar="WEIGHT")

    p = cmd("char")
    p.add_argument("--highest", required=True, metavar="WEIGHT")

    p = cmd("euler")
    p.add_argument("--weight", required=True, metavar="WEIGHT")

    p = cmd("kostant")
    p.add_argument("--root", required=True, metavar="ROOT")
    p.add_argument("--parts", type=int, default=None)

    p = cmd("stabilize")
    p.add_argument("--mu", required=True, metavar="WEIGHT")
    p.add_argument("--tau", required=True, metavar="WEIGHT")

    p = cmd("ext-dim", ell_optional=True)
    p.add_argument("--zeta", required=True, metavar="WEIGHT")
    p.add_argument("--eta", required=True, metavar="WEIGHT")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("translate")
    tsub = p.add_subparsers(dest="translate_op", required=True)
    pa = tsub.add_parser("analyze")
    _add_type_args(pa)
    pa.add_argument("--ell", type=int, required=True)
    pa.add_argument("--lambda", dest="lam", required=True, metavar="WEIGHT")
    pa.add_argument("--mu", required=True, metavar="WEIGHT")
    pa.add_argument("--word", default="", help="affine word, e.g. 's0 s1' (s0 = affine wall)")
    _add_output_args(pa)

    p = sub.add_parser("quantum")
    qsub = p.add_subparsers(dest="op", required=True)
    for op in ("qint", "qfact", "qbinom"):
        q = qsub.add_parser(op)
        q.add_argument("--n", type=int, required=True)
        if op == "qbinom":
            q.add_argument("--t", type=int, required=True)
        q.add_argument("--d", type=int, default=1)
        q.add_argument("--ell", type=int, default=None)
        _add_output_args(q)

    p = sub.add_parser("verify")
    vsub = p.add_subparsers(dest="suite", required=True)
    v = vsub.add_parser("prop-aff")
    v.add_argument("--types", default="A2,B2,C3,G2")
    v.add_argument("--ell-range", default="2..12")
    _add_output_args(v)
    v = vsub.add_parser("triangle")
    v.add_argument("--grid", default="rank2")
    v.add_argument("--cases", default=None, help="e.g. A1:5,A2:5")
    v.add_argument("--max-length", type=int, default=4)
    _add_output_args(v)
    v = vsub.add_parser("bwb-grid")
    v.add_argument("--type", default="A2")
    v.add_argument("--box", type=int, default=10)
    _add_output_args(v)
    v = vsub.add_parser("quantum-integrality")
    _add_output_args(v)
    v = vsub.add_parser("alcove-walls")
    v.add_argument("--cases", default=None, help="e.g. G2:9 (wall validation only)")
    _add_output_args(v)
    v = vsub.add_parser("strong-linkage")
    v.add_argument("--cases", default=None)
    v.add_argument("--box-multiplier", type=int, default=2)
    _add_output_args(v)
    v = vsub.add_parser("characters")
    _add_output_args(v)
    v = vsub.add_parser("stabilization")
    _add_output_args(v)
    v = vsub.add_parser("all")
    _add_output_args(v)

    return top


_HANDLERS = {
    "info": _cmd_info,
    "linkage": _cmd_linkage,
    "strong-linkage": _cmd_strong_linkage,
    "block": _cmd_block,
    "alcove": _cmd_alcove,
    "bwb": _cmd_bwb,
    "char": _cmd_char,
    "euler": _cmd_euler,
    "kostant": _cmd_kostant,
    "stabilize": _cmd_stabilize,
    "ext-dim": _cmd_ext_dim,
    "translate": _cmd_translate,
    "quantum": _cmd_quantum,
}


def _render_text(payload: dict, indent: str = "") -> str:
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_render_text(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.append(_render_text(item, indent + "  "))
                lines.append(f"{indent}  -")
        else:
            lines.append(f"{indent}{key}: {value}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            payload, code = _cmd_verify(args)
        else:
            payload = _HANDLERS[args.command](args)
            code = 0
    except (CliError, CartanMatrixError, ValueError, ArithmeticError, OSError) as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True), file=sys.stderr)
        return 2
    except translation.WeightPatternViolation as exc:
        print(json.dumps({"violation": str(exc)}, sort_keys=True), file=sys.stderr)
        return 1
    if getattr(args, "as_json", True):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(_render_text(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
