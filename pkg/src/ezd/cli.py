"""``ezd`` command line.

Exit codes: 0 success, 1 mathematical refusal or failed computation (the
pipeline stage is named), 2 bad input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager
from pathlib import Path

import tomli

from .brauer_thrall import (
    _module_size,
    generate_family,
    find_witnesses,
    main_theorem_report,
    build_t_matrix,
    s_invariant,
    residue_pair_ring,
)
from .errors import EzdError, InputError, NotExactPair, ParseError, Refusal
from .homalg import cokernel_module, minimal_free_resolution
from .homalg.endo import DEFAULT_BUDGET
from .ring import (
    ASSUMED,
    GRegularityCertificate,
    g_regularity_certificate,
    is_exact_zerodivisor_pair,
    make_quotient_ring,
)

EXIT_OK, EXIT_REFUSED, EXIT_INPUT = 0, 1, 2


class StageError(Exception):
    def __init__(self, stage, exc):
        super().__init__(f"{stage}: {exc}")
        self.stage = stage
        self.exc = exc


@contextmanager
def stage(name):
    try:
        yield
    except InputError:
        raise
    except EzdError as exc:
        raise StageError(name, exc) from exc


# --------------------------------------------------------------------------
# ring specs


def _locate(text, needle, offset):
    """(line, column), 1-based, of `needle`'s character `offset` inside `text`."""
    idx = text.find(needle)
    if idx < 0:
        return None
    idx += offset
    line = text.count("\n", 0, idx) + 1
    col = idx - (text.rfind("\n", 0, idx) + 1) + 1
    return line, col


def ring_from_mapping(spec: dict, source_text: str = "", source: str = "<spec>"):
    for key in ("field", "vars"):
        if key not in spec:
            raise InputError(f"{source}: missing key {key!r}")
    field = spec["field"]
    if isinstance(field, str) and field.lower() in ("fp", "gf(p)"):
        if "p" not in spec:
            raise InputError(f"{source}: field {field!r} needs a prime 'p'")
        field = int(spec["p"])
    elif isinstance(field, str) and field.isdigit():
        field = int(field)
    vars_ = spec["vars"]
    if isinstance(vars_, str):
        vars_ = [v.strip() for v in vars_.split(",") if v.strip()]
    relations = spec.get("relations", [])
    if isinstance(relations, str):
        relations = [relations]
    order = spec.get("order", "grevlex")
    try:
        R = make_quotient_ring(vars_, field, [], order)
    except (ValueError, KeyError) as exc:
        raise InputError(f"{source}: {exc}") from None
    polys = []
    for i, rel in enumerate(relations):
        try:
            polys.append(R.base(rel))
        except ParseError as exc:
            where = _locate(source_text, rel, exc.position or 0) if source_text else None
            loc = f"line {where[0]}, column {where[1]}" if where else f"relations[{i}]"
            msg = str(exc).split(": ", 1)[-1]
            raise ParseError(f"{source}: {loc}: {msg} in relation {rel!r}") from None
    try:
        return make_quotient_ring(vars_, field, polys, order)
    except ValueError as exc:
        raise InputError(f"{source}: {exc}") from None


def load_ring(path):
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"cannot read ring spec {path}: {exc.strerror}") from None
    try:
        data = tomli.loads(text)
    except tomli.TOMLDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
    return ring_from_mapping(data, text, str(path))


def ring_from_args(args):
    if args.ring:
        return load_ring(args.ring)
    if args.field and args.vars:
        spec = {"field": args.field, "vars": args.vars,
                "relations": [r for r in (args.relations or "").split(";") if r.strip()]}
        if args.order:
            spec["order"] = args.order
        return ring_from_mapping(spec, source="flags")
    raise InputError("give --ring FILE or --field/--vars/--relations")


def _element(R, text, what):
    try:
        return R.element(text)
    except ParseError as exc:
        raise ParseError(f"{what}: {exc}") from None


def _list(R, text, sep, what):
    if text is None:
        return None
    items = [t.strip() for t in text.split(sep)]
    if any(not t for t in items):
        raise InputError(f"{what}: empty entry in {text!r}")
    return [_element(R, t, what) for t in items]


# --------------------------------------------------------------------------
# output


def _emit(payload, fmt, text_lines, csv_rows, out):
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(csv_rows)
        out.write(buf.getvalue())
    else:
        out.write("\n".join(text_lines) + "\n")


def _greg(R, x, note):
    Rx = R.quotient([x])
    cert = g_regularity_certificate(Rx)
    if not cert.certified and note:
        return GRegularityCertificate(ASSUMED, {"note": note})
    return cert


def _family_rows(family):
    rows = [["r", "fitting_generators", "multiplicity_or_length", "ses_verified",
             "verdict", "method", "resolution_period"]]
    for m in family:
        if "refused" in m:
            rows.append([m["r"], "", "", "", "Refused", m["refused"], ""])
            continue
        rows.append([m["r"], ";".join(m["fitting_generators"]), m["multiplicity_or_length"],
                     m["ses_verified"], m["indecomposable"]["verdict"],
                     m["indecomposable"]["method"], m["resolution_period"]])
    return rows


def _family_text(family):
    lines = []
    for m in family:
        if "refused" in m:
            lines.append(f"  r={m['r']}: refused ({m['refused']})")
            continue
        ind = m["indecomposable"]
        lines.append(f"  r={m['r']}: Fitt = ({', '.join(m['fitting_generators'])}); "
                     f"size {m['multiplicity_or_length']}; SES {'ok' if m['ses_verified'] else 'FAILED'}; "
                     f"{ind['verdict']} [{ind['method']}]; period {m['resolution_period']}")
        if ind.get("note"):
            lines.append(f"      note: {ind['note']}")
    return lines


def _header_lines(payload):
    ring = payload["ring"]
    lines = [f"ring: {ring['field']}[{','.join(ring['vars'])}]/({', '.join(ring['relations'])})",
             f"pair: x = {payload['pair']['x']}, y = {payload['pair']['y']} (verified)"]
    if "greg" in payload:
        lines.append(f"G-regularity of R/(x): {payload['greg']['verdict']}")
        if payload["greg"]["verdict"] == ASSUMED:
            lines.append(f"  ASSUMED: {payload['greg']['evidence'].get('note', '')}")
    hyp = payload.get("hypothesis_checks")
    if hyp and hyp.get("failures"):
        lines.append("!" * 72)
        for f in hyp["failures"]:
            lines.append(f"!! HYPOTHESIS FAILURE: {f}")
        lines.append("!" * 72)
    if "s_invariant" in payload:
        lines.append(f"s(x,y): {payload['s_invariant']['verdict']}")
    if "s_mult" in payload:
        lines.append(f"size of R/(x): {payload['s_mult']}, of R/(y): {payload['t_mult']}")
    return lines


# --------------------------------------------------------------------------
# commands


def _pair(R, args):
    x = _element(R, args.x, "--x")
    y = _element(R, args.y, "--y")
    return x, y


def cmd_check_ezd(args, out):
    R = ring_from_args(args)
    x, y = _pair(R, args)
    try:
        pair = is_exact_zerodivisor_pair(R, x, y)
    except NotExactPair as exc:
        payload = {"ring": R.describe(), "pair": {"x": str(x), "y": str(y), "verified": False},
                   "failed": exc.failed, "reason": str(exc)}
        _emit(payload, args.format,
              [f"NOT an exact zerodivisor pair: {exc.failed} fails", f"  {exc}"],
              [["x", "y", "verified", "failed"], [str(x), str(y), False, exc.failed]], out)
        return EXIT_REFUSED
    checks = {k: {"equality": v["equality"], "holds": v["holds"]} for k, v in pair.checks.items()}
    payload = {"ring": R.describe(), "pair": pair.summary(), "checks": checks}
    text = [f"exact zerodivisor pair: x = {pair.x}, y = {pair.y}"]
    text += [f"  {v['equality']}: verified" for v in checks.values()]
    _emit(payload, args.format, text,
          [["x", "y", "verified"], [str(pair.x), str(pair.y), True]], out)
    return EXIT_OK


def _verified_pair(R, args):
    x, y = _pair(R, args)
    with stage("verify-pair"):
        return is_exact_zerodivisor_pair(R, x, y)


def cmd_family(args, out):
    R = ring_from_args(args)
    pair = _verified_pair(R, args)
    n = args.n if args.n is not None else 1
    with stage("g-regularity"):
        greg = _greg(R, pair.x, args.assume_g_regular)
    witnesses = _list(R, args.witnesses, ";", "--witnesses")
    with stage("witnesses"):
        if witnesses is None:
            witnesses = find_witnesses(pair, n + 1)
    r_values = _list(R, args.r or "0", ",", "--r")
    with stage("s-invariant"):
        sinv = s_invariant(pair)
        dim_bar = residue_pair_ring(pair).dim
        s_mult, _ = _module_size(cokernel_module(R, [[pair.x]]), R, args.trunc)
        t_mult, _ = _module_size(cokernel_module(R, [[pair.y]]), R, args.trunc)
    with stage("family"):
        fam = generate_family(pair, n, witnesses, r_values, args.trunc, greg,
                              steps=args.steps, budget=args.budget)
    failures = [] if dim_bar >= 2 else [f"dim R/(x,y) = {dim_bar} < 2"]
    if not greg.certified and greg.verdict != ASSUMED:
        failures.append(f"G-regularity of R/(x) is {greg.verdict}")
    members = [m.to_dict() for m in fam.members]
    payload = {
        "ring": R.describe(),
        "pair": pair.summary(),
        "greg": greg.to_dict(),
        "s_invariant": sinv.to_dict(),
        "hypothesis_checks": {"dim_ok": dim_bar >= 2, "dim_residue_ring": dim_bar,
                              "g_regular": greg.verdict, "failures": failures,
                              "warning": bool(failures)},
        "s_mult": s_mult,
        "t_mult": t_mult,
        "family": members,
        "separation": [{"p": p, "q": q, "verdict": v, "distinct_residues": d}
                       for p, q, v, d in fam.separation],
    }
    text = _header_lines(payload)
    text.append(f"family: n = {n}, witnesses = {', '.join(str(w) for w in witnesses)}")
    text += _family_text(members)
    text.append("pairwise comparison:")
    text += [f"  M_{p} vs M_{q}: {v}" for p, q, v, _ in fam.separation]
    _emit(payload, args.format, text, _family_rows(members), out)
    return EXIT_OK


def cmd_s_invariant(args, out):
    R = ring_from_args(args)
    pair = _verified_pair(R, args)
    with stage("s-invariant"):
        est = s_invariant(pair, power_window=args.powers)
    payload = {"ring": R.describe(), "pair": pair.summary(), "s_invariant": est.to_dict()}
    text = [f"{'ideal':<10} {'j':>3} {'nu':>5}"]
    text += [f"{d:<10} {j:>3} {v:>5}" for d, j, v in est.nu_values]
    text.append(f"verdict: {est.label()}")
    if est.justification:
        text.append(f"  {est.justification}")
    rows = [["ideal", "power", "nu"]] + [[d, j, v] for d, j, v in est.nu_values]
    _emit(payload, args.format, text, rows, out)
    return EXIT_OK


def cmd_resolve(args, out):
    R = ring_from_args(args)
    pair = _verified_pair(R, args)
    witnesses = _list(R, args.witnesses, ";", "--witnesses")
    with stage("witnesses"):
        if witnesses is None:
            witnesses = find_witnesses(pair, args.n or 0)
    with stage("resolution"):
        T = build_t_matrix(pair, witnesses)
        window = None if R.is_artinian else args.trunc
        res = minimal_free_resolution(T.module(), args.steps, window, T.companion())
    payload = {"ring": R.describe(), "pair": pair.summary(), "matrix": T.matrix.to_lists(),
               "resolution": res.to_dict(),
               "companion_verified": res.periodicity_report.get("companion_verified")}
    text = [f"resolution of coker {T.label()}"]
    for i, d in enumerate(res.differentials, 1):
        text.append(f"d{i} = {d}")
    text.append(f"betti: {list(res.betti)}; period: {res.period}")
    rows = [["step", "matrix"]] + [[i, str(d)] for i, d in enumerate(res.differentials, 1)]
    _emit(payload, args.format, text, rows, out)
    return EXIT_OK


def cmd_report(args, out):
    R = ring_from_args(args)
    pair = _verified_pair(R, args)
    with stage("g-regularity"):
        greg = _greg(R, pair.x, args.assume_g_regular)
    with stage("report"):
        payload = main_theorem_report(R, pair, greg, args.r_max, args.trunc, args.steps,
                                      budget=args.budget)
    payload["hypothesis_checks"]["warning"] = bool(payload["hypothesis_checks"]["failures"])
    text = _header_lines(payload)
    text.append("r copies of R/(x): size vs r*s + t")
    text += _family_text(payload["family"])
    _emit(payload, args.format, text, _family_rows(payload["family"]), out)
    return EXIT_OK


COMMANDS = {
    "check-ezd": cmd_check_ezd,
    "family": cmd_family,
    "s-invariant": cmd_s_invariant,
    "resolve": cmd_resolve,
    "report": cmd_report,
}


def _positive(minimum):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if v < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}")
        return v
    return parse


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help="TOML ring spec (field, vars, relations, order)")
    common.add_argument("--field", help="Q or a prime (with --vars/--relations instead of --ring)")
    common.add_argument("--vars", help="comma-separated variable names")
    common.add_argument("--relations", help="semicolon-separated relations")
    common.add_argument("--order", help="monomial order (grevlex, lex)")
    common.add_argument("--x", required=True, help="first element of the pair")
    common.add_argument("--y", required=True, help="second element of the pair")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--trunc", type=_positive(2), default=8, help="truncation degree D")
    common.add_argument("--steps", type=_positive(2), default=6, help="resolution steps N")
    common.add_argument("--budget", type=_positive(1), default=DEFAULT_BUDGET,
                        help="enumeration budget for brute-force searches")
    common.add_argument("--assume-g-regular", metavar="NOTE",
                        help="assume R/(x) is G-regular, recording NOTE")
    parser = argparse.ArgumentParser(prog="ezd", description="Totally reflexive modules from exact zerodivisors")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check-ezd", parents=[common], help="verify an exact zerodivisor pair")
    fam = sub.add_parser("family", parents=[common], help="build a family of indecomposable modules")
    fam.add_argument("--n", type=_positive(1), help="copies of R/(x) (default 1)")
    fam.add_argument("--witnesses", help="a_1;...;a_n;b (default: chosen automatically)")
    fam.add_argument("--r", help="comma-separated parameters (default 0)")
    s = sub.add_parser("s-invariant", parents=[common], help="estimate s(x,y)")
    s.add_argument("--powers", type=_positive(0), default=5, help="powers j = 1..J")
    res = sub.add_parser("resolve", parents=[common], help="resolve coker T(x,y,a)")
    res.add_argument("--n", type=_positive(0), help="number of witnesses to choose")
    res.add_argument("--witnesses", help="a_1;...;a_n")
    rep = sub.add_parser("report", parents=[common], help="multiplicities r*s + t for r = 0..r_max")
    rep.add_argument("--r-max", type=_positive(0), default=2)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return COMMANDS[args.command](args, out)
    except StageError as exc:
        err.write(f"ezd: {exc.stage} failed: {type(exc.exc).__name__}: {exc.exc}\n")
        return EXIT_REFUSED
    except Refusal as exc:
        err.write(f"ezd: refused: {exc}\n")
        return EXIT_REFUSED
    except InputError as exc:
        err.write(f"ezd: input error: {exc}\n")
        return EXIT_INPUT
    except EzdError as exc:
        err.write(f"ezd: {type(exc).__name__}: {exc}\n")
        return EXIT_REFUSED


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
