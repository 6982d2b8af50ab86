"""Command-line front end: superconf <command> [options]."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction

from . import freefield as ff
from .conformal import PoleError, conformal_levels, delta, integrality_sieve
from .fusion import (chain_report, closure, f4_classification, g3_classification, osp_pair_classification,
                     spo23_classification)
from .liealg import CapExceeded, UnsupportedAlgebra, build_root_system, tensor_decompose
from .scalar import EquationError, as_rational, format_rational
from .superalg import FAMILIES, CatalogError, ModuleLabel, catalog, spec_from_dict
from .suites import SUITES, run_suite

F = Fraction

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# which selector flags each family takes, and the constructor keyword they map to
FAMILY_PARAMS = {
    "sl": {"m": "m", "n": "n"}, "psl": {"m": "m"}, "B": {"m": "m", "n": "n"}, "D": {"m": "m", "n": "n"},
    "C": {"n": "n"}, "F4": {}, "G3": {}, "D21a": {"a": "a"}, "spo23": {}, "osp": {"m": "M", "n": "N"},
    "gl_in_sl": {"n": "n", "m": "m"}, "sl2_osp32_in_G3": {},
}


class UsageError(ValueError):
    pass


# --- JSON encoding of exact values -------------------------------------------------

def encode(x):
    """JSON-ready form: Fractions become {"num", "den"} pairs."""
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator}
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, dict):
        return {str(k): encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [encode(v) for v in x]
    raise TypeError(f"cannot encode {type(x).__name__}")


def decode(x):
    if isinstance(x, dict):
        if set(x) == {"num", "den"}:
            return F(x["num"], x["den"])
        return {k: decode(v) for k, v in x.items()}
    if isinstance(x, list):
        return [decode(v) for v in x]
    return x


def _text(x) -> str:
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (list, tuple)):
        return "(" + ",".join(_text(v) for v in x) + ")"
    return str(x)


# --- module labels --------------------------------------------------------------------

def _split_top(text: str, sep: str = ",") -> list:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise UsageError(f"unbalanced brackets in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise UsageError(f"unbalanced brackets in {text!r}")
    parts.append("".join(cur))
    return [p.strip() for p in parts]


_TERM = re.compile(r"^(\d*)w(\d+)$")


def parse_weight(text: str, rank: int) -> tuple:
    """A weight: an integer (rank one), "[a,b,...]", or a sum such as 2w1+w3."""
    text = text.replace(" ", "")
    if text.startswith("["):
        if not text.endswith("]"):
            raise UsageError(f"bad weight {text!r}")
        body = text[1:-1]
        vals = [as_rational(v) for v in body.split(",")] if body else []
        if len(vals) != rank:
            raise UsageError(f"weight {text!r} needs {rank} entries")
        return tuple(int(v) if v.denominator == 1 else v for v in vals)
    if re.fullmatch(r"-?\d+", text):
        if rank == 1:
            return (int(text),)
        if int(text) == 0:
            return (0,) * rank
        raise UsageError(f"integer weight {text!r} only for rank one")
    out = [0] * rank
    for term in text.split("+"):
        m = _TERM.match(term)
        if not m:
            raise UsageError(f"bad weight term {term!r}")
        i = int(m.group(2))
        if not 1 <= i <= rank:
            raise UsageError(f"fundamental weight w{i} out of range 1..{rank}")
        out[i - 1] += int(m.group(1) or 1)
    return tuple(out)


def _factor_rank(f) -> int:
    if f.kind == "simple":
        return f.root_system.rank
    return len(f.super_data.gram)


def parse_label(text: str, spec) -> ModuleLabel:
    text = text.strip()
    charge = F(0)
    if text.startswith("q="):
        head, sep, text = text.partition(":")
        if not sep:
            raise UsageError("charge prefix must end with ':'")
        charge = as_rational(head[2:])
    if not (text.startswith("(") and text.endswith(")")):
        raise UsageError(f"label {text!r} must be parenthesized")
    facs = spec.nonabelian
    parts = _split_top(text[1:-1])
    if parts == [""]:
        parts = []
    if len(parts) != len(facs):
        raise UsageError(f"label {text!r} needs {len(facs)} factor weights")
    return ModuleLabel(charge, tuple(parse_weight(p, _factor_rank(f)) for p, f in zip(parts, facs)))


def parse_labels(text: str, spec) -> list:
    items, depth, start = [], 0, 0
    for pos, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            items.append(text[start:pos])
            start = pos + 1
    items.append(text[start:])
    return [parse_label(t, spec) for t in items if t.strip()]


def format_label(label: ModuleLabel) -> str:
    parts = []
    for w in label.weights:
        parts.append(str(w[0]) if len(w) == 1 else "[" + ",".join(_text(x) for x in w) + "]")
    body = "(" + ",".join(parts) + ")"
    return body if label.charge == 0 else f"q={format_rational(label.charge)}:{body}"


# --- algebra selection --------------------------------------------------------------

def load_overrides(path: str | None) -> dict:
    path = path or os.environ.get("SUPERCONF_CATALOG")
    if not path:
        return {}
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read catalog override {path}: {exc}") from None
    return data.get("algebras", {})


def select_algebra(args):
    name = args.algebra
    if name is None:
        raise UsageError("--algebra is required")
    overrides = load_overrides(args.catalog)
    if name in overrides:
        return spec_from_dict(overrides[name])
    if name not in FAMILIES:
        raise UsageError(f"unknown algebra {name!r}; choose from {', '.join(FAMILIES)}")
    params = {}
    for flag, key in FAMILY_PARAMS[name].items():
        value = getattr(args, flag)
        if value is None:
            raise UsageError(f"--algebra {name} needs --{flag}")
        params[key] = as_rational(value) if flag == "a" else int(value)
    return catalog(name, **params)


def default_classification(spec, k):
    """Built-in classification data for the cases studied with fusion rules."""
    if spec.family == "spo23" and k == F(-3, 4):
        return spo23_classification()
    if spec.family == "F4" and k == 1:
        return f4_classification()
    if spec.family == "G3" and k == 1:
        return g3_classification()
    if spec.family == "D" and k == -2:
        p = dict(spec.params)
        if p.get("m") == p.get("n", 0) + 4:
            return osp_pair_classification(p["n"])
    return None


def _level(args):
    if args.k is None:
        raise UsageError("--k is required")
    return as_rational(args.k)


# --- commands: each returns (payload, rows) --------------------------------------------

def cmd_levels(args):
    spec = select_algebra(args)
    rep = conformal_levels(spec)
    rows = [{"level": k, "status": "conformal", "reason": ""} for k in rep.solutions]
    rows += [{"level": k, "status": "excluded", "reason": why} for k, why in rep.excluded]
    payload = {"algebra": spec.name, "solutions": rep.solutions,
               "excluded": [{"level": k, "reason": why} for k, why in rep.excluded],
               "equations": [e.text() for e in rep.equations]}
    return payload, rows


def cmd_delta(args):
    spec = select_algebra(args)
    k = _level(args)
    if args.label is None:
        raise UsageError("--label is required")
    lab = parse_label(args.label, spec)
    h = delta(spec, k, lab)
    return {"algebra": spec.name, "k": k, "label": format_label(lab), "delta": h}, \
        [{"label": format_label(lab), "delta": h}]


def cmd_sieve(args):
    spec = select_algebra(args)
    k = _level(args)
    if args.labels is None:
        raise UsageError("--labels is required")
    labs = sorted(parse_labels(args.labels, spec))
    res = integrality_sieve(spec, k, labs)
    rows = []
    for lab in labs:
        for kind, table in (("integral", res.integral), ("negative", res.negative),
                            ("non-integral", res.non_integral)):
            if lab in table:
                rows.append({"label": format_label(lab), "delta": table[lab], "class": kind})
    payload = {"algebra": spec.name, "k": k}
    for kind, table in (("integral", res.integral), ("negative", res.negative),
                        ("non_integral", res.non_integral)):
        payload[kind] = {format_label(lab): h for lab, h in sorted(table.items())}
    return payload, rows


def cmd_tensor(args):
    m = re.fullmatch(r"([A-G])(\d+)", args.type or "")
    if not m:
        raise UsageError("--type must look like A2, B3, G2")
    rs = build_root_system(m.group(1), int(m.group(2)))
    lam = parse_weight(args.left, rs.rank)
    mu = parse_weight(args.right, rs.rank)
    dec = tensor_decompose(rs, lam, mu, cap=args.cap)
    rows = [{"weight": list(w), "multiplicity": c} for w, c in sorted(dec.items())]
    return {"type": str(rs), "left": list(lam), "right": list(mu), "constituents": rows}, rows


def _need_labels(args, spec, attr):
    text = getattr(args, attr)
    if text is None:
        raise UsageError(f"--{attr} is required")
    return parse_labels(text, spec)


def _classification(args, spec, k):
    return None if args.no_classification else default_classification(spec, k)


def cmd_closure(args):
    spec = select_algebra(args)
    k = _level(args)
    gens = _need_labels(args, spec, "labels")
    res = closure(spec, k, _classification(args, spec, k), gens)
    rows = [{"label": format_label(lab), "delta": delta(spec, k, lab)} for lab in res.family]
    return {"algebra": spec.name, "k": k, "complete": res.complete, "family": rows}, rows


def cmd_chain(args):
    spec = select_algebra(args)
    k = _level(args)
    if args.label is None or args.generator is None:
        raise UsageError("--label and --generator are required")
    start, gen = parse_label(args.label, spec), parse_label(args.generator, spec)
    rep = chain_report(spec, k, _classification(args, spec, k), start, gen, depth=args.depth or 50)
    rows = [{"label": format_label(s.label), "delta": s.delta,
             "kept": " ".join(format_label(x) for x in s.kept),
             "rejected": " ".join(f"{format_label(r.label)}[{r.reason}]" for r in s.rejected),
             "forced_singular": s.forced_singular} for s in rep.steps]
    payload = {"algebra": spec.name, "k": k, "closed": rep.closed, "contains_vacuum": rep.contains_vacuum,
               "trap": rep.trap, "visited": [format_label(x) for x in rep.visited], "steps": rows}
    return payload, rows


def _fock_spec(args):
    if args.m is None:
        raise UsageError("--m is required")
    pairs = args.pairs if args.pairs is not None else args.n
    if pairs is None:
        raise UsageError("--pairs (or --n) is required")
    return ff.make_fock(int(args.m), int(pairs))


def cmd_fock_singular(args):
    spec = _fock_spec(args)
    alg = ff.fock_subalgebra(spec, args.subalgebra)
    p = spec.fermions // 2
    fun = ff.standard_functional(p, (spec.size - spec.fermions) // 2)
    depth = as_rational(args.depth) if args.depth is not None else F(2)
    pieces = ff.enumerate_singular(alg, fun, depth)
    rows = [{"weight": list(w), "energy": e, "multiplicity": c} for w, e, c in ff.singular_weights(pieces)]
    return {"space": spec.label, "subalgebra": args.subalgebra, "max_energy": depth, "singular": rows}, rows


def cmd_fock_dim(args):
    spec = _fock_spec(args)
    depth = as_rational(args.depth) if args.depth is not None else F(2)
    table = ff.graded_dimension(spec, depth)
    rows = [{"weight": list(w), "energy": e, "even": d[0], "odd": d[1]} for (w, e), d in table.items()]
    return {"space": spec.label, "max_energy": depth, "pieces": rows}, rows


def cmd_W(args):
    if args.n is None or args.i is None:
        raise UsageError("--n and --i are required")
    rep = ff.check_W_singular(int(args.n), int(args.i))
    row = {"n": rep.n, "i": rep.i, "nonzero": rep.nonzero, "energy": rep.energy,
           "weight": list(rep.expected_weight), "weight_ok": rep.weights == [rep.expected_weight],
           "g0_singular": rep.g0_singular, "affine_weight": rep.sugawara_weight,
           "conformal_mismatch": rep.conformal_mismatch, "ok": rep.ok}
    return row, [row]


def cmd_verify(args):
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    results = run_suite(args.suite)
    rows = [{"assertion": a.name, "status": "PASS" if a.passed else "FAIL", "detail": a.detail,
             "source": a.source} for a in results]
    payload = {"suite": args.suite, "passed": sum(a.passed for a in results),
               "failed": sum(not a.passed for a in results), "assertions": rows}
    return payload, rows


COMMANDS = {
    "levels": cmd_levels, "delta": cmd_delta, "sieve": cmd_sieve, "tensor": cmd_tensor,
    "closure": cmd_closure, "chain": cmd_chain, "fock-singular": cmd_fock_singular,
    "fock-dim": cmd_fock_dim, "W": cmd_W, "verify": cmd_verify,
}


# --- rendering ------------------------------------------------------------------------

def render(payload, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(encode(payload), indent=2, sort_keys=True)
    if not rows:
        return "(no rows)"
    cols = list(rows[0])
    cells = [[_text(r.get(c, "")) for c in cols] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        w.writerows(cells)
        return buf.getvalue().rstrip("\n")
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(wd) for c, wd in zip(cols, widths)).rstrip()]
    lines.append("  ".join("-" * wd for wd in widths))
    lines += ["  ".join(x.ljust(wd) for x, wd in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superconf", description="Conformal embeddings of Lie superalgebras")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--catalog", help="JSON catalog override (default: $SUPERCONF_CATALOG)")
    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("--algebra", help=f"one of {', '.join(FAMILIES)}")
    algebra.add_argument("--m")
    algebra.add_argument("--n")
    algebra.add_argument("--a", help="rational parameter of D(2,1;a)")
    algebra.add_argument("--k", help="level, a rational such as -3/4")
    algebra.add_argument("--no-classification", action="store_true",
                         help="do not apply built-in classification data")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("levels", parents=[common, algebra], help="conformal levels")
    p = sub.add_parser("delta", parents=[common, algebra], help="conformal weight of one label")
    p.add_argument("--label")
    p = sub.add_parser("sieve", parents=[common, algebra], help="integrality sieve over labels")
    p.add_argument("--labels")
    p = sub.add_parser("tensor", parents=[common], help="tensor product decomposition")
    p.add_argument("--type", help="root system such as B3")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--cap", type=_positive, default=200000)
    p = sub.add_parser("closure", parents=[common, algebra], help="fusion closure of generators")
    p.add_argument("--labels")
    p = sub.add_parser("chain", parents=[common, algebra], help="fusion chain from an assumed singular vector")
    p.add_argument("--label")
    p.add_argument("--generator")
    p.add_argument("--depth", type=_positive)
    for name, helptext in (("fock-singular", "singular vectors in a Fock space"),
                           ("fock-dim", "graded dimensions of a Fock space")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--pairs", type=int, help="number of boson pairs (alias of --n)")
        p.add_argument("--depth", help="maximal energy (half-integer)")
        if name == "fock-singular":
            p.add_argument("--subalgebra", choices=ff.SUBALGEBRAS, default="full")
    p = sub.add_parser("W", parents=[common], help="check the vectors W_i")
    p.add_argument("--n", type=int)
    p.add_argument("--i", type=int)
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=f"one of {', '.join(SUITES)}")
    return parser


ENGINE_ERRORS = {
    CatalogError: "catalog", PoleError: "pole", EquationError: "equation", CapExceeded: "cap",
    ff.CapExceeded: "cap", UnsupportedAlgebra: "unsupported", ZeroDivisionError: "pole",
}


def _error_code(exc) -> str:
    for cls, code in ENGINE_ERRORS.items():
        if isinstance(exc, cls):
            return code
    return "computation"


def _join_negative_values(argv: list) -> list:
    """Let rational flag values start with a minus sign: --k -3/4 becomes --k=-3/4."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) \
                and re.fullmatch(r"-\d+(/\d+)?", argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_negative_values(argv))
    try:
        payload, rows = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"superconf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as exc:
        print(f"superconf: error[{_error_code(exc)}]: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = render(payload, rows, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.command == "verify" and payload["failed"]:
        return EXIT_FAIL
    if args.command == "W" and not payload["ok"]:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
