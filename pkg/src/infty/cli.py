"""Command line front end: infty check|cohomology|hodge|verify|forms.

Specs are JSON documents (schema "infty-spec/1"):

    {"schema": "infty-spec/1", "name": "Q[x]/(x^2)", "kind": "cinf",
     "generators": [{"name": "1", "degree": 0}, {"name": "x", "degree": 0}],
     "unit": "1",
     "operations": [{"arity": 2, "entries": [
         {"inputs": ["1", "1"], "output": "1", "coeff": "1"},
         {"inputs": ["1", "x"], "output": "x", "coeff": "1"},
         {"inputs": ["x", "1"], "output": "x", "coeff": "1"}]}],
     "caps": {"weight": 8, "degrees": [0, 6]}}

Degrees are those of V; operations are the maps m_i on V, dualized by the
engine (generator t_g of W has degree 1 - |g|).  Coefficients are exact
rationals written "p/q".
"""
import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from fractions import Fraction

from .errors import InftyError, ParseError, ValidationError
from .gradedspace import GradedBasis, LinComb
from .inftystruct import InftyStructure, check_cinfty, check_unital, convert, validate_square_zero

SCHEMA = "infty-spec/1"
DEFAULT_CAP = 8
DEFAULT_DEGREES = (0, 6)
KINDS = ("ainf", "cinf", "linf")


# specs

def _fail(path, msg):
    raise ParseError("%s: %s" % (path, msg))


def _rational(s, path):
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        _fail(path, "coefficient must be a string 'p/q' or an integer")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        _fail(path, "bad rational %r" % (s,))


def parse_spec_dict(doc):
    """Validate a spec document and return it in normal form."""
    if not isinstance(doc, dict):
        _fail("$", "spec must be a JSON object")
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        _fail("$.schema", "unsupported schema %r" % (schema,))
    kind = doc.get("kind", "ainf")
    if kind not in KINDS:
        _fail("$.kind", "kind must be one of %s" % (KINDS,))
    gens = doc.get("generators")
    if not isinstance(gens, list) or not gens:
        _fail("$.generators", "need a non-empty list")
    names, degrees = [], []
    for i, g in enumerate(gens):
        path = "$.generators[%d]" % i
        if not isinstance(g, dict) or "name" not in g:
            _fail(path, "need {name, degree}")
        d = g.get("degree", 0)
        if isinstance(d, bool) or not isinstance(d, int):
            raise ValidationError("%s.degree: degree must be an integer" % path)
        if g["name"] in names:
            raise ValidationError("%s.name: duplicate generator %r" % (path, g["name"]))
        names.append(str(g["name"]))
        degrees.append(d)
    unit = doc.get("unit")
    if unit is not None and unit not in names:
        raise ValidationError("$.unit: unknown generator %r" % (unit,))
    ops = []
    for i, op in enumerate(doc.get("operations", [])):
        path = "$.operations[%d]" % i
        if not isinstance(op, dict):
            _fail(path, "need {arity, entries}")
        arity = op.get("arity")
        if isinstance(arity, bool) or not isinstance(arity, int) or arity < 1:
            _fail(path + ".arity", "arity must be a positive integer")
        entries = []
        for k, e in enumerate(op.get("entries", [])):
            ep = "%s.entries[%d]" % (path, k)
            if not isinstance(e, dict):
                _fail(ep, "need {inputs, output, coeff}")
            ins = e.get("inputs")
            if not isinstance(ins, list) or len(ins) != arity:
                _fail(ep + ".inputs", "need a list of %d generator names" % arity)
            for nm in ins + [e.get("output")]:
                if nm not in names:
                    raise ValidationError("%s: unknown generator %r" % (ep, nm))
            c = _rational(e.get("coeff", "1"), ep + ".coeff")
            din = sum(degrees[names.index(nm)] for nm in ins)
            dout = degrees[names.index(e["output"])]
            if dout != din + 2 - arity:
                raise ValidationError("%s: degree mismatch, m_%d has degree %d but the entry "
                                      "has degree %d" % (ep, arity, 2 - arity, dout - din))
            entries.append({"inputs": [str(x) for x in ins], "output": str(e["output"]),
                            "coeff": _fmt(c)})
        ops.append({"arity": arity, "entries": entries})
    caps = dict(doc.get("caps", {}))
    cap = caps.get("weight", DEFAULT_CAP)
    dg = caps.get("degrees", list(DEFAULT_DEGREES))
    if not isinstance(cap, int) or not (isinstance(dg, list) and len(dg) == 2):
        _fail("$.caps", "need {weight: int, degrees: [lo, hi]}")
    return {"schema": SCHEMA, "name": str(doc.get("name", "")), "kind": kind,
            "generators": [{"name": n, "degree": d} for n, d in zip(names, degrees)],
            "unit": unit, "operations": ops,
            "caps": {"weight": cap, "degrees": [int(dg[0]), int(dg[1])]}}


def parse_spec(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError("%s: %s" % (path, exc.strerror))
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("%s: line %d column %d: %s" % (path, exc.lineno, exc.colno, exc.msg))
    return parse_spec_dict(doc)


def build_structure(spec):
    names = [g["name"] for g in spec["generators"]]
    basis = GradedBasis([(g["name"], g["degree"]) for g in spec["generators"]])
    mcheck = {}
    for op in spec["operations"]:
        table = mcheck.setdefault(op["arity"], {})
        for e in op["entries"]:
            key = tuple(names.index(x) for x in e["inputs"])
            out = table.setdefault(key, {})
            o = names.index(e["output"])
            out[o] = out.get(o, 0) + Fraction(e["coeff"])
    unit = names.index(spec["unit"]) if spec["unit"] is not None else None
    return InftyStructure.from_mcheck(spec["kind"], basis, mcheck, unit=unit, name=spec["name"])


def spec_hash(spec):
    blob = json.dumps(spec, sort_keys=True, separators=(",", ":")).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()


# reports

def _fmt(x):
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)
    return x


def _clean(obj):
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, Fraction):
        return _fmt(obj)
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)


class Report:
    def __init__(self, command, spec=None, caps=None):
        self.command = command
        self.spec = spec
        self.caps = caps or {}
        self.tables = {}
        self.failures = []
        self.timing = 0.0

    @property
    def passed(self):
        return not self.failures

    def table(self, name, rows):
        self.tables[name] = [_clean(r) for r in rows]

    def fail(self, **item):
        self.failures.append(_clean(item))

    def to_dict(self):
        return {"command": self.command,
                "spec_hash": spec_hash(self.spec) if self.spec else None,
                "spec": self.spec, "caps": self.caps, "passed": self.passed,
                "failures": self.failures, "tables": self.tables,
                "timing": round(self.timing, 3)}


def emit(report, fmt="json", out=None):
    if fmt == "json":
        text = json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"
    elif fmt == "csv":
        text = _to_csv(report)
    else:
        raise ValueError("format must be json or csv")
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text


def _to_csv(report):
    buf = io.StringIO()
    many = len(report.tables) > 1
    cols = []
    for rows in report.tables.values():
        for r in rows:
            for k in r:
                if k not in cols:
                    cols.append(k)
    if many:
        cols = ["table"] + cols
    w = csv.DictWriter(buf, cols, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for name, rows in report.tables.items():
        for r in rows:
            row = {k: ("" if v is None else (json.dumps(v) if isinstance(v, (list, dict)) else v))
                   for k, v in r.items()}
            if many:
                row["table"] = name
            w.writerow(row)
    return buf.getvalue()


# commands

def _window(args, spec):
    if args.degrees:
        try:
            a, b = args.degrees.split("..")
            return list(range(int(a), int(b) + 1))
        except ValueError:
            raise ValidationError("--degrees expects a..b, got %r" % args.degrees)
    lo, hi = spec["caps"]["degrees"]
    return list(range(lo, hi + 1))


def _cap(args, spec):
    return args.cap if args.cap is not None else spec["caps"]["weight"]


def _range(text, default):
    if text is None:
        return default
    if ".." in text:
        a, b = text.split("..")
        return list(range(int(a), int(b) + 1))
    return [int(text)]


def cmd_check(S, args, rep, spec):
    cap = _cap(args, spec)
    checks = [validate_square_zero(S, cap)]
    if S.kind == "cinf":
        checks.append(check_cinfty(S))
    if S.unit is not None:
        checks.append(check_unital(S))
    rows = []
    for r in checks:
        rows.append({"check": r.name, "passed": r.passed, "first_failure": r.failures[0]
                     if r.failures else None})
        for f in r.failures:
            rep.fail(check=r.name, **f)
    rep.table("checks", rows)


def _complex(S, theory, coeff, window, cap, normalised):
    from . import cycliccomplex as cc
    from . import homcomplex as hc
    if theory == "bar":
        return hc.bar_differential(S, window, cap)
    if theory == "hochschild":
        return hc.hochschild_b(S, window, cap, coeff or "dual")
    if theory == "harrison":
        return hc.harrison_window(S, window, cap, coeff or "dual")
    if theory == "ce":
        L = S if S.kind == "linf" else convert(S, "linf")
        return hc.ce_window(L, window, cap, coeff or "dual")
    if theory == "cyclic":
        if normalised:
            return cc.normalised_cyclic_window(S, window, cap)["sub"]
        return cc.cyclic_window(S, window, cap)
    if theory == "tsygan":
        return cc.tsygan_window(S, window, cap)
    if theory == "connes":
        return cc.connes_window(S, window, cap, normalised)
    raise ValidationError("unknown theory %r" % theory)


def cmd_cohomology(S, args, rep, spec):
    from .hodge import decompose_cyclic
    window, cap = _window(args, spec), _cap(args, spec)
    W = _complex(S, args.theory, args.coeff, window, cap, args.normalised)
    rep.table("cohomology", [{"degree": n, "dim": W.cohomology(n),
                              "exact": bool(W.exact.get(n))} for n in W.degrees])
    if not W.check_d2():
        rep.fail(reason="d^2 != 0 on the window")
    if args.theory == "cyclic" and not args.normalised and S.kind == "cinf" \
            and check_cinfty(S).passed:
        T = decompose_cyclic(S, window, cap, by_order=True)
        rows = [r for r in T.rows() if r["j"] == 1]
        rep.table("harrison_slice", rows)


def cmd_hodge(S, args, rep, spec):
    from .hodge import decompose_cyclic, decompose_hochschild
    window, cap = _window(args, spec), _cap(args, spec)
    th = args.theory
    if th in ("bar", "hochschild", "dual", "adjoint"):
        which = {"hochschild": "dual"}.get(th, th)
        T = decompose_hochschild(S, window, cap, which)
    elif th in ("cyclic", "tsygan"):
        T = decompose_cyclic(S, window, cap, "coinvariant" if th == "cyclic" else "tsygan")
    else:
        raise ValidationError("hodge theory must be bar, hochschild, adjoint, cyclic or tsygan")
    js = set(_range(args.j, T.js()))
    rep.table("hodge", [r for r in T.rows() if r["j"] in js])
    if not T.block_diagonal:
        rep.fail(reason="differential not block diagonal in the eigenbases")
    if not T.sums_ok():
        rep.fail(reason="summand dims do not add up to the undecomposed dims")


def _report_rows(rep, name, r):
    rows = r.info.get("rows") or [{"passed": r.passed}]
    rep.table(name, rows)
    for f in r.failures:
        rep.fail(suite=name, **f)


def cmd_verify(S, args, rep, spec):
    cap = _cap(args, spec)
    window = _window(args, spec)
    suite = args.suite
    if suite == "identities":
        from .verify import differential_identities, spectral_identities
        _report_rows(rep, "spectral", spectral_identities(S.wdeg, min(cap, args.max_weight)))
        if S.kind != "linf":
            _report_rows(rep, "differential",
                         differential_identities(S, min(cap, args.max_weight)))
    elif suite == "cartan":
        from .ncforms import GEOMETRIES, cartan_suite
        for geo in GEOMETRIES:
            _report_rows(rep, "cartan_" + geo, cartan_suite(S.wdeg, geo, 3, 3))
    elif suite == "poincare":
        from .ncforms import GEOMETRIES, poincare_report
        for geo in GEOMETRIES:
            _report_rows(rep, "poincare_" + geo, poincare_report(S.wdeg, geo, min(cap, 6)))
    elif suite == "zeta":
        from .ncforms import pj_report, zeta_report
        _report_rows(rep, "zeta", zeta_report(S.wdeg, min(cap - 2, 4)))
        _report_rows(rep, "pj", pj_report(S.wdeg, min(cap, 4)))
    elif suite == "les":
        from .cycliccomplex import periodicity_report
        from .hodge import verify_decomposed_les
        r = periodicity_report(S, window, cap)
        rep.table("periodicity", r["rows"])
        if not r["passed"]:
            rep.fail(suite="periodicity")
        for kind in ("periodicity", "harrison"):
            d = verify_decomposed_les(S, window, cap, kind)
            rows = d["rows"] if isinstance(d, dict) else d
            rep.table("decomposed_" + kind, rows)
            if not d["passed"]:
                rep.fail(suite="decomposed_" + kind)
    else:
        raise ValidationError("unknown suite %r" % suite)


def _word(text, names):
    out = []
    for tok in text.split():
        nm = tok[2:] if tok.startswith("t_") else tok
        if nm not in names:
            raise ValidationError("unknown letter %r" % tok)
        out.append(names.index(nm))
    return tuple(out)


def cmd_forms(S, args, rep, spec):
    from . import ncforms as nc
    names = S.basis.names
    degs = S.wdeg
    op = args.op
    geo = args.geometry
    show = lambda y: {" ".join("t_" + names[g] for g in w): _fmt(Fraction(c))
                      for w, c in sorted(y.items())}
    if op == "bilinear":
        omega = {}
        for part in (args.omega or "").split(";"):
            if part.strip():
                key, c = part.split(":")
                omega[tuple(int(i) for i in key.split(","))] = Fraction(c)
        B, nd = nc.bilinear_and_nondegeneracy(omega, [g["degree"] for g in spec["generators"]])
        rep.table("bilinear", [{"row": names[p], **{names[q]: B.matrix[p][q]
                                                    for q in range(len(names))}}
                               for p in range(len(names))])
        rep.table("summary", [{"rank": B.rank, "nondegenerate": nd, "symmetry": B.symmetry}])
        return
    if op in ("poincare", "pj") or (op == "zeta" and not args.word):
        r = {"poincare": lambda: nc.poincare_report(degs, geo, min(_cap(args, spec), 6)),
             "zeta": lambda: nc.zeta_report(degs, 4, (geo,)),
             "pj": lambda: nc.pj_report(degs, 4)}[op]()
        _report_rows(rep, op, r)
        return
    if not args.word:
        raise ValidationError("--word is required for --op %s" % op)
    w = _word(args.word, names)
    if op == "d0":
        x = nc.FormRep(geo, 0, _zero_payload(nc, geo, w, degs), degs)
        rep.table("d0", [{"input": args.word, "theta": show(nc.d0(x).payload)}])
    elif op == "zeta":
        x = nc.FormRep(geo, "closed2", LinComb({w: 1}), degs)
        if geo == "Com":
            x = nc.FormRep(geo, "closed2", nc.p_theta(LinComb({w: 1}), degs), degs)
        rep.table("zeta", [{"potential": args.word, "zeta": show(nc.zeta(x))}])
    elif op == "euler":
        x = nc.FormRep(geo, 1, LinComb({w: 1}), degs)
        y = nc.lie_and_contraction(nc.euler_field(degs), x, "L", 0)
        rep.table("euler", [{"input": args.word, "L_E": show(y.payload)}])
    else:
        raise ValidationError("unknown forms op %r" % op)


def _zero_payload(nc, geo, w, degs):
    from .cyclicshuffle import necklace_project
    from .gradedspace import symmetrize
    x = LinComb({w: 1})
    return symmetrize(x, degs) if geo == "Com" else necklace_project(x, degs)


COMMANDS = {"check": cmd_check, "cohomology": cmd_cohomology, "hodge": cmd_hodge,
            "verify": cmd_verify, "forms": cmd_forms}


def build_parser():
    p = argparse.ArgumentParser(prog="infty", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--spec", help="algebra spec (JSON); see the module docstring")
        sp.add_argument("--fixture", help="built-in algebra instead of a spec: "
                        + ", ".join(sorted(FIXTURES)))
        sp.add_argument("--cap", type=int, help="weight cap (default from the spec, else 8)")
        sp.add_argument("--degrees", help="degree window a..b (default 0..6)")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", help="write the report here instead of stdout")
        return sp

    common(sub.add_parser("check", help="m^2 = 0, C-infinity and unit checks"))
    c = common(sub.add_parser("cohomology", help="cohomology dims of one complex"))
    c.add_argument("--theory", required=True,
                   choices=("bar", "hochschild", "harrison", "ce", "cyclic", "tsygan", "connes"))
    c.add_argument("--coeff", choices=("dual", "adjoint", "trivial"))
    c.add_argument("--normalised", action="store_true")
    h = common(sub.add_parser("hodge", help="Hodge splitting table"))
    h.add_argument("--theory", required=True,
                   choices=("bar", "hochschild", "adjoint", "cyclic", "tsygan"))
    h.add_argument("--j", help="summands to report, j or a..b")
    v = common(sub.add_parser("verify", help="identity and exactness suites"))
    v.add_argument("--suite", required=True,
                   choices=("identities", "cartan", "les", "poincare", "zeta"))
    v.add_argument("--max-weight", type=int, default=4)
    f = common(sub.add_parser("forms", help="noncommutative forms on the free algebra of W"))
    f.add_argument("--op", required=True,
                   choices=("d0", "euler", "bilinear", "poincare", "zeta", "pj"))
    f.add_argument("--geometry", choices=("Ass", "Com", "Lie"), default="Ass")
    f.add_argument("--word", help="letters separated by spaces, e.g. 'x x'")
    f.add_argument("--omega", help="order-zero 2-form, e.g. '0,1:1;1,2:-1/2'")
    return p


def _fixture_spec(name):
    S = FIXTURES[name]()
    names = S.basis.names
    from .gradedspace import undualize
    ops = {}
    for arity, table in sorted(undualize(S.components, S.basis).items()):
        entries = []
        for key, outs in sorted(table.items()):
            for o, c in sorted(outs.items()):
                entries.append({"inputs": [names[i] for i in key], "output": names[o],
                                "coeff": _fmt(Fraction(c))})
        ops[arity] = entries
    return parse_spec_dict({
        "name": S.name, "kind": S.kind,
        "generators": [{"name": n, "degree": d} for n, d in zip(names, S.basis.degrees)],
        "unit": names[S.unit] if S.unit is not None else None,
        "operations": [{"arity": a, "entries": e} for a, e in sorted(ops.items())]})


def _fixtures():
    from . import fixtures as fx
    return {"dual-numbers": fx.dual_numbers, "x3": lambda: fx.truncated_polynomial(3),
            "field": fx.field, "nonstrict": fx.nonstrict_cinf,
            "upper-triangular": fx.upper_triangular, "magma": fx.magma}


FIXTURES = _fixtures()


def run(command, args):
    """Execute one command; returns the Report."""
    if args.spec and args.fixture:
        raise ValidationError("give either --spec or --fixture")
    if args.spec:
        spec = parse_spec(args.spec)
    elif args.fixture:
        if args.fixture not in FIXTURES:
            raise ValidationError("unknown fixture %r" % args.fixture)
        spec = _fixture_spec(args.fixture)
    else:
        raise ValidationError("--spec FILE or --fixture NAME is required")
    S = build_structure(spec)
    caps = {"weight": _cap(args, spec), "degrees": _window(args, spec)}
    rep = Report(" ".join(["infty", command] + _echo(args)), spec, caps)
    t0 = time.perf_counter()
    COMMANDS[command](S, args, rep, spec)
    rep.timing = time.perf_counter() - t0
    return rep


def _echo(args):
    out = []
    for k, v in sorted(vars(args).items()):
        if k in ("command", "out", "format") or v in (None, False):
            continue
        out.append("--%s" % k.replace("_", "-") if v is True else "--%s=%s" % (k.replace("_", "-"), v))
    return out


def _threads():
    n = os.environ.get("INFTY_THREADS")
    if n is None:
        return None
    if not n.isdigit() or int(n) < 1:
        raise ValidationError("INFTY_THREADS must be a positive integer")
    return int(n)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads()
        rep = run(args.command, args)
    except InftyError as exc:
        sys.stderr.write("infty: %s: %s\n" % (type(exc).__name__, exc))
        return 2
    emit(rep, args.format, args.out)
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
