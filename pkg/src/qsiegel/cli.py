"""Command-line surface: expansion tables for every constructed form,
verification suites (bundled reference tables, polynomial relations, span
structure, dimensions), dimension tables, and a persistent expansion cache.

Record formats
--------------
CSV: a leading comment line `# form=<id> weight=<w> prec=<X>`, a header
`x,y,z,m,coeff`, then one row per nonzero coefficient in canonical order,
with `coeff` as an exact `num/den` (or plain integer) string.  JSON carries
the same fields as an object.  Cached records use the JSON form, one file per
(form, precision), written atomically; a cached record at precision X serves
any request up to X by truncation.
"""
import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from .dims import dim_cusp, dim_modular, dimension_report, _is_odd_prime
from .fourier import FourierSeries, multiply, power
from .lattice import grade, norm_m
from .ring import (GeneratorSet, _eisenstein_family, _phi_from_eisenstein,
                   build_chi5, verify_chi5_square_relations,
                   verify_polynomial_relations, verify_structure)

CACHE_ENV = "QSIEGEL_CACHE_DIR"
EISENSTEIN_IDS = ("E2", "E4", "E6", "E8", "E10")
PHI_IDS = ("phi2", "phi4", "phi6", "phi8", "phi10")
CHI5_IDS = ("chi5a", "chi5b")
DEEP_IDS = ("chi15", "delta20a", "delta20b")
FORM_IDS = EISENSTEIN_IDS + PHI_IDS + CHI5_IDS + DEEP_IDS

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")


# ---------------------------------------------------------------- records

def record_from_series(form, s):
    rows = [[eta[0], eta[1], eta[2], norm_m(eta), str(v)]
            for eta, v in s.sorted_items()]
    return {"form": form, "weight": s.weight, "prec": s.prec, "rows": rows}


def series_from_record(rec):
    coeffs = {(x, y, z): Fraction(c) for x, y, z, _m, c in rec["rows"]}
    return FourierSeries(rec["weight"], rec["prec"], coeffs)


def emit_json(rec):
    return json.dumps(rec)


def parse_json(text):
    rec = json.loads(text)
    rec["rows"] = [[x, y, z, m, c] for x, y, z, m, c in rec["rows"]]
    return rec


def emit_csv(rec):
    lines = ["# form=%s weight=%d prec=%d" % (rec["form"], rec["weight"], rec["prec"]),
             "x,y,z,m,coeff"]
    for x, y, z, m, c in rec["rows"]:
        lines.append("%d,%d,%d,%d,%s" % (x, y, z, m, c))
    return "\n".join(lines) + "\n"


def parse_csv(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    meta = dict(item.split("=", 1) for item in lines[0].lstrip("# ").split())
    rows = []
    for ln in lines[2:]:
        x, y, z, m, c = ln.split(",")
        rows.append([int(x), int(y), int(z), int(m), c])
    return {"form": meta["form"], "weight": int(meta["weight"]),
            "prec": int(meta["prec"]), "rows": rows}


# ---------------------------------------------------------------- cache

def _cache_path(cache_dir, form, prec):
    return os.path.join(cache_dir, "%s.p%d.json" % (form, prec))


def cache_store(cache_dir, form, s):
    if not cache_dir:
        return
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, form, s.prec)
    if os.path.exists(path):
        return
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(emit_json(record_from_series(form, s)))
    os.replace(tmp, path)


def cache_lookup(cache_dir, form, prec):
    """Best cached series for the form at precision >= prec, truncated."""
    if not cache_dir or not os.path.isdir(cache_dir):
        return None
    best = None
    prefix = form + ".p"
    for name in os.listdir(cache_dir):
        if name.startswith(prefix) and name.endswith(".json"):
            try:
                p = int(name[len(prefix):-len(".json")])
            except ValueError:
                continue
            if p >= prec and (best is None or p < best):
                best = p
    if best is None:
        return None
    with open(_cache_path(cache_dir, form, best)) as fh:
        return series_from_record(parse_json(fh.read())).truncate(prec)


def _compute_forms(form, prec):
    """Compute a batch of series containing `form` at precision prec; batching
    amortizes the construction over everything produced along the way."""
    if form in EISENSTEIN_IDS or form in PHI_IDS:
        E = _eisenstein_family(prec)
        phis = _phi_from_eisenstein(E)
        out = {name: E[int(name[1:])] for name in EISENSTEIN_IDS}
        out.update(zip(PHI_IDS, phis))
        return out
    if form in CHI5_IDS:
        chi5a, chi5b = build_chi5(prec)
        return {"chi5a": chi5a, "chi5b": chi5b}
    return GeneratorSet.build(prec).as_dict()


def get_series(form, prec, cache_dir):
    s = cache_lookup(cache_dir, form, prec)
    if s is not None:
        return s
    computed = _compute_forms(form, prec)
    for name, series in computed.items():
        cache_store(cache_dir, name, series)
    return computed[form]


def _gens_from_cache(prec, cache_dir):
    members = {}
    for form in FORM_IDS:
        s = cache_lookup(cache_dir, form, prec)
        if s is None:
            return None
        members[form] = s
    gens = GeneratorSet.__new__(GeneratorSet)
    gens.prec = prec
    for attr, form in (("e2", "E2"), ("e4", "E4"), ("e6", "E6"), ("e8", "E8"),
                       ("e10", "E10")):
        setattr(gens, attr, members[form])
    for form in PHI_IDS + CHI5_IDS + DEEP_IDS:
        setattr(gens, form, members[form])
    gens.chi15_companion = None  # not reconstructible from records
    gens._pow_cache = {}
    return gens


def _get_gens(prec, cache_dir):
    gens = _gens_from_cache(prec, cache_dir)
    if gens is not None:
        return gens
    gens = GeneratorSet.build(prec)
    for name, s in gens.as_dict().items():
        cache_store(cache_dir, name, s)
    return gens


# ---------------------------------------------------------------- expand

def cmd_expand(args):
    if args.form not in FORM_IDS:
        print("unknown form %r; known: %s" % (args.form, " ".join(FORM_IDS)),
              file=sys.stderr)
        return 2
    if args.prec < 4:
        print("prec must be >= 4", file=sys.stderr)
        return 2
    s = get_series(args.form, args.prec, args.cache_dir)
    rec = record_from_series(args.form, s)
    if not rec["rows"]:
        print("%s has no rows at prec %d; increase --prec" % (args.form, args.prec),
              file=sys.stderr)
        return 2
    out = emit_json(rec) if args.format == "json" else emit_csv(rec)
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


# ---------------------------------------------------------------- verify

def _monomial_from_descriptor(desc, forms):
    """Expand a descriptor like 'phi2^2*phi4' over named base series."""
    parts = desc.split("*")
    result = None
    for part in parts:
        name, _, exp = part.partition("^")
        s = power(forms[name], int(exp)) if exp else forms[name]
        result = s if result is None else multiply(result, s)
    return result


def _load_fixture_tables():
    tables = []
    for name in sorted(os.listdir(FIXTURE_DIR)):
        path = os.path.join(FIXTURE_DIR, name)
        if name.endswith(".csv"):
            with open(path) as fh:
                rec = parse_csv(fh.read())
            tables.append(("csv", name, rec))
        elif name.endswith(".json"):
            with open(path) as fh:
                tables.append(("json", name, json.load(fh)))
    return tables


def verify_tables(prec, cache_dir):
    """Compare bundled reference tables with freshly computed coefficients on
    every tabulated index of grade <= prec (explicit zeros included)."""
    failures = []
    checked = 0
    base = {form: get_series(form, prec, cache_dir)
            for form in ("E2", "E4", "E6", "chi5a", "chi5b", "chi15")}
    phis = {form: get_series(form, prec, cache_dir) for form in PHI_IDS}
    for kind, name, table in _load_fixture_tables():
        if kind == "csv":
            s = base[table["form"]]
            for x, y, z, _m, c in table["rows"]:
                if x > prec:
                    continue
                checked += 1
                got = s.coeff((x, y, z))
                if got != Fraction(c):
                    failures.append((name, (x, y, z), str(got), c))
        else:
            cols = [_monomial_from_descriptor(d, phis) for d in table["columns"]]
            for row in table["rows"]:
                eta = tuple(row["eta"])
                if grade(eta) > prec:
                    continue
                for desc, col, want in zip(table["columns"], cols, row["values"]):
                    checked += 1
                    got = col.coeff(eta)
                    if got != Fraction(want):
                        failures.append((name + ":" + desc, eta, str(got), want))
    return checked, failures


def cmd_verify(args):
    prec = args.prec
    ok = True
    if args.suite == "tables":
        checked, failures = verify_tables(prec, args.cache_dir)
        print("tables: %d tabulated values checked, %d mismatches"
              % (checked, len(failures)))
        for name, eta, got, want in failures:
            print("  MISMATCH %s at %r: computed %s, table %s" % (name, eta, got, want))
        ok = not failures
    elif args.suite == "relations":
        gens = _get_gens(prec, args.cache_dir)
        reports = verify_chi5_square_relations(gens) + verify_polynomial_relations(gens)
        for rep in reports:
            print("%s: %s" % (rep.name, "ok" if rep.ok else "FAIL"))
            for eta, v in rep.mismatches[:5]:
                print("  residual %s at %r" % (v, eta))
            ok = ok and rep.ok
    elif args.suite == "structure":
        gens = _get_gens(prec, args.cache_dir)
        report = verify_structure(args.kmax, gens)
        for row in report.rows:
            print("weight %2d: rank %d expected %d %s"
                  % (row.weight, row.rank, row.expected, "ok" if row.ok else "FAIL"))
        for name, (got, want) in sorted(report.augmentations.items()):
            print("%s: rank %d expected %d %s"
                  % (name, got, want, "ok" if got == want else "FAIL"))
        ok = report.ok
    elif args.suite == "dims":
        report = dimension_report(100)
        bad = [row for row in report.rows if not row[4]]
        print("dims: %d weights compared, %d mismatches" % (len(report.rows), len(bad)))
        for k, _ds, dm, gf, _m in bad:
            print("  MISMATCH k=%d: dim %d, generating function %d" % (k, dm, gf))
        ok = report.ok
    print("verify %s: %s" % (args.suite, "PASS" if ok else "FAIL"))
    return 0 if ok else 1


# ---------------------------------------------------------------- dims

def cmd_dims(args):
    p, k_from, k_to = args.p, args.k_from, args.k_to
    if not _is_odd_prime(p):
        print("p must be an odd prime, got %r" % p, file=sys.stderr)
        return 2
    if k_from > k_to:
        print("empty weight range", file=sys.stderr)
        return 2
    if p != 3 and k_from < 5:
        print("for p != 3 the formula needs --from >= 5", file=sys.stderr)
        return 2
    rows = []
    for k in range(k_from, k_to + 1):
        if p == 3:
            dm = dim_modular(k)
            ds = dm - (1 if k % 2 == 0 else 0) if k <= 4 else dim_cusp(k, 3)
            rows.append([k, ds, dm])
        else:
            rows.append([k, dim_cusp(k, p)])
    if args.format == "json":
        print(json.dumps({"p": p, "columns": ["k", "dim_cusp", "dim_modular"][:len(rows[0])],
                          "rows": rows}))
    else:
        print("k,dim_cusp,dim_modular" if p == 3 else "k,dim_cusp")
        for row in rows:
            print(",".join(str(v) for v in row))
    return 0


# ---------------------------------------------------------------- main

def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="qsiegel",
        description="Exact Fourier expansions and verification for the "
                    "degree-two graded ring on the discriminant-6 group.")
    parser.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV),
                        help="directory for cached expansions (default: $%s)" % CACHE_ENV)
    sub = parser.add_subparsers(dest="command", required=True)

    p_exp = sub.add_parser("expand", help="print the Fourier expansion of a form")
    p_exp.add_argument("--form", required=True)
    p_exp.add_argument("--prec", type=int, required=True)
    p_exp.add_argument("--format", choices=("json", "csv"), default="csv")

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("--suite", required=True,
                       choices=("tables", "relations", "structure", "dims"))
    p_ver.add_argument("--prec", type=int, default=12)
    p_ver.add_argument("--kmax", type=int, default=20)

    p_dim = sub.add_parser("dims", help="tabulate dimensions")
    p_dim.add_argument("--p", type=int, required=True)
    p_dim.add_argument("--from", dest="k_from", type=int, required=True)
    p_dim.add_argument("--to", dest="k_to", type=int, required=True)
    p_dim.add_argument("--format", choices=("json", "csv"), default="csv")

    args = parser.parse_args(argv)
    try:
        if args.command == "expand":
            return cmd_expand(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_dims(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
