"""Command-line interface: ``homtrias <command> ...`` or ``python3 -m homtrias``.

Exit codes: 0 success, 1 a check or search came back negative, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebra, axioms, catalog, constructions, isomorphism, subspaces
from .algebra import AlgebraFormatError, HomTrialgebra
from .linalg import format_scalar, parse_scalar


class UsageError(Exception):
    pass


def parse_params(text: str | None) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise UsageError(f"--params expects name=value pairs, got {item!r}")
        try:
            out[name.strip()] = parse_scalar(value.strip())
        except ValueError as exc:
            raise UsageError(f"--params {name.strip()}: {exc}") from None
    return out


def load_source(src: str | None, entry: str | None, params: str | None, err) -> HomTrialgebra:
    """Resolve a file path, ``--entry ID`` or a bare catalog id to an algebra."""
    if entry is None and src is None:
        raise UsageError("give an algebra file or --entry ID")
    values = parse_params(params)
    if entry is None and Path(src).exists():
        if values:
            raise UsageError("--params only applies to catalog entries")
        return algebra.load(src)
    eid = catalog.normalize_id(entry if entry is not None else src)
    if eid not in catalog.ENTRIES:
        if entry is None:
            raise UsageError(f"{src}: no such file or catalog entry")
        raise UsageError(f"unknown catalog entry {entry!r}")
    item = catalog.get(eid)
    missing = [p for p in item.params if p not in values]
    if missing:
        print(f"warning: {eid}: no value for {', '.join(missing)}; using default 1", file=err)
    try:
        return item.instantiate(values)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def _emit(out, args, text: str, doc) -> None:
    if args.format == "json":
        out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(text + "\n")


# --- commands -------------------------------------------------------------------------------

def cmd_check(args, out, err) -> int:
    A = load_source(args.src, args.entry, args.params, err)
    reports = axioms.check_triassociativity(A) + axioms.check_multiplicative(A)
    ok = all(r.passed for r in reports)
    text = "\n".join([f"# {A.label}"] + [r.render() for r in reports])
    _emit(out, args, text, {"label": A.label, "passed": ok, "reports": [r.to_json() for r in reports]})
    return 0 if ok else 1


def _space_doc(A, space, letter):
    return {"label": A.label, **space.to_json(letter)}


def cmd_derivations(args, out, err) -> int:
    A = load_source(args.src, args.entry, args.params, err)
    space = subspaces.derivation_space(A, args.convention)
    _emit(out, args, f"# {A.label}\n{space.render('d')}", _space_doc(A, space, "d"))
    return 0


def cmd_inner(args, out, err) -> int:
    A = load_source(args.src, args.entry, args.params, err)
    system = subspaces.derivation_space(A, subspaces.MINUS)
    system = subspaces.SubspaceBasis(system.shape, system.basis, system.free, "Inner")
    ad = subspaces.inner_span(A)
    ad = subspaces.SubspaceBasis(ad.shape, ad.basis, ad.free, "span of ad_z")
    text = f"# {A.label}\n{system.render('I')}\n{ad.render('I')}"
    _emit(out, args, text, {"label": A.label, "system": system.to_json("I"), "ad_span": ad.to_json("I")})
    return 0


def cmd_centroid(args, out, err) -> int:
    A = load_source(args.src, args.entry, args.params, err)
    space, verdicts = subspaces.centroid_space(A)
    quad = [{"element": v.element + 1, "holds": v.holds} for v in verdicts]
    text = f"# {A.label}\n{space.render('c')}\nquadratic condition holds for {sum(v.holds for v in verdicts)}" \
           f" of {len(verdicts)} basis elements"
    _emit(out, args, text, {**_space_doc(A, space, "c"), "quadratic": quad})
    return 0


def cmd_central(args, out, err) -> int:
    A = load_source(args.src, args.entry, args.params, err)
    space = subspaces.central_derivations(A, args.convention)
    _emit(out, args, f"# {A.label}\n{space.render('d')}", _space_doc(A, space, "d"))
    return 0


def cmd_center(args, out, err) -> int:
    A = load_source(args.src, args.entry, args.params, err)
    space = subspaces.center(A, include_middle=args.include_middle)
    _emit(out, args, f"# {A.label}\n{space.render('z')}", _space_doc(A, space, "z"))
    return 0


def cmd_construct(args, out, err) -> int:
    A = load_source(args.src, args.entry, args.params, err)
    result = constructions.CONSTRUCTIONS[args.name](A)
    B = constructions.as_algebra(result, A, args.name)
    reports = constructions.reports_of(result)
    algebra.save(B, args.output)
    ok = all(r.passed for r in reports)
    text = "\n".join([f"# {B.label} -> {args.output}"] + [r.render() for r in reports])
    _emit(out, args, text, {"label": B.label, "output": str(args.output), "passed": ok,
                            "reports": [r.to_json() for r in reports]})
    return 0 if ok else 1


def cmd_fingerprint(args, out, err) -> int:
    A = load_source(args.src, args.entry, args.params, err)
    fp = isomorphism.fingerprint(A).to_json()
    text = "\n".join([f"# {A.label}"] + [f"{k}: {' '.join(v) if isinstance(v, list) else v}" for k, v in fp.items()])
    _emit(out, args, text, {"label": A.label, **fp})
    return 0


def cmd_iso(args, out, err) -> int:
    A = load_source(args.a, None, args.params, err)
    B = load_source(args.b, None, args.params, err)
    if A.dim != B.dim:
        raise UsageError(f"dimensions differ: {A.dim} vs {B.dim}")
    try:
        FA, FB = isomorphism.reduce_mod_p(A, args.prime), isomorphism.reduce_mod_p(B, args.prime)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = isomorphism.isomorphic_over_fp(FA, FB)
    text = f"# {A.label} vs {B.label} over F_{args.prime}\n{res.render()}\n{isomorphism.EVIDENCE_NOTE}"
    _emit(out, args, text, {"a": A.label, "b": B.label, **res.to_json(), "note": isomorphism.EVIDENCE_NOTE})
    return 0 if res.isomorphic else 1


def cmd_catalog(args, out, err) -> int:
    if args.action == "list":
        ids = catalog.list_entries(args.dim)
        doc = [{"id": i, "dim": catalog.get(i).dim, "params": list(catalog.get(i).params)} for i in ids]
        text = "\n".join(f"{d['id']:<7} dim {d['dim']}" + (f"  params {','.join(d['params'])}" if d["params"] else "")
                         for d in doc)
        _emit(out, args, text, doc)
        return 0
    if args.action == "show":
        if not args.id:
            raise UsageError("catalog show needs an entry id")
        A = load_source(None, args.id, args.params, err)
        entry = catalog.get(args.id)
        text = "\n".join([f"# {A.label}"] + [f"  {line}" for line in entry.resolved_lines()]
                         + [f"  note: line {r['line']} printed {r['printed']!r}, used {r['used']!r}"
                            for r in entry.manifest()["resolutions"]])
        _emit(out, args, text, {"entry": entry.manifest(), "algebra": algebra.to_json(A)})
        return 0
    if args.action == "verify":
        report = catalog.verify_catalog()
        if args.output:
            Path(args.output).write_text(json.dumps(report.to_json(), indent=2, ensure_ascii=False) + "\n")
        _emit(out, args, report.render(), report.to_json())
        return 0 if not report.discrepancies else 1
    if args.action == "export":
        written = catalog.export(args.dir)
        _emit(out, args, "\n".join(str(p) for p in written), [str(p) for p in written])
        return 0
    raise UsageError(f"unknown catalog action {args.action!r}")  # pragma: no cover


# --- parser ---------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--params", help="parameter values for catalog entries, e.g. a=2,b=1/2")

    source = argparse.ArgumentParser(add_help=False, parents=[common])
    source.add_argument("src", nargs="?", help="algebra file or catalog id")
    source.add_argument("--entry", help="catalog entry id, e.g. TH2.4")

    ap = argparse.ArgumentParser(prog="homtrias", description="Hom-associative trialgebra toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[source], help="axiom and multiplicativity reports")
    p.set_defaults(fn=cmd_check)
    p = sub.add_parser("derivations", parents=[source], help="α-derivations")
    p.add_argument("--convention", choices=("plus", "minus"), default="minus")
    p.set_defaults(fn=cmd_derivations)
    p = sub.add_parser("inner", parents=[source], help="inner-derivation system and span of ad_z")
    p.set_defaults(fn=cmd_inner)
    p = sub.add_parser("centroid", parents=[source], help="α-centroid")
    p.set_defaults(fn=cmd_centroid)
    p = sub.add_parser("central", parents=[source], help="central α-derivations")
    p.add_argument("--convention", choices=("plus", "minus"), default=None,
                   help="also impose the derivation rule with this sign")
    p.set_defaults(fn=cmd_central)
    p = sub.add_parser("center", parents=[source], help="center Z(A)")
    p.add_argument("--include-middle", action="store_true", help="also annihilate under ⊥")
    p.set_defaults(fn=cmd_center)
    p = sub.add_parser("construct", parents=[common], help="derived structures")
    p.add_argument("name", choices=sorted(constructions.CONSTRUCTIONS))
    p.add_argument("src", nargs="?")
    p.add_argument("--entry")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=cmd_construct)
    p = sub.add_parser("fingerprint", parents=[source], help="isomorphism invariants over Q")
    p.set_defaults(fn=cmd_fingerprint)
    p = sub.add_parser("iso", parents=[common], help="exhaustive isomorphism search over F_p")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--prime", type=int, choices=isomorphism.PRIMES, default=3)
    p.set_defaults(fn=cmd_iso)
    p = sub.add_parser("catalog", parents=[common], help="the classification lists")
    p.add_argument("action", choices=("list", "show", "verify", "export"))
    p.add_argument("id", nargs="?")
    p.add_argument("--dim", type=int, choices=(2, 3))
    p.add_argument("--dir", help="export directory (default: the packaged data directory)")
    p.add_argument("-o", "--output", help="verify: also write the JSON report here")
    p.set_defaults(fn=cmd_catalog)
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args, out, err)
    except (UsageError, AlgebraFormatError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 2


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
