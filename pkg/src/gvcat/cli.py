"""Command-line driver.

Exit codes: 0 when every check passes, 1 when the input is invalid, 2 when
a property that must hold on valid input fails (an engine bug).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .braided import (
    braided_report, canonical_double_twist, enumerate_double_twists, enumerate_twists,
)
from .core import MorId, StructureError, TheoremViolation, ValidationReport, validate_category
from .duality import (
    GVData, classify_dualizing, d_squared_monoidal, find_dualizing, gv_report, induced_family,
    quasi_inverse, verify_gv, yoneda_solve,
)
from .extension import monoidal_extension, roundtrip_check, verify_r_extension
from .fileformat import CategoryFile, ParseError, load, serialize
from .hecke import IdempotentArrow, extract_triple, find_idempotent_arrows, hecke_gv
from .monoidal import invertible_objects, validate_braiding, validate_monoidal, validate_monoidal_functor
from .mutation import TABLES, mutations
from .pivotal import enumerate_pivotal, enumerate_ribbon, pivotal_twist_report, ribbon_check
from .rigidity import denis_check, rigidity_report, unit_dualizing

__all__ = ["main", "run", "validate_file", "EXIT_OK", "EXIT_INVALID", "EXIT_VIOLATION",
           "REPORT_SCHEMA", "selftest_entry"]

EXIT_OK, EXIT_INVALID, EXIT_VIOLATION = 0, 1, 2
REPORT_SCHEMA = "gvcat-report/1"


class _Invalid(Exception):
    """Input rejected; carries the partial result."""

    def __init__(self, msg: str, result: dict | None = None):
        super().__init__(msg)
        self.result = result or {}


def validate_file(cf: CategoryFile) -> ValidationReport:
    """Axioms of every structure the file declares."""
    if cf.braiding is not None:
        report = validate_braiding(cf.braiding)
    elif cf.monoidal is not None:
        report = validate_monoidal(cf.monoidal)
    else:
        report = validate_category(cf.cat)
    report.subject = f"validity of {cf.name}"
    if report.ok and cf.K is not None:
        try:
            gv = cf.gv()
        except StructureError as exc:
            report.malformed(str(exc))
        else:
            report.merge(verify_gv(gv), "gv: ")
    return report


def _require_valid(cf: CategoryFile) -> None:
    rep = validate_file(cf)
    if not rep.ok:
        raise _Invalid("input does not satisfy the axioms", {"validation": rep.to_dict()})


def _gv(cf: CategoryFile, K: str | None = None) -> GVData:
    if cf.monoidal is None:
        raise StructureError("this command needs a monoidal block")
    if K is not None:
        from .duality import dualizing_from_K
        gv = dualizing_from_K(cf.monoidal, cf.cat.obj(K))
        if gv is None:
            raise StructureError(f"{K} is not a dualizing object")
        return gv
    gv = cf.gv()
    if gv is None:
        found = find_dualizing(cf.monoidal)
        if not found:
            raise StructureError("no dualizing object")
        gv = found[0]
    return gv


def _braiding(cf: CategoryFile):
    if cf.braiding is None:
        raise StructureError("this command needs a braiding")
    return cf.braiding


def _morphism(cf: CategoryFile, label: str) -> MorId:
    try:
        return cf.cat.by_label[label]
    except KeyError:
        raise StructureError(f"undefined morphism label {label!r}") from None


def _labels(cat, comps) -> dict:
    return {cat.objects[x]: cat.label(c) for x, c in enumerate(comps)}


def _r_structure(gv: GVData) -> GVData | None:
    """The GV structure with K = 1, when the unit is dualizing."""
    try:
        return unit_dualizing(gv)
    except StructureError:
        return None


def _theorem(*reports: ValidationReport) -> None:
    for r in reports:
        r.raise_for_theorem()


# --- commands; each returns a JSON-ready dict or raises -----------------------------

def cmd_validate(cf: CategoryFile, args) -> dict:
    rep = validate_file(cf)
    if not rep.ok:
        raise _Invalid("validation failed", {"validation": rep.to_dict()})
    return {"validation": rep.to_dict()}


def cmd_coherence(cf: CategoryFile, args) -> dict:
    if cf.monoidal is None:
        raise StructureError("coherence needs a monoidal block")
    out = {"monoidal": validate_monoidal(cf.monoidal).to_dict()}
    if cf.braiding is not None:
        out["braiding"] = validate_braiding(cf.braiding, check_base=False).to_dict()
    if not all(r["ok"] for r in out.values()):
        raise _Invalid("coherence failed", out)
    return out


def cmd_dualizing(cf: CategoryFile, args) -> dict:
    _require_valid(cf)
    m = cf.monoidal
    if m is None:
        raise StructureError("dualizing needs a monoidal block")
    found = find_dualizing(m)
    reports = [classify_dualizing(gv) for gv in found]
    _theorem(*reports)
    ob = cf.cat.objects
    return {"dualizing": [ob[g.K] for g in found],
            "invertible": [ob[x] for x in sorted(invertible_objects(m))],
            "r_category": any(g.K == m.unit for g in found)}


def cmd_gv_report(cf: CategoryFile, args) -> dict:
    _require_valid(cf)
    gv = _gv(cf, args.K)
    out = gv_report(gv)
    if not out["d2_monoidal_ok"]:
        raise TheoremViolation("D² with its derived structure is not a monoidal functor")
    return out


def cmd_rigidity(cf: CategoryFile, args) -> dict:
    _require_valid(cf)
    gv = _gv(cf, args.K)
    den = denis_check(gv)
    _theorem(den)
    out = {"K": {"invertible": den.info["invertible"], "rigid": den.info["rigid"]}}
    if _r_structure(gv) is not None:
        rep = rigidity_report(gv)
        _theorem(rep)
        out.update({k: rep.info[k] for k in ("rigid", "all_comparisons_iso", "dual_comparisons_iso")})
        out["objects"] = rep.info["objects"]
    else:
        out["rigid"] = None
        out["note"] = "the unit is not dualizing; only K was examined"
    return out


def cmd_twists(cf: CategoryFile, args) -> dict:
    _require_valid(cf)
    b = _braiding(cf)
    gv = _gv(cf, args.K)
    rep = braided_report(gv, b)
    _theorem(rep)
    cat = cf.cat
    twists = enumerate_twists(b)
    C, _ = canonical_double_twist(gv, quasi_inverse(gv), b)
    return {"counts": {"twists": len(twists), "double_twists": len(enumerate_double_twists(b))},
            "twists": [_labels(cat, t.components) for t in twists],
            "double_twist_C": _labels(cat, C.components),
            "symmetric": all(cat.is_identity(b.double(x, y))
                             for x in range(cat.n) for y in range(cat.n))}


def cmd_pivotal(cf: CategoryFile, args) -> dict:
    _require_valid(cf)
    gv = _gv(cf, args.K)
    census = enumerate_pivotal(gv)
    cat = cf.cat
    out = {"K": cat.objects[gv.K], "counts": census.counts(),
           "pivotal": [_labels(cat, f.components) for f in census.pivotal]}
    if cf.braiding is not None:
        _theorem(pivotal_twist_report(gv, cf.braiding, census))
    return out


def cmd_ribbon(cf: CategoryFile, args) -> dict:
    _require_valid(cf)
    b = _braiding(cf)
    gv = _gv(cf, args.K)
    qi = quasi_inverse(gv)
    cat = cf.cat
    verdicts = [ribbon_check(gv, qi, b, t) for t in enumerate_twists(b)]
    ribbons = enumerate_ribbon(gv, b)
    if len(ribbons) != sum(verdicts):
        raise TheoremViolation("ribbon enumeration disagrees with the per-twist verdicts")
    return {"counts": {"twists": len(verdicts), "ribbon": len(ribbons)},
            "ribbon": [_labels(cat, t.components) for t in ribbons]}


def cmd_hecke(cf: CategoryFile, args) -> dict:
    _require_valid(cf)
    gv = _gv(cf, args.K)
    cat = cf.cat
    e = cat.obj(args.object) if args.object in cat.objects else None
    if e is None:
        raise StructureError(f"unknown object {args.object!r}")
    pi = _morphism(cf, args.arrow)
    if pi.dst != e or pi.src != gv.m.unit:
        raise StructureError("the arrow must go from the unit to the chosen object")
    arrows = find_idempotent_arrows(gv.m)
    ia = IdempotentArrow(e, pi)
    if ia not in arrows:
        raise StructureError(f"{args.arrow} is not an idempotent arrow")
    h, sub_gv, rep = hecke_gv(gv, ia)
    _theorem(rep)
    sub = h.m.cat
    out = {"objects": list(sub.objects), "unit": sub.objects[h.m.unit],
           "K": sub.objects[sub_gv.K]}
    r = _r_structure(gv)
    if r is not None:
        tri = extract_triple(r, ia)
        _theorem(tri.report)
        out["triple"] = {"K": sub.objects[tri.K], "f": sub.label(tri.f)}
    return out


def cmd_extend(cf: CategoryFile, args) -> dict:
    _require_valid(cf)
    gv = _gv(cf, args.K)
    f = _morphism(cf, args.f)
    ex = monoidal_extension(gv, f)
    Mgv, rep = verify_r_extension(ex)
    _theorem(rep)
    cat = ex.M.cat
    rig = rigidity_report(Mgv)
    _theorem(rig)
    if args.output:
        from .corpus import from_structures
        Path(args.output).write_text(serialize(from_structures(ex.M, None, Mgv)), encoding="utf-8")
    return {"objects": list(cat.objects), "unit": cat.objects[ex.M.unit],
            "hom_unit_unit": cat.hom_size(ex.M.unit, ex.M.unit), "rigid": rig.info["rigid"]}


def cmd_roundtrip(cf: CategoryFile, args) -> dict:
    _require_valid(cf)
    gv = _gv(cf, args.K)
    rep = roundtrip_check(gv, _morphism(cf, args.f))
    _theorem(rep)
    return {"roundtrip": rep.to_dict()}


# --- selftest ----------------------------------------------------------------------

def yoneda_oracle(gv: GVData, samples: int, rng: random.Random) -> int:
    """Induce families from random morphisms and solve them back; returns the count."""
    cat = gv.cat
    mors = list(cat.morphisms)
    for _ in range(samples):
        w = mors[rng.randrange(len(mors))]
        fam = induced_family(gv, w)
        if yoneda_solve(gv, w.dst, w.src, fam) != w:
            raise TheoremViolation(f"yoneda_solve did not recover {cat.label(w)}")
    return samples


def selftest_entry(name: str, seed: int = 0, per_table: int = 25, samples: int = 20) -> dict:
    """The full suite on one bundled category; raises on any failure."""
    from .corpus import bundled_path, corpus_text, load_bundled
    text = bundled_path(name).read_text(encoding="utf-8")
    if corpus_text(name) != text:
        raise TheoremViolation(f"{name}: builder output differs from the bundled file")
    cf = load_bundled(name)
    if serialize(cf) != text:
        raise TheoremViolation(f"{name}: parse/serialize is not the identity")
    rep = validate_file(cf)
    if not rep.ok:
        raise TheoremViolation(f"{name}: bundled file is invalid: {rep.violations[:3]}")
    out: dict = {"objects": cf.cat.n, "morphisms": len(cf.cat.morphisms)}
    m, cat = cf.monoidal, cf.cat
    gv = cf.gv()
    found = find_dualizing(m)
    _theorem(*[classify_dualizing(g) for g in found])
    if gv.K not in [g.K for g in found]:
        raise TheoremViolation("declared dualizing object missed by the search")
    out["dualizing"] = [cat.objects[g.K] for g in found]
    qi = quasi_inverse(gv)
    _theorem(validate_monoidal_functor(d_squared_monoidal(gv, qi), m, m))
    den = denis_check(gv)
    _theorem(den)
    out["K_invertible"] = den.info["invertible"]
    r = _r_structure(gv)
    if r is not None:
        rig = rigidity_report(r)
        _theorem(rig)
        out["rigid"] = [rig.info[k] for k in ("rigid", "all_comparisons_iso", "dual_comparisons_iso")]
    out["yoneda_recovered"] = yoneda_oracle(gv, samples, random.Random(f"{seed}:{name}"))
    census = enumerate_pivotal(gv, qi)
    out["pivotal"] = census.counts()
    if cf.braiding is not None:
        b = cf.braiding
        _theorem(braided_report(gv, b), pivotal_twist_report(gv, b, census))
        twists = enumerate_twists(b)
        verdicts = [ribbon_check(gv, qi, b, t) for t in twists]
        ribbons = enumerate_ribbon(gv, b, census)
        if len(ribbons) != sum(verdicts):
            raise TheoremViolation("ribbon enumeration disagrees with the per-twist verdicts")
        out["twists"] = len(twists)
        out["ribbon"] = len(ribbons)
    hecke = []
    for ia in find_idempotent_arrows(m):
        if not cat.isomorphic(gv.D(gv.D(ia.e)), ia.e):
            continue
        h, _, hrep = hecke_gv(gv, ia)
        _theorem(hrep)
        entry = [cat.objects[ia.e], cat.label(ia.pi), h.m.cat.n]
        if r is not None:
            _theorem(extract_triple(r, ia).report)
        hecke.append(entry)
    out["hecke"] = hecke
    trips = []
    for f in cat.hom(gv.K, m.unit):
        _theorem(roundtrip_check(gv, f))
        trips.append(cat.label(f))
    out["roundtrip"] = trips
    caught = {}
    for table in TABLES:
        muts = mutations(cf, table, per_table, seed)
        caught[table] = [sum(not validate_file(mu.cf).ok for mu in muts), len(muts)]
    out["mutations_rejected"] = caught
    return out


def _selftest_job(job: tuple) -> tuple[str, int, dict]:
    name, seed, per_table, samples = job
    try:
        return name, EXIT_OK, selftest_entry(name, seed, per_table, samples)
    except TheoremViolation as exc:
        return name, EXIT_VIOLATION, {"error": str(exc)}
    except StructureError as exc:
        return name, EXIT_INVALID, {"error": str(exc)}


def cmd_selftest(args) -> tuple[int, dict]:
    from .corpus import CORPUS
    names = list(CORPUS) if not args.only else args.only
    jobs = [(n, args.seed, args.mutations, args.samples) for n in names]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_selftest_job, jobs))
    else:
        results = [_selftest_job(j) for j in jobs]
    code = max((c for _, c, _ in results), default=EXIT_OK)
    body = {"seed": args.seed, "corpus": {n: dict(r, exit_code=c) for n, c, r in results}}
    return code, body


# --- driver --------------------------------------------------------------------------

COMMANDS = {
    "validate": cmd_validate, "coherence": cmd_coherence, "dualizing": cmd_dualizing,
    "gv-report": cmd_gv_report, "rigidity": cmd_rigidity, "twists": cmd_twists,
    "pivotal": cmd_pivotal, "ribbon": cmd_ribbon, "hecke": cmd_hecke, "extend": cmd_extend,
    "roundtrip": cmd_roundtrip,
}


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for random sampling and mutations")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    p = argparse.ArgumentParser(prog="gvcat", description="Checks for finite GV categories.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name, parents=[common])
        s.add_argument("file")
        s.add_argument("--K", help="dualizing object to use instead of the declared one")
        if name == "hecke":
            s.add_argument("--object", required=True)
            s.add_argument("--arrow", required=True)
        if name in ("extend", "roundtrip"):
            s.add_argument("--f", required=True, help="label of a morphism K → 1")
        if name == "extend":
            s.add_argument("--output", help="write the extended category here")
    s = sub.add_parser("selftest", parents=[common])
    s.add_argument("--mutations", type=int, default=25, help="mutations per table per category")
    s.add_argument("--samples", type=int, default=20, help="Yoneda samples per category")
    s.add_argument("--only", nargs="*", help="restrict to these bundled categories")
    return p


def run(argv: list[str] | None = None) -> tuple[int, dict]:
    """Parse arguments and run one command; returns (exit code, report)."""
    return _execute(_parser().parse_args(argv))


def _execute(args: argparse.Namespace) -> tuple[int, dict]:
    report = {"schema": REPORT_SCHEMA, "command": args.command}
    if args.command == "selftest":
        code, body = cmd_selftest(args)
        report.update(body)
    else:
        report["file"] = Path(args.file).name
        code, result, error = EXIT_OK, {}, None
        try:
            cf = load(args.file)
            result = COMMANDS[args.command](cf, args)
        except _Invalid as exc:
            code, result, error = EXIT_INVALID, exc.result, str(exc)
        except TheoremViolation as exc:
            code, error = EXIT_VIOLATION, str(exc)
        except (StructureError, OSError) as exc:
            code, error = EXIT_INVALID, str(exc)
        report["result"] = result
        if error is not None:
            report["error"] = error
    report["status"] = {EXIT_OK: "ok", EXIT_INVALID: "invalid", EXIT_VIOLATION: "violation"}[code]
    report["exit_code"] = code
    return code, report


def _render(report: dict) -> str:
    lines = [f"{report['command']}: {report['status']}"]
    if "error" in report:
        lines.append(f"  error: {report['error']}")
    body = report.get("result", report.get("corpus", {}))
    for k, v in body.items():
        lines.append(f"  {k}: {json.dumps(v, ensure_ascii=False)}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    code, report = _execute(args)
    if args.json:
        print(json.dumps(report, ensure_ascii=False, indent=2))
    else:
        print(_render(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
