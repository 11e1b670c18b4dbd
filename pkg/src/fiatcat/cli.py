"""Command-line front end: ``fiatcat {check-axioms,hom-table,decat,fiat}``.

Exit codes: 0 verified, 1 a mathematical check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from ._json import jsonify
from .bicat import cat_a, cat_b, check_axioms, check_translations, ordered_fstar, ordered_isn
from .decat import completed, ordered_monoid_decat, decategorify_relations, decategorify_partitions
from .errors import SizeGuardError
from .linear import fiat_check
from .tables import CATEGORIES, Namer, completed_table, hom_table

BUILDERS = {"A": cat_a, "B": cat_b, "ordered-ISn": ordered_isn, "ordered-Fstar": ordered_fstar}
MAX_N = {"check-axioms": {"A": 4, "B": 4, "ordered-ISn": 3, "ordered-Fstar": 3},
         "hom-table": 3, "decat": 3, "fiat": 3}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    category: str
    n: int
    mode: str = "exhaustive"
    seed: int | None = None
    count: int = 100_000
    format: str = "text"
    out: str | None = None
    completed: bool = False

    def validate(self):
        limit = MAX_N[self.command]
        if isinstance(limit, dict):
            limit = limit[self.category]
        if not 1 <= self.n <= limit:
            raise UsageError(f"--n must be in 1..{limit} for {self.command} --cat {self.category}")
        if (self.mode == "sampled") != (self.seed is not None):
            raise UsageError("--seed is required with --mode sampled and only allowed there")
        if self.count < 1:
            raise UsageError("--count must be positive")
        if self.completed and self.category not in ("A", "B"):
            raise UsageError("--completed applies to --cat A or B")
        return self


def build_parser():
    parser = argparse.ArgumentParser(prog="fiatcat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cat", dest="category", choices=CATEGORIES, required=True)
    common.add_argument("--n", type=int, required=True)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("check-axioms", parents=[common], help="strict 2-category axioms")
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=100_000, help="samples per axiom")

    p = sub.add_parser("hom-table", parents=[common], help="table of all 2-morphisms")
    p.add_argument("--completed", action="store_true",
                   help="indecomposables of the idempotent completion instead")

    sub.add_parser("decat", parents=[common], help="Grothendieck ring vs. the monoid algebra")
    sub.add_parser("fiat", parents=[common], help="fiatness verdict")
    return parser


# ------------------------------------------------------------ commands

def _axiom_lines(title, report):
    lines = [title]
    for a in report.axioms:
        lines.append(f"  {a.name:<32} {a.status:<4}  checked={a.checked}")
        if a.witness is not None:
            lines.append(f"    witness: {json.dumps(a.witness, ensure_ascii=False, sort_keys=True)}")
    return lines


def cmd_check_axioms(cfg):
    C = BUILDERS[cfg.category](cfg.n)
    reports = {"axioms": check_axioms(C, cfg.mode, cfg.seed, cfg.count)}
    if cfg.category in ("A", "B"):
        reports["translations"] = check_translations(C, cfg.mode, cfg.seed, cfg.count)
    ok = all(r.passed for r in reports.values())
    data = {"command": cfg.command, "category": cfg.category, "n": cfg.n, "mode": cfg.mode,
            "seed": cfg.seed, "passed": ok, **{k: r.to_json() for k, r in reports.items()}}
    seed = "-" if cfg.seed is None else cfg.seed
    lines = [f"check-axioms --cat {cfg.category} --n {cfg.n} mode={cfg.mode} seed={seed}"]
    for k, r in reports.items():
        lines += _axiom_lines(k + ":", r)
    lines.append(f"verdict: {'pass' if ok else 'FAIL'}")
    return ok, data, "\n".join(lines) + "\n"


def cmd_hom_table(cfg):
    if cfg.completed:
        table = completed_table(completed(cfg.category, cfg.n), cfg.category)
    else:
        table = hom_table(cfg.category, cfg.n)
    return True, table.data, table.text()


def _presentation_lines(title, alg, nm):
    lines = [f"{title}: rank {alg.rank}",
             "  unit: " + (nm.vec({b: v for b, v in zip(alg.basis, alg.unit) if v})
                           if alg.unit else "none")]
    for (a, b), out in sorted(alg.sc.items()):
        prod = nm.vec({alg.basis[c]: v for c, v in out.items()})
        lines.append(f"  {nm.name(alg.basis[a])} * {nm.name(alg.basis[b])} = {prod}")
    return lines


def cmd_decat(cfg):
    nm = Namer(cfg.category, cfg.n)
    if cfg.category.startswith("ordered"):
        alg = ordered_monoid_decat(cfg.n, cfg.category.split("-")[1])
        ok = not alg.associativity_failures() and not alg.unit_failures()
        data = {"command": cfg.command, "category": cfg.category, "n": cfg.n,
                "passed": ok, "algebra": alg.to_json()}
        lines = [f"decat --cat {cfg.category} --n {cfg.n}"]
        lines += _presentation_lines("decategorification (standard basis)", alg, nm)
        lines.append(f"verdict: {'pass' if ok else 'FAIL'}")
        return ok, data, "\n".join(lines) + "\n"
    report, G, B, K = (decategorify_relations if cfg.category == "A" else decategorify_partitions)(cfg.n)
    table = completed_table(K, cfg.category)
    ok = report.passed
    data = {"command": cfg.command, "category": cfg.category, "n": cfg.n,
            "objects": len(K.objects), "indecomposables": len(K.indecomposables()),
            "completed_table": table.data, "grothendieck_ring": G.to_json(),
            "monoid_algebra": B.to_json(), "isomorphism": report.to_json(), "passed": ok}
    lines = [f"decat --cat {cfg.category} --n {cfg.n}",
             f"objects: {len(K.objects)}",
             f"indecomposables: {len(K.indecomposables())}", "", table.text().rstrip(), ""]
    lines += _presentation_lines("Grothendieck ring (classes named by restricted maps)", G, nm)
    lines += _presentation_lines("monoid algebra (standard basis)", B, nm)
    lines.append(f"isomorphism onto the Mobius basis: {report.products_checked} products, "
                 f"{report.mismatches} mismatches, unit {'ok' if report.unit_ok else 'WRONG'}, "
                 f"det {report.basis_det}")
    if report.witness is not None:
        lines.append("witness: " + json.dumps(jsonify(report.witness), ensure_ascii=False))
    lines.append(f"verdict: {'pass' if ok else 'FAIL'}")
    return ok, data, "\n".join(lines) + "\n"


def cmd_fiat(cfg):
    C = BUILDERS[cfg.category](cfg.n)
    rep = fiat_check(C)
    expected = cfg.category in ("A", "B")
    ok = rep.fiat == expected
    nm = Namer(cfg.category, cfg.n)
    data = {"command": cfg.command, "expected_fiat": expected, "passed": ok, **rep.to_json()}
    verdict = "fiat: yes" if rep.fiat else "fiat: no"
    if rep.witness is not None:
        verdict += f", witness {nm.name(rep.witness['s'])}"
    lines = [f"fiat --cat {cfg.category} --n {cfg.n}"]
    for c in rep.checks:
        lines.append(f"  {c.name:<40} {c.status:<4}  checked={c.checked}")
    for c in rep.empirical:
        lines.append(f"  {c.name:<40} {c.status:<4}  checked={c.checked}  (informational)")
    if rep.witness is not None:
        w = rep.witness
        lines.append(f"  no unit 2-morphisms: {w['no_unit_2morphisms']}, "
                     f"no counit 2-morphisms: {w['no_counit_2morphisms']}")
    lines.append(verdict)
    if not ok:
        lines.append(f"unexpected verdict: expected fiat={'yes' if expected else 'no'}")
    return ok, data, "\n".join(lines) + "\n"


COMMANDS = {"check-axioms": cmd_check_axioms, "hom-table": cmd_hom_table,
            "decat": cmd_decat, "fiat": cmd_fiat}


def run(cfg):
    """Execute ``cfg``; returns ``(exit_code, output_text)``."""
    ok, data, text = COMMANDS[cfg.command](cfg)
    if cfg.format == "json":
        text = json.dumps(jsonify(data), ensure_ascii=False, indent=2, sort_keys=True) + "\n"
    return (0 if ok else 1), text


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    fields = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__}
    try:
        cfg = RunConfig(**fields).validate()
        code, text = run(cfg)
    except (UsageError, SizeGuardError) as exc:
        parser.error(str(exc))
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code



if __name__ == "__main__":
    sys.exit(main())
