"""Command line front-end.

    g2spheres pkf --space s6 --format latex
    g2spheres local-k --group g2
    g2spheres restrict
    g2spheres tables --space s7
    g2spheres eval-ball --lambda 4
    g2spheres verify --suite all

Exit status: 0 on success, 1 if a verification check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import checks, emit, integrals, local_kinematics, measures, valuations
from .scalar import EvaluationError
from .tensor import Combo

__all__ = ["main", "main_exit", "build_parser", "CliConfig"]


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    verb: str
    space: str = "s6"
    group: str = "su3"
    fmt: str = "json"
    lam: str = "symbolic"
    external_tables: str | None = None
    suite: str = "all"

    @property
    def s_value(self):
        """Exact value of ``sqrt(lambda)``, or ``None`` when symbolic."""
        if self.lam == "symbolic":
            return None
        try:
            lam = Fraction(self.lam)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"--lambda: not a rational literal: {self.lam!r}") from exc
        if lam < 0:
            raise UsageError("--lambda must be nonnegative")
        n, d = isqrt(lam.numerator), isqrt(lam.denominator)
        if n * n != lam.numerator or d * d != lam.denominator:
            raise UsageError("--lambda must be the square of a rational so that sqrt(lambda) stays exact")
        return Fraction(n, d)


def _combo(c, cfg):
    s = cfg.s_value
    return c if s is None else c.substitute_s(s)


def _tensor(t, cfg):
    s = cfg.s_value
    return t if s is None else t.substitute_s(s)


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def _space_name(cfg):
    return {"s6": "S6", "s7": "S7"}[cfg.space]


# -- verbs ---------------------------------------------------------------------------

def cmd_pkf(cfg):
    k = _tensor(valuations.kinematic_chi(_space_name(cfg)), cfg)
    if cfg.fmt == "latex":
        return rf"k(\chi) = {emit.tensor_latex(k)}"
    return _dump({"space": cfg.space, "lambda": cfg.lam, "terms": k.to_json()})


def cmd_local_k(cfg):
    k_su3, k_g2, k_u3, k_so7 = local_kinematics.load_tables(cfg.external_tables)
    tables = [k_su3, k_u3] if cfg.group == "su3" else [k_g2, k_so7]
    if cfg.fmt == "latex":
        lines = []
        for tab in tables:
            for row in tab.rows.values():
                lhs = rf"{tab.operator}({emit.combo_latex(row.arg)})"
                if row.relative_to:
                    lhs += rf" - {row.relative_to}({emit.combo_latex(row.arg)})"
                lines.append(f"{lhs} = {emit.tensor_latex(row.tensor)}  % {row.provenance}")
        return "\n".join(lines)
    return _dump({t.operator: t.to_json() for t in tables})


def cmd_restrict(cfg):
    stored = measures.restriction_table()
    rows = []
    for lab, img in stored.items():
        rec = measures.restrict_computed(lab)
        rows.append({"argument": lab, "stored": img.to_json(), "recomputed": rec.to_json(), "equal": rec == img})
    if cfg.fmt == "latex":
        return "\n".join(rf"\iota^*{emit.label_latex(r['argument'])} = "
                         rf"{emit.combo_latex(stored[r['argument']])}" for r in rows)
    return _dump(rows)


def cmd_tables(cfg):
    sp = _space_name(cfg)
    group = "SU3" if sp == "S6" else "G2"
    basis = measures.basis(group)
    rows = []
    for lab, cm in basis.items():
        rows.append({
            "label": lab, "degree": cm.degree, "weight": cm.weight, "parity": cm.parity,
            "glob": _combo(measures.globalize(lab, sp), cfg).to_json(),
            "euler_verdier": measures.euler_verdier(lab, group).to_json(),
        })
    if cfg.fmt == "latex":
        lines = [rf"[{emit.label_latex(r['label'])}]_\lambda = "
                 rf"{emit.combo_latex(_combo(measures.globalize(r['label'], sp), cfg))}" for r in rows]
        return "\n".join(lines)
    return _dump({"space": cfg.space, "lambda": cfg.lam, "measures": rows,
                  "algebra": json.loads(valuations.dump_json(sp))})


def cmd_eval_ball(cfg):
    values = {lab: integrals.ball_evaluation(lab) for lab in integrals.printed_ball_values()}
    values["Delta41-4Delta42"] = integrals.ball4_evaluation("Delta41") - integrals.ball4_evaluation("Delta42") * 4
    s = cfg.s_value
    if s is not None:
        values = {k: v.map_scalars(lambda c: c.substitute(s)) for k, v in values.items()}
    if cfg.fmt == "latex":
        names = {k: emit.label_latex(k) for k in values}
        names["Delta41-4Delta42"] = emit.combo_latex(Combo({"Delta41": 1, "Delta42": -4}))
        return "\n".join(rf"[{names[k]}]_\lambda(B(r)) = {emit.trig_latex(v)}" for k, v in values.items())
    return _dump({k: {"display": integrals.pretty(v), "rho_form": repr(v)} for k, v in values.items()})


def cmd_verify(cfg):
    results = []
    for c in checks.REGISTRY:
        if cfg.suite not in ("all", c.suite):
            continue
        if c.fn is checks.local_formulas:
            # one line per local formula instead of the aggregate
            results += local_kinematics.run_checks(cfg.external_tables)
        else:
            results.append(c.fn())
    lines = []
    for r in results:
        tag = "SKIPPED(external-data)" if r.status == "SKIPPED" else r.status
        lines.append(f"{tag} {r.name}" + (f"  [{r.detail}]" if r.status != "PASS" and r.detail else ""))
    failed = any(r.status == "FAIL" for r in results)
    return "\n".join(lines), 1 if failed else 0


VERBS = {
    "pkf": cmd_pkf,
    "local-k": cmd_local_k,
    "restrict": cmd_restrict,
    "tables": cmd_tables,
    "eval-ball": cmd_eval_ball,
    "verify": cmd_verify,
}


def build_parser():
    p = argparse.ArgumentParser(prog="g2spheres", description="Integral geometry tables for S^6 and S^7.")
    p.add_argument("verb", choices=sorted(VERBS))
    p.add_argument("--space", choices=("s6", "s7"), default="s6")
    p.add_argument("--group", choices=("su3", "g2"), default="su3")
    p.add_argument("--format", dest="fmt", choices=("latex", "json"), default="json")
    p.add_argument("--lambda", dest="lam", default="symbolic",
                   help="'symbolic' or a rational literal that is a perfect square")
    p.add_argument("--external-tables", default=None, metavar="PATH")
    p.add_argument("--suite", choices=("all",) + checks.SUITES, default="all")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = CliConfig(args.verb, args.space, args.group, args.fmt, args.lam, args.external_tables, args.suite)
    try:
        cfg.s_value  # validate early
        out = VERBS[cfg.verb](cfg)
    except (UsageError, EvaluationError, local_kinematics.ExternalDataError, OSError) as exc:
        print(f"g2spheres: error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(out, tuple):
        out, code = out
    print(out)
    return code


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()

