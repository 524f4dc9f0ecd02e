"""Local and semi-local kinematic operators for SU(3) and G2.

Rows are stored as symmetric tensors over curvature-measure labels, each
with a provenance tag: ``"printed"`` for the published rows and the
corrections relative to U(3) and SO(7), ``"external-data"`` for rows
loaded from a JSON file.  Every check here is phrased so that unprinted
rows either cancel or cause the check to be skipped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import measures, valuations
from .scalar import PI, S, Scalar, as_scalar, q
from .tensor import Combo, SymTensor, Tensor2

__all__ = [
    "LocalRow",
    "LocalOperatorTable",
    "CheckResult",
    "load_tables",
    "parse_external",
    "glob_glob",
    "glob_id",
    "semilocal",
    "balance_violations",
    "run_checks",
]

PRINTED, EXTERNAL = "printed", "external-data"


@dataclass(frozen=True)
class LocalRow:
    operator: str
    argument: str
    arg: Combo
    tensor: SymTensor
    provenance: str = PRINTED
    # True if the row stores K_G(m) - K_H(m) for the larger group H
    relative_to: str | None = None


@dataclass
class LocalOperatorTable:
    operator: str
    group: str
    rows: dict = field(default_factory=dict)

    def add(self, row):
        self.rows[row.argument] = row

    def __getitem__(self, name):
        return self.rows[name].tensor

    def get(self, name):
        row = self.rows.get(name)
        return row.tensor if row else None

    def __contains__(self, name):
        return name in self.rows

    def to_json(self):
        return [{"operator": self.operator, "argument": r.argument, "provenance": r.provenance,
                 "relative_to": r.relative_to, "terms": r.tensor.to_json()}
                for r in self.rows.values()]


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # PASS, FAIL or SKIPPED
    detail: str = ""

    @property
    def passed(self):
        return self.status == "PASS"


def _o(a, b, c=1):
    return SymTensor.odot(a, b, c)


def _c(d):
    return Combo(d)


_re, _im = measures.real_part, measures.imag_part


# -- SU(3) ---------------------------------------------------------------------------

def _k_u3_partial():
    pi = PI
    t = LocalOperatorTable("K_U3", "SU3")
    k00 = (_o("Delta00", "Delta63", 2) + _o("Delta10", "Delta52", q(32, 15) / pi)
           + _o("Delta20", "Delta41", q(5, 12)) + _o("Delta20", "Delta42", q(1, 3))
           + _o("Delta21", "Delta41", q(1, 3)) + _o("Delta21", "Delta42", q(2, 3))
           + _o("N20", "Delta41", q(1, 24)) + _o("N20", "Delta42", q(-1, 6))
           + _o("Delta30", "Delta30", q(2, 3) / pi) + _o("Delta30", "Delta31", q(8, 9) / pi)
           + _o("Delta31", "Delta31", q(16, 27) / pi) + _o("N31", "N31", q(-32, 675) / pi)
           + _o("Delta30", "N31", q(8, 45) / pi) + _o("Delta31", "N31", q(-16, 135) / pi))
    t.add(LocalRow("K_U3", "Delta00", Combo.of("Delta00"), k00))
    d2 = _c({"Delta20": 1, "Delta21": 1})
    t.add(LocalRow("K_U3", "Delta20+Delta21", d2,
                   _o("Delta63", d2, 2) + _o("Delta52", _c({"Delta30": 1, "Delta31": 1}), q(64, 15) / pi)
                   + _o("Delta41", "Delta41", q(29, 48)) + _o("Delta41", "Delta42", q(7, 6))
                   + _o("Delta42", "Delta42", q(2, 3))))
    d3 = _c({"Delta30": 1, "Delta31": q(-2, 3)})
    t.add(LocalRow("K_U3", "Delta30-2/3Delta31", d3,
                   _o("Delta63", d3, 2) + _o("Delta52", _c({"Delta41": 1, "Delta42": -4}), q(4, 15))))
    return t


def _conj_tensor(t):
    return SymTensor({(measures.conj_label(a), measures.conj_label(b)): v.conjugate()
                      for (a, b), v in t.terms.items()})


def _k_su3(k_u3):
    pi = PI
    t = LocalOperatorTable("K_SU3", "SU3")
    delta = _o("Phi3", "Phib3", q(-2, 15) / pi) + _o("Psi3", "Psib3", -1 / (8 * pi))
    t.add(LocalRow("K_SU3", "Delta00", Combo.of("Delta00"), k_u3["Delta00"] + delta))
    rows = {
        "Phi2": _o("Phi2", "Delta63", 2),
        "Psi2": _o("Psi2", "Delta63", 2) + _o("Psi3", "Delta52", q(16, 15) / pi),
        "Phi3": _o("Phi3", "Delta63", 2),
        "Psi3": _o("Psi3", "Delta63", 2),
    }
    for lab, ten in rows.items():
        t.add(LocalRow("K_SU3", lab, Combo.of(lab), ten))
        cl = measures.conj_label(lab)
        t.add(LocalRow("K_SU3", cl, Combo.of(cl), _conj_tensor(ten)))
    # K_SU3 = K_U3 on U(3)-invariant measures of positive degree
    for name in ("Delta20+Delta21", "Delta30-2/3Delta31"):
        r = k_u3.rows[name]
        t.add(LocalRow("K_SU3", name, r.arg, r.tensor))
    return t


def k_su3_delta00_correction(table):
    """``K_SU3(Delta00) - K_U3(Delta00)``."""
    return table["Delta00"] - _k_u3_partial()["Delta00"]


# -- G2 -----------------------------------------------------------------------------

RE_PHI = _re("Phi")
IM_PHI = _im("Phi")


def _k_g2():
    pi = PI
    t = LocalOperatorTable("K_G2", "G2")
    t.add(LocalRow("K_G2", "Delta0", Combo.of("Delta0"), _o(RE_PHI, "N4", q(1, 64)), relative_to="K_SO7"))
    t.add(LocalRow("K_G2", "Delta1", Combo.of("Delta1"), _o("N4", "N4", -3 * pi / 2 ** 13), relative_to="K_SO7"))
    n3 = Combo.of("N3")
    t.add(LocalRow("K_G2", "N2", Combo.of("N2"),
                   _o("Delta7", "N2", 2) + _o("Delta6", RE_PHI.scale(4) - n3, q(1, 8))))
    t.add(LocalRow("K_G2", "N3", n3, _o("Delta7", "N3", 2) + _o("Delta6", "N4", -15 * pi / 128)))
    t.add(LocalRow("K_G2", "N4", Combo.of("N4"), _o("Delta7", "N4", 2)))
    t.add(LocalRow("K_G2", "RePhi", RE_PHI, _o("Delta7", RE_PHI, 2) + _o("Delta6", "N4", -15 * pi / 512)))
    t.add(LocalRow("K_G2", "ImPhi", IM_PHI, _o("Delta7", IM_PHI, 2)))
    return t


# semi-local rows over (flat valuation) x (measure); valuations nu3, nu4 are nu3', nu4'
def semilocal(name):
    """Printed semi-local rows ``k_bar(m)`` as ordinary tensors.

    ``Delta0`` is relative to SO(7).  Unknown names return ``None``.
    """
    pi = PI
    out = Tensor2.outer
    rows = {
        "Delta0": out("nu3", "N4", q(1, 512)) + out("nu4", RE_PHI, q(1, 128)),
        "N2": out("mu7", "N2") + out("mu6", RE_PHI.scale(4) - Combo.of("N3"), q(1, 16)),
        "N3": (out("mu7", "N3") + out("mu6", "N4", -15 * pi / 256)
               + out("nu4", "Delta6", -15 * pi / 256) + out("nu3", "Delta7")),
        "ImPhi": out("mu7", IM_PHI),
    }
    return rows.get(name)


# -- external data ------------------------------------------------------------------

class ExternalDataError(ValueError):
    pass


def _parse_argument(arg):
    # "Delta41+Delta42" is a sum of labels; a dict gives explicit coefficients
    if isinstance(arg, str):
        return arg, Combo({lab: 1 for lab in arg.split("+")})
    if isinstance(arg, dict):
        combo = Combo({k: Scalar.parse(str(v)) for k, v in arg.items()})
        name = "+".join(k if combo[k] == 1 else f"{combo[k]}*{k}" for k in sorted(combo.terms))
        return name, combo
    raise ExternalDataError(f"bad argument {arg!r}")


def parse_external(text):
    """Rows from the external-table JSON format (a list of objects)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ExternalDataError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, list):
        raise ExternalDataError("external tables must be a JSON list")
    rows = []
    for item in data:
        try:
            op = item["operator"]
            name, combo = _parse_argument(item["argument"])
            ten = SymTensor()
            for term in item["terms"]:
                ten = ten + _o(term["left"], term["right"], Scalar.parse(str(term["coeff"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ExternalDataError(f"malformed row {item!r}: {exc}") from exc
        rows.append(LocalRow(op, name, combo, ten, EXTERNAL))
    return rows


def load_tables(external_path=None):
    """``(K_SU3, K_G2, K_U3 partial, K_SO7 external)``."""
    k_u3 = _k_u3_partial()
    k_so7 = LocalOperatorTable("K_SO7", "G2")
    extra = []
    if external_path is not None:
        with open(external_path) as fh:
            extra = parse_external(fh.read())
    for row in extra:
        if row.operator == "K_U3":
            k_u3.add(row)
        elif row.operator == "K_SO7":
            k_so7.add(row)
    k_su3 = _k_su3(k_u3)
    for row in extra:
        if row.operator == "K_U3" and row.argument not in k_su3:
            k_su3.add(LocalRow("K_SU3", row.argument, row.arg, row.tensor, EXTERNAL))
    return k_su3, _k_g2(), k_u3, k_so7


# -- globalization ------------------------------------------------------------------

def _space(group):
    return "S6" if group == "SU3" else "S7"


def glob_glob(tensor, group, s_value=None):
    """``(glob x glob)`` of a symmetric tensor; ``s_value=0`` gives the flat case."""
    sp = _space(group)

    def g(label):
        c = measures.globalize(label, sp)
        return c.substitute_s(s_value) if s_value is not None else c

    return tensor.apply_both(g)


def glob_id(tensor, group, s_value=0):
    """``(glob x id)`` of a symmetric tensor, as an ordinary tensor."""
    sp = _space(group)

    def g(label):
        c = measures.globalize(label, sp)
        return c.substitute_s(s_value) if s_value is not None else c

    return tensor.to_tensor2().apply_left(g)


def sym_part(t2):
    """The symmetric tensor of a Tensor2 that is already symmetric."""
    out = {}
    for (a, b), v in t2.terms.items():
        if t2[(b, a)] != v:
            raise ValueError(f"tensor is not symmetric at ({a}, {b})")
        if a <= b:
            out[(a, b)] = v if a == b else v * 2
    return SymTensor(out)


def _module_left(tensor, action):
    return sym_part(tensor.to_tensor2().apply_left(action))


# -- balance -------------------------------------------------------------------------

def _info(group):
    b = measures.basis(group)
    return lambda lab: (b[lab].degree, b[lab].weight)


def balance_violations(table):
    """Terms violating degree (and, for SU3, weight) balance."""
    n = 6 if table.group == "SU3" else 7
    info = _info(table.group)
    bad = []
    for row in table.rows.values():
        degs = {info(lab)[0] for lab in row.arg.terms}
        weights = {info(lab)[1] for lab in row.arg.terms}
        for (a, b) in row.tensor.terms:
            (da, wa), (db, wb) = info(a), info(b)
            if len(degs) != 1 or next(iter(degs)) + n != da + db:
                bad.append((row.argument, a, b, "degree"))
            if table.group == "SU3" and len(weights) == 1 and next(iter(weights)) != wa + wb:
                bad.append((row.argument, a, b, "weight"))
    return bad


# -- checks ---------------------------------------------------------------------------

def _res(name, ok, detail=""):
    return CheckResult(name, "PASS" if ok else "FAIL", detail)


def derive_psi2_coefficient():
    """Coefficient d of ``Psi3 (.) Delta52`` in ``K_SU3(Psi2)`` forced by the kernel of glob."""
    k_u3 = _k_u3_partial()
    kern = (_o("Psi2", "Delta63", 2) + k_u3["Delta30-2/3Delta31"].scale(2 * S / PI)
            + _o("Phi3", "Delta63", 2 * 2 * S / PI))
    base = glob_glob(kern, "SU3")
    unit = glob_glob(_o("Psi3", "Delta52"), "SU3")
    key = ("mu41", "mu52")
    return -base[key] / unit[key]


def derive_psi3_correction():
    """Coefficient b of ``Psi3 (.) Psib3`` in ``K_SU3(Delta00) - K_U3(Delta00)``.

    Only ``mu42 (.) mu42`` of the S^6 principal kinematic formula is compared;
    the unprinted U(3) rows cannot contribute to it for degree reasons.
    """
    k_u3 = _k_u3_partial()
    lam = S ** 2
    known = glob_glob(k_u3["Delta00"] + _o("Phi3", "Phib3", q(-2, 15) / PI), "SU3")
    known = known + glob_glob(k_u3["Delta20+Delta21"], "SU3").scale(lam / (2 * PI))
    unit = glob_glob(_o("Psi3", "Psib3"), "SU3")
    key = ("mu42", "mu42")
    target = valuations.kinematic_chi("S6")[key]
    return (target - known[key]) / unit[key]


def _k_g2_full_rows(k_g2):
    """``K(N4)`` and ``K(RePhi)`` from ``K(N2)``, ``K(N3)`` and the t-action."""
    t = lambda lab: valuations.g2_module_action("t", lab)  # noqa: E731
    k_n4 = _module_left(k_g2["N3"], t).scale(q(-8, 3))
    k_rephi = _module_left(k_g2["N2"], t).scale(5 * PI / 8) + k_g2["N3"].scale(q(1, 4))
    return k_n4, k_rephi


def check_su3_pkf(k_su3):
    """Full globalization of ``K_SU3(chi-combination)`` against the S^6 pkf."""
    lam = S ** 2
    needed = {"Delta00": 1, "Delta20+Delta21": lam / (2 * PI),
              "Delta41+Delta42": 3 * lam ** 2 / (4 * PI ** 2), "Delta63": 15 * lam ** 3 / (8 * PI ** 3)}
    missing = [n for n in needed if n not in k_su3]
    if missing:
        return CheckResult("su3: glob(K(chi)) = pkf", "SKIPPED",
                           f"external-data rows missing: {', '.join(missing)}")
    total = SymTensor()
    for n, c in needed.items():
        total = total + k_su3[n].scale(as_scalar(c))
    ok = glob_glob(total, "SU3") == valuations.kinematic_chi("S6")
    return _res("su3: glob(K(chi)) = pkf", ok)


def run_checks(external_path=None):
    k_su3, k_g2, k_u3, k_so7 = load_tables(external_path)
    out = []

    # balance and symmetry
    for tab in (k_su3, k_u3, k_g2, k_so7):
        bad = balance_violations(tab)
        out.append(_res(f"{tab.operator}: degree/weight balance", not bad, str(bad[:3])))
        sym = all(sym_part(r.tensor.to_tensor2()) == r.tensor for r in tab.rows.values())
        out.append(_res(f"{tab.operator}: symmetric", sym))

    # printed differences
    delta = k_su3_delta00_correction(k_su3)
    out.append(_res("su3: K(Delta00) - K_U3(Delta00)",
                    delta == _o("Phi3", "Phib3", q(-2, 15) / PI) + _o("Psi3", "Psib3", -1 / (8 * PI))))
    out.append(_res("su3: K(Phi3) = 2 Phi3.Delta63", k_su3["Phi3"] == _o("Phi3", "Delta63", 2)))
    out.append(_res("g2: K(N4) = 2 Delta7.N4", k_g2["N4"] == _o("Delta7", "N4", 2)))

    # kernel combination globalizes to zero
    comb = (k_su3["Psi2"] + k_su3["Delta30-2/3Delta31"].scale(2 * S / PI)
            + k_su3["Phi3"].scale(2 * S / PI))
    out.append(_res("su3: glob x glob K(Psi2 + 2s/pi (D30 - 2/3 D31 + Phi3)) = 0",
                    not glob_glob(comb, "SU3")))
    d = derive_psi2_coefficient()
    out.append(_res("su3: Psi3.Delta52 coefficient in K(Psi2) = 16/(15 pi)", d == q(16, 15) / PI, str(d)))
    b = derive_psi3_correction()
    out.append(_res("su3: Psi3.Psib3 coefficient in K(Delta00) = -1/(8 pi)", b == -1 / (8 * PI), str(b)))
    out.append(check_su3_pkf(k_su3))

    # G2 deltas against the S^7 principal kinematic formula
    g0 = glob_glob(k_g2["Delta0"], "G2")
    pkf_delta = valuations.kinematic_chi("S7") - valuations.so_block_inverse("S7")
    out.append(_res("g2: glob x glob (K(Delta0) - K_SO7(Delta0)) = nu3.nu4/256",
                    g0 == _o("nu3", "nu4", q(1, 256)) and g0 == pkf_delta, str(g0)))
    mu1 = valuations.Valuation.from_mu("S7", "mu1")
    times_mu1 = lambda lab: (valuations.Valuation.from_mu("S7", lab) * mu1).mu()  # noqa: E731
    rhs = _o("nu3", "nu4", q(1, 256)).to_tensor2().apply_left(times_mu1)
    g1 = glob_glob(k_g2["Delta1"], "G2")
    out.append(_res("g2: glob x glob (K(Delta1) - K_SO7(Delta1)) = (mu1 x chi) nu3.nu4/256",
                    g1.to_tensor2() == rhs, str(g1)))
    mu1_local = lambda lab: valuations.g2_module_action("t", lab).scale(PI / 2)  # noqa: E731
    out.append(_res("g2: K(Delta1) delta = (mu1 x chi) K(Delta0) delta",
                    _module_left(k_g2["Delta0"], mu1_local) == k_g2["Delta1"]))
    k_n4, k_rephi = _k_g2_full_rows(k_g2)
    out.append(_res("g2: K(N4) = -8/3 (t x chi) K(N3)", k_n4 == k_g2["N4"]))
    out.append(_res("g2: K(RePhi) = 5pi/8 (t x chi) K(N2) + K(N3)/4", k_rephi == k_g2["RePhi"]))

    # (glob x id) K = k_bar in the flat case
    for name in ("Delta0", "N2", "N3", "ImPhi"):
        lhs = glob_id(k_g2[name], "G2", 0)
        out.append(_res(f"g2: (glob x id) K({name}) = k_bar({name})", lhs == semilocal(name)))
    return out


def dump_json(external_path=None):
    k_su3, k_g2, k_u3, k_so7 = load_tables(external_path)
    return json.dumps({t.operator: t.to_json() for t in (k_su3, k_g2, k_u3, k_so7)},
                      indent=2, sort_keys=True)


