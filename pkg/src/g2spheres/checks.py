"""Verification suite shared by the CLI and the acceptance tests.

Each check is a small function returning a :class:`CheckResult`; the
registry tags it with a suite name and the acceptance criteria it supports.
"""

from __future__ import annotations

import inspect
from dataclasses import dataclass
from math import factorial

from . import integrals, local_kinematics, measures, rumin, s6_forms, valuations
from .local_kinematics import CheckResult
from .scalar import LAMBDA, PI, S, q, unit_ball_volume
from .tensor import Combo, SymTensor

__all__ = ["Check", "REGISTRY", "run", "run_criterion", "SUITES", "printed_pkf_s6"]

SUITES = ("forms", "rumin", "algebra", "local", "integrals")


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    criteria: tuple
    fn: object


REGISTRY = []


def check(suite, *criteria):
    def wrap(fn):
        REGISTRY.append(Check(fn.__name__, suite, criteria, fn))
        return fn
    return wrap


def _res(name, ok, detail=""):
    return CheckResult(name, "PASS" if ok else "FAIL", detail)


def _g(name):
    return s6_forms.gen(name)


# -- forms ------------------------------------------------------------------------

GENERATORS_13 = ("alpha", "beta", "gamma", "theta0", "theta1", "theta2", "thetas",
                 "chi0R", "chi0I", "chi1R", "chi1I", "chi2R", "chi2I")


@check("forms", 1)
def d_squared_zero():
    bad = [g for g in GENERATORS_13 if _g(g).d().d().expand()]
    return _res("d(d g) = 0 for the 13 generators", not bad, f"failing: {bad}")


@check("forms", 2)
def form_relations():
    a, b, c = _g("alpha"), _g("beta"), _g("gamma")
    t0, t1, t2, ts = _g("theta0"), _g("theta1"), _g("theta2"), _g("thetas")
    x1 = _g("chi1")
    half = q(1, 2)
    rel = {
        "chi1 t1 ts": x1 * t1 * ts,
        "chi1 (ts^2 - t1^2)": x1 * (ts * ts - t1 * t1),
        "t2 chi0I": t2 * _g("chi0I") - (t1 * _g("chi1I")).scale(-half) - (ts * _g("chi1R")).scale(half),
        "t0 chi2I": t0 * _g("chi2I") - (t1 * _g("chi1I")).scale(-half) - (ts * _g("chi1R")).scale(-half),
        "t0^2 t2": t0 * t0 * t2 + t0 * ts * ts,
    }
    bad = [k for k, v in rel.items() if v.expand()]
    base = a * b * c * t0 * t2
    ratios = {
        "chi1R^2": (base * _g("chi1R") * _g("chi1R"), 4),
        "chi1I^2": (base * _g("chi1I") * _g("chi1I"), 4),
        "t0 t2": (base * t0 * t2, 4),
        "t1^2": (base * t1 * t1, -4),
        "ts^2": (base * ts * ts, -4),
    }
    for k, (form, want) in ratios.items():
        if s6_forms.top_ratio(form) != want:
            bad.append(k)
    return _res("printed form relations and top-form ratios", not bad, f"failing: {bad}")


@check("forms", 11)
def euler_verdier_tables():
    bad = []
    for group in ("SU3", "G2"):
        for lab in measures.basis(group):
            ev = measures.euler_verdier_from_forms(lab, group)
            if ev != measures.euler_verdier(lab, group):
                bad.append((group, lab))
            back = ev.apply(lambda x: measures.euler_verdier(x, group))
            if back != Combo.of(lab):
                bad.append((group, lab, "involution"))
    return _res("Euler-Verdier signs from forms, involutive", not bad, str(bad))


@check("forms", 11)
def antipodal_tables():
    bad = []
    for lab in measures.su3_basis():
        a = measures.antipodal_from_forms(lab)
        if a != measures.antipodal(lab):
            bad.append(lab)
        if a.apply(measures.antipodal) != Combo.of(lab):
            bad.append((lab, "involution"))
    return _res("antipodal signs from forms, involutive", not bad, str(bad))


# -- rumin ------------------------------------------------------------------------

def reference_d_omega_42():
    a, b, c = _g("alpha"), _g("beta"), _g("gamma")
    t0, t1, t2, ts = _g("theta0"), _g("theta1"), _g("theta2"), _g("thetas")
    x1r, x1i, x2r, x2i = _g("chi1R"), _g("chi1I"), _g("chi2R"), _g("chi2I")
    first = (x1i * x1i).scale(4) - (x1r * x1r).scale(2) - t0 * t2 - (t1 * t1).scale(4) + (ts * ts).scale(q(1, 2))
    second = (x1i * x2i).scale(4) + (x1r * x2r).scale(4) - (t1 * t2).scale(5)
    return (a * b * first + a * c * second).scale(LAMBDA)


def _reference_xi():
    b, c = _g("beta"), _g("gamma")
    t0, t1, ts = _g("theta0"), _g("theta1"), _g("thetas")
    x1r, x1i = _g("chi1R"), _g("chi1I")
    corr = (t1 * x1i).scale(-2) - (b * c * x1r).scale(q(3, 2)) + (ts * x1r).scale(q(1, 2))
    return (b * c * t0).scale(3) - (ts * t0).scale(2) - corr.scale(S)


@check("rumin", 3)
def rumin_reference():
    omega = _g("gamma") * _g("theta0") * _g("theta2")
    res = rumin.rumin_differential(omega)
    D = res.D.expand()
    ok_part = D.grade_part(4, 2) == reference_d_omega_42().expand()
    # every admissible xi gives the same D, including the hand-picked one
    same = all((rumin.rumin_differential(omega, v).D.expand() == D) for v in rumin.rumin_kernel_vectors())
    by_hand = (omega + _g("alpha") * _reference_xi()).d().expand() == D
    return _res("D(gamma theta0 theta2): (4,2) part, xi-independence", ok_part and same and by_hand,
                f"part={ok_part} independent={same} hand-xi={by_hand} nullity={res.nullity}")


@check("rumin", 6)
def kernel_certificates():
    labels, kern = measures.rumin_kernel(3, constant=True)
    expected = [Combo.of("N31"), measures.imag_part("Phi2"), measures.imag_part("Psi3"),
                Combo({"N20": 1, "Phi2": 1})]
    basis = measures.su3_basis()

    def vec(c):
        return {lab: c[lab] for lab in labels if c[lab]}

    from . import linalg
    rk = linalg.rank([vec(c) for c in kern])
    span_ok = rk == 4 and linalg.rank([vec(c) for c in kern] + [vec(c) for c in expected]) == 4
    certs = all(rumin.glob_zero_certificate(measures.form_of(c, "SU3")) for c in expected)
    # no other eta-free basis measure of degree <= 3 passes the certificate
    others = [lab for lab in labels if basis[lab].degree <= 3 and not basis[lab].volume_part
              and lab not in ("N31",)]
    false_ok = not any(rumin.glob_zero_certificate(basis[lab].form) for lab in others)
    return _res("glob-zero certificates span {N31, Im Phi2, Im Psi3, N20 + Phi2}",
                span_ok and certs and false_ok, f"rank={rk} certs={certs} others-rejected={false_ok}")


# -- algebra ----------------------------------------------------------------------

@check("algebra", 4)
def pd_u_u():
    u = valuations.Valuation.u_lambda("S6")
    alg = valuations.pd(u, u)
    forms = valuations.pd_via_forms(u, u)
    want = 18 * LAMBDA / PI ** 3
    return _res("pd(u, u) = 18 lambda / pi^3 by both routes", alg == want and forms == want,
                f"algebraic={alg} forms={forms}")


def printed_pkf_s6():
    lam, pi = LAMBDA, PI
    o = SymTensor.odot
    terms = [
        o("mu63", "mu00", 2), o("mu52", "mu10", q(32, 15) / pi), o("mu41", "mu20", q(5, 12)),
        o("mu41", "mu21", q(1, 3)), o("mu42", "mu20", q(1, 3)), o("mu42", "mu21", q(2, 3)),
        o("mu30", "mu30", q(2, 3) / pi), o("mu30", "mu31", q(8, 9) / pi), o("mu31", "mu31", q(16, 27) / pi),
        o("phi3", "phib3", q(-2, 15) / pi),
        o("mu63", Combo({"mu20": 1, "mu21": 1}), lam / pi),
        o("mu52", Combo({"mu30": 1, "mu31": 1}), 32 * lam / (15 * pi ** 2)),
        o("mu41", "mu41", 7 * lam / (24 * pi)), o("mu41", "mu42", 2 * lam / (3 * pi)),
        o("mu42", "mu42", lam / (6 * pi)),
        o("mu63", Combo({"mu41": 1, "mu42": 1}), 3 * lam ** 2 / (2 * pi ** 2)),
        o("mu52", "mu52", 32 * lam ** 2 / (15 * pi ** 3)), o("mu63", "mu63", 15 * lam ** 3 / (8 * pi ** 3)),
    ]
    out = SymTensor()
    for t in terms:
        out = out + t
    return out


@check("algebra", 5)
def pkf_s6():
    k = valuations.kinematic_chi("S6")
    printed = printed_pkf_s6()
    ok = k == printed and len(k) == 21
    spot = k["phi3", "phib3"] == q(-2, 15) / PI and k["mu63", "mu63"] == 15 * LAMBDA ** 3 / (8 * PI ** 3)
    return _res("S^6 pkf = inverse pairing (21 terms)", ok and spot, f"terms={len(k)}")


@check("algebra", 8)
def restriction_s7():
    table = measures.restriction_table()
    bad = [lab for lab in table if measures.restrict_computed(lab) != table[lab]]
    kern = measures.restriction_kernel()
    kern_ok = len(kern) == 1 and kern[0] == Combo.of("Delta7")
    comm = []
    for lab in table:
        lhs = valuations.restrict_valuation(measures.globalize(lab, "S7"))
        rhs = measures.globalize(table[lab], "S6")
        if lhs != rhs:
            comm.append(lab)
    return _res("restriction: stored = fiber integral, kernel = Delta7, r glob = glob i*",
                not bad and kern_ok and not comm, f"mismatch={bad} kernel={kern} noncommuting={comm}")


@check("algebra", 9)
def s7_algebra():
    V = valuations.Valuation
    t, u = V.t_lambda("S7"), V.u_lambda("S7")
    zero = V("S7")
    rel = {
        "t^2 u": t * t * u == zero,
        "u^2 + t^6": u * u + t ** 6 == zero,
        "t^7 != 0": bool(t ** 7),
        "t^8": t ** 8 == zero,
    }
    nu3, nu4 = V.from_mu("S7", "nu3"), V.from_mu("S7", "nu4")
    rel["pd(nu3, nu4) = 512"] = valuations.pd(nu3, nu4) == 512
    want = Combo.of("mu7", -768 / PI ** 4)
    # route 1: ring arithmetic; route 2: by hand from t nu3 = -3/8 nu4 and nu3 nu4 = 512 mu7
    by_ring = (u * (t * u)).mu()
    by_hand = Combo.of("mu7", (2 / PI ** 2) * (2 / PI ** 2) * q(-3, 8) * 512)
    rel["u (t u) = -768/pi^4 mu7"] = by_ring == want and by_hand == want
    k = valuations.kinematic_chi("S7") - valuations.so_block_inverse("S7")
    rel["pkf nu-block"] = k == SymTensor.odot("nu3", "nu4", q(1, 256))
    rel["chi(S6) = 2"] = valuations.eval_on_sphere(V.chi("S6")) == 2
    rel["chi(S7) = 0"] = valuations.eval_on_sphere(V.chi("S7")) == 0
    bad = [k for k, v in rel.items() if not v]
    return _res("S^7 algebra relations, pd and pkf", not bad, f"failing: {bad}")


@check("algebra", 13)
def flat_limit():
    """Specialization at lambda = 0 of globalization, products, kernels and pkf."""
    bad = []
    zero_s6 = {"N10", "N20", "N31", "Phi2", "Phib2", "Psi2", "Psib2", "Psi3", "Psib3"}
    for lab in measures.su3_basis():
        g0 = measures.globalize(lab, "S6").substitute_s(0)
        if (lab in zero_s6) == bool(g0):
            bad.append(("glob0", lab))
    for lab in measures.g2_basis():
        g0 = measures.globalize(lab, "S7").substitute_s(0)
        want_zero = lab == "N2"
        if want_zero == bool(g0):
            bad.append(("glob0", lab))
    if measures.globalize(measures.imag_part("Phi"), "S7").substitute_s(0):
        bad.append(("glob0", "ImPhi"))
    # tau_k = t^k at lambda = 0
    for k in range(7):
        tk = valuations.t_lambda_power("S6", k).substitute_s(0)
        tau = Combo({f"mu{k}{qq}": factorial(k) * unit_ball_volume(k) / PI ** k
                     for qq in range(max(0, k - 3), k // 2 + 1)})
        if tk != tau:
            bad.append(("tau", k))
    # S^6 product relations hold identically, hence at lambda = 0
    V = valuations.Valuation
    t, u = V.t_lambda("S6"), V.u_lambda("S6")
    p3, pb3 = V.from_mu("S6", "phi3"), V.from_mu("S6", "phib3")
    for name, val in (("phi3^2", p3 * p3), ("t phi3", t * p3), ("u phi3", u * p3),
                      ("phi3 phib3 + pi^4/8 t^6", p3 * pb3 + (t ** 6).scale(PI ** 4 / 8))):
        if val.mu().substitute_s(0):
            bad.append(("product", name))
    # pkf: lambda-free parts survive, corrections vanish
    k6 = valuations.kinematic_chi("S6").substitute_s(0)
    flat = SymTensor({key: v for key, v in printed_pkf_s6().terms.items()
                      if not any(b for (_, b) in v.terms())})
    if k6 != flat:
        bad.append(("pkf", "S6"))
    k7 = (valuations.kinematic_chi("S7") - valuations.so_block_inverse("S7")).substitute_s(0)
    if k7 != SymTensor.odot("nu3", "nu4", q(1, 256)):
        bad.append(("pkf", "S7"))
    # restriction commutes at lambda = 0
    for lab, img in measures.restriction_table().items():
        lhs = valuations.restrict_valuation(measures.globalize(lab, "S7")).substitute_s(0)
        if lhs != measures.globalize(img, "S6").substitute_s(0):
            bad.append(("restrict", lab))
    return _res("lambda = 0 specialization", not bad, f"failing: {bad}")


# -- local --------------------------------------------------------------------------

@check("local", 10, 11)
def local_formulas(external_path=None):
    res = local_kinematics.run_checks(external_path)
    bad = [r.name for r in res if r.status == "FAIL"]
    skipped = [r.name for r in res if r.status == "SKIPPED"]
    return _res("local and semi-local formulas", not bad, f"failing: {bad} skipped: {skipped}")


# -- integrals ---------------------------------------------------------------------

@check("integrals", 7)
def ball_values():
    printed = integrals.printed_ball_values()
    bad = [lab for lab, v in printed.items() if integrals.ball_evaluation(lab) != v]
    s4 = integrals.sphere4_values()
    s4_ok = s4 == {"Delta41": 32 * PI ** 2 / (15 * LAMBDA ** 2), "Delta42": 8 * PI ** 2 / (15 * LAMBDA ** 2)}
    return _res("eight ball formulas and the S^4 values", not bad and s4_ok, f"failing: {bad} S4: {s4}")


@check("integrals", 6)
def kernel_relations_by_balls():
    res = integrals.kernel_consistency()
    bad = [r.name for r in res if not r.passed]
    return _res("kernel relations as trig identities", not bad, f"failing: {bad}")


@check("integrals", 12)
def application_bounds():
    b6, b7 = integrals.application_bounds()
    ok = (b6.lower, b6.upper) == (4 / (9 * PI), 4 / (5 * PI)) and (b7.lower, b7.upper) == (q(15, 128), q(5, 32))
    return _res("application bounds", ok, f"S6 ({b6.lower}, {b6.upper}) S7 ({b7.lower}, {b7.upper})")


@check("integrals", 7)
def antiderivatives():
    from .trig import TrigPoly
    bad = []
    for a in range(6):
        for b in range(6):
            f = TrigPoly.sin("x") ** a * TrigPoly.cos("x") ** b
            try:
                F = f.integrate("x", "y", "x")
            except ValueError:
                continue
            if F.derivative("x") != f:
                bad.append((a, b))
    return _res("d/dx of antiderivatives", not bad, str(bad))


# -- running -------------------------------------------------------------------------

def _call(c, external_path):
    if "external_path" in inspect.signature(c.fn).parameters:
        return c.fn(external_path=external_path)
    return c.fn()


def run(suite="all", external_path=None):
    """Run every check of a suite; ``external_path`` reaches the checks that use external tables."""
    return [_call(c, external_path) for c in REGISTRY if suite in ("all", c.suite)]


def run_criterion(n):
    return [c.fn() for c in REGISTRY if n in c.criteria]

