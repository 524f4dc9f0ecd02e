#!/usr/bin/env python3
"""Print the constants that are derived rather than stored.

Each value is recomputed from the stored tables; none of them is typed in.
"""

from g2spheres import integrals, local_kinematics, valuations


def main():
    u = valuations.Valuation.u_lambda("S6")
    print("pd(u, u), algebraic  :", valuations.pd(u, u))
    print("pd(u, u), via forms  :", valuations.pd_via_forms(u, u))
    k7 = valuations.kinematic_chi("S7") - valuations.so_block_inverse("S7")
    print("S7 nu-block of k(chi):", k7[("nu3", "nu4")])
    print("Psi3.Delta52 in K(Psi2)   :", local_kinematics.derive_psi2_coefficient())
    print("Psi3.Psib3 in K(Delta00)  :", local_kinematics.derive_psi3_correction())
    for b in integrals.application_bounds():
        print(f"{b.space} bounds: [{b.lower}, {b.upper}{')' if b.upper_strict else ']'}  integrand {b.integrand}")
    s4 = integrals.sphere4_values()
    for lab, v in s4.items():
        print(f"[{lab}](S^4) =", v)


if __name__ == "__main__":
    main()
