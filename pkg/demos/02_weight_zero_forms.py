"""The weight-0 weak Jacobi forms and the six distinguished extremal ones.

The basis forms phi^(m)_n are built from the three theta-quotient generators
by the standard recursion scheme; the distinguished Z^(l) = 2 phi^(l)_1 exist
exactly for l - 1 dividing 12, and the library verifies both the extremal
structure and the vanishing of candidate spaces at indices 8 and 24.
"""
from moonshine.jacobi import (extremal_space_dim, gritsenko,
                              leading_row_relation, umbral_Z, verify_extremal,
                              zeta_form)

print("Leading rows of the generators (q^0 coefficients of y^k):")
for m in (2, 3, 4):
    phi = gritsenko(m, 1, 3)
    row = {int(y): c for qe, y, c in phi.items() if qe == 0}
    print(f"  phi^({m})_1 : {dict(sorted(row.items()))}")

print("\nEvery phi^(m)_1 for 2 <= m <= 25 satisfies the linear relation")
print("(m-1)(a+2b) = 12b forced on leading rows by the empty weight-2 space:")
print("  holds for all m:", all(leading_row_relation(gritsenko(m, 1, 3), m)
                                for m in range(2, 26)))

print("\nThe six distinguished forms specialize at z = 0 to 24/(l-1):")
for ell in (2, 3, 4, 5, 7, 13):
    z0 = umbral_Z(ell, 3).specialize_z0()
    print(f"  Z^({ell})(t, 0) = {z0.coefficient(0)}")

print("\nExtremal structure of the attached vectors (single polar term -2):")
for ell in (2, 3, 4, 5, 7, 13):
    print(f"  lambency {ell:>2}: {'pass' if verify_extremal(ell)['ok'] else 'FAIL'}")

print("\nThe cusp-ideal generator theta_1^12/eta^12 has an empty q^0 row:")
z = zeta_form(3)
print("  lowest q-order of zeta:", min(qe for qe, _, _ in z.items()))

print("\nAt the two remaining candidate indices the space of extremal forms")
print("vanishes (exact nullity of the coefficient constraint system):")
for m in (9, 25):
    print(f"  index {m - 1}: dimension {extremal_space_dim(m)}")
