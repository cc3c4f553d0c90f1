"""Character tables, module decompositions, and the discriminant property.

The stored character tables pass exact orthogonality in quadratic-field
arithmetic; inverting them on the coefficient tables produces nonnegative
integer multiplicities whose structure tracks the discriminants of the
exponents: irrational character fields, Frobenius-Schur zeros, minimal
rows splitting as dual pairs, and the doublet dichotomy.
"""
from moonshine.reps import (character_table, coefficient_row, decompose,
                            discriminant_report, minimal_lambda_rows,
                            type_n_inventory, validate_table)

print("Exact orthogonality for all six stored tables:")
for ell in (2, 3, 4, 5, 7, 13):
    rep = validate_table(ell)
    print(f"  lambency {ell:>2}: order {rep['order']:>9}, "
          f"{rep['classes']} classes, FS-zero characters {rep['fs_zero']}")

print("\nDecomposing the first coefficient rows at lambency 2:")
for key in (-1, 7, 15, 23, 31):
    got = decompose(2, 1, key, coefficient_row(2, 1, key))
    nz = {i + 1: int(c) for i, c in enumerate(got.counts) if c}
    print(f"  row {key:>3}: " + " + ".join(f"{v}*chi_{k}" for k, v in nz.items()))

print("\nIrreducible pairs defined over imaginary quadratic fields:")
for ell in (2, 3, 4, 5, 7, 13):
    inv = type_n_inventory(ell)
    print(f"  lambency {ell:>2}: types {sorted(inv['types'])}, pairs {inv['pairs']}")

print("\nAt the smallest discriminant of each type the module is exactly one")
print("dual pair with multiplicity one:")
for n, info in minimal_lambda_rows(2).items():
    print(f"  type {n:>2}: row {info['fourld']:>3} -> "
          + " + ".join(f"chi_{k}" for k in sorted(info["counts"])))

print("\nFull discriminant suite (types, FS matching, minimal rows, doublets):")
for ell in (2, 3, 4, 5, 7, 13):
    rep = discriminant_report(ell)
    print(f"  lambency {ell:>2}: {'pass' if rep['ok'] else 'FAIL'} "
          f"({rep['doublet_rows']} rows in the doublet dichotomy)")
