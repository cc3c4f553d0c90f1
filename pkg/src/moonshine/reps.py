"""Character tables, module decompositions, and the discriminant checks.

The six character tables are stored data validated by exact orthogonality;
coefficient vectors (one integer per conjugacy class) are decomposed into
irreducibles by character inversion over the quadratic fields involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import QuadValue, as_rat, squarefree_part
from .data import load_json
from .errors import DataCorrupt, UnknownClass
from .groups import class_table, merged_members

LAMBENCIES = (2, 3, 4, 5, 7, 13)


@dataclass
class CharacterTable:
    lambency: int
    order: int
    classes: list           # unmerged labels, character-table column order
    centralizers: list      # |C(g)| per column
    power_maps: dict        # str(p) -> [labels]
    fs: list                # Frobenius-Schur indicators per irreducible
    values: list            # values[i][k]: QuadValue of chi_{i+1} at column k

    def value(self, i: int, label: str) -> QuadValue:
        return self.values[i][self.classes.index(label)]

    def degree(self, i: int) -> int:
        return int(self.values[i][0].rat)

    @property
    def nchars(self) -> int:
        return len(self.values)


_cache: dict = {}


def character_table(ell: int) -> CharacterTable:
    if ell not in _cache:
        d = load_json(f"chartab_{ell}.json")
        values = [[QuadValue(Fraction(v["rat"]), Fraction(v["irr"]), v["disc"])
                   for v in row] for row in d["values"]]
        _cache[ell] = CharacterTable(ell, d["order"], d["classes"], d["centralizers"],
                                     d["power_maps"], d["fs"], values)
    return _cache[ell]


def validate_table(ell: int) -> dict:
    """Exact row/column orthogonality plus power-map sanity."""
    t = character_table(ell)
    n = len(t.classes)
    report = {"lambency": ell, "order": t.order, "classes": n, "ok": True}
    if len(t.values) != n:
        raise DataCorrupt(f"table {ell} not square")
    # column norms reproduce the stored centralizer orders
    for k in range(n):
        s = QuadValue.of(0)
        for i in range(n):
            s = s + t.values[i][k] * t.values[i][k].conj()
        if not (s.irr == 0 and s.rat == t.centralizers[k]):
            raise DataCorrupt(f"column norm at {t.classes[k]}: {s}")
    if sum(Fraction(t.order, c) for c in t.centralizers) != t.order:
        raise DataCorrupt("class equation broken")
    # row orthogonality
    for i in range(n):
        for j in range(i, n):
            s = QuadValue.of(0)
            for k in range(n):
                s = s + t.values[i][k] * t.values[j][k].conj() * QuadValue.of(
                    Fraction(1, t.centralizers[k]))
            want = 1 if i == j else 0
            if not (s.irr == 0 and s.rat == want):
                raise DataCorrupt(f"row orthogonality ({i + 1},{j + 1}): {s}")
    # power maps permute the class labels consistently
    for p, labels in t.power_maps.items():
        if sorted(set(labels)) != sorted(set(labels)) or len(labels) != n:
            raise DataCorrupt(f"power map {p} malformed")
        for lab in labels:
            if lab not in t.classes:
                raise DataCorrupt(f"power map {p} hits unknown {lab}")
    report["fs_zero"] = [i + 1 for i, v in enumerate(t.fs) if v == 0]
    return report


@dataclass
class Multiplicities:
    lambency: int
    r: int
    fourld: int
    counts: list             # per irreducible, exact rationals
    integral: bool
    nonnegative: bool

    def as_ints(self) -> list:
        return [int(c) for c in self.counts]


def decompose(ell: int, r: int, fourld: int, coefficients: dict) -> Multiplicities:
    """Invert the character table on a class function.

    ``coefficients`` maps merged class labels to exact values; merged labels
    are expanded by duplication onto their character-table columns.
    m_i = sum_K conj(chi_i(K)) c_K / |C(K)|.
    """
    t = character_table(ell)
    by_col = {}
    for lab, c in coefficients.items():
        for member in merged_members(lab):
            if member not in t.classes:
                raise UnknownClass(f"{member} not a class at lambency {ell}")
            by_col[member] = c
    if len(by_col) != len(t.classes):
        missing = set(t.classes) - set(by_col)
        raise UnknownClass(f"coefficient vector incomplete: missing {sorted(missing)}")
    counts = []
    for i in range(t.nchars):
        s = QuadValue.of(0)
        for k, lab in enumerate(t.classes):
            s = s + t.values[i][k].conj() * QuadValue.of(
                as_rat(by_col[lab]) / t.centralizers[k])
        if s.irr != 0:
            raise DataCorrupt(f"non-real multiplicity for chi_{i + 1}")
        counts.append(s.rat)
    integral = all(c.denominator == 1 for c in counts)
    nonneg = all(c >= 0 for c in counts)
    return Multiplicities(ell, r, fourld, counts, integral, nonneg)


def recompose(ell: int, mults: Multiplicities) -> dict:
    """Class function from multiplicities (round-trip partner of decompose)."""
    t = character_table(ell)
    out = {}
    for k, lab in enumerate(t.classes):
        s = QuadValue.of(0)
        for i, m in enumerate(mults.counts):
            s = s + t.values[i][k] * QuadValue.of(m)
        if s.irr != 0:
            raise DataCorrupt(f"non-real recomposition at {lab}")
        out[lab] = s.rat
    return out


# ---------------------------------------------------------------------------
# stored-table verification
#
# The bundled tables are shipped exactly as printed in their source; the two
# entries below are documented errata whose corrections are forced by
# internal consistency (each is reproduced independently by the computation
# pipelines and by the parity constraints of the doublet property).  Raw
# values remain available with corrected=False.

MT_ERRATA = {
    # (lambency, r, 4ld, class): corrected value
    (4, 3, 599, "6BC"): 4,
}

DEC_ERRATA = {
    # (lambency, r, 4ld): corrected {chi index: multiplicity}
    (3, 1, 95): {2: 2, 6: 4, 7: 4, 8: 8, 9: 6, 10: 8, 11: 6, 12: 10,
                 13: 12, 14: 14, 15: 18},
}


def coefficient_row(ell: int, r: int, fourld: int, corrected: bool = True) -> dict:
    """Row of the stored coefficient table as {merged label: integer}."""
    tab = load_json(f"mt_{ell}_{r}.json")
    key = str(fourld)
    if key not in tab["rows"]:
        raise UnknownClass(f"row {fourld} not stored for ({ell},{r})")
    row = dict(zip(tab["classes"], tab["rows"][key]))
    if corrected:
        for (l2, r2, k2, lab), v in MT_ERRATA.items():
            if (l2, r2, k2) == (ell, r, fourld):
                row[lab] = v
    return row


def row_component(ell: int, fourld: int) -> int:
    for r in range(1, ell):
        if (fourld + r * r) % (4 * ell) == 0:
            return r
    raise UnknownClass(f"row {fourld} off the lambency-{ell} lattice")


def verify_decomposition_tables(ell: int) -> dict:
    """Reproduce every stored decomposition row from the coefficient tables."""
    report = {"lambency": ell, "rows": 0, "failures": [], "ok": True}
    for r in range(1, ell):
        try:
            dec = load_json(f"dec_{ell}_{r}.json")
        except FileNotFoundError:
            continue
        for key, mults in dec["rows"].items():
            coeffs = coefficient_row(ell, r, int(key))
            got = decompose(ell, r, int(key), coeffs)
            expected = {chi: m for chi, m in zip(dec["chis"], mults) if m}
            if (ell, r, int(key)) in DEC_ERRATA:
                expected = DEC_ERRATA[(ell, r, int(key))]
                report.setdefault("errata_applied", []).append((r, key))
            full = {i + 1: c for i, c in enumerate(got.counts) if c != 0}
            report["rows"] += 1
            if not got.integral or full != expected:
                report["failures"].append((r, key, full, expected))
    report["ok"] = not report["failures"]
    return report


def parity_split_ok(ell: int, depth_rows: int = 10) -> bool:
    """Odd r rows use only z-trivial irreducibles, even r only faithful ones."""
    if ell == 2:
        return True
    t = character_table(ell)
    zcol = t.classes.index("2A")
    faithful = [i for i in range(t.nchars)
                if t.values[i][zcol].rat == -t.degree(i)]
    for r in range(1, ell):
        tab = load_json(f"mt_{ell}_{r}.json")
        for key in sorted(tab["rows"], key=int)[:depth_rows]:
            if int(key) < 0:
                continue
            got = decompose(ell, r, int(key), coefficient_row(ell, r, int(key)))
            for i, c in enumerate(got.counts):
                if c == 0:
                    continue
                if (i in faithful) == (r % 2 == 1):
                    return False
    return True


# ---------------------------------------------------------------------------
# discriminants

def h_discriminants(ell: int) -> set:
    """Positive integers -D with q^(-D/4l) present in the stored identity
    columns (D < 0 a discriminant of the untwisted vector)."""
    out = set()
    for r in range(1, ell):
        tab = load_json(f"mt_{ell}_{r}.json")
        col = tab["classes"].index("1A")
        for key, vals in tab["rows"].items():
            if int(key) > 0 and vals[col] != 0:
                out.add(int(key))
    return out


def type_n_inventory(ell: int) -> dict:
    """The integers n passing the two discriminant conditions, with the
    irreducible pairs whose character fields are Q(sqrt(-n)).

    Fields match up to square factors (type 8 lives in Q(sqrt(-2)), type 20
    in Q(sqrt(-5))), so pairs are grouped by the squarefree kernel.
    """
    t = character_table(ell)
    gd = class_table(ell)
    orders = set()
    for c in gd.classes:
        for d in range(2, c.order + 1):
            if c.order % d == 0:
                orders.add(d)
    discs = h_discriminants(ell)
    ns = set()
    for n in sorted(orders):
        lam = 1
        while n * lam * lam <= max(discs):
            if n * lam * lam in discs and _coprime(lam, n):
                ns.add(n)
                break
            lam += 1
    by_field = {}
    for i in range(t.nchars):
        ds = {squarefree_part(-v.disc)[0] for v in t.values[i] if v.irr != 0}
        if not ds:
            continue
        assert len(ds) == 1
        by_field.setdefault(next(iter(ds)), []).append(i + 1)
    pairs = {n: sorted(by_field.get(squarefree_part(n)[0], [])) for n in ns}
    return {"types": ns, "pairs": pairs, "by_field": by_field}


def _coprime(a, b):
    from math import gcd
    return gcd(a, b) == 1


def minimal_lambda_rows(ell: int) -> dict:
    """For each type n: the smallest lambda with -D = -n lambda^2 a
    discriminant, and the decomposition at that row."""
    inv = type_n_inventory(ell)
    discs = h_discriminants(ell)
    out = {}
    for n in sorted(inv["types"]):
        lam = 1
        while n * lam * lam not in discs:
            lam += 1
        fourld = n * lam * lam
        r = row_component(ell, fourld)
        got = decompose(ell, r, fourld, coefficient_row(ell, r, fourld))
        nonzero = {i + 1: c for i, c in enumerate(got.counts) if c != 0}
        out[n] = {"lambda": lam, "fourld": fourld, "r": r, "counts": nonzero}
    return out


def is_representable(ell: int, fourld: int, types) -> bool:
    for n in types:
        lam = 1
        while n * lam * lam <= fourld:
            if n * lam * lam == fourld:
                return True
            lam += 1
    return False


def doublet_check(ell: int) -> dict:
    """Doublet <=> -D not of the form -n lambda^2, over the stored rows."""
    inv = type_n_inventory(ell)
    types = inv["types"]
    report = {"lambency": ell, "rows": 0, "failures": [], "ok": True}
    for r in range(1, ell):
        tab = load_json(f"mt_{ell}_{r}.json")
        for key in tab["rows"]:
            fourld = int(key)
            if fourld <= 0:
                continue
            got = decompose(ell, r, fourld, coefficient_row(ell, r, fourld))
            if not got.integral:
                report["failures"].append((r, fourld, "non-integral"))
                continue
            halves = all(Fraction(c, 2).denominator == 1 for c in got.counts)
            # doublet: two copies of a single irreducible -- equivalently all
            # multiplicities even AND the halved vector is a single module...
            # the conjecture's usable form: representable <=> NOT doublet.
            doublet = halves and _is_doubled(got.counts)
            rep = is_representable(ell, fourld, types)
            report["rows"] += 1
            if doublet == rep:
                report["failures"].append((r, fourld, "doublet" if doublet else "single",
                                           "representable" if rep else "not"))
    report["ok"] = not report["failures"]
    return report


def _is_doubled(counts) -> bool:
    return all(c % 2 == 0 for c in counts)


def fs_zero_matches_types(ell: int) -> bool:
    """FS indicator 0 exactly on the type-n (irrational) irreducibles."""
    t = character_table(ell)
    inv = type_n_inventory(ell)
    typed = {i for pair in inv["pairs"].values() for i in pair}
    for i in range(t.nchars):
        irrational = any(v.irr != 0 for v in t.values[i])
        if (t.fs[i] == 0) != irrational:
            return False
        if irrational and (i + 1) not in typed:
            return False
    return True


def is_dual_pair(ell: int, i: int, j: int) -> bool:
    """chi_i and chi_j (1-based) are complex conjugates row-wise."""
    t = character_table(ell)
    return all(a == b.conj() for a, b in zip(t.values[i - 1], t.values[j - 1]))


def discriminant_report(ell: int) -> dict:
    """The four-part discriminant suite for one lambency: type inventory,
    FS-zero matching, minimal-discriminant rows, and the doublet property."""
    inv = type_n_inventory(ell)
    minimal = minimal_lambda_rows(ell)
    min_ok = True
    for n, info in minimal.items():
        pair = sorted(info["counts"])
        ok = (len(pair) == 2
              and all(v == 1 for v in info["counts"].values())
              and set(pair).issubset(set(inv["pairs"].get(n, [])))
              and is_dual_pair(ell, pair[0], pair[1]))
        if not ok:
            min_ok = False
    dbl = doublet_check(ell)
    return {
        "lambency": ell,
        "types": sorted(inv["types"]),
        "pairs": inv["pairs"],
        "fs_matches": fs_zero_matches_types(ell),
        "minimal_rows": minimal,
        "minimal_ok": min_ok,
        "doublet_ok": dbl["ok"],
        "doublet_rows": dbl["rows"],
        "ok": fs_zero_matches_types(ell) and min_ok and dbl["ok"],
    }
