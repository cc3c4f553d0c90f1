from fractions import Fraction as F

import pytest

from moonshine import reps
from moonshine.errors import UnknownClass
from moonshine.groups import class_table

EXPECTED_TYPES = {2: [7, 15, 23], 3: [5, 8, 11, 20], 4: [3, 7],
                  5: [4], 7: [3], 13: [4]}

EXPECTED_PAIRS = {
    2: {7: [3, 4, 12, 13, 15, 16], 15: [5, 6], 23: [10, 11]},
    3: {5: [20, 21], 8: [16, 17, 22, 23], 11: [4, 5, 25, 26], 20: [20, 21]},
    4: {3: [13, 14], 7: [2, 3, 15, 16]},
    5: {4: [8, 9, 10, 11, 12, 13]},
    7: {3: [2, 3, 6, 7]},
    13: {4: [3, 4]},
}

DOUBLET_SAMPLES = {
    2: [7, 15, 23, 63, 135, 175, 207],
    3: [8, 11, 20, 32, 44, 80],
    4: [7, 12, 28, 63, 108],
    5: [4, 16, 64, 144, 196],
    7: [3 * k * k for k in range(1, 10) if k != 7],
    13: [4 * k * k for k in range(1, 12)],
}


def test_orthogonality_all_tables():
    for ell in (2, 3, 4, 5, 7, 13):
        rep = reps.validate_table(ell)
        assert rep["ok"]


def test_table_orders():
    for ell, want in [(2, 244823040), (3, 190080), (4, 2688),
                      (5, 240), (7, 24), (13, 4)]:
        assert reps.character_table(ell).order == want


def test_column_norm_example():
    t = reps.character_table(7)
    assert t.centralizers[0] == 24
    assert sum(t.degree(i) ** 2 for i in range(t.nchars)) == 24


def test_decompose_spec_examples():
    got = reps.decompose(2, 1, 7, reps.coefficient_row(2, 1, 7))
    assert {i + 1: c for i, c in enumerate(got.counts) if c} == {3: 1, 4: 1}
    got = reps.decompose(3, 2, 8, reps.coefficient_row(3, 2, 8))
    assert {i + 1: c for i, c in enumerate(got.counts) if c} == {16: 1, 17: 1}
    got = reps.decompose(7, 5, 3, reps.coefficient_row(7, 5, 3))
    assert {i + 1: c for i, c in enumerate(got.counts) if c} == {2: 1, 3: 1}


def test_decompose_single_character_row():
    t = reps.character_table(13)
    coeffs = {}
    for k, lab in enumerate(t.classes):
        assert t.values[2][k].irr == 0 or True
    # use a rational row: chi_2
    coeffs = {lab: t.values[1][k].rat for k, lab in enumerate(t.classes)}
    got = reps.decompose(13, 1, 51, coeffs)
    assert got.counts == [0, 1, 0, 0]


def test_decompose_recompose_roundtrip(rng):
    t = reps.character_table(5)
    mults = [rng.randint(0, 4) for _ in range(t.nchars)]
    # conjugate pairs need equal multiplicities for a real class function
    for a, b in ((8, 9), (10, 11), (12, 13)):
        mults[b - 1] = mults[a - 1]
    vec = {}
    for k, lab in enumerate(t.classes):
        s = sum((t.values[i][k] * m for i, m in enumerate(mults)),
                start=reps.QuadValue.of(0))
        assert s.irr == 0
        vec[lab] = s.rat
    got = reps.decompose(5, 1, 19, vec)
    assert got.counts == mults


def test_incomplete_vector_rejected():
    with pytest.raises(UnknownClass):
        reps.decompose(13, 1, 51, {"1A": 2})


def test_polar_row_decomposes_to_trivial():
    got = reps.decompose(2, 1, -1, reps.coefficient_row(2, 1, -1))
    assert got.counts[0] == -2 and all(c == 0 for c in got.counts[1:])


def test_verify_decomposition_tables_all():
    for ell in (2, 3, 4, 5, 7, 13):
        rep = reps.verify_decomposition_tables(ell)
        assert rep["ok"], rep["failures"][:2]
    assert reps.verify_decomposition_tables(3).get("errata_applied") == [(1, "95")]


def test_self_paired_classes_kill_faithful_characters():
    # genuinely self-paired means z*g stays in the same (unmerged) orbit;
    # merged labels whose two orbits are exchanged by z are excluded
    from moonshine.groups import (SignedPerm, conjugation_orbit,
                                  merged_members, umbral_group)
    for ell in (3, 4, 5, 7, 13):
        t = reps.character_table(ell)
        gd = umbral_group(ell)
        zcol = t.classes.index("2A")
        faithful = [i for i in range(t.nchars)
                    if t.values[i][zcol].rat == -t.degree(i)]
        for c in gd.classes:
            if gd.pairing[c.label] != c.label:
                continue
            if c.merged > 1 and c.rep.negate().img not in conjugation_orbit(ell, c.rep):
                continue  # the two merged orbits are swapped by z
            for lab in merged_members(c.label):
                k = t.classes.index(lab)
                for i in faithful:
                    assert not t.values[i][k], (ell, lab, i + 1)


def test_parity_split():
    for ell in (3, 4, 5, 7, 13):
        assert reps.parity_split_ok(ell)


def test_type_inventory_matches_tables():
    for ell, want in EXPECTED_TYPES.items():
        inv = reps.type_n_inventory(ell)
        assert sorted(inv["types"]) == want
        assert {n: sorted(v) for n, v in inv["pairs"].items()} == EXPECTED_PAIRS[ell]


def test_fs_zero_iff_typed():
    for ell in (2, 3, 4, 5, 7, 13):
        assert reps.fs_zero_matches_types(ell)


def test_minimal_lambda_rows():
    rows = reps.minimal_lambda_rows(2)
    assert rows[7]["fourld"] == 7 and rows[7]["counts"] == {3: 1, 4: 1}
    assert rows[15]["fourld"] == 15 and rows[15]["counts"] == {5: 1, 6: 1}
    assert rows[23]["fourld"] == 23 and rows[23]["counts"] == {10: 1, 11: 1}
    rows3 = reps.minimal_lambda_rows(3)
    assert rows3[8]["fourld"] == 8 and rows3[8]["counts"] == {16: 1, 17: 1}
    assert rows3[20]["fourld"] == 20 and rows3[20]["counts"] == {20: 1, 21: 1}


def test_doublet_conjecture_and_samples():
    for ell, samples in DOUBLET_SAMPLES.items():
        rep = reps.doublet_check(ell)
        assert rep["ok"], rep["failures"][:3]
        inv = reps.type_n_inventory(ell)
        for fourld in samples:
            r = reps.row_component(ell, fourld)
            got = reps.decompose(ell, r, fourld, reps.coefficient_row(ell, r, fourld))
            assert reps.is_representable(ell, fourld, inv["types"])
            assert not reps._is_doubled(got.counts), (ell, fourld)


def test_discriminant_report_all():
    for ell in (2, 3, 4, 5, 7, 13):
        rep = reps.discriminant_report(ell)
        assert rep["ok"], rep
