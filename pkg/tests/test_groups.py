import pytest

from moonshine import groups as gr
from moonshine.errors import ClosureOverflow, UnknownClass

EXPECTED_ORDERS = {3: 190080, 4: 2688, 5: 240, 7: 24, 13: 4}


@pytest.fixture(scope="module")
def generated():
    return {ell: gr.umbral_group(ell) for ell in (3, 4, 5, 7, 13)}


def test_orders_and_class_counts(generated):
    for ell, want in EXPECTED_ORDERS.items():
        gd = generated[ell]
        assert gd.order == want
        assert sum(c.size for c in gd.classes) == want
    assert len(generated[3].classes) == 21
    assert len(generated[13].classes) == 3
    # merged labels expand to the full character-table class counts
    assert generated[3].orbit_count == 26
    assert generated[4].orbit_count == 16
    assert generated[5].orbit_count == 14
    assert generated[7].orbit_count == 7
    assert generated[13].orbit_count == 4


def test_signed_perm_composition_convention():
    # (sigma tau)(e_i) = sigma(tau(e_i))
    s = gr.SignedPerm.from_map(3, {0: (1, -1)})
    t = gr.SignedPerm.from_map(3, {1: (2, 1), 2: (1, 1)})
    st = s * t
    # e_2 -> t -> e_1 -> s -> e_1 (fixed by s)... then check e_1 -> e_2
    assert st.img[1] == (2 << 1)
    assert st.img[0] == (1 << 1) | 1


def test_sample_frame_shapes():
    # the degree 12 generator (inf 6)(2bar Xbar)(3 5)(7bar 8bar)
    sigma = gr.generators(3)[0]
    pi, pibar, total = gr.frame_shapes(sigma)
    assert pi == {1: 4, 2: 4}
    assert pibar == {1: 4, 2: 4}
    assert gr.euler_chars(sigma) == (4, 4)


def test_central_element_shapes():
    z = gr.SignedPerm.identity(12).negate()
    pi, pibar, total = gr.frame_shapes(z)
    assert pi == {2: 12, 1: -12}
    assert pibar == {1: 12}
    assert gr.euler_chars(z) == (-12, 12)


def test_identity_shapes():
    e = gr.SignedPerm.identity(6)
    pi, pibar, _ = gr.frame_shapes(e)
    assert pi == pibar == {1: 6}
    assert gr.euler_chars(e) == (6, 6)


def test_total_frame_is_product(generated):
    # on every class representative, the 2n-point cycle shape equals Pi*Pibar
    for ell in (3, 4, 5, 7, 13):
        for c in generated[ell].classes:
            pi, pibar, total = gr.frame_shapes(c.rep)
            assert gr.total_frame_direct(c.rep) == total
            assert all(v > 0 for v in total.values())


def test_chi_recovered_from_frames(generated):
    for ell in (3, 4, 5, 7, 13):
        for c in generated[ell].classes:
            pi, pibar, _ = gr.frame_shapes(c.rep)
            assert pi.get(1, 0) == c.chi
            assert pibar.get(1, 0) == c.chibar


def test_stored_tables_reproduced(generated):
    for ell in (3, 4, 5, 7, 13):
        stored = gr.class_table(ell)
        gen = generated[ell]
        for a, b in zip(gen.classes, stored.classes):
            assert (a.label, a.gamma, a.chi, a.chibar) == \
                (b.label, b.gamma, b.chi, b.chibar)
            assert (a.pi, a.pibar) == (b.pi, b.pibar)
            assert a.size == b.size
        assert gen.pairing == stored.pairing


def test_gamma_symbol_examples(generated):
    assert generated[3].by_label["4A"].gamma == (2, 8)
    assert gr.class_table(2).by_label["2B"].gamma == (2, 2)
    assert generated[4].by_label["2A"].gamma == (1, 2)
    g4a = generated[3].by_label["4A"].rep
    assert gr.gamma_symbol(g4a, 3) == (2, 8)


def test_power_maps_close(generated):
    # generated representatives reproduce the stored power-map columns
    for ell in (3, 4, 5, 7, 13):
        gd = generated[ell]
        for c in gd.classes:
            for p, want in c.power_map.items():
                powered = c.rep
                for _ in range(p - 1):
                    powered = powered * c.rep
                assert gd.class_of(powered) == want, (ell, c.label, p)


def test_z_pairing_involution(generated):
    for ell in (3, 4, 5, 7, 13):
        pairing = generated[ell].pairing
        assert all(pairing[pairing[lab]] == lab for lab in pairing)


def test_squared_class_sets(generated):
    assert gr.squared_class_set(3, "2B") == \
        {"1A", "2B", "3A", "4C", "5A", "6C", "3B", "4B", "2C"}
    assert gr.squared_class_set(4, "2C") == \
        {"1A", "2C", "3A", "4C", "6A", "4A", "2B", "2A"}
    assert gr.squared_class_set(5, "4AB") == {"2A", "2C", "6A"}
    assert gr.squared_class_set(7, "4A") == {"1A", "4A", "2A"}


def test_shuffle_groups():
    want = {2: 2, 4: 12, 6: 120, 12: 95040}
    for n, order in want.items():
        assert gr.shuffle_group(n) == order


def test_ell4_to_ell2_bridge():
    rep = gr.check_ell4_to_ell2()
    assert rep["ok"]
    assert dict(rep["checked"])["3A"] == "6A"
    assert [e[0] for e in rep["excluded"]] == ["4B"]


def test_m24_class_table():
    gd = gr.class_table(2)
    assert gd.order == 244823040
    assert len(gd.classes) == 21
    assert sum(c.size for c in gd.classes) == gd.order
    assert gd.by_label["2B"].chi == 0
    assert gr.frame_str(gd.by_label["2A"].pi) == "1^8 2^8"


def test_closure_overflow_guard():
    with pytest.raises(ClosureOverflow):
        gr.generate(3, bound=1000)


def test_unknown_class():
    with pytest.raises(UnknownClass):
        gr.squared_class_set(7, "9Z")


def test_order_from_frames_matches_reps(generated):
    for ell in (3, 5, 7):
        for c in generated[ell].classes:
            assert gr.order_from_frames(c.pi, c.pibar) == c.rep.order() == c.order
