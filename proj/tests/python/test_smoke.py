import pytest

import longknot as lk


def test_parse_round_trip():
    d = lk.parse("O1(+)O2(+)U1(+)U2(+)")
    assert d.code == "O1(+)O2(+)U1(+)U2(+)"
    assert d.arrow_count == 2
    assert lk.LongGaussDiagram("O1(+)O2(+)U1(+)U2(+)") == d
    assert lk.LongGaussDiagram().code == ""


def test_bad_code_raises_value_error():
    with pytest.raises(ValueError):
        lk.parse("O1(+)U1(-)")


def test_w_and_powers():
    k = lk.parse("O1(+)O2(+)U1(+)U2(+)")
    assert lk.w(k) == [(1, 2)]
    assert lk.w(lk.power(k, 3)) == [(1, 6)]
    assert lk.w(lk.concatenate(k, lk.inverse(k))) == []


def test_classical_calibration():
    for name in ["unknot", "right_trefoil", "left_trefoil", "figure_eight", "cinquefoil"]:
        k = lk.knot(name)
        assert lk.is_realizable(k)
        c2 = lk.conway_c2(k)
        assert lk.v21(k) == c2 == lk.v22(k)
        assert lk.beta(k) == 0


def test_fly():
    f = lk.knot("fly")
    assert lk.report(f) == {"v21": 0, "v22": -1, "beta": 1, "w": []}
    verdict = lk.verify_certificate(lk.fly_certificate(), ribbon=True)
    assert verdict["accepted"]
    assert verdict["failing_step"] is None
    assert verdict["counts"] == {"births": 0, "saddles": 1, "deaths": 1}


def test_band_pass_pairs_keep_beta():
    for config in range(1, 6):
        for base in range(1, 5):
            for variant in (1, 2):
                before, after, site = lk.band_pass_pair(config, base, variant, extra=3, seed=7)
                assert site.startswith("BandPass ")
                assert lk.beta(before) == lk.beta(after)
                assert lk.apply_move(before, site) == after


def test_moves_and_search():
    kink = lk.parse("O1(+)U1(+)")
    assert lk.enumerate_moves(kink, ["R1_remove"]) == ["R1_remove arrow=1"]
    assert lk.apply_move(kink, "R1_remove arrow=1").code == ""
    assert lk.search(kink, lk.LongGaussDiagram(), max_arrows=2, max_steps=1) == ["R1_remove arrow=1"]
    assert lk.search(lk.knot("fly"), lk.LongGaussDiagram(), max_arrows=2, max_steps=1) is None


def test_inverse_pair_certificates():
    for seed in range(20):
        k = lk.random_diagram(seed % 6, seed)
        verdict = lk.verify_certificate(lk.trivialize_inverse_pair(k), ribbon=True)
        assert verdict["accepted"], verdict["reason"]
        n = k.arrow_count
        assert verdict["counts"] == {"births": 0, "saddles": 2 * n, "deaths": 2 * n}
