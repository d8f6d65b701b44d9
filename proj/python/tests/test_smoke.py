import sodd


def test_gadget_values():
    assert sodd.chi_so(sodd.gen_gk(1))["value"] == 3
    r = sodd.chi_so(sodd.gen_gk(2))
    assert r["value"] == 5
    assert r["proven_infeasible"] == 4
    assert sodd.is_strong_odd(sodd.gen_gk(2), r["witness"])["pass"]


def test_verifier_witness():
    star = sodd.Graph(3, [(0, 1), (0, 2)])
    rep = sodd.is_strong_odd(star, [0, 1, 1])
    assert not rep["pass"]
    assert rep["violations"][0]["witness"] == [0, 1, 2]


def test_oracle():
    p3 = sodd.path_graph(3)
    assert not sodd.enumerate_oracle(p3, 2)
    assert sodd.enumerate_oracle(p3, 3)


def test_improper():
    assert sodd.chi_iso(sodd.complete_graph(5))["value"] == 5
    assert sodd.chi_iso(sodd.gen_iso_gadget(3))["value"] == 1


def test_outerplanar():
    host, seq = sodd.random_outerplanar(60, 7)
    colors = sodd.color_outerplanar(seq, host)
    assert len(set(colors)) <= 8
    assert sodd.is_strong_odd(host, colors)["pass"]


def test_errors():
    try:
        sodd.Graph(2, [(0, 0)])
    except sodd.Error as e:
        assert "InvalidGraph" in str(e)
    else:
        raise AssertionError("expected an error")
