import weylarr


def test_system_summary():
    e8 = weylarr.system("E8")
    assert e8["num_positive"] == 120
    assert e8["coxeter_number"] == 30
    assert e8["exponents"] == [1, 7, 11, 13, 17, 19, 23, 29]
    assert weylarr.system("D3")["type"] == "A3"


def test_positive_roots():
    roots = weylarr.positive_roots("C3")
    assert len(roots) == 9
    heights = sorted(r["height"] for r in roots)
    assert heights == [1, 1, 1, 2, 2, 3, 3, 4, 5]


def test_orbit_census():
    orbits = weylarr.orbits("D4")
    assert len(orbits) == 3
    assert all(o["ro"] for o in orbits)
    assert len(weylarr.orbits("A4")) == 1


def test_restriction_difference():
    orbits = weylarr.orbits("D4")
    i, j = orbits[0]["representative"]
    rec = weylarr.restriction("D4", i, j)
    assert rec["passed"]
    assert rec["diff"] == 3  # h/2

    chi = weylarr.restriction_char_poly("D4", i, j)
    # (t-1)(t-3) = 3 - 4t + t^2
    assert chi == [3, -4, 1]


def test_basis_restriction():
    roots = weylarr.positive_roots("D4")
    # the coordinate RO flat {eps3 - eps4, eps3 + eps4}
    i = next(r["index"] for r in roots if r["coeffs"] == [0, 0, 1, 0])
    j = next(r["index"] for r in roots if r["coeffs"] == [0, 0, 0, 1])
    rec = weylarr.basis_restriction("D4", i, j)
    assert rec["passed"]
    assert rec["degrees"] == [1, 3]
    assert rec["dropped"] == "eta"


def test_verify_small_scope():
    results = weylarr.verify(["A3"], depth="exhaustive")
    assert results
    assert all(r["status"] != "fail" for r in results)
    ids = {r["check_id"] for r in results}
    assert "thm:card/A3/orbit0" in ids
