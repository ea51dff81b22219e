"""Python smoke tests for the albert_forge module."""

import albert_forge as af


def test_fields():
    spec = af.field_make(2, 2)
    assert spec == {"p": 2, "k": 2, "modulus": [1, 1, 1]}
    # t * t = t + 1 in GF(4)
    assert af.field_mul(2, 2, 2, 2) == 3
    assert af.conj_q(2, 2, 2) == 3
    assert af.field_inv(3, 1, 2) == 2


def test_octonions():
    e = [[0] * 8 for _ in range(8)]
    for i in range(8):
        e[i][i] = 1
    # e_1 e_w = e_{-wb}
    assert af.oct_mul(2, 1, e[1], e[2]) == e[7]
    # e_0 idempotent and orthogonal to e_{-0}
    assert af.oct_mul(2, 1, e[0], e[0]) == e[0]
    assert af.oct_mul(2, 1, e[0], e[4]) == [0] * 8
    assert af.oct_norm(2, 1, e[1]) == 0
    assert af.count_isotropic(2, 1) == 135
    assert af.count_isotropic(3, 1) == 2240


def test_albert_space():
    identity = [1, 1, 1] + [0] * 24
    assert af.alb_det(5, 1, identity) == 1
    assert af.alb_trace(5, 1, identity) == 3
    assert af.classify_color(2, 1, identity) == "Black"
    e1 = [1] + [0] * 26
    assert af.classify_color(2, 1, e1) == "White"
    grey = [1, 1] + [0] * 25
    assert af.classify_color(2, 1, grey) == "Grey"
    # det = -(dickson cubic after translation)
    import random

    rnd = random.Random(7)
    for _ in range(20):
        x = [rnd.randrange(5) for _ in range(27)]
        det = af.alb_det(5, 1, x)
        dick = af.dickson_cubic(5, 1, af.dickson_translate(5, 1, x))
        assert (det + dick) % 5 == 0


def test_generators():
    op = af.make_generator(2, 1, {"kind": "transvection", "row": 0, "col": 1,
                                  "x": [0, 1, 0, 0, 0, 0, 0, 0]})
    assert af.preserves_det(2, 1, op)
    assert not af.fixes_identity(2, 1, op)
    rot = af.make_generator(2, 1, {"kind": "f4_rotation", "pair": 0,
                                   "x": [0, 1, 0, 0, 0, 0, 0, 0]})
    assert af.fixes_identity(2, 1, rot)
    # lambda^3 = 1 rule over GF(5): only lambda = 1 preserves det
    assert af.preserves_det(5, 1, af.scalar_op(5, 1, 1))
    assert not af.preserves_det(5, 1, af.scalar_op(5, 1, 2))
    tw = af.make_generator(2, 2, {"kind": "twisted_transvection", "pair": 0,
                                  "eidx": 1, "lambda": 2})
    assert af.preserves_h1(2, 2, tw)


def test_reports():
    closed = af.census(q=2, mode="closed")
    assert closed["counts"]["white_vectors"] == "139503"
    assert closed["counts"]["f4_order"] == "3311126603366400"
    structured = af.census(q=2, mode="structured", threads=2)
    assert structured["cases"] == ["14400", "48960", "55488", "14175", "6075", "405"]
    assert structured["formula_match"]
    orders = af.orders([2, 3])
    assert orders["passed"]
    dick = af.dickson_certificate([2, 3])
    assert dick["passed"]
    start = {"p": 2, "k": 1, "a": [1], "b": [0], "c": [0],
             "A": [[0]] * 8, "B": [[0]] * 8, "C": [[0]] * 8}
    cls = af.classify(start)
    assert cls["color"] == "White"
    rep = af.orbit(start, gens="standard", budget=2000)
    assert rep["truncated"]
    assert rep["size"] >= 2000


def test_verify_quick():
    rep = af.verify(suites=["octonion"], qs=[2], seed=3, random_instances=500, threads=2)
    assert rep["passed"]


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"[PASS] {name}")
            except AssertionError as exc:
                failures += 1
                print(f"[FAIL] {name}: {exc}")
    raise SystemExit(1 if failures else 0)
