"""Smoke test for the cellres_py extension.

Build and install first, e.g. `maturin develop -m crates/py/Cargo.toml`.
"""

import json

import cellres_py as cr


def main():
    ideal = cr.Ideal("x, y, z")
    assert ideal.variables == ["x", "y", "z"]
    res = cr.resolve(ideal, 3)
    assert res.ranks == [3, 3, 1]
    assert res.is_complex() and res.is_exact(ideal) and res.is_minimal()
    assert res.betti() == cr.betti_oracle(ideal, 3)
    assert cr.Resolution.from_json(res.to_json()).ranks == res.ranks

    try:
        cr.Ideal("x**y")
    except cr.CellresError as e:
        assert "byte 2" in str(e)
    else:
        raise AssertionError("malformed ideal parsed")

    triangle = cr.CWComplex.simplex(2, ideal.generators)
    assert triangle.counts == [3, 3, 1]
    assert json.loads(triangle.validate()) == []
    assert triangle.is_regular()
    assert json.loads(cr.check_supports(triangle, ideal, 3))["supported"]

    hollow = cr.CWComplex.simplicial([[0, 1], [1, 2], [0, 2]])
    poset = json.loads(hollow.face_poset(2))
    assert len(poset["elements"]) == 6 and len(poset["covers"]) == 6

    cert = json.loads(cr.run_pipeline(ideal, triangle, 3))
    assert cert["success"] and cert["yEqualsX"] and cert["posetEquality"]

    basis = json.loads(cr.find_basis(res))
    assert len(basis["basis"]["degrees"]) == 3

    t = cr.lift_sl([[2, 0], [0, 2]], 3)
    assert t[0][0] * t[1][1] - t[0][1] * t[1][0] == 1
    assert [[v % 3 for v in row] for row in t] == [[2, 0], [0, 2]]

    print("smoke test passed")


if __name__ == "__main__":
    main()
