"""Smoke test for the casimir_workbench extension module.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`.
"""

import json
from fractions import Fraction
from math import comb

import casimir_workbench as cw


def frac(s):
    return Fraction(s)


def main():
    sl3 = cw.Algebra("sl3")
    assert sl3.dim == 8 and sl3.verify()
    doc = sl3.to_dict()
    assert doc["dim"] == 8 and len(doc["g"]) == 8

    # n = 2: Tr(C^k) = (-1/2)^k dim g
    op = sl3.wedge(2)
    assert op.size == comb(8, 2)
    for k, t in enumerate(op.traces(6)):
        want = Fraction(28) if k == 0 else Fraction(-1, 2) ** k * 8
        assert frac(t) == want, (k, t)

    # n = 5 against the universal formula, including the Vogel-point term
    g2 = cw.Algebra("g2")
    op5 = g2.wedge(5)
    assert op5.size == 2002
    for k, t in enumerate(op5.traces(4)):
        assert frac(t) == frac(cw.universal_trace(5, k, 14, "g2")), k

    assert cw.vogel("g2") == ("-1/4", "5/12", "1/3")
    assert frac(cw.dim_x(5, 14)) == -924
    assert frac(cw.dim_x(5, 248)) == 6899079264

    spec = dict(op.spectrum(["-1/2", "0"]))
    assert spec == {"-1/2": 8, "0/1": 20}, spec

    rep = g2.decompose(5)
    zero = next(g for g in rep["groups"] if g["lambda"] == "0/1")
    assert zero["observed"] == 0 and zero["status"] == "MATCHED"

    report = cw.verify_all(json.dumps({"algebras": ["sl2", "sl3"], "n_values": [2, 3]}))
    assert report["status"] == "PASS", report["failed"]

    try:
        cw.Algebra("e8")
    except ValueError as e:
        assert "formula-level only" in str(e)
    else:
        raise AssertionError("e8 must not be constructible")

    try:
        g2.wedge(5, max_wedge_dim=10)
    except MemoryError:
        pass
    else:
        raise AssertionError("cap not enforced")

    print("smoke test ok:", sl3, op5, f"{len(report['checks'])} suite checks")


if __name__ == "__main__":
    main()
