from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from halphen.audit import (
    Shear,
    analyse_pair,
    census,
    class_check,
    direction_census,
    harbourne_index,
    pair_tangency,
    torsion_translate_check,
    vertex_census,
)
from halphen.cubics import halphen_cubics
from halphen.elliptic import CubicGroup
from halphen.hesse import PENCILS, base_points, vertex
from halphen.numfield import EPS
from halphen.torsion import p1_torsion_exact


def test_harbourne_examples():
    # hand evaluation of (d^2 - sum m^2) / s
    assert harbourne_index(3) == Fraction(576 - 432 - 216, 36) == -2
    assert harbourne_index(6) == Fraction(17424 - 13068 - 1188 - 4752, 441) == Fraction(-176, 49)
    for bad in (0, 4, -3):
        with pytest.raises(ValueError):
            harbourne_index(bad)


def test_harbourne_limit():
    vals = [harbourne_index(n) for n in range(3, 301, 3)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert all(v > -4 for v in vals)
    assert abs(vals[-1] + 4) < Fraction(1, 20)


@given(st.integers(1, 200))
def test_harbourne_formula_oracle(m):
    n = 3 * m
    d = 4 * (n * n - 3)
    pts = [(n * n - 3, 12), (3, 12 * (3 * m * m - 1)), (4, 9 * (3 * m * m - 1) * (m * m - 1))]
    s = sum(c for _, c in pts)
    assert harbourne_index(n) == Fraction(d * d - sum(c * k * k for k, c in pts), s)


@pytest.mark.parametrize("m", [1, 2])
def test_vertex_census(m):
    k = 3 * m * m - 1
    v = vertex_census(m)
    assert len(v) == 12
    for (t, _), row in v.items():
        assert row["incident"] == row["multiplicity"] == 3 * k
        assert row["by_pencil"][t] == 0
        assert all(row["by_pencil"][s] == k for s in PENCILS if s != t)


@pytest.mark.parametrize("m", [1, 2])
def test_direction_census(m):
    d = direction_census(m)
    total = 0
    for row in d.values():
        assert row["all_triples_one_per_pencil"] and row["direction_set_is_P1"]
        assert row["direction_set"] == set(p1_torsion_exact(m))
        total += row["triples"]
    assert total == 12 * (3 * m * m - 1)


def test_order_one_pair_tangency():
    H = halphen_cubics(1)
    C1, C2 = H.cubics["v"][-EPS], H.cubics["h"][-EPS]
    shared = [p for p in base_points("v") if p in base_points("h")]
    rows = pair_tangency(C1, C2, shared)
    assert sorted(r["multiplicity"] for r in rows) == [1, 1, 1, 2, 2, 2]
    assert all(r["multiplicity"] == (2 if r["tangent"] else 1) for r in rows)


def test_same_pencil_pair_meets_transversally():
    H = halphen_cubics(2)
    us = list(H.cubics["delta"])
    rows = pair_tangency(H.cubics["delta"][us[0]], H.cubics["delta"][us[1]], base_points("delta"))
    assert [r["multiplicity"] for r in rows] == [1] * 9


def test_order_two_pair_bezout():
    H = halphen_cubics(2)
    C1, C2 = H.cubics["v"][p1_torsion_exact(2).values[0]], H.cubics["gamma"][p1_torsion_exact(2).values[3]]
    shared = [p for p in base_points("v") if p in base_points("gamma")]
    for seed in range(20):
        try:
            r = analyse_pair(C1, C2, shared, Shear.random(seed, 5))
            break
        except ArithmeticError:
            continue
    assert r["tangent_ok"]
    assert r["vertex_sum"] + r["q"].degree == 9


def test_order_one_census():
    report, cert = census(1)
    assert cert.passed, cert.failures()
    assert report.triple_total == 24 and report.quadruple_total == 0
    assert report.harbourne == -2


def test_torsion_translate():
    cert = torsion_translate_check(1)
    assert cert.passed, cert.failures()
    assert cert.data["checks"] == 72
    assert cert.data["negative_controls"]
    with pytest.raises(ValueError):
        torsion_translate_check(2)


def test_translate_example():
    C = halphen_cubics(1).cubics["v"][-EPS]
    G = CubicGroup(C, vertex("h", 0))
    assert G.scalar_multiple(3, vertex("h", 1)) == G.O


@pytest.mark.parametrize("m", [1, 2])
def test_class_check(m):
    c = class_check(m)
    k = 3 * m * m - 1
    assert c["degree"] == 12 * k
    assert c["measured_vertex_multiplicity"] == [3 * k]
    assert c["additive_E_coefficient"] == 3 * k
    assert not c["stated_coefficient_matches_measurement"]
