"""Smoke test for the Python bindings.

Build and install first, for example:
    pip install --no-build-isolation ./crates/python
"""

import matroid_forge_py as mf


def main():
    tri = mf.Matroid(["a", "b", "e"], [["a", "b", "e"]])
    other = mf.Matroid(["c", "d", "e"], [["c", "d", "e"]])
    square = mf.two_sum(tri, other, "e")
    assert square == mf.Matroid.uniform(3, 4)
    assert square.rank == 3 and len(square) == 4

    try:
        mf.Matroid(["a", "b", "c"], [["a", "b"], ["b", "c"]])
    except ValueError as e:
        assert "C3" in str(e), e
    else:
        raise AssertionError("elimination failure accepted")

    five = mf.Matroid.from_edges(
        [("a", "1", "2"), ("b", "2", "3"), ("s", "1", "3"), ("c", "1", "4"), ("d", "4", "3")]
    )
    torsos, edges = mf.decompose(five)
    assert sorted(k for _, k, _ in torsos) == ["circuit", "circuit", "cocircuit"], torsos
    assert len(edges) == 2
    assert mf.roundtrip(five)
    assert mf.decompose_dot(five).startswith("graph tree {")
    assert five.dual().dual() == five
    assert not five.has_uniform_minor(2, 4)
    assert mf.Matroid.uniform(2, 4).has_uniform_minor(2, 4)

    q, c4 = mf.RayTree.q_ray(), mf.RayTree.c4_ray()
    assert q.is_nice() and not c4.is_nice()
    assert c4.finite_circuits(5) == []
    assert q.gluings_differ(3)

    passed, report = mf.run_suite()
    print(report, end="")
    assert passed
    print("smoke test ok")


if __name__ == "__main__":
    main()
