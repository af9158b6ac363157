"""Smoke test for the snowkit Python extension."""

import snowkit


def main():
    w = snowkit.Permutation("1324")
    assert str(w.grothendieck()) == "(x1 + x2) + b*x1*x2"
    assert snowkit.Permutation([3, 7, 2, 1, 5, 6, 4]).rajcode() == [4, 5, 2, 1, 1, 1]
    assert snowkit.Permutation("3721564").turning_points() == [(1, 2), (2, 6), (3, 1), (6, 4)]

    alpha = snowkit.WeakComposition("0,2,1")
    assert len(alpha.kkd()) == 11
    assert alpha.lascoux() == alpha.lascoux_via_kkd()
    degree, top = alpha.lascoux().top_component()
    assert (degree, str(top)) == (2, "x1^2*x2^2*x3")
    assert snowkit.WeakComposition([2, 0, 4, 3, 1]).rajcode() == [4, 3, 4, 3, 1]

    f = snowkit.Polynomial("x1^2*x2 + 3*b*x2")
    assert f.divided_difference(1).divided_difference(1).is_zero()
    assert (f - f).is_zero()
    assert sorted(c for _, _, c in f.terms()) == [1, 3]

    exp = snowkit.expand_top_into_snowy_basis(snowkit.Permutation("1342").top_grothendieck(), 4)
    assert exp == {"(0,0,1)": 2}
    full = snowkit.expand_grothendieck_into_lascoux(snowkit.Permutation("1324"))
    assert {k: str(c) for k, c in full.items()} == {"(0,1)": "1"}

    assert snowkit.hilb_vn(3) == [1, 1, 2, 1]
    assert snowkit.hilb_v_truncated(3) == [1, 1, 2, 4]
    assert snowkit.bell(6) == 203
    assert snowkit.q_bell(3) == [1, 2, 1, 1]
    passed, report = snowkit.verify("tables")
    assert passed and "48/48" in report

    try:
        snowkit.Permutation("1x3")
    except ValueError:
        pass
    else:
        raise AssertionError("invalid permutation accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
