"""Smoke test for the Python bindings.

Build first with `pip install -e crates/python --no-build-isolation`.
"""

from fractions import Fraction

import pathcycle as pc


def main():
    # chromatic symmetric function of K_2 is 2 m_11
    k2 = pc.Graph(2, [(0, 1)])
    assert k2.chromatic().coefficients("m") == {(1, 1): Fraction(2)}
    assert k2.ascent_counts() == {(1, 1): 2}
    assert k2.chi_tilde() == {(2, 0): 1, (0, 1): 1}
    # (i + j)^2 - i + j at i = j = 1
    assert k2.supercolor_count(1, 1) == 4

    # path P_3: m_3 + 2 m_21 + 6 m_111, no y part
    p3 = pc.Digraph(3, [(0, 1), (1, 2)])
    xi = p3.path_cycle()
    assert xi.coefficients("m") == {
        ((3,), ()): 1,
        ((2, 1), ()): 2,
        ((1, 1, 1), ()): 6,
    }
    assert xi.iota() == p3.complement().path_cycle().iota().iota()
    assert p3.complement().path_cycle().iota() == xi

    loop = pc.parse_digraph("digraph 1\n1 1\n")
    assert loop.cover_poly() == {(1, 0): 1, (0, 1): 1}
    assert loop.rook_numbers() == [1, 1]

    s21 = pc.SymFunc.basis("s", [2, 1])
    assert pc.SymFunc.from_json(s21.to_json("e")) == s21
    assert s21.is_positive_in("xitilde")
    assert (s21 * s21).omega() == s21.omega() * s21.omega()

    reports = pc.run_checks("combinatorics", 3, 0)
    assert reports and all(r["passed"] for r in reports)
    assert "main-reciprocity" in pc.check_names()

    classes, report = pc.census()
    print(f"census: {len(classes)} classes, "
          f"{sum(c['e_positive'] for c in classes)} e-positive, passed={report['passed']}")
    print("smoke test ok")


if __name__ == "__main__":
    main()
