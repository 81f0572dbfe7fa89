"""Codimension sequences next to the block exponent: the n-th roots of the
typed codimensions drift toward the exponent computed from Wedderburn data."""

import stargraded as sg
from stargraded.checks import parse_algebra_spec, parse_ut_spec


def table(A, name, n_max):
    exp = sg.admissible_exponent(A)
    red = sg.is_reduced(A)
    print(f"{name}: dim {A.dim}, exponent {exp}, reduced {red}")
    print("   n   typed c_n   n-th root")
    for n, value, root in sg.codim_table(A, n_max):
        print(f"  {n:2d}  {value:10d}   {root:8.4f}")
    print()


def main():
    table(parse_algebra_spec("m_hl_transpose:1,0"), "ground field", 5)
    table(parse_algebra_spec("m_hl_transpose:1,1"), "2x2 matrices, transpose star", 4)
    table(parse_algebra_spec("m_hl_transpose:1,1+m_hl_transpose:1,0"), "direct sum (not reduced)", 4)
    table(sg.ut_star(parse_ut_spec("m_hl_transpose:1,0+m_hl_transpose:1,0", "")),
          "two glued ground-field blocks", 5)

    A = parse_algebra_spec("m_hl_transpose:1,1")
    print("ordinary vs typed codimension sandwich for 2x2 matrices:")
    for n in range(1, 5):
        lo = sg.codim_ordinary(A, n).value
        hi = sg.codim_graded(A, n).value
        print(f"  n={n}: {lo} <= {hi} <= {4**n * lo}")


if __name__ == "__main__":
    main()
