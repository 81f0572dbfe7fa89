"""Alternating identity thresholds: dim+1 on simple algebras, dimension sums
plus block count on glued triangular ones, and how radical extensions break
the generator containment their simple bases satisfy."""

import stargraded as sg
from stargraded.checks import parse_ut_spec
from stargraded.polynomials import KINDS


def simple_thresholds():
    print("== thresholds on simple algebras: always one past the component dimension ==")
    for A, name in [
        (sg.m_hl_transpose(1, 1), "transpose h=1 l=1"),
        (sg.mn_cmn(2, "t", "-"), "central extension n=2"),
        (sg.m_hh_symplectic(1), "symplectic h=1"),
    ]:
        dims = sg.hom_dims(A)
        got = tuple(sg.capelli_threshold(A, k).threshold for k in KINDS)
        print(f"  {name}: dims {dims} -> thresholds {got}")
        assert got == tuple(d + 1 for d in dims)


def triangular_thresholds():
    print("== gluing two blocks: thresholds jump to dimension sums + block count ==")
    A = sg.ut_star(parse_ut_spec("m_hl_transpose:1,1+m_hl_transpose:1,1", ""))
    for k in KINDS:
        rep = sg.capelli_threshold(A, k)
        print(f"  kind {k}: threshold {rep.threshold} (search cap {rep.search_cap})")

    print("== trivially graded blocks spread one extra unit by shift parity ==")
    for shifts in ("0,0", "0,1"):
        r = sg.threshold_offsets(parse_ut_spec("m_hl_transpose:1,0+m_hl_transpose:1,0", shifts))
        print(f"  shifts ({shifts}): thresholds {r.thresholds}, even offset {r.offset_even}, odd offset {r.offset_odd}")


def generator_breakage():
    print("== radical extensions violate the generator family of their base ==")
    base = sg.m_hl_transpose(1, 1)
    ranks = tuple(d + 1 for d in sg.hom_dims(base))
    for E, name in [
        (base, "the simple base itself"),
        (sg.one_sided_radical_extension(base), "one sided radical extension"),
        (sg.tensor_nilpotent_extension(base, sg.noncommutative_nilpotent()), "tensor with a noncommutative nilpotent"),
    ]:
        rep = sg.satisfies_generator_set(E, sg.generator_family(*ranks))
        tail = "satisfied"
        if not rep.satisfied:
            w = rep.witness
            support = [i for i, c in enumerate(w.value) if c]
            tail = f"violated by member {rep.failing_index}, witness value supported on {[E.labels[i] for i in support]}"
        print(f"  {name}: {tail}")


if __name__ == "__main__":
    simple_thresholds()
    print()
    triangular_thresholds()
    print()
    generator_breakage()
