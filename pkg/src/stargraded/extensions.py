"""Radical extensions of simple algebras, used as counterexamples to simplicity."""

from .core import (
    StarSuperAlgebra,
    WedderburnBlock,
    WedderburnData,
    block_unit,
    is_star_graded_simple,
    subspace_product,
    validate,
)
from .linalg import Subspace


def nilpotent_algebra(dim, labels, structure, involution):
    """A trivially graded nilpotent algebra with involution, checked on construction."""
    N = StarSuperAlgebra(dim, labels, structure, [0] * dim, involution,
                         wedderburn=WedderburnData((), tuple(range(dim))))
    problems = validate(N)
    assert not problems, problems[:3]
    full = Subspace(dim, [[1 if i == k else 0 for i in range(dim)] for k in range(dim)])
    power = full
    for _ in range(dim + 1):
        if power.is_zero():
            return N
        power = subspace_product(N, power, full)
    raise ValueError("structure constants are not nilpotent")


def commutative_nilpotent(k=1):
    """k commuting square-zero self-adjoint generators, all products zero."""
    assert k >= 1
    labels = [f"n{i + 1}" for i in range(k)]
    return nilpotent_algebra(k, labels, [], [[1 if i == j else 0 for j in range(k)] for i in range(k)])


def noncommutative_nilpotent():
    """Two self-adjoint generators with nonzero products both ways, cube zero."""
    labels = ["n1", "n2", "n1n2", "n2n1"]
    structure = [(0, 1, 2, 1), (1, 0, 3, 1)]
    involution = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ]
    return nilpotent_algebra(4, labels, structure, involution)


def _require_simple_unital(A):
    assert is_star_graded_simple(A), "extension base must be simple"
    return block_unit(A, range(A.dim))


def one_sided_radical_extension(A):
    """Adjoin a copy of A as a left-only module plus its starred right-only twin.

    The radical splits as J = V + V* with e V = V, V e = 0, so the one-sided
    Peirce pieces are nonzero and the graded Capelli bounds of the base fail."""
    _require_simple_unital(A)
    d = A.dim
    structure = []
    for (i, j), row in A.structure.items():
        for k, c in row.items():
            structure.append((i, j, k, c))
            structure.append((i, d + j, d + k, c))
            structure.append((2 * d + i, j, 2 * d + k, c))
    involution = [[0] * (3 * d) for _ in range(3 * d)]
    for k in range(d):
        for r in range(d):
            c = A.involution[r][k]
            if c:
                involution[r][k] = c
                involution[2 * d + r][d + k] = c
                involution[d + r][2 * d + k] = c
    labels = list(A.labels) + [f"v.{s}" for s in A.labels] + [f"w.{s}" for s in A.labels]
    grading = list(A.grading) * 3
    family = A.wedderburn.blocks[0].family if A.wedderburn and A.wedderburn.blocks else None
    params = A.wedderburn.blocks[0].params if A.wedderburn and A.wedderburn.blocks else ()
    wed = WedderburnData(
        (WedderburnBlock(tuple(range(d)), family, params),), tuple(range(d, 3 * d))
    )
    R = StarSuperAlgebra(3 * d, labels, structure, grading, involution, wedderburn=wed)
    problems = validate(R)
    assert not problems, problems[:3]
    return R


def tensor_nilpotent_extension(A, N):
    """Tensor a simple algebra with a nilpotent one after adjoining a unit to it.

    The A x unit corner is the semisimple part; everything tensored into N is
    radical, commutes with that corner, and is stable both ways."""
    _require_simple_unital(A)
    assert all(g == 0 for g in N.grading), "nilpotent factor must be trivially graded"
    d, dn = A.dim, N.dim
    dim = d * (dn + 1)

    def idx(j, i):
        # j = 0 is the adjoined unit of the nilpotent factor
        return j * d + i

    structure = []
    n_rows = {}
    for (j, l), row in N.structure.items():
        n_rows[(j + 1, l + 1)] = {k + 1: c for k, c in row.items()}
    for j in range(dn + 1):
        for l in range(dn + 1):
            if j == 0:
                factor = {l: 1}
            elif l == 0:
                factor = {j: 1}
            else:
                factor = n_rows.get((j, l), {})
            if not factor:
                continue
            for (i, i2), row in A.structure.items():
                for k, c in row.items():
                    for jk, cn in factor.items():
                        structure.append((idx(j, i), idx(l, i2), idx(jk, k), c * cn))
    involution = [[0] * dim for _ in range(dim)]
    for k in range(d):
        for r in range(d):
            c = A.involution[r][k]
            if not c:
                continue
            involution[idx(0, r)][idx(0, k)] = c
            for j in range(1, dn + 1):
                for rn in range(dn):
                    cn = N.involution[rn][j - 1]
                    if cn:
                        involution[idx(rn + 1, r)][idx(j, k)] = c * cn
    labels = list(A.labels) + [f"{s}@{t}" for t in N.labels for s in A.labels]
    grading = list(A.grading) * (dn + 1)
    family = A.wedderburn.blocks[0].family if A.wedderburn and A.wedderburn.blocks else None
    params = A.wedderburn.blocks[0].params if A.wedderburn and A.wedderburn.blocks else ()
    wed = WedderburnData(
        (WedderburnBlock(tuple(range(d)), family, params),), tuple(range(d, dim))
    )
    R = StarSuperAlgebra(dim, labels, structure, grading, involution, wedderburn=wed)
    problems = validate(R)
    assert not problems, problems[:3]
    return R
