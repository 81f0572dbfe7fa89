"""Constructors for the classified simple superalgebras with graded involution."""

from dataclasses import dataclass

from .core import StarSuperAlgebra, WedderburnBlock, WedderburnData

MHL_T = "MHL_T"
MHH_S = "MHH_S"
MHL_EXC = "MHL_EXC"
MN_CMN_STAR = "MN_CMN_STAR"
MN_CMN_DAGGER = "MN_CMN_DAGGER"
MN_CMN_EXC = "MN_CMN_EXC"

FAMILY_NAMES = (MHL_T, MHH_S, MHL_EXC, MN_CMN_STAR, MN_CMN_DAGGER, MN_CMN_EXC)


@dataclass(frozen=True)
class FamilyTag:
    """A classified simple family with its parameters.

    params: (h, l) for MHL_T and MHL_EXC; (h,) for MHH_S; (n, diamond) for
    MN_CMN_STAR / MN_CMN_DAGGER with diamond in {"t", "s"}; (n,) for MN_CMN_EXC.
    """

    name: str
    params: tuple

    def __post_init__(self):
        validate_tag(self)


def validate_tag(tag):
    name, p = tag.name, tuple(tag.params)
    if name in (MHL_T, MHL_EXC):
        if len(p) != 2 or not all(isinstance(x, int) for x in p):
            raise ValueError(f"{name} takes two integer parameters, got {p}")
        h, l = p
        if not (h >= l >= 0 and h > 0):
            raise ValueError(f"{name} requires h >= l >= 0 and h != 0, got {p}")
    elif name == MHH_S:
        if len(p) != 1 or not isinstance(p[0], int):
            raise ValueError(f"{name} takes one integer parameter, got {p}")
        if p[0] < 1:
            raise ValueError(f"{name} requires h >= 1, got {p}")
    elif name in (MN_CMN_STAR, MN_CMN_DAGGER):
        if len(p) != 2 or not isinstance(p[0], int):
            raise ValueError(f"{name} takes a matrix size and a flavor, got {p}")
        n, diamond = p
        if n < 1 or diamond not in ("t", "s"):
            raise ValueError(f"{name} requires n >= 1 and diamond in 't','s', got {p}")
        if diamond == "s" and n % 2 != 0:
            raise ValueError("symplectic flavor requires an even matrix size")
    elif name == MN_CMN_EXC:
        if len(p) != 1 or not isinstance(p[0], int):
            raise ValueError(f"{name} takes one integer parameter, got {p}")
        if p[0] < 1:
            raise ValueError(f"{name} requires n >= 1, got {p}")
    else:
        raise ValueError(f"unknown family {name}")


def _unit_idx(n, i, j):
    return i * n + j


def _unit_labels(n, prefix=""):
    return [f"{prefix}e{i + 1},{j + 1}" for i in range(n) for j in range(n)]


def _matrix_structure(n, offset=0):
    # e_ij . e_kl = delta_jk e_il
    out = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                out.append(
                    (offset + _unit_idx(n, i, j), offset + _unit_idx(n, j, l), offset + _unit_idx(n, i, l), 1)
                )
    return out


def _transpose_images(n):
    # image of e_ij is e_ji
    return {(i, j): [((j, i), 1)] for i in range(n) for j in range(n)}


def _symplectic_images(n):
    # star(X) = Omega X^t Omega^{-1} with Omega = [[0, I],[-I, 0]] in half-blocks
    assert n % 2 == 0
    h = n // 2
    out = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i <= h and j <= h:
                img, sign = (j + h, i + h), 1
            elif i <= h < j:
                img, sign = (j - h, i + h), -1
            elif j <= h < i:
                img, sign = (j + h, i - h), -1
            else:
                img, sign = (j - h, i - h), 1
            out[(i - 1, j - 1)] = [((img[0] - 1, img[1] - 1), sign)]
    return out


def _diamond_images(n, diamond):
    return _transpose_images(n) if diamond == "t" else _symplectic_images(n)


def _involution_from_unit_images(dim, image_map):
    # image_map: basis index -> list of (basis index, coeff)
    inv = [[0] * dim for _ in range(dim)]
    for k, imgs in image_map.items():
        for r, c in imgs:
            inv[r][k] = c
    return inv


def _block_grading(n, h):
    # elementary grading: 0 on the first h row/col indices, 1 on the rest
    alpha = [0 if i < h else 1 for i in range(n)]
    return [(alpha[i] + alpha[j]) % 2 for i in range(n) for j in range(n)]


def m_hl_transpose(h, l):
    """Full matrix algebra with block grading (h, l) and transpose involution."""
    tag = FamilyTag(MHL_T, (h, l))
    n = h + l
    images = _transpose_images(n)
    inv = _involution_from_unit_images(
        n * n, {_unit_idx(n, i, j): [(_unit_idx(n, a, b), c)] for (i, j), [((a, b), c)] in images.items()}
    )
    wed = WedderburnData((WedderburnBlock(tuple(range(n * n)), MHL_T, (h, l)),), ())
    return StarSuperAlgebra(
        n * n, _unit_labels(n), _matrix_structure(n), _block_grading(n, h), inv, wedderburn=wed
    )


def m_hh_symplectic(h):
    """Full matrix algebra of even size with half-half grading and symplectic involution."""
    tag = FamilyTag(MHH_S, (h,))
    n = 2 * h
    images = _symplectic_images(n)
    inv = _involution_from_unit_images(
        n * n, {_unit_idx(n, i, j): [(_unit_idx(n, a, b), c)] for (i, j), [((a, b), c)] in images.items()}
    )
    wed = WedderburnData((WedderburnBlock(tuple(range(n * n)), MHH_S, (h,)),), ())
    return StarSuperAlgebra(
        n * n, _unit_labels(n), _matrix_structure(n), _block_grading(n, h), inv, wedderburn=wed
    )


def m_hl_exchange(h, l):
    """Matrix algebra plus its opposite, exchange involution, block grading on both."""
    tag = FamilyTag(MHL_EXC, (h, l))
    n = h + l
    nn = n * n
    structure = _matrix_structure(n)
    # second summand multiplies in reversed order: (0,e_ij)(0,e_ki) = (0, e_ki e_ij) = (0, e_kj)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                structure.append(
                    (nn + _unit_idx(n, i, j), nn + _unit_idx(n, k, i), nn + _unit_idx(n, k, j), 1)
                )
    image_map = {k: [(nn + k, 1)] for k in range(nn)}
    image_map.update({nn + k: [(k, 1)] for k in range(nn)})
    inv = _involution_from_unit_images(2 * nn, image_map)
    grading = _block_grading(n, h) * 2
    labels = _unit_labels(n) + _unit_labels(n, "op.")
    wed = WedderburnData((WedderburnBlock(tuple(range(2 * nn)), MHL_EXC, (h, l)),), ())
    return StarSuperAlgebra(2 * nn, labels, structure, grading, inv, wedderburn=wed)


def mn_cmn(n, diamond, sign):
    """The superalgebra with even part M_n, odd part c*M_n, c^2 = 1, and the
    involution a + cb -> a^diamond + sign * c b^diamond."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    name = MN_CMN_DAGGER if sign == "+" else MN_CMN_STAR
    tag = FamilyTag(name, (n, diamond))
    nn = n * n
    structure = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                a, b, c0 = _unit_idx(n, i, j), _unit_idx(n, j, l), _unit_idx(n, i, l)
                structure.append((a, b, c0, 1))
                structure.append((a, nn + b, nn + c0, 1))
                structure.append((nn + a, b, nn + c0, 1))
                structure.append((nn + a, nn + b, c0, 1))
    s = 1 if sign == "+" else -1
    images = _diamond_images(n, diamond)
    image_map = {}
    for (i, j), [((a, b), c)] in images.items():
        image_map[_unit_idx(n, i, j)] = [(_unit_idx(n, a, b), c)]
        image_map[nn + _unit_idx(n, i, j)] = [(nn + _unit_idx(n, a, b), s * c)]
    inv = _involution_from_unit_images(2 * nn, image_map)
    grading = [0] * nn + [1] * nn
    labels = _unit_labels(n) + _unit_labels(n, "c*")
    wed = WedderburnData((WedderburnBlock(tuple(range(2 * nn)), name, (n, diamond)),), ())
    return StarSuperAlgebra(2 * nn, labels, structure, grading, inv, wedderburn=wed)


def mn_cmn_exchange(n):
    """The mn_cmn superalgebra plus its opposite with the exchange involution."""
    tag = FamilyTag(MN_CMN_EXC, (n,))
    nn = n * n
    half = 2 * nn
    structure = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                a, b, c0 = _unit_idx(n, i, j), _unit_idx(n, j, l), _unit_idx(n, i, l)
                # first summand: plain and c-twisted products
                structure.append((a, b, c0, 1))
                structure.append((a, nn + b, nn + c0, 1))
                structure.append((nn + a, b, nn + c0, 1))
                structure.append((nn + a, nn + b, c0, 1))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # (0,x)(0,y) = (0, yx) with the same c rules
                a, b = _unit_idx(n, k, i), _unit_idx(n, i, j)
                c0 = _unit_idx(n, k, j)
                structure.append((half + b, half + a, half + c0, 1))
                structure.append((half + b, half + nn + a, half + nn + c0, 1))
                structure.append((half + nn + b, half + a, half + nn + c0, 1))
                structure.append((half + nn + b, half + nn + a, half + c0, 1))
    image_map = {k: [(half + k, 1)] for k in range(half)}
    image_map.update({half + k: [(k, 1)] for k in range(half)})
    inv = _involution_from_unit_images(2 * half, image_map)
    grading = ([0] * nn + [1] * nn) * 2
    labels = _unit_labels(n) + _unit_labels(n, "c*") + _unit_labels(n, "op.") + _unit_labels(n, "op.c*")
    wed = WedderburnData((WedderburnBlock(tuple(range(2 * half)), MN_CMN_EXC, (n,)),), ())
    return StarSuperAlgebra(2 * half, labels, structure, grading, inv, wedderburn=wed)


def build_family(tag):
    """Construct the algebra a FamilyTag describes."""
    validate_tag(tag)
    if tag.name == MHL_T:
        return m_hl_transpose(*tag.params)
    if tag.name == MHH_S:
        return m_hh_symplectic(*tag.params)
    if tag.name == MHL_EXC:
        return m_hl_exchange(*tag.params)
    if tag.name == MN_CMN_STAR:
        return mn_cmn(tag.params[0], tag.params[1], "-")
    if tag.name == MN_CMN_DAGGER:
        return mn_cmn(tag.params[0], tag.params[1], "+")
    return mn_cmn_exchange(*tag.params)


def classified_hom_dims(tag):
    """Closed-form (even sym, even skew, odd sym, odd skew) dims for a family tag."""
    name, p = tag.name, tuple(tag.params)
    if name == MHL_T:
        h, l = p
        return (h * (h + 1) // 2 + l * (l + 1) // 2, h * (h - 1) // 2 + l * (l - 1) // 2, h * l, h * l)
    if name == MHH_S:
        (h,) = p
        return (h * h, h * h, h * (h - 1), h * (h + 1))
    if name == MHL_EXC:
        h, l = p
        return (h * h + l * l, h * h + l * l, 2 * h * l, 2 * h * l)
    if name in (MN_CMN_STAR, MN_CMN_DAGGER):
        n, diamond = p
        sym, skew = n * (n + 1) // 2, n * (n - 1) // 2
        m_plus, m_minus = (sym, skew) if diamond == "t" else (skew, sym)
        if name == MN_CMN_DAGGER:
            return (m_plus, m_minus, m_plus, m_minus)
        return (m_plus, m_minus, m_minus, m_plus)
    (n,) = p
    return (n * n, n * n, n * n, n * n)
