"""Multilinear polynomials with typed slots, Capelli families, and evaluators."""

from dataclasses import dataclass
from itertools import permutations

from .core import sparse_mul, to_dense, to_sparse
from .linalg import _as_num

YPLUS = "y+"
YMINUS = "y-"
ZPLUS = "z+"
ZMINUS = "z-"
ANY = "any"
KINDS = (YPLUS, YMINUS, ZPLUS, ZMINUS)


@dataclass(frozen=True)
class CapelliShape:
    """Alternating rank, slot kind, and which connector gaps were deleted."""

    rank: int
    kind: str
    deleted: frozenset

    def __post_init__(self):
        assert self.rank >= 1
        assert self.kind in KINDS or self.kind == ANY
        assert all(0 <= g < self.rank - 1 for g in self.deleted)

    @property
    def kept_gaps(self):
        return tuple(g for g in range(self.rank - 1) if g not in self.deleted)


@dataclass(frozen=True)
class MultilinearPoly:
    """Multilinear polynomial: words over slot indices with coefficients.

    slot_kinds fixes the admissible substitutions per slot; alt_groups lists
    slot index groups the polynomial alternates in; shape is set for Capelli
    family members so evaluators can take the fast path."""

    slot_kinds: tuple
    terms: dict
    alt_groups: tuple = ()
    shape: CapelliShape | None = None

    @property
    def nslots(self):
        return len(self.slot_kinds)


def perm_sign(p):
    inv = 0
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            if p[a] > p[b]:
                inv += 1
    return -1 if inv % 2 else 1


def capelli_member(m, kind, deleted=()):
    """One member of the barred Capelli family: m alternating slots of the given
    kind with connector slots in the non-deleted gaps."""
    shape = CapelliShape(m, kind, frozenset(deleted))
    kept = shape.kept_gaps
    conn_slot = {g: m + r for r, g in enumerate(kept)}
    terms = {}
    for perm in permutations(range(m)):
        word = [perm[0]]
        for g in range(m - 1):
            if g in conn_slot:
                word.append(conn_slot[g])
            word.append(perm[g + 1])
        terms[tuple(word)] = perm_sign(perm)
    slot_kinds = (kind,) * m + (ANY,) * len(kept)
    return MultilinearPoly(slot_kinds, terms, (tuple(range(m)),), shape)


def capelli_graded(m, kind):
    """The full alternating polynomial of rank m in one homogeneous kind."""
    return capelli_member(m, kind)


def capelli_ordinary(m):
    """The rank-m alternating polynomial with untyped slots."""
    return capelli_member(m, ANY)


def barred_capelli_set(m, kind):
    """All 2^(m-1) members over connector deletion patterns, mask ascending."""
    out = []
    for mask in range(1 << (m - 1)):
        deleted = frozenset(g for g in range(m - 1) if mask >> g & 1)
        out.append(capelli_member(m, kind, deleted))
    return out


def generator_family(rank_yp, rank_ym, rank_zp, rank_zm):
    """The generator family at the four given ranks: concatenated barred sets in
    kind order y+, y-, z+, z-."""
    assert rank_yp >= 1 and rank_ym >= 1 and rank_zp >= 1 and rank_zm >= 1
    out = []
    for rank, kind in ((rank_yp, YPLUS), (rank_ym, YMINUS), (rank_zp, ZPLUS), (rank_zm, ZMINUS)):
        out.extend(barred_capelli_set(rank, kind))
    return out


def evaluate_sparse(A, p, assignment):
    """Term-by-term value of p on sparse vectors, one per slot."""
    assert len(assignment) == p.nslots
    out = {}
    for word, coeff in p.terms.items():
        cur = None
        for s in word:
            cur = dict(assignment[s]) if cur is None else sparse_mul(A, cur, assignment[s])
            if not cur:
                break
        else:
            for k, c in cur.items():
                out[k] = out.get(k, 0) + coeff * c
    return {k: _as_num(c) for k, c in out.items() if c != 0}


def evaluate(A, p, assignment):
    """Value of p on dense coordinate vectors, one per slot."""
    sparse = [to_sparse(list(v)) for v in assignment]
    return to_dense(evaluate_sparse(A, p, sparse), A.dim)


def evaluate_alternating_fast(A, shape, alt_vecs, conn_vecs):
    """Value of one Capelli member via the subset dynamic program.

    States map an index subset to the sum over orderings of that subset with
    the connectors seen so far interleaved; appending index t last costs the
    sign of moving t past the larger members."""
    m = shape.rank
    kept = shape.kept_gaps
    assert len(alt_vecs) == m and len(conn_vecs) == len(kept)
    states = {1 << t: dict(alt_vecs[t]) for t in range(m)}
    conn_at = {g: conn_vecs[r] for r, g in enumerate(kept)}
    for g in range(m - 1):
        if g in conn_at:
            x = conn_at[g]
            joined = {}
            for mask, v in states.items():
                w = sparse_mul(A, v, x)
                if w:
                    joined[mask] = w
        else:
            joined = states
        states = _extend_alternating(A, joined, alt_vecs, m)
        if not states:
            return {}
    return states.get((1 << m) - 1, {})


def _extend_alternating(A, joined, alt_vecs, m):
    new = {}
    for mask, v in joined.items():
        for t in range(m):
            if mask >> t & 1:
                continue
            w = sparse_mul(A, v, alt_vecs[t])
            if not w:
                continue
            sign = -1 if bin(mask >> (t + 1)).count("1") % 2 else 1
            tgt = new.setdefault(mask | (1 << t), {})
            for k, c in w.items():
                nc = _as_num(tgt.get(k, 0) + sign * c)
                if nc == 0:
                    tgt.pop(k, None)
                else:
                    tgt[k] = nc
    return {mask: v for mask, v in new.items() if v}
