"""Identity checking, Capelli thresholds, codimension sequences, and exponents."""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial, prod

from .core import (
    hom_components,
    jacobson_radical,
    sparse_mul,
    subspace_product,
    to_dense,
    to_sparse,
)
from .errors import InternalInconsistencyError, SizeCapError
from .families import classified_hom_dims
from .linalg import RankTracker, RankTrackerModP, _as_num, coordinate_span
from .polynomials import (
    ANY,
    KINDS,
    CapelliShape,
    _extend_alternating,
    capelli_member,
    evaluate_alternating_fast,
    evaluate_sparse,
)
from .triangular import is_trivially_graded, ut_star


@dataclass(frozen=True)
class RunConfig:
    """Caps and reproducibility knobs shared by the checking routines.

    cap_n bounds codimension degrees; cap_evals bounds nominal enumeration
    sizes before a computation is refused; mod_p turns on modular screening of
    exact ranks; threads is accepted for interface stability (evaluation is
    sequential); seed drives every randomized fallback."""

    cap_n: int = 6
    cap_evals: int = 10**8
    mod_p: int | None = None
    threads: int = 1
    seed: int = 0


DEFAULT_CONFIG = RunConfig()


@dataclass(frozen=True)
class Witness:
    """A reproducible non-identity certificate: evaluate(A, poly, assignment)
    must equal value."""

    poly: object
    assignment: tuple
    value: tuple


@dataclass(frozen=True)
class WitnessReport:
    is_identity: bool
    witness: Witness | None


@dataclass(frozen=True)
class ThresholdReport:
    kind: str
    threshold: int
    search_cap: int
    witness: Witness | None


@dataclass(frozen=True)
class GeneratorSetReport:
    satisfied: bool
    failing_index: int | None
    witness: Witness | None


@dataclass(frozen=True)
class CodimReport:
    n: int
    value: int
    content_ranks: dict


@dataclass(frozen=True)
class ThresholdOffsetReport:
    """Measured identity thresholds of a block triangular algebra against the
    componentwise dimension sums, with the trivial-grading corrections."""

    m: int
    m_trivial: int
    m_runs: int
    dim_sums: tuple
    thresholds: dict
    offset_even: int
    offset_odd: int


def kind_basis(A, kind):
    """Canonical sparse basis of one homogeneous component, or their union."""
    comp = hom_components(A)
    if kind == ANY:
        vecs = []
        for k in KINDS:
            vecs.extend(comp.by_kind(k).basis)
    else:
        vecs = comp.by_kind(kind).basis
    return [to_sparse(list(v)) for v in vecs]


def _dense(A, sv):
    return tuple(to_dense(sv, A.dim))


def _raw_witness(shape, alt_vecs, conn_vecs, value):
    return (shape, tuple(dict(v) for v in alt_vecs), tuple(dict(v) for v in conn_vecs), dict(value))


def _first_nonzero(A, m, kind, deleted, config):
    """First nonzero evaluation of the rank-m barred family on basis assignments.

    deleted=None sweeps every deletion pattern in one shared-prefix search;
    a frozenset pins a single member. Canonical order: alternating tuples
    lexicographic, then per gap each connector index ascending, skip last.
    Returns a raw witness or None when every evaluation vanishes."""
    alt_dom = kind_basis(A, kind)
    conn_dom = kind_basis(A, ANY)
    if m > len(alt_dom):
        return None
    per_gap = len(conn_dom) + 1 if deleted is None else len(conn_dom)
    gaps = m - 1 if deleted is None else m - 1 - len(deleted)
    nominal = comb(len(alt_dom), m) * (per_gap**gaps if m > 1 else 1)
    if nominal > config.cap_evals:
        raise SizeCapError(
            f"barred Capelli sweep at rank {m} needs {nominal} evaluations, cap is {config.cap_evals}"
        )
    full = (1 << m) - 1

    def rec(g, states, choices):
        if g == m - 1:
            v = states.get(full)
            if v:
                dels = frozenset(i for i, c in enumerate(choices) if c is None)
                conn = [conn_dom[c] for c in choices if c is not None]
                return dels, conn, v
            return None
        if deleted is None:
            options = list(range(len(conn_dom))) + [None]
        elif g in deleted:
            options = [None]
        else:
            options = list(range(len(conn_dom)))
        for opt in options:
            if opt is None:
                joined = states
            else:
                joined = {}
                x = conn_dom[opt]
                for mask, v in states.items():
                    w = sparse_mul(A, v, x)
                    if w:
                        joined[mask] = w
                if not joined:
                    continue
            nxt = _extend_alternating(A, joined, alt_vecs, m)
            if not nxt:
                continue
            hit = rec(g + 1, nxt, choices + [opt])
            if hit:
                return hit
        return None

    for alt_idx in combinations(range(len(alt_dom)), m):
        alt_vecs = [alt_dom[t] for t in alt_idx]
        states = {1 << t: alt_vecs[t] for t in range(m)}
        hit = rec(0, states, [])
        if hit:
            dels, conn, value = hit
            return _raw_witness(CapelliShape(m, kind, dels), alt_vecs, conn, value)
    return None


def _random_probe(A, m, kind, deleted, config, tries=512):
    """Seeded random small-combination assignments; a nonzero value proves a
    member non-identity when the exhaustive sweep would blow the budget."""
    alt_dom = kind_basis(A, kind)
    conn_dom = kind_basis(A, ANY)
    if m > len(alt_dom):
        return None
    key = sorted(deleted) if deleted is not None else "all"
    rng = random.Random(f"{config.seed}|{m}|{kind}|{key}|probe")

    def rand_vec(dom):
        v = {}
        for _ in range(rng.randint(1, min(3, len(dom)))):
            c = rng.choice((-2, -1, 1, 2))
            for r, x in dom[rng.randrange(len(dom))].items():
                nc = v.get(r, 0) + c * x
                if nc == 0:
                    v.pop(r, None)
                else:
                    v[r] = nc
        return v

    for _ in range(tries):
        if deleted is None:
            dels = frozenset(g for g in range(m - 1) if rng.random() < 0.5)
        else:
            dels = deleted
        shape = CapelliShape(m, kind, dels)
        alt_vecs = [rand_vec(alt_dom) for _ in range(m)]
        conn_vecs = [rand_vec(conn_dom) for _ in shape.kept_gaps]
        value = evaluate_alternating_fast(A, shape, alt_vecs, conn_vecs)
        if value:
            return _raw_witness(shape, alt_vecs, conn_vecs, value)
    return None


def _identity_or_witness(A, m, kind, deleted, config):
    """None when every rank-m member vanishes identically; otherwise a raw witness.

    The exhaustive sweep is authoritative; when it exceeds the budget a seeded
    probe can still certify non-identity, but identity claims are never made
    from probes."""
    if m > len(kind_basis(A, kind)):
        return None
    try:
        return _first_nonzero(A, m, kind, deleted, config)
    except SizeCapError:
        probe = _random_probe(A, m, kind, deleted, config)
        if probe is not None:
            return probe
        raise


def _build_witness(A, raw, config):
    shape, alt_vecs, conn_vecs, value = raw
    replay = evaluate_alternating_fast(A, shape, list(alt_vecs), list(conn_vecs))
    if replay != value:
        raise InternalInconsistencyError("witness does not replay through the fast evaluator")
    poly = capelli_member(shape.rank, shape.kind, shape.deleted)
    assignment = [dict(v) for v in alt_vecs] + [dict(v) for v in conn_vecs]
    if factorial(shape.rank) <= 5040:
        naive = evaluate_sparse(A, poly, assignment)
        if naive != value:
            raise InternalInconsistencyError("witness does not replay through the term evaluator")
    return Witness(
        poly,
        tuple(_dense(A, v) for v in assignment),
        _dense(A, value),
    )


def is_graded_identity(A, p, config=DEFAULT_CONFIG):
    """Decide whether p vanishes under every admissible substitution.

    Capelli-shaped polynomials reduce to increasing basis tuples in the
    alternating slots; generic polynomials run the same reduction over their
    declared alternating groups and enumerate the rest."""
    if p.shape is not None:
        raw = _identity_or_witness(A, p.shape.rank, p.shape.kind, p.shape.deleted, config)
        if raw is None:
            return WitnessReport(True, None)
        return WitnessReport(False, _build_witness(A, raw, config))
    return _generic_identity(A, p, config)


def _generic_identity(A, p, config):
    domains = [kind_basis(A, k) for k in p.slot_kinds]
    grouped = set()
    choices = []
    for g in p.alt_groups:
        kind_set = {p.slot_kinds[s] for s in g}
        assert len(kind_set) == 1, "alternating group mixes slot kinds"
        dom = domains[g[0]]
        if len(dom) < len(g):
            continue
        grouped.update(g)
        choices.append((tuple(g), list(combinations(range(len(dom)), len(g)))))
    if any(s not in grouped for g2 in p.alt_groups for s in g2):
        # an alternating group wider than its domain: identically zero
        return WitnessReport(True, None)
    free = [s for s in range(p.nslots) if s not in grouped]
    for s in free:
        if not domains[s]:
            return WitnessReport(True, None)
    nominal = prod(len(c) for _, c in choices) * prod(len(domains[s]) for s in free)
    if nominal > config.cap_evals:
        raise SizeCapError(f"identity check needs {nominal} evaluations, cap is {config.cap_evals}")
    for combo in product(*(c for _, c in choices)):
        base = {}
        for (slots, _), picked in zip(choices, combo):
            for s, t in zip(slots, picked):
                base[s] = t
        for rest in product(*(range(len(domains[s])) for s in free)):
            for s, t in zip(free, rest):
                base[s] = t
            assignment = [domains[s][base[s]] for s in range(p.nslots)]
            value = evaluate_sparse(A, p, assignment)
            if value:
                witness = Witness(
                    p,
                    tuple(_dense(A, v) for v in assignment),
                    _dense(A, value),
                )
                return WitnessReport(False, witness)
    return WitnessReport(True, None)


def satisfies_generator_set(A, polys, config=DEFAULT_CONFIG):
    """Check a family of polynomials; reports the first failure with a witness."""
    for i, p in enumerate(polys):
        rep = is_graded_identity(A, p, config)
        if not rep.is_identity:
            return GeneratorSetReport(False, i, rep.witness)
    return GeneratorSetReport(True, None, None)


def capelli_threshold(A, kind, search_cap=None, config=DEFAULT_CONFIG, barred=True):
    """Smallest rank at which the whole (barred) Capelli family becomes identities.

    Alternating in more vectors than the component holds is identically zero,
    so the default cap is the component dimension plus one and always suffices.
    The report keeps the witness that rules out the rank just below, when one
    exists; ranks above the threshold are re-checked up to the cap."""
    alt_dim = len(kind_basis(A, kind))
    cap = search_cap if search_cap is not None else alt_dim + 1
    deleted = None if barred else frozenset()
    witness = None
    threshold = None
    for m in range(1, cap + 1):
        raw = _identity_or_witness(A, m, kind, deleted, config)
        if raw is None:
            threshold = m
            break
        witness = _build_witness(A, raw, config)
    if threshold is None:
        raise ValueError(f"no identity rank up to {cap} for kind {kind}")
    for m in range(threshold + 1, cap + 1):
        if _identity_or_witness(A, m, kind, deleted, config) is not None:
            raise InternalInconsistencyError(f"identity at rank {threshold} but not at {m}")
    return ThresholdReport(kind, threshold, cap, witness)


def ordinary_capelli_threshold(A, search_cap=None, config=DEFAULT_CONFIG, barred=True):
    """capelli_threshold with untyped alternating slots."""
    return capelli_threshold(A, ANY, search_cap, config, barred)


def barred_rank_is_identity(A, kind, m, config=DEFAULT_CONFIG):
    """True when every deletion-pattern member at rank m is a graded identity."""
    return _identity_or_witness(A, m, kind, None, config) is None


def threshold_offsets(spec, config=DEFAULT_CONFIG):
    """Measure the four thresholds of a block triangular algebra and express them
    through the componentwise dimension sums and trivial-grading corrections.

    With no trivially graded component the thresholds sit exactly at the sums
    plus the component count. Otherwise the even and odd corrections are read
    off two kinds each, cross-checked, and must split the excess of trivially
    graded components over their runs."""
    A = ut_star(spec)
    tags = spec.components if hasattr(spec, "components") else tuple(spec[0])
    m = len(tags)
    sums = [0, 0, 0, 0]
    for t in tags:
        for i, d in enumerate(classified_hom_dims(t)):
            sums[i] += d
    trivial = [is_trivially_graded(t) for t in tags]
    m_trivial = sum(trivial)
    m_runs = 0
    prev = False
    for f in trivial:
        if f and not prev:
            m_runs += 1
        prev = f
    thresholds = {}
    for kind in KINDS:
        thresholds[kind] = capelli_threshold(A, kind, config=config).threshold
    if m_trivial == 0:
        for i, kind in enumerate(KINDS):
            if thresholds[kind] != sums[i] + m:
                raise InternalInconsistencyError(
                    f"threshold for {kind} is {thresholds[kind]}, dimension count gives {sums[i] + m}"
                )
        return ThresholdOffsetReport(m, 0, 0, tuple(sums), thresholds, 0, 0)
    base = (m - m_trivial) + (m_runs - 1)
    off = {}
    for i, kind in enumerate(KINDS):
        off[kind] = thresholds[kind] - sums[i] - base - 1
    if off["y+"] != off["y-"] or off["z+"] != off["z-"]:
        raise InternalInconsistencyError(f"even/odd corrections disagree across kinds: {off}")
    r0, r1 = off["y+"], off["z+"]
    if r0 < 0 or r1 < 0 or r0 + r1 != m_trivial - m_runs:
        raise InternalInconsistencyError(
            f"corrections ({r0},{r1}) do not split {m_trivial} - {m_runs}"
        )
    return ThresholdOffsetReport(m, m_trivial, m_runs, tuple(sums), thresholds, r0, r1)


def _word_values(A, vecs):
    """Left-to-right products over all permutations of vecs, lex order, sparse."""
    n = len(vecs)
    out = [None] * factorial(n)

    def rec(prefix, remaining, pos):
        block = factorial(len(remaining) - 1)
        for a, t in enumerate(remaining):
            child = vecs[t] if prefix is None else sparse_mul(A, prefix, vecs[t])
            if not child:
                continue
            rest = remaining[:a] + remaining[a + 1 :]
            if rest:
                rec(child, rest, pos + a * block)
            else:
                out[pos + a * block] = child

    rec(None, tuple(range(n)), 0)
    return [w if w is not None else {} for w in out]


def _mod_frac(x, p):
    f = Fraction(x)
    if f.denominator % p == 0:
        raise InternalInconsistencyError(f"prime {p} divides a denominator")
    return f.numerator * pow(f.denominator, -1, p) % p


def _assignment_rank(A, domains, config, primes):
    """Rank of the matrix whose rows are the n! products of one slot vector each
    in every order, with one column per (assignment, coordinate) pair."""
    n = len(domains)
    nfact = factorial(n)
    if any(not d for d in domains):
        return 0
    nominal = prod(len(d) for d in domains) * nfact
    if nominal > config.cap_evals:
        raise SizeCapError(f"codimension sweep needs {nominal} evaluations, cap is {config.cap_evals}")
    tracker = RankTracker()
    ptrackers = [RankTrackerModP(p) for p in primes]
    seen = set()
    for combo in product(*(range(len(d)) for d in domains)):
        vecs = [domains[s][combo[s]] for s in range(n)]
        words = _word_values(A, vecs)
        support = sorted({r for w in words for r in w})
        for r in support:
            col = tuple(_as_num(w.get(r, 0)) for w in words)
            if col in seen:
                continue
            seen.add(col)
            tracker.add(list(col))
            for pt, p in zip(ptrackers, primes):
                pt.add([_mod_frac(c, p) for c in col])
        if tracker.rank == nfact and all(pt.rank == nfact for pt in ptrackers):
            break
    for pt, p in zip(ptrackers, primes):
        if pt.rank != tracker.rank:
            raise InternalInconsistencyError(
                f"rank {tracker.rank} over the rationals but {pt.rank} mod {p}"
            )
    return tracker.rank


def _contents(n):
    for n1 in range(n + 1):
        for n2 in range(n + 1 - n1):
            for n3 in range(n + 1 - n1 - n2):
                yield (n1, n2, n3, n - n1 - n2 - n3)


def _multinomial(n, content):
    v = factorial(n)
    for c in content:
        v //= factorial(c)
    return v


def codim_graded(A, n, config=DEFAULT_CONFIG):
    """The degree-n codimension of the typed multilinear identities: summed over
    kind contents, each content's evaluation rank times its multinomial weight."""
    assert n >= 1
    if n > config.cap_n:
        raise SizeCapError(f"codimension degree {n} over the cap {config.cap_n}")
    doms = {k: kind_basis(A, k) for k in KINDS}
    primes = (config.mod_p,) if config.mod_p else ()
    total = 0
    ranks = {}
    for content in _contents(n):
        slot_doms = []
        for c, k in zip(content, KINDS):
            slot_doms.extend([doms[k]] * c)
        r = _assignment_rank(A, slot_doms, config, primes)
        ranks[content] = r
        total += _multinomial(n, content) * r
    return CodimReport(n, total, ranks)


def codim_graded_bruteforce(A, n, config=DEFAULT_CONFIG):
    """Same value as codim_graded, summed over all 4^n kind vectors directly."""
    assert n >= 1
    if n > config.cap_n:
        raise SizeCapError(f"codimension degree {n} over the cap {config.cap_n}")
    doms = {k: kind_basis(A, k) for k in KINDS}
    primes = (config.mod_p,) if config.mod_p else ()
    total = 0
    for vector in product(KINDS, repeat=n):
        total += _assignment_rank(A, [doms[k] for k in vector], config, primes)
    return total


def codim_ordinary(A, n, config=DEFAULT_CONFIG):
    """The untyped degree-n codimension over the algebra's own basis."""
    assert n >= 1
    if n > config.cap_n:
        raise SizeCapError(f"codimension degree {n} over the cap {config.cap_n}")
    dom = [A.basis_sparse(k) for k in range(A.dim)]
    primes = (config.mod_p,) if config.mod_p else ()
    r = _assignment_rank(A, [dom] * n, config, primes)
    return CodimReport(n, r, {("any",) * n: r})


def codim_table(A, n_max, config=DEFAULT_CONFIG):
    """Graded codimensions 1..n_max with their n-th roots."""
    rows = []
    for n in range(1, n_max + 1):
        rep = codim_graded(A, n, config)
        root = rep.value ** (1.0 / n) if rep.value else 0.0
        rows.append((n, rep.value, root))
    return rows


def admissible_exponent(A, config=DEFAULT_CONFIG):
    """Largest total block dimension over subsets of Wedderburn blocks that can
    be chained through the radical in some order without vanishing."""
    assert A.wedderburn is not None, "needs Wedderburn block data"
    blocks = A.wedderburn.blocks
    if not blocks:
        return 0
    J = jacobson_radical(A)
    spans = [coordinate_span(A.dim, b.indices) for b in blocks]
    best = 0
    for size in range(1, len(blocks) + 1):
        for subset in combinations(range(len(blocks)), size):
            total = sum(spans[i].dim for i in subset)
            if total <= best:
                continue
            if any(_chain_nonzero(A, [spans[i] for i in perm], J) for perm in permutations(subset)):
                best = total
    return best


def is_reduced(A, config=DEFAULT_CONFIG):
    """True when the full block set admits a nonvanishing radical chain."""
    assert A.wedderburn is not None, "needs Wedderburn block data"
    blocks = A.wedderburn.blocks
    if not blocks:
        return False
    J = jacobson_radical(A)
    spans = [coordinate_span(A.dim, b.indices) for b in blocks]
    return any(
        _chain_nonzero(A, [spans[i] for i in perm], J)
        for perm in permutations(range(len(blocks)))
    )


def _chain_nonzero(A, block_spans, J):
    S = block_spans[0]
    for B in block_spans[1:]:
        S = subspace_product(A, S, J)
        if S.is_zero():
            return False
        S = subspace_product(A, S, B)
        if S.is_zero():
            return False
    return not S.is_zero()
