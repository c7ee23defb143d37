"""Independent decision procedures: certificate verification and exhaustive search."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..bweyl import SignedPerm
from ..config import BRUTE_FORCE_BUDGET, budget
from ..errors import BudgetExceeded, GeneratorOutsideNormalizer
from ..normalizer import NormalizerGroup, normalize_kind, perm_of
from ..sympmat import MonomialMatrix, SympMatrix
from .verdict import ComplementCertificate


def _key(kind: str, m: MonomialMatrix) -> tuple:
    return m.proj_key() if kind == "PSp" else m.key()


def subgroup_closure(spec, kind: str, gens: list, limit: int | None = None):
    """Elements of <gens> (modulo +-I in PSp) and whether it meets the torus trivially.

    Returns (list of matrices, intersection_trivial).  Stops early once the
    subgroup exceeds ``limit`` elements.
    """
    kind = normalize_kind(kind)
    dim = 2 * spec.n
    ident = MonomialMatrix.identity(spec.ambient, dim)
    seen = {_key(kind, ident): ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            k = _key(kind, y)
            if k not in seen:
                seen[k] = y
                if limit is not None and len(seen) > limit:
                    return list(seen.values()), False
                queue.append(y)
    ident_perm = tuple(range(dim))
    id_key = _key(kind, ident)
    trivial = all(m.cols != ident_perm or k == id_key for k, m in seen.items())
    return list(seen.values()), trivial


def _as_monomial(group: NormalizerGroup, g) -> MonomialMatrix:
    if isinstance(g, MonomialMatrix):
        return g
    if not isinstance(g, SympMatrix) or g.field is not group.field or g.dim != 2 * group.spec.n:
        raise GeneratorOutsideNormalizer("generator is not a matrix over the ambient field")
    if not g.is_monomial():
        raise GeneratorOutsideNormalizer("generator is not monomial")
    return MonomialMatrix.from_dense(g)


def verify_complement(group: NormalizerGroup, cert: ComplementCertificate) -> bool:
    """True iff <generators> has order |C_W(w)|, meets T trivially, and lies in N.

    In PSp everything is read modulo +-I.  Together the three conditions give
    N = T x| H by counting.
    """
    mats = [_as_monomial(group, g) for g in cert.generators]
    for m in mats:
        if not group.contains(m):
            raise GeneratorOutsideNormalizer("generator is not in the normalizer")
    elements, trivial = subgroup_closure(group.spec, group.kind, mats, limit=group.quotient_order)
    return trivial and len(elements) == group.quotient_order


# exhaustive search

@dataclass
class SearchStats:
    generators: list = field(default_factory=list)
    lifts_total: list = field(default_factory=list)
    lifts_kept: list = field(default_factory=list)
    nodes: int = 0


@dataclass
class BruteForceResult:
    certificate: ComplementCertificate | None
    stats: SearchStats

    @property
    def splits(self) -> bool:
        return self.certificate is not None


def greedy_generators(cw: list) -> list:
    """Generating set of a permutation group: highest order first, ties by key."""
    ordered = sorted(cw, key=lambda x: (-x.order(), x.img))
    ident = SignedPerm.identity(cw[0].n)
    span = {ident}
    gens = []
    for x in ordered:
        if x in span:
            continue
        gens.append(x)
        span = _closure(span, gens)
        if len(span) == len(cw):
            break
    return gens


def _closure(start: set, gens: list) -> set:
    seen = set(start)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _proj_order(group: NormalizerGroup, m: MonomialMatrix, cap: int) -> int | None:
    x = m
    for e in range(1, cap + 1):
        if group.is_scalar_identity(x):
            return e
        x = x * m
    return None


def _consistent(group: NormalizerGroup, gens: list, lifts: list) -> bool:
    """Does g_i -> lifts[i] extend to a homomorphism on <g_1, ..., g_j>?

    Builds a spanning tree of the Cayley graph and checks every edge.
    """
    kind = group.kind
    ident = SignedPerm.identity(group.spec.n)
    sec = {ident: MonomialMatrix.identity(group.field, 2 * group.spec.n)}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        sx = sec[x]
        for g, lg in zip(gens, lifts):
            y = x * g
            val = sx * lg
            if y in sec:
                if _key(kind, sec[y]) != _key(kind, val):
                    return False
            else:
                sec[y] = val
                queue.append(y)
    return True


def brute_force_split(group: NormalizerGroup, limit: int | None = None) -> BruteForceResult:
    """Decide exactly whether the torus has a complement in N (or in its PSp image).

    A complement is the image of a homomorphic section C_W(w) -> N.  The search
    fixes a generating set g_1, ..., g_r of C_W(w), tries every lift of each
    g_i whose (projective) order equals ord(g_i), and backtracks as soon as the
    partial assignment fails to define a homomorphism on <g_1, ..., g_j>.
    """
    limit = budget(BRUTE_FORCE_BUDGET) if limit is None else limit
    if group.order > limit:
        raise BudgetExceeded(f"|N| = {group.order} exceeds brute-force budget {limit}")
    gens = greedy_generators(group.cw)
    stats = SearchStats(generators=gens)
    tori = list(group.torus_elements())
    candidates = []
    for g in gens:
        r = group.transversal[g]
        seen = set()
        kept = []
        total = 0
        for t in tori:
            m = t * r
            k = _key(group.kind, m)
            if k in seen:
                continue
            seen.add(k)
            total += 1
            if _proj_order(group, m, g.order()) == g.order():
                kept.append(m)
        stats.lifts_total.append(total)
        stats.lifts_kept.append(len(kept))
        candidates.append(kept)

    chosen = []

    def search(j: int) -> bool:
        if j == len(gens):
            return True
        for m in candidates[j]:
            stats.nodes += 1
            chosen.append(m)
            if _consistent(group, gens[: j + 1], chosen) and search(j + 1):
                return True
            chosen.pop()
        return False

    if not search(0):
        return BruteForceResult(None, stats)
    elements, trivial = subgroup_closure(group.spec, group.kind, chosen)
    names = [f"g{i + 1}" for i in range(len(chosen))]
    cert = ComplementCertificate(
        generators=[m.to_dense() for m in chosen],
        relations_checked=[],
        complement_order=len(elements),
        intersection_trivial=trivial,
        rule="search",
        names=names,
        kind=group.kind,
    )
    if not verify_complement(group, cert):  # pragma: no cover - search invariant
        raise AssertionError("search produced an invalid complement")
    return BruteForceResult(cert, stats)


def is_torus_element(m: MonomialMatrix) -> bool:
    return perm_of(m) is not None and m.is_diagonal()
