"""The algebraic normalizer N of a maximal torus T in Sp_{2n}(q), and its image in PSp.

Model.  Let w be the standard representative of the type and n_w the product
of the monomial lifts of its block cycles.  Twisting the q-Frobenius by n_w,

    F(X) = n_w^-1 * X^(q) * n_w,

the torus T is the group of diagonal symplectic F-fixed matrices over
GF(q^L), and N is the group of monomial symplectic F-fixed matrices.  N/T is
the centralizer C_W(w) of w in the signed permutation group.

Every element of N is stored as (torus point, Weyl element): its matrix is
realize(t) * R_x, where R_x is a fixed transversal matrix obtained by
breadth-first search over words in the block generators of C_W(w).

In PSp the group is read modulo {+-I}: matrices are compared through
:meth:`MonomialMatrix.proj_key`.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .bweyl import SignedPerm, block_generators, centralizer, logical, standard_rep
from .config import NORMALIZER_BUDGET, budget
from .errors import BudgetExceeded, NotInNormalizer, WordNotFound
from .sympmat import MonomialMatrix, SympMatrix, generator_lifts
from .torus import TorusPoint, TorusSpec, decompose_logs, enumerate_torus, realize_monomial

KINDS = ("Sp", "PSp")


def normalize_kind(kind: str) -> str:
    k = kind.strip().lower()
    if k == "sp":
        return "Sp"
    if k == "psp":
        return "PSp"
    raise ValueError(f"unknown group kind {kind!r}")


def perm_of(m: MonomialMatrix) -> SignedPerm:
    """Signed permutation whose row-convention matrix has the support of m."""
    dim = m.dim
    n = dim // 2
    img = [logical(m.cols[i], n) for i in range(n)]
    try:
        x = SignedPerm(n, tuple(img))
    except ValueError:
        return None
    return x if x.points() == m.cols else None


@dataclass
class NormalizerElement:
    torus_part: TorusPoint
    weyl_part: SignedPerm
    matrix: MonomialMatrix = field(repr=False)

    def dense(self) -> SympMatrix:
        return self.matrix.to_dense()


class NormalizerGroup:
    """N = T * {R_x : x in C_W(w)} for a torus spec, in Sp or PSp."""

    def __init__(self, spec: TorusSpec, kind: str = "Sp", limit: int | None = None):
        self.spec = spec
        self.kind = normalize_kind(kind)
        self.type = spec.type
        self.field = spec.ambient
        self.w = standard_rep(spec.type)
        self.cw = centralizer(self.w)
        limit = budget(NORMALIZER_BUDGET) if limit is None else limit
        if spec.order * len(self.cw) > limit:
            raise BudgetExceeded(f"|N| = {spec.order * len(self.cw)} exceeds budget {limit}")
        lifts = generator_lifts(spec.type)
        self.generator_names = [name for name, _ in block_generators(spec.type)]
        self.generators = {
            name: MonomialMatrix.from_perm(self.field, perm, rows)
            for name, (perm, rows) in lifts.items()
        }
        self.generator_perms = {name: perm for name, (perm, _) in lifts.items()}
        nw = MonomialMatrix.identity(self.field, spec.dim)
        for j in range(1, spec.m + 1):
            name = ("varpi%d" if j <= spec.type.k else "omega%d") % j
            nw = nw * self.generators[name]
        self.nw = nw
        self._nw_inv = nw.inverse()
        self.words, self.transversal = self._build_transversal()

    # structure

    def _build_transversal(self):
        ident = SignedPerm.identity(self.spec.n)
        words = {ident: ()}
        mats = {ident: MonomialMatrix.identity(self.field, self.spec.dim)}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for name in self.generator_names:
                y = x * self.generator_perms[name]
                if y not in words:
                    words[y] = words[x] + (name,)
                    mats[y] = mats[x] * self.generators[name]
                    queue.append(y)
        cw = set(self.cw)
        missing = cw - set(words)
        if missing or set(words) != cw:
            raise WordNotFound(f"{len(missing)} centralizer elements not reached by block generators")
        return words, mats

    @property
    def torus_order(self) -> int:
        """|T| in Sp, |T/{+-I}| in PSp for odd q."""
        if self.kind == "PSp" and self.spec.p != 2:
            return self.spec.order // 2
        return self.spec.order

    @property
    def quotient_order(self) -> int:
        return len(self.cw)

    @property
    def order(self) -> int:
        return self.torus_order * self.quotient_order

    def frob_twist(self, m: MonomialMatrix) -> MonomialMatrix:
        """F(X) = n_w^-1 X^(q) n_w."""
        return self._nw_inv * m.frobenius(self.spec.q) * self.nw

    def key(self, m: MonomialMatrix) -> tuple:
        return m.proj_key() if self.kind == "PSp" else m.key()

    def is_scalar_identity(self, m: MonomialMatrix) -> bool:
        """m is the identity of the group (I, or +-I in PSp)."""
        if m.is_identity():
            return True
        return self.kind == "PSp" and m == -MonomialMatrix.identity(self.field, m.dim)

    # elements

    def element(self, t: TorusPoint, x: SignedPerm) -> NormalizerElement:
        return NormalizerElement(t, x, realize_monomial(t) * self.transversal[x])

    def contains(self, m: MonomialMatrix) -> bool:
        x = perm_of(m)
        return (x is not None and x in self.transversal and m.is_symplectic()
                and self.frob_twist(m) == m)

    def decompose(self, m) -> NormalizerElement:
        """Split m = realize(t) * R_x; raises NotInNormalizer otherwise."""
        if isinstance(m, SympMatrix):
            if m.field is not self.field or not m.is_monomial():
                raise NotInNormalizer("matrix is not monomial over the ambient field")
            m = MonomialMatrix.from_dense(m)
        if not self.contains(m):
            raise NotInNormalizer("matrix is not in the normalizer")
        x = perm_of(m)
        d = m * self.transversal[x].inverse()
        t = decompose_logs(self.spec, d.logs)
        if t is None:
            raise NotInNormalizer("torus part is not in the torus")
        return NormalizerElement(t, x, m)

    def torus_part(self, m: MonomialMatrix) -> TorusPoint:
        return self.decompose(m).torus_part

    def elements(self):
        """Every element once (in PSp: one representative per pair +-M)."""
        seen = set() if self.kind == "PSp" and self.spec.p != 2 else None
        for x in self.cw:
            r = self.transversal[x]
            for t in enumerate_torus(self.spec):
                m = realize_monomial(t) * r
                if seen is not None:
                    k = m.proj_key()
                    if k in seen:
                        continue
                    seen.add(k)
                yield m

    def torus_elements(self):
        """Realized torus (modulo +-I in PSp), as monomial matrices."""
        seen = set()
        for t in enumerate_torus(self.spec):
            m = realize_monomial(t)
            k = self.key(m)
            if k not in seen:
                seen.add(k)
                yield m

    # checks

    def conjugation_action(self, g: NormalizerElement, t: TorusPoint) -> TorusPoint:
        return conjugation_action(self, g, t)

    def quotient_check(self) -> bool:
        return quotient_check(self)


def build_normalizer(spec: TorusSpec, kind: str = "Sp", limit: int | None = None) -> NormalizerGroup:
    return NormalizerGroup(spec, kind, limit)


def conjugation_action(group: NormalizerGroup, g: NormalizerElement, t: TorusPoint) -> TorusPoint:
    """Torus point of g * realize(t) * g^-1."""
    m = g.matrix if isinstance(g, NormalizerElement) else g
    if not group.contains(m):
        raise NotInNormalizer("conjugating element is not in the normalizer")
    conj = m * realize_monomial(t) * m.inverse()
    pt = decompose_logs(group.spec, conj.logs) if conj.is_diagonal() else None
    if pt is None:
        raise NotInNormalizer("conjugate left the torus")
    return pt


def quotient_check(group: NormalizerGroup) -> bool:
    """N -> C_W(w) is onto with kernel exactly T.

    Checks: every transversal matrix lies in N; transversal products close up
    to torus factors (so x -> R_x T is a homomorphism onto C_W(w)); the
    realized torus is F-fixed and normalized by every generator; and the
    number of F-fixed diagonal symplectic matrices -- computed independently
    by :func:`count_fixed_lifts` -- equals |T|, so the kernel is T itself.
    """
    spec = group.spec
    for r in group.transversal.values():
        if not (r.is_symplectic() and group.frob_twist(r) == r):
            return False
    for x, rx in group.transversal.items():
        for y, ry in group.transversal.items():
            d = rx * ry * group.transversal[x * y].inverse()
            if not d.is_diagonal() or decompose_logs(spec, d.logs) is None:
                return False
    gens = [realize_monomial(spec.point([1 if i == j else 0 for i in range(spec.m)]))
            for j in range(spec.m)]
    for g in gens:
        if not (g.is_symplectic() and group.frob_twist(g) == g):
            return False
        for r in group.generators.values():
            c = r * g * r.inverse()
            if not c.is_diagonal() or decompose_logs(spec, c.logs) is None:
                return False
    ident = SignedPerm.identity(spec.n)
    return count_fixed_lifts(group, ident) == spec.order


# independent count of F-fixed lifts

def count_fixed_lifts(group: NormalizerGroup, x: SignedPerm) -> int:
    """Number of symplectic monomial matrices with support x fixed by F.

    Works directly from the fixed-point equations, without the torus
    parametrisation.  Write X as row r -> column x(r) with entry g^l_r and
    n_w as row r -> column pi(r) with entry g^a_r.  Then F(X) has row pi(r)
    -> column pi(x(r)) with log q*l_r + a_x(r) - a_r, so F(X) = X forces x to
    commute with pi and l_pi(r) = q*l_r + a_x(r) - a_r.  The symplectic
    condition ties l_r and l_(r+n).  Each pi-cycle is swept over every
    possible starting value (vectorised).
    """
    n = group.spec.n
    dim = 2 * n
    N = group.field.order - 1
    q = group.spec.q
    h = group.field.neg_one_log
    xs = x.points()
    pi = group.nw.cols
    a = group.nw.logs
    if any(xs[pi[r]] != pi[xs[r]] for r in range(dim)):
        return 0

    def partner(r):
        return (r + n) % dim

    def sym_target(r):
        # l_r + l_(r+n) for r < n: 0 if x(r) is a positive position, else log(-1)
        return 0 if xs[r] < n else h

    b = [(a[xs[r]] - a[r]) % N for r in range(dim)]
    done = [False] * dim
    total = 1
    for start in range(dim):
        if done[start]:
            continue
        cyc = [start]
        while pi[cyc[-1]] != start:
            cyc.append(pi[cyc[-1]])
        other = None
        if partner(start) not in cyc:
            other = [partner(start)]
            while pi[other[-1]] != partner(start):
                other.append(pi[other[-1]])
        for r in cyc + (other or []):
            done[r] = True
        base = np.arange(N, dtype=np.int64)
        vals = {start: base}
        ok = np.ones(N, dtype=bool)
        cur = base
        for r in cyc:
            cur = (q * cur + b[r]) % N
            if pi[r] == start:
                ok &= cur == base
            else:
                vals[pi[r]] = cur
        if other is None:
            for r in cyc:
                if r < n:
                    ok &= (vals[r] + vals[partner(r)]) % N == sym_target(r)
        else:
            for r in cyc:
                j = partner(r)
                vals[j] = (sym_target(min(r, j)) - vals[r]) % N
            for r in other:
                ok &= (q * vals[r] + b[r]) % N == vals[pi[r]]
        total *= int(ok.sum())
        if total == 0:
            return 0
    return total


def normalizer_order_by_count(group: NormalizerGroup) -> int:
    """|N| summed over all of W from the fixed-lift equations (Sp count)."""
    from .bweyl import all_elements
    return sum(count_fixed_lifts(group, x) for x in all_elements(group.spec.n))
