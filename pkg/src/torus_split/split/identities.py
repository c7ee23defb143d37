"""Exhaustive checks of the monomial commutation identities behind the obstructions.

Each identity concerns monomial matrices whose nonzero entries are products of
powers of unknown field elements (and their Frobenius images).  Over a finite
field GF(p^k) with primitive element g, writing every unknown as g^x turns all
entries into affine forms in the exponents x, and every hypothesis of the form
"word = +-I", "word = z I" or "word is scalar" into linear congruences modulo
|F*|.  The solver enumerates every solution of those congruences, so a check
covers the whole parameter space: unknowns that never occur in any congruence
contribute a free factor |F*| each and are not enumerated individually.

Permutation matrices in this module follow the textbook column convention:
the matrix of a permutation s has a 1 in row s(i), column i.

A second, independent route samples concrete parameters and evaluates the same
words with dense matrix arithmetic (:func:`dense_check`).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .. import gf
from ..bweyl import SignedPerm
from ..errors import BudgetExceeded
from ..sympmat import MonomialMatrix, SympMatrix, identity, tau0
from .words import commutes, eval_word

ENUMERATION_LIMIT = 4_000_000


# symbolic monomial matrices

class Params:
    """Named unknown exponents."""

    def __init__(self):
        self.names: list[str] = []

    def new(self, name: str) -> int:
        self.names.append(name)
        return len(self.names) - 1

    def block(self, stem: str, size: int) -> list:
        return [self.new(f"{stem}{i + 1}") for i in range(size)]

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


class LogLinear:
    """Monomial matrix with entries g^(const + coef . x): row i has its entry in column cols[i]."""

    __slots__ = ("N", "cols", "const", "coef")

    def __init__(self, N: int, cols, const, coef):
        self.N = N
        self.cols = np.asarray(cols, dtype=np.int64)
        self.const = np.asarray(const, dtype=np.int64) % N
        self.coef = np.asarray(coef, dtype=np.int64) % N

    @property
    def dim(self) -> int:
        return len(self.cols)

    @classmethod
    def identity(cls, N: int, dim: int, nvars: int) -> "LogLinear":
        return cls(N, np.arange(dim), np.zeros(dim), np.zeros((dim, nvars)))

    @classmethod
    def from_terms(cls, N: int, nvars: int, terms, cols=None) -> "LogLinear":
        """terms[i] = (constant log, {var: coefficient}); cols default to the identity."""
        dim = len(terms)
        const = np.zeros(dim, dtype=np.int64)
        coef = np.zeros((dim, nvars), dtype=np.int64)
        for i, (c, lin) in enumerate(terms):
            const[i] = c
            for v, a in lin.items():
                coef[i, v] += a
        return cls(N, np.arange(dim) if cols is None else cols, const, coef)

    def __mul__(self, other: "LogLinear") -> "LogLinear":
        c = self.cols
        return LogLinear(self.N, other.cols[c], self.const + other.const[c], self.coef + other.coef[c])

    def inverse(self) -> "LogLinear":
        cols = np.empty_like(self.cols)
        cols[self.cols] = np.arange(self.dim)
        const = np.empty_like(self.const)
        const[self.cols] = -self.const
        coef = np.empty_like(self.coef)
        coef[self.cols] = -self.coef
        return LogLinear(self.N, cols, const, coef)

    def __pow__(self, e: int) -> "LogLinear":
        base = self if e >= 0 else self.inverse()
        result = LogLinear.identity(self.N, self.dim, self.coef.shape[1])
        for _ in range(abs(e)):
            result = result * base
        return result

    def is_diagonal(self) -> bool:
        return bool(np.array_equal(self.cols, np.arange(self.dim)))

    def concrete(self, field: gf.FieldSpec, values) -> MonomialMatrix:
        logs = (self.const + self.coef @ np.asarray(values, dtype=np.int64)) % self.N
        return MonomialMatrix(field, tuple(int(c) for c in self.cols), tuple(int(x) for x in logs))


def column_perm(x: SignedPerm) -> np.ndarray:
    """Row form of the column-convention matrix of x (a 1 in row x(i), column i)."""
    return np.asarray(x.inverse().points(), dtype=np.int64)


def cycle_perm(size: int, start: int, length: int) -> np.ndarray:
    """Column-convention matrix of the cycle (start+1, ..., start+length) on size points."""
    img = list(range(size))
    for i in range(length):
        img[start + i] = start + (i + 1) % length
    cols = np.empty(size, dtype=np.int64)
    cols[np.asarray(img)] = np.arange(size)
    return cols


# conditions and equations

@dataclass(frozen=True)
class Cond:
    """One hypothesis or conclusion.

    kind "sign": word = sign * I;  "z": word = g^z I for the unknown z;
    "scalar": word is scalar;  "linear": sum coef[v] x_v + const = 0 mod |F*|.
    """

    kind: str
    word: str = ""
    sign: int = 1
    z: int = -1
    coef: tuple = ()
    const: int = 0

    def describe(self, names) -> str:
        if self.kind == "sign":
            return f"{self.word} = {'+' if self.sign == 1 else '-'}I"
        if self.kind == "z":
            return f"{self.word} = {names[self.z]} I"
        if self.kind == "scalar":
            return f"{self.word} scalar"
        terms = " + ".join(f"{a}*{names[v]}" for v, a in self.coef)
        return f"log({terms}) = {self.const}"


def sign_is(word: str, sign: int) -> Cond:
    return Cond("sign", word, sign=sign)


def scalar_is(word: str, z: int) -> Cond:
    return Cond("z", word, z=z)


def is_scalar(word: str) -> Cond:
    return Cond("scalar", word)


def linear(coef, const: int = 0) -> Cond:
    """sum a * log(x_v) = const (mod |F*|), i.e. prod x_v^a = g^const.

    ``coef`` is a dict or a sequence of (v, a) pairs; repeated unknowns add up.
    """
    total: dict = {}
    for v, a in (coef.items() if isinstance(coef, dict) else coef):
        total[v] = total.get(v, 0) + a
    return Cond("linear", coef=tuple(sorted(total.items())), const=const)


def equations(cond: Cond, gens: dict, nvars: int, N: int, h: int):
    """Linear congruences (coef, const): coef . x + const = 0 mod N; None if unsatisfiable."""
    if cond.kind == "linear":
        coef = np.zeros(nvars, dtype=np.int64)
        for v, a in cond.coef:
            coef[v] += a
        return [(coef % N, (-cond.const) % N)]
    m = eval_word(cond.word, gens)
    if not m.is_diagonal():
        return None
    eqs = []
    for i in range(m.dim):
        coef, const = m.coef[i].copy(), int(m.const[i])
        if cond.kind == "sign":
            const -= 0 if cond.sign == 1 else h
        elif cond.kind == "z":
            coef[cond.z] -= 1
        elif cond.kind == "scalar":
            if i == 0:
                continue
            coef = coef - m.coef[0]
            const -= int(m.const[0])
        eqs.append((coef % N, const % N))
    return eqs


# exhaustive solver

@dataclass
class Solutions:
    N: int
    variables: list          # enumerated variable indices, in column order
    values: np.ndarray       # one row per solution over ``variables``
    free: int                # unknowns absent from every congruence

    @property
    def count(self) -> int:
        return len(self.values) * self.N ** self.free


def solve(eqs: list, nvars: int, N: int, keep=(), limit: int = ENUMERATION_LIMIT) -> Solutions:
    """All solutions of the congruences, enumerating only the variables that occur."""
    eqs = [(np.asarray(c, dtype=np.int64) % N, int(b) % N) for c, b in eqs]
    live = []
    for c, b in eqs:
        if not c.any():
            if b:
                return Solutions(N, [], np.zeros((0, 0), dtype=np.int64), 0)
            continue
        live.append((c, b))
    support = [set(np.flatnonzero(c).tolist()) for c, _ in live]
    effective = set().union(*support) | set(keep) if support else set(keep)
    order: list = []
    remaining = set(effective)
    while remaining:
        assigned = set(order)

        def gain(v):
            done = sum(1 for s in support if v in s and s <= assigned | {v})
            return (done, sum(1 for s in support if v in s), -v)

        v = max(remaining, key=gain)
        order.append(v)
        remaining.discard(v)
    values = np.zeros((1, 0), dtype=np.int64)
    checked = [False] * len(live)
    for depth, v in enumerate(order):
        if len(values) * N > limit:
            raise BudgetExceeded(f"identity enumeration exceeds {limit} partial assignments")
        values = np.hstack([np.repeat(values, N, axis=0),
                            np.tile(np.arange(N, dtype=np.int64), len(values))[:, None]])
        assigned = set(order[: depth + 1])
        cols = np.asarray(order[: depth + 1], dtype=np.int64)
        mask = np.ones(len(values), dtype=bool)
        for j, (c, b) in enumerate(live):
            if not checked[j] and support[j] <= assigned:
                checked[j] = True
                mask &= (values @ c[cols] + b) % N == 0
        values = values[mask]
        if not len(values):
            values = np.zeros((0, len(order)), dtype=np.int64)
            break
    return Solutions(N, order, values, nvars - len(effective))


def satisfies(sol: Solutions, eqs) -> np.ndarray:
    """Row mask of solutions that satisfy every congruence in eqs (None = impossible)."""
    if eqs is None:
        return np.zeros(len(sol.values), dtype=bool)
    cols = np.asarray(sol.variables, dtype=np.int64)
    pos = {v: i for i, v in enumerate(sol.variables)}
    mask = np.ones(len(sol.values), dtype=bool)
    for c, b in eqs:
        extra = [v for v in np.flatnonzero(c).tolist() if v not in pos]
        if extra:
            raise ValueError("conclusion involves unknowns that were not enumerated")
        mask &= (sol.values @ c[cols] + b) % sol.N == 0 if len(cols) else (b % sol.N == 0)
    return mask


# identity cases

@dataclass
class IdentityCase:
    name: str
    config: str
    field: gf.FieldSpec
    params: Params
    gens: dict
    hypothesis: list
    conclusion: list | None     # None: the hypothesis must have no solution at all

    @property
    def N(self) -> int:
        return self.field.order - 1


@dataclass
class IdentityReport:
    name: str
    config: str
    solutions: int
    counterexamples: int
    statement: str = ""
    samples: list = field(default_factory=list, repr=False)

    @property
    def holds(self) -> bool:
        return self.counterexamples == 0


def _hyp_equations(case: IdentityCase):
    h = case.field.neg_one_log
    eqs = []
    for cond in case.hypothesis:
        e = equations(cond, case.gens, len(case.params), case.N, h)
        if e is None:
            return None
        eqs += e
    return eqs


def _conclusion_equations(case: IdentityCase):
    if case.conclusion is None:
        return None
    h = case.field.neg_one_log
    eqs = []
    for cond in case.conclusion:
        e = equations(cond, case.gens, len(case.params), case.N, h)
        if e is None:
            return None
        eqs += e
    return eqs


def check_identity(case: IdentityCase, limit: int = ENUMERATION_LIMIT) -> IdentityReport:
    """Enumerate every parameter choice satisfying the hypothesis; count conclusion failures."""
    names = case.params.names
    statement = "; ".join(c.describe(names) for c in case.hypothesis) + " => " + (
        "impossible" if case.conclusion is None else "; ".join(c.describe(names) for c in case.conclusion))
    hyp = _hyp_equations(case)
    conc = _conclusion_equations(case)
    if hyp is None:
        return IdentityReport(case.name, case.config, 0, 0, statement)
    keep = set()
    for c, _ in conc or []:
        keep |= set(np.flatnonzero(c).tolist())
    sol = solve(hyp, len(case.params), case.N, keep=keep, limit=limit)
    ok = satisfies(sol, conc)
    bad = int((~ok).sum()) * case.N ** sol.free
    return IdentityReport(case.name, case.config, sol.count, bad, statement,
                          samples=[dict(zip(sol.variables, row.tolist())) for row in sol.values[:64]])


# dense cross-check

def _dense_cond(cond: Cond, dense: dict, case: IdentityCase, values) -> bool:
    f = case.field
    if cond.kind == "linear":
        acc = f.one
        for v, a in cond.coef:
            acc = acc * gf.FieldElem(f, f.exp(int(values[v]))) ** a
        return acc == gf.FieldElem(f, f.exp(cond.const))
    m = eval_word(cond.word, dense)
    dim = m.dim
    if cond.kind == "sign":
        target = identity(f, dim) if cond.sign == 1 else -identity(f, dim)
        return m == target
    if cond.kind == "z":
        return m == identity(f, dim).scale(f.exp(int(values[cond.z])))
    return m.is_scalar()


def dense_check(case: IdentityCase, values) -> tuple:
    """(hypothesis holds, conclusion holds) for concrete exponents, using dense matrices."""
    dense = {k: g.concrete(case.field, values).to_dense() for k, g in case.gens.items()}
    hyp = all(_dense_cond(c, dense, case, values) for c in case.hypothesis)
    if case.conclusion is None:
        return hyp, False
    return hyp, all(_dense_cond(c, dense, case, values) for c in case.conclusion)


def sample_solution(case: IdentityCase, report_or_sol, rng: random.Random):
    """A concrete full assignment extending a random enumerated solution (free unknowns random)."""
    values = [rng.randrange(case.N) for _ in range(len(case.params))]
    samples = report_or_sol.samples
    if samples:
        for v, x in rng.choice(samples).items():
            values[v] = x
    return values


# builders shared by the suites

def _diag(N, nvars, entries) -> LogLinear:
    return LogLinear.from_terms(N, nvars, entries)


def _var(v, a=1):
    return (0, {v: a})


def _frob_block(v: int, size: int, q: int, N: int, invert: bool = False):
    s = -1 if invert else 1
    return [(0, {v: s * pow(q, i, N)}) for i in range(size)]


def _with_perm(d: LogLinear, cols) -> LogLinear:
    p = LogLinear(d.N, cols, np.zeros(d.dim), np.zeros_like(d.coef))
    return d * p


def _block_weyl(n: int, parts, j: int, kind: str) -> SignedPerm:
    """varpi_j ("varpi"), tau_j ("tau") or omega_j ("omega") on consecutive blocks."""
    start = sum(parts[: j - 1]) + 1
    length = parts[j - 1]
    idx = list(range(start, start + length))
    if kind == "varpi":
        return SignedPerm.from_cycles(n, tuple(idx) + tuple(-i for i in idx))
    if kind == "tau":
        return SignedPerm.from_cycles(n, *[(i, -i) for i in idx])
    cyc = [tuple(idx), tuple(-i for i in idx)] if length > 1 else []
    return SignedPerm.from_cycles(n, *cyc)


# suites: GL_n block-cycle identities over a given field

def commuting_cycles_case(n1: int, n2: int, field: gf.FieldSpec) -> IdentityCase:
    """s1 = diag(l, m) sigma_1, s2 = diag(l', m') sigma_2 with s1 s2 = s2 s1 (z I).

    Conclusion: l'_{i+1} = l'_i z, m_j = m_{j+1} z, l'_1 = l'_{n1} z, m_{n2} = m_1 z,
    z^{n1} = z^{n2} = 1.
    """
    n = n1 + n2
    N = field.order - 1
    P = Params()
    lam, mu = P.block("l", n1), P.block("m", n2)
    lam2, mu2 = P.block("l'", n1), P.block("m'", n2)
    z = P.new("z")
    nv = len(P)
    s1 = _with_perm(_diag(N, nv, [_var(v) for v in lam + mu]), cycle_perm(n, 0, n1))
    s2 = _with_perm(_diag(N, nv, [_var(v) for v in lam2 + mu2]), cycle_perm(n, n1, n2))
    concl = [linear([(lam2[i + 1], 1), (lam2[i], -1), (z, -1)]) for i in range(n1 - 1)]
    concl += [linear([(mu[j], 1), (mu[j + 1], -1), (z, -1)]) for j in range(n2 - 1)]
    concl += [linear([(lam2[0], 1), (lam2[-1], -1), (z, -1)]), linear([(mu[-1], 1), (mu[0], -1), (z, -1)]),
              linear({z: n1}), linear({z: n2})]
    return IdentityCase("commuting block cycles force geometric diagonals", f"n1={n1},n2={n2},|F|={field.order}",
                        field, P, {"s1": s1, "s2": s2}, [scalar_is("s1*s2*s1^-1*s2^-1", z)], concl)


def many_blocks_case(parts, field: gf.FieldSpec) -> IdentityCase:
    """Three or more blocks: s1 s2 = s2 s1 (z I) forces z = 1 and constant l', m."""
    n = sum(parts)
    N = field.order - 1
    P = Params()
    T = [P.block(f"a{j + 1}_", p) for j, p in enumerate(parts)]
    T2 = [P.block(f"b{j + 1}_", p) for j, p in enumerate(parts)]
    z = P.new("z")
    nv = len(P)
    s1 = _with_perm(_diag(N, nv, [_var(v) for blk in T for v in blk]), cycle_perm(n, 0, parts[0]))
    s2 = _with_perm(_diag(N, nv, [_var(v) for blk in T2 for v in blk]), cycle_perm(n, parts[0], parts[1]))
    lam2, mu = T2[0], T[1]
    concl = [linear({z: 1})]
    concl += [linear({lam2[i]: 1, lam2[0]: -1}) for i in range(1, len(lam2))]
    concl += [linear({mu[j]: 1, mu[0]: -1}) for j in range(1, len(mu))]
    return IdentityCase("three or more blocks force commuting block cycles",
                        f"parts={tuple(parts)},|F|={field.order}", field, P, {"s1": s1, "s2": s2},
                        [scalar_is("s1*s2*s1^-1*s2^-1", z)], concl)


def cycle_power_cases(n1: int, n2: int, field: gf.FieldSpec) -> list:
    """s = diag(l, m) sigma_1: s^{n1} = z I iff l_1...l_{n1} = m_j^{n1} = z (both directions)."""
    n = n1 + n2
    N = field.order - 1
    P = Params()
    lam, mu = P.block("l", n1), P.block("m", n2)
    z = P.new("z")
    nv = len(P)
    s = _with_perm(_diag(N, nv, [_var(v) for v in lam + mu]), cycle_perm(n, 0, n1))
    coef = {v: 1 for v in lam}
    coef[z] = -1
    product = [linear(coef)] + [linear({v: n1, z: -1}) for v in mu]
    word = f"s^{n1}"
    cfg = f"n1={n1},n2={n2},|F|={field.order}"
    return [
        IdentityCase("block cycle power is scalar only for matching products", cfg, field, P, {"s": s},
                     [scalar_is(word, z)], product),
        IdentityCase("matching products make the block cycle power scalar", cfg, field, P, {"s": s},
                     product, [scalar_is(word, z)]),
    ]


# suites: Sp_2n two-block lifts over a given field

def _two_block_lift(n1, n2, q, N, nv, which, P, kind, free_stem, frob_var):
    """bd(T, D, T*, D^-1) x (block j Weyl element) with T arbitrary diagonal on block j.

    ``frob_var`` is the unknown whose Frobenius orbit fills the other block.
    """
    parts = (n1, n2)
    a = P.block(free_stem + "a", parts[which - 1])
    b = P.block(free_stem + "b", parts[which - 1])
    other = parts[2 - which]
    D = _frob_block(frob_var, other, q, N)
    Dinv = _frob_block(frob_var, other, q, N, invert=True)
    Ta = [_var(v) for v in a]
    Tb = [_var(v) for v in b]
    top = Ta + D if which == 1 else D + Ta
    bottom = Tb + Dinv if which == 1 else Dinv + Tb
    d = _diag(N, nv, top + bottom)
    x = _block_weyl(n1 + n2, parts, which, kind)
    return d, x


def _pair_case(n1, n2, field, q, kinds, sign, name, conclusion_fn):
    N = field.order - 1
    P = Params()
    mu = P.new("mu1")
    lam = P.new("lambda2")
    nv = 2 + 2 * n1 + 2 * n2
    gens = {}
    for label, which, kind, stem, fv in (("x1", 1, kinds[0], "T", mu), ("x2", 2, kinds[1], "T'", lam)):
        d, x = _two_block_lift(n1, n2, q, N, nv, which, P, kind, stem, fv)
        gens[label] = _with_perm(d, column_perm(x))
    hyp = [sign_is(commutes("x1", "x2"), sign)]
    concl = conclusion_fn(mu, lam, field.neg_one_log)
    return IdentityCase(name, f"n1={n1},n2={n2},q={q},|F|={field.order}", field, P, gens, hyp, concl)


def negative_cycles_commute_case(n1, n2, q, field) -> IdentityCase:
    """t1 = bd(T1, D2, T3, D2^-1) varpi_1, t2 = bd(D1', T2', D1'^-1, T4') varpi_2 commute => mu^2 = lambda^2 = 1."""
    return _pair_case(n1, n2, field, q, ("varpi", "varpi"), 1,
                      "commuting negative-cycle lifts have involutive parameters",
                      lambda mu, lam, h: [linear({mu: 2}), linear({lam: 2})])


def negative_cycles_anticommute_case(n1, n2, q, field) -> IdentityCase:
    """t1 t2 = -t2 t1 => mu^2 = lambda^2 = -1, n1 and n2 odd, mu^(q-1) = -1 (n2>1), lambda^(q-1) = -1 (n1>1)."""

    def concl(mu, lam, h):
        if n1 % 2 == 0 or n2 % 2 == 0:
            return None
        out = [linear({mu: 2}, h), linear({lam: 2}, h)]
        if n2 > 1:
            out.append(linear({mu: q - 1}, h))
        if n1 > 1:
            out.append(linear({lam: q - 1}, h))
        return out

    return _pair_case(n1, n2, field, q, ("varpi", "varpi"), -1,
                      "anticommuting negative-cycle lifts need odd blocks and square roots of -1", concl)


def sign_changes_commute_case(n1, n2, q, field) -> IdentityCase:
    """u1 = bd(T1, D2, T3, D2^-1) tau_1, u2 = bd(D1', T2', D1'^-1, T4') tau_2 commute => mu^2 = lambda^2 = 1."""
    return _pair_case(n1, n2, field, q, ("tau", "tau"), 1,
                      "commuting sign-change lifts have involutive parameters",
                      lambda mu, lam, h: [linear({mu: 2}), linear({lam: 2})])


def mixed_commute_case(n1, n2, q, field) -> IdentityCase:
    """t1 (varpi_1 lift) and u2 (tau_2 lift) commute => mu^2 = 1."""
    return _pair_case(n1, n2, field, q, ("varpi", "tau"), 1,
                      "commuting negative-cycle and sign-change lifts",
                      lambda mu, lam, h: [linear({mu: 2})])


def mixed_anticommute_case(n1, n2, q, field) -> IdentityCase:
    """t1 u2 = -u2 t1 => mu^2 = lambda^2 = -1, n1 odd, lambda^(q-1) = -1 if n1 > 1."""

    def concl(mu, lam, h):
        if n1 % 2 == 0:
            return None
        out = [linear({mu: 2}, h), linear({lam: 2}, h)]
        if n1 > 1:
            out.append(linear({lam: q - 1}, h))
        return out

    return _pair_case(n1, n2, field, q, ("varpi", "tau"), -1,
                      "anticommuting negative-cycle and sign-change lifts", concl)


# rank one and two complements over the closure, and the rank-three obstruction

def sign_swap_square(field: gf.FieldSpec) -> SympMatrix:
    """tau_0^2 for n = 1 (equals -I)."""
    t = tau0(field, 1)
    return t * t


def rank_two_generators(field: gf.FieldSpec) -> dict:
    """s1 (the swap phi_1) and t = [[a,0,0,0],[0,0,0,1],[0,0,a^-1,0],[0,-1,0,0]], a^2 = -1."""
    a = gf.sqrt_minus_one(field)
    m1 = -field.one
    s1 = SympMatrix(field, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    t = SympMatrix(field, [[a, 0, 0, 0], [0, 0, 0, 1], [0, 0, a.inverse(), 0], [0, m1, 0, 0]])
    return {"s1": s1, "t": t}


def rank_two_complement(field: gf.FieldSpec) -> dict:
    """Checks for <s1, t>: memberships, relations and the projective complement property."""
    from ..sympmat import is_symplectic

    g = rank_two_generators(field)
    s1, t = g["s1"], g["t"]
    I = identity(field, 4)
    mono = [MonomialMatrix.from_dense(x) for x in (s1, t)]
    elements = {m.proj_key(): m for m in mono}
    frontier = list(elements.values())
    one = MonomialMatrix.identity(field, 4)
    elements[one.proj_key()] = one
    while frontier:
        nxt = []
        for x in frontier:
            for y in mono:
                z = x * y
                if z.proj_key() not in elements:
                    elements[z.proj_key()] = z
                    nxt.append(z)
        frontier = nxt
    diagonal = [m for m in elements.values() if m.is_diagonal()]
    return {
        "symplectic": is_symplectic(s1) and is_symplectic(t),
        "s1^2=I": s1 * s1 == I,
        "t^2=-I": t * t == -I,
        "(s1 t)^4=-I": (s1 * t) ** 4 == -I,
        "projective order": len(elements),
        "meets torus trivially": len(diagonal) == 1,
    }


def tau_lift_square_case(n: int, field: gf.FieldSpec) -> IdentityCase:
    """t = diag(v, v^-1) tau_0: t^2 = I is impossible in odd characteristic."""
    N = field.order - 1
    P = Params()
    nu = P.block("nu", n)
    nv = len(P)
    d = _diag(N, nv, [_var(v) for v in nu] + [_var(v, -1) for v in nu])
    t0 = MonomialMatrix.from_dense(tau0(field, n))
    t = d * LogLinear(N, t0.cols, t0.logs, np.zeros((2 * n, nv)))
    return IdentityCase("no involutive lift of the last sign change", f"n={n},|F|={field.order}",
                        field, P, {"t": t}, [sign_is("t^2", 1)], None)


def rank_three_obstruction_cases(n: int, field: gf.FieldSpec) -> list:
    """Lifts s of phi_{n-1} and t of tau with s^2, t^2, (s t)^4 scalar cannot exist (n >= 3).

    Returned in order: the full chain (no solution), then the two intermediate
    consequences mu1^4 = nu1^4 = 1 and (mu1 nu1)^4 = -1.
    """
    N = field.order - 1
    h = field.neg_one_log
    P = Params()
    mu = P.block("mu", n)
    nu = P.block("nu", n)
    nv = len(P)
    phi = SignedPerm.from_cycles(n, (n - 1, n), (-(n - 1), -n))
    ds = _diag(N, nv, [_var(v) for v in mu] + [_var(v, -1) for v in mu])
    s = ds * LogLinear(N, np.asarray(phi.points()), np.zeros(2 * n), np.zeros((2 * n, nv)))
    dt = _diag(N, nv, [_var(v) for v in nu] + [_var(v, -1) for v in nu])
    t0 = MonomialMatrix.from_dense(tau0(field, n))
    t = dt * LogLinear(N, t0.cols, t0.logs, np.zeros((2 * n, nv)))
    gens = {"s": s, "t": t}
    cfg = f"n={n},|F|={field.order}"
    squares = [is_scalar("s^2"), is_scalar("t^2")]
    return [
        IdentityCase("no projective lift of the rank-three Coxeter relations", cfg, field, P, gens,
                     squares + [is_scalar("s*t*s*t*s*t*s*t")], None),
        IdentityCase("scalar squares force fourth roots of unity", cfg, field, P, gens, squares,
                     [linear({mu[0]: 4}), linear({nu[0]: 4})]),
        IdentityCase("scalar fourth power forces a square root of -1", cfg, field, P, gens,
                     [is_scalar("s*t*s*t*s*t*s*t")], [linear({mu[0]: 4, nu[0]: 4}, h)]),
    ]


# suites

def _compositions(total_max: int, parts: int, low: int = 1):
    if parts == 0:
        yield ()
        return
    for first in range(low, total_max + 1):
        for rest in _compositions(total_max - first, parts - 1, 1):
            yield (first,) + rest


def block_identity_cases(q: int, max_n: int = 4, extension: int = 1) -> list:
    """Block-cycle identities in GL_n over GF(q^extension), all block sizes with n <= max_n."""
    p, s = gf.prime_power(q)
    field = gf.make_field(p, s * extension)
    cases = []
    for n1, n2 in _compositions(max_n, 2):
        cases.append(commuting_cycles_case(n1, n2, field))
        cases.extend(cycle_power_cases(n1, n2, field))
    for m in range(3, max_n + 1):
        for parts in _compositions(max_n, m):
            cases.append(many_blocks_case(parts, field))
    return cases


def lift_pair_cases(q: int, max_n: int = 4, extension: int = 2) -> list:
    """Two-block lift identities in Sp_2n over GF(q^extension)."""
    p, s = gf.prime_power(q)
    field = gf.make_field(p, s * extension)
    cases = []
    for n1, n2 in _compositions(max_n, 2):
        for build in (negative_cycles_commute_case, negative_cycles_anticommute_case,
                      sign_changes_commute_case, mixed_commute_case, mixed_anticommute_case):
            cases.append(build(n1, n2, q, field))
    return cases


def closure_cases(q: int, n: int = 3) -> list:
    """The finite instances of the rank-one/two/three statements over GF(q^2)."""
    p, s = gf.prime_power(q)
    field = gf.make_field(p, 2 * s)
    cases = [tau_lift_square_case(k, field) for k in range(1, n + 1)]
    cases.extend(rank_three_obstruction_cases(n, field))
    return cases
