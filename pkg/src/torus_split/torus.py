"""Maximal tori of Sp_{2n}(q) attached to a signed cycle type.

For the standard representative w of type (n_1-)...(n_k-)(n_{k+1})...(n_m)
the torus consists of the diagonal matrices

    bd(D_1, ..., D_m, D_1^-1, ..., D_m^-1),
    D_i = diag(l_i, l_i^q, ..., l_i^(q^(n_i - 1))),  l_i^(q^n_i - eps_i) = 1,

with eps_i = -1 on negative blocks and +1 on positive ones.  It is cyclic of
order d_i = q^n_i - eps_i in each block.  All l_i live in the common field
GF(q^L), L = lcm(n_i for positive blocks, 2 n_i for negative blocks).

Points are stored abstractly as exponent tuples (e_1, ..., e_m) with
l_i = g_i^e_i for a fixed generator g_i of order d_i; matrices are built on
demand.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from . import gf
from .bweyl import CycleType, check_rank
from .config import TORUS_BUDGET, budget
from .errors import BudgetExceeded, InvalidType
from .sympmat import MonomialMatrix, SympMatrix


@dataclass(frozen=True)
class TorusSpec:
    n: int
    q: int
    type: CycleType
    eps: tuple
    d: tuple
    L: int
    ambient: gf.FieldSpec = field(compare=False)
    lambda_gen: tuple = field(compare=False)

    @property
    def p(self) -> int:
        return self.ambient.p

    @property
    def order(self) -> int:
        return math.prod(self.d)

    @property
    def m(self) -> int:
        return len(self.d)

    @property
    def dim(self) -> int:
        return 2 * self.n

    @property
    def lambda_logs(self) -> tuple:
        """Discrete logs (base the ambient primitive element) of the generators."""
        return tuple(self.ambient.log(g.code) for g in self.lambda_gen)

    def point(self, exps) -> "TorusPoint":
        return TorusPoint(self, tuple(int(e) % d for e, d in zip(exps, self.d)))

    def identity(self) -> "TorusPoint":
        return TorusPoint(self, (0,) * self.m)


@dataclass(frozen=True)
class TorusPoint:
    spec: TorusSpec = field(compare=False, repr=False)
    exps: tuple

    def __add__(self, other: "TorusPoint") -> "TorusPoint":
        return TorusPoint(self.spec, tuple((a + b) % d for a, b, d in zip(self.exps, other.exps, self.spec.d)))

    def __neg__(self) -> "TorusPoint":
        return TorusPoint(self.spec, tuple((-a) % d for a, d in zip(self.exps, self.spec.d)))

    def __sub__(self, other):
        return self + (-other)

    def is_identity(self) -> bool:
        return not any(self.exps)


def make_torus(n: int, q: int, t: CycleType) -> TorusSpec:
    if isinstance(t, str):
        t = CycleType.parse(t)
    check_rank(t, n)
    try:
        p, s = gf.prime_power(q)
    except ValueError as exc:
        raise InvalidType(f"q={q} is not a prime power") from exc
    eps = t.signs
    d = tuple(q ** ni - e for ni, e in zip(t.parts, eps))
    L = math.lcm(*(ni if e > 0 else 2 * ni for ni, e in zip(t.parts, eps)))
    ambient = gf.make_field(p, s * L)
    gens = tuple(gf.element_of_order(ambient, di) for di in d)
    return TorusSpec(n, q, t, eps, d, L, ambient, gens)


def diagonal_logs(pt: TorusPoint) -> tuple:
    """Discrete logs of the 2n diagonal entries of realize(pt)."""
    spec = pt.spec
    N = spec.ambient.order - 1
    first, second = [], []
    for e, lg, ni in zip(pt.exps, spec.lambda_logs, spec.type.parts):
        base = e * lg % N
        for j in range(ni):
            x = base * spec.q ** j % N
            first.append(x)
            second.append((-x) % N)
    return tuple(first + second)


def realize_monomial(pt: TorusPoint) -> MonomialMatrix:
    return MonomialMatrix.diagonal(pt.spec.ambient, diagonal_logs(pt))


def realize(pt: TorusPoint) -> SympMatrix:
    """bd(D_1, ..., D_m, D_1^-1, ..., D_m^-1) for the point's l_i."""
    return realize_monomial(pt).to_dense()


def enumerate_torus(spec: TorusSpec, limit: int | None = None):
    """Yield every torus point exactly once (lexicographic exponent order)."""
    limit = budget(TORUS_BUDGET) if limit is None else limit
    if spec.order > limit:
        raise BudgetExceeded(f"torus order {spec.order} exceeds budget {limit}")
    for exps in itertools.product(*(range(d) for d in spec.d)):
        yield TorusPoint(spec, exps)


def decompose_logs(spec: TorusSpec, logs) -> TorusPoint | None:
    """Torus point whose realisation has these diagonal logs, or None."""
    N = spec.ambient.order - 1
    exps = []
    off = 0
    for lg, d, ni in zip(spec.lambda_logs, spec.d, spec.type.parts):
        x = logs[off]
        step = N // d
        if x % step:
            return None
        # lg = step * j with gcd(j, d) = 1
        e = (x // step) * pow(lg // step, -1, d) % d if d > 1 else 0
        exps.append(e)
        off += ni
    pt = TorusPoint(spec, tuple(exps))
    return pt if diagonal_logs(pt) == tuple(logs) else None


def decompose(spec: TorusSpec, a) -> TorusPoint | None:
    """Inverse of realize on the torus (accepts dense or monomial matrices)."""
    if isinstance(a, SympMatrix):
        if not a.is_monomial():
            return None
        a = MonomialMatrix.from_dense(a)
    if not a.is_diagonal():
        return None
    return decompose_logs(spec, a.logs)
