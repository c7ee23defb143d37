"""The hyperoctahedral group of signed permutations (Weyl group of type C_n).

A signed permutation of rank n is a permutation phi of {+-1, ..., +-n} with
phi(-i) = -phi(i).  It is stored as the tuple of images of 1..n.

Products are read left to right: ``a * b`` applies ``a`` first and then ``b``.
Together with the row convention for permutation matrices used in
:mod:`torus_split.sympmat` (entry (i, phi(i)) equals 1) this makes the matrix
of ``a * b`` the product of the matrices of ``a`` and ``b``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidType, RankMismatch, RankTooLargeForExhaustive

EXHAUSTIVE_MAX_RANK = 6


def index_of(i: int, n: int) -> int:
    """Array position of the logical index i (order 1..n, -1..-n)."""
    return i - 1 if i > 0 else n - i - 1


def logical(pos: int, n: int) -> int:
    """Inverse of :func:`index_of`."""
    return pos + 1 if pos < n else -(pos - n + 1)


@dataclass(frozen=True, order=True)
class SignedPerm:
    n: int
    img: tuple

    def __post_init__(self):
        if len(self.img) != self.n or sorted(abs(x) for x in self.img) != list(range(1, self.n + 1)):
            raise ValueError(f"not a signed permutation of rank {self.n}: {self.img}")

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles) -> "SignedPerm":
        """Build from cycles on signed points, e.g. ``(1, 2, -1, -2)``.

        Cycles only need to cover the points 1..n; the action on negative
        points is then implied.  Supplying both (1,2) and (-1,-2) is fine.
        """
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if a > 0:
                    img[a - 1] = b
                else:
                    img[-a - 1] = -b
        return cls(n, tuple(img))

    def __call__(self, i: int) -> int:
        return self.img[i - 1] if i > 0 else -self.img[-i - 1]

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        return compose(self, other)

    def __pow__(self, e: int) -> "SignedPerm":
        base = self if e >= 0 else inverse(self)
        result = SignedPerm.identity(self.n)
        for _ in range(abs(e)):
            result = result * base
        return result

    def inverse(self) -> "SignedPerm":
        return inverse(self)

    def is_identity(self) -> bool:
        return self.img == tuple(range(1, self.n + 1))

    def order(self) -> int:
        return math.lcm(*(2 * l if neg else l for l, neg in self.cycles())) if self.n else 1

    def points(self) -> tuple:
        """The induced permutation of array positions 0..2n-1."""
        n = self.n
        return tuple(index_of(self(logical(p, n)), n) for p in range(2 * n))

    def cycles(self) -> list:
        """List of (length, is_negative) for the independent signed cycles."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            length, x = 0, start
            while True:
                seen.add(abs(x))
                length += 1
                x = self(x)
                if abs(x) == start:
                    break
            out.append((length, x == -start))
        return out

    def __repr__(self):
        return f"SignedPerm({list(self.img)})"


def compose(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    """The product a*b: first a, then b."""
    if a.n != b.n:
        raise RankMismatch(f"ranks {a.n} and {b.n} differ")
    return SignedPerm(a.n, tuple(b(x) for x in a.img))


def inverse(a: SignedPerm) -> SignedPerm:
    img = [0] * a.n
    for i, x in enumerate(a.img, start=1):
        if x > 0:
            img[x - 1] = i
        else:
            img[-x - 1] = -i
    return SignedPerm(a.n, tuple(img))


def coxeter_generators(n: int) -> list:
    """phi_1, ..., phi_{n-1} (adjacent swaps) followed by tau = (n, -n)."""
    gens = [SignedPerm.from_cycles(n, (i, i + 1)) for i in range(1, n)]
    gens.append(SignedPerm.from_cycles(n, (n, -n)))
    return gens


# cycle types

_TOKEN = re.compile(r"\(\s*(\d+)\s*(-?)\s*\)")


@dataclass(frozen=True)
class CycleType:
    """Signed cycle type: negative parts and positive parts, each descending."""

    negative: tuple = ()
    positive: tuple = ()

    def __post_init__(self):
        neg = tuple(sorted(self.negative, reverse=True))
        pos = tuple(sorted(self.positive, reverse=True))
        if any((not isinstance(x, int)) or x < 1 for x in neg + pos):
            raise InvalidType(f"cycle lengths must be positive integers: {neg + pos}")
        if not neg + pos:
            raise InvalidType("empty cycle type")
        object.__setattr__(self, "negative", neg)
        object.__setattr__(self, "positive", pos)

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Parse strings like ``"(2-)(1)"``; a trailing dash marks a negative cycle."""
        s = text.replace(" ", "")
        neg, pos, pos_in_s = [], [], 0
        for m in _TOKEN.finditer(s):
            if m.start() != pos_in_s:
                break
            pos_in_s = m.end()
            (neg if m.group(2) else pos).append(int(m.group(1)))
        if pos_in_s != len(s) or not s:
            raise InvalidType(f"cannot parse cycle type {text!r}")
        return cls(tuple(neg), tuple(pos))

    @property
    def n(self) -> int:
        return sum(self.negative) + sum(self.positive)

    @property
    def k(self) -> int:
        return len(self.negative)

    @property
    def m(self) -> int:
        return len(self.negative) + len(self.positive)

    @property
    def parts(self) -> tuple:
        """Block lengths n_1..n_m, negative blocks first."""
        return self.negative + self.positive

    @property
    def signs(self) -> tuple:
        """epsilon_i as -1 (negative block) or +1."""
        return (-1,) * len(self.negative) + (1,) * len(self.positive)

    def offsets(self) -> tuple:
        """Starting offset a_j of each block (block j occupies a_j+1..a_j+n_j)."""
        return tuple(itertools.accumulate((0,) + self.parts[:-1]))

    def __str__(self):
        return "".join(f"({x}-)" for x in self.negative) + "".join(f"({x})" for x in self.positive)

    def pretty(self) -> str:
        """Overline-style rendering using a combining macron."""
        return "".join(f"({str(x)}̅)" for x in self.negative) + "".join(f"({x})" for x in self.positive)


def cycle_type(a: SignedPerm) -> CycleType:
    cyc = a.cycles()
    return CycleType(tuple(l for l, neg in cyc if neg), tuple(l for l, neg in cyc if not neg))


def check_rank(t: CycleType, n: int) -> None:
    if t.n != n:
        raise InvalidType(f"type {t} has rank {t.n}, expected {n}")


# block elements of the standard representative

def _block_cycle(n: int, a: int, length: int, negative: bool) -> SignedPerm:
    img = list(range(1, n + 1))
    for i in range(1, length):
        img[a + i - 1] = a + i + 1
    img[a + length - 1] = -(a + 1) if negative else a + 1
    return SignedPerm(n, tuple(img))


def block_cycle(t: CycleType, j: int) -> SignedPerm:
    """varpi_j for a negative block, omega_j for a positive block (j is 1-based)."""
    a, length = t.offsets()[j - 1], t.parts[j - 1]
    return _block_cycle(t.n, a, length, j <= t.k)


def block_tau(t: CycleType, j: int) -> SignedPerm:
    """tau_j: sign change on every index of block j."""
    a, length = t.offsets()[j - 1], t.parts[j - 1]
    img = list(range(1, t.n + 1))
    for i in range(a + 1, a + length + 1):
        img[i - 1] = -i
    return SignedPerm(t.n, tuple(img))


def block_swap(t: CycleType, j: int) -> SignedPerm:
    """Exchange blocks j and j+1 index by index (they must have equal length)."""
    offs, parts = t.offsets(), t.parts
    if parts[j - 1] != parts[j]:
        raise InvalidType(f"blocks {j} and {j + 1} of {t} have different lengths")
    a, b = offs[j - 1], offs[j]
    img = list(range(1, t.n + 1))
    for i in range(1, parts[j - 1] + 1):
        img[a + i - 1] = b + i
        img[b + i - 1] = a + i
    return SignedPerm(t.n, tuple(img))


def standard_rep(t: CycleType) -> SignedPerm:
    """varpi_1 ... varpi_k omega_{k+1} ... omega_m on consecutive blocks."""
    w = SignedPerm.identity(t.n)
    for j in range(1, t.m + 1):
        w = w * block_cycle(t, j)
    return w


def block_generators(t: CycleType) -> list:
    """Named generators of the centralizer of the standard representative.

    Order: block cycles varpi_j / omega_j, then tau_j for positive blocks,
    then swaps of adjacent blocks with equal length and sign.
    """
    gens = []
    for j in range(1, t.m + 1):
        gens.append(("varpi%d" % j if j <= t.k else "omega%d" % j, block_cycle(t, j)))
    for j in range(t.k + 1, t.m + 1):
        gens.append(("tau%d" % j, block_tau(t, j)))
    for j in range(1, t.m):
        same_sign = (j <= t.k) == (j + 1 <= t.k)
        if same_sign and t.parts[j - 1] == t.parts[j]:
            gens.append(("swap%d" % j, block_swap(t, j)))
    return gens


# whole-group enumeration

def all_elements(n: int):
    """Every signed permutation of rank n (2^n n! of them)."""
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPerm(n, tuple(s * x for s, x in zip(signs, perm)))


@lru_cache(maxsize=None)
def _centralizer_cached(w: SignedPerm) -> tuple:
    return tuple(x for x in all_elements(w.n) if w * x == x * w)


def centralizer(w: SignedPerm) -> list:
    """All x with x^-1 w x = w, by exhaustive filtering (rank <= 6)."""
    if w.n > EXHAUSTIVE_MAX_RANK:
        raise RankTooLargeForExhaustive(f"rank {w.n} > {EXHAUSTIVE_MAX_RANK}")
    return list(_centralizer_cached(w))


def centralizer_order(t: CycleType) -> int:
    """|C_W(w)| from the block structure: prod (2l)^r r! over equal (length, sign) classes.

    For a positive cycle of length l the local centralizer is Z_l x Z_2, for a
    negative one it is cyclic of order 2l; in both cases 2l elements.
    """
    total = 1
    for parts in (t.negative, t.positive):
        for length, grp in itertools.groupby(parts):
            r = len(list(grp))
            total *= (2 * length) ** r * math.factorial(r)
    return total


def _partitions(a: int, largest: int | None = None):
    if a == 0:
        yield ()
        return
    largest = a if largest is None else min(largest, a)
    for first in range(largest, 0, -1):
        for rest in _partitions(a - first, first):
            yield (first,) + rest


def enumerate_types(n: int) -> list:
    """All signed cycle types of rank n: negative size 0..n, partitions descending."""
    out = []
    for a in range(n + 1):
        for neg in _partitions(a):
            for pos in _partitions(n - a):
                out.append(CycleType(neg, pos))
    return out
