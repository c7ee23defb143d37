"""Exact arithmetic in GF(p) and GF(p^k).

Elements are stored by their *code*: the coefficient vector of the polynomial
representative (low degree first) read as a base-p integer.  Ascending code
order is the canonical scan order used by every "first found" choice in the
package (element_of_order, sqrt_minus_one, embeddings, projective
canonicalisation).

Fields with at most ``TABLE_LIMIT`` elements get exp/log tables built on
first use; larger fields fall back to polynomial arithmetic.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .errors import (
    DegreeZero,
    DivisionByZero,
    FieldMismatch,
    NonPrimeCharacteristic,
    NoSquareRootOfMinusOne,
    NoSubfieldRelation,
    OrderDoesNotDivide,
    QNotPowerOfCharacteristic,
)

TABLE_LIMIT = 1 << 20


# integers

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = math.isqrt(n)
    return all(n % d for d in range(3, r + 1, 2))


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of n >= 1 as ((prime, exponent), ...)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, s) with q == p**s, or raise NonPrimeCharacteristic."""
    if q < 2:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    return f[0]


# polynomials over GF(p), coefficient lists low-to-high

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a, f, p):
    a = _trim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def poly_powmod(a, e, f, p):
    result = [1]
    base = poly_mod(a, f, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), f, p)
        base = poly_mod(poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, poly_mod(a, b, p)
    return a


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def is_irreducible(f, p) -> bool:
    """Rabin's test for a monic polynomial f over GF(p)."""
    f = list(f)
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]

    def frob_iter(j):
        # x^(p^j) mod f
        r = x
        for _ in range(j):
            r = poly_powmod(r, p, f, p)
        return r

    if poly_sub(frob_iter(k), x, p):
        return False
    for r, _ in factorize(k):
        g = poly_gcd(f, poly_sub(frob_iter(k // r), x, p), p)
        if len(g) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree k (low coefficients compared first)."""
    for low in itertools.product(range(p), repeat=k):
        f = list(low) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# fields

class FieldSpec:
    """The field GF(p^k) with its canonical modulus.  Use make_field()."""

    __slots__ = ("p", "k", "modulus", "order", "_pw", "_exp", "_log", "_np_exp", "_np_log",
                 "_prim", "_embed_roots")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p ** k
        self._pw = [p ** i for i in range(k)]
        self._exp = None
        self._log = None
        self._np_exp = None
        self._np_log = None
        self._prim = None
        self._embed_roots = {}

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (make_field, (self.p, self.k))

    # element construction

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.spec is not self:
                raise FieldMismatch(f"{value!r} is not in {self}")
            return value
        if isinstance(value, (list, tuple)):
            return FieldElem(self, self.code_of(value))
        value = int(value)
        if self.k == 1:
            return FieldElem(self, value % self.p)
        if not 0 <= value < self.order:
            raise ValueError(f"code {value} out of range for {self}")
        return FieldElem(self, value)

    def from_int(self, value: int) -> "FieldElem":
        """Image of an integer under Z -> GF(p)."""
        return FieldElem(self, value % self.p)

    @property
    def zero(self):
        return FieldElem(self, 0)

    @property
    def one(self):
        return FieldElem(self, 1)

    @property
    def minus_one(self):
        return FieldElem(self, self.p - 1)

    def elements(self):
        """All elements in canonical scan order."""
        for c in range(self.order):
            yield FieldElem(self, c)

    def digits(self, code: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(code % p)
            code //= p
        return out

    def code_of(self, coeffs) -> int:
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.k:
            coeffs = poly_mod(coeffs, self.modulus, self.p)
        return sum(c * w for c, w in zip(coeffs, self._pw))

    # arithmetic on codes

    def add_codes(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % p
        r, m = 0, 1
        while a or b:
            r += ((a % p + b % p) % p) * m
            a //= p
            b //= p
            m *= p
        return r

    def neg_code(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.k == 1:
            return -a % p
        r, m = 0, 1
        while a:
            r += (-(a % p) % p) * m
            a //= p
            m *= p
        return r

    def mul_codes(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        if self._log is not None or self.order <= TABLE_LIMIT:
            exp, log = self.tables()
            return exp[(log[a] + log[b]) % (self.order - 1)]
        return self._poly_mul_codes(a, b)

    def _poly_mul_codes(self, a, b):
        prod = poly_mod(poly_mul(self.digits(a), self.digits(b), self.p), self.modulus, self.p)
        return self.code_of(prod)

    def pow_code(self, a: int, e: int) -> int:
        if e < 0:
            if a == 0:
                raise DivisionByZero("negative power of zero")
            a, e = self.inv_code(a), -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.k == 1:
            return pow(a, e, self.p)
        if self._log is not None or self.order <= TABLE_LIMIT:
            exp, log = self.tables()
            return exp[log[a] * e % (self.order - 1)]
        result, base = 1, a
        while e:
            if e & 1:
                result = self._poly_mul_codes(result, base)
            base = self._poly_mul_codes(base, base)
            e >>= 1
        return result

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self}")
        return self.pow_code(a, self.order - 2)

    # multiplicative structure

    def element_order_code(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        m = self.order - 1
        if self._log is not None:
            return m // math.gcd(self._log[a], m)
        o = m
        for r, _ in factorize(m):
            while o % r == 0 and self.pow_code(a, o // r) == 1:
                o //= r
        return o

    def primitive_code(self) -> int:
        """First element of full multiplicative order in scan order."""
        if self._prim is None:
            m = self.order - 1
            primes = [r for r, _ in factorize(m)] if m > 1 else []
            for c in range(1, self.order):
                if all(self._slow_pow(c, m // r) != 1 for r in primes):
                    self._prim = c
                    break
        return self._prim

    def _slow_pow(self, a, e):
        if self.k == 1:
            return pow(a, e, self.p)
        result, base = 1, a
        while e:
            if e & 1:
                result = self._poly_mul_codes(result, base)
            base = self._poly_mul_codes(base, base)
            e >>= 1
        return result

    def has_tables(self) -> bool:
        return self.order <= TABLE_LIMIT

    def tables(self):
        """(exp, log) lists w.r.t. primitive_code(); log[0] is -1."""
        if self._exp is None:
            if self.order > TABLE_LIMIT:
                raise OverflowError(f"{self} is too large for log tables")
            np_exp = self._build_exp()
            np_log = np.full(self.order, -1, dtype=np.int64)
            np_log[np_exp] = np.arange(self.order - 1, dtype=np.int64)
            self._np_exp, self._np_log = np_exp, np_log
            self._exp = np_exp.tolist()
            self._log = np_log.tolist()
        return self._exp, self._log

    def np_tables(self):
        self.tables()
        return self._np_exp, self._np_log

    def _build_exp(self):
        p, k, m = self.p, self.k, self.order - 1
        g = self.primitive_code()
        weights = np.array(self._pw, dtype=np.int64)
        block = np.zeros((1, k), dtype=np.int64)
        block[0, 0] = 1
        while block.shape[0] < m:
            c = self._slow_pow(g, block.shape[0])
            # multiplication by c as a k x k matrix over GF(p)
            mat = np.zeros((k, k), dtype=np.int64)
            xj = [1]
            for j in range(k):
                col = self.digits(self._poly_mul_codes(c, self.code_of(xj)))
                mat[:, j] = col
                xj = [0] + xj
            block = np.vstack([block, (block @ mat.T) % p])
        return (block[:m] @ weights).astype(np.int64)

    def log(self, a: int) -> int:
        return self.tables()[1][a]

    def exp(self, i: int) -> int:
        return self.tables()[0][i % (self.order - 1)]

    @property
    def neg_one_log(self) -> int:
        """Discrete log of -1 (0 in characteristic 2)."""
        return 0 if self.p == 2 else (self.order - 1) // 2


class FieldElem:
    """Immutable element of a FieldSpec."""

    __slots__ = ("spec", "code")

    def __init__(self, spec: FieldSpec, code: int):
        self.spec = spec
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.spec.digits(self.code))

    def _other(self, b):
        if isinstance(b, FieldElem):
            if b.spec is not self.spec:
                raise FieldMismatch(f"{self.spec} vs {b.spec}")
            return b.code
        if isinstance(b, int):
            return self.spec.from_int(b).code
        return NotImplemented

    def __add__(self, b):
        c = self._other(b)
        return NotImplemented if c is NotImplemented else FieldElem(self.spec, self.spec.add_codes(self.code, c))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg_code(self.code))

    def __sub__(self, b):
        c = self._other(b)
        if c is NotImplemented:
            return NotImplemented
        s = self.spec
        return FieldElem(s, s.add_codes(self.code, s.neg_code(c)))

    def __rsub__(self, b):
        return (-self) + b

    def __mul__(self, b):
        c = self._other(b)
        return NotImplemented if c is NotImplemented else FieldElem(self.spec, self.spec.mul_codes(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, b):
        c = self._other(b)
        if c is NotImplemented:
            return NotImplemented
        s = self.spec
        return FieldElem(s, s.mul_codes(self.code, s.inv_code(c)))

    def __rtruediv__(self, b):
        return self.inverse() * b

    def inverse(self):
        return FieldElem(self.spec, self.spec.inv_code(self.code))

    def __pow__(self, e: int):
        return FieldElem(self.spec, self.spec.pow_code(self.code, int(e)))

    def __eq__(self, b):
        if isinstance(b, FieldElem):
            return b.spec is self.spec and b.code == self.code
        if isinstance(b, int):
            return self.code == self.spec.from_int(b).code
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.p, self.spec.k, self.code))

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        return self.code

    def __lt__(self, b):
        return self.code < b.code

    def __repr__(self):
        if self.spec.k == 1:
            return f"{self.code}"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(f"{c}{'*' if mono else ''}{mono}" if c != 1 or not mono else mono)
        return " + ".join(reversed(terms)) or "0"

    def order(self) -> int:
        return self.spec.element_order_code(self.code)

    def is_zero(self) -> bool:
        return self.code == 0


# public operations

@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldSpec:
    """Canonical GF(p^k); repeated calls return the same object."""
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if k < 1:
        raise DegreeZero("extension degree must be >= 1")
    return FieldSpec(p, k, canonical_modulus(p, k))


def field_of_order(q: int) -> FieldSpec:
    p, s = prime_power(q)
    return make_field(p, s)


def arith(a: FieldElem, b: FieldElem, op: str) -> FieldElem:
    if a.spec is not b.spec:
        raise FieldMismatch(f"{a.spec} vs {b.spec}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def power(a: FieldElem, e: int) -> FieldElem:
    return a ** e


def frobenius(a: FieldElem, q: int) -> FieldElem:
    """a -> a^q for q a power of the characteristic."""
    p, _ = prime_power(q) if q > 1 else (None, None)
    if p != a.spec.p:
        raise QNotPowerOfCharacteristic(f"{q} is not a power of {a.spec.p}")
    return a ** q


def element_of_order(spec: FieldSpec, d: int) -> FieldElem:
    """First element (scan order) of exact multiplicative order d."""
    m = spec.order - 1
    if d < 1 or m % d:
        raise OrderDoesNotDivide(f"{d} does not divide {m}")
    if d == 1:
        return spec.one
    if spec.has_tables():
        exp, log = spec.tables()
        # elements of order d are g^(j*m/d) with gcd(j, d) == 1
        step = m // d
        code = min(exp[j * step] for j in range(1, d) if math.gcd(j, d) == 1)
        return FieldElem(spec, code)
    for c in range(2, spec.order):
        if spec.element_order_code(c) == d:
            return FieldElem(spec, c)
    raise AssertionError("unreachable")  # pragma: no cover


def sqrt_minus_one(spec: FieldSpec) -> FieldElem:
    """First element (scan order) whose square is -1."""
    if spec.p == 2:
        return spec.one
    if spec.order % 4 != 1:
        raise NoSquareRootOfMinusOne(f"{spec} has order {spec.order} = 3 mod 4")
    target = spec.minus_one.code
    if spec.has_tables():
        return element_of_order(spec, 4)
    for c in range(1, spec.order):
        if spec.mul_codes(c, c) == target:
            return FieldElem(spec, c)
    raise AssertionError("unreachable")  # pragma: no cover


def _eval_poly(coeffs, x: FieldElem) -> FieldElem:
    acc = x.spec.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _embedding_root(src: FieldSpec, target: FieldSpec) -> FieldElem:
    root = target._embed_roots.get(src.k)
    if root is not None:
        return root
    f = src.modulus
    if target.has_tables():
        exp, _ = target.tables()
        step = (target.order - 1) // (src.order - 1)
        cands = sorted(exp[j * step] for j in range(src.order - 1))
    else:
        cands = range(1, target.order)
    for c in cands:
        x = FieldElem(target, c)
        if not _eval_poly(f, x):
            root = x
            break
    target._embed_roots[src.k] = root
    return root


def embed(a: FieldElem, target: FieldSpec) -> FieldElem:
    """Embed a into a larger field of the same characteristic.

    Each step of prime degree r sends the source generator x to the first root
    (scan order) of the source modulus in GF(p^(k*r)); composite degrees go
    through the chain of intermediate fields, smallest prime first.  This makes
    towers such as GF(q) < GF(q^2) < GF(q^6) commute with the direct embedding.
    """
    src = a.spec
    if src.p != target.p or target.k % src.k:
        raise NoSubfieldRelation(f"{src} is not a subfield of {target}")
    if src is target:
        return a
    if src.k == 1:
        return FieldElem(target, a.code)
    ratio = target.k // src.k
    r = factorize(ratio)[0][0]
    if r != ratio:
        return embed(embed(a, make_field(src.p, src.k * r)), target)
    root = _embedding_root(src, target)
    return _eval_poly(a.coeffs, root)
