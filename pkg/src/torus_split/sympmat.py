"""Dense and monomial matrices over finite fields, and the symplectic group.

Rows and columns of a 2n x 2n matrix are indexed by 1..n, -1..-n, stored at
positions 0..2n-1 (see :func:`torus_split.bweyl.index_of`).  The symplectic
form is Q = [[0, I_n], [-I_n, 0]] and A is symplectic when A^T Q A = Q.

Permutation matrices follow the row convention: the matrix of a signed
permutation phi has a 1 in row i, column phi(i).  Products of permutations are
read left to right, so ``perm_matrix(a * b) == perm_matrix(a) @ perm_matrix(b)``.

Two representations are provided:

* :class:`SympMatrix` -- a dense square matrix of field-element codes; used
  at API boundaries, for JSON and for generic checks.
* :class:`MonomialMatrix` -- one nonzero entry per row, stored as a column
  map plus discrete logarithms; every element of a torus normalizer is of
  this shape and multiplies in O(dim).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import gf
from .bweyl import CycleType, SignedPerm, block_cycle, block_generators, block_tau
from .errors import (
    DimensionMismatch,
    FieldMismatch,
    GeneratorOutsideCentralizer,
    Singular,
    SizeMismatch,
)


class _Unbounded:
    def __repr__(self):
        return "Unbounded"

    def __bool__(self):
        return False


Unbounded = _Unbounded()


class SympMatrix:
    """Square matrix over a finite field, entries held as element codes.

    Entries may be given as FieldElem, as element codes, or as negative
    integers (read mod p, so -1 means minus one).
    """

    __slots__ = ("field", "dim", "rows", "_hash")

    def __init__(self, field: gf.FieldSpec, rows):
        rows = tuple(tuple(_code(field, x) for x in r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise DimensionMismatch("matrix is not square")
        self.field = field
        self.dim = len(rows)
        self.rows = rows
        self._hash = None

    @property
    def n(self) -> int:
        return self.dim // 2

    def entry(self, i: int, j: int) -> gf.FieldElem:
        return gf.FieldElem(self.field, self.rows[i][j])

    @property
    def entries(self):
        return [[gf.FieldElem(self.field, c) for c in r] for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, SympMatrix) and self.field is other.field and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.p, self.field.k, self.rows))
        return self._hash

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __mul__(self, other):
        if isinstance(other, SympMatrix):
            return mat_mul(self, other)
        return self.scale(other)

    def __neg__(self):
        return self.scale(self.field.minus_one)

    def __pow__(self, e: int):
        return mat_pow(self, e)

    def scale(self, c) -> "SympMatrix":
        c = _code(self.field, c)
        f = self.field
        return SympMatrix(f, [[f.mul_codes(c, x) for x in r] for r in self.rows])

    def transpose(self) -> "SympMatrix":
        return SympMatrix(self.field, list(zip(*self.rows)))

    def inverse(self) -> "SympMatrix":
        return mat_inv(self)

    def is_identity(self) -> bool:
        return self.rows == identity(self.field, self.dim).rows

    def is_scalar(self) -> bool:
        c = self.rows[0][0]
        return all(self.rows[i][j] == (c if i == j else 0)
                   for i in range(self.dim) for j in range(self.dim))

    def is_monomial(self) -> bool:
        return all(sum(1 for x in r if x) == 1 for r in self.rows) and \
            all(sum(1 for x in col if x) == 1 for col in zip(*self.rows))

    def frobenius(self, q: int) -> "SympMatrix":
        f = self.field
        return SympMatrix(f, [[f.pow_code(x, q) for x in r] for r in self.rows])

    def to_json(self) -> dict:
        f = self.field
        return {
            "n": self.n,
            "field": {"p": f.p, "k": f.k, "modulus": list(f.modulus)},
            "entries": [[f.digits(x) for x in r] for r in self.rows],
        }

    @classmethod
    def from_json(cls, data) -> "SympMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        fd = data["field"]
        field = gf.make_field(int(fd["p"]), int(fd["k"]))
        if list(field.modulus) != [int(c) for c in fd["modulus"]]:
            raise FieldMismatch("modulus in JSON differs from the canonical modulus")
        rows = data["entries"]
        n = int(data["n"])
        if len(rows) != 2 * n:
            raise DimensionMismatch(f"expected {2 * n} rows, got {len(rows)}")
        for r in rows:
            for c in r:
                if len(c) != field.k or any(not 0 <= int(x) < field.p for x in c):
                    raise ValueError(f"bad coefficient vector {c!r}")
        return cls(field, [[field.code_of([int(x) for x in c]) for c in r] for r in rows])

    def __repr__(self):
        return f"SympMatrix({self.field}, {[list(r) for r in self.rows]})"


def _code(field: gf.FieldSpec, x) -> int:
    if isinstance(x, gf.FieldElem):
        if x.spec is not field:
            raise FieldMismatch(f"{x.spec} vs {field}")
        return x.code
    if isinstance(x, int):
        # non-negative ints are element codes; negative ints are integers mod p
        return x if 0 <= x < field.order else field.from_int(x).code
    raise TypeError(f"cannot use {x!r} as a field entry")


# constructors

def identity(field: gf.FieldSpec, dim: int) -> SympMatrix:
    return SympMatrix(field, [[1 if i == j else 0 for j in range(dim)] for i in range(dim)])


def diag(field: gf.FieldSpec, values) -> SympMatrix:
    values = list(values)
    d = len(values)
    return SympMatrix(field, [[values[i] if i == j else 0 for j in range(d)] for i in range(d)])


def zeros(field: gf.FieldSpec, dim: int) -> SympMatrix:
    return SympMatrix(field, [[0] * dim for _ in range(dim)])


def form_matrix(field: gf.FieldSpec, n: int) -> SympMatrix:
    """Q = [[0, I_n], [-I_n, 0]]."""
    m1 = field.minus_one.code
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        rows[i][n + i] = 1
        rows[n + i][i] = m1
    return SympMatrix(field, rows)


def tau0(field: gf.FieldSpec, n: int) -> SympMatrix:
    """Monomial representative of tau = (n, -n): identity except a 2x2 swap with one -1.

    Row n sends e_n to e_{-n}; row -n carries the sign, matching the n = 1 case
    [[0, 1], [-1, 0]] = Q.
    """
    return weyl_lift(field, [("tau", SignedPerm.from_cycles(n, (n, -n)), _neg_block(n, n - 1, 1))])


def perm_matrix(field: gf.FieldSpec, x: SignedPerm) -> SympMatrix:
    """Row convention: a 1 in row i, column x(i)."""
    pts = x.points()
    d = len(pts)
    return SympMatrix(field, [[1 if pts[i] == j else 0 for j in range(d)] for i in range(d)])


def bd(blocks, field: gf.FieldSpec | None = None, dim: int | None = None) -> SympMatrix:
    """Block-diagonal assembly of square blocks (SympMatrix or nested lists)."""
    mats = []
    for b in blocks:
        if isinstance(b, SympMatrix):
            if field is None:
                field = b.field
            mats.append(b)
        else:
            if field is None:
                raise ValueError("field must be given for list blocks")
            mats.append(SympMatrix(field, b))
    if any(m.field is not field for m in mats):
        raise FieldMismatch("blocks over different fields")
    total = sum(m.dim for m in mats)
    if dim is not None and total != dim:
        raise SizeMismatch(f"blocks sum to {total}, expected {dim}")
    rows = [[0] * total for _ in range(total)]
    off = 0
    for m in mats:
        for i in range(m.dim):
            rows[off + i][off:off + m.dim] = m.rows[i]
        off += m.dim
    return SympMatrix(field, rows)


# arithmetic

def _check_pair(a: SympMatrix, b: SympMatrix):
    if a.field is not b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if a.dim != b.dim:
        raise DimensionMismatch(f"{a.dim} vs {b.dim}")


def mat_mul(a: SympMatrix, b: SympMatrix) -> SympMatrix:
    _check_pair(a, b)
    f = a.field
    mul, add = f.mul_codes, f.add_codes
    cols = list(zip(*b.rows))
    out = []
    for r in a.rows:
        row = []
        for c in cols:
            acc = 0
            for x, y in zip(r, c):
                if x and y:
                    acc = add(acc, mul(x, y))
            row.append(acc)
        out.append(row)
    return SympMatrix(f, out)


def mat_add(a: SympMatrix, b: SympMatrix) -> SympMatrix:
    _check_pair(a, b)
    f = a.field
    return SympMatrix(f, [[f.add_codes(x, y) for x, y in zip(r, s)] for r, s in zip(a.rows, b.rows)])


def mat_inv(a: SympMatrix) -> SympMatrix:
    """Gauss-Jordan inverse."""
    f = a.field
    d = a.dim
    m = [list(r) + [1 if i == j else 0 for j in range(d)] for i, r in enumerate(a.rows)]
    for col in range(d):
        piv = next((r for r in range(col, d) if m[r][col]), None)
        if piv is None:
            raise Singular("matrix is not invertible")
        m[col], m[piv] = m[piv], m[col]
        inv = f.inv_code(m[col][col])
        m[col] = [f.mul_codes(inv, x) for x in m[col]]
        for r in range(d):
            if r != col and m[r][col]:
                c = f.neg_code(m[r][col])
                m[r] = [f.add_codes(x, f.mul_codes(c, y)) for x, y in zip(m[r], m[col])]
    return SympMatrix(f, [r[d:] for r in m])


def mat_pow(a: SympMatrix, e: int) -> SympMatrix:
    if e < 0:
        a, e = mat_inv(a), -e
    result = identity(a.field, a.dim)
    while e:
        if e & 1:
            result = mat_mul(result, a)
        a = mat_mul(a, a)
        e >>= 1
    return result


def is_symplectic(a: SympMatrix) -> bool:
    if a.dim % 2:
        return False
    q = form_matrix(a.field, a.n)
    return mat_mul(mat_mul(a.transpose(), q), a) == q


def order_of(a: SympMatrix, cap: int | None = None):
    """Least e >= 1 with a^e = I, or ``Unbounded`` if none up to the cap.

    The default cap is 4 * (|F| - 1), which bounds the order of any monomial
    matrix of the sizes handled here.
    """
    if cap is None:
        cap = 4 * (a.field.order - 1) * max(1, a.dim)
    ident = identity(a.field, a.dim)
    x = a
    for e in range(1, cap + 1):
        if x == ident:
            return e
        x = mat_mul(x, a)
    return Unbounded


@dataclass(frozen=True)
class ProjPoint:
    """Canonical representative of the pair {M, -M}."""

    rep: SympMatrix


def psp_canonical(a: SympMatrix) -> ProjPoint:
    """Pick M or -M: the one whose first nonzero entry (row-major) has the smaller code."""
    f = a.field
    if f.p == 2:
        return ProjPoint(a)
    for r in a.rows:
        for x in r:
            if x:
                return ProjPoint(a if x <= f.neg_code(x) else -a)
    raise Singular("zero matrix has no projective image")


def proj_equal(a: SympMatrix, b: SympMatrix) -> bool:
    """a == +-b."""
    return a == b or a == -b


# Weyl representatives

def _neg_block(n: int, start: int, length: int, last_only: bool = True) -> tuple:
    """Positions (0-based rows) that carry a -1 factor in a sign-twisted lift.

    The twist sits on the -j block (rows n+start .. n+start+length-1); for
    C_j only the last row of the block is negated, for -I_j all of them.
    """
    if last_only:
        return (n + start + length - 1,)
    return tuple(range(n + start, n + start + length))


def weyl_lift(field: gf.FieldSpec, word) -> SympMatrix:
    """Multiply out a word of (name, perm, signed_rows) triples into a dense matrix."""
    result = None
    for _name, perm, neg_rows in word:
        m = MonomialMatrix.from_perm(field, perm, neg_rows)
        result = m if result is None else result * m
    return result.to_dense()


def generator_lifts(t: CycleType) -> dict:
    """name -> (SignedPerm, rows negated) for every block generator of the type.

    varpi_j lifts to bd(I, ..., C_j, ...) varpi_j (last row of block -j negated),
    tau_j to bd(I, ..., -I_j, ...) tau_j (whole block -j negated), omega_j and
    block swaps to plain permutation matrices.
    """
    n = t.n
    offs = t.offsets()
    out = {}
    for name, perm in block_generators(t):
        if name.startswith("varpi"):
            j = int(name[5:])
            rows = _neg_block(n, offs[j - 1], t.parts[j - 1], last_only=True)
        elif name.startswith("tau"):
            j = int(name[3:])
            rows = _neg_block(n, offs[j - 1], t.parts[j - 1], last_only=False)
        else:
            rows = ()
        out[name] = (perm, rows)
    return out


def weyl_rep(x, t: CycleType, field: gf.FieldSpec) -> SympMatrix:
    """Matrix representative of a word in the block generators of type t.

    ``x`` is a generator name ("varpi1", "omega2", "tau2", "swap1"), a
    SignedPerm equal to one of the generators, or a sequence of these.
    """
    lifts = generator_lifts(t)
    by_perm = {perm: name for name, (perm, _) in lifts.items()}
    word = [x] if isinstance(x, (str, SignedPerm)) else list(x)
    if not word:
        return identity(field, 2 * t.n)
    triples = []
    for g in word:
        name = by_perm.get(g) if isinstance(g, SignedPerm) else g
        if name not in lifts:
            raise GeneratorOutsideCentralizer(f"{g!r} is not a block generator of {t}")
        perm, rows = lifts[name]
        triples.append((name, perm, rows))
    return weyl_lift(field, triples)


# monomial matrices in log form

class MonomialMatrix:
    """Monomial matrix: row i has the single entry g^logs[i] in column cols[i].

    g is the primitive element of the field (its exp/log tables are used), so
    the field must be small enough for tables.
    """

    __slots__ = ("field", "cols", "logs", "_hash")

    def __init__(self, field: gf.FieldSpec, cols: tuple, logs: tuple):
        self.field = field
        self.cols = cols
        self.logs = logs
        self._hash = None

    @classmethod
    def identity(cls, field, dim):
        return cls(field, tuple(range(dim)), (0,) * dim)

    @classmethod
    def from_perm(cls, field, perm: SignedPerm, neg_rows=()) -> "MonomialMatrix":
        h = field.neg_one_log
        logs = [0] * (2 * perm.n)
        for r in neg_rows:
            logs[r] = h
        return cls(field, perm.points(), tuple(logs))

    @classmethod
    def diagonal(cls, field, logs) -> "MonomialMatrix":
        logs = tuple(int(x) % (field.order - 1) for x in logs)
        return cls(field, tuple(range(len(logs))), logs)

    @classmethod
    def from_dense(cls, a: SympMatrix) -> "MonomialMatrix":
        if not a.is_monomial():
            raise ValueError("matrix is not monomial")
        cols, logs = [], []
        for r in a.rows:
            j = next(j for j, x in enumerate(r) if x)
            cols.append(j)
            logs.append(a.field.log(r[j]))
        return cls(a.field, tuple(cols), tuple(logs))

    @property
    def dim(self):
        return len(self.cols)

    @property
    def modulus(self):
        return self.field.order - 1

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if isinstance(other, MonomialMatrix):
            m = self.modulus
            oc, ol = other.cols, other.logs
            return MonomialMatrix(self.field,
                                  tuple(oc[c] for c in self.cols),
                                  tuple((l + ol[c]) % m for c, l in zip(self.cols, self.logs)))
        return NotImplemented

    def scaled_log(self, s: int) -> "MonomialMatrix":
        """Multiply by the scalar g^s."""
        m = self.modulus
        return MonomialMatrix(self.field, self.cols, tuple((l + s) % m for l in self.logs))

    def __neg__(self):
        return self.scaled_log(self.field.neg_one_log)

    def inverse(self) -> "MonomialMatrix":
        m = self.modulus
        cols = [0] * self.dim
        logs = [0] * self.dim
        for i, (c, l) in enumerate(zip(self.cols, self.logs)):
            cols[c] = i
            logs[c] = (-l) % m
        return MonomialMatrix(self.field, tuple(cols), tuple(logs))

    def __pow__(self, e: int) -> "MonomialMatrix":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = MonomialMatrix.identity(self.field, self.dim)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self, q: int) -> "MonomialMatrix":
        m = self.modulus
        return MonomialMatrix(self.field, self.cols, tuple(l * q % m for l in self.logs))

    def __eq__(self, other):
        return isinstance(other, MonomialMatrix) and self.cols == other.cols and self.logs == other.logs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.cols, self.logs))
        return self._hash

    def key(self) -> tuple:
        return self.cols + self.logs

    def is_identity(self) -> bool:
        return self.cols == tuple(range(self.dim)) and not any(self.logs)

    def is_diagonal(self) -> bool:
        return self.cols == tuple(range(self.dim))

    def scalar_log(self):
        """s if the matrix is g^s I, else None."""
        if self.is_diagonal() and len(set(self.logs)) == 1:
            return self.logs[0]
        return None

    def is_symplectic(self) -> bool:
        """Row i -> column c(i): need c(-i) = -c(i) and v_i v_{-i} = Q[c(i), c(-i)]."""
        n = self.dim // 2
        h = self.field.neg_one_log
        m = self.modulus
        for i in range(n):
            ci, cj = self.cols[i], self.cols[n + i]
            if cj != (ci + n) % (2 * n):
                return False
            want = 0 if ci < n else h
            if (self.logs[i] + self.logs[n + i]) % m != want:
                return False
        return True

    def proj_key(self) -> tuple:
        """Key shared by M and -M, matching :func:`psp_canonical` on the dense form."""
        f = self.field
        if f.p == 2:
            return self.key()
        h = f.neg_one_log
        alt = (self.logs[0] + h) % self.modulus
        if f.exp(alt) < f.exp(self.logs[0]):
            return self.cols + tuple((l + h) % self.modulus for l in self.logs)
        return self.key()

    def proj_canonical(self) -> "MonomialMatrix":
        k = self.proj_key()
        d = self.dim
        return MonomialMatrix(self.field, k[:d], k[d:])

    def to_dense(self) -> SympMatrix:
        d = self.dim
        rows = [[0] * d for _ in range(d)]
        for i, (c, l) in enumerate(zip(self.cols, self.logs)):
            rows[i][c] = self.field.exp(l)
        return SympMatrix(self.field, rows)

    def __repr__(self):
        return f"MonomialMatrix(cols={self.cols}, logs={self.logs})"
