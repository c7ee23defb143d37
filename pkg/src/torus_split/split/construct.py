"""Explicit complements to the torus in its normalizer.

Every construction returns named monomial generators over the torus' ambient
field together with the relations they are expected to satisfy; the
relations are re-checked exactly on the matrices before a certificate is
issued.

Notation for diagonal blocks (all as discrete logs over the ambient field):

* ``alt(s)``    diag(l, -l, l, -l, ...) of size s, l a square root of -1;
* ``frob(x,s)`` diag(x, x^q, ..., x^(q^(s-1)));
* ``cdiag(s)``  diag(1, ..., 1, -1);
* ``const(c,s)`` c times the identity of size s.
"""

from __future__ import annotations

from .. import gf
from ..bweyl import CycleType, block_cycle, block_swap, block_tau
from ..errors import ConstructionRelationFailed, NotSplitByClassification
from ..normalizer import normalize_kind
from ..sympmat import MonomialMatrix, SympMatrix
from ..torus import TorusSpec
from .verdict import ComplementCertificate, classify
from .words import commutes, conjugates_to, relation_holds


class _Blocks:
    """Log-space helpers bound to one torus spec."""

    def __init__(self, spec: TorusSpec):
        self.spec = spec
        self.field = spec.ambient
        self.N = self.field.order - 1
        self.h = self.field.neg_one_log
        self.q = spec.q

    def lam(self) -> int:
        """log of a square root of -1, taken in GF(q) or GF(q^2) and embedded."""
        p, s = gf.prime_power(self.q)
        small = gf.make_field(p, s if self.q % 4 == 1 else 2 * s)
        return self.field.log(gf.embed(gf.sqrt_minus_one(small), self.field).code)

    def alt(self, size: int) -> list:
        lam = self.lam()
        return [(lam + (self.h if i % 2 else 0)) % self.N for i in range(size)]

    def frob(self, x: int, size: int) -> list:
        return [x * self.q ** i % self.N for i in range(size)]

    def cdiag(self, size: int) -> list:
        return [0] * (size - 1) + [self.h]

    def const(self, c: int, size: int) -> list:
        return [c % self.N] * size

    def inv(self, logs: list) -> list:
        return [(-x) % self.N for x in logs]

    def neg(self, logs: list) -> list:
        return [(x + self.h) % self.N for x in logs]

    def mono(self, top: list, bottom: list, perm) -> MonomialMatrix:
        """bd(top blocks, bottom blocks) times the permutation matrix of perm."""
        logs = [x for blk in top for x in blk] + [x for blk in bottom for x in blk]
        d = MonomialMatrix.diagonal(self.field, logs)
        return d * MonomialMatrix.from_perm(self.field, perm)


def _perm_generators(spec: TorusSpec):
    """Characteristic 2: plain permutation matrices of the block generators."""
    from ..bweyl import block_generators

    gens = {name: MonomialMatrix.from_perm(spec.ambient, perm) for name, perm in block_generators(spec.type)}
    rels = [(f"{name}^{perm.order()}", 1) for name, perm in block_generators(spec.type)]
    return gens, rels


def single_block_generators(spec: TorusSpec):
    """One block: <t1> for (n-), <s1> x <u1> for (n)."""
    b = _Blocks(spec)
    t = spec.type
    n = t.n
    if t.k == 1:
        t1 = b.mono([b.const(0, n)], [b.cdiag(n)], block_cycle(t, 1))
        return {"t1": t1}, [(f"t1^{2 * n}", -1)]
    u1 = b.mono([b.const(0, n)], [b.const(b.h, n)], block_tau(t, 1))
    gens = {"u1": u1}
    rels = [("u1^2", -1)]
    if n > 1:
        gens = {"s1": MonomialMatrix.from_perm(b.field, block_cycle(t, 1)), "u1": u1}
        rels = [(f"s1^{n}", 1), ("u1^2", -1), (commutes("s1", "u1"), 1)]
    return gens, rels


def rank_two_generators(spec: TorusSpec):
    """Types (1)(1) with q = 1 mod 4 and (1-)(1-) with q = 3 mod 4: s1, s2, w.

    An alternative to the general two-block builders for rank two; not used
    by construct_complement, which always takes the general builder.

    s1 = l * [[0,0,1,0],[0,1,0,0],[1,0,0,0],[0,0,0,-1]],
    s2 = l * [[1,0,0,0],[0,0,0,1],[0,0,-1,0],[0,1,0,0]],
    w  = the block swap, with l^2 = -1.
    """
    b = _Blocks(spec)
    f = b.field
    lam = gf.FieldElem(f, f.exp(b.lam()))
    m1 = -f.one
    s1 = SympMatrix(f, [[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, m1]]).scale(lam)
    s2 = SympMatrix(f, [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, m1, 0], [0, 1, 0, 0]]).scale(lam)
    w = SympMatrix(f, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    gens = {name: MonomialMatrix.from_dense(m) for name, m in (("s1", s1), ("s2", s2), ("w", w))}
    rels = [("s1^2", -1), ("s2^2", -1), ("w^2", 1), (commutes("s1", "s2"), -1),
            (conjugates_to("s1", "w", "s2"), 1)]
    return gens, rels


def two_negative_generators(spec: TorusSpec):
    """(n1-)(n2-), n1 and n2 odd, q = 3 mod 4: t1, t2 (and the swap if n1 = n2)."""
    b = _Blocks(spec)
    t = spec.type
    n1, n2 = t.parts
    t1 = b.mono([b.const(0, n1), b.alt(n2)], [b.cdiag(n1), b.inv(b.alt(n2))], block_cycle(t, 1))
    t2 = b.mono([b.alt(n1), b.const(0, n2)], [b.inv(b.alt(n1)), b.cdiag(n2)], block_cycle(t, 2))
    gens = {"t1": t1, "t2": t2}
    rels = [(f"t1^{2 * n1}", -1), (f"t2^{2 * n2}", -1), (commutes("t1", "t2"), -1)]
    if n1 == n2:
        gens["w"] = MonomialMatrix.from_perm(b.field, block_swap(t, 1))
        rels += [("w^2", 1), (conjugates_to("t1", "w", "t2"), 1)]
    return gens, rels


def two_positive_generators(spec: TorusSpec):
    """(n1)(n2): q = 1 mod 4, or q = 3 mod 4 with n1, n2 even.  s1, u1, s2, u2 (+ swap)."""
    b = _Blocks(spec)
    t = spec.type
    n1, n2 = t.parts
    q = spec.q
    lam = b.lam()
    z1, z2 = b.const(0, n1), b.const(0, n2)
    if q % 4 == 1:
        s1 = MonomialMatrix.from_perm(b.field, block_cycle(t, 1))
        s2 = MonomialMatrix.from_perm(b.field, block_cycle(t, 2))
        u1 = b.mono([z1, b.const(lam, n2)], [b.const(b.h, n1), b.const(-lam, n2)], block_tau(t, 1))
        u2 = b.mono([b.const(lam, n1), z2], [b.const(-lam, n1), b.const(b.h, n2)], block_tau(t, 2))
        rels = [(f"s1^{n1}", 1), (f"s2^{n2}", 1), ("u1^2", -1), ("u2^2", -1),
                (commutes("s1", "u1"), 1), (commutes("s2", "u2"), 1), (commutes("s1", "s2"), 1),
                (commutes("u1", "u2"), -1), (commutes("s1", "u2"), 1), (commutes("s2", "u1"), 1)]
    else:
        xi1 = b.field.log(gf.element_of_order(b.field, q ** n1 - 1).code)
        xi2 = b.field.log(gf.element_of_order(b.field, q ** n2 - 1).code)
        alpha1, lam1 = -xi1, xi1 * (q - 1) // 2
        beta2, mu2 = -xi2, xi2 * (q - 1) // 2
        d1 = z1 if n1 % 4 == 0 else b.frob(lam1, n1)
        bb1 = z1 if n1 % 4 == 0 else b.frob(alpha1, n1)
        d2p = z2 if n2 % 4 == 0 else b.frob(mu2, n2)
        bb2p = z2 if n2 % 4 == 0 else b.frob(beta2, n2)
        s1 = b.mono([d1, b.alt(n2)], [b.inv(d1), b.inv(b.alt(n2))], block_cycle(t, 1))
        u1 = b.mono([bb1, b.alt(n2)], [b.neg(b.inv(bb1)), b.inv(b.alt(n2))], block_tau(t, 1))
        s2 = b.mono([b.alt(n1), d2p], [b.inv(b.alt(n1)), b.inv(d2p)], block_cycle(t, 2))
        u2 = b.mono([b.alt(n1), bb2p], [b.inv(b.alt(n1)), b.neg(b.inv(bb2p))], block_tau(t, 2))
        sgn1 = -1 if n1 % 4 == 2 else 1
        sgn2 = -1 if n2 % 4 == 2 else 1
        rels = [(f"s1^{n1}", sgn1), (f"s2^{n2}", sgn2), ("u1^2", -1), ("u2^2", -1),
                (commutes("s1", "u1"), 1), (commutes("s2", "u2"), 1),
                (commutes("s1", "u2"), -1), (commutes("s2", "u1"), -1),
                (commutes("u1", "u2"), -1), (commutes("s1", "s2"), -1)]
    gens = {"s1": s1, "u1": u1, "s2": s2, "u2": u2}
    if n1 == n2:
        gens["w"] = MonomialMatrix.from_perm(b.field, block_swap(t, 1))
        rels += [("w^2", 1), (conjugates_to("s1", "w", "s2"), 1), (conjugates_to("u1", "w", "u2"), 1)]
    return gens, rels


def mixed_generators(spec: TorusSpec):
    """(n1-)(n2), n1 odd, n2 even, q = 3 mod 4: t1, s2, u2."""
    b = _Blocks(spec)
    t = spec.type
    n1, n2 = t.parts
    q = spec.q
    z1, z2 = b.const(0, n1), b.const(0, n2)
    xi2 = b.field.log(gf.element_of_order(b.field, q ** n2 - 1).code)
    beta2, mu2 = -xi2, xi2 * (q - 1) // 2
    d2p = z2 if n2 % 4 == 0 else b.frob(mu2, n2)
    bb2 = z2 if n2 % 4 == 0 else b.frob(beta2, n2)
    t1 = b.mono([z1, b.alt(n2)], [b.cdiag(n1), b.inv(b.alt(n2))], block_cycle(t, 1))
    s2 = b.mono([b.alt(n1), d2p], [b.inv(b.alt(n1)), b.inv(d2p)], block_cycle(t, 2))
    u2 = b.mono([b.alt(n1), bb2], [b.inv(b.alt(n1)), b.neg(b.inv(bb2))], block_tau(t, 2))
    sgn2 = -1 if n2 % 4 == 2 else 1
    rels = [(f"t1^{2 * n1}", -1), ("u2^2", -1), (commutes("t1", "u2"), -1), (commutes("t1", "s2"), -1),
            (f"s2^{n2}", sgn2), (commutes("s2", "u2"), 1)]
    return {"t1": t1, "s2": s2, "u2": u2}, rels


def _choose(spec: TorusSpec, kind: str):
    t = spec.type
    if spec.p == 2:
        return _perm_generators
    if kind == "Sp":
        return None
    if t.m == 1:
        return single_block_generators
    if t.m == 2:
        return {2: two_negative_generators, 1: mixed_generators, 0: two_positive_generators}[t.k]
    return None


def check_relations(gens: dict, rels: list) -> list:
    """Relations that fail (empty list when all hold)."""
    return [(w, s) for w, s in rels if not relation_holds(w, s, gens)]


def construct_complement(spec: TorusSpec, kind: str = "PSp") -> ComplementCertificate:
    """Generators of an explicit complement, with every listed relation re-checked."""
    kind = normalize_kind(kind)
    verdict = classify(spec.n, spec.q, spec.type, kind)
    if not verdict.splits:
        raise NotSplitByClassification(f"{spec.type} over GF({spec.q}) in {kind}: {verdict.rule}")
    builder = _choose(spec, kind)
    if builder is None:  # pragma: no cover - classify and _choose agree
        raise NotSplitByClassification(f"no construction for {spec.type}")
    gens, rels = builder(spec)
    failed = check_relations(gens, rels)
    if failed:
        raise ConstructionRelationFailed(f"relations failed for {spec.type}, q={spec.q}: {failed}")
    from .oracle import subgroup_closure

    names = list(gens)
    mats = [gens[k] for k in names]
    elements, trivial = subgroup_closure(spec, kind, mats)
    return ComplementCertificate(
        generators=[m.to_dense() for m in mats],
        relations_checked=list(rels),
        complement_order=len(elements),
        intersection_trivial=trivial,
        rule=verdict.rule,
        names=names,
        kind=kind,
    )


def generators_by_name(cert: ComplementCertificate) -> dict:
    return {name: MonomialMatrix.from_dense(g) for name, g in zip(cert.names, cert.generators)}
