"""Finite non-splitting certificates.

Each clause enumerates every lift (torus element times a fixed
representative) of a few Weyl elements and shows that no choice satisfies the
relations a complement would force.  In PSp all relations are read up to the
sign +-I.  Counts of enumerated lifts are recorded so that exhaustiveness can
be checked against the torus order.
"""

from __future__ import annotations

from ..errors import ClauseNotApplicable, ObstructionFailed
from ..normalizer import NormalizerGroup, build_normalizer, normalize_kind
from ..sympmat import MonomialMatrix
from ..torus import TorusSpec, enumerate_torus, realize_monomial
from .verdict import ObstructionWitness, classify

CLAUSES = ("L5-1", "L5-2", "L7-1", "L8", "L9", "L10")


def _lifts(group: NormalizerGroup, x):
    """All |T| lifts t * R_x of the Weyl element x (as matrices, with repetitions in PSp)."""
    r = group.transversal[x]
    return [realize_monomial(t) * r for t in enumerate_torus(group.spec)]


def _scalar_sign(m: MonomialMatrix, allow_minus: bool) -> bool:
    s = m.scalar_log()
    if s is None:
        return False
    return s == 0 or (allow_minus and s == m.field.neg_one_log)


def _commute_sign(a: MonomialMatrix, b: MonomialMatrix, allow_minus: bool) -> bool:
    return _scalar_sign(a * b * a.inverse() * b.inverse(), allow_minus)


def _weyl(group: NormalizerGroup, prefix: str, j: int):
    return group.generator_perms[f"{prefix}{j}"]


def _tau(group: NormalizerGroup, j: int):
    """tau_j as a Weyl element: varpi_j^(n_j) on a negative block."""
    t = group.type
    if j <= t.k:
        return _weyl(group, "varpi", j) ** t.parts[j - 1]
    return _weyl(group, "tau", j)


def default_clause(spec: TorusSpec, kind: str) -> str:
    kind = normalize_kind(kind)
    t = spec.type
    if spec.p == 2:
        raise ClauseNotApplicable("characteristic 2 always splits")
    if kind == "Sp":
        return "L5-1"
    verdict = classify(spec.n, spec.q, t, kind)
    if verdict.splits:
        raise ClauseNotApplicable(f"{t} over GF({spec.q}) splits ({verdict.rule})")
    if t.m >= 3:
        return "L5-2"
    if t.k == 2:
        return "L8"
    if t.k == 1:
        return "L7-1" if t.parts == (1, 1) else "L10"
    return "L9"


def obstruction_check(spec: TorusSpec, kind: str = "PSp", which: str | None = None,
                      group: NormalizerGroup | None = None) -> ObstructionWitness:
    """Exhaustive non-splitting witness for the given clause (chosen automatically if None)."""
    kind = normalize_kind(kind)
    which = which or default_clause(spec, kind)
    if which not in CLAUSES:
        raise ClauseNotApplicable(f"unknown clause {which!r}")
    if spec.p == 2:
        raise ClauseNotApplicable("characteristic 2 always splits")
    t = spec.type
    need = {
        "L5-1": kind == "Sp",
        "L5-2": kind == "PSp" and t.m >= 3,
        "L7-1": kind == "PSp" and t.parts == (1, 1) and t.k == 1,
        "L8": kind == "PSp" and t.m == 2 and t.k == 2,
        "L9": kind == "PSp" and t.m == 2 and t.k == 0 and spec.q % 4 == 3,
        "L10": kind == "PSp" and t.m == 2 and t.k == 1,
    }[which]
    if not need:
        raise ClauseNotApplicable(f"clause {which} does not apply to {t} in {kind}")
    group = group or build_normalizer(spec, "Sp")
    witness = _RUNNERS[which](group)
    if witness.satisfying:
        raise ObstructionFailed(f"clause {which}: {witness.satisfying} consistent lift systems for {t}, q={spec.q}")
    return witness


def _l5_1(group: NormalizerGroup) -> ObstructionWitness:
    lifts = _lifts(group, _tau(group, 1))
    good = sum(1 for u in lifts if (u * u).is_identity())
    return ObstructionWitness(
        "L5-1", ["tau1"], {"tau1": len(lifts)}, {"tau1": group.spec.order},
        "no lift of tau_1 squares to I", good)


def _scalar_square_lifts(group, x, power=2):
    all_lifts = _lifts(group, x)
    return all_lifts, [u for u in all_lifts if _scalar_sign(u ** power, True)]


def _l5_2(group: NormalizerGroup) -> ObstructionWitness:
    all1, u1s = _scalar_square_lifts(group, _tau(group, 1))
    all2, u2s = _scalar_square_lifts(group, _tau(group, 2))
    good = sum(1 for a in u1s for b in u2s if _commute_sign(a, b, True))
    return ObstructionWitness(
        "L5-2", ["tau1", "tau2"], {"tau1": len(all1), "tau2": len(all2)},
        {"tau1": group.spec.order, "tau2": group.spec.order},
        f"{len(u1s)} x {len(u2s)} lifts with scalar squares; none commute up to sign", good)


def _l7_1(group: NormalizerGroup) -> ObstructionWitness:
    all1, t1s = _scalar_square_lifts(group, _weyl(group, "varpi", 1))
    all2, u2s = _scalar_square_lifts(group, _tau(group, 2))
    return ObstructionWitness(
        "L7-1", ["varpi1", "tau2"], {"varpi1": len(all1), "tau2": len(all2)},
        {"varpi1": group.spec.order, "tau2": group.spec.order},
        f"{len(t1s)} lifts of varpi_1 and {len(u2s)} lifts of tau_2 have scalar squares",
        len(t1s) * len(u2s))


def _l8(group: NormalizerGroup) -> ObstructionWitness:
    n1, n2 = group.type.parts
    all1, t1s = _scalar_square_lifts(group, _weyl(group, "varpi", 1), 2 * n1)
    all2, t2s = _scalar_square_lifts(group, _weyl(group, "varpi", 2), 2 * n2)
    good = sum(1 for a in t1s for b in t2s if _commute_sign(a, b, True))
    return ObstructionWitness(
        "L8", ["varpi1", "varpi2"], {"varpi1": len(all1), "varpi2": len(all2)},
        {"varpi1": group.spec.order, "varpi2": group.spec.order},
        f"{len(t1s)} x {len(t2s)} lifts with scalar powers; none commute up to sign", good)


def _l9(group: NormalizerGroup) -> ObstructionWitness:
    all_u1, u1s = _scalar_square_lifts(group, _tau(group, 1))
    all_u2, u2s = _scalar_square_lifts(group, _tau(group, 2))
    s1s = _lifts(group, _weyl(group, "omega", 1))
    s2s = _lifts(group, _weyl(group, "omega", 2))
    pair12 = any(_commute_sign(s, u, True) for s in s1s for u in u2s)
    pair21 = any(_commute_sign(s, u, True) for s in s2s for u in u1s)
    good = int(pair12 and pair21)
    return ObstructionWitness(
        "L9", ["omega1", "tau1", "omega2", "tau2"],
        {"omega1": len(s1s), "tau1": len(all_u1), "omega2": len(s2s), "tau2": len(all_u2)},
        {k: group.spec.order for k in ("omega1", "tau1", "omega2", "tau2")},
        f"(s1,u2) pairs {'exist' if pair12 else 'absent'}, (s2,u1) pairs {'exist' if pair21 else 'absent'}",
        good)


def _l10(group: NormalizerGroup) -> ObstructionWitness:
    n1, _ = group.type.parts
    all_t1, t1s = _scalar_square_lifts(group, _weyl(group, "varpi", 1), 2 * n1)
    all_u2, u2s = _scalar_square_lifts(group, _tau(group, 2))
    s2s = _lifts(group, _weyl(group, "omega", 2))
    good = 0
    for a in t1s:
        if any(_commute_sign(a, u, True) for u in u2s) and any(_commute_sign(a, s, True) for s in s2s):
            good += 1
    return ObstructionWitness(
        "L10", ["varpi1", "tau2", "omega2"],
        {"varpi1": len(all_t1), "tau2": len(all_u2), "omega2": len(s2s)},
        {k: group.spec.order for k in ("varpi1", "tau2", "omega2")},
        f"{len(t1s)} lifts of varpi_1 with scalar power; none extends to tau_2 and omega_2 lifts", good)


_RUNNERS = {"L5-1": _l5_1, "L5-2": _l5_2, "L7-1": _l7_1, "L8": _l8, "L9": _l9, "L10": _l10}
