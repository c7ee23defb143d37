"""Verdicts, certificates, witnesses, and the rule-based classifiers.

Rule identifiers used in verdicts:

    C2      Sp_{2n}(q): splits exactly when p = 2
    L5-1    Sp_{2n}(q), odd q: no lift of tau_1 squares to I
    T2-1    PSp, p = 2
    T2-2    PSp, a single block (m = 1)
    T2-3    PSp, two negative blocks, both odd, q = 3 mod 4
    T2-4    PSp, (n1-)(n2) with n1 odd, n2 even, q = 3 mod 4
    T2-5    PSp, two positive blocks, both even, q = 3 mod 4
    T2-6    PSp, two positive blocks, q = 1 mod 4
    L5-2    PSp, three or more blocks, odd q
    L7-1    PSp, type (1-)(1), odd q
    T2-none PSp, two blocks, odd q, none of T2-3..T2-6 holds
    C1      Sp over the algebraic closure: splits exactly when p = 2
    T1-1    PSp over the algebraic closure, p = 2
    T1-2    PSp over the algebraic closure, n <= 2
    T1-none PSp over the algebraic closure, odd p and n >= 3
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import gf
from ..bweyl import CycleType, check_rank
from ..errors import InvalidType
from ..normalizer import normalize_kind

RULE_TEXT = {
    "C2": "Sp(2n,q) splits over every maximal torus iff p = 2",
    "L5-1": "odd q: every lift of tau_1 to N squares to a non-identity matrix",
    "T2-1": "characteristic 2: the signed permutation matrices give a complement",
    "T2-2": "single block (m = 1)",
    "T2-3": "m = 2, both blocks negative, n1 and n2 odd, q = 3 mod 4",
    "T2-4": "m = 2, (n1-)(n2), n1 odd, n2 even, q = 3 mod 4",
    "T2-5": "m = 2, both blocks positive, n1 and n2 even, q = 3 mod 4",
    "T2-6": "m = 2, both blocks positive, q = 1 mod 4",
    "L5-2": "three or more blocks, odd q: lifts of tau_1 and tau_2 cannot commute up to sign with scalar squares",
    "L7-1": "type (1-)(1), odd q: the squares of the lifts of varpi_1 and tau_2 cannot both be scalar",
    "T2-none": "m = 2, odd q, no splitting condition holds",
    "C1": "Sp(2n) over the algebraic closure splits iff p = 2",
    "T1-1": "algebraic PSp, p = 2",
    "T1-2": "algebraic PSp, n <= 2",
    "T1-none": "algebraic PSp, odd p and n >= 3",
}


@dataclass(frozen=True)
class Verdict:
    splits: bool
    rule: str
    group_kind: str
    setting: str

    @property
    def citation(self) -> str:
        return RULE_TEXT.get(self.rule, self.rule)

    def label(self) -> str:
        return "split" if self.splits else "non-split"


@dataclass
class ComplementCertificate:
    generators: list
    relations_checked: list
    complement_order: int
    intersection_trivial: bool
    rule: str = ""
    names: list = field(default_factory=list)
    kind: str = "PSp"


@dataclass
class ObstructionWitness:
    clause: str
    coset_data: list
    exhausted_parameters: dict
    predicted_counts: dict
    conclusion: str
    satisfying: int = 0

    @property
    def exhaustive(self) -> bool:
        return all(self.exhausted_parameters.get(k) == v for k, v in self.predicted_counts.items())


def _as_type(t) -> CycleType:
    return CycleType.parse(t) if isinstance(t, str) else t


def classify(n: int, q: int, t, kind: str = "PSp") -> Verdict:
    """Rule-based splitting verdict over GF(q)."""
    t = _as_type(t)
    check_rank(t, n)
    try:
        p, _ = gf.prime_power(q)
    except ValueError as exc:
        raise InvalidType(f"q={q} is not a prime power") from exc
    kind = normalize_kind(kind)
    setting = f"finite({q})"
    if kind == "Sp":
        return Verdict(p == 2, "C2" if p == 2 else "L5-1", kind, setting)
    if p == 2:
        return Verdict(True, "T2-1", kind, setting)
    m, k = t.m, t.k
    if m == 1:
        return Verdict(True, "T2-2", kind, setting)
    if m >= 3:
        return Verdict(False, "L5-2", kind, setting)
    n1, n2 = t.parts
    q4 = q % 4
    if k == 2 and n1 % 2 and n2 % 2 and q4 == 3:
        return Verdict(True, "T2-3", kind, setting)
    if k == 1 and n1 % 2 and n2 % 2 == 0 and q4 == 3:
        return Verdict(True, "T2-4", kind, setting)
    if k == 0 and n1 % 2 == 0 and n2 % 2 == 0 and q4 == 3:
        return Verdict(True, "T2-5", kind, setting)
    if k == 0 and q4 == 1:
        return Verdict(True, "T2-6", kind, setting)
    if k == 1 and n1 == 1 and n2 == 1:
        return Verdict(False, "L7-1", kind, setting)
    return Verdict(False, "T2-none", kind, setting)


def classify_algebraic(n: int, p: int, kind: str = "PSp") -> Verdict:
    """Splitting verdict for the torus normalizer of Sp/PSp over the algebraic closure of GF(p)."""
    if not gf.is_prime(p):
        raise InvalidType(f"{p} is not prime")
    if n < 1:
        raise InvalidType("rank must be positive")
    kind = normalize_kind(kind)
    setting = f"algebraic({p})"
    if kind == "Sp":
        return Verdict(p == 2, "C1", kind, setting)
    if p == 2:
        return Verdict(True, "T1-1", kind, setting)
    if n <= 2:
        return Verdict(True, "T1-2", kind, setting)
    return Verdict(False, "T1-none", kind, setting)
