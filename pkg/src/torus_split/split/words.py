"""Evaluation of relation words such as ``"t1*t2*t1^-1*t2^-1"``."""

from __future__ import annotations

import re

from ..sympmat import MonomialMatrix

_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9']*)(?:\^(-?\d+))?$")


def parse_word(word: str) -> list:
    """List of (name, exponent) factors."""
    out = []
    for tok in word.replace(" ", "").split("*"):
        m = _FACTOR.match(tok)
        if not m:
            raise ValueError(f"bad word factor {tok!r} in {word!r}")
        out.append((m.group(1), int(m.group(2) or 1)))
    return out


def eval_word(word: str, gens: dict) -> MonomialMatrix:
    result = None
    for name, e in parse_word(word):
        if name not in gens:
            raise KeyError(f"unknown generator {name!r}")
        f = gens[name] ** e
        result = f if result is None else result * f
    return result


def relation_holds(word: str, scalar: int, gens: dict) -> bool:
    """word evaluates exactly to scalar * I (scalar is +1 or -1)."""
    m = eval_word(word, gens)
    s = m.scalar_log()
    if s is None:
        return False
    want = 0 if scalar == 1 else m.field.neg_one_log
    return s == want


def commutes(a: str, b: str) -> str:
    """Word that equals I (or -I) exactly when a b = b a (or a b = -b a)."""
    return f"{a}*{b}*{a}^-1*{b}^-1"


def conjugates_to(a: str, x: str, b: str) -> str:
    """Word equal to I exactly when x^-1 a x = b."""
    return f"{x}^-1*{a}*{x}*{b}^-1"
