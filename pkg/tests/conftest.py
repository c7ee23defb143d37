import itertools

import pytest


def poly_divmod(num, den, p):
    """Remainder of num modulo a monic den, coefficient lists low-to-high."""
    num = [c % p for c in num]
    k = len(den) - 1
    while len(num) > k:
        lead = num[-1]
        shift = len(num) - 1 - k
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - lead * c) % p
        num.pop()
    return num + [0] * (k - len(num))


def poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def is_irreducible_bruteforce(poly, p):
    """A monic polynomial of degree k is irreducible iff no monic factor of degree 1..k//2 divides it."""
    k = len(poly) - 1
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not any(poly_divmod(poly, list(low) + [1], p)):
                return False
    return True


def least_irreducible(p, k):
    """Lexicographically least monic irreducible of degree k, low-degree coefficients compared first."""
    for low in itertools.product(range(p), repeat=k):
        poly = list(low) + [1]
        if is_irreducible_bruteforce(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial")


@pytest.fixture
def oracle_least_irreducible():
    return least_irreducible


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "ACCEPTANCE_LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
