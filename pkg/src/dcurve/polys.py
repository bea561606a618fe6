"""Dense univariate polynomials over Q.

A polynomial is a tuple of :class:`fractions.Fraction` coefficients, lowest
degree first, with no trailing zeros.  The zero polynomial is ``()``.
Polynomials in the Euler operator E are stored this way throughout the
package, with ``x`` standing for E.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

Poly = tuple

ZERO: Poly = ()
ONE: Poly = (Fraction(1),)
X: Poly = (Fraction(0), Fraction(1))


def make(coeffs: Iterable) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def const(c) -> Poly:
    return make([c])


def degree(f: Poly) -> int:
    return len(f) - 1


def lc(f: Poly) -> Fraction:
    return f[-1] if f else Fraction(0)


def add(f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return make((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n))


def sub(f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return make((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n))


def scale(f: Poly, c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return ZERO
    return tuple(a * c for a in f)


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ZERO
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return make(out)


def power(f: Poly, n: int) -> Poly:
    out = ONE
    for _ in range(n):
        out = mul(out, f)
    return out


def prod(polys: Iterable[Poly]) -> Poly:
    out = ONE
    for f in polys:
        out = mul(out, f)
    return out


def from_roots(roots: Iterable) -> Poly:
    """Monic polynomial prod (x - r)."""
    return prod(make([-Fraction(r), 1]) for r in roots)


def evaluate(f: Poly, x) -> Fraction:
    acc = Fraction(0)
    for a in reversed(f):
        acc = acc * x + a
    return acc


def shift(f: Poly, a) -> Poly:
    """Return f(x + a)."""
    a = Fraction(a)
    if a == 0 or len(f) <= 1:
        return f
    out = [Fraction(0)] * len(f)
    for k, c in enumerate(f):
        if c == 0:
            continue
        # (x + a)^k
        for i in range(k + 1):
            out[i] += c * comb(k, i) * a ** (k - i)
    return make(out)


def divmod_(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return ZERO, f
    q = [Fraction(0)] * (len(r) - dg)
    inv = 1 / g[-1]
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg] * inv
        q[k] = c
        if c:
            for j, b in enumerate(g):
                r[k + j] -= c * b
    return make(q), make(r[:dg])


def rem(f: Poly, g: Poly) -> Poly:
    return divmod_(f, g)[1]


def exact_div(f: Poly, g: Poly) -> Poly:
    q, r = divmod_(f, g)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


def divides(g: Poly, f: Poly) -> bool:
    return not rem(f, g)


def monic(f: Poly) -> Poly:
    if not f:
        return f
    return scale(f, 1 / f[-1])


def gcd(f: Poly, g: Poly) -> Poly:
    while g:
        f, g = g, rem(f, g)
    return monic(f)


def falling(j: int) -> Poly:
    """x (x - 1) ... (x - j + 1)."""
    return from_roots(range(j))


def falling_value(n, j: int):
    out = 1
    for k in range(j):
        out *= n - k
    return out


def to_falling(f: Poly) -> list[Fraction]:
    """Coefficients c_j with f = sum c_j x(x-1)...(x-j+1).

    Newton forward differences at 0: c_j = (Delta^j f)(0) / j!.
    """
    vals = [evaluate(f, n) for n in range(len(f))]
    out = []
    for j in range(len(f)):
        out.append(vals[0] / factorial(j))
        vals = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
    return out


def from_falling(coeffs: Sequence) -> Poly:
    out = ZERO
    for j, c in enumerate(coeffs):
        if c:
            out = add(out, scale(falling(j), c))
    return out


def fmt(f: Poly, var: str = "E") -> str:
    if not f:
        return "0"
    parts = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and abs(c) == 1:
            body = mono
        elif mono:
            body = f"{abs(c)}*{mono}"
        else:
            body = str(abs(c))
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
