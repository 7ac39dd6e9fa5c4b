"""Univariate polynomials over Q and homogeneous binary forms.

Univariate polynomials are ascending coefficient lists of Fractions.
Binary forms of degree d in (s, t) are coefficient lists
``[c_0, ..., c_d]`` where ``c_k`` multiplies ``s^(d-k) t^k``; the pair
(list, d) is carried implicitly by the list length.

Factorization is complete through degree 4 (rational roots, quadratic
discriminants, and the resolvent cubic for quartics), which covers every
eliminant this project produces.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .arith import factor

UPoly = list[Fraction]


def up(coeffs) -> UPoly:
    return up_trim([Fraction(c) for c in coeffs])


def up_trim(p: UPoly) -> UPoly:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def up_deg(p: UPoly) -> int:
    return len(p) - 1  # zero polynomial: -1


def up_add(p: UPoly, q: UPoly) -> UPoly:
    n = max(len(p), len(q))
    return up_trim(
        [
            (p[i] if i < len(p) else Fraction(0))
            + (q[i] if i < len(q) else Fraction(0))
            for i in range(n)
        ]
    )


def up_scale(p: UPoly, c: Fraction) -> UPoly:
    c = Fraction(c)
    return [] if c == 0 else [x * c for x in p]


def up_mul(p: UPoly, q: UPoly) -> UPoly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return up_trim(out)


def up_divmod(p: UPoly, q: UPoly) -> tuple[UPoly, UPoly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = p[:]
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(r) >= len(q) and r:
        c = r[-1] / q[-1]
        k = len(r) - len(q)
        quot[k] = c
        for i, b in enumerate(q):
            r[k + i] -= c * b
        r = up_trim(r)
    return up_trim(quot), r


def up_monic(p: UPoly) -> UPoly:
    return up_scale(p, Fraction(1) / p[-1]) if p else []


def up_gcd(p: UPoly, q: UPoly) -> UPoly:
    a, b = up_trim(p[:]), up_trim(q[:])
    while b:
        a, b = b, up_divmod(a, b)[1]
    return up_monic(a)


def up_derivative(p: UPoly) -> UPoly:
    return up_trim([p[i] * i for i in range(1, len(p))])


def up_eval(p: UPoly, x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(p):
        out = out * x + c
    return out


def _divisors(n: int) -> list[int]:
    _, fac = factor(n)
    out = [1]
    for prime, exp in fac.items():
        out = [d * prime**k for d in out for k in range(exp + 1)]
    return sorted(out)


def rational_roots(p: UPoly) -> list[Fraction]:
    """All distinct rational roots, exactly (rational root theorem)."""
    p = up_trim(p[:])
    if not p:
        raise ValueError("the zero polynomial has every root")
    roots = []
    if p[0] == 0:
        roots.append(Fraction(0))
        while p and p[0] == 0:
            p = p[1:]
    if up_deg(p) < 1:
        return roots
    from math import lcm

    den = lcm(*[c.denominator for c in p])
    ip = [int(c * den) for c in p]
    for num in _divisors(abs(ip[0])):
        for d in _divisors(abs(ip[-1])):
            for cand in (Fraction(num, d), Fraction(-num, d)):
                if cand not in roots and up_eval(p, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def is_rational_square(q: Fraction) -> Fraction | None:
    """The nonnegative square root of q, if q is a perfect rational square."""
    if q < 0:
        return None
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def up_factor(p: UPoly) -> tuple[Fraction, list[tuple[UPoly, int]]]:
    """Factor into content * prod(monic irreducible ^ multiplicity).

    Complete for degree <= 4 after rational roots are removed; higher
    irreducible remainders are not handled (never needed here).
    """
    p = up_trim(p[:])
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    content = p[-1]
    rest = up_monic(p)
    factors: dict[tuple[Fraction, ...], int] = {}

    def record(f: UPoly):
        key = tuple(f)
        factors[key] = factors.get(key, 0) + 1

    for root in rational_roots(rest):
        lin = up([-root, 1])
        while True:
            quot, rem = up_divmod(rest, lin)
            if rem:
                break
            rest = quot
            record(lin)
    d = up_deg(rest)
    if d == 0:
        pass
    elif d in (2, 3):
        # no rational roots remain: quadratics/cubics are irreducible
        record(rest)
    elif d == 4:
        split = _quartic_split(rest)
        if split is None:
            record(rest)
        else:
            record(split[0])
            record(split[1])
    else:
        raise NotImplementedError(f"irreducible remainder of degree {d}")
    return content, [(list(f), m) for f, m in sorted(factors.items())]


def _quartic_split(p: UPoly) -> tuple[UPoly, UPoly] | None:
    """Split a monic rootless quartic into two rational monic quadratics.

    Uses the resolvent cubic: y = v+z for p = (x^2+ux+v)(x^2+wx+z).
    Returns None when p is irreducible over Q.
    """
    e, d, c, b, _ = p
    resolvent = up(
        [-(b * b * e - 4 * c * e + d * d), b * d - 4 * e, -c, 1]
    )
    for y in rational_roots(resolvent):
        root = is_rational_square(b * b - 4 * (c - y))
        if root is None:
            continue
        for sqrt_disc in {root, -root}:
            u = (b + sqrt_disc) / 2
            w = b - u
            if u != w:
                z = (d - w * y) / (u - w)
                v = y - z
            else:
                half = is_rational_square(y * y - 4 * e)
                if half is None:
                    continue
                v, z = (y + half) / 2, (y - half) / 2
            if v * z == e and u * z + v * w == d:
                f1, f2 = up([v, u, 1]), up([z, w, 1])
                if up_mul(f1, f2) == p:
                    return (f1, f2) if tuple(f1) <= tuple(f2) else (f2, f1)
    return None


# ---------------------------------------------------------------------------
# Homogeneous binary forms
# ---------------------------------------------------------------------------


def bf_degree(form: list[Fraction]) -> int:
    return len(form) - 1


def bf_is_zero(form: list[Fraction]) -> bool:
    return all(c == 0 for c in form)


def bf_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def bf_valuations(form: list[Fraction]) -> tuple[int, int]:
    """(order of t, order of s) dividing the form; form must be nonzero."""
    t_val = next(i for i, c in enumerate(form) if c != 0)
    s_val = next(i for i, c in enumerate(reversed(form)) if c != 0)
    return t_val, s_val


def bf_to_upoly(form: list[Fraction]) -> UPoly:
    """Dehomogenize at t=1: polynomial in s, ascending coefficients."""
    return up_trim(list(reversed(form)))


def bf_from_upoly(p: UPoly, degree: int) -> list[Fraction]:
    if up_deg(p) > degree:
        raise ValueError("polynomial degree exceeds form degree")
    padded = p + [Fraction(0)] * (degree - len(p) + 1)
    return list(reversed(padded))


def bf_divide_exact(a: list[Fraction], b: list[Fraction]) -> list[Fraction] | None:
    """a / b when b divides a exactly as binary forms, else None."""
    if bf_is_zero(b):
        raise ZeroDivisionError
    if bf_is_zero(a):
        return [Fraction(0)] * (1 if len(a) >= len(b) else 0)
    at, as_ = bf_valuations(a)
    bt, bs = bf_valuations(b)
    if bt > at or bs > as_:
        return None
    a_core = a[at : len(a) - as_]
    b_core = b[bt : len(b) - bs]
    quot, rem = up_divmod(bf_to_upoly(a_core), bf_to_upoly(b_core))
    if rem:
        return None
    deg_q = (bf_degree(a) - as_ - at) - (bf_degree(b) - bs - bt)
    core = bf_from_upoly(quot, deg_q)
    # reattach the stripped powers of t and s
    return [Fraction(0)] * (at - bt) + core + [Fraction(0)] * (as_ - bs)


def bf_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic gcd of two nonzero binary forms."""
    at, as_ = bf_valuations(a)
    bt, bs = bf_valuations(b)
    g_core = up_gcd(
        bf_to_upoly(a[at : len(a) - as_]), bf_to_upoly(b[bt : len(b) - bs])
    )
    t_pow = min(at, bt)
    s_pow = min(as_, bs)
    core = bf_from_upoly(g_core, up_deg(g_core))
    return [Fraction(0)] * t_pow + core + [Fraction(0)] * s_pow


def bf_rational_proj_roots(form: list[Fraction]) -> list[tuple[int, int]]:
    """Rational projective roots [s0 : t0], as primitive integer pairs.

    The first nonzero coordinate is positive; (1, 0) is the root at
    infinity, present when the leading s-coefficient vanishes.
    """
    if bf_is_zero(form):
        raise ValueError("the zero form has every root")
    out = []
    if form[0] == 0:
        out.append((1, 0))
    for root in rational_roots(bf_to_upoly(form)):
        out.append((root.numerator, root.denominator))
    return out
