"""The sequence families generated by signed r/s expansions.

Two closed forms carry everything here:

* ``gen_j(r, s, n)``       = (s**n - (-r)**n) / (s + r)
* ``gen_j_like(r, s, n)``  = (s**n - r**n) / (s - r)

Both are evaluated exactly for any integer n (negative indices give
rationals), over the integers, the rationals, or a quadratic surd field.
Classical Jacobsthal numbers are gen_j(1, 2, n); Fibonacci and Pell arise
from gen_j_like with golden- and silver-ratio surd parameters.  Recurrence
and generating-function routes are provided separately so the three can be
checked against each other.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from .errors import BranchUndefined, DegenerateParams
from .numerics import QuadraticSurd, finite_complex

FORWARD = "forward"
BACKWARD = "backward"

GEN_J = "gen-j"
GEN_J_LIKE = "gen-jlike"


def _lift(*values):
    """Coerce mixed rational/surd inputs into a common ring."""
    if any(isinstance(v, QuadraticSurd) for v in values):
        return tuple(v if isinstance(v, QuadraticSurd) else QuadraticSurd(v) for v in values)
    return tuple(Fraction(v) for v in values)


def _settle(value):
    """Drop a surd wrapper once the value is rational."""
    if isinstance(value, QuadraticSurd) and value.is_rational:
        return value.to_rational()
    return value


def _check_int_params(r, s):
    if not (isinstance(r, int) and isinstance(s, int)):
        raise TypeError("r and s must be integers")
    if not s > r >= 1:
        raise ValueError(f"need s > r >= 1, got r={r}, s={s}")


def jacobsthal(n: int) -> Fraction:
    """Classical Jacobsthal number (2**n - (-1)**n) / 3, any integer n."""
    return gen_j(1, 2, n)


def gen_j(r: int, s: int, n: int) -> Fraction:
    """(s**n - (-r)**n) / (s + r) for integers s > r >= 1 and any integer n."""
    _check_int_params(r, s)
    return (Fraction(s) ** n - Fraction(-r) ** n) / (s + r)


def gen_j_like(r, s, n: int):
    """(s**n - r**n) / (s - r) for distinct rational or surd r, s, any integer n.

    Returns a Fraction whenever the value is rational (always, for rational
    parameters; also for conjugate surd pairs such as the Fibonacci and Pell
    parameterizations).
    """
    r, s = _lift(r, s)
    if r == s:
        raise DegenerateParams("r and s must differ")
    return _settle((s ** n - r ** n) / (s - r))


def generalized_jacobsthal(s: int, n: int) -> Fraction:
    """(s**n - (-1)**n) / (s + 1): the r = 1 slice of gen_j, s >= 2."""
    if s < 2:
        raise ValueError("s must be at least 2")
    return gen_j(1, s, n)


def _unroll(seed0, seed1, c1, c2, count: int) -> list:
    values = [seed0, seed1]
    while len(values) < count:
        values.append(c1 * values[-1] + c2 * values[-2])
    return [_settle(v) for v in values[:count]]


def gen_j_recurrence(r: int, s: int, count: int, direction: str = FORWARD) -> list[Fraction]:
    """gen_j values by recurrence unrolling.

    Forward: seeds 0, 1 and J_n = (s-r) J_{n-1} + r s J_{n-2}, giving indices
    0..count-1.  Backward: seeds 0, 1/(rs) and the inverted recurrence
    J_{-n} = -((s-r)/(rs)) J_{-(n-1)} + (1/(rs)) J_{-(n-2)}, giving indices
    0, -1, .., -(count-1).
    """
    _check_int_params(r, s)
    if count < 0:
        raise ValueError("count must be nonnegative")
    if direction == FORWARD:
        values = _unroll(Fraction(0), Fraction(1), Fraction(s - r), Fraction(r * s), max(count, 2))
    elif direction == BACKWARD:
        rs = Fraction(r * s)
        values = _unroll(Fraction(0), 1 / rs, -Fraction(s - r) / rs, 1 / rs, max(count, 2))
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return values[:count]


def gen_j_like_recurrence(r, s, count: int, direction: str = FORWARD) -> list:
    """gen_j_like values by recurrence unrolling; r, s may be surds.

    Forward: seeds 0, 1 and Jt_n = (s+r) Jt_{n-1} - r s Jt_{n-2}.  Backward:
    seeds 0, -1/(rs) and Jt_{-n} = ((s+r)/(rs)) Jt_{-(n-1)} - (1/(rs)) Jt_{-(n-2)}.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    r, s = _lift(r, s)
    if r == s:
        raise DegenerateParams("r and s must differ")
    one = r - r + 1  # unit of the common ring
    if direction == FORWARD:
        values = _unroll(one * 0, one, s + r, -(r * s), max(count, 2))
    elif direction == BACKWARD:
        inv_rs = one / (r * s)
        values = _unroll(one * 0, -inv_rs, (s + r) * inv_rs, -inv_rs, max(count, 2))
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return values[:count]


def lucas_u(p, q, n: int):
    """First-kind Lucas value U_n(P, Q): U_0 = 0, U_1 = 1, U_n = P U_{n-1} - Q U_{n-2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p, q = _lift(p, q)
    prev, cur = p * 0, p * 0 + 1
    if n == 0:
        return _settle(prev)
    for _ in range(n - 1):
        prev, cur = cur, p * cur - q * prev
    return _settle(cur)


def _series_quotient(numerator: list[Fraction], denominator: list[Fraction], count: int) -> list[Fraction]:
    """Taylor coefficients of numerator/denominator about z = 0."""
    coeffs: list[Fraction] = []
    for n in range(count):
        acc = numerator[n] if n < len(numerator) else Fraction(0)
        for k in range(1, min(n, len(denominator) - 1) + 1):
            acc -= denominator[k] * coeffs[n - k]
        coeffs.append(acc / denominator[0])
    return coeffs


def gf_coefficients(kind: str, r: int, s: int, count: int) -> list[Fraction]:
    """Coefficients of the family's generating function.

    gen-j:     z / (1 - (s-r) z - r s z**2)
    gen-jlike: z / (1 - (s+r) z + r s z**2)
    """
    _check_int_params(r, s)
    if count < 0:
        raise ValueError("count must be nonnegative")
    if kind == GEN_J:
        denominator = [Fraction(1), Fraction(-(s - r)), Fraction(-r * s)]
    elif kind == GEN_J_LIKE:
        denominator = [Fraction(1), Fraction(-(s + r)), Fraction(r * s)]
    else:
        raise ValueError(f"unknown family {kind!r}")
    return _series_quotient([Fraction(0), Fraction(1)], denominator, count)


def a_number(a, b, s, t, n: int):
    """(a s**n + (-1)**n b t**n) / (s + t), n >= 0.

    Exact Fraction for rational parameters; complex otherwise.  Subsumes
    gen_j (a=1, b=-1, t=r) and gen_j_like (a=1, b=-1, t=-r).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if any(isinstance(v, complex) for v in (a, b, s, t)):
        a, b, s, t = (finite_complex(v) for v in (a, b, s, t))
        if s + t == 0:
            raise DegenerateParams("s + t must be nonzero")
        return (a * s ** n + (-1) ** n * b * t ** n) / (s + t)
    a, b, s, t = (Fraction(v) for v in (a, b, s, t))
    if s + t == 0:
        raise DegenerateParams("s + t must be nonzero")
    return (a * s ** n + (-1) ** n * b * t ** n) / (s + t)


def _principal_pow(base: complex, exponent: complex) -> complex:
    """Principal-branch power; zero base only for nonnegative integer exponents."""
    if base == 0:
        if exponent.imag == 0 and exponent.real == int(exponent.real) and exponent.real >= 0:
            return complex(1) if exponent.real == 0 else complex(0)
        raise BranchUndefined(f"0 ** {exponent} has no principal value")
    return base ** exponent


def j_continuous(mu, nu, lam) -> complex:
    """(nu**lam - mu**lam) / (nu - mu) over the complex plane (principal branch)."""
    mu, nu, lam = finite_complex(mu), finite_complex(nu), finite_complex(lam)
    if nu == mu:
        raise DegenerateParams("mu and nu must differ")
    return (_principal_pow(nu, lam) - _principal_pow(mu, lam)) / (nu - mu)


def a_continuous(a, b, nu, gamma, lam) -> complex:
    """(a nu**lam + (-1)**lam b gamma**lam) / (nu + gamma), with (-1)**lam = exp(i pi lam)."""
    a, b, nu, gamma, lam = (finite_complex(v) for v in (a, b, nu, gamma, lam))
    if nu + gamma == 0:
        raise DegenerateParams("nu + gamma must be nonzero")
    alternating = cmath.exp(1j * cmath.pi * lam)
    return (a * _principal_pow(nu, lam) + alternating * b * _principal_pow(gamma, lam)) / (nu + gamma)
