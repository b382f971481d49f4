"""Exact verification of the Catalan, convolution, and D'Ocagne identities.

Both sequence families satisfy the same three identities, with every sign
and power of (s r) flipping under r -> -r.  The Catalan identity is checked
in its squared form, which is the one that actually holds; the unsquared
variant circulates in print and is provided only so tests can pin down that
it fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidIndices
from .sequences import GEN_J, GEN_J_LIKE, gen_j, gen_j_like

CATALAN = "catalan"
CONVOLUTION = "convolution"
DOCAGNE = "docagne"
IDENTITIES = (CATALAN, CONVOLUTION, DOCAGNE)


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    family: str
    r: int
    s: int
    n: int
    m: int
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _family_term(family: str):
    if family == GEN_J:
        return lambda r, s, n: gen_j(r, s, n)
    if family == GEN_J_LIKE:
        return lambda r, s, n: gen_j_like(r, s, n)
    raise ValueError(f"unknown family {family!r}")


def catalan_sides(family: str, r: int, s: int, n: int, m: int, squared: bool = True):
    """Both sides of the Catalan identity; squared=False gives the broken variant."""
    seq = _family_term(family)
    base = Fraction(s * r) if family == GEN_J_LIKE else Fraction(-s * r)
    power = 2 if squared else 1
    lhs = seq(r, s, n - m) * seq(r, s, n + m) - seq(r, s, n) ** power
    rhs = -(base ** (n - m)) * seq(r, s, m) ** power
    return lhs, rhs


def _convolution_sides(family: str, r: int, s: int, n: int, m: int):
    seq = _family_term(family)
    lhs = seq(r, s, n + m)
    cross = s * r * seq(r, s, n) * seq(r, s, m - 1)
    if family == GEN_J_LIKE:
        rhs = seq(r, s, n + 1) * seq(r, s, m) - cross
    else:
        rhs = seq(r, s, n + 1) * seq(r, s, m) + cross
    return lhs, rhs


def _docagne_sides(family: str, r: int, s: int, n: int, m: int):
    seq = _family_term(family)
    lhs = seq(r, s, n) * seq(r, s, m + 1) - seq(r, s, n + 1) * seq(r, s, m)
    rhs = Fraction(s * r) ** m * seq(r, s, n - m)
    if family == GEN_J:
        rhs *= (-1) ** m
    return lhs, rhs


def _check_indices(identity: str, n: int, m: int):
    if identity in (CATALAN, DOCAGNE):
        if not n > m >= 0:
            raise InvalidIndices(f"{identity} needs n > m >= 0, got n={n}, m={m}")
    elif identity == CONVOLUTION:
        if n < 0 or m < 1:
            raise InvalidIndices(f"{identity} needs n >= 0 and m >= 1, got n={n}, m={m}")
    else:
        raise ValueError(f"unknown identity {identity!r}")


def identity_check(identity: str, family: str, r: int, s: int, n: int, m: int) -> IdentityReport:
    """Evaluate both sides of one identity exactly and report them."""
    if not s > r >= 1:
        raise ValueError(f"need s > r >= 1, got r={r}, s={s}")
    _check_indices(identity, n, m)
    if identity == CATALAN:
        lhs, rhs = catalan_sides(family, r, s, n, m)
    elif identity == CONVOLUTION:
        lhs, rhs = _convolution_sides(family, r, s, n, m)
    else:
        lhs, rhs = _docagne_sides(family, r, s, n, m)
    return IdentityReport(identity, family, r, s, n, m, lhs, rhs)


@dataclass(frozen=True)
class SweepSummary:
    family: str
    checked: int
    skipped: int
    failures: tuple[IdentityReport, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def identity_sweep(family: str, r_max: int, s_max: int, n_max: int) -> SweepSummary:
    """Check all three identities over 1 <= r < s <= s_max (r <= r_max), indices up to n_max."""
    if min(r_max, s_max, n_max) < 1:
        raise ValueError("sweep bounds must be at least 1")
    checked = skipped = 0
    failures = []
    for r in range(1, r_max + 1):
        for s in range(r + 1, s_max + 1):
            for n in range(n_max + 1):
                for m in range(n_max + 1):
                    for identity in IDENTITIES:
                        try:
                            _check_indices(identity, n, m)
                        except InvalidIndices:
                            skipped += 1
                            continue
                        report = identity_check(identity, family, r, s, n, m)
                        checked += 1
                        if not report.holds:
                            failures.append(report)
    return SweepSummary(family, checked, skipped, tuple(failures))
