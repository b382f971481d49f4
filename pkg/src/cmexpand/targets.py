"""Parsing of expansion targets: exact rationals and pi-derived reals.

Grammar:  target := RATIONAL | RATIONAL "*" "pi" | "pi" | "1/pi"
          RATIONAL := INT | INT "/" INT
The parsed value must lie in [0, 1]; "pi" alone therefore always fails the
range check, while "1/pi" and in-range multiples like "1/4*pi" are accepted.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RangeError, TargetSyntaxError
from .realnum import Comparison, PrecisionReal, inv_pi, pi_multiple, real_compare


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_spaces(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_int(self) -> int:
        self.skip_spaces()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        if not self.peek().isdigit():
            raise TargetSyntaxError("expected an integer", self.pos)
        while self.peek().isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])

    def take_literal(self, literal: str) -> bool:
        self.skip_spaces()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect_end(self):
        self.skip_spaces()
        if self.pos != len(self.text):
            raise TargetSyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)


def parse_target(text: str, max_bits: int = 256) -> Fraction | PrecisionReal:
    """Parse a target expression and range-check it against [0, 1]."""
    scanner = _Scanner(text)
    scanner.skip_spaces()
    if scanner.take_literal("pi"):
        scanner.expect_end()
        raise RangeError("pi itself lies outside [0, 1]")

    numerator = scanner.take_int()
    value = Fraction(numerator)
    if scanner.take_literal("/"):
        if scanner.take_literal("pi"):
            scanner.expect_end()
            if numerator != 1:
                raise TargetSyntaxError("only 1/pi is supported", 0)
            return inv_pi()
        denominator = scanner.take_int()
        if denominator == 0:
            raise TargetSyntaxError("zero denominator", scanner.pos - 1)
        value = Fraction(numerator, denominator)
    if scanner.take_literal("*"):
        if not scanner.take_literal("pi"):
            raise TargetSyntaxError("expected 'pi' after '*'", scanner.pos)
        scanner.expect_end()
        return _checked_pi_multiple(value, max_bits)
    scanner.expect_end()
    if not 0 <= value <= 1:
        raise RangeError(f"{value} lies outside [0, 1]")
    return value


def _checked_pi_multiple(coefficient: Fraction, max_bits: int):
    if coefficient < 0:
        raise RangeError(f"{coefficient}*pi lies outside [0, 1]")
    if coefficient == 0:
        return Fraction(0)
    target = pi_multiple(coefficient)
    if real_compare(target, 1, max_bits) is not Comparison.LESS:
        raise RangeError(f"{coefficient}*pi lies outside [0, 1]")
    return target
