"""Text forms for permutations and pattern classes.

Canonical form is the compact digit string ("31524") for lengths up to 9 and
the space-separated one-line form ("3 1 5 2 4 ...") beyond that; both are
accepted on input.  Classes are comma-separated lists of permutations.
Round-trips are exact.
"""
from __future__ import annotations

from .classes import PatternClass
from .permutations import Permutation, is_permutation


class ParseError(ValueError):
    """Malformed permutation or class text; the message names the bad token."""


def format_permutation(p: Permutation) -> str:
    """Canonical text for a permutation; the empty permutation prints as ''."""
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return " ".join(str(v) for v in p)


def parse_permutation(text: str) -> Permutation:
    """Parse compact-digit or space-separated one-line notation.

    >>> parse_permutation("31524")
    (3, 1, 5, 2, 4)
    >>> parse_permutation("3 1 5 2 4")
    (3, 1, 5, 2, 4)
    """
    stripped = text.strip()
    if not stripped:
        return ()
    if any(ch.isspace() for ch in stripped):
        tokens = stripped.split()
    else:
        tokens = list(stripped)
    values = []
    for token in tokens:
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(f"not a number: {token!r} in {text!r}") from None
    seen = set()
    for v in values:
        if v in seen:
            raise ParseError(f"duplicate value: {v!r} in {text!r}")
        seen.add(v)
    if not is_permutation(values):
        bad = next(v for v in values if not 1 <= v <= len(values))
        raise ParseError(f"value out of range 1..{len(values)}: "
                         f"{bad!r} in {text!r}")
    return tuple(values)


def format_class(c: PatternClass) -> str:
    """Comma-separated canonical forms of the basis, shortest first."""
    return ",".join(format_permutation(b)
                    for b in sorted(c.basis, key=lambda b: (len(b), b)))


def parse_class(text: str) -> PatternClass:
    """Parse a comma-separated basis list into a (normalized) pattern class.

    >>> sorted(parse_class("3142,4132").basis)
    [(3, 1, 4, 2), (4, 1, 3, 2)]
    """
    if not text.strip():
        raise ParseError("empty class text")
    return PatternClass([parse_permutation(part) for part in text.split(",")])
