"""Exact rational scalars used throughout the package.

Every algebraic identity is certified over the rationals, so the scalar
type must be exact.  ``gmpy2.mpq`` is used when available (roughly an
order of magnitude faster); otherwise the stdlib ``fractions.Fraction``
is a drop-in replacement.  The two types hash and compare identically
and print the same "p/q" form, so reports are byte-identical under
either backend.
"""

import random

try:
    from gmpy2 import mpq as Rat

    RAT_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - depends on environment
    from fractions import Fraction as Rat

    RAT_BACKEND = "fractions"

ZERO = Rat(0)
ONE = Rat(1)
HALF = Rat(1, 2)


def rat(num, den=1):
    """Exact rational num/den."""
    return Rat(num, den)


def rat_str(q) -> str:
    """Canonical "p/q" (or "p" for integers) rendering."""
    q = Rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str):
    """Parse "p/q", "p" or a decimal literal into an exact rational."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            value = Rat(int(num), int(den))
        elif "." in text or "e" in text or "E" in text:
            from fractions import Fraction

            value = Rat(Fraction(text))
        else:
            value = Rat(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc
    return value


def rising(q, m: int):
    """Rising factorial q(q+1)...(q+m-1); exact, m >= 0."""
    out = ONE
    for t in range(m):
        out *= q + t
    return out


# Random rational elements: small numerators and denominators keep exact
# arithmetic fast while still exercising all identities generically.
_NUM_RANGE = (-9, 9)
_DENOMS = (1, 2, 3)


def rand_rat(rng: random.Random):
    """Random rational with numerator in [-9, 9], denominator in {1,2,3}."""
    return Rat(rng.randint(*_NUM_RANGE), rng.choice(_DENOMS))


def rand_vec(rng: random.Random, n: int):
    return tuple(rand_rat(rng) for _ in range(n))
