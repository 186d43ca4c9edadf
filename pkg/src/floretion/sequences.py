"""Coefficient streams of element powers and exact linear-recurrence
detection.

Tracking one basis word's coefficient through X, X**2, X**3, ... yields an
exact rational sequence.  Because the order-n algebra is finite dimensional,
such streams satisfy linear recurrences with constant coefficients; in
order two the bound is degree four.  `find_recurrence` recovers the minimal
one up to a requested order by solving the shifted linear systems in exact
arithmetic at increasing order -- float fitting would misreport minimality,
so none is used.

Two small order-two constructions are packaged because their streams hit
classical sequences: one whose tracked coefficients obey the Fibonacci
rule (halved), and one that follows the Padovan rule a(m+3) = a(m+1) + a(m).

Streams index from m = 1: values[i] is the coefficient in X**(i+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Sequence

from .algebra import Element
from .words import parse_word


def coeff_stream(x: Element, word: str, m_max: int) -> list[Fraction]:
    """Coefficients of `word` in x**1 .. x**m_max, exactly."""
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    w = parse_word(word, x.order)
    out = []
    acc = x
    for m in range(1, m_max + 1):
        if m > 1:
            acc = acc * x
        out.append(acc.terms.get(w, Fraction(0)))
    return out


@dataclass(frozen=True)
class Recurrence:
    """a(m) = coeffs[0]*a(m-1) + ... + coeffs[k-1]*a(m-k), exact."""

    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def holds_on(self, seq: Sequence[Fraction]) -> bool:
        """True when every term after the first `order` follows the rule."""
        k = self.order
        return all(
            seq[m] == sum(c * seq[m - 1 - i] for i, c in enumerate(self.coeffs))
            for m in range(k, len(seq))
        )

    def extend(self, seed: Sequence[Fraction], count: int) -> list[Fraction]:
        """Continue a sequence by `count` further terms from its tail."""
        if len(seed) < self.order:
            raise ValueError(f"need at least {self.order} seed terms, got {len(seed)}")
        out = [Fraction(v) for v in seed]
        for _ in range(count):
            out.append(sum(c * out[-1 - i] for i, c in enumerate(self.coeffs)))
        return out[len(seed):]

    def __str__(self) -> str:
        body = " + ".join(f"{c}*a(m-{i + 1})" for i, c in enumerate(self.coeffs))
        return f"a(m) = {body}"


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """One exact solution of rows @ x = rhs, or None when inconsistent.

    Gauss-Jordan over Fractions; free variables are set to zero.  The
    caller re-verifies nothing: an inconsistent (overdetermined) system
    returns None, which is what recurrence search needs.
    """
    ncols = len(rows[0])
    m = [list(r) + [v] for r, v in zip(rows, rhs)]
    pivot_cols = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [v / inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(m):
            break
    if any(m[i][-1] != 0 for i in range(r, len(m))):
        return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivot_cols):
        sol[c] = m[i][-1]
    return sol


def find_recurrence(seq: Sequence[Fraction], max_order: int) -> Recurrence | None:
    """Minimal exact linear recurrence of order <= max_order, or None.

    Tries each order k = 1, 2, ... and solves the full shifted system
    a(m) = sum c_i a(m-i) over every available m > k, so a returned
    recurrence holds on all supplied terms and no smaller order fits.
    Requires at least 2*max_order + 2 terms so the largest system stays
    meaningfully overdetermined.  None is a result, not an error: the
    sequence simply has no short recurrence.
    """
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    need = 2 * max_order + 2
    if len(seq) < need:
        raise ValueError(f"need at least {need} terms for max_order {max_order}, got {len(seq)}")
    seq = [Fraction(v) for v in seq]
    for k in range(1, max_order + 1):
        rows = [seq[m - k : m][::-1] for m in range(k, len(seq))]
        rhs = seq[k:]
        sol = _solve_exact(rows, rhs)
        if sol is not None:
            return Recurrence(tuple(sol))
    return None


# -- packaged order-two constructions -------------------------------------------


def fibonacci_elements(
    a: Fraction | int | str = -1,
    b: Fraction | int | str = 1,
    c: Fraction | int | str = -1,
) -> tuple[Element, Element, Element]:
    """(mixer, seed, product) of the order-two Fibonacci-style construction.

    The mixer averages eight basis words with weight 1/4; the seed puts the
    three parameters on ei, ej, ek.  Their product Z satisfies
    Z**3 + a*Z**2 + b*c*Z = 0, so every tracked coefficient stream obeys
    a(m) = -a*a(m-1) - b*c*a(m-2).  The defaults (-1, 1, -1) make that the
    Fibonacci rule; the ij stream is then half the Fibonacci numbers.
    """
    quarter = Fraction(1, 4)
    mixer = Element(
        2,
        {"17": quarter, "71": quarter, "11": quarter, "22": quarter,
         "44": quarter, "24": quarter, "42": quarter, "77": quarter},
    )
    seed = Element(2, {"71": Fraction(a), "72": Fraction(b), "74": Fraction(c)})
    return mixer, seed, mixer * seed


def padovan_elements() -> tuple[Element, Element, Element]:
    """(mixer, seed, product) of the order-two Padovan construction.

    The product Y satisfies Y**4 = Y**2 + Y, so tracked streams follow
    a(m+3) = a(m+1) + a(m); four times the ik stream is the Padovan
    sequence 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, ...
    """
    quarter = Fraction(1, 4)
    half = Fraction(1, 2)
    mixer = Element(2, {"77": 3 * quarter, "11": quarter, "22": quarter, "44": -quarter})
    seed = Element(
        2,
        {"17": half, "12": half, "14": half, "27": -half, "21": half, "42": half},
    )
    return mixer, seed, mixer * seed


# -- b-file output ---------------------------------------------------------------


def write_b_file(out: IO[str], values: Iterable[Fraction], offset: int = 1) -> None:
    """Write "index value" lines; values must all be integers.

    Rational streams are rejected with a pointer to the numerator and
    denominator export the CLI offers instead.
    """
    for i, v in enumerate(values):
        q = Fraction(v)
        if q.denominator != 1:
            raise ValueError(
                f"term {offset + i} is {q}, not an integer; "
                "export numerators and denominators separately instead"
            )
        out.write(f"{offset + i} {q.numerator}\n")
