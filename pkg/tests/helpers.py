"""Shared generators for randomized (seeded) test loops."""

from fractions import Fraction

from floretion.algebra import Element
from floretion.symmetry import apply_perm_element, axis_reflection
from floretion.words import DIGITS


def random_fraction(rng, lo=-4, hi=4, denominators=(1, 2, 3, 4)) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(denominators))


def random_word(rng, n: int) -> str:
    return "".join(rng.choice(DIGITS) for _ in range(n))


def random_element(rng, n: int, max_terms: int = 6) -> Element:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_word(rng, n)] = random_fraction(rng)
    return Element(n, terms)


def random_axis_symmetric(rng, n: int, axis: str, max_terms: int = 5) -> Element:
    """A nonzero element fixed by the reflection about `axis`."""
    tau = axis_reflection(axis)
    while True:
        x = random_element(rng, n, max_terms)
        sym = x + apply_perm_element(tau, x)
        if not sym.is_zero():
            return sym
