import random
from fractions import Fraction

from rittkit import QQ, Poly


def random_poly(rng, degree, field=QQ, den_max=3, num_max=5):
    """Random polynomial of exactly the given degree with small coefficients."""
    while True:
        coeffs = [Fraction(rng.randint(-num_max, num_max),
                           rng.randint(1, den_max))
                  for _ in range(degree + 1)]
        if coeffs[-1]:
            return Poly.make(field, coeffs)


def rng_for(name):
    return random.Random(name)
