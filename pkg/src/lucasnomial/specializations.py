"""Distinguished evaluations of the lucasnomials, with an independent oracle.

Evaluation always happens on the fully computed polynomial, never on integer
factorial quotients: at points like (1, -1) individual sequence values hit
zero, which would make a specialize-then-divide scheme ill-defined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coefficients import via_recursion_fib
from .errors import DomainError
from .poly import UnivariatePolynomial


@dataclass(frozen=True)
class SpecializationPreset:
    """A named substitution: integers for s and t, or polynomials in q."""

    name: str
    s_sub: int | UnivariatePolynomial
    t_sub: int | UnivariatePolynomial

    @property
    def is_integer_point(self) -> bool:
        return isinstance(self.s_sub, int)


FIBONOMIAL = SpecializationPreset("fibonomial", 1, 1)

QBINOMIAL = SpecializationPreset(
    "qbinomial",
    UnivariatePolynomial((1, 1)),  # q + 1
    UnivariatePolynomial((0, -1)),  # -q
)


def lnomial(ell: int) -> SpecializationPreset:
    return SpecializationPreset("lnomial", ell, -1)


def specialize(n: int, k: int, preset: SpecializationPreset):
    """Coefficient (n, k) at the preset point: an int, or a polynomial in q."""
    if not 0 <= k <= n:
        raise DomainError(f"specialize needs 0 <= k <= n, got ({n}, {k})")
    poly = via_recursion_fib(n, k)
    if preset.is_integer_point:
        return poly.eval_int(preset.s_sub, preset.t_sub)
    return poly.subst_univar(preset.s_sub, preset.t_sub)


def gaussian_binomial_oracle(n: int, k: int) -> UnivariatePolynomial:
    """Gaussian binomial by the q-integer product formula.

    Independent of the Lucas machinery; each step divides exactly because
    every partial product is itself a Gaussian binomial.
    """
    if not 0 <= k <= n:
        raise DomainError(f"Gaussian binomial needs 0 <= k <= n, got ({n}, {k})")
    result = UnivariatePolynomial.one()
    for i in range(1, k + 1):
        numerator = UnivariatePolynomial.monomial(n - k + i) - 1
        denominator = UnivariatePolynomial.monomial(i) - 1
        result = (result * numerator).exact_div(denominator)
    return result
