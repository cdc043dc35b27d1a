"""The named q-analog scalar families used by the expansion coefficients.

Everything here is a pure function of small integer indices returning
canonical values from :mod:`qexpand.exactarith`.  Results are memoized
because the same indices recur constantly during verification; the caches
are an observationally pure detail.
"""

from __future__ import annotations

from functools import lru_cache

from .exactarith import IntPolynomial, ONE, RF_ONE, RationalFunction

_ONE_MINUS_Q = IntPolynomial((1, -1))


def _check_base(power: int) -> None:
    if power not in (1, 2):
        raise ValueError("base power must be 1 or 2")


@lru_cache(maxsize=None)
def q_int(n: int, power: int = 1) -> IntPolynomial:
    """The q-integer [n] in base q**power: 1 + q^p + ... + q^((n-1)p); 0 for n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_base(power)
    coeffs = [0] * ((n - 1) * power + 1) if n else []
    for k in range(n):
        coeffs[k * power] = 1
    return IntPolynomial(tuple(coeffs))


@lru_cache(maxsize=None)
def q_factorial(n: int, power: int = 1) -> IntPolynomial:
    """The q-factorial [n]! = [n][n-1]...[1] in base q**power; [0]! = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_base(power)
    if n == 0:
        return ONE
    return q_int(n, power) * q_factorial(n - 1, power)


@lru_cache(maxsize=None)
def even_product(beta: int) -> IntPolynomial:
    """The product [2][4]...[2*beta] of even q-integers; 1 for beta = 0."""
    if beta < 0:
        raise ValueError("beta must be >= 0")
    if beta == 0:
        return ONE
    return even_product(beta - 1) * q_int(2 * beta)


@lru_cache(maxsize=None)
def xi() -> RationalFunction:
    """The structure constant -(1+q)^2/(q - 1/q), cleared to (q+q^2)/(1-q)."""
    return RationalFunction(IntPolynomial((0, 1, 1)), _ONE_MINUS_Q)


@lru_cache(maxsize=None)
def theta_a(alpha: int, beta: int, gamma: int) -> RationalFunction:
    """Coefficient of b^alpha c^beta a^gamma in the system-A expansion.

    Equal to [n]! / ([alpha]! [gamma]! [2][4]...[2*beta]) with
    n = alpha + 2*beta + gamma.
    """
    if min(alpha, beta, gamma) < 0:
        raise ValueError("indices must be >= 0")
    n = alpha + 2 * beta + gamma
    return RationalFunction(
        q_factorial(n), q_factorial(alpha) * q_factorial(gamma) * even_product(beta)
    )


@lru_cache(maxsize=None)
def theta_b(alpha: int, beta: int, gamma: int) -> RationalFunction:
    """Coefficient of c^alpha b^beta a^gamma in the system-B expansion.

    Equal to [n]'! phi_beta / ([alpha]'! [beta]'! [gamma]'!) where [.]' is
    the base-q^2 analog and n = alpha + beta + gamma.
    """
    if min(alpha, beta, gamma) < 0:
        raise ValueError("indices must be >= 0")
    n = alpha + beta + gamma
    quotient = RationalFunction(
        q_factorial(n, 2),
        q_factorial(alpha, 2) * q_factorial(beta, 2) * q_factorial(gamma, 2),
    )
    return quotient * phi_closed(beta)


@lru_cache(maxsize=None)
def phi_recursive(beta: int) -> RationalFunction:
    """phi_beta from the three-term recursion.

    phi_0 = phi_1 = 1 and phi_b = phi_(b-1) + xi * [b-1]' * phi_(b-2)
    with [.]' the base-q^2 q-integer.  Kept as an independent route so the
    closed form can be cross-checked against it.
    """
    if beta < 0:
        raise ValueError("beta must be >= 0")
    if beta <= 1:
        return RF_ONE
    return phi_recursive(beta - 1) + xi() * RationalFunction(
        q_int(beta - 1, 2)
    ) * phi_recursive(beta - 2)


@lru_cache(maxsize=None)
def psi(i: int) -> RationalFunction:
    """The alternating product ([4]/[2]) [3] ([8]/[4]) [5] ... [2i-1] ([4i]/[2i]).

    Each quotient [4k]/[2k] reduces to the polynomial 1 + q^(2k), so the
    canonical result is a polynomial.
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    acc = RF_ONE
    for k in range(1, i + 1):
        acc = acc * RationalFunction(q_int(4 * k), q_int(2 * k))
        if k >= 2:
            acc = acc * RationalFunction(q_int(2 * k - 1))
    return acc


@lru_cache(maxsize=None)
def phi_closed(beta: int) -> RationalFunction:
    """phi_beta in closed form: (1-q)^(-i) psi(i) for beta = 2i, and
    [2i+1] * phi_(2i) for beta = 2i+1; phi_0 = phi_1 = 1."""
    if beta < 0:
        raise ValueError("beta must be >= 0")
    if beta <= 1:
        return RF_ONE
    if beta % 2 == 0:
        i = beta // 2
        return psi(i) / RationalFunction(_ONE_MINUS_Q**i)
    return RationalFunction(q_int(beta)) * phi_closed(beta - 1)
