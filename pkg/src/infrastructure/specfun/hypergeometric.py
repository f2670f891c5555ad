"""
Gauss Hypergeometric Function - Infrastructure Layer

Real ₂F₁(a, b; c; x) on 0 ≤ x < 1: the Gauss series for x ≤ 1/2 and the
x → 1−x connection formulas otherwise, including the logarithmic cases where
c − a − b is an integer. Within INTEGER_GAP of an integer the generic formula
loses digits to cancellation, so the value is interpolated in c between the
exact integer case and generic evaluations a few gaps away.
"""

import math

from scipy.interpolate import barycentric_interpolate

from src.domain.errors import NonConvergence, ParameterPole
from src.infrastructure.specfun.gamma import digamma, gamma_real, rgamma


SERIES_BUDGET = 5000
SERIES_EPS = 1e-17
INTEGER_GAP = 1e-3
GAP_NODES = (-2.0, -1.0, 1.0, 2.0)


def _is_nonpositive_integer(value: float) -> bool:
    return value <= 0 and abs(value - round(value)) < 1e-12


def _psi(x: float) -> float:
    return digamma(x).real


def _gauss_series(a: float, b: float, c: float, x: float) -> float:
    total = 1.0
    term = 1.0
    quiet = 0
    for k in range(SERIES_BUDGET):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x
        total += term
        if term == 0.0:
            return total
        if abs(term) <= SERIES_EPS * abs(total):
            quiet += 1
            if quiet == 2:
                return total
        else:
            quiet = 0
    raise NonConvergence(
        f"2F1 series did not converge in {SERIES_BUDGET} terms", a=a, b=b, c=c, x=x
    )


def _non_integer_connection(a: float, b: float, c: float, y: float, s: float) -> float:
    """F(a,b;c;1−y) for c−a−b = s not an integer."""
    first = gamma_real(c) * gamma_real(s) * rgamma(c - a) * rgamma(c - b)
    second = gamma_real(c) * gamma_real(-s) * rgamma(a) * rgamma(b)
    value = 0.0
    if first != 0.0:
        value += first * _gauss_series(a, b, 1.0 - s, y)
    if second != 0.0:
        value += second * y**s * _gauss_series(c - a, c - b, 1.0 + s, y)
    return value


def _logarithmic_series(
    p: float, q: float, m: int, y: float, psi_p: float, psi_q: float
) -> float:
    """
    Σ_k (p)_k (q)_k / (k! (k+m)!) y^k [ln y − ψ(k+1) − ψ(k+m+1) + ψ(p+k) + ψ(q+k)].
    """
    log_y = math.log(y)
    psi_one = _psi(1.0)
    psi_m = _psi(m + 1.0)
    coefficient = 1.0 / math.factorial(m)
    total = 0.0
    quiet = 0
    for k in range(SERIES_BUDGET):
        term = coefficient * (log_y - psi_one - psi_m + psi_p + psi_q)
        total += term
        if abs(term) <= SERIES_EPS * max(abs(total), 1e-300):
            quiet += 1
            if quiet == 2:
                return total
        else:
            quiet = 0
        coefficient *= (p + k) * (q + k) / ((k + 1) * (k + m + 1)) * y
        if coefficient == 0.0:
            return total
        psi_one += 1.0 / (k + 1)
        psi_m += 1.0 / (k + m + 1)
        psi_p += 1.0 / (p + k)
        psi_q += 1.0 / (q + k)
    raise NonConvergence(f"2F1 logarithmic series did not converge in {SERIES_BUDGET} terms", m=m, y=y)


def _integer_connection(a: float, b: float, c: float, y: float, m: int) -> float:
    """F(a,b;c;1−y) for c = a + b + m with integer m."""
    if m >= 0:
        finite = 0.0
        if m > 0:
            prefactor = gamma_real(m) * gamma_real(a + b + m) * rgamma(a + m) * rgamma(b + m)
            term = 1.0
            for k in range(m):
                finite += term
                if k < m - 1:
                    term *= (a + k) * (b + k) / ((k + 1) * (1 - m + k)) * y
            finite *= prefactor
        scale = gamma_real(a + b + m) * rgamma(a) * rgamma(b)
        if scale == 0.0:
            return finite
        series = _logarithmic_series(a + m, b + m, m, y, _psi(a + m), _psi(b + m))
        return finite - (-1) ** m * scale * y**m * series

    m = -m
    prefactor = gamma_real(m) * gamma_real(a + b - m) * rgamma(a) * rgamma(b)
    finite = 0.0
    term = 1.0
    for k in range(m):
        finite += term
        if k < m - 1:
            term *= (a - m + k) * (b - m + k) / ((k + 1) * (1 - m + k)) * y
    finite *= prefactor * y ** (-m)
    scale = gamma_real(a + b - m) * rgamma(a - m) * rgamma(b - m)
    if scale == 0.0:
        return finite
    series = _logarithmic_series(a, b, m, y, _psi(a), _psi(b))
    return finite - (-1) ** m * scale * series


def _near_integer_connection(a: float, b: float, y: float, m: int, offset: float) -> float:
    """F(a,b;a+b+m+offset;1−y) for 0 < |offset| < INTEGER_GAP, interpolated in the offset."""
    nodes = [0.0] + [node * INTEGER_GAP for node in GAP_NODES]
    values = [_integer_connection(a, b, a + b + m, y, m)]
    values += [_non_integer_connection(a, b, a + b + m + h, y, m + h) for h in nodes[1:]]
    return float(barycentric_interpolate(nodes, values, offset))


def hyp2f1_complement(a: float, b: float, c: float, y: float) -> float:
    """
    ₂F₁(a, b; c; 1 − y) for 0 < y ≤ 1, taking the distance to x = 1 directly.

    Callers that know 1 − x more accurately than x (kernels in e^{−2|s|})
    use this entry point to avoid cancellation near the singular endpoint.
    """
    if _is_nonpositive_integer(c):
        raise ParameterPole(f"2F1 lower parameter c={c} is a non-positive integer", c=c)
    if not 0.0 < y <= 1.0:
        raise ValueError(f"complement argument must lie in (0, 1], got {y}")
    x = 1.0 - y
    if x <= 0.5:
        return _gauss_series(a, b, c, x)

    s = c - a - b
    m = round(s)
    offset = s - m
    if offset == 0.0:
        return _integer_connection(a, b, c, y, int(m))
    if abs(offset) < INTEGER_GAP:
        return _near_integer_connection(a, b, y, int(m), offset)
    return _non_integer_connection(a, b, c, y, s)


def hyp2f1(a: float, b: float, c: float, x: float) -> float:
    """
    Gauss hypergeometric function for real parameters and 0 ≤ x < 1.

    Args:
        a: Upper parameter
        b: Upper parameter
        c: Lower parameter, not a non-positive integer
        x: Argument in [0, 1)

    Returns:
        The real value of ₂F₁(a, b; c; x)

    Raises:
        ParameterPole: If c is a non-positive integer
        NonConvergence: If a series misses its tolerance within the budget
    """
    if _is_nonpositive_integer(c):
        raise ParameterPole(f"2F1 lower parameter c={c} is a non-positive integer", c=c)
    if not 0.0 <= x < 1.0:
        raise ValueError(f"2F1 is implemented for 0 <= x < 1, got {x}")
    if x == 0.0:
        return 1.0
    if x <= 0.5:
        return _gauss_series(a, b, c, x)
    return hyp2f1_complement(a, b, c, 1.0 - x)
