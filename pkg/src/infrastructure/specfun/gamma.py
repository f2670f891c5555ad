"""
Gamma Functions - Infrastructure Layer

Complex log-Gamma by the Lanczos approximation (g = 7, nine coefficients),
the reciprocal Gamma on the real line, and the digamma function. All entry
points accept scalars or numpy arrays.
"""

import math

import numpy as np

from src.domain.errors import GammaOverflow, PoleError

LANCZOS_G = 7.0
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
POLE_TOLERANCE = 1e-12

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)
_TWO_PI = 2.0 * math.pi

# B_{2k} / (2k) for the asymptotic digamma series
_DIGAMMA_ASYMPTOTIC = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)
_DIGAMMA_SHIFT = 10.0


def _as_complex(z):
    array = np.asarray(z, dtype=np.complex128)
    return np.atleast_1d(array), array.ndim == 0


def _reject_poles(z: np.ndarray) -> None:
    nearest = np.round(z.real)
    hit = (nearest <= 0) & (np.abs(z.real - nearest) < POLE_TOLERANCE) & (np.abs(z.imag) < POLE_TOLERANCE)
    if np.any(hit):
        bad = z[hit][0]
        raise PoleError(f"Gamma has a pole at {bad.real:g}", argument=complex(bad))


def _lanczos(z: np.ndarray) -> np.ndarray:
    """log Γ(z) for Re z ≥ 0.5."""
    zm = z - 1.0
    series = np.full_like(zm, LANCZOS_COEFFICIENTS[0])
    for k in range(1, len(LANCZOS_COEFFICIENTS)):
        series = series + LANCZOS_COEFFICIENTS[k] / (zm + k)
    t = zm + LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (zm + 0.5) * np.log(t) - t + np.log(series)


def _log_sin_pi(w: np.ndarray) -> np.ndarray:
    """Some branch of log sin(πw) for Im w ≥ 0, stable for large Im w."""
    out = np.empty_like(w)
    far = w.imag > 1.0
    if np.any(far):
        wf = w[far]
        out[far] = -1j * np.pi * wf + np.log1p(-np.exp(2j * np.pi * wf)) + np.log(0.5j)
    near = ~far
    if np.any(near):
        out[near] = np.log(np.sin(np.pi * w[near]))
    return out


def _reflected(w: np.ndarray) -> np.ndarray:
    """log Γ(w) for Re w < 0.5 and Im w ≥ 0 via Γ(w)Γ(1−w) = π/sin(πw)."""
    raw = _LOG_PI - _log_sin_pi(w) - _lanczos(1.0 - w)

    # Principal branch: lgΓ(w) = lgΓ(w+k) − Σ_{j<k} log(w+j), fixed up to 2πi multiples.
    shifts = np.ceil(0.5 - w.real)
    arg_sum = np.zeros(w.shape)
    for j in range(int(shifts.max())):
        active = shifts > j
        arg_sum[active] += np.angle(w[active] + j)
    reference = _lanczos(w + shifts).imag - arg_sum
    turns = np.round((reference - raw.imag) / _TWO_PI)
    return raw + 1j * _TWO_PI * turns


def log_gamma(z):
    """
    Principal branch of log Γ(z).

    Args:
        z: Complex scalar or array, not a non-positive integer

    Returns:
        complex for scalar input, complex ndarray otherwise

    Raises:
        PoleError: If z is within 1e-12 of a non-positive integer
        GammaOverflow: If the result is not finite
    """
    values, scalar = _as_complex(z)
    _reject_poles(values)

    lower = values.imag < 0.0
    w = np.where(lower, np.conj(values), values)
    out = np.empty_like(w)
    right = w.real >= 0.5
    if np.any(right):
        out[right] = _lanczos(w[right])
    if np.any(~right):
        out[~right] = _reflected(w[~right])
    out = np.where(lower, np.conj(out), out)

    if not np.all(np.isfinite(out)):
        bad = values[~np.isfinite(out)][0]
        raise GammaOverflow(f"log-Gamma is not finite at {bad}", argument=complex(bad))
    return complex(out[0]) if scalar else out


def gamma_ratio_sq(a: float, b: float, xi):
    """
    |Γ(a + iξ/2)|² / |Γ(b + iξ/2)|² evaluated as exp(2 Re[lgΓ(a+iξ/2) − lgΓ(b+iξ/2)]).

    Args:
        a: Real numerator shift
        b: Real denominator shift
        xi: Real scalar or array of frequencies

    Returns:
        float for scalar input, ndarray otherwise
    """
    xi_array = np.asarray(xi, dtype=float)
    half = 0.5j * np.atleast_1d(xi_array)
    exponent = 2.0 * (log_gamma(a + half) - log_gamma(b + half)).real
    ratio = np.exp(exponent)
    return float(ratio[0]) if xi_array.ndim == 0 else ratio


def log_abs_gamma(x):
    """log|Γ(x)| for real x."""
    values = np.asarray(x, dtype=float)
    result = log_gamma(values.astype(np.complex128)).real
    return float(result) if values.ndim == 0 else result


def rgamma(x):
    """Reciprocal Gamma 1/Γ(x) on the real line; exactly zero at the poles."""
    values = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty_like(values)
    positive = values >= 0.5
    if np.any(positive):
        out[positive] = np.exp(-_lanczos(values[positive].astype(np.complex128)).real)
    rest = ~positive
    if np.any(rest):
        left = values[rest]
        pole = (left == np.round(left)) & (left <= 0)
        reflected = np.sin(np.pi * left) / np.pi * np.exp(_lanczos((1.0 - left).astype(np.complex128)).real)
        out[rest] = np.where(pole, 0.0, reflected)
    return float(out[0]) if np.ndim(x) == 0 else out


def gamma_real(x):
    """Γ(x) for real x, raising PoleError at non-positive integers."""
    values = np.atleast_1d(np.asarray(x, dtype=float))
    _reject_poles(values.astype(np.complex128))
    result = 1.0 / np.asarray(rgamma(values))
    return float(result[0]) if np.ndim(x) == 0 else result


def digamma(z):
    """
    ψ(z) = Γ'(z)/Γ(z) for complex z.

    Uses reflection for Re z < 0.5, upward recurrence to Re z ≥ 10 and the
    asymptotic Bernoulli series there.
    """
    values, scalar = _as_complex(z)
    _reject_poles(values)

    left = values.real < 0.5
    w = np.where(left, 1.0 - values, values)
    correction = np.zeros_like(w)
    while True:
        low = w.real < _DIGAMMA_SHIFT
        if not np.any(low):
            break
        correction[low] -= 1.0 / w[low]
        w = np.where(low, w + 1.0, w)

    inv2 = 1.0 / (w * w)
    tail = np.zeros_like(w)
    for coefficient in reversed(_DIGAMMA_ASYMPTOTIC):
        tail = inv2 * (coefficient + tail)
    psi = np.log(w) - 0.5 / w - tail + correction
    if np.any(left):
        psi[left] = psi[left] - np.pi / np.tan(np.pi * values[left])
    return complex(psi[0]) if scalar else psi
