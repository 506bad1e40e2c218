"""Scalar special functions used by the jamming-probability formulas.

Only real arguments are supported. ``gauss_2f1`` is restricted to the
non-positive real axis, which is all the closed forms ever need.
"""

import math

import scipy.special

EPS = 1e-16
MAX_TERMS = 10_000
_CF_TINY = 1e-300
_COND_LIMIT = 1e4
_COND_FAIL = 1e6


class ConvergenceError(ArithmeticError):
    """A series or continued fraction failed to converge."""


def ln_gamma(x):
    """Natural log of the gamma function for x > 0."""
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"ln_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


def _gamma_prefactor(s, x):
    # x^s e^-x / Gamma(s), in log space to avoid overflow for large s
    return math.exp(s * math.log(x) - x - math.lgamma(s))


def _lower_series(s, x):
    # P(s, x) = x^s e^-x / Gamma(s+1) * sum_k x^k / ((s+1)...(s+k))
    term = 1.0 / s
    total = term
    ap = s
    for _ in range(MAX_TERMS):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * EPS:
            return total * _gamma_prefactor(s, x)
    raise ConvergenceError(f"incomplete gamma series did not converge (s={s}, x={x})")


def _upper_contfrac(s, x):
    # modified Lentz evaluation of the Legendre continued fraction for Q(s, x)
    b = x + 1.0 - s
    c = 1.0 / _CF_TINY
    d = 1.0 / b
    h = d
    for i in range(1, MAX_TERMS):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = b + an / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < EPS:
            return h * _gamma_prefactor(s, x)
    raise ConvergenceError(
        f"incomplete gamma continued fraction did not converge (s={s}, x={x})"
    )


def _check_gamma_args(s, x):
    s, x = float(s), float(x)
    if not s > 0.0:
        raise ValueError(f"incomplete gamma requires s > 0, got s={s!r}")
    if not x >= 0.0:
        raise ValueError(f"incomplete gamma requires x >= 0, got x={x!r}")
    return s, x


def reg_lower_gamma(s, x):
    """Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s)."""
    s, x = _check_gamma_args(s, x)
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return 1.0
    if x < s + 1.0:
        return min(1.0, _lower_series(s, x))
    return max(0.0, 1.0 - _upper_contfrac(s, x))


def reg_upper_gamma(s, x):
    """Regularized upper incomplete gamma Q(s, x) = Gamma(s, x) / Gamma(s).

    Uses the power series for ``x < s + 1`` and a continued fraction
    otherwise.
    """
    s, x = _check_gamma_args(s, x)
    if x == 0.0:
        return 1.0
    if math.isinf(x):
        return 0.0
    if x < s + 1.0:
        return max(0.0, 1.0 - _lower_series(s, x))
    return min(1.0, _upper_contfrac(s, x))


def _is_nonpositive_int(v):
    return v <= 0.0 and v == math.floor(v)


def _is_int(v):
    return v == math.floor(v)


def _series_2f1_cond(a, b, c, z):
    """Maclaurin series of 2F1 for |z| < 1, with a cancellation estimate.

    Returns ``(value, cond)`` where ``cond`` is sum|terms| / |value|.
    """
    term = 1.0
    total = 1.0
    abs_total = 1.0
    # bound on the tail of a geometric-like series
    tail = 1.0 / (1.0 - abs(z)) if abs(z) < 1.0 else math.inf
    for n in range(MAX_TERMS):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total += term
        abs_total += abs(term)
        if term == 0.0 or (n > 2 and abs(term) * tail <= EPS * abs(total)):
            return total, abs_total / max(abs(total), 1e-300)
    raise ConvergenceError(
        f"2F1 series did not converge in {MAX_TERMS} terms "
        f"(a={a}, b={b}, c={c}, z={z})"
    )


def _series_2f1(a, b, c, z):
    return _series_2f1_cond(a, b, c, z)[0]


def _terminating_2f1(n_terms, a, b, c, z):
    term = 1.0
    total = 1.0
    for n in range(n_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total += term
    return total


def _signed_lgamma(v):
    if _is_nonpositive_int(v):
        return -math.inf, 0.0
    lg = math.lgamma(v)
    if v > 0.0:
        return lg, 1.0
    return lg, (-1.0) ** (math.floor(-v) + 1)


def _pole_sensitivity(v):
    # rounding in v is amplified by |v| / dist(v, pole) near a non-positive integer
    if v > 0.5:
        return 1.0
    dist = abs(v - round(v))
    return max(1.0, abs(v) / dist) if dist > 0.0 else math.inf


def _inversion_2f1(a, b, c, z):
    """z -> 1/z connection formula, valid when b - a is not an integer.

    Returns ``(value, cond)`` like ``_series_2f1_cond``.
    """
    w = 1.0 / z
    lc, sc = _signed_lgamma(c)
    total = 0.0
    abs_total = 0.0
    for p, q in ((a, b), (b, a)):
        lq_p, s1 = _signed_lgamma(q - p)
        lq, s2 = _signed_lgamma(q)
        lc_p, s3 = _signed_lgamma(c - p)
        if s3 == 0.0:
            continue  # 1/Gamma(c - p) vanishes
        coef = sc * s1 * s2 * s3 * math.exp(lc + lq_p - lq - lc_p - p * math.log(-z))
        value, cond = _series_2f1_cond(p, p - c + 1.0, p - q + 1.0, w)
        total += coef * value
        abs_total += abs(coef * value) * cond * _pole_sensitivity(q - p) * _pole_sensitivity(c - p)
    return total, abs_total / max(abs(total), 1e-300)


def _inversion_2f1_integer(a, m, c, z):
    """1/z connection formula for 2F1(a, a+m; c; z), m a non-negative integer.

    This is the logarithmic limit of the generic formula, needed because
    Gamma(b - a) has a pole there. Returns ``(value, cond)``.
    """
    w = -1.0 / z  # in (0, 1)
    log_w = math.log(w)
    lead = math.exp(math.lgamma(c) + a * log_w)
    rg = scipy.special.rgamma
    psi = scipy.special.digamma

    head = 0.0
    abs_head = 0.0
    if m > 0:
        poch = 1.0
        for k in range(m):
            t = (poch * math.factorial(m - k - 1) / math.factorial(k)
                 * float(rg(c - a - k)) * (-w) ** k)
            head += t
            abs_head += abs(t)
            poch *= a + k
        scale = float(rg(a + m))
        head *= scale
        abs_head *= abs(scale)

    total = 0.0
    abs_total = 0.0
    # |(a+m)_k / (k! (k+m)!) w^(k+m)| in log space; the sign is (-1)^m for all k
    sign = (-1.0) ** m
    log_coef = m * log_w - math.lgamma(m + 1.0)
    for k in range(MAX_TERMS):
        v = c - a - k - m
        s_k = -log_w + float(psi(1 + m + k)) + float(psi(1 + k)) - float(psi(a + m + k))
        if v >= 0.5:
            term = math.exp(log_coef) * float(rg(v)) * (s_k - float(psi(v)))
        else:
            # reflection: 1/Gamma(v) = Gamma(1-v) sin(pi v) / pi, finite at poles
            bracket = (math.sin(math.pi * v) / math.pi * (s_k - float(psi(1.0 - v)))
                       + math.cos(math.pi * v))
            term = math.exp(log_coef + math.lgamma(1.0 - v)) * bracket
        term *= sign
        total += term
        abs_total += abs(term)
        if k > 2 and abs(term) <= EPS * abs(total) * (1.0 - w):
            break
        log_coef += math.log((a + m + k) * w / ((k + 1.0) * (k + 1.0 + m)))
    else:
        raise ConvergenceError(f"2F1 log-case series did not converge (a={a}, m={m}, c={c}, z={z})")
    scale = float(rg(a))
    value = lead * (head + total * scale)
    spread = lead * (abs_head + abs_total * abs(scale))
    return value, spread / max(abs(value), 1e-300)


def gauss_2f1(a, b, c, z):
    """Gauss hypergeometric function 2F1(a, b; c; z) for real z <= 0.

    The defining series is used for z >= -1/2. Below that the Pfaff
    transformation z -> z/(z-1) maps the argument into (1/3, 2/3], and
    for z < -2 the 1/z connection formula takes over (with its
    logarithmic form when b - a is an integer). A Pfaff variant that
    terminates is always preferred, and if the chosen route cancels badly
    the other one is tried.

    Raises ConvergenceError when no route can deliver about nine
    significant digits, which happens when c is small next to a and b.
    """
    a, b, c, z = float(a), float(b), float(c), float(z)
    if not c > 0.0:
        raise ValueError(f"gauss_2f1 requires c > 0, got c={c!r}")
    if not z <= 0.0:
        raise ValueError(f"gauss_2f1 supports only z <= 0, got z={z!r}")
    if z == 0.0 or a == 0.0 or b == 0.0:
        return 1.0
    if math.isinf(z):
        raise ValueError("gauss_2f1 requires finite z")

    for p in (a, b):
        if _is_nonpositive_int(p):
            return _terminating_2f1(int(-p), a, b, c, z)

    x = z / (z - 1.0)
    log1mz = math.log1p(-z)
    if _is_nonpositive_int(c - b):
        return math.exp(-a * log1mz) * _terminating_2f1(int(b - c), a, c - b, c, x)
    if _is_nonpositive_int(c - a):
        return math.exp(-b * log1mz) * _terminating_2f1(int(a - c), c - a, b, c, x)

    m = round(b - a)
    if abs(b - a - m) <= 64 * EPS * max(1.0, abs(a), abs(b)):
        # b - a integer up to rounding
        def inversion(a, b, c, z):
            return _inversion_2f1_integer(min(a, b), abs(m), c, z)
    else:
        inversion = _inversion_2f1

    # every route is exact in exact arithmetic; take the first that does not
    # cancel badly, else the least bad one
    if z >= -0.5:
        routes = (_series_2f1_cond, _pfaff_route)
    elif z >= -1.0:
        routes = (_pfaff_route,)
    elif z >= -2.0:
        routes = (_pfaff_route, inversion)
    else:
        routes = (inversion, _pfaff_route)
    best = None
    for route in routes:
        try:
            value, cond = route(a, b, c, z)
        except ConvergenceError:
            continue
        if cond < _COND_LIMIT:
            return value
        if best is None or cond < best[1]:
            best = (value, cond)
    if best is None:
        raise ConvergenceError(f"2F1({a}, {b}; {c}; {z}): no evaluation route converged")
    if best[1] > _COND_FAIL:
        raise ConvergenceError(
            f"2F1({a}, {b}; {c}; {z}): every route loses ~{math.log10(best[1]):.0f} "
            "digits to cancellation (c is small relative to a and b)"
        )
    return best[0]


def _pfaff_route(a, b, c, z):
    value, cond = _series_2f1_cond(a, c - b, c, z / (z - 1.0))
    return math.exp(-a * math.log1p(-z)) * value, cond


def bessel_j1(x):
    """Bessel function of the first kind, order one."""
    return float(scipy.special.j1(float(x)))
