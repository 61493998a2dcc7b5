"""Series arithmetic in the truncated tensor algebra.

Everything here terminates structurally: each bracket with a fixed element
raises word length by at least one, and words longer than the truncation N
vanish, so every series is a finite sum.  No tolerances exist anywhere.

Provided operations: Bernoulli numbers (first kind, B1 = -1/2), the BCH
product log(exp x . exp y) on degree-0 elements, exponentials of adjoint
derivations, the Bernoulli operator ad_x/(e^{ad_x}-1) and its series inverse
(e^{ad_x}-1)/ad_x, the gauge action of degree-0 elements on Maurer-Cartan
elements, the MC equation checker, and differential twisting d + ad_a.
"""

from fractions import Fraction
from math import comb

from .lie import (
    ConfigError, DomainError,
    Elt, FreeDGL, bracket, concat_terms, dynkin_verify,
)

ZERO = Fraction(0)
ONE = Fraction(1)


def bernoulli_numbers(n):
    """B_0..B_n, first kind: B_1 = -1/2, from the pascal-row recurrence."""
    out = [ONE]
    for m in range(1, n + 1):
        acc = ZERO
        for j in range(m):
            acc += comb(m + 1, j) * out[j]
        out.append(-acc / (m + 1))
    return out


_BERNOULLI_CACHE = []


def bernoulli(n):
    global _BERNOULLI_CACHE
    if n >= len(_BERNOULLI_CACHE):
        _BERNOULLI_CACHE = bernoulli_numbers(max(n, 2 * len(_BERNOULLI_CACHE) + 4))
    return _BERNOULLI_CACHE[n]


def _require_degree(x, d, what):
    if not x.has_degree(d):
        raise DomainError("%s must have degree %d" % (what, d))


# ---------------------------------------------------------------------------
# exp/log with the unit word; internal helpers over word->coeff dicts


def _exp_terms(terms, N):
    out = {(): ONE}
    power = {(): ONE}
    for k in range(1, N + 1):
        power = concat_terms(power, terms, N, scale=Fraction(1, k))
        if not power:
            break
        for w, c in power.items():
            acc = out.get(w, ZERO) + c
            if acc == 0:
                out.pop(w, None)
            else:
                out[w] = acc
    return out


def _log_terms(terms, N):
    u = dict(terms)
    unit = u.pop((), ZERO)
    if unit != 1:
        raise DomainError("log requires a grouplike input with unit part 1")
    out = {}
    power = {(): ONE}
    for k in range(1, N + 1):
        power = concat_terms(power, u, N)
        if not power:
            break
        sign = Fraction((-1) ** (k + 1), k)
        for w, c in power.items():
            acc = out.get(w, ZERO) + sign * c
            if acc == 0:
                out.pop(w, None)
            else:
                out[w] = acc
    return out


def bch(*xs):
    """log(exp(x1) ... exp(xk)) for degree-0 elements, all at one truncation.

    The result is checked to be a Lie element (left-to-right bracketing test)
    before being returned; a failure would mean corrupted arithmetic.
    """
    if not xs:
        raise DomainError("bch needs at least one argument")
    first = xs[0]
    for x in xs[1:]:
        if (x.gens is not first.gens and x.gens != first.gens) or x.N != first.N:
            raise ConfigError("bch arguments must share generators and truncation")
    for x in xs:
        _require_degree(x, 0, "bch argument")
    N = first.N
    prod = {(): ONE}
    for x in xs:
        prod = concat_terms(prod, _exp_terms(x.terms, N), N)
    out = Elt(first.gens, N, _log_terms(prod, N))
    ok, defects = dynkin_verify(out)
    if not ok:
        raise RuntimeError(
            "bch produced a non-Lie element at lengths %s" % [n for n, _ in defects])
    return out


def ad_series(x, v, coeff_of_n):
    """Sum over n >= 0 of coeff_of_n(n) * ad_x^n(v), truncated."""
    total = v * coeff_of_n(0)
    cur = v
    n = 0
    while not cur.is_zero() and n <= x.N:
        n += 1
        cur = bracket(x, cur)
        c = coeff_of_n(n)
        if c:
            total = total + cur * c
    return total


def exp_ad(x, v):
    """e^{ad_x}(v) for |x| = 0."""
    _require_degree(x, 0, "exp_ad conjugator")
    fact = [ONE]
    for k in range(1, x.N + 2):
        fact.append(fact[-1] * k)
    return ad_series(x, v, lambda n: Fraction(1, fact[n]))


def bernoulli_op(x, v):
    """(ad_x / (e^{ad_x} - 1))(v) = sum of (B_n/n!) ad_x^n(v), |x| = 0."""
    _require_degree(x, 0, "bernoulli_op conjugator")
    fact = [ONE]
    for k in range(1, x.N + 2):
        fact.append(fact[-1] * k)
    return ad_series(x, v, lambda n: bernoulli(n) / fact[n])


def bernoulli_op_inverse(x, v):
    """((e^{ad_x} - 1) / ad_x)(v): the series inverse of bernoulli_op."""
    _require_degree(x, 0, "bernoulli_op_inverse conjugator")
    fact = [ONE]
    for k in range(1, x.N + 3):
        fact.append(fact[-1] * k)
    return ad_series(x, v, lambda n: Fraction(1, fact[n + 1]))


def is_mc(L, a):
    """Truth of da + (1/2)[a,a] = 0 mod words longer than N; |a| = -1."""
    if not a.has_degree(-1):
        raise DomainError("Maurer-Cartan candidates must have degree -1")
    r = L.d(a) + Fraction(1, 2) * bracket(a, a)
    return r.is_zero()


def mc_residue(L, a):
    return L.d(a) + Fraction(1, 2) * bracket(a, a)


def gauge(x, a, L):
    """Action of a degree-0 element x on an MC element a:

        x . a = e^{ad_x}(a) - ((e^{ad_x} - 1)/ad_x)(dx)

    The result is again MC; failures of the input MC check are domain errors.
    """
    _require_degree(x, 0, "gauge parameter")
    if not is_mc(L, a):
        raise DomainError("gauge target fails the Maurer-Cartan check")
    return exp_ad(x, a) - bernoulli_op_inverse(x, L.d(x))


def twist(L, a):
    """The DGL with the same generators and differential g -> dg + [a, g]."""
    if not is_mc(L, a):
        raise DomainError("twisting requires a Maurer-Cartan element")
    images = {}
    for i in range(len(L.gens)):
        g = Elt(L.gens, L.N, {(i,): ONE})
        img = L.d(g) + bracket(a, g)
        if not img.is_zero():
            images[i] = img
    return FreeDGL(L.gens, L.N, images)
