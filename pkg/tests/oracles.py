"""Independent oracles used by the test suite.

Nothing here imports the package under test.  Dimension counts come from the
graded Witt recursion; simplicial homology comes from a plain dense boundary
matrix elimination over Fraction.
"""

from fractions import Fraction
from math import factorial, gcd
from functools import lru_cache
from itertools import combinations


# ---------------------------------------------------------------------------
# Graded Witt dimension counts
#
# For a multidegree beta (occurrence counts per generator) over generators of
# degrees d_i, write |beta| = sum(beta) and parity(beta) = sum(beta_i d_i)
# mod 2.  The number l(beta) of basis elements of the free graded Lie algebra
# in multidegree beta satisfies
#
#   sum over d | gcd(beta) of  eps(beta/d, d)/d * l(beta/d)
#       = (|beta| - 1)! / prod(beta_i!)
#
# where eps(alpha, d) = 1 when parity(alpha) is even, else +1 for odd d and
# -1 for even d.  Solving top-down gives l; the slice dimension for a fixed
# (degree, word length) sums l over the matching multidegrees.


def _necklace_rhs(beta):
    n = sum(beta)
    denom = 1
    for b in beta:
        denom *= factorial(b)
    return Fraction(factorial(n - 1), denom)


def _witt_l(beta, degrees, cache):
    if beta in cache:
        return cache[beta]
    g = 0
    for b in beta:
        g = gcd(g, b)
    total = _necklace_rhs(beta)
    for d in range(2, g + 1):
        if g % d:
            continue
        alpha = tuple(b // d for b in beta)
        parity = sum(a * deg for a, deg in zip(alpha, degrees)) % 2
        eps = 1 if parity == 0 else (1 if d % 2 else -1)
        total -= Fraction(eps, d) * _witt_l(alpha, degrees, cache)
    cache[beta] = total
    return total


def _multidegrees(m, k):
    """All tuples of m nonnegative ints summing to k."""
    if m == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in _multidegrees(m - 1, k - first):
            yield (first,) + rest


def free_lie_slice_dim(degrees, degree, length):
    """Dimension of the (degree, word length) slice of the free graded Lie
    algebra on generators of the given degrees."""
    cache = {}
    total = Fraction(0)
    for beta in _multidegrees(len(degrees), length):
        if sum(b * d for b, d in zip(beta, degrees)) != degree:
            continue
        total += _witt_l(beta, tuple(degrees), cache)
    if total.denominator != 1 or total < 0:
        raise AssertionError("Witt recursion gave a non-integer: %s" % total)
    return int(total)


# ---------------------------------------------------------------------------
# Simplicial homology over Q from a list of maximal faces


def close_faces(maximal):
    """All nonempty faces of the complex generated by the maximal faces."""
    faces = set()
    for f in maximal:
        f = tuple(sorted(set(f)))
        for r in range(1, len(f) + 1):
            faces.update(combinations(f, r))
    return sorted(faces, key=lambda f: (len(f), f))

def dense_rank(rows, ncols):
    """Rank of a list-of-dict-rows matrix over Fraction."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    for col in range(ncols):
        piv = None
        for i, r in enumerate(rows):
            if r.get(col):
                piv = i
                break
        if piv is None:
            continue
        prow = rows.pop(piv)
        pval = prow[col]
        rank += 1
        reduced = []
        for r in rows:
            v = r.get(col)
            if v:
                factor = v / pval
                for c, pc in prow.items():
                    acc = r.get(c, Fraction(0)) - factor * pc
                    if acc == 0:
                        r.pop(c, None)
                    else:
                        r[c] = acc
            if r:
                reduced.append(r)
        rows = reduced
    return rank


def simplicial_betti(maximal):
    """Unreduced rational Betti numbers, as a dict dim -> rank."""
    faces = close_faces(maximal)
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    index = {}
    for dim, fl in by_dim.items():
        for i, f in enumerate(sorted(fl)):
            index[f] = i
    top = max(by_dim)
    ranks = {}
    for q in range(1, top + 1):
        rows = []
        for f in sorted(by_dim.get(q, [])):
            row = {}
            for j in range(len(f)):
                sub = f[:j] + f[j + 1:]
                row[index[sub]] = Fraction((-1) ** j)
            rows.append(row)
        ranks[q] = dense_rank(rows, len(by_dim.get(q - 1, [])))
    betti = {}
    for q in range(0, top + 1):
        betti[q] = len(by_dim.get(q, [])) - ranks.get(q, 0) - ranks.get(q + 1, 0)
    return betti
