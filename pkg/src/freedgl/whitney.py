"""Polynomial differential forms on the n-simplex and the Whitney transfer.

Forms live in the free graded-commutative algebra on t_0..t_n, dt_0..dt_n
modulo sum(t_i) = 1 and sum(dt_i) = 0; the canonical representation
eliminates t_0 and dt_0, so a monomial is an exponent vector over t_1..t_n
together with an ascending tuple of dt indices.  Everything is exact over
Fraction: the elementary form of a face, exterior derivative, wedge, the
inclusion of simplicial cochains, and the fiberwise integration back, whose
monomial formula is a_1!...a_k!/(a_1+...+a_k+k)! on top-degree terms.
"""

from fractions import Fraction
from itertools import combinations
from math import factorial

from .lie import DomainError

ONE = Fraction(1)


class PolyForm:
    """A polynomial differential form on the n-simplex, canonicalized.

    terms maps (exponents over t_1..t_n, ascending dt index tuple) to a
    nonzero scalar.  Mixed form degrees are allowed in one PolyForm.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for (exps, dts), c in terms.items():
                if c:
                    self.terms[(tuple(exps), tuple(dts))] = Fraction(c)

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({len(dts) for _, dts in self.terms})

    def degree_part(self, k):
        return PolyForm(self.n, {key: c for key, c in self.terms.items()
                                 if len(key[1]) == k})

    def __eq__(self, other):
        return (isinstance(other, PolyForm) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        raise TypeError("PolyForm is unhashable")

    def __add__(self, other):
        if self.n != other.n:
            raise DomainError("forms on different simplices")
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc = out.get(key, 0) + c
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return PolyForm(self.n, out)

    def __neg__(self):
        return PolyForm(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return PolyForm(self.n, {k: c * s for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (exps, dts), c in sorted(self.terms.items()):
            parts = [] if c == 1 and (any(exps) or dts) else [str(c)]
            for i, e in enumerate(exps, start=1):
                if e == 1:
                    parts.append("t%d" % i)
                elif e > 1:
                    parts.append("t%d^%d" % (i, e))
            parts.extend("dt%d" % i for i in dts)
            bits.append(" ".join(parts) if parts else str(c))
        return " + ".join(bits)


def zero_form(n):
    return PolyForm(n, {})


def one_form(n):
    return PolyForm(n, {((0,) * n, ()): ONE})


def t_var(i, n):
    """The barycentric coordinate t_i as a canonical form."""
    if not 0 <= i <= n:
        raise DomainError("coordinate index %d out of range" % i)
    if i == 0:
        terms = {((0,) * n, ()): ONE}
        for j in range(1, n + 1):
            e = [0] * n
            e[j - 1] = 1
            terms[(tuple(e), ())] = -ONE
        return PolyForm(n, terms)
    e = [0] * n
    e[i - 1] = 1
    return PolyForm(n, {(tuple(e), ()): ONE})


def dt_var(i, n):
    """The coordinate differential dt_i as a canonical form."""
    if not 0 <= i <= n:
        raise DomainError("coordinate index %d out of range" % i)
    if i == 0:
        return PolyForm(n, {((0,) * n, (j,)): -ONE
                            for j in range(1, n + 1)})
    return PolyForm(n, {((0,) * n, (i,)): ONE})


def _merge_dts(a, b):
    """Sorted union of two disjoint ascending tuples with the Koszul sign,
    or (None, 0) when they overlap."""
    if set(a) & set(b):
        return None, 0
    sign = 1
    for x in a:
        for y in b:
            if x > y:
                sign = -sign
    return tuple(sorted(a + b)), sign


def wedge(u, v):
    if u.n != v.n:
        raise DomainError("forms on different simplices")
    out = {}
    for (e1, s1), c1 in u.terms.items():
        for (e2, s2), c2 in v.terms.items():
            dts, sign = _merge_dts(s1, s2)
            if dts is None:
                continue
            exps = tuple(a + b for a, b in zip(e1, e2))
            key = (exps, dts)
            acc = out.get(key, 0) + sign * c1 * c2
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return PolyForm(u.n, out)


def exterior_d(u):
    out = PolyForm(u.n, {})
    for (exps, dts), c in u.terms.items():
        for i in range(1, u.n + 1):
            e = exps[i - 1]
            if not e or i in dts:
                continue
            smaller = sum(1 for s in dts if s < i)
            ne = list(exps)
            ne[i - 1] -= 1
            term = PolyForm(u.n, {
                (tuple(ne), tuple(sorted(dts + (i,)))):
                c * e * (-1) ** smaller})
            out = out + term
    return out


def _check_face(face, n):
    face = tuple(face)
    if not face:
        raise DomainError("empty face")
    if list(face) != sorted(set(face)):
        raise DomainError("face indices must be strictly increasing")
    if face[0] < 0 or face[-1] > n:
        raise DomainError("face %r out of range for n=%d" % (face, n))
    return face


def elementary_form(face, n):
    """The Whitney form of a face: k! sum_j (-1)^j t_{i_j} dt_{i_0} ... with
    the j-th differential omitted."""
    face = _check_face(face, n)
    k = len(face) - 1
    out = zero_form(n)
    for j, ij in enumerate(face):
        term = t_var(ij, n)
        for m, im in enumerate(face):
            if m != j:
                term = wedge(term, dt_var(im, n))
        out = out + Fraction((-1) ** j) * term
    return Fraction(factorial(k)) * out


def restrict(u, face):
    """Restriction of a form to a face: coordinates off the face are set to
    zero and the face's own barycentric relation re-eliminates its lowest
    coordinate.  The result uses the ambient variable indexing."""
    face = _check_face(face, u.n)
    inside = set(face)
    out = {}
    for (exps, dts), c in u.terms.items():
        if any(e and (i not in inside) for i, e in enumerate(exps, start=1)):
            continue
        if any(s not in inside for s in dts):
            continue
        key = (exps, dts)
        acc = out.get(key, 0) + c
        if acc:
            out[key] = acc
        else:
            out.pop(key, None)
    kept = PolyForm(u.n, out)
    if 0 in inside:
        return kept
    f0 = face[0]
    others = [i for i in face if i != f0]
    tsub = one_form(u.n)
    for i in others:
        tsub = tsub - t_var(i, u.n)
    dsub = zero_form(u.n)
    for i in others:
        dsub = dsub - dt_var(i, u.n)
    result = zero_form(u.n)
    for (exps, dts), c in kept.terms.items():
        piece = PolyForm(u.n, {((0,) * u.n, ()): c})
        for i, e in enumerate(exps, start=1):
            if not e:
                continue
            base = tsub if i == f0 else t_var(i, u.n)
            for _ in range(e):
                piece = wedge(piece, base)
        for s in dts:
            piece = wedge(piece, dsub if s == f0 else dt_var(s, u.n))
        result = result + piece
    return result


def face_integral(u, face):
    """Exact integral of (the top-degree part of) a form over a face, by the
    monomial formula on the face's free coordinates."""
    face = _check_face(face, u.n)
    k = len(face) - 1
    r = restrict(u, face)
    free = tuple(i for i in face if i != face[0])
    total = Fraction(0)
    for (exps, dts), c in r.terms.items():
        if dts != free:
            continue
        num = 1
        s = 0
        for i in free:
            a = exps[i - 1]
            num *= factorial(a)
            s += a
        total += c * Fraction(num, factorial(s + k))
    return total


# ---------------------------------------------------------------------------
# Cochains and the transfer maps


class Cochain:
    """A simplicial cochain on the n-simplex: faces to scalars."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for face, c in terms.items():
                face = _check_face(face, n)
                if c:
                    self.terms[face] = Fraction(c)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        raise TypeError("Cochain is unhashable")

    def __add__(self, other):
        out = dict(self.terms)
        for face, c in other.terms.items():
            acc = out.get(face, 0) + c
            if acc:
                out[face] = acc
            else:
                out.pop(face, None)
        return Cochain(self.n, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return Cochain(self.n, {f: c * s for f, c in self.terms.items()})

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join("%s*a%s" % (c, "".join(map(str, f)))
                          for f, c in sorted(self.terms.items(),
                                             key=lambda x: (len(x[0]), x[0])))


def cochain_d(c):
    """Simplicial coboundary, dual to the face maps: the image of a face
    basis element collects every one-higher face with the sign of sorting
    the new vertex into place."""
    out = {}
    for face, coeff in c.terms.items():
        for q in range(c.n + 1):
            if q in face:
                continue
            bigger = tuple(sorted(face + (q,)))
            pos = bigger.index(q)
            acc = out.get(bigger, 0) + coeff * (-1) ** pos
            if acc:
                out[bigger] = acc
            else:
                out.pop(bigger, None)
    return Cochain(c.n, out)


def whitney_i(c, n=None):
    """The inclusion of cochains into forms: faces to elementary forms."""
    if n is None:
        n = c.n
    out = zero_form(n)
    for face, coeff in c.terms.items():
        out = out + coeff * elementary_form(face, n)
    return out


def integrate_p(u, n=None):
    """The projection of forms onto cochains: each face records the exact
    integral of the restriction."""
    if n is None:
        n = u.n
    terms = {}
    for k in range(n + 1):
        for face in combinations(range(n + 1), k + 1):
            val = face_integral(u, face)
            if val:
                terms[face] = val
    return Cochain(n, terms)
