"""Exact graded Lie algebra arithmetic over Q.

Elements of a free graded Lie algebra on named generators are stored by their
image in the tensor algebra: a dict mapping words (tuples of generator
indices) to Fraction coefficients.  The bracket is

    [x, y] = x.y - (-1)^{|x||y|} y.x

applied word by word, so inhomogeneous elements work.  Everything is computed
modulo words of length > N for a truncation N fixed at construction; mixing
truncations is a hard error, never a silent coercion.

Lie membership and canonical coordinates use two classical tools:

  * the Dynkin map theta (left-to-right bracketing), with theta(x_n) = n*x_n
    characterizing Lie elements among length-n tensors;
  * the Lyndon-Shirshov basis: standard bracketings b_w of Lyndon words w,
    plus [b_w, b_w] for w of odd total degree.  b_w = w + (lex-higher words)
    and [b_w, b_w] = 2*ww + (lex-higher), so coordinate extraction is
    triangular on leading words.

Degrees are integers >= -1.  Degree -2 or lower is rejected at construction.
"""

from fractions import Fraction
from itertools import combinations


class ConfigError(ValueError):
    """Mismatched generator sets or truncations."""


class DomainError(ValueError):
    """An argument fails a degree or well-formedness precondition."""


class StructError(ValueError):
    """A structural defect: missing differential entry, bad generator."""


class SolveError(RuntimeError):
    """A length-stage linear solve had no solution; carries the witness."""


ZERO = Fraction(0)
ONE = Fraction(1)


def _q(x):
    """Coerce to Fraction, rejecting floats (exact arithmetic only)."""
    if isinstance(x, float):
        raise DomainError("floating point coefficients are not allowed: %r" % (x,))
    return Fraction(x)


class GenSet:
    """An ordered set of named graded generators.

    The order of the tuple is the total order used for Lyndon words and for
    every deterministic choice downstream, so two algebras built with the
    same (name, degree) list behave identically.
    """

    __slots__ = ("names", "degrees", "_index", "_basis_cache")

    def __init__(self, pairs):
        names = []
        degrees = []
        seen = set()
        for name, deg in pairs:
            if not isinstance(name, str) or not name:
                raise StructError("generator name must be a nonempty string: %r" % (name,))
            if name in seen:
                raise StructError("duplicate generator name %r" % name)
            if deg < -1:
                raise DomainError("generator %r has degree %d < -1" % (name, deg))
            seen.add(name)
            names.append(name)
            degrees.append(int(deg))
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self._index = {n: i for i, n in enumerate(self.names)}
        self._basis_cache = {}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return (isinstance(other, GenSet)
                and self.names == other.names and self.degrees == other.degrees)

    def __hash__(self):
        return hash((self.names, self.degrees))

    def __repr__(self):
        return "GenSet(%s)" % ", ".join(
            "%s:%d" % (n, d) for n, d in zip(self.names, self.degrees))

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise StructError("unknown generator %r" % name) from None

    def degree_of_word(self, word):
        degs = self.degrees
        return sum(degs[i] for i in word)

    def word_str(self, word):
        return ".".join(self.names[i] for i in word)


def _same_frame(x, y):
    if x.gens is not y.gens and x.gens != y.gens:
        raise ConfigError("elements over different generator sets")
    if x.N != y.N:
        raise ConfigError("mixed truncations: %d vs %d" % (x.N, y.N))


class Elt:
    """A truncated tensor-algebra element carrying a Lie element.

    terms maps words (tuples of generator indices, length 1..N) to nonzero
    Fractions.  Instances are immutable by convention: no operation mutates
    the terms dict of an input, so terms dicts may be shared.
    """

    __slots__ = ("gens", "N", "terms")

    def __init__(self, gens, N, terms=None):
        if N < 1:
            raise ConfigError("truncation must be >= 1, got %d" % N)
        self.gens = gens
        self.N = N
        if terms is None:
            terms = {}
        self.terms = terms

    @classmethod
    def build(cls, gens, N, items):
        """Construct from (word, coeff) pairs, dropping zeros and long words."""
        terms = {}
        for word, c in items:
            c = _q(c)
            if c == 0 or len(word) > N:
                continue
            word = tuple(word)
            acc = terms.get(word, ZERO) + c
            if acc == 0:
                terms.pop(word, None)
            else:
                terms[word] = acc
        return cls(gens, N, terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Elt):
            return NotImplemented
        _same_frame(self, other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        _same_frame(self, other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            acc = terms.get(w, ZERO) + c
            if acc == 0:
                terms.pop(w, None)
            else:
                terms[w] = acc
        return Elt(self.gens, self.N, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Elt(self.gens, self.N, {w: -c for w, c in self.terms.items()})

    def __mul__(self, scale):
        scale = _q(scale)
        if scale == 0:
            return Elt(self.gens, self.N, {})
        return Elt(self.gens, self.N, {w: c * scale for w, c in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        return "Elt(%s)" % self.pretty()

    def pretty(self, max_terms=12):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            bits.append("%s*%s" % (self.terms[w], self.gens.word_str(w)))
            if len(bits) >= max_terms:
                bits.append("... (%d terms)" % len(self.terms))
                break
        return " + ".join(bits)

    def degree(self):
        """Common degree of all words, or None for the zero element."""
        deg = None
        for w in self.terms:
            d = self.gens.degree_of_word(w)
            if deg is None:
                deg = d
            elif d != deg:
                raise DomainError("element is not degree-homogeneous")
        return deg

    def has_degree(self, d):
        """True if every word has degree d (vacuously true for 0)."""
        return all(self.gens.degree_of_word(w) == d for w in self.terms)

    def length_part(self, k):
        return Elt(self.gens, self.N,
                   {w: c for w, c in self.terms.items() if len(w) == k})

    def min_length(self):
        """Smallest word length present, or None for the zero element."""
        if not self.terms:
            return None
        return min(len(w) for w in self.terms)

    def truncated(self, M):
        """Drop words longer than M.  M may not exceed the current truncation."""
        if M > self.N:
            raise ConfigError(
                "cannot raise truncation from %d to %d" % (self.N, M))
        return Elt(self.gens, M,
                   {w: c for w, c in self.terms.items() if len(w) <= M})

    def at_truncation(self, N):
        """Reinterpret at truncation N >= every stored word length."""
        if self.terms and max(len(w) for w in self.terms) > N:
            raise ConfigError("element does not fit in truncation %d" % N)
        return Elt(self.gens, N, self.terms)

    def letters(self):
        out = set()
        for w in self.terms:
            out.update(w)
        return out

    def support_in(self, allowed):
        """True if every letter of every word lies in the allowed index set."""
        return self.letters() <= set(allowed)


def generator_elt(gens, N, name):
    return Elt(gens, N, {(gens.index(name),): ONE})


def zero_elt(gens, N):
    return Elt(gens, N, {})


def truncate(x, M):
    return x.truncated(M)


def concat_terms(a, b, N, out=None, scale=ONE):
    """Concatenation product of two word->coeff dicts, truncated at N.

    Accumulates into out if given.  Used for the tensor product and for the
    exp/log arithmetic in the series module (where the empty word may occur).
    """
    if out is None:
        out = {}
    for u, cu in a.items():
        for v, cv in b.items():
            if len(u) + len(v) > N:
                continue
            w = u + v
            acc = out.get(w, ZERO) + cu * cv * scale
            if acc == 0:
                out.pop(w, None)
            else:
                out[w] = acc
    return out


def bracket(x, y):
    """Graded Lie bracket [x, y] = xy - (-1)^{|x||y|} yx, word by word."""
    _same_frame(x, y)
    gens = x.gens
    N = x.N
    degs = gens.degrees
    terms = {}
    for u, cu in x.terms.items():
        du = sum(degs[i] for i in u)
        for v, cv in y.terms.items():
            if len(u) + len(v) > N:
                continue
            c = cu * cv
            w = u + v
            acc = terms.get(w, ZERO) + c
            if acc == 0:
                terms.pop(w, None)
            else:
                terms[w] = acc
            dv = sum(degs[i] for i in v)
            s = -c if (du & 1) and (dv & 1) else c
            w = v + u
            acc = terms.get(w, ZERO) - s
            if acc == 0:
                terms.pop(w, None)
            else:
                terms[w] = acc
    return Elt(gens, N, terms)


def dynkin_theta(x):
    """Left-to-right bracketing map: g1 g2 ... gk -> [...[[g1,g2],g3]...,gk]."""
    gens = x.gens
    N = x.N
    out = Elt(gens, N, {})
    for w, c in x.terms.items():
        cur = Elt(gens, N, {(w[0],): c})
        for i in w[1:]:
            cur = bracket(cur, Elt(gens, N, {(i,): ONE}))
        out = out + cur
    return out


def dynkin_verify(x):
    """Check theta(x_n) = n * x_n for every word length n.

    Returns (ok, defects) where defects lists (length, defect Elt) for the
    lengths that fail.  The zero element verifies trivially.
    """
    defects = []
    lengths = sorted({len(w) for w in x.terms})
    for n in lengths:
        part = x.length_part(n)
        d = dynkin_theta(part) - n * part
        if not d.is_zero():
            defects.append((n, d))
    return (not defects, defects)


def is_lie(x):
    ok, _ = dynkin_verify(x)
    return ok


# ---------------------------------------------------------------------------
# Lyndon-Shirshov basis


def lyndon_words(k, n):
    """All Lyndon words of length exactly n over the alphabet 0..k-1 (Duval)."""
    if k == 0 or n == 0:
        return
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            yield tuple(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


def standard_factorization(word):
    """Split a Lyndon word of length >= 2 at its lex-least proper suffix."""
    n = len(word)
    best = 1
    for i in range(2, n):
        if word[i:] < word[best:]:
            best = i
    return word[:best], word[best:]


def _lyndon_bracketing(gens, word):
    """Tensor expansion (word->coeff dict) of the standard bracketing b_word."""
    if len(word) == 1:
        return {word: ONE}
    u, v = standard_factorization(word)
    N = len(word)
    bu = Elt(gens, N, _lyndon_bracketing(gens, u))
    bv = Elt(gens, N, _lyndon_bracketing(gens, v))
    return bracket(bu, bv).terms


def lyndon_slice_basis(gens, degree, length, subset=None):
    """Deterministic basis of the (degree, word length) slice of the free Lie
    algebra on the generators with indices in subset (default: all).

    Returns a list of (leading_word, terms_dict, is_doubled) triples sorted by
    leading word; leading coefficient is 1, or 2 for doubled elements
    [b_w, b_w] (present when b_w has odd degree).  Cached per slice.
    """
    if subset is None:
        subset = tuple(range(len(gens)))
    else:
        subset = tuple(sorted(subset))
    key = (subset, degree, length)
    cached = gens._basis_cache.get(key)
    if cached is not None:
        return cached
    degs = gens.degrees
    out = []
    for w in lyndon_words(len(subset), length):
        word = tuple(subset[i] for i in w)
        if sum(degs[i] for i in word) != degree:
            continue
        out.append((word, _lyndon_bracketing(gens, word), False))
    if length % 2 == 0 and degree % 2 == 0 and (degree // 2) % 2 != 0:
        half = degree // 2
        for w in lyndon_words(len(subset), length // 2):
            word = tuple(subset[i] for i in w)
            if sum(degs[i] for i in word) != half:
                continue
            b = Elt(gens, length, _lyndon_bracketing(gens, word))
            sq = bracket(b, b)
            out.append((word + word, sq.terms, True))
    out.sort(key=lambda t: t[0])
    gens._basis_cache[key] = out
    return out


def lyndon_basis(gens, degree, length, N=None, subset=None):
    """The slice basis as a list of Elt, in extraction order."""
    if N is None:
        N = length
    return [Elt(gens, N, terms)
            for _, terms, _ in lyndon_slice_basis(gens, degree, length, subset)]


def slice_coordinates(x, basis):
    """Coordinates of x in a lyndon_slice_basis list, or None if outside.

    x must be supported on the slice the basis spans (one word length, one
    degree, letters inside the basis subset).  Reduction is triangular on
    leading words.
    """
    work = dict(x.terms)
    coords = [ZERO] * len(basis)
    lead_index = {lead: i for i, (lead, _, _) in enumerate(basis)}
    while work:
        w = min(work)
        i = lead_index.get(w)
        if i is None:
            return None
        _, terms, doubled = basis[i]
        c = work[w] / (2 if doubled else 1)
        coords[i] = c
        for v, cv in terms.items():
            acc = work.get(v, ZERO) - c * cv
            if acc == 0:
                work.pop(v, None)
            else:
                work[v] = acc
    return coords


def elt_from_slice_coords(gens, N, basis, coords):
    out = Elt(gens, N, {})
    for c, (_, terms, _) in zip(coords, basis):
        if c:
            out = out + Elt(gens, N, terms) * c
    return out


# ---------------------------------------------------------------------------
# Derivations, morphisms, differentials


class Derivation:
    """A graded derivation given by generator images.

    images maps generator index -> Elt (or omits indices that map to 0);
    shift is the degree of the derivation (-1 for differentials, +1 for the
    transgression homotopy, 0 for ad-type derivations).  On a word the
    derivation is applied letter by letter with the Koszul sign
    (-1)^{shift * (degree of the prefix)}.
    """

    __slots__ = ("gens", "N", "images", "shift")

    def __init__(self, gens, N, images, shift):
        self.gens = gens
        self.N = N
        self.images = images
        self.shift = shift
        for i, img in images.items():
            if img.gens is not gens and img.gens != gens:
                raise ConfigError("derivation image over a different generator set")
            if img.N != N:
                raise ConfigError("derivation image at a different truncation")
            d = img.degree()
            if d is not None and d != gens.degrees[i] + shift:
                raise DomainError(
                    "image of %s must have degree %d, got %d"
                    % (gens.names[i], gens.degrees[i] + shift, d))

    def __call__(self, x):
        if x.gens is not self.gens and x.gens != self.gens:
            raise ConfigError("element over a different generator set")
        if x.N != self.N:
            raise ConfigError("mixed truncations: %d vs %d" % (x.N, self.N))
        gens = self.gens
        N = self.N
        degs = gens.degrees
        odd_shift = self.shift & 1
        out = {}
        for w, c in x.terms.items():
            sign = 1
            for i, g in enumerate(w):
                img = self.images.get(g)
                if img is not None and img.terms:
                    pre = w[:i]
                    post = w[i + 1:]
                    room = N - len(pre) - len(post)
                    for v, cv in img.terms.items():
                        if len(v) > room:
                            continue
                        word = pre + v + post
                        acc = out.get(word, ZERO) + sign * c * cv
                        if acc == 0:
                            out.pop(word, None)
                        else:
                            out[word] = acc
                if odd_shift and (degs[g] & 1):
                    sign = -sign
        return Elt(gens, N, out)


def substitute(x, target_gens, target_N, images):
    """Multiplicative substitution: replace letter i by images[i].

    images maps every letter occurring in x to an Elt over target_gens with
    the letter's degree (or a zero Elt).  This is the tensor extension of a
    degree-preserving Lie morphism, so it implements DGL morphisms, quotient
    maps and relabelings on canonical forms.
    """
    src_degs = x.gens.degrees
    for i in x.letters():
        img = images.get(i)
        if img is None:
            raise StructError("no image for generator %r" % x.gens.names[i])
        d = img.degree()
        if d is not None and d != src_degs[i]:
            raise DomainError(
                "image of %s changes degree (%d -> %d); substitution needs "
                "degree-preserving images" % (x.gens.names[i], src_degs[i], d))
    out = {}
    for w, c in x.terms.items():
        partial = {(): c}
        for g in w:
            partial = concat_terms(partial, images[g].terms, target_N)
            if not partial:
                break
        for v, cv in partial.items():
            if not v:
                continue
            acc = out.get(v, ZERO) + cv
            if acc == 0:
                out.pop(v, None)
            else:
                out[v] = acc
    return Elt(target_gens, target_N, out)


class DGLMap:
    """A morphism of free DGLs given by generator images."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        self.images = images

    def __call__(self, x):
        return substitute(x, self.target.gens, self.target.N, self.images)

    def chain_residues(self):
        """(name, residue) for every source generator, residue = f(dg) - d(f g)."""
        out = []
        for i, name in enumerate(self.source.gens.names):
            g = Elt(self.source.gens, self.source.N, {(i,): ONE})
            res = self(self.source.d(g)) - self.target.d(self(g))
            out.append((name, res))
        return out

    def is_chain_map(self):
        return all(r.is_zero() for _, r in self.chain_residues())


class FreeDGL:
    """A free complete DGL presented by generators, a differential table and
    a truncation N.  The differential is the degree -1 derivation extending
    the table; d^2 = 0 is checked by check_d_squared, not assumed.
    """

    __slots__ = ("gens", "N", "diff")

    def __init__(self, gens, N, images):
        self.gens = gens
        self.N = N
        for i in images:
            if not 0 <= i < len(gens):
                raise StructError("differential table has a bad generator index")
        self.diff = Derivation(gens, N, images, -1)

    @classmethod
    def from_table(cls, pairs, N, table):
        """pairs: (name, degree) list; table: name -> (word list) builder run
        after generators exist.  Convenience for tests."""
        gens = GenSet(pairs)
        images = {}
        for name, fn in table.items():
            images[gens.index(name)] = fn(gens, N)
        return cls(gens, N, images)

    def gen(self, name):
        return generator_elt(self.gens, self.N, name)

    def zero(self):
        return zero_elt(self.gens, self.N)

    def d(self, x):
        return self.diff(x)

    def d1(self, x):
        """Linear (length-preserving) part of the differential."""
        gens = self.gens
        out = {}
        for w, c in x.terms.items():
            sign = 1
            for i, g in enumerate(w):
                img = self.diff.images.get(g)
                if img is not None:
                    for v, cv in img.terms.items():
                        if len(v) != 1:
                            continue
                        word = w[:i] + v + w[i + 1:]
                        acc = out.get(word, ZERO) + sign * c * cv
                        if acc == 0:
                            out.pop(word, None)
                        else:
                            out[word] = acc
                if gens.degrees[g] & 1:
                    sign = -sign
        return Elt(gens, self.N, out)

    def check_d_squared(self):
        """Apply d twice to every generator; returns the nonzero residues as
        a list of (generator name, residue Elt).  Empty list = valid DGL."""
        out = []
        for i, name in enumerate(self.gens.names):
            g = Elt(self.gens, self.N, {(i,): ONE})
            r = self.d(self.d(g))
            if not r.is_zero():
                out.append((name, r))
        return out

    def with_images(self, images):
        return FreeDGL(self.gens, self.N, images)

    def truncated(self, M):
        """The same presentation at a lower truncation."""
        if M > self.N:
            raise ConfigError("cannot raise truncation from %d to %d" % (self.N, M))
        images = {i: img.truncated(M) for i, img in self.diff.images.items()}
        return FreeDGL(self.gens, M, images)


def apply_differential(L, x):
    return L.d(x)


def check_d_squared(L):
    return L.check_d_squared()
