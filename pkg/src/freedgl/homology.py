"""Exact homology of truncated free DGLs and the group-level invariants.

All computations happen on the finite-dimensional quotients L/L^{>N}: per
degree, the chain space is the direct sum of the Lyndon slices of lengths
1..N, the differential is assembled slice by slice, and ranks and kernels
come from fraction-free integer elimination with leftmost pivots.  On top of
that sit the homotopy-group extractors: H_{n-1} for n >= 2, and for n = 1
the degree-0 homology with its Baker-Campbell-Hausdorff product table
(a nilpotent group presented by exact rational structure constants), plus
the tower of these groups over increasing truncation.
"""

from fractions import Fraction

from .lie import (
    DomainError, StructError,
    Elt, DGLMap, zero_elt,
    lyndon_slice_basis, slice_coordinates, elt_from_slice_coords,
)
from .series import bch, gauge, is_mc, twist
from .linalg import SpanReducer, FractionFreeReducer, _int_vec

ONE = Fraction(1)


# ---------------------------------------------------------------------------
# Degree-graded chain spaces


class _DegreeLayout:
    """Indexing of the degree-q part of L/L^{>N}: concatenated Lyndon slices
    of lengths 1..N."""

    __slots__ = ("q", "blocks", "dim")

    def __init__(self, L, q):
        self.q = q
        self.blocks = []
        off = 0
        for k in range(1, L.N + 1):
            basis = lyndon_slice_basis(L.gens, q, k)
            if basis:
                self.blocks.append((k, off, basis))
                off += len(basis)
        self.dim = off

    def coords(self, x):
        """Global coordinate dict of a degree-q element, or None if some
        length part falls outside its slice span."""
        out = {}
        for k, off, basis in self.blocks:
            part = x.length_part(k)
            if part.is_zero():
                continue
            c = slice_coordinates(part, basis)
            if c is None:
                return None
            for i, ci in enumerate(c):
                if ci:
                    out[off + i] = ci
        return out

    def element(self, L, vec, scale=ONE):
        out = zero_elt(L.gens, L.N)
        for k, off, basis in self.blocks:
            coords = [scale * vec.get(off + j, 0) for j in range(len(basis))]
            if any(coords):
                out = out + elt_from_slice_coords(L.gens, L.N, basis, coords)
        return out

    def basis_elements(self, L):
        for k, off, basis in self.blocks:
            for _, terms, _ in basis:
                yield Elt(L.gens, L.N, terms)


def _kernel_pass(L, layout_src, layout_tgt):
    """Rank and kernel of the differential on a degree slice.

    Kernel vectors are integer dicts over the source coordinates, one per
    dependent column, extracted through the auxiliary-tail mechanism.
    """
    aux = layout_tgt.dim + layout_src.dim + 1
    red = FractionFreeReducer(aux_base=aux)
    kernels = []
    for j, x in enumerate(layout_src.basis_elements(L)):
        vec = layout_tgt.coords(L.d(x))
        if vec is None:
            raise StructError("differential left its degree slice")
        # the aux marker must ride along BEFORE any rescaling, so that the
        # recorded combination refers to the actual columns
        vec[aux + j] = ONE
        res = red.insert(vec)
        if res is not None:
            kv = {i - aux: c for i, c in res.items()}
            if kv[min(kv)] < 0:
                kv = {i: -c for i, c in kv.items()}
            kernels.append(kv)
    return red.rank(), kernels


class HomologyReport:
    """Per-degree exact dims of ker, im and H on L/L^{>N}, with cycle
    representatives for the homology classes."""

    __slots__ = ("N", "degrees", "entries")

    def __init__(self, N, degrees, entries):
        self.N = N
        self.degrees = degrees
        self.entries = entries

    @property
    def dims(self):
        return {q: e["h"] for q, e in self.entries.items()}

    def pretty(self):
        lines = []
        for q in sorted(self.entries):
            e = self.entries[q]
            lines.append("degree %d: ker %d, im %d, H %d"
                         % (q, e["kernel"], e["image"], e["h"]))
        return "\n".join(lines)


def homology(L, N=None, degrees=None):
    """Exact homology of L/L^{>N} in the requested degrees.

    Every entry carries kernel, image and homology dimensions together with
    cycle representatives of an H basis; dim H = dim ker - dim im by
    construction, and a bookkeeping mismatch raises instead of passing.
    """
    if N is not None and N != L.N:
        L = L.truncated(N)
    dmin = min(L.gens.degrees)
    dmax = max(L.gens.degrees)
    if degrees is None:
        lo = min(dmin, L.N * dmin)
        hi = max(dmax, L.N * dmax)
        degrees = range(lo, hi + 1)
    degrees = sorted(degrees)

    layouts = {}

    def layout(q):
        if q not in layouts:
            layouts[q] = _DegreeLayout(L, q)
        return layouts[q]

    entries = {}
    for q in degrees:
        lay = layout(q)
        if lay.dim == 0:
            entries[q] = {"kernel": 0, "image": 0, "h": 0, "reps": []}
            continue
        rank_q, kernels = _kernel_pass(L, lay, layout(q - 1))
        ker_dim = lay.dim - rank_q
        red = FractionFreeReducer()
        for x in layout(q + 1).basis_elements(L):
            vec = lay.coords(L.d(x))
            if vec is None:
                raise StructError("differential left its degree slice")
            red.insert(_int_vec(vec))
        im_rank = red.rank()
        reps = []
        for kv in kernels:
            if red.insert(dict(kv)) is None:
                reps.append(lay.element(L, kv))
        h = len(reps)
        if h != ker_dim - im_rank:
            raise StructError(
                "homology bookkeeping mismatch at degree %d: ker %d, im %d, "
                "independent reps %d" % (q, ker_dim, im_rank, h))
        entries[q] = {"kernel": ker_dim, "image": im_rank, "h": h,
                      "reps": reps}
    return HomologyReport(L.N, degrees, entries)


def linear_homology(L):
    """Homology of the generator span under the length-preserving part of
    the differential.  Returns (dims, reps) keyed by degree; representatives
    are generator combinations."""
    gens = L.gens
    by_degree = {}
    for i, d in enumerate(gens.degrees):
        by_degree.setdefault(d, []).append(i)

    rank = {}
    kernels = {}
    images = {}
    for q, idxs in sorted(by_degree.items()):
        aux = len(gens)
        red = FractionFreeReducer(aux_base=aux)
        kers = []
        cols = []
        for j, i in enumerate(idxs):
            dx = L.d1(Elt(gens, L.N, {(i,): ONE}))
            raw = {w[0]: c for w, c in dx.terms.items()}
            cols.append(_int_vec(raw))
            vec = dict(raw)
            vec[aux + j] = ONE
            res = red.insert(vec)
            if res is not None:
                kers.append({idxs[i2 - aux]: c for i2, c in res.items()})
        rank[q] = red.rank()
        kernels[q] = kers
        images[q - 1] = cols

    dims = {}
    reps = {}
    for q, idxs in sorted(by_degree.items()):
        h = len(idxs) - rank.get(q, 0) - rank.get(q + 1, 0)
        red = FractionFreeReducer()
        for col in images.get(q, []):
            red.insert(dict(col))
        found = []
        for kv in kernels[q]:
            if red.insert(dict(kv)) is None:
                x = zero_elt(gens, L.N)
                for i, c in sorted(kv.items()):
                    x = x + Fraction(c) * Elt(gens, L.N, {(i,): ONE})
                found.append(x)
        if len(found) != h:
            raise StructError("linear homology bookkeeping mismatch")
        if h:
            dims[q] = h
            reps[q] = found
    return dims, reps


# ---------------------------------------------------------------------------
# The degree-0 group


class MalcevQuotient:
    """H_0(L/L^{>N}, d) with the BCH product: a nilpotent group presented by
    exact rational structure constants.

    Elements are coordinate tuples over the class basis; products go through
    representatives and reduce back to class coordinates.  The table is
    filled lazily and cached.
    """

    __slots__ = ("L", "N", "basis", "_layout", "_red", "_table")

    def __init__(self, L, basis, layout, boundary_columns):
        self.L = L
        self.N = L.N
        self.basis = basis
        self._layout = layout
        self._red = SpanReducer()
        for j, col in enumerate(boundary_columns):
            self._red.insert(dict(col), ("im", j))
        for i, rep in enumerate(basis):
            vec = layout.coords(rep)
            piv, _ = self._red.insert(vec, ("rep", i))
            if piv is None:
                raise StructError("homology basis is not independent")
        self._table = {}

    @property
    def dim(self):
        return len(self.basis)

    def zero(self):
        return tuple(Fraction(0) for _ in range(self.dim))

    def basis_coords(self, i):
        out = [Fraction(0)] * self.dim
        out[i] = ONE
        return tuple(out)

    def class_coords(self, x):
        """Class of a degree-0 cycle as coordinates over the basis."""
        if not x.has_degree(0):
            raise DomainError("class_coords needs a degree-0 element")
        vec = self._layout.coords(x)
        if vec is None:
            raise DomainError("element does not lie in the degree-0 slice")
        residual, comb = self._red.reduce(vec)
        if residual:
            raise DomainError("element is not a cycle mod boundaries")
        out = [Fraction(0)] * self.dim
        for tag, c in comb.items():
            if tag[0] == "rep":
                out[tag[1]] = c
        return tuple(out)

    def element(self, coords):
        out = zero_elt(self.L.gens, self.N)
        for c, rep in zip(coords, self.basis):
            if c:
                out = out + c * rep
        return out

    def product(self, xc, yc):
        """Group product of two classes given by coordinate tuples."""
        return self.class_coords(bch(self.element(xc), self.element(yc)))

    def inverse(self, xc):
        return tuple(-c for c in xc)

    def table(self, i, j):
        """Cached product of the i-th and j-th basis classes."""
        key = (i, j)
        if key not in self._table:
            self._table[key] = self.class_coords(
                bch(self.basis[i], self.basis[j]))
        return self._table[key]

    def full_table(self):
        return {(i, j): self.table(i, j)
                for i in range(self.dim) for j in range(self.dim)}

    def is_abelian(self):
        return all(self.table(i, j) == self.table(j, i)
                   for i in range(self.dim) for j in range(i + 1, self.dim))


def _h0_quotient(L):
    """MalcevQuotient of H_0(L/L^{>N}, d) for an already-twisted L."""
    entry = homology(L, degrees=[0]).entries[0]
    layout = _DegreeLayout(L, 0)
    boundary_cols = []
    for x in _DegreeLayout(L, 1).basis_elements(L):
        vec = layout.coords(L.d(x))
        if vec:
            boundary_cols.append(vec)
    return MalcevQuotient(L, entry["reps"], layout, boundary_cols)


def pi_n(L, n, N=None):
    """Realization homotopy group of a non-negatively graded L on L/L^{>N}:
    the H_{n-1} report entry for n >= 2, the BCH group on H_0 for n = 1."""
    if min(L.gens.degrees) < 0:
        raise DomainError(
            "homotopy groups need a non-negatively graded Lie algebra")
    if n < 1:
        raise DomainError("homotopy groups start at n = 1")
    if N is not None and N != L.N:
        L = L.truncated(N)
    if n >= 2:
        return homology(L, degrees=[n - 1]).entries[n - 1]
    return _h0_quotient(L)


def verify_simplex(model, L, assignment):
    """Whether a generator assignment of a simplex model into L is a chain
    map mod L^{>N}: the membership test for an n-simplex of the realization.

    Keys of the assignment may be generator names or indices; every
    generator of the model needs an image.
    """
    images = {}
    for key, val in assignment.items():
        idx = model.gens.index(key) if isinstance(key, str) else key
        images[idx] = val
    f = DGLMap(model.dgl, L, images)
    return all(r.is_zero() for _, r in f.chain_residues())


def gauge_equivalent_certificate(L, a, b, x):
    """Whether the gauge action of x carries a to b, mod L^{>N}."""
    if not is_mc(L, b):
        raise DomainError("gauge certificate target is not Maurer-Cartan")
    return gauge(x, a, L) == b


# ---------------------------------------------------------------------------
# The truncation tower


def malcev_tower(K, basepoint, N_max):
    """BCH groups of the basepoint-twisted complex model for N = 1..N_max,
    with surjectivity of every connecting projection checked.

    The N = 1 quotient is the abelianization; each later stage refines the
    previous one by the classes new at word length N.
    """
    from .complexes import model_of_complex, components

    if len(components(K)) != 1:
        raise DomainError(
            "the tower needs a connected complex; split it with components()")
    quotients = []
    for N in range(1, N_max + 1):
        cm = model_of_complex(K, N)
        tw = twist(cm.dgl, cm.gen((basepoint,)))
        quotients.append(_h0_quotient(tw))
    for N in range(2, N_max + 1):
        big = quotients[N - 1]
        small = quotients[N - 2]
        red = SpanReducer()
        hit = 0
        for rep in big.basis:
            down = Elt(small.L.gens, small.N,
                       {w: c for w, c in rep.terms.items()
                        if len(w) <= small.N})
            coords = small.class_coords(down)
            piv, _ = red.insert(
                {i: c for i, c in enumerate(coords) if c}, hit)
            if piv is not None:
                hit += 1
        if hit != small.dim:
            raise StructError(
                "tower projection at N=%d is not surjective" % N)
    return quotients


def tower_layers(quotients):
    """New-class counts per word length along a tower."""
    out = []
    prev = 0
    for q in quotients:
        out.append(q.dim - prev)
        prev = q.dim
    return out
