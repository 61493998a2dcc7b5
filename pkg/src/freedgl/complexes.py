"""Models of finite simplicial complexes.

A complex is ingested as a list of maximal faces and closed downward.  Its
model is the sub-DGL of the ambient simplex family spanned by the complex's
own faces: each face's differential is the relabeled top differential of its
dimension, which is supported on the face's subfaces, so the restriction
closes whenever the face set is closed under subsets.  On top of the raw
model: component splitting, localization at a Maurer-Cartan element, and the
two-stage reduction to a minimal model (kill a spanning tree, then eliminate
linear pairs until the linear differential vanishes).
"""

from fractions import Fraction

from .lie import (
    ConfigError, DomainError, StructError, SolveError,
    GenSet, Elt, FreeDGL, DGLMap, generator_elt, zero_elt, substitute,
)
from .series import twist
from .serialize import ParseError
from .simplex import ModelFamily, face_name, face_degree, relabel_element
from .homology import homology, _DegreeLayout, _kernel_pass

ONE = Fraction(1)


# ---------------------------------------------------------------------------
# Complexes


class SimplicialComplex:
    """A finite simplicial complex on densely numbered vertices.

    Faces are sorted vertex tuples, closed under nonempty subsets; the order
    (dimension, then lexicographic) fixes generator order everywhere
    downstream.  labels keeps the pre-renumbering vertex ids for display.
    """

    __slots__ = ("faces", "maximal", "n_vertices", "dim", "labels")

    def __init__(self, maximal_faces, labels=None):
        if not maximal_faces:
            raise DomainError("a complex needs at least one face")
        closure = set()
        maximal = []
        for f in maximal_faces:
            face = tuple(sorted(f))
            if len(set(face)) != len(face):
                raise DomainError("face %r repeats a vertex" % (f,))
            maximal.append(face)
            for mask in range(1, 1 << len(face)):
                sub = tuple(v for i, v in enumerate(face) if mask >> i & 1)
                closure.add(sub)
        verts = sorted({v for f in closure for v in f})
        if verts != list(range(len(verts))):
            raise DomainError(
                "vertices must be 0..n-1 without gaps; renumber first "
                "(parse_complex does this)")
        self.faces = tuple(sorted(closure, key=lambda f: (len(f), f)))
        self.maximal = tuple(sorted(set(maximal), key=lambda f: (len(f), f)))
        self.n_vertices = len(verts)
        self.dim = max(len(f) for f in self.faces) - 1
        self.labels = tuple(labels) if labels is not None else tuple(verts)

    def faces_of_dim(self, p):
        return tuple(f for f in self.faces if len(f) == p + 1)

    def has_face(self, face):
        return tuple(sorted(face)) in set(self.faces)

    def __repr__(self):
        return "SimplicialComplex(%d vertices, %d faces, dim %d)" % (
            self.n_vertices, len(self.faces), self.dim)


def parse_complex(text):
    """Complex from text: one maximal face per line as whitespace-separated
    vertex ids, # comments.  Vertices are renumbered densely, preserving
    their numeric order; original ids are kept in .labels."""
    maximal = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            verts = tuple(int(t) for t in line.split())
        except ValueError:
            raise ParseError("vertex ids must be integers: %r" % line,
                             lineno) from None
        if any(v < 0 for v in verts):
            raise ParseError("negative vertex id in %r" % line, lineno)
        if len(set(verts)) != len(verts):
            raise ParseError("face %r repeats a vertex" % line, lineno)
        face = tuple(sorted(verts))
        if face in seen:
            raise ParseError("duplicate face %r" % line, lineno)
        seen.add(face)
        maximal.append(face)
    if not maximal:
        raise ParseError("no faces given")
    used = sorted({v for f in maximal for v in f})
    remap = {v: i for i, v in enumerate(used)}
    return SimplicialComplex(
        [tuple(remap[v] for v in f) for f in maximal], labels=used)


# ---------------------------------------------------------------------------
# The model of a complex


class ComplexModel:
    """Free DGL on one generator per face of K, with the differential
    restricted from the ambient simplex family."""

    __slots__ = ("K", "N", "dgl", "wide", "basepoint")

    def __init__(self, K, N, dgl, wide):
        self.K = K
        self.N = N
        self.dgl = dgl
        self.wide = wide
        self.basepoint = None

    @property
    def gens(self):
        return self.dgl.gens

    def gen(self, face):
        face = tuple(sorted(face))
        return generator_elt(self.gens, self.N, face_name(face, self.wide))


def model_of_complex(K, N):
    """The model of K at truncation N, restricted from the ambient family.

    Every face's differential is the relabeled top differential of its
    dimension; a letter falling outside K's face set is a structure error
    (cannot happen for subset-closed K with the built-in family, but guards
    custom seeding).
    """
    fam = ModelFamily(N, "seed")
    wide = K.n_vertices > 10
    pairs = [(face_name(f, wide), face_degree(f)) for f in K.faces]
    gens = GenSet(pairs)
    images = {}
    for idx, face in enumerate(K.faces):
        p = len(face) - 1
        top = fam.top_diff(p)
        vmap = {i: v for i, v in enumerate(face)}
        try:
            img = relabel_element(top, vmap, gens, N, wide)
        except (StructError, KeyError) as e:
            raise StructError(
                "differential of face %s leaves the complex: %s"
                % (face_name(face, wide), e)) from None
        if not img.is_zero():
            images[idx] = img
    return ComplexModel(K, N, FreeDGL(gens, N, images), wide)


# ---------------------------------------------------------------------------
# Components


def components(K):
    """Vertex sets of the connected components (1-skeleton union-find),
    ordered by smallest vertex."""
    parent = list(range(K.n_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in K.faces_of_dim(1):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups = {}
    for v in range(K.n_vertices):
        groups.setdefault(find(v), []).append(v)
    return [tuple(groups[r]) for r in sorted(groups)]


def subcomplex(K, vertices):
    """The full subcomplex on the given vertices, densely renumbered; also
    returns the old-to-new vertex map."""
    vs = sorted(set(vertices))
    remap = {v: i for i, v in enumerate(vs)}
    maximal = [tuple(remap[v] for v in f) for f in K.maximal
               if all(v in remap for v in f)]
    if not maximal:
        raise DomainError("no faces inside the requested vertex set")
    return SimplicialComplex(maximal, labels=vs), remap


def component_inclusion_check(K, a, N, degrees):
    """Homology-dimension comparison between the component of a and all of
    K, both twisted at a, over the requested degree window."""
    comp = None
    for c in components(K):
        if a in c:
            comp = c
            break
    if comp is None:
        raise DomainError("vertex %d is not in the complex" % a)
    Ka, remap = subcomplex(K, comp)
    sub = model_of_complex(Ka, N)
    full = model_of_complex(K, N)
    tw_sub = twist(sub.dgl, sub.gen((remap[a],)))
    tw_full = twist(full.dgl, full.gen((a,)))
    rep_sub = homology(tw_sub, degrees=degrees)
    rep_full = homology(tw_full, degrees=degrees)
    out = {}
    ok = True
    for q in sorted(degrees):
        ds = rep_sub.entries[q]["h"]
        df = rep_full.entries[q]["h"]
        agree = ds == df
        ok = ok and agree
        out[q] = {"sub": ds, "full": df, "agree": agree}
    return {"component": comp, "degrees": out, "ok": ok}


# ---------------------------------------------------------------------------
# Localization


class LocalizedDGL:
    """The localization of a twisted quotient at a Maurer-Cartan element:
    strictly positive degrees together with the degree-0 kernel of the
    twisted differential.  This is a sub-DGL presentation; the recorded
    complement M is the quotiented direct summand of degree 0."""

    __slots__ = ("L", "N", "kernel_basis", "complement")

    def __init__(self, L, kernel_basis, complement):
        self.L = L
        self.N = L.N
        self.kernel_basis = kernel_basis
        self.complement = complement

    def dim(self, q):
        if q < 0:
            return 0
        if q == 0:
            return len(self.kernel_basis)
        return _DegreeLayout(self.L, q).dim

    def d(self, x):
        return self.L.d(x)

    def check(self):
        """Differential closes on the presentation: kernel classes are
        cycles and degree-1 boundaries land in the kernel span."""
        for b in self.kernel_basis:
            if not self.L.d(b).is_zero():
                return False
        lay0 = _DegreeLayout(self.L, 0)
        from .linalg import SpanReducer
        red = SpanReducer()
        for i, b in enumerate(self.kernel_basis):
            red.insert(lay0.coords(b), i)
        for x in _DegreeLayout(self.L, 1).basis_elements(self.L):
            vec = lay0.coords(self.L.d(x))
            residual, _ = red.reduce(vec)
            if residual:
                return False
        return True


def localize(L, z):
    """Localize L at the Maurer-Cartan element z: twist, keep strictly
    positive degrees plus ker of the twisted differential on degree 0, and
    record the row-reduction complement M in canonical basis order."""
    tw = twist(L, z)
    lay0 = _DegreeLayout(tw, 0)
    laym1 = _DegreeLayout(tw, -1)
    rank, kernels = _kernel_pass(tw, lay0, laym1)
    kernel_basis = [lay0.element(tw, kv) for kv in kernels]
    dependent = {max(kv) for kv in kernels}
    elts = list(lay0.basis_elements(tw))
    complement = [elts[j] for j in range(lay0.dim) if j not in dependent]
    return LocalizedDGL(tw, kernel_basis, complement)


# ---------------------------------------------------------------------------
# Trees and minimal models


def maximal_tree(K, basepoint=None):
    """Spanning tree edges by breadth-first search, visiting neighbors in
    increasing vertex order.  The search starts at the basepoint (default:
    lowest vertex); on a disconnected complex the result is a spanning
    forest rooted at each component's lowest vertex."""
    if basepoint is None:
        basepoint = 0
    if not 0 <= basepoint < K.n_vertices:
        raise DomainError("basepoint %r is not a vertex" % (basepoint,))
    adj = {v: [] for v in range(K.n_vertices)}
    for u, v in K.faces_of_dim(1):
        adj[u].append(v)
        adj[v].append(u)
    for v in adj:
        adj[v].sort()
    seen = set()
    tree = []

    def bfs(root):
        seen.add(root)
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    tree.append(tuple(sorted((u, v))))
                    queue.append(v)

    bfs(basepoint)
    for v in range(K.n_vertices):
        if v not in seen:
            bfs(v)
    return tuple(sorted(tree))


def _restricted_dgl(source, keep_names, zero_names, solved, N):
    """Quotient of a free DGL along a generator substitution: kept names map
    to themselves, zero_names to 0, solved names to the given expressions
    (supported on kept letters only).  The projection is verified to be a
    chain map on every source generator; a residue is a loud failure."""
    pairs = [(n, source.gens.degrees[source.gens.index(n)])
             for n in keep_names]
    gens = GenSet(pairs)
    conv = {source.gens.index(n): generator_elt(gens, N, n)
            for n in keep_names}
    full_images = dict(conv)
    for n in zero_names:
        full_images[source.gens.index(n)] = zero_elt(gens, N)
    for n, expr in solved.items():
        full_images[source.gens.index(n)] = substitute(expr, gens, N, conv)
    d_images = {}
    for j, name in enumerate(keep_names):
        dx = source.d(generator_elt(source.gens, N, name))
        img = substitute(dx, gens, N, full_images)
        if not img.is_zero():
            d_images[j] = img
    out = FreeDGL(gens, N, d_images)
    proj = DGLMap(source, out, full_images)
    bad = [n for n, r in proj.chain_residues() if not r.is_zero()]
    if bad:
        raise SolveError(
            "reduction projection is not a chain map on %s" % ", ".join(bad))
    return out


def _eliminate_pair(L, src_idx, tgt_idx, coeff):
    """Remove the generator pair (src, tgt) where d(src) = coeff*tgt + rest:
    solve tgt from the relation and substitute it everywhere."""
    gens = L.gens
    N = L.N
    rest = L.d(generator_elt(gens, N, gens.names[src_idx])) \
        - coeff * Elt(gens, N, {(tgt_idx,): ONE})
    identity = {i: Elt(gens, N, {(i,): ONE}) for i in range(len(gens))}
    u = zero_elt(gens, N)
    for _ in range(N + 1):
        imgs = dict(identity)
        imgs[src_idx] = zero_elt(gens, N)
        imgs[tgt_idx] = u
        nxt = (Fraction(-1) / coeff) * substitute(rest, gens, N, imgs)
        if nxt == u:
            break
        u = nxt
    else:
        raise SolveError("elimination substitution failed to stabilize")
    keep = [n for i, n in enumerate(gens.names)
            if i not in (src_idx, tgt_idx)]
    return _restricted_dgl(
        L, keep, [gens.names[src_idx]], {gens.names[tgt_idx]: u}, N)


def minimal_model(K, basepoint, N):
    """Minimal model of a connected complex at truncation N.

    Stage 1 kills all vertices and a spanning tree (an acyclic ideal), so
    the remaining generators live in degrees >= 0.  Stage 2 repeatedly
    eliminates a generator together with its first linear-differential
    partner, lowest degree first, until the linear part of the differential
    vanishes.  The surviving generator count per degree equals the reduced
    homology of K shifted down by one.
    """
    comps = components(K)
    if len(comps) != 1:
        raise DomainError(
            "minimal models need a connected complex; "
            "split it with components() first")
    cm = model_of_complex(K, N)
    tree = set(maximal_tree(K, basepoint))
    zero_names = [face_name((v,), cm.wide) for v in range(K.n_vertices)]
    zero_names += [face_name(e, cm.wide) for e in sorted(tree)]
    keep = [face_name(f, cm.wide) for f in K.faces
            if len(f) > 2 or (len(f) == 2 and f not in tree)]
    L = _restricted_dgl(cm.dgl, keep, zero_names, {}, N)

    while True:
        order = sorted(range(len(L.gens)),
                       key=lambda i: (L.gens.degrees[i], i))
        pick = None
        for i in order:
            d1x = L.d1(generator_elt(L.gens, N, L.gens.names[i]))
            if d1x.is_zero():
                continue
            tgt = min(w[0] for w in d1x.terms)
            pick = (i, tgt, d1x.terms[(tgt,)])
            break
        if pick is None:
            return L
        L = _eliminate_pair(L, *pick)
