"""Path category presentations and exact hom-sets for loop-free complexes.

The presentation of P(X) is read off the 2-skeleton: vertices are objects,
non-degenerate edges generate (src = d1, tgt = d0), and each non-degenerate
2-simplex contributes the relation d1 = d0 . d2, with degenerate edges
compiled away as identities.  Exact hom-sets are computed only when the
edge graph is acyclic; the word problem is undecidable in general, and
loop-freeness covers the intended use.  For complexes with loops,
`bounded_hom_classes` gives a sound partial answer flagged as such.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cat import FiniteCategory
from .simplicial import SimplexExpr, SimplicialMap, SimplicialSet


class NotLoopFreeError(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    lhs: tuple  # generator ids, path order (first arrow first)
    rhs: tuple
    src: object
    tgt: object


@dataclass(frozen=True, eq=False)
class PresentedCategory:
    objects: tuple
    generators: tuple
    gen_src: dict = field(compare=False)
    gen_tgt: dict = field(compare=False)
    relations: tuple = ()

    def validate(self):
        for g in self.generators:
            if self.gen_src[g] not in self.objects or self.gen_tgt[g] not in self.objects:
                raise ValueError(f"generator {g} has unknown endpoints")
        for rel in self.relations:
            for word in (rel.lhs, rel.rhs):
                at = rel.src
                for g in word:
                    if self.gen_src[g] != at:
                        raise ValueError(f"relation word {word} not composable")
                    at = self.gen_tgt[g]
                if at != rel.tgt:
                    raise ValueError(f"relation word {word} has wrong target")
        return self

    def word_vertices(self, word, start):
        vs = [start]
        for g in word:
            vs.append(self.gen_tgt[g])
        return vs

    def out_edges(self, x):
        return [g for g in self.generators if self.gen_src[g] == x]


def path_category(X: SimplicialSet) -> PresentedCategory:
    """Presentation of P(X), read off sk_2(X) only."""
    objects = X.vertices()
    generators = X.nondegenerate[1] if X.dim_bound >= 1 else ()
    gen_src = {}
    gen_tgt = {}
    for e in generators:
        fs = X.faces[e]
        gen_src[e] = fs[1].base  # d1 = source
        gen_tgt[e] = fs[0].base  # d0 = target
    relations = []
    if X.dim_bound >= 2:
        for s in X.nondegenerate[2]:
            d0, d1, d2 = X.faces[s]
            lhs = tuple(e.base for e in (d2, d0) if not e.is_degenerate)
            rhs = (d1.base,) if not d1.is_degenerate else ()
            verts = X.vertex_ids(X.expr(s))
            relations.append(Relation(lhs, rhs, verts[0], verts[2]))
    return PresentedCategory(objects, tuple(generators), gen_src, gen_tgt, tuple(relations)).validate()


def is_loop_free(X: SimplicialSet) -> bool:
    """No directed cycle through non-degenerate edges, no self-loop edge."""
    P = path_category(X)
    return _presentation_loop_free(P)


def _presentation_loop_free(P: PresentedCategory) -> bool:
    adj = {x: [] for x in P.objects}
    for g in P.generators:
        if P.gen_src[g] == P.gen_tgt[g]:
            return False
        adj[P.gen_src[g]].append(P.gen_tgt[g])
    state = {x: 0 for x in P.objects}  # 0 unvisited, 1 on stack, 2 done

    def dfs(x):
        state[x] = 1
        for y in adj[x]:
            if state[y] == 1:
                return False
            if state[y] == 0 and not dfs(y):
                return False
        state[x] = 2
        return True

    for x in P.objects:
        if state[x] == 0 and not dfs(x):
            return False
    return True


# -- hom-set tables -----------------------------------------------------------


class _UnionFind:
    def __init__(self, items):
        self.parent = {w: w for w in items}

    def find(self, w):
        p = self.parent
        while p[w] != w:
            p[w] = p[p[w]]
            w = p[w]
        return w

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _word_key(word):
    # shortest, then lexicographic; generator ids within one presentation
    # are homogeneous (ints for complex edges, strings after a JSON round
    # trip), so the raw tuple is comparable
    return (len(word), tuple(word))


@dataclass(frozen=True)
class HomClass:
    rep: tuple
    words: frozenset


@dataclass
class HomEntry:
    src: object
    tgt: object
    classes: tuple[HomClass, ...]
    partial: bool
    _class_of: dict = field(default_factory=dict, repr=False)

    def class_of(self, word):
        return self._class_of[tuple(word)]

    def __len__(self):
        return len(self.classes)


def _close_words(P: PresentedCategory, x, words, max_len=None):
    """Union-find closure of a word set under single relation substitutions.

    Each relation is applied at every position, in both directions; with a
    bound, substitutions whose result exceeds the bound are skipped.  The
    word universe must already be substitution-closed (true for the full
    path set of a DAG, and for the length-bounded walk set).
    """
    universe = set(words)
    uf = _UnionFind(universe)
    rules = []
    for rel in P.relations:
        rules.append((rel.lhs, rel.rhs, rel.src))
        rules.append((rel.rhs, rel.lhs, rel.src))
    for w in universe:
        vs = P.word_vertices(w, x)
        for lhs, rhs, at in rules:
            n = len(lhs)
            if max_len is not None and len(w) - n + len(rhs) > max_len:
                continue
            for i in range(len(w) - n + 1):
                if tuple(w[i : i + n]) != lhs:
                    continue
                if n == 0 and vs[i] != at:
                    continue
                w2 = w[:i] + rhs + w[i + n :]
                if w2 in universe:
                    uf.union(w, w2)
    groups = {}
    for w in universe:
        groups.setdefault(uf.find(w), set()).add(w)
    classes = []
    class_of = {}
    for members in groups.values():
        rep = min(members, key=_word_key)
        classes.append(HomClass(rep, frozenset(members)))
        for w in members:
            class_of[w] = rep
    classes.sort(key=lambda c: _word_key(c.rep))
    return tuple(classes), class_of


@dataclass
class HomSetTable:
    presentation: PresentedCategory
    entries: dict  # (x, y) -> HomEntry
    partial: bool = False

    def entry(self, x, y) -> HomEntry:
        return self.entries[(x, y)]

    def class_count(self, x, y) -> int:
        return len(self.entries[(x, y)].classes)


def hom_sets(P: PresentedCategory) -> HomSetTable:
    """Exact hom-sets of a loop-free presentation.

    Enumerates every generator path per ordered vertex pair (finite by
    acyclicity) and closes under the 2-simplex relations; canonical
    representatives are shortest-then-lexicographic.
    """
    if not _presentation_loop_free(P):
        raise NotLoopFreeError("exact hom-sets need a loop-free complex; use bounded_hom_classes")
    paths: dict = {(x, y): [] for x in P.objects for y in P.objects}

    def extend(x, word, at):
        paths[(x, at)].append(word)
        for g in P.out_edges(at):
            extend(x, word + (g,), P.gen_tgt[g])

    for x in P.objects:
        extend(x, (), x)
    entries = {}
    for (x, y), words in paths.items():
        classes, class_of = _close_words(P, x, words)
        entries[(x, y)] = HomEntry(x, y, classes, False, class_of)
    return HomSetTable(P, entries, partial=False)


def bounded_hom_classes(P: PresentedCategory, x, y, max_len: int) -> HomEntry:
    """Classes among words of length <= max_len; sound but possibly partial.

    The result is flagged partial unless the presentation is loop-free and
    the bound dominates the longest path, in which case it coincides with
    the exact table.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    words = []

    def walk(word, at):
        if at == y:
            words.append(word)
        if len(word) == max_len:
            return
        for g in P.out_edges(at):
            walk(word + (g,), P.gen_tgt[g])

    walk((), x)
    classes, class_of = _close_words(P, x, words, max_len=max_len)
    partial = True
    if _presentation_loop_free(P):
        longest = _longest_path_bound(P)
        partial = max_len < longest
    return HomEntry(x, y, classes, partial, class_of)


def _longest_path_bound(P: PresentedCategory) -> int:
    depth = {}

    def go(v):
        if v in depth:
            return depth[v]
        depth[v] = 0
        best = 0
        for g in P.out_edges(v):
            best = max(best, 1 + go(P.gen_tgt[g]))
        depth[v] = best
        return best

    return max((go(v) for v in P.objects), default=0)


# -- counit P(BC) -> C ---------------------------------------------------------


@dataclass
class CounitReport:
    ok: bool
    inconclusive: bool
    reason: str | None
    eps_generators: dict  # nerve edge id -> arrow of C
    section_arrows: dict  # arrow of C -> word in the presentation


def counit_check(C: FiniteCategory, dim_bound: int = 2) -> CounitReport:
    """Verify that the evaluation functor P(BC) -> C is an isomorphism.

    Materializes the quotient through bounded_hom_classes with bound
    |arrows| + 1 and checks that classes biject with hom-sets of C; with
    dim_bound < 2 the relations are not all visible and the verdict is
    inconclusive.
    """
    from .cat import nerve  # local import keeps module dependencies one-way

    if dim_bound < 2:
        return CounitReport(False, True, "dim_bound < 2: relations not materialized", {}, {})
    N = nerve(C, 2)
    P = path_category(N)
    label_of = {s: N.labels[s] for s in N.cells()}
    eps_obj = {v: label_of[v][1] for v in P.objects}
    eps_gen = {e: label_of[e][1][0] for e in P.generators}
    section = {}
    gen_of_arrow = {label_of[e][1][0]: e for e in P.generators}
    for f in C.arrows:
        section[f] = () if C.is_identity(f) else (gen_of_arrow[f],)
    bound = len(C.arrows) + 1

    def eps_word(word, at):
        return C.compose_word([eps_gen[g] for g in word], at=eps_obj[at])

    for x in P.objects:
        for y in P.objects:
            entry = bounded_hom_classes(P, x, y, bound)
            arrows = C.hom(eps_obj[x], eps_obj[y])
            images = [eps_word(c.rep, x) for c in entry.classes]
            if len(set(images)) != len(images):
                return CounitReport(False, False, f"eps not injective on hom({x},{y})", eps_gen, section)
            if len(entry.classes) != len(arrows):
                # classes can only over-count when merges were missed
                return CounitReport(
                    False, True, f"class count {len(entry.classes)} != {len(arrows)} at ({x},{y})",
                    eps_gen, section,
                )
            # section followed by eps must land back in the same class
            for c in entry.classes:
                arrow = eps_word(c.rep, x)
                if entry.class_of(section[arrow]) != c.rep:
                    return CounitReport(False, False, f"section misses class {c.rep}", eps_gen, section)
    return CounitReport(True, False, None, eps_gen, section)


# -- product comparison ----------------------------------------------------------


def product_comparison(X: SimplicialSet, Y: SimplicialSet, cell_limit: int = 400) -> bool:
    """P(X x Y) -> P(X) x P(Y) is bijective on objects and all hom-sets."""
    from .simplicial import product

    if not is_loop_free(X) or not is_loop_free(Y):
        raise NotLoopFreeError("product comparison needs loop-free factors")
    prod = product(X, Y, dim_bound=2)
    if prod.complex.n_cells > cell_limit:
        raise ValueError(f"product too large ({prod.complex.n_cells} cells)")
    PXY = path_category(prod.complex)
    TX = hom_sets(path_category(X))
    TY = hom_sets(path_category(Y))
    TXY = hom_sets(PXY)
    vertex_pair = {v: (prod.pairs[v][0].base, prod.pairs[v][1].base) for v in PXY.objects}

    def project(word, side):
        out = []
        for e in word:
            comp = prod.pairs[e][side]
            if not comp.is_degenerate:
                out.append(comp.base)
        return tuple(out)

    for a in PXY.objects:
        for b in PXY.objects:
            (x1, y1), (x2, y2) = vertex_pair[a], vertex_pair[b]
            exy = TXY.entry(a, b)
            ex = TX.entry(x1, x2)
            ey = TY.entry(y1, y2)
            if len(exy) != len(ex) * len(ey):
                return False
            seen = set()
            for c in exy.classes:
                pair = (ex.class_of(project(c.rep, 0)), ey.class_of(project(c.rep, 1)))
                if pair in seen:
                    return False
                seen.add(pair)
    return True


# -- homotopies to natural transformations ----------------------------------------


@dataclass
class TransformationData:
    components: dict  # vertex of X -> edge expr of Y (image of the cylinder edge)
    square_witnesses: dict  # generator edge of X -> (triangle expr, triangle expr)
    natural: bool


def homotopy_to_nat_transformation(h: SimplicialMap, prod) -> TransformationData:
    """Extract the transformation induced by a homotopy h : X x Delta^1 -> Y.

    `prod` is the ProductComplex for X x Delta^1 that h is defined on.
    The component at a vertex x is the image of the edge (x,0) -> (x,1);
    each naturality square is witnessed by the images of the two triangles
    of the prism over a generator, which share the diagonal, so the check
    is a direct boundary verification rather than a word-problem call.
    """
    X = prod.left
    interval = prod.right
    (edge01,) = interval.nondegenerate[1]
    Y = h.target
    components = {}
    for x in X.vertices():
        cyl_edge = prod.pair_expr(SimplexExpr((0,), x, 1), interval.expr(edge01))
        components[x] = h.push(cyl_edge)
    witnesses = {}
    natural = True
    for e in X.nondegenerate[1]:
        ee = X.expr(e)
        bottom = prod.pair_expr(SimplexExpr((1,), e, 2), SimplexExpr((0,), edge01, 2))
        top = prod.pair_expr(SimplexExpr((0,), e, 2), SimplexExpr((1,), edge01, 2))
        t_bottom = h.push(bottom)
        t_top = h.push(top)
        # both triangles share the diagonal as their d1 face
        if Y.face(t_bottom, 1) != Y.face(t_top, 1):
            natural = False
        src, tgt = X.vertex_ids(ee)
        if Y.face(t_bottom, 0) != components[tgt] or Y.face(t_top, 2) != components[src]:
            natural = False
        witnesses[e] = (t_bottom, t_top)
    return TransformationData(components, witnesses, natural)
