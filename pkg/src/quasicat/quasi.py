"""Horn filling, quasi-category certification, cores, and homotopy categories.

Certification is finite because it is only claimed for complexes carrying a
coskeletal bound: in a d-coskeletal complex an inner horn of dimension
>= d+2 determines its missing face and filler uniquely, so checking
dimensions 2..d+1 suffices.  Horns one dimension above the stored
truncation are decided by a shell criterion.  The verdict is never a false
certificate: a missing flag, or a dim_bound below the declared coskeletal
bound, yields "inconclusive".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cat import FiniteCategory
from .simplicial import (
    SimplexExpr,
    SimplicialError,
    SimplicialMap,
    SimplicialSet,
    SizeLimitError,
    make_subcomplex,
    product,
)


class CertificationError(ValueError):
    pass


@dataclass(frozen=True)
class HornMap:
    """A map Lambda^n_k -> X, stored on the horn's top faces.

    `top[i]` is the image of the face d^i of Delta^n for i != k (entry k is
    None); images of lower simplices are determined by restriction.
    """

    n: int
    k: int
    top: tuple

    @property
    def is_inner(self) -> bool:
        return 0 < self.k < self.n

    def face_image(self, X: SimplicialSet, vs: tuple[int, ...]) -> SimplexExpr:
        """Image of the horn simplex with vertex set vs (proper, not the missing face)."""
        for i in range(self.n + 1):
            if i != self.k and i not in vs:
                positions = tuple(v if v < i else v - 1 for v in vs)
                return X.restrict(self.top[i], positions)
        raise SimplicialError(f"{vs} is not a simplex of the horn")

    def validate(self, X: SimplicialSet) -> "HornMap":
        if not 0 <= self.k <= self.n or self.n < 2:
            raise SimplicialError("bad horn shape")
        for i, e in enumerate(self.top):
            if i == self.k:
                if e is not None:
                    raise SimplicialError("slot k must be empty")
            elif e is None or e.dim != self.n - 1:
                raise SimplicialError(f"face {i} missing or of wrong dimension")
        for j in range(self.n + 1):
            for i in range(j):
                if i == self.k or j == self.k:
                    continue
                if X.face(self.top[j], i) != X.face(self.top[i], j - 1):
                    raise SimplicialError(f"horn faces disagree at ({i},{j})")
        return self


def enumerate_horns(X: SimplicialSet, n: int, k: int) -> list[HornMap]:
    """All simplicial maps Lambda^n_k -> X, by backtracking over face images.

    Faces are assigned in index order with an index keyed on the face
    values forced by earlier assignments, so the search is output-sensitive.
    """
    if n < 2:
        raise SimplicialError("horns need n >= 2")
    slots = [i for i in range(n + 1) if i != k]
    exprs = X.all_exprs(n - 1)
    rows = {e: tuple(X.face(e, t) for t in range(n)) for e in exprs}
    # index[j] maps the tuple of faces shared with earlier slots to candidates
    index: list[dict] = []
    for pos in range(len(slots)):
        earlier = slots[:pos]
        idx: dict = {}
        for e in exprs:
            key = tuple(rows[e][i] for i in earlier)
            idx.setdefault(key, []).append(e)
        index.append(idx)
    results: list[HornMap] = []
    chosen: dict[int, SimplexExpr] = {}

    def assign(pos: int):
        if pos == len(slots):
            top = tuple(chosen.get(i) for i in range(n + 1))
            results.append(HornMap(n, k, top))
            return
        j = slots[pos]
        # slots ascend, so every earlier index i satisfies i < j and the
        # shared face of d^i and d^j sits at position j-1 of the former
        key = tuple(X.face(chosen[i], j - 1) for i in slots[:pos])
        for e in index[pos].get(key, ()):
            chosen[j] = e
            assign(pos + 1)
            del chosen[j]

    assign(0)
    return results


def find_filler(X: SimplicialSet, h: HornMap) -> SimplexExpr | None:
    """An n-expr of X restricting to the horn, or None (search is exhaustive
    through all n-dimensional expressions, in canonical order)."""
    key = tuple(h.top[i] for i in range(h.n + 1) if i != h.k)
    return X.filler_lookup(h.n, h.k, key)


@dataclass
class CertReport:
    verdict: str  # "quasi-category" | "counterexample" | "inconclusive"
    coskeletal_at: int | None
    certified_up_to: int | None
    counterexample: HornMap | None = None
    reason: str | None = None

    @property
    def is_quasi(self) -> bool:
        return self.verdict == "quasi-category"


def _has_shell_filler(X: SimplicialSet, h: HornMap) -> bool:
    """Filler existence for a horn one dimension above the stored truncation.

    For a coskeletal_at = dim_bound complex, a (dim_bound+1)-simplex is
    determined by a compatible boundary, so the horn fills iff some stored
    expr can serve as the missing k-th face.
    """
    d = h.n - 1
    needed = tuple(
        X.face(h.top[m], h.k - 1) if m < h.k else X.face(h.top[m + 1], h.k)
        for m in range(d + 1)
    )
    return X.filler_lookup(d, None, needed) is not None


def certify_quasi_category(X: SimplicialSet) -> CertReport:
    """Exhaustive inner-horn check through dimension coskeletal_at + 1.

    Above that dimension fillers exist automatically for a coskeletal
    complex, so the verdict is complete.  Horns one dimension above the
    stored truncation are decided by the shell criterion; a missing flag,
    or dim_bound below the flag, yields an inconclusive verdict rather
    than a false certificate.
    """
    d = X.coskeletal_at
    if d is None:
        return CertReport("inconclusive", None, None, reason="no coskeletal bound declared")
    if X.dim_bound < d:
        return CertReport(
            "inconclusive", d, None,
            reason=f"dim_bound {X.dim_bound} below coskeletal bound {d}",
        )
    top = d + 1
    for n in range(2, top + 1):
        for k in range(1, n):
            for h in enumerate_horns(X, n, k):
                if n <= X.dim_bound:
                    filled = find_filler(X, h) is not None
                else:
                    filled = _has_shell_filler(X, h)
                if not filled:
                    return CertReport("counterexample", d, n - 1, counterexample=h)
    return CertReport("quasi-category", d, top)


# -- quasi-isomorphisms ----------------------------------------------------------


@dataclass(frozen=True)
class QuasiIsoWitness:
    alpha: SimplexExpr
    beta: SimplexExpr
    sigma: SimplexExpr  # boundary (beta, s0 x, alpha)
    sigma_prime: SimplexExpr  # boundary (alpha, s0 y, beta)


def _edge_exprs(X: SimplicialSet):
    return X.all_exprs(1)


def _two_simplex_index(X: SimplicialSet):
    idx = {}
    for s in X.all_exprs(2):
        key = (X.face(s, 0), X.face(s, 1), X.face(s, 2))
        idx.setdefault(key, s)
    return idx


def quasi_iso_edges(X: SimplicialSet, report: CertReport | None = None) -> dict[SimplexExpr, QuasiIsoWitness]:
    """Edges with a two-sided inverse witnessed by a pair of 2-simplices.

    Only defined on certified quasi-categories, where witness existence
    agrees with invertibility in the path category.
    """
    if report is None:
        report = certify_quasi_category(X)
    if not report.is_quasi:
        raise CertificationError(f"quasi_iso_edges needs a certified quasi-category ({report.verdict})")
    idx = _two_simplex_index(X)
    out: dict[SimplexExpr, QuasiIsoWitness] = {}
    edges = _edge_exprs(X)
    by_endpoints: dict = {}
    for e in edges:
        vs = X.vertex_ids(e)
        by_endpoints.setdefault(vs, []).append(e)
    for alpha in edges:
        x, y = X.vertex_ids(alpha)
        sx = SimplexExpr((0,), x, 1)
        sy = SimplexExpr((0,), y, 1)
        for beta in by_endpoints.get((y, x), ()):
            sigma = idx.get((beta, sx, alpha))
            if sigma is None:
                continue
            sigma_prime = idx.get((alpha, sy, beta))
            if sigma_prime is None:
                continue
            out[alpha] = QuasiIsoWitness(alpha, beta, sigma, sigma_prime)
            break
    return out


def core(X: SimplicialSet, report: CertReport | None = None):
    """Maximal subcomplex all of whose edges are quasi-isomorphisms.

    Keeps a simplex iff every composite Delta^1 -> Delta^n -> X over a
    monotone injection lands in the quasi-iso edges; the result is the
    maximal Kan subcomplex of a certified quasi-category.
    """
    if report is None:
        report = certify_quasi_category(X)
    witnesses = quasi_iso_edges(X, report)
    good_edges = {e.base for e in witnesses if not e.is_degenerate}
    keep = []
    for s in X.cells():
        d = X.dim_of[s]
        e = X.expr(s)
        ok = True
        for p in range(d + 1):
            for q in range(p + 1, d + 1):
                edge = X.edge_at(e, p, q)
                if not edge.is_degenerate and edge.base not in good_edges:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            keep.append(s)
    sub, incl = make_subcomplex(X, keep)
    flag = max(X.coskeletal_at, 1) if X.coskeletal_at is not None else None
    sub = SimplicialSet(
        sub.dim_bound,
        [list(level) for level in sub.nondegenerate],
        sub.faces,
        flag,
        sub.labels,
        check=False,
    )
    return sub, SimplicialMap(sub, X, incl.assignment)


# -- homotopy category -------------------------------------------------------------


def right_homotopy_classes(X: SimplicialSet):
    """Partition of edge exprs under the symmetrized right-homotopy relation."""
    idx = _two_simplex_index(X)
    edges = _edge_exprs(X)
    parent = {e: e for e in edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    by_endpoints: dict = {}
    for e in edges:
        by_endpoints.setdefault(X.vertex_ids(e), []).append(e)
    for (x, y), group in by_endpoints.items():
        sy = SimplexExpr((0,), y, 1)
        for alpha in group:
            for beta in group:
                if idx.get((sy, beta, alpha)) is not None:
                    union(alpha, beta)
    classes: dict = {}
    for e in edges:
        classes.setdefault(find(e), []).append(e)
    return classes, find


def has_right_homotopy(X, alpha, beta) -> bool:
    """Is there a 2-simplex with boundary (s0 y, beta, alpha)?"""
    y = X.vertex_ids(alpha)[1]
    return _two_simplex_index(X).get((SimplexExpr((0,), y, 1), beta, alpha)) is not None


def has_left_homotopy(X, alpha, beta) -> bool:
    """Is there a 2-simplex with boundary (alpha, beta, s0 x)?"""
    x = X.vertex_ids(alpha)[0]
    return _two_simplex_index(X).get((alpha, beta, SimplexExpr((0,), x, 1))) is not None


def _edge_sort_key(e: SimplexExpr):
    return (len(e.word), e.base, e.word)


@dataclass
class HoData:
    category: FiniteCategory
    edge_class: dict = field(repr=False)  # edge expr -> homotopy class rep
    arrow_of_rep: dict = field(repr=False)
    rep_of_arrow: dict = field(repr=False)


def ho_category_data(X: SimplicialSet, report: CertReport | None = None) -> HoData:
    """Homotopy category with its edge-class bookkeeping.

    Objects are vertices, morphisms homotopy classes of edges, composition
    via a chosen inner-horn filler; well-definedness of the choice is a
    tested property, not an assumption here.  Validation of the resulting
    composition table is exhaustive.
    """
    if report is None:
        report = certify_quasi_category(X)
    if not report.is_quasi:
        raise CertificationError(f"ho_category needs a certified quasi-category ({report.verdict})")
    classes, _find = right_homotopy_classes(X)
    rep_of = {e: min(members, key=_edge_sort_key) for members in classes.values() for e in members}
    reps = sorted(set(rep_of.values()), key=_edge_sort_key)
    objects = X.vertices()
    arrows = tuple(("cls", r.word, r.base) for r in reps)
    arrow_of_rep = dict(zip(reps, arrows))
    src = {}
    tgt = {}
    for r in reps:
        x, y = X.vertex_ids(r)
        src[arrow_of_rep[r]] = x
        tgt[arrow_of_rep[r]] = y
    identity = {x: arrow_of_rep[rep_of[SimplexExpr((0,), x, 1)]] for x in objects}
    compose = {}
    for rb in reps:
        for ra in reps:
            if X.vertex_ids(ra)[1] != X.vertex_ids(rb)[0]:
                continue
            h = HornMap(2, 1, (rb, None, ra))
            filler = find_filler(X, h)
            if filler is None:
                raise CertificationError("missing inner-horn filler during ho composition")
            composite = X.face(filler, 1)
            compose[(arrow_of_rep[rb], arrow_of_rep[ra])] = arrow_of_rep[rep_of[composite]]
    cat = FiniteCategory(objects, arrows, src, tgt, identity, compose, name="ho").validate()
    return HoData(cat, rep_of, arrow_of_rep, dict(zip(arrows, reps)))


def ho_category(X: SimplicialSet, report: CertReport | None = None) -> FiniteCategory:
    return ho_category_data(X, report).category


# -- function complexes --------------------------------------------------------------


def _map_key(assignment: dict) -> tuple:
    return tuple(sorted(assignment.items(), key=lambda kv: kv[0]))


def _enumerate_maps(P: SimplicialSet, X: SimplicialSet) -> list[dict]:
    """All simplicial maps P -> X as assignment dicts (backtracking by cell)."""
    order = [s for level in P.nondegenerate for s in level]
    results: list[dict] = []
    assignment: dict[int, SimplexExpr] = {}

    def push(expr: SimplexExpr) -> SimplexExpr:
        from .simplicial import degeneracy_expr

        res = assignment[expr.base]
        for j in reversed(expr.word):
            res = degeneracy_expr(res, j)
        return res

    def assign(i: int):
        if i == len(order):
            results.append(dict(assignment))
            return
        s = order[i]
        d = P.dim_of[s]
        if d == 0:
            candidates = [X.expr(v) for v in X.vertices()]
        else:
            want = tuple(push(e) for e in P.faces[s])
            candidates = [
                e for e in X.all_exprs(d)
                if tuple(X.face(e, t) for t in range(d + 1)) == want
            ]
        for e in candidates:
            assignment[s] = e
            assign(i + 1)
            del assignment[s]

    assign(0)
    return results


def function_complex(K: SimplicialSet, X: SimplicialSet, dim_bound: int, limit: int = 24) -> SimplicialSet:
    """hom(K, X) through dimension dim_bound: n-simplices are maps
    K x Delta^n -> X, with faces and degeneracies by precomposition."""
    from .simplicial import identity_map, product_map, standard_simplex

    if K.n_cells > limit:
        raise SizeLimitError(f"function complex needs |K| <= {limit}")
    prods = [product(K, standard_simplex(n)) for n in range(dim_bound + 1)]
    simplex_maps: list[list[dict]] = [_enumerate_maps(p.complex, X) for p in prods]

    def precompose(f: dict, n_from: int, delta_map: SimplicialMap) -> dict:
        # delta_map: Delta^{n_from} -> Delta^{n_to}; pull f along 1 x delta
        pm = product_map(prods[n_from], prods[delta_map.target.dim], identity_map(K), delta_map)
        out = {}
        for s in prods[n_from].complex.cells():
            img = pm.assignment[s]
            res = f[img.base]
            from .simplicial import degeneracy_expr

            for j in reversed(img.word):
                res = degeneracy_expr(res, j)
            out[s] = res
        return out

    def delta_face(n: int, i: int) -> SimplicialMap:
        D_from, D_to = standard_simplex(n - 1), standard_simplex(n)
        keep = tuple(v for v in range(n + 1) if v != i)
        ids_to = {D_to.labels[s]: s for s in D_to.cells()}
        return SimplicialMap(
            D_from, D_to,
            {
                s: D_to.expr(ids_to[tuple(keep[v] for v in D_from.labels[s])])
                for s in D_from.cells()
            },
        )

    def delta_degeneracy(n: int, j: int) -> SimplicialMap:
        # surjection Delta^{n+1} -> Delta^n repeating vertex j
        from .simplicial import degeneracy_expr

        D_from, D_to = standard_simplex(n + 1), standard_simplex(n)
        collapse = [v if v <= j else v - 1 for v in range(n + 2)]
        ids_to = {D_to.labels[s]: s for s in D_to.cells()}

        def image(vs):
            out = tuple(collapse[v] for v in vs)
            dedup = tuple(sorted(set(out)))
            pos_of = {val: i for i, val in enumerate(dedup)}
            expr = D_to.expr(ids_to[dedup])
            # duplicates, rightmost first: each inserts a degeneracy at the
            # duplicated vertex's position in the base
            for p in range(len(out) - 1, 0, -1):
                if out[p] == out[p - 1]:
                    expr = degeneracy_expr(expr, pos_of[out[p]])
            return expr

        return SimplicialMap(D_from, D_to, {s: image(D_from.labels[s]) for s in D_from.cells()})

    # identify non-degenerate n-simplices: maps not of the form g . (1 x s_j)
    nondeg_maps: list[list[dict]] = [[] for _ in range(dim_bound + 1)]
    nondeg_ids: list[dict] = [{} for _ in range(dim_bound + 1)]
    nondeg: list[list[int]] = [[] for _ in range(dim_bound + 1)]
    labels = {}
    next_id = 0

    # degeneracy detection: f is s_j(g) iff precomposing with the collapse
    # reproduces f, where g = f . (1 x d^{j})
    def im_sj(n: int, f: dict, j: int):
        g = precompose(f, n - 1, delta_face(n, j))
        fj = precompose(g, n, delta_degeneracy(n - 1, j))
        return g if _map_key(fj) == _map_key(f) else None

    for n in range(dim_bound + 1):
        for f in simplex_maps[n]:
            if n >= 1 and any(im_sj(n, f, j) is not None for j in range(n)):
                continue
            k = _map_key(f)
            nondeg_ids[n][k] = next_id
            nondeg[n].append(next_id)
            nondeg_maps[n].append(f)
            labels[next_id] = ("map", n, k)
            next_id += 1

    def normalize(n: int, f: dict) -> SimplexExpr:
        word = []
        while n >= 1:
            hit = None
            for j in range(n - 1, -1, -1):
                g = im_sj(n, f, j)
                if g is not None:
                    hit = (j, g)
                    break
            if hit is None:
                break
            word.append(hit[0])
            f = hit[1]
            n -= 1
        from .simplicial import degeneracy_expr

        res = SimplexExpr((), nondeg_ids[n][_map_key(f)], n)
        for j in reversed(word):
            res = degeneracy_expr(res, j)
        return res

    faces = {}
    for n in range(1, dim_bound + 1):
        for f in nondeg_maps[n]:
            s = nondeg_ids[n][_map_key(f)]
            faces[s] = tuple(
                normalize(n - 1, precompose(f, n - 1, delta_face(n, i))) for i in range(n + 1)
            )
    return SimplicialSet(dim_bound, nondeg, faces, X.coskeletal_at, labels, check=False)


def tau0(K: SimplicialSet, X: SimplicialSet, limit: int = 24):
    """Isomorphism classes of objects of P(hom(K, X)), via quasi-iso edges
    of the function complex."""
    d = X.coskeletal_at
    if d is None:
        raise CertificationError("tau0 needs a coskeletal bound on X")
    H = function_complex(K, X, d + 1, limit=limit)
    report = certify_quasi_category(H)
    witnesses = quasi_iso_edges(H, report)
    parent = {v: v for v in H.vertices()}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in witnesses:
        if not e.is_degenerate:
            x, y = H.vertex_ids(e)
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
    classes: dict = {}
    for v in H.vertices():
        classes.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(members)) for members in classes.values())


# -- one saturation stage ---------------------------------------------------------


@dataclass
class SaturationResult:
    complex: SimplicialSet
    inclusion: SimplicialMap
    horns_attached: int
    cells_added: int


def saturation_step(X: SimplicialSet, max_dim: int) -> SaturationResult:
    """One stage of the inner-horn saturation: attach a fresh n-simplex
    along every inner horn map of X in dimensions 2..max_dim, fillable or
    not, mirroring the pushout construction exactly."""
    nondeg = [list(level) for level in X.nondegenerate]
    while len(nondeg) <= max(max_dim, X.dim_bound):
        nondeg.append([])
    faces = dict(X.faces)
    labels = dict(X.labels)
    next_id = max(X.dim_of, default=-1) + 1
    horn_count = 0
    added = 0
    for n in range(2, max_dim + 1):
        for k in range(1, n):
            for h in enumerate_horns(X, n, k):
                horn_count += 1
                missing_vs = tuple(v for v in range(n + 1) if v != k)
                face_cell = next_id
                next_id += 1
                faces[face_cell] = tuple(
                    h.face_image(X, missing_vs[:i] + missing_vs[i + 1 :])
                    for i in range(n)
                )
                nondeg[n - 1].append(face_cell)
                labels[face_cell] = ("attached-face", n, k, horn_count)
                top_cell = next_id
                next_id += 1
                top_faces = list(h.top)
                top_faces[k] = SimplexExpr((), face_cell, n - 1)
                faces[top_cell] = tuple(top_faces)
                nondeg[n].append(top_cell)
                labels[top_cell] = ("attached-cell", n, k, horn_count)
                added += 2
    Y = SimplicialSet(max(max_dim, X.dim_bound), nondeg, faces, None, labels, check=False)
    incl = SimplicialMap(X, Y, {s: SimplexExpr((), s, X.dim_of[s]) for s in X.cells()})
    return SaturationResult(Y, incl, horn_count, added)
