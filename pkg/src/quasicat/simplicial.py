"""Finite simplicial sets in Eilenberg-Zilber normal form.

A complex stores only its non-degenerate simplices, one integer id each,
together with a face table.  Every simplex (degenerate or not) is written
uniquely as a degeneracy word applied to a non-degenerate base, the word
having strictly decreasing indices; `face` and `degeneracy` rewrite such
expressions back into normal form using the simplicial identities

    d_i s_j = s_{j-1} d_i   (i < j)
    d_i s_j = id            (i = j, j+1)
    d_i s_j = s_j d_{i-1}   (i > j+1)
    s_i s_j = s_{j+1} s_i   (i <= j)

Construction order fixes the ids, so equal inputs always produce the same
complex; all values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

GLOBAL_DIM_BOUND = 12


class SimplicialError(ValueError):
    pass


class SizeLimitError(SimplicialError):
    pass


@dataclass(frozen=True)
class SimplexExpr:
    """A possibly-degenerate simplex: degeneracy word applied to a base id."""

    word: tuple[int, ...]
    base: int
    dim: int

    def __post_init__(self):
        if any(a <= b for a, b in zip(self.word, self.word[1:])):
            raise SimplicialError(f"degeneracy word not strictly decreasing: {self.word}")

    @property
    def is_degenerate(self) -> bool:
        return bool(self.word)


def degeneracy_expr(expr: SimplexExpr, i: int) -> SimplexExpr:
    """Apply s_i to an expression, renormalizing the word.

    Pure word rewriting: pushes s_i inward past larger indices with
    s_i s_j = s_{j+1} s_i until it can be inserted keeping the word
    strictly decreasing.
    """
    if not 0 <= i <= expr.dim:
        raise SimplicialError(f"degeneracy index {i} out of range for dim {expr.dim}")
    out = []
    word = expr.word
    for pos, j in enumerate(word):
        if i > j:
            return SimplexExpr(tuple(out) + (i,) + word[pos:], expr.base, expr.dim + 1)
        out.append(j + 1)
    return SimplexExpr(tuple(out) + (i,), expr.base, expr.dim + 1)


class SimplicialSet:
    """Finite dimension-bounded simplicial set with stable integer ids.

    `nondegenerate[d]` lists the ids of the non-degenerate d-simplices,
    `faces[s]` gives, for a simplex of dimension n >= 1, the tuple
    (d_0 s, ..., d_n s) of SimplexExprs.  `coskeletal_at = d` declares
    that the complex represents the d-coskeletal object generated by the
    stored truncation; consumers that rely on the flag (certification)
    document how they use it.
    """

    def __init__(
        self,
        dim_bound: int,
        nondegenerate: list[list[int]],
        faces: dict[int, tuple[SimplexExpr, ...]],
        coskeletal_at: int | None = None,
        labels: dict[int, object] | None = None,
        check: bool = True,
    ):
        if dim_bound < 0:
            raise SimplicialError("dim_bound must be >= 0")
        while len(nondegenerate) <= dim_bound:
            nondegenerate.append([])
        self.dim_bound = dim_bound
        self.nondegenerate = tuple(tuple(level) for level in nondegenerate[: dim_bound + 1])
        self.faces = dict(faces)
        self.coskeletal_at = coskeletal_at
        self.labels = dict(labels or {})
        self.dim_of = {}
        for d, level in enumerate(self.nondegenerate):
            for s in level:
                if s in self.dim_of:
                    raise SimplicialError(f"duplicate simplex id {s}")
                self.dim_of[s] = d
        self._vertex_cache: dict[int, tuple[int, ...]] = {}
        self._expr_cache: dict[int, tuple[SimplexExpr, ...]] = {}
        self._filler_index: dict = {}
        if check:
            self.validate()

    # -- basic queries ---------------------------------------------------

    @property
    def dim(self) -> int:
        """Largest dimension carrying a non-degenerate simplex (-1 if empty)."""
        for d in range(self.dim_bound, -1, -1):
            if self.nondegenerate[d]:
                return d
        return -1

    def counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.nondegenerate)

    def cells(self):
        for level in self.nondegenerate:
            yield from level

    @property
    def n_cells(self) -> int:
        return sum(len(level) for level in self.nondegenerate)

    def vertices(self) -> tuple[int, ...]:
        return self.nondegenerate[0]

    def expr(self, s: int) -> SimplexExpr:
        return SimplexExpr((), s, self.dim_of[s])

    def __repr__(self):
        flag = f", coskeletal_at={self.coskeletal_at}" if self.coskeletal_at is not None else ""
        return f"SimplicialSet(counts={self.counts()}{flag})"

    # -- face/degeneracy calculus ----------------------------------------

    def face(self, expr: SimplexExpr, i: int) -> SimplexExpr:
        """d_i of an expression, in normal form."""
        if expr.dim < 1 or not 0 <= i <= expr.dim:
            raise SimplicialError(f"face index {i} out of range for dim {expr.dim}")
        out = []
        word = expr.word
        for pos, j in enumerate(word):
            if i < j:
                out.append(j - 1)
            elif i <= j + 1:
                res = SimplexExpr(word[pos + 1 :], expr.base, self.dim_of[expr.base] + len(word) - pos - 1)
                break
            else:
                out.append(j)
                i -= 1
        else:
            res = self.faces[expr.base][i]
        for j in reversed(out):
            res = degeneracy_expr(res, j)
        return res

    def vertex_ids(self, expr: SimplexExpr) -> tuple[int, ...]:
        """Vertex ids of an expression, in simplex order (length dim+1)."""
        base = expr.base
        vs = self._vertex_cache.get(base)
        if vs is None:
            d = self.dim_of[base]
            if d == 0:
                vs = (base,)
            else:
                rest = self.vertex_ids(self.faces[base][0])
                first = self.vertex_ids(self.faces[base][d])[0]
                vs = (first,) + rest
            self._vertex_cache[base] = vs
        for j in reversed(expr.word):
            vs = vs[: j + 1] + (vs[j],) + vs[j + 1 :]
        return vs

    def restrict(self, expr: SimplexExpr, positions: tuple[int, ...]) -> SimplexExpr:
        """Sub-simplex spanned by the given (strictly increasing) positions."""
        res = expr
        for p in range(expr.dim, -1, -1):
            if p not in positions:
                res = self.face(res, p)
        return res

    def edge_at(self, expr: SimplexExpr, p: int, q: int) -> SimplexExpr:
        return self.restrict(expr, (p, q))

    def all_exprs(self, d: int) -> tuple[SimplexExpr, ...]:
        """Every d-dimensional expression (non-degenerate first, then by base/word)."""
        cached = self._expr_cache.get(d)
        if cached is not None:
            return cached
        out = [self.expr(s) for s in self.nondegenerate[d]] if d <= self.dim_bound else []
        for p in range(min(d - 1, self.dim_bound), -1, -1):
            for s in self.nondegenerate[p]:
                for w in combinations(range(d - 1, -1, -1), d - p):
                    out.append(SimplexExpr(w, s, d))
        result = tuple(out)
        self._expr_cache[d] = result
        return result

    # -- validation --------------------------------------------------------

    def ensure_validated(self):
        """Validate once; later calls are free (values are immutable)."""
        if not getattr(self, "_validated", False):
            self.validate()
            self._validated = True
        return self

    def validate(self):
        """Exhaustive well-formedness check: face targets and d_i d_j identities."""
        for d, level in enumerate(self.nondegenerate):
            for s in level:
                if d == 0:
                    if s in self.faces and self.faces[s]:
                        raise SimplicialError(f"vertex {s} has faces")
                    continue
                fs = self.faces.get(s)
                if fs is None or len(fs) != d + 1:
                    raise SimplicialError(f"simplex {s} needs {d + 1} faces")
                for e in fs:
                    if e.base not in self.dim_of:
                        raise SimplicialError(f"face of {s} has unknown base {e.base}")
                    if self.dim_of[e.base] + len(e.word) != d - 1 or e.dim != d - 1:
                        raise SimplicialError(f"face of {s} has wrong dimension")
        for d, level in enumerate(self.nondegenerate):
            if d < 2:
                continue
            for s in level:
                e = self.expr(s)
                for j in range(1, d + 1):
                    dj = self.face(e, j)
                    for i in range(j):
                        if self.face(dj, i) != self.face(self.face(e, i), j - 1):
                            raise SimplicialError(f"simplicial identity fails at {s}, (i,j)=({i},{j})")

    # -- filler index (used by horn filling) -------------------------------

    def filler_lookup(self, n: int, k: int | None, key: tuple) -> SimplexExpr | None:
        """First n-expr whose faces away from position k match `key`
        (k = None matches against the full face vector)."""
        idx = self._filler_index.get((n, k))
        if idx is None:
            idx = {}
            for e in self.all_exprs(n):
                fkey = tuple(self.face(e, i) for i in range(n + 1) if k is None or i != k)
                idx.setdefault(fkey, e)
            self._filler_index[(n, k)] = idx
        return idx.get(key)


@dataclass(frozen=True)
class SimplicialMap:
    """Simplicial map given on non-degenerate simplices of the source."""

    source: SimplicialSet
    target: SimplicialSet
    assignment: dict[int, SimplexExpr] = field(compare=False)

    def push(self, expr: SimplexExpr) -> SimplexExpr:
        res = self.assignment[expr.base]
        for j in reversed(expr.word):
            res = degeneracy_expr(res, j)
        return res

    def validate(self):
        for s, img in self.assignment.items():
            if img.dim != self.source.dim_of[s]:
                raise SimplicialError(f"map changes dimension at {s}")
        for d in range(1, self.source.dim_bound + 1):
            for s in self.source.nondegenerate[d]:
                e = self.source.expr(s)
                img = self.assignment[s]
                for i in range(d + 1):
                    if self.target.face(img, i) != self.push(self.source.face(e, i)):
                        raise SimplicialError(f"map does not commute with d_{i} at {s}")
        return self

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """self after other (other.target must be self.source)."""
        if other.target is not self.source:
            raise SimplicialError("maps not composable")
        return SimplicialMap(
            other.source,
            self.target,
            {s: self.push(img) for s, img in other.assignment.items()},
        )


# -- standard complexes ----------------------------------------------------


def empty_complex() -> SimplicialSet:
    return SimplicialSet(0, [[]], {})


def _subsets_complex(n: int, keep, coskeletal_at: int | None) -> SimplicialSet:
    """Complex whose cells are the vertex subsets of {0..n} accepted by `keep`."""
    ids: dict[tuple[int, ...], int] = {}
    nondeg: list[list[int]] = [[] for _ in range(n + 1)]
    labels: dict[int, object] = {}
    next_id = 0
    for d in range(n + 1):
        for vs in combinations(range(n + 1), d + 1):
            if keep(vs):
                ids[vs] = next_id
                nondeg[d].append(next_id)
                labels[next_id] = vs
                next_id += 1
    faces = {}
    for vs, s in ids.items():
        d = len(vs) - 1
        if d >= 1:
            faces[s] = tuple(
                SimplexExpr((), ids[vs[:i] + vs[i + 1 :]], d - 1) for i in range(d + 1)
            )
    return SimplicialSet(n if n >= 0 else 0, nondeg, faces, coskeletal_at, labels)


@lru_cache(maxsize=None)
def standard_simplex(n: int) -> SimplicialSet:
    # memoized: complexes are immutable, and callers rely on a single
    # Delta^n instance so that maps into it compose by identity
    return _subsets_complex(n, lambda vs: True, coskeletal_at=min(n, 1))


def build_standard(kind: str, n: int, k: int | None = None):
    """Delta^n, its boundary, or the horn Lambda^n_k.

    Returns the complex for `simplex`, and (complex, inclusion into Delta^n)
    for `boundary` and `horn`.  Ids are assigned along monotone injections
    into {0..n}, dimension by dimension.
    """
    if kind == "simplex":
        if n < 0:
            raise SimplicialError("n must be >= 0")
        return standard_simplex(n)
    if n < 1:
        raise SimplicialError("boundary/horn need n >= 1")
    full = range(n + 1)
    if kind == "boundary":
        sub = _subsets_complex(n, lambda vs: len(vs) <= n, coskeletal_at=n)
    elif kind == "horn":
        if k is None or not 0 <= k <= n:
            raise SimplicialError(f"horn index {k} outside 0..{n}")
        missing = tuple(v for v in full if v != k)
        sub = _subsets_complex(
            n, lambda vs: len(vs) <= n and vs != missing, coskeletal_at=n
        )
    else:
        raise SimplicialError(f"unknown kind {kind!r}")
    simplex = standard_simplex(n)
    target_ids = {simplex.labels[s]: s for s in simplex.cells()}
    incl = SimplicialMap(
        sub,
        simplex,
        {
            s: SimplexExpr((), target_ids[sub.labels[s]], sub.dim_of[s])
            for s in sub.cells()
        },
    )
    return sub, incl


def with_coskeletal(X: SimplicialSet, d: int | None) -> SimplicialSet:
    """Copy of X with the declared coskeletal bound replaced."""
    return SimplicialSet(
        X.dim_bound,
        [list(level) for level in X.nondegenerate],
        X.faces,
        d,
        X.labels,
        check=False,
    )


def truncate(X: SimplicialSet, d: int) -> SimplicialSet:
    """Dimension truncation sk_d; drops the coskeletal flag."""
    nondeg = [list(level) for level in X.nondegenerate[: d + 1]]
    keep = {s for level in nondeg for s in level}
    faces = {s: fs for s, fs in X.faces.items() if s in keep}
    labels = {s: l for s, l in X.labels.items() if s in keep}
    return SimplicialSet(d, nondeg, faces, None, labels, check=False)


# -- subcomplexes ------------------------------------------------------------


def closure_ids(X: SimplicialSet, seeds) -> frozenset[int]:
    """Smallest face-closed set of non-degenerate ids containing the seeds."""
    seen = set()
    stack = list(seeds)
    while stack:
        s = stack.pop()
        if s in seen:
            continue
        if s not in X.dim_of:
            raise SimplicialError(f"unknown simplex id {s}")
        seen.add(s)
        if X.dim_of[s] >= 1:
            stack.extend(e.base for e in X.faces[s])
    return frozenset(seen)


def make_subcomplex(X: SimplicialSet, cell_ids) -> tuple[SimplicialSet, SimplicialMap]:
    """Subcomplex on a face-closed id set, with its inclusion into X."""
    cell_ids = frozenset(cell_ids)
    for s in cell_ids:
        if X.dim_of[s] >= 1 and any(e.base not in cell_ids for e in X.faces[s]):
            raise SimplicialError(f"cell set not face-closed at {s}")
    old_by_dim = [sorted(s for s in cell_ids if X.dim_of[s] == d) for d in range(X.dim_bound + 1)]
    new_of_old = {}
    nondeg: list[list[int]] = [[] for _ in range(X.dim_bound + 1)]
    labels = {}
    next_id = 0
    for d, level in enumerate(old_by_dim):
        for s in level:
            new_of_old[s] = next_id
            nondeg[d].append(next_id)
            labels[next_id] = X.labels.get(s, s)
            next_id += 1
    faces = {}
    for s, new in new_of_old.items():
        d = X.dim_of[s]
        if d >= 1:
            faces[new] = tuple(
                SimplexExpr(e.word, new_of_old[e.base], e.dim) for e in X.faces[s]
            )
    sub = SimplicialSet(X.dim_bound, nondeg, faces, None, labels, check=False)
    incl = SimplicialMap(sub, X, {new: X.expr(s) for s, new in new_of_old.items()})
    return sub, incl


def subcomplex_generated(X: SimplicialSet, seeds) -> tuple[SimplicialSet, SimplicialMap]:
    return make_subcomplex(X, closure_ids(X, seeds))


# -- products ----------------------------------------------------------------


@dataclass(frozen=True)
class ProductComplex:
    """X x Y with projections; `pairs` records each cell's component exprs."""

    complex: SimplicialSet
    left: SimplicialSet
    right: SimplicialSet
    pr_left: SimplicialMap
    pr_right: SimplicialMap
    pairs: dict[int, tuple[SimplexExpr, SimplexExpr]] = field(compare=False)
    pair_id: dict[tuple[SimplexExpr, SimplexExpr], int] = field(compare=False)

    def pair_expr(self, e1: SimplexExpr, e2: SimplexExpr) -> SimplexExpr:
        """Normal form of a componentwise pair of equal-dimension exprs.

        Peels common degeneracy indices (largest first); a pair is
        non-degenerate exactly when the component words are disjoint.
        """
        word = []
        while True:
            common = set(e1.word) & set(e2.word)
            if not common:
                break
            i = max(common)
            word.append(i)
            e1 = self.left.face(e1, i + 1)
            e2 = self.right.face(e2, i + 1)
        res = self.complex.expr(self.pair_id[(e1, e2)])
        for i in reversed(word):
            res = degeneracy_expr(res, i)
        return res

    def vertex_pair_chain(self, s: int) -> tuple[tuple[int, int], ...]:
        e1, e2 = self.pairs[s]
        v1 = self.left.vertex_ids(e1)
        v2 = self.right.vertex_ids(e2)
        return tuple(zip(v1, v2))


def product(X: SimplicialSet, Y: SimplicialSet, dim_bound: int | None = None) -> ProductComplex:
    """Binary product, materialized through dimension `dim_bound`.

    Non-degenerate n-cells are pairs of n-dimensional expressions with
    disjoint degeneracy words; faces are computed componentwise and
    renormalized.
    """
    full = X.dim + Y.dim
    if dim_bound is None:
        dim_bound = min(full, GLOBAL_DIM_BOUND) if full >= 0 else 0
    dim_bound = max(dim_bound, 0)
    pair_id: dict[tuple[SimplexExpr, SimplexExpr], int] = {}
    pairs: dict[int, tuple[SimplexExpr, SimplexExpr]] = {}
    nondeg: list[list[int]] = [[] for _ in range(dim_bound + 1)]
    labels = {}
    next_id = 0
    for d in range(dim_bound + 1):
        for p in range(min(d, X.dim) + 1):
            for q in range(min(d, Y.dim) + 1):
                if p + q < d:
                    continue
                for x in X.nondegenerate[p]:
                    for y in Y.nondegenerate[q]:
                        for w1 in combinations(range(d - 1, -1, -1), d - p):
                            rest = [i for i in range(d - 1, -1, -1) if i not in w1]
                            for w2 in combinations(rest, d - q):
                                e1 = SimplexExpr(w1, x, d)
                                e2 = SimplexExpr(w2, y, d)
                                pair_id[(e1, e2)] = next_id
                                pairs[next_id] = (e1, e2)
                                nondeg[d].append(next_id)
                                labels[next_id] = (e1, e2)
                                next_id += 1
    P = SimplicialSet(dim_bound, nondeg, {}, None, labels, check=False)
    prod = ProductComplex(P, X, Y, None, None, pairs, pair_id)  # type: ignore[arg-type]
    faces = {}
    for s, (e1, e2) in pairs.items():
        d = e1.dim
        if d >= 1:
            faces[s] = tuple(
                prod.pair_expr(X.face(e1, i), Y.face(e2, i)) for i in range(d + 1)
            )
    flag = None
    if (
        X.coskeletal_at is not None
        and Y.coskeletal_at is not None
        and full >= 0
        and dim_bound >= full
    ):
        flag = max(X.coskeletal_at, Y.coskeletal_at)
    P = SimplicialSet(dim_bound, nondeg, faces, flag, labels, check=False)
    pr_left = SimplicialMap(P, X, {s: e1 for s, (e1, e2) in pairs.items()})
    pr_right = SimplicialMap(P, Y, {s: e2 for s, (e1, e2) in pairs.items()})
    return ProductComplex(P, X, Y, pr_left, pr_right, pairs, pair_id)


def embed_at_vertex(prod: ProductComplex, vertex: int, side: str = "right") -> SimplicialMap:
    """Embedding X -> X x Y at a fixed vertex of the other factor."""
    X = prod.left if side == "right" else prod.right
    other = prod.right if side == "right" else prod.left
    if vertex not in other.dim_of or other.dim_of[vertex] != 0:
        raise SimplicialError(f"{vertex} is not a vertex")
    assignment = {}
    for s in X.cells():
        d = X.dim_of[s]
        const = SimplexExpr(tuple(range(d - 1, -1, -1)), vertex, d)
        e1, e2 = (X.expr(s), const) if side == "right" else (const, X.expr(s))
        assignment[s] = prod.pair_expr(e1, e2)
    return SimplicialMap(X, prod.complex, assignment)


def product_map(
    prodA: ProductComplex, prodB: ProductComplex, f: SimplicialMap, g: SimplicialMap
) -> SimplicialMap:
    """f x g : A1 x A2 -> B1 x B2 on materialized products."""
    assignment = {}
    for s, (e1, e2) in prodA.pairs.items():
        assignment[s] = prodB.pair_expr(f.push(e1), g.push(e2))
    return SimplicialMap(prodA.complex, prodB.complex, assignment)


def identity_map(X: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, {s: X.expr(s) for s in X.cells()})


# -- joins -------------------------------------------------------------------


def join(X: SimplicialSet, Y: SimplicialSet) -> SimplicialSet:
    """Join X * Y: cells are pairs (sigma, tau) with sigma from X or absent,
    tau from Y or absent, of total dimension p + q + 1."""
    dim_bound = X.dim + Y.dim + 1 if X.dim >= 0 and Y.dim >= 0 else max(X.dim, Y.dim)
    if dim_bound < 0:
        return empty_complex()
    ids: dict[tuple[int | None, int | None], int] = {}
    nondeg: list[list[int]] = [[] for _ in range(dim_bound + 1)]
    labels = {}
    next_id = 0
    for d in range(dim_bound + 1):
        if d <= X.dim:
            for x in X.nondegenerate[d]:
                ids[(x, None)] = next_id
                nondeg[d].append(next_id)
                labels[next_id] = (x, None)
                next_id += 1
        if d <= Y.dim:
            for y in Y.nondegenerate[d]:
                ids[(None, y)] = next_id
                nondeg[d].append(next_id)
                labels[next_id] = (None, y)
                next_id += 1
        for p in range(d):
            q = d - p - 1
            if p > X.dim or q > Y.dim:
                continue
            for x in X.nondegenerate[p]:
                for y in Y.nondegenerate[q]:
                    ids[(x, y)] = next_id
                    nondeg[d].append(next_id)
                    labels[next_id] = (x, y)
                    next_id += 1

    def join_expr(e1: SimplexExpr | None, e2: SimplexExpr | None) -> SimplexExpr:
        if e1 is None:
            base = ids[(None, e2.base)]
            res = SimplexExpr((), base, Y.dim_of[e2.base])
            for j in reversed(e2.word):
                res = degeneracy_expr(res, j)
            return res
        if e2 is None:
            base = ids[(e1.base, None)]
            res = SimplexExpr((), base, X.dim_of[e1.base])
            for j in reversed(e1.word):
                res = degeneracy_expr(res, j)
            return res
        base = ids[(e1.base, e2.base)]
        off = X.dim_of[e1.base] + 1
        res = SimplexExpr((), base, X.dim_of[e1.base] + Y.dim_of[e2.base] + 1)
        for j in reversed(e2.word):
            res = degeneracy_expr(res, j + off)
        for j in reversed(e1.word):
            res = degeneracy_expr(res, j)
        return res

    faces = {}
    for (x, y), s in ids.items():
        p = X.dim_of[x] if x is not None else -1
        q = Y.dim_of[y] if y is not None else -1
        d = p + q + 1
        if d < 1:
            continue
        fs = []
        for i in range(d + 1):
            if i <= p:
                left = X.face(X.expr(x), i) if p >= 1 else None
                fs.append(join_expr(left, Y.expr(y) if y is not None else None))
            else:
                right = Y.face(Y.expr(y), i - p - 1) if q >= 1 else None
                fs.append(join_expr(X.expr(x) if x is not None else None, right))
        faces[s] = tuple(fs)
    return SimplicialSet(dim_bound, nondeg, faces, None, labels, check=False)


# -- isomorphism search ------------------------------------------------------


def iso_check(X: SimplicialSet, Y: SimplicialSet, limit: int = 64) -> SimplicialMap | None:
    """Exact isomorphism search by backtracking over vertex bijections.

    Returns a dimension-preserving, face-commuting bijection as a
    SimplicialMap, or None.  Both complexes must have at most `limit`
    non-degenerate simplices in total.
    """
    if X.n_cells > limit or Y.n_cells > limit:
        raise SizeLimitError(f"iso_check limit {limit} exceeded")
    top = max(X.dim, Y.dim, 0)
    cx = tuple(len(X.nondegenerate[d]) if d <= X.dim_bound else 0 for d in range(top + 1))
    cy = tuple(len(Y.nondegenerate[d]) if d <= Y.dim_bound else 0 for d in range(top + 1))
    if cx != cy:
        return None

    vx, vy = X.vertices(), Y.vertices()

    def extend(phi: dict[int, int]) -> dict[int, int] | None:
        # Extend a vertex bijection dimension by dimension; images are
        # forced by the face vectors, so only consistency is checked.
        for d in range(1, X.dim + 1):
            taken = set()
            for s in X.nondegenerate[d]:
                want = tuple(
                    SimplexExpr(e.word, phi[e.base], e.dim) for e in X.faces[s]
                )
                img = None
                for t in Y.nondegenerate[d]:
                    if t not in taken and Y.faces[t] == want:
                        img = t
                        break
                if img is None:
                    return None
                taken.add(img)
                phi[s] = img
        return phi

    def assign(i: int, phi: dict[int, int], used: set[int]):
        if i == len(vx):
            full = extend(dict(phi))
            if full is not None:
                return full
            return None
        for w in vy:
            if w in used:
                continue
            phi[vx[i]] = w
            used.add(w)
            res = assign(i + 1, phi, used)
            if res is not None:
                return res
            used.discard(w)
            del phi[vx[i]]
        return None

    phi = assign(0, {}, set())
    if phi is None:
        return None
    return SimplicialMap(X, Y, {s: Y.expr(t) for s, t in phi.items()})
