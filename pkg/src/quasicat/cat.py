"""Finite categories, groupoids, functors, and nerves.

Categories are given by explicit composition tables and validated
exhaustively (associativity, units, closure).  Equality of categories is
object identity; corpus constructors reuse instances so caches keyed on
category objects behave predictably.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .simplicial import SimplexExpr, SimplicialSet, degeneracy_expr


class CategoryError(ValueError):
    pass


class FiniteCategory:
    """Objects, arrows with src/tgt, identities, and a composition table.

    compose[(g, f)] = g after f, defined exactly when tgt(f) == src(g).
    """

    def __init__(self, objects, arrows, src, tgt, identity, compose, name=None, check=True):
        self.objects = tuple(objects)
        self.arrows = tuple(arrows)
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.identity = dict(identity)
        self.compose_table = dict(compose)
        self.name = name
        if check:
            self.validate()

    def __repr__(self):
        tag = self.name or f"{len(self.objects)} objects, {len(self.arrows)} arrows"
        return f"FiniteCategory({tag})"

    def compose(self, g, f):
        return self.compose_table[(g, f)]

    def is_identity(self, f) -> bool:
        return self.identity.get(self.src[f]) == f

    def hom(self, x, y):
        idx = getattr(self, "_hom_cache", None)
        if idx is None:
            idx = {}
            for f in self.arrows:
                idx.setdefault((self.src[f], self.tgt[f]), []).append(f)
            self._hom_cache = idx
        return tuple(idx.get((x, y), ()))

    def nonidentity_arrows(self):
        return tuple(f for f in self.arrows if not self.is_identity(f))

    def compose_word(self, word, at=None):
        """Composite of a path word (first arrow first); empty word needs `at`."""
        if not word:
            return self.identity[at]
        acc = word[0]
        for f in word[1:]:
            acc = self.compose_table[(f, acc)]
        return acc

    def invertible_arrows(self):
        cached = getattr(self, "_inv_cache", None)
        if cached is not None:
            return cached
        inv = getattr(self, "inverse", None)
        if inv is None:
            by_pair: dict = {}
            for f in self.arrows:
                by_pair.setdefault((self.src[f], self.tgt[f]), []).append(f)
            inv = {}
            for f in self.arrows:
                for g in by_pair.get((self.tgt[f], self.src[f]), ()):
                    if (
                        self.compose_table[(g, f)] == self.identity[self.src[f]]
                        and self.compose_table[(f, g)] == self.identity[self.tgt[f]]
                    ):
                        inv[f] = g
                        break
        else:
            inv = dict(inv)
        self._inv_cache = inv
        return inv

    def validate(self):
        arrows = set(self.arrows)
        if len(arrows) != len(self.arrows):
            raise CategoryError("duplicate arrow ids")
        for f in self.arrows:
            if self.src[f] not in self.objects or self.tgt[f] not in self.objects:
                raise CategoryError(f"arrow {f} has unknown endpoints")
        for x in self.objects:
            i = self.identity.get(x)
            if i not in arrows or self.src[i] != x or self.tgt[i] != x:
                raise CategoryError(f"bad identity at {x}")
        for g in self.arrows:
            for f in self.arrows:
                defined = (g, f) in self.compose_table
                if defined != (self.tgt[f] == self.src[g]):
                    raise CategoryError(f"composition table wrong on ({g}, {f})")
                if defined:
                    gf = self.compose_table[(g, f)]
                    if gf not in arrows or self.src[gf] != self.src[f] or self.tgt[gf] != self.tgt[g]:
                        raise CategoryError(f"composite ({g}, {f}) ill-typed")
        for f in self.arrows:
            if self.compose_table[(f, self.identity[self.src[f]])] != f:
                raise CategoryError(f"right unit law fails at {f}")
            if self.compose_table[(self.identity[self.tgt[f]], f)] != f:
                raise CategoryError(f"left unit law fails at {f}")
        for h in self.arrows:
            for g in self.arrows:
                if self.tgt[g] != self.src[h]:
                    continue
                hg = self.compose_table[(h, g)]
                for f in self.arrows:
                    if self.tgt[f] != self.src[g]:
                        continue
                    if self.compose_table[(hg, f)] != self.compose_table[(h, self.compose_table[(g, f)])]:
                        raise CategoryError(f"associativity fails at ({h}, {g}, {f})")
        return self


class Groupoid(FiniteCategory):
    """Finite category with a two-sided inverse for every arrow."""

    def __init__(self, objects, arrows, src, tgt, identity, compose, inverse=None, name=None, check=True):
        super().__init__(objects, arrows, src, tgt, identity, compose, name=name, check=check)
        if inverse is None:
            inverse = self.invertible_arrows()
        self.inverse = dict(inverse)
        if check:
            for f in self.arrows:
                g = self.inverse.get(f)
                if g is None:
                    raise CategoryError(f"arrow {f} has no inverse")
                if (
                    self.compose_table[(g, f)] != self.identity[self.src[f]]
                    or self.compose_table[(f, g)] != self.identity[self.tgt[f]]
                ):
                    raise CategoryError(f"inverse table wrong at {f}")


@dataclass(frozen=True, eq=False)
class FiniteFunctor:
    source: FiniteCategory
    target: FiniteCategory
    object_map: dict = field(default_factory=dict)
    arrow_map: dict = field(default_factory=dict)

    def validate(self):
        for x in self.source.objects:
            if self.object_map[x] not in self.target.objects:
                raise CategoryError(f"object map misses {x}")
        for f in self.source.arrows:
            ff = self.arrow_map[f]
            if self.target.src[ff] != self.object_map[self.source.src[f]]:
                raise CategoryError(f"functor breaks src at {f}")
            if self.target.tgt[ff] != self.object_map[self.source.tgt[f]]:
                raise CategoryError(f"functor breaks tgt at {f}")
        for x in self.source.objects:
            if self.arrow_map[self.source.identity[x]] != self.target.identity[self.object_map[x]]:
                raise CategoryError(f"functor breaks identity at {x}")
        for (g, f), gf in self.source.compose_table.items():
            if self.target.compose_table[(self.arrow_map[g], self.arrow_map[f])] != self.arrow_map[gf]:
                raise CategoryError(f"functor breaks composition at ({g}, {f})")
        return self

    def compose(self, other: "FiniteFunctor") -> "FiniteFunctor":
        """self after other."""
        return FiniteFunctor(
            other.source,
            self.target,
            {x: self.object_map[y] for x, y in other.object_map.items()},
            {f: self.arrow_map[g] for f, g in other.arrow_map.items()},
        )


def identity_functor(C: FiniteCategory) -> FiniteFunctor:
    return FiniteFunctor(C, C, {x: x for x in C.objects}, {f: f for f in C.arrows})


# -- nerve -------------------------------------------------------------------


def nerve(C: FiniteCategory, dim_bound: int) -> SimplicialSet:
    """Nerve of C through dimension `dim_bound`, flagged 2-coskeletal.

    Non-degenerate n-cells are composable strings of non-identity arrows;
    inner faces compose adjacent arrows (a composite that collapses to an
    identity makes the face degenerate, handled by the normal form).
    """
    obj_vertex = {x: i for i, x in enumerate(C.objects)}
    nondeg: list[list[int]] = [[] for _ in range(dim_bound + 1)]
    labels: dict[int, object] = {}
    string_id: dict[tuple, int] = {}
    next_id = 0
    for x in C.objects:
        nondeg[0].append(next_id)
        labels[next_id] = ("object", x)
        next_id += 1
    strings = [()]
    for d in range(1, dim_bound + 1):
        new = []
        for s in strings:
            for f in C.nonidentity_arrows():
                if s and C.src[f] != C.tgt[s[-1]]:
                    continue
                t = s + (f,)
                new.append(t)
        strings = new
        for t in strings:
            string_id[t] = next_id
            nondeg[d].append(next_id)
            labels[next_id] = ("string", t)
            next_id += 1

    def string_to_expr(t: tuple, at) -> SimplexExpr:
        # `at` anchors the source object once identities are stripped away
        for j, a in enumerate(t):
            if C.is_identity(a):
                return degeneracy_expr(string_to_expr(t[:j] + t[j + 1 :], at), j)
        if len(t) == 0:
            return SimplexExpr((), obj_vertex[at], 0)
        return SimplexExpr((), string_id[t], len(t))

    faces = {}
    for t, s in string_id.items():
        d = len(t)
        fs = []
        for i in range(d + 1):
            if i == 0:
                u, at = t[1:], C.tgt[t[0]]
            elif i == d:
                u, at = t[:-1], C.src[t[0]]
            else:
                u = t[: i - 1] + (C.compose_table[(t[i], t[i - 1])],) + t[i + 1 :]
                at = C.src[t[0]]
            fs.append(string_to_expr(u, at))
        faces[s] = tuple(fs)
    return SimplicialSet(dim_bound, nondeg, faces, 2, labels, check=False)


# -- groupoid of isomorphisms -------------------------------------------------


def iso_subgroupoid(C: FiniteCategory) -> Groupoid:
    """Groupoid of invertible arrows of C, on the same objects."""
    inv = C.invertible_arrows()
    arrows = tuple(f for f in C.arrows if f in inv)
    compose = {
        (g, f): gf
        for (g, f), gf in C.compose_table.items()
        if g in inv and f in inv
    }
    return Groupoid(
        C.objects,
        arrows,
        {f: C.src[f] for f in arrows},
        {f: C.tgt[f] for f in arrows},
        C.identity,
        compose,
        inverse={f: inv[f] for f in arrows},
        name=f"Iso({C.name})" if C.name else None,
        check=False,
    )


# -- equivalence checks --------------------------------------------------------


@dataclass
class GroupoidEquivalenceWitness:
    ok: bool
    reason: str | None = None
    class_map: dict | None = None  # source component rep -> target component rep
    aut_isos: dict | None = None  # source component rep -> {arrow: image arrow}


def _iso_classes(C: FiniteCategory):
    """Partition of objects by isomorphism, with sorted-stable representatives."""
    inv = C.invertible_arrows()
    parent = {x: x for x in C.objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in inv:
        a, b = find(C.src[f]), find(C.tgt[f])
        if a != b:
            parent[a] = b
    classes: dict = {}
    for x in C.objects:
        classes.setdefault(find(x), []).append(x)
    return {min(map(str, v)): sorted(v, key=str) for v in classes.values()}


def is_equivalence_of_groupoids(F: FiniteFunctor) -> tuple[bool, GroupoidEquivalenceWitness]:
    """Decidable criterion: F induces a bijection on isomorphism classes and
    a bijection Aut(x) -> Aut(Fx) for one representative per source class."""
    C, D = F.source, F.target
    cls_C = _iso_classes(C)
    cls_D = _iso_classes(D)
    rep_of_D = {}
    for key, members in cls_D.items():
        for y in members:
            rep_of_D[y] = key
    class_map = {}
    for key, members in cls_C.items():
        image_keys = {rep_of_D[F.object_map[x]] for x in members}
        if len(image_keys) != 1:
            return False, GroupoidEquivalenceWitness(False, f"class {key} maps to several classes")
        class_map[key] = image_keys.pop()
    if len(set(class_map.values())) != len(class_map):
        return False, GroupoidEquivalenceWitness(False, "not injective on iso classes")
    if set(class_map.values()) != set(cls_D):
        return False, GroupoidEquivalenceWitness(False, "not surjective on iso classes")
    aut_isos = {}
    for key, members in cls_C.items():
        x = members[0]
        fx = F.object_map[x]
        aut_src = C.hom(x, x)
        aut_tgt = D.hom(fx, fx)
        images = {a: F.arrow_map[a] for a in aut_src}
        if len(set(images.values())) != len(aut_src):
            return False, GroupoidEquivalenceWitness(False, f"Aut({x}) not faithful")
        if set(images.values()) != set(aut_tgt):
            return False, GroupoidEquivalenceWitness(False, f"Aut({x}) not full")
        aut_isos[key] = images
    return True, GroupoidEquivalenceWitness(True, None, class_map, aut_isos)


def is_equivalence_of_categories(F: FiniteFunctor) -> bool:
    """Fully faithful and essentially surjective, checked exhaustively."""
    C, D = F.source, F.target
    for x in C.objects:
        for y in C.objects:
            images = [F.arrow_map[f] for f in C.hom(x, y)]
            if len(set(images)) != len(images):
                return False
            if set(images) != set(D.hom(F.object_map[x], F.object_map[y])):
                return False
    cls_D = _iso_classes(D)
    rep_of_D = {y: key for key, members in cls_D.items() for y in members}
    hit_classes = {rep_of_D[F.object_map[x]] for x in C.objects}
    return hit_classes == set(cls_D)


def category_iso(C: FiniteCategory, D: FiniteCategory) -> FiniteFunctor | None:
    """Search for an isomorphism of categories (desk scale, backtracking)."""
    if len(C.objects) != len(D.objects) or len(C.arrows) != len(D.arrows):
        return None

    d_objects = list(D.objects)

    def arrow_backtrack(obj_map):
        hom_pairs = []
        for x in C.objects:
            for y in C.objects:
                hc = C.hom(x, y)
                hd = D.hom(obj_map[x], obj_map[y])
                if len(hc) != len(hd):
                    return None
                hom_pairs.append((hc, hd))
        arrow_map = {C.identity[x]: D.identity[obj_map[x]] for x in C.objects}

        def fill(pair_idx, perm_state):
            if pair_idx == len(hom_pairs):
                F = FiniteFunctor(C, D, dict(obj_map), dict(arrow_map))
                try:
                    F.validate()
                except CategoryError:
                    return None
                return F
            hc, hd = hom_pairs[pair_idx]
            free_c = [f for f in hc if f not in arrow_map]
            free_d = [g for g in hd if g not in set(arrow_map.values())]
            if len(free_c) != len(free_d):
                return None

            def place(i):
                if i == len(free_c):
                    return fill(pair_idx + 1, None)
                f = free_c[i]
                for g in free_d:
                    if g in set(arrow_map.values()):
                        continue
                    arrow_map[f] = g
                    res = place(i + 1)
                    if res is not None:
                        return res
                    del arrow_map[f]
                return None

            return place(0)

        return fill(0, None)

    def obj_backtrack(i, obj_map, used):
        if i == len(C.objects):
            return arrow_backtrack(dict(obj_map))
        x = C.objects[i]
        for y in d_objects:
            if y in used:
                continue
            if len(C.hom(x, x)) != len(D.hom(y, y)):
                continue
            obj_map[x] = y
            used.add(y)
            res = obj_backtrack(i + 1, obj_map, used)
            if res is not None:
                return res
            used.discard(y)
            del obj_map[x]
        return None

    return obj_backtrack(0, {}, set())


# -- small constructors --------------------------------------------------------


def poset_category(n: int) -> FiniteCategory:
    """The chain 0 <= 1 <= ... <= n as a category."""
    objects = tuple(range(n + 1))
    arrows = tuple((i, j) for i in objects for j in objects if i <= j)
    compose = {}
    for g in arrows:
        for f in arrows:
            if f[1] == g[0]:
                compose[(g, f)] = (f[0], g[1])
    return FiniteCategory(
        objects,
        arrows,
        {a: a[0] for a in arrows},
        {a: a[1] for a in arrows},
        {i: (i, i) for i in objects},
        compose,
        name=f"chain{n}",
    )


def preorder_category(objects, le, name=None) -> FiniteCategory:
    """Thin category of a reflexive-transitive relation `le` (set of pairs)."""
    arrows = tuple(sorted(le))
    compose = {}
    for g in arrows:
        for f in arrows:
            if f[1] == g[0]:
                compose[(g, f)] = (f[0], g[1])
    return FiniteCategory(
        tuple(objects),
        arrows,
        {a: a[0] for a in arrows},
        {a: a[1] for a in arrows},
        {x: (x, x) for x in objects},
        compose,
        name=name,
    )


def cyclic_group_category(n: int) -> Groupoid:
    """Z/n as a one-object groupoid."""
    objects = ("*",)
    arrows = tuple(f"g{i}" for i in range(n))
    compose = {(f"g{i}", f"g{j}"): f"g{(i + j) % n}" for i in range(n) for j in range(n)}
    return Groupoid(
        objects,
        arrows,
        {a: "*" for a in arrows},
        {a: "*" for a in arrows},
        {"*": "g0"},
        compose,
        inverse={f"g{i}": f"g{(n - i) % n}" for i in range(n)},
        name=f"Z/{n}",
    )


def free_iso_groupoid() -> Groupoid:
    """The groupoid freely generated by one isomorphism 0 -> 1."""
    objects = (0, 1)
    arrows = ("id0", "id1", "eta", "etainv")
    src = {"id0": 0, "id1": 1, "eta": 0, "etainv": 1}
    tgt = {"id0": 0, "id1": 1, "eta": 1, "etainv": 0}
    compose = {}
    for g in arrows:
        for f in arrows:
            if src[g] != tgt[f]:
                continue
            if f in ("id0", "id1"):
                compose[(g, f)] = g
            elif g in ("id0", "id1"):
                compose[(g, f)] = f
            elif g == "eta" and f == "etainv":
                compose[(g, f)] = "id1"
            elif g == "etainv" and f == "eta":
                compose[(g, f)] = "id0"
    return Groupoid(
        objects,
        arrows,
        src,
        tgt,
        {0: "id0", 1: "id1"},
        compose,
        inverse={"id0": "id0", "id1": "id1", "eta": "etainv", "etainv": "eta"},
        name="pi(Delta1)",
    )


def idempotent_monoid_category() -> FiniteCategory:
    """One object with a single non-trivial idempotent e, e.e = e."""
    objects = ("*",)
    arrows = ("1", "e")
    compose = {("1", "1"): "1", ("1", "e"): "e", ("e", "1"): "e", ("e", "e"): "e"}
    return FiniteCategory(
        objects,
        arrows,
        {a: "*" for a in arrows},
        {a: "*" for a in arrows},
        {"*": "1"},
        compose,
        name="idempotent",
    )


def discrete_category(k: int, name=None) -> FiniteCategory:
    objects = tuple(range(k))
    arrows = tuple(("id", x) for x in objects)
    return FiniteCategory(
        objects,
        arrows,
        {a: a[1] for a in arrows},
        {a: a[1] for a in arrows},
        {x: ("id", x) for x in objects},
        {(a, a): a for a in arrows},
        name=name or f"discrete{k}",
    )


def product_category(C: FiniteCategory, D: FiniteCategory) -> FiniteCategory:
    objects = tuple((x, y) for x in C.objects for y in D.objects)
    arrows = tuple((f, g) for f in C.arrows for g in D.arrows)
    compose = {}
    for (f2, g2) in arrows:
        for (f1, g1) in arrows:
            if C.tgt[f1] == C.src[f2] and D.tgt[g1] == D.src[g2]:
                compose[((f2, g2), (f1, g1))] = (
                    C.compose_table[(f2, f1)],
                    D.compose_table[(g2, g1)],
                )
    return FiniteCategory(
        objects,
        arrows,
        {(f, g): (C.src[f], D.src[g]) for (f, g) in arrows},
        {(f, g): (C.tgt[f], D.tgt[g]) for (f, g) in arrows},
        {(x, y): (C.identity[x], D.identity[y]) for (x, y) in objects},
        compose,
        name=f"({C.name})x({D.name})" if C.name and D.name else None,
        check=False,
    )


def disjoint_union_category(C: FiniteCategory, D: FiniteCategory) -> FiniteCategory:
    objects = tuple((0, x) for x in C.objects) + tuple((1, y) for y in D.objects)
    arrows = tuple((0, f) for f in C.arrows) + tuple((1, g) for g in D.arrows)
    src = {(0, f): (0, C.src[f]) for f in C.arrows}
    src.update({(1, g): (1, D.src[g]) for g in D.arrows})
    tgt = {(0, f): (0, C.tgt[f]) for f in C.arrows}
    tgt.update({(1, g): (1, D.tgt[g]) for g in D.arrows})
    identity = {(0, x): (0, C.identity[x]) for x in C.objects}
    identity.update({(1, y): (1, D.identity[y]) for y in D.objects})
    compose = {((0, g), (0, f)): (0, gf) for (g, f), gf in C.compose_table.items()}
    compose.update({((1, g), (1, f)): (1, gf) for (g, f), gf in D.compose_table.items()})
    return FiniteCategory(
        objects, arrows, src, tgt, identity, compose,
        name=f"({C.name})+({D.name})" if C.name and D.name else None,
        check=False,
    )
