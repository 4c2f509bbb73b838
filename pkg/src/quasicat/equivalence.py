"""Functor categories over presented shapes and the decidable
nerve-equivalence criterion.

The criterion tests that Iso(C^P) -> Iso(D^P) is an equivalence of
groupoids for P among the path presentations of Delta^0, Delta^1, Delta^2,
bd Delta^1 and bd Delta^2; beyond that the boundary inclusions induce
isomorphisms of path categories, so nothing new is tested.  This decides
whether the induced map of nerves is a categorical weak equivalence, and
agrees with plain equivalence of categories (a tested property over the
corpus).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from .cat import (
    CategoryError,
    FiniteCategory,
    FiniteFunctor,
    Groupoid,
    is_equivalence_of_groupoids,
)
from .pathcat import PresentedCategory, path_category
from .simplicial import build_standard, standard_simplex


@dataclass(frozen=True)
class PresentedFunctor:
    """A functor from a presented category: object and generator images."""

    objects: tuple  # images of P.objects, in order
    generators: tuple  # images of P.generators, in order


def functors_from_presentation(P: PresentedCategory, C: FiniteCategory) -> list[PresentedFunctor]:
    """All functors P -> C: object assignments plus generator assignments
    with matching endpoints, satisfying the relations of P."""
    results = []
    obj_index = {x: i for i, x in enumerate(P.objects)}
    for obj_images in iproduct(C.objects, repeat=len(P.objects)):
        candidates = [
            [
                f
                for f in C.arrows
                if C.src[f] == obj_images[obj_index[P.gen_src[g]]]
                and C.tgt[f] == obj_images[obj_index[P.gen_tgt[g]]]
            ]
            for g in P.generators
        ]
        gen_index = {g: i for i, g in enumerate(P.generators)}

        def word_value(word, at, gen_images):
            value = C.identity[obj_images[obj_index[at]]]
            for g in word:
                value = C.compose_table[(gen_images[gen_index[g]], value)]
            return value

        def rec(i, gen_images):
            if i == len(P.generators):
                for rel in P.relations:
                    if word_value(rel.lhs, rel.src, gen_images) != word_value(rel.rhs, rel.src, gen_images):
                        return
                results.append(PresentedFunctor(tuple(obj_images), tuple(gen_images)))
                return
            for f in candidates[i]:
                gen_images.append(f)
                rec(i + 1, gen_images)
                gen_images.pop()

        rec(0, [])
    return results


def functor_category(C: FiniteCategory, P: PresentedCategory) -> FiniteCategory:
    """C^P: objects are functors P -> C, arrows natural transformations,
    composition objectwise."""
    functors = functors_from_presentation(P, C)
    objects = tuple(functors)
    obj_index = {x: i for i, x in enumerate(P.objects)}
    gen_index = {g: i for i, g in enumerate(P.generators)}
    arrows = []
    src = {}
    tgt = {}
    for F in functors:
        for G in functors:
            for comps in iproduct(
                *[C.hom(F.objects[i], G.objects[i]) for i in range(len(P.objects))]
            ):
                natural = all(
                    C.compose_table[(G.generators[gen_index[g]], comps[obj_index[P.gen_src[g]]])]
                    == C.compose_table[(comps[obj_index[P.gen_tgt[g]]], F.generators[gen_index[g]])]
                    for g in P.generators
                )
                if natural:
                    a = (F, G, tuple(comps))
                    arrows.append(a)
                    src[a] = F
                    tgt[a] = G
    identity = {
        F: (F, F, tuple(C.identity[x] for x in F.objects)) for F in functors
    }
    compose = {}
    for b in arrows:
        for a in arrows:
            if a[1] == b[0]:
                comps = tuple(
                    C.compose_table[(b[2][i], a[2][i])] for i in range(len(P.objects))
                )
                compose[(b, a)] = (a[0], b[1], comps)
    return FiniteCategory(objects, tuple(arrows), src, tgt, identity, compose, check=False)


def iso_functor_groupoid(C: FiniteCategory, P: PresentedCategory) -> Groupoid:
    """Iso(C^P) without materializing non-invertible transformations.

    An invertible natural transformation has invertible components, and its
    target functor is the conjugate of its source, so arrows are pairs
    (functor, invertible component tuple).
    """
    functors = functors_from_presentation(P, C)
    inv = C.invertible_arrows()
    inv_out = {x: [f for f in inv if C.src[f] == x] for x in C.objects}
    obj_index = {x: i for i, x in enumerate(P.objects)}
    gen_index = {g: i for i, g in enumerate(P.generators)}
    functor_set = set(functors)
    arrows = []
    src = {}
    tgt = {}
    inverse = {}
    for F in functors:
        for comps in iproduct(*[inv_out[F.objects[i]] for i in range(len(P.objects))]):
            g_objects = tuple(C.tgt[a] for a in comps)
            g_generators = tuple(
                C.compose_table[
                    (
                        C.compose_table[(comps[obj_index[P.gen_tgt[g]]], F.generators[gen_index[g]])],
                        inv[comps[obj_index[P.gen_src[g]]]],
                    )
                ]
                for g in P.generators
            )
            G = PresentedFunctor(g_objects, g_generators)
            if G not in functor_set:
                raise CategoryError("conjugate functor escaped the enumeration")
            a = (F, G, tuple(comps))
            arrows.append(a)
            src[a] = F
            tgt[a] = G
            inverse[a] = (G, F, tuple(inv[c] for c in comps))
    identity = {F: (F, F, tuple(C.identity[x] for x in F.objects)) for F in functors}
    compose = {}
    by_src: dict = {}
    for a in arrows:
        by_src.setdefault(a[0], []).append(a)
    for a in arrows:
        for b in by_src.get(a[1], ()):
            comps = tuple(C.compose_table[(b[2][i], a[2][i])] for i in range(len(P.objects)))
            compose[(b, a)] = (a[0], b[1], comps)
    return Groupoid(
        tuple(functors), tuple(arrows), src, tgt, identity, compose,
        inverse=inverse, check=False,
    )


def induced_iso_functor(
    F: FiniteFunctor, P: PresentedCategory, GC: Groupoid, GD: Groupoid
) -> FiniteFunctor:
    """Iso(C^P) -> Iso(D^P) by postcomposition with F."""

    def push_functor(H: PresentedFunctor) -> PresentedFunctor:
        return PresentedFunctor(
            tuple(F.object_map[x] for x in H.objects),
            tuple(F.arrow_map[f] for f in H.generators),
        )

    object_map = {H: push_functor(H) for H in GC.objects}
    arrow_map = {
        a: (push_functor(a[0]), push_functor(a[1]), tuple(F.arrow_map[c] for c in a[2]))
        for a in GC.arrows
    }
    return FiniteFunctor(GC, GD, object_map, arrow_map)


@lru_cache(maxsize=None)
def criterion_presentations() -> tuple[tuple[str, PresentedCategory], ...]:
    """The five shapes the criterion ranges over; for dimensions >= 3 the
    boundary inclusion already induces an isomorphism of path categories."""
    shapes = []
    for n in range(3):
        shapes.append((f"P(Delta^{n})", path_category(standard_simplex(n))))
    for n in (1, 2):
        B, _ = build_standard("boundary", n)
        shapes.append((f"P(bdDelta^{n})", path_category(B)))
    return tuple(shapes)


_groupoid_cache: dict = {}


def _cached_iso_groupoid(C: FiniteCategory, shape_name: str, P: PresentedCategory) -> Groupoid:
    key = (id(C), shape_name)
    hit = _groupoid_cache.get(key)
    if hit is None or hit[0] is not C:
        hit = (C, iso_functor_groupoid(C, P))
        _groupoid_cache[key] = hit
    return hit[1]


def enumerate_functors(C: FiniteCategory, D: FiniteCategory) -> list[FiniteFunctor]:
    """Exhaustive functor enumeration, pruned composite by composite."""
    nonid = C.nonidentity_arrows()
    results: list[FiniteFunctor] = []
    for obj_images in iproduct(D.objects, repeat=len(C.objects)):
        obj_map = dict(zip(C.objects, obj_images))
        arrow_map = {C.identity[x]: D.identity[obj_map[x]] for x in C.objects}
        candidates = [
            [
                g
                for g in D.arrows
                if D.src[g] == obj_map[C.src[f]] and D.tgt[g] == obj_map[C.tgt[f]]
            ]
            for f in nonid
        ]

        def consistent(i: int) -> bool:
            # every composition constraint is checked once all three of its
            # arrows are assigned; f may close a triple as a factor or as
            # the composite
            f = nonid[i]
            assigned = list(arrow_map)
            for g in assigned:
                for a, b in ((g, f), (f, g)):
                    if (a, b) in C.compose_table:
                        ab = C.compose_table[(a, b)]
                        if ab in arrow_map and (
                            D.compose_table[(arrow_map[a], arrow_map[b])] != arrow_map[ab]
                        ):
                            return False
            for a in assigned:
                for b in assigned:
                    if C.compose_table.get((a, b)) == f and (
                        D.compose_table[(arrow_map[a], arrow_map[b])] != arrow_map[f]
                    ):
                        return False
            return True

        def rec(i: int):
            if i == len(nonid):
                results.append(FiniteFunctor(C, D, dict(obj_map), dict(arrow_map)))
                return
            for g in candidates[i]:
                arrow_map[nonid[i]] = g
                if consistent(i):
                    rec(i + 1)
                del arrow_map[nonid[i]]

        rec(0)
    return results


def nerve_equivalence_criterion(F: FiniteFunctor, verbose: bool = False):
    """True iff Iso(C^P) -> Iso(D^P) is an equivalence of groupoids for all
    five criterion shapes; decides whether the nerve map is a categorical
    weak equivalence."""
    results = {}
    verdict = True
    for name, P in criterion_presentations():
        GC = _cached_iso_groupoid(F.source, name, P)
        GD = _cached_iso_groupoid(F.target, name, P)
        ok, _w = is_equivalence_of_groupoids(induced_iso_functor(F, P, GC, GD))
        results[name] = ok
        if not ok:
            verdict = False
            if not verbose:
                break
    return (verdict, results) if verbose else verdict
