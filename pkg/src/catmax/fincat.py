"""Finite category engine.

Categories are explicit: finitely many objects and morphisms, with the
composition table stored sparsely, keyed by composable pairs.  Every law
(associativity, identities, functoriality, naturality) is decidable by
enumeration and is checked exhaustively by the validators here.  All ids
are strings, unique within their category, and iteration follows input
order so verdicts are deterministic.

Values are immutable after validation; every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .reporting import Failure, Verdict


class CategoryError(Exception):
    """Structural defect in a category, functor, or natural transformation."""

    def __init__(self, message: str, witnesses: tuple[str, ...] = ()):
        super().__init__(message)
        self.witnesses = witnesses


class MissingComposite(CategoryError):
    def __init__(self, g: str, f: str):
        super().__init__(f"composite of {g!r} after {f!r} is undefined", (g, f))


class NotAssociative(CategoryError):
    def __init__(self, h: str, g: str, f: str):
        super().__init__(f"associativity fails on ({h!r}, {g!r}, {f!r})", (h, g, f))


class IdentityLawFails(CategoryError):
    def __init__(self, m: str, side: str):
        super().__init__(f"identity law ({side}) fails at {m!r}", (m,))


class BreaksComposition(CategoryError):
    def __init__(self, g: str, f: str):
        super().__init__(f"functor breaks composition on ({g!r}, {f!r})", (g, f))


class BreaksIdentity(CategoryError):
    def __init__(self, x: str):
        super().__init__(f"functor breaks identity at object {x!r}", (x,))


class NaturalitySquareFails(CategoryError):
    def __init__(self, f: str):
        super().__init__(f"naturality square fails at {f!r}", (f,))


class ShapeMismatch(CategoryError):
    pass


@dataclass
class FinCategory:
    """A finite category given by explicit tables.

    ``morphisms`` lists (id, dom, cod) triples; ``composition`` maps a pair
    (g, f) with cod(f) = dom(g) to the id of g after f.
    """

    objects: tuple[str, ...]
    morphisms: tuple[tuple[str, str, str], ...]
    identities: dict[str, str]
    composition: dict[tuple[str, str], str]
    name: str = ""

    def __post_init__(self) -> None:
        self.objects = tuple(self.objects)
        self.morphisms = tuple(tuple(m) for m in self.morphisms)
        self._dom = {m: d for m, d, _ in self.morphisms}
        self._cod = {m: c for m, _, c in self.morphisms}
        self._hom: dict[tuple[str, str], list[str]] = {}
        for m, d, c in self.morphisms:
            self._hom.setdefault((d, c), []).append(m)
        self._by_dom: dict[str, list[str]] = {}
        for m, d, _ in self.morphisms:
            self._by_dom.setdefault(d, []).append(m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.morphisms == other.morphisms
            and self.identities == other.identities
            and self.composition == other.composition
        )

    @property
    def morphism_ids(self) -> tuple[str, ...]:
        return tuple(m for m, _, _ in self.morphisms)

    def dom(self, m: str) -> str:
        return self._dom[m]

    def cod(self, m: str) -> str:
        return self._cod[m]

    def identity(self, x: str) -> str:
        return self.identities[x]

    def is_composable(self, g: str, f: str) -> bool:
        return self._cod[f] == self._dom[g]

    def compose(self, g: str, f: str) -> str:
        """Return g after f; the pair must be composable."""
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise MissingComposite(g, f) from None

    def hom(self, a: str, b: str) -> tuple[str, ...]:
        return tuple(self._hom.get((a, b), ()))

    def with_dom(self, x: str) -> tuple[str, ...]:
        return tuple(self._by_dom.get(x, ()))


def validate_category(cat: FinCategory) -> FinCategory:
    """Check all category axioms exhaustively; return the category unchanged.

    Raises MissingComposite, NotAssociative, or IdentityLawFails naming the
    offending morphism ids, or a bare CategoryError for shape defects.
    """
    if len(set(cat.objects)) != len(cat.objects):
        raise CategoryError("duplicate object ids")
    mids = cat.morphism_ids
    if len(set(mids)) != len(mids):
        raise CategoryError("duplicate morphism ids")
    objset = set(cat.objects)
    for m, d, c in cat.morphisms:
        if d not in objset or c not in objset:
            raise CategoryError(f"morphism {m!r} has unknown endpoint", (m,))
    for x in cat.objects:
        i = cat.identities.get(x)
        if i is None or i not in set(mids):
            raise CategoryError(f"object {x!r} has no identity morphism", (x,))
        if cat.dom(i) != x or cat.cod(i) != x:
            raise CategoryError(f"identity of {x!r} is not an endomorphism", (x, i))
    for (g, f), gf in cat.composition.items():
        for m in (g, f, gf):
            if m not in cat._dom:
                raise CategoryError(f"composition table mentions unknown id {m!r}", (m,))
        if not cat.is_composable(g, f):
            raise CategoryError(
                f"composition defined for non-composable pair ({g!r}, {f!r})", (g, f)
            )
        if cat.dom(gf) != cat.dom(f) or cat.cod(gf) != cat.cod(g):
            raise CategoryError(
                f"composite {gf!r} of ({g!r}, {f!r}) has wrong endpoints", (g, f, gf)
            )
    for f in mids:
        for g in cat.with_dom(cat.cod(f)):
            if (g, f) not in cat.composition:
                raise MissingComposite(g, f)
    for m in mids:
        if cat.compose(m, cat.identity(cat.dom(m))) != m:
            raise IdentityLawFails(m, "right")
        if cat.compose(cat.identity(cat.cod(m)), m) != m:
            raise IdentityLawFails(m, "left")
    for f in mids:
        for g in cat.with_dom(cat.cod(f)):
            gf = cat.compose(g, f)
            for h in cat.with_dom(cat.cod(g)):
                if cat.compose(h, gf) != cat.compose(cat.compose(h, g), f):
                    raise NotAssociative(h, g, f)
    return cat


@dataclass
class FunctorData:
    """A functor between two explicit finite categories."""

    source: FinCategory
    target: FinCategory
    obj_map: dict[str, str]
    mor_map: dict[str, str]
    name: str = ""

    def on_obj(self, x: str) -> str:
        return self.obj_map[x]

    def on_mor(self, m: str) -> str:
        return self.mor_map[m]

    def maps_equal(self, other: "FunctorData") -> bool:
        return self.obj_map == other.obj_map and self.mor_map == other.mor_map


def identity_functor(cat: FinCategory) -> FunctorData:
    return FunctorData(
        source=cat,
        target=cat,
        obj_map={x: x for x in cat.objects},
        mor_map={m: m for m in cat.morphism_ids},
        name="id",
    )


def compose_functors(outer: FunctorData, inner: FunctorData) -> FunctorData:
    """outer after inner."""
    if inner.target != outer.source:
        raise ShapeMismatch("functors are not composable")
    return FunctorData(
        source=inner.source,
        target=outer.target,
        obj_map={x: outer.on_obj(inner.on_obj(x)) for x in inner.source.objects},
        mor_map={m: outer.on_mor(inner.on_mor(m)) for m in inner.source.morphism_ids},
        name=f"{outer.name}.{inner.name}",
    )


def validate_functor(fun: FunctorData) -> FunctorData:
    """Exhaustively check that the maps define a functor."""
    src, tgt = fun.source, fun.target
    for x in src.objects:
        if x not in fun.obj_map:
            raise ShapeMismatch(f"object map missing {x!r}", (x,))
        if fun.on_obj(x) not in set(tgt.objects):
            raise ShapeMismatch(f"object map leaves target at {x!r}", (x,))
    tgt_mors = set(tgt.morphism_ids)
    for m in src.morphism_ids:
        if m not in fun.mor_map:
            raise ShapeMismatch(f"morphism map missing {m!r}", (m,))
        fm = fun.on_mor(m)
        if fm not in tgt_mors:
            raise ShapeMismatch(f"morphism map leaves target at {m!r}", (m,))
        if tgt.dom(fm) != fun.on_obj(src.dom(m)) or tgt.cod(fm) != fun.on_obj(src.cod(m)):
            raise ShapeMismatch(f"image of {m!r} has wrong endpoints", (m, fm))
    for x in src.objects:
        if fun.on_mor(src.identity(x)) != tgt.identity(fun.on_obj(x)):
            raise BreaksIdentity(x)
    for f in src.morphism_ids:
        for g in src.with_dom(src.cod(f)):
            if fun.on_mor(src.compose(g, f)) != tgt.compose(fun.on_mor(g), fun.on_mor(f)):
                raise BreaksComposition(g, f)
    return fun


@dataclass
class NatTransformation:
    """A componentwise morphism family between two parallel functors."""

    F: FunctorData
    G: FunctorData
    components: dict[str, str]
    name: str = ""

    def at(self, x: str) -> str:
        return self.components[x]


def validate_nat(alpha: NatTransformation) -> NatTransformation:
    """Check component shapes, then all naturality squares exhaustively."""
    F, G = alpha.F, alpha.G
    if F.source != G.source or F.target != G.target:
        raise ShapeMismatch("functors of a transformation must be parallel")
    src, tgt = F.source, F.target
    tgt_mors = set(tgt.morphism_ids)
    for x in src.objects:
        if x not in alpha.components:
            raise ShapeMismatch(f"component missing at object {x!r}", (x,))
        c = alpha.at(x)
        if c not in tgt_mors:
            raise ShapeMismatch(f"component at {x!r} is not a target morphism", (x, c))
        if tgt.dom(c) != F.on_obj(x) or tgt.cod(c) != G.on_obj(x):
            raise ShapeMismatch(f"component at {x!r} has wrong endpoints", (x, c))
    for f in src.morphism_ids:
        x, y = src.dom(f), src.cod(f)
        if tgt.compose(G.on_mor(f), alpha.at(x)) != tgt.compose(alpha.at(y), F.on_mor(f)):
            raise NaturalitySquareFails(f)
    return alpha


def identity_nat(F: FunctorData) -> NatTransformation:
    return NatTransformation(
        F=F,
        G=F,
        components={x: F.target.identity(F.on_obj(x)) for x in F.source.objects},
        name=f"id[{F.name}]",
    )


def whisker_left(fun: FunctorData, alpha: NatTransformation) -> NatTransformation:
    """(F alpha)_x := F(alpha_x), a transformation F.A -> F.B."""
    if alpha.F.target != fun.source:
        raise ShapeMismatch("whisker_left shapes do not match")
    out = NatTransformation(
        F=compose_functors(fun, alpha.F),
        G=compose_functors(fun, alpha.G),
        components={x: fun.on_mor(alpha.at(x)) for x in alpha.F.source.objects},
        name=f"{fun.name}.{alpha.name}",
    )
    return validate_nat(out)


def whisker_right(alpha: NatTransformation, fun: FunctorData) -> NatTransformation:
    """(alpha F)_x := alpha_{F(x)}, a transformation A.F -> B.F."""
    if fun.target != alpha.F.source:
        raise ShapeMismatch("whisker_right shapes do not match")
    out = NatTransformation(
        F=compose_functors(alpha.F, fun),
        G=compose_functors(alpha.G, fun),
        components={x: alpha.at(fun.on_obj(x)) for x in fun.source.objects},
        name=f"{alpha.name}.{fun.name}",
    )
    return validate_nat(out)


def inverse_morphism(cat: FinCategory, m: str) -> str | None:
    """Find a two-sided inverse by scanning hom(cod m, dom m)."""
    d, c = cat.dom(m), cat.cod(m)
    for g in cat.hom(c, d):
        if cat.compose(g, m) == cat.identity(d) and cat.compose(m, g) == cat.identity(c):
            return g
    return None


def is_iso(cat: FinCategory, m: str) -> bool:
    return inverse_morphism(cat, m) is not None


def is_mono(cat: FinCategory, m: str) -> bool:
    """Exact left-cancellation test over all parallel pairs into dom(m)."""
    d = cat.dom(m)
    for a in cat.objects:
        pre = cat.hom(a, d)
        for i, g in enumerate(pre):
            for h in pre[i + 1 :]:
                if cat.compose(m, g) == cat.compose(m, h):
                    return False
    return True


def is_epi(cat: FinCategory, m: str) -> bool:
    """Exact right-cancellation test over all parallel pairs out of cod(m)."""
    c = cat.cod(m)
    for b in cat.objects:
        post = cat.hom(c, b)
        for i, g in enumerate(post):
            for h in post[i + 1 :]:
                if cat.compose(g, m) == cat.compose(h, m):
                    return False
    return True


def full_subcategory(cat: FinCategory, keep: Iterable[str] | Callable[[str], bool]) -> FinCategory:
    """Objects filtered, all morphisms between survivors kept."""
    if callable(keep):
        objs = tuple(x for x in cat.objects if keep(x))
    else:
        kept = set(keep)
        objs = tuple(x for x in cat.objects if x in kept)
    objset = set(objs)
    mors = tuple(
        (m, d, c) for m, d, c in cat.morphisms if d in objset and c in objset
    )
    mset = {m for m, _, _ in mors}
    return FinCategory(
        objects=objs,
        morphisms=mors,
        identities={x: cat.identity(x) for x in objs},
        composition={
            (g, f): gf for (g, f), gf in cat.composition.items() if g in mset and f in mset
        },
        name=f"{cat.name}|{','.join(objs)}",
    )


@dataclass
class CommaCategory:
    """A comma category presented as an explicit finite category.

    Objects are tagged by (anchor object, arrow); the arrow id doubles as
    the comma object id since it determines the tag.  Morphism tags record
    the underlying ambient morphism of each commuting triangle.
    """

    category: FinCategory
    ambient: FinCategory
    obj_tags: dict[str, tuple[str, str]]
    mor_tags: dict[str, str]


def _build_comma(
    ambient: FinCategory,
    objs: list[tuple[str, str]],
    triangle: Callable[[str, str, str], bool],
    name: str,
) -> CommaCategory:
    """Assemble a comma category from tagged objects and a triangle predicate.

    ``objs`` holds (anchor, arrow) tags; ``triangle(h, f, f2)`` decides
    whether ambient morphism h is a morphism from tag-arrow f to tag-arrow f2.
    """
    obj_ids = [f for _, f in objs]
    anchors = dict((f, n) for n, f in objs)
    morphisms: list[tuple[str, str, str]] = []
    mor_tags: dict[str, str] = {}
    comp: dict[tuple[str, str], str] = {}
    identities: dict[str, str] = {}

    def mid(h: str, f: str, f2: str) -> str:
        return f"{h}[{f}=>{f2}]"

    for f in obj_ids:
        for f2 in obj_ids:
            for h in ambient.hom(anchors[f], anchors[f2]):
                if triangle(h, f, f2):
                    m = mid(h, f, f2)
                    morphisms.append((m, f, f2))
                    mor_tags[m] = h
    for f in obj_ids:
        identities[f] = mid(ambient.identity(anchors[f]), f, f)
    valid = {m for m, _, _ in morphisms}
    for m1, f, f2 in morphisms:
        for m2, g, g2 in morphisms:
            if g != f2:
                continue
            m = mid(ambient.compose(mor_tags[m2], mor_tags[m1]), f, g2)
            if m not in valid:  # cannot happen for genuine comma data
                raise CategoryError("comma category is not closed under composition")
            comp[(m2, m1)] = m
    cat = FinCategory(
        objects=tuple(obj_ids),
        morphisms=tuple(morphisms),
        identities=identities,
        composition=comp,
        name=name,
    )
    return CommaCategory(
        category=validate_category(cat),
        ambient=ambient,
        obj_tags={f: (anchors[f], f) for f in obj_ids},
        mor_tags=mor_tags,
    )


def comma_category(a: str, fun: FunctorData, sub_objects: Iterable[str]) -> CommaCategory:
    """The comma category (fun a) -> S for a full subcategory selection S.

    Objects are pairs (n in S, f: fun(a) -> n); morphisms are ambient
    morphisms h: n -> n' with h after f equal to f'.
    """
    ambient = fun.target
    src = fun.on_obj(a)
    subs = [x for x in ambient.objects if x in set(sub_objects)]
    objs = [(n, f) for n in subs for f in ambient.hom(src, n)]
    return _build_comma(
        ambient,
        objs,
        lambda h, f, f2: ambient.compose(h, f) == f2,
        name=f"({fun.name} {a})/S",
    )


def comma_category_into(sub_objects: Iterable[str], fun: FunctorData, a: str) -> CommaCategory:
    """The comma category S -> (fun a), dual to :func:`comma_category`.

    Objects are pairs (m in S, f: m -> fun(a)); morphisms are ambient
    morphisms h: m -> m' with f' after h equal to f.
    """
    ambient = fun.target
    tgt = fun.on_obj(a)
    subs = [x for x in ambient.objects if x in set(sub_objects)]
    objs = [(m, f) for m in subs for f in ambient.hom(m, tgt)]
    return _build_comma(
        ambient,
        objs,
        lambda h, f, f2: ambient.compose(f2, h) == f,
        name=f"S/({fun.name} {a})",
    )


def is_initial(cat: FinCategory, o: str) -> bool:
    return all(len(cat.hom(o, c)) == 1 for c in cat.objects)


def is_final(cat: FinCategory, o: str) -> bool:
    return all(len(cat.hom(c, o)) == 1 for c in cat.objects)


def find_initial(cat: FinCategory) -> list[str]:
    """All initial objects, in declaration order (they are isomorphic)."""
    return [o for o in cat.objects if is_initial(cat, o)]


def find_final(cat: FinCategory) -> list[str]:
    return [o for o in cat.objects if is_final(cat, o)]


def check_equivalence(
    F: FunctorData,
    G: FunctorData,
    unit: NatTransformation,
    counit: NatTransformation,
) -> Verdict:
    """Verify that (F, G, unit, counit) is an adjoint equivalence.

    unit: id -> G.F and counit: F.G -> id must be natural isomorphisms and
    the two triangle identities must hold.  The verdict carries the full
    list of failing components.
    """
    validate_functor(F)
    validate_functor(G)
    if F.source != G.target or F.target != G.source:
        raise ShapeMismatch("functors do not form a round trip")
    M, N = F.source, F.target
    gf = compose_functors(G, F)
    fg = compose_functors(F, G)
    if not unit.F.maps_equal(identity_functor(M)) or not unit.G.maps_equal(gf):
        raise ShapeMismatch("unit does not run from the identity to G.F")
    if not counit.F.maps_equal(fg) or not counit.G.maps_equal(identity_functor(N)):
        raise ShapeMismatch("counit does not run from F.G to the identity")

    failures: list[Failure] = []
    for nat, label in ((unit, "unit"), (counit, "counit")):
        try:
            validate_nat(nat)
        except NaturalitySquareFails as e:
            failures.append(Failure("NotNatural", (label,) + e.witnesses, str(e)))
    for x in M.objects:
        if not is_iso(M, unit.at(x)):
            failures.append(Failure("NotIso", ("unit", x), f"unit component at {x!r} is not iso"))
    for y in N.objects:
        if not is_iso(N, counit.at(y)):
            failures.append(Failure("NotIso", ("counit", y), f"counit component at {y!r} is not iso"))
    for x in M.objects:
        fx = F.on_obj(x)
        if N.compose(counit.at(fx), F.on_mor(unit.at(x))) != N.identity(fx):
            failures.append(Failure("TriangleFails", ("F", x), f"triangle identity fails at {x!r}"))
    for y in N.objects:
        gy = G.on_obj(y)
        if M.compose(G.on_mor(counit.at(y)), unit.at(gy)) != M.identity(gy):
            failures.append(Failure("TriangleFails", ("G", y), f"triangle identity fails at {y!r}"))
    return Verdict.from_failures("adjoint-equivalence", failures)
