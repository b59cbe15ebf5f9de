"""Fixture generators: posets, closure/interior operators, Galois connections,
group and monoid categories, groupoids, bundles, graded diagrams, and the
seeded corpora the theorem oracles run over.

Every generator output passes the corresponding validator; generation is
deterministic for a fixed seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from . import fincat, gradecat, groupalg, maxnor, monadics
from .fincat import FinCategory, FunctorData, NatTransformation
from .gradecat import Diagram, DiagramMorphism, GradedMorphism, GradedObject
from .groupalg import Cocycle, FiniteGroupoid, MatrixFellBundle
from .maxnor import MaxNorSetup
from .monadics import ComonadCandidate, MonadCandidate


class NotAPartialOrder(Exception):
    pass


class NotClosure(Exception):
    pass


class NotInterior(Exception):
    pass


class NotAdjoint(Exception):
    pass


@dataclass
class Poset:
    """A finite partial order with an explicit relation set."""

    elements: tuple[str, ...]
    relation: frozenset[tuple[str, str]]

    def leq(self, a: str, b: str) -> bool:
        return (a, b) in self.relation


def make_poset(elements: list[str], pairs: list[tuple[str, str]]) -> Poset:
    """Validate reflexivity, antisymmetry, and transitivity exhaustively."""
    els = tuple(elements)
    rel = frozenset(pairs)
    for a, b in rel:
        if a not in els or b not in els:
            raise NotAPartialOrder(f"relation mentions unknown element ({a!r}, {b!r})")
    for a in els:
        if (a, a) not in rel:
            raise NotAPartialOrder(f"relation is not reflexive at {a!r}")
    for a, b in rel:
        if a != b and (b, a) in rel:
            raise NotAPartialOrder(f"relation is not antisymmetric on ({a!r}, {b!r})")
    for a, b in rel:
        for c in els:
            if (b, c) in rel and (a, c) not in rel:
                raise NotAPartialOrder(f"relation is not transitive via ({a!r}, {b!r}, {c!r})")
    return Poset(elements=els, relation=rel)


def chain(n: int) -> Poset:
    els = [str(i) for i in range(n)]
    pairs = [(str(i), str(j)) for i in range(n) for j in range(n) if i <= j]
    return make_poset(els, pairs)


def product_poset(p: Poset, q: Poset) -> Poset:
    els = [f"{a},{b}" for a in p.elements for b in q.elements]
    pairs = [
        (f"{a},{b}", f"{c},{d}")
        for a in p.elements
        for b in q.elements
        for c in p.elements
        for d in q.elements
        if p.leq(a, c) and q.leq(b, d)
    ]
    return make_poset(els, pairs)


def diamond(width: int) -> Poset:
    """Bottom, an antichain of the given width, and a top."""
    mids = [f"m{i}" for i in range(width)]
    els = ["bot", *mids, "top"]
    pairs = [(e, e) for e in els]
    pairs += [("bot", e) for e in els if e != "bot"]
    pairs += [(e, "top") for e in els if e != "top"]
    return make_poset(els, pairs)


def _le_id(a: str, b: str) -> str:
    return f"{a}<={b}"


def poset_to_category(poset: Poset) -> FinCategory:
    """The thin category with one morphism per related pair."""
    mors = [
        (_le_id(a, b), a, b) for a in poset.elements for b in poset.elements if poset.leq(a, b)
    ]
    comp = {}
    for m1, a, b in mors:
        for m2, b2, c in mors:
            if b2 == b:
                comp[(m2, m1)] = _le_id(a, c)
    cat = FinCategory(
        objects=poset.elements,
        morphisms=tuple(mors),
        identities={a: _le_id(a, a) for a in poset.elements},
        composition=comp,
        name=f"poset{len(poset.elements)}",
    )
    return fincat.validate_category(cat)


def _monotone_endofunctor(poset: Poset, cat: FinCategory, f: dict[str, str], name: str) -> FunctorData:
    return FunctorData(
        source=cat,
        target=cat,
        obj_map=dict(f),
        mor_map={
            _le_id(a, b): _le_id(f[a], f[b])
            for a in poset.elements
            for b in poset.elements
            if poset.leq(a, b)
        },
        name=name,
    )


def closure_to_monad(poset: Poset, c: dict[str, str]) -> MonadCandidate:
    """A closure operator (monotone, inflationary, idempotent) as a monad."""
    for a in poset.elements:
        if c.get(a) not in poset.elements:
            raise NotClosure(f"map is not defined inside the poset at {a!r}")
        if not poset.leq(a, c[a]):
            raise NotClosure(f"map is not inflationary at {a!r}")
        if c[c[a]] != c[a]:
            raise NotClosure(f"map is not idempotent at {a!r}")
        for b in poset.elements:
            if poset.leq(a, b) and not poset.leq(c[a], c[b]):
                raise NotClosure(f"map is not monotone on ({a!r}, {b!r})")
    cat = poset_to_category(poset)
    fun = fincat.validate_functor(_monotone_endofunctor(poset, cat, c, "closure"))
    unit = fincat.validate_nat(
        NatTransformation(
            F=fincat.identity_functor(cat),
            G=fun,
            components={a: _le_id(a, c[a]) for a in poset.elements},
            name="unit",
        )
    )
    return monadics.MonadCandidate(category=cat, functor=fun, unit=unit, name="closure-monad")


def interior_to_comonad(poset: Poset, k: dict[str, str]) -> ComonadCandidate:
    """An interior operator (monotone, deflationary, idempotent) as a comonad."""
    for a in poset.elements:
        if k.get(a) not in poset.elements:
            raise NotInterior(f"map is not defined inside the poset at {a!r}")
        if not poset.leq(k[a], a):
            raise NotInterior(f"map is not deflationary at {a!r}")
        if k[k[a]] != k[a]:
            raise NotInterior(f"map is not idempotent at {a!r}")
        for b in poset.elements:
            if poset.leq(a, b) and not poset.leq(k[a], k[b]):
                raise NotInterior(f"map is not monotone on ({a!r}, {b!r})")
    cat = poset_to_category(poset)
    fun = fincat.validate_functor(_monotone_endofunctor(poset, cat, k, "interior"))
    counit = fincat.validate_nat(
        NatTransformation(
            F=fun,
            G=fincat.identity_functor(cat),
            components={a: _le_id(k[a], a) for a in poset.elements},
            name="counit",
        )
    )
    return monadics.ComonadCandidate(category=cat, functor=fun, counit=counit, name="interior-comonad")


def make_setup(
    poset: Poset, interior: dict[str, str], closure: dict[str, str], name: str = ""
) -> MaxNorSetup:
    """Package an interior and a closure on one poset as a joint setup."""
    comonad = interior_to_comonad(poset, interior)
    monad = closure_to_monad(poset, closure)
    # both candidates must share one category value
    monad = monadics.MonadCandidate(
        category=comonad.category,
        functor=FunctorData(
            source=comonad.category,
            target=comonad.category,
            obj_map=monad.functor.obj_map,
            mor_map=monad.functor.mor_map,
            name=monad.functor.name,
        ),
        unit=NatTransformation(
            F=fincat.identity_functor(comonad.category),
            G=FunctorData(
                source=comonad.category,
                target=comonad.category,
                obj_map=monad.functor.obj_map,
                mor_map=monad.functor.mor_map,
                name=monad.functor.name,
            ),
            components=monad.unit.components,
            name="unit",
        ),
        name=monad.name,
    )
    return MaxNorSetup(category=comonad.category, comonad=comonad, monad=monad, name=name)


def galois_to_setup(
    p: Poset, q: Poset, f: dict[str, str], g: dict[str, str], name: str = ""
) -> MaxNorSetup:
    """Package an adjoint pair f -| g between two posets as a joint setup.

    The adjunction f(a) <= b iff a <= g(b) is verified exhaustively.  The
    ambient category is the disjoint union of the two posets; the monad is
    the g-after-f closure on the left summand (identity on the right), and
    the comonad is the f-after-g interior on the right summand (identity on
    the left).
    """
    for a in p.elements:
        if f.get(a) not in q.elements:
            raise NotAdjoint(f"left map leaves the right poset at {a!r}")
    for b in q.elements:
        if g.get(b) not in p.elements:
            raise NotAdjoint(f"right map leaves the left poset at {b!r}")
    for a in p.elements:
        for b in q.elements:
            if q.leq(f[a], b) != p.leq(a, g[b]):
                raise NotAdjoint(f"adjunction equivalence fails on ({a!r}, {b!r})")
    for a in p.elements:
        for a2 in p.elements:
            if p.leq(a, a2) and not q.leq(f[a], f[a2]):
                raise NotAdjoint(f"left map is not monotone on ({a!r}, {a2!r})")
    for b in q.elements:
        for b2 in q.elements:
            if q.leq(b, b2) and not p.leq(g[b], g[b2]):
                raise NotAdjoint(f"right map is not monotone on ({b!r}, {b2!r})")

    union = make_poset(
        [f"L:{a}" for a in p.elements] + [f"R:{b}" for b in q.elements],
        [(f"L:{a}", f"L:{b}") for a, b in p.relation]
        + [(f"R:{a}", f"R:{b}") for a, b in q.relation],
    )
    closure = {f"L:{a}": f"L:{g[f[a]]}" for a in p.elements}
    closure.update({f"R:{b}": f"R:{b}" for b in q.elements})
    interior = {f"L:{a}": f"L:{a}" for a in p.elements}
    interior.update({f"R:{b}": f"R:{f[g[b]]}" for b in q.elements})
    return make_setup(union, interior, closure, name=name or "galois-setup")


def monoid_category(elements: list[str], table: dict[tuple[str, str], str], unit: str, name: str = "") -> FinCategory:
    """A one-object category whose morphisms are the monoid elements."""
    obj = "*"
    cat = FinCategory(
        objects=(obj,),
        morphisms=tuple((e, obj, obj) for e in elements),
        identities={obj: unit},
        composition=dict(table),
        name=name or "monoid",
    )
    return fincat.validate_category(cat)


def cyclic_group_table(n: int) -> tuple[list[str], dict[tuple[str, str], str], str]:
    els = [f"g{i}" for i in range(n)]
    table = {(f"g{i}", f"g{j}"): f"g{(i + j) % n}" for i in range(n) for j in range(n)}
    return els, table, "g0"


def klein_group_table() -> tuple[list[str], dict[tuple[str, str], str], str]:
    els = ["e", "a", "b", "ab"]
    bits = {"e": (0, 0), "a": (1, 0), "b": (0, 1), "ab": (1, 1)}
    names = {v: k for k, v in bits.items()}
    table = {
        (x, y): names[((bits[x][0] + bits[y][0]) % 2, (bits[x][1] + bits[y][1]) % 2)]
        for x in els
        for y in els
    }
    return els, table, "e"


def symmetric3_table() -> tuple[list[str], dict[tuple[str, str], str], str]:
    perms = {
        "e": (0, 1, 2),
        "r": (1, 2, 0),
        "rr": (2, 0, 1),
        "s": (1, 0, 2),
        "sr": (0, 2, 1),
        "srr": (2, 1, 0),
    }
    names = {v: k for k, v in perms.items()}
    els = list(perms)

    def mul(x: str, y: str) -> str:
        px, py = perms[x], perms[y]
        return names[tuple(px[py[i]] for i in range(3))]

    return els, {(x, y): mul(x, y) for x in els for y in els}, "e"


def conjugation_comonad(
    elements: list[str],
    table: dict[tuple[str, str], str],
    unit: str,
    p: str,
    name: str = "",
) -> ComonadCandidate:
    """On a group category, the inner endofunctor with counit component p.

    Naturality forces the endofunctor to conjugate by the inverse of p.
    """
    cat = monoid_category(elements, table, unit, name=name)
    inv = {}
    for x in elements:
        for y in elements:
            if table[(x, y)] == unit and table[(y, x)] == unit:
                inv[x] = y
    fun = fincat.validate_functor(
        FunctorData(
            source=cat,
            target=cat,
            obj_map={"*": "*"},
            mor_map={x: table[(table[(inv[p], x)], p)] for x in elements},
            name=f"conj[{p}]",
        )
    )
    counit = fincat.validate_nat(
        NatTransformation(
            F=fun,
            G=fincat.identity_functor(cat),
            components={"*": p},
            name="counit",
        )
    )
    return ComonadCandidate(category=cat, functor=fun, counit=counit, name=f"{name}-conj-{p}")


def conjugation_monad(
    elements: list[str],
    table: dict[tuple[str, str], str],
    unit: str,
    q: str,
    name: str = "",
) -> MonadCandidate:
    """Dual of :func:`conjugation_comonad`: unit component q, conjugation by q."""
    cat = monoid_category(elements, table, unit, name=name)
    inv = {}
    for x in elements:
        for y in elements:
            if table[(x, y)] == unit and table[(y, x)] == unit:
                inv[x] = y
    fun = fincat.validate_functor(
        FunctorData(
            source=cat,
            target=cat,
            obj_map={"*": "*"},
            mor_map={x: table[(table[(q, x)], inv[q])] for x in elements},
            name=f"conj[{q}]",
        )
    )
    nat = fincat.validate_nat(
        NatTransformation(
            F=fincat.identity_functor(cat),
            G=fun,
            components={"*": q},
            name="unit",
        )
    )
    return MonadCandidate(category=cat, functor=fun, unit=nat, name=f"{name}-conj-{q}")


def idempotent_monoid_monad() -> MonadCandidate:
    """A hand-authored defect: the unit component is a non-invertible idempotent.

    Classification must report that the functor-side whisker is not an
    isomorphism, so the candidate is not even a semimonad.
    """
    els = ["1", "z"]
    table = {("1", "1"): "1", ("1", "z"): "z", ("z", "1"): "z", ("z", "z"): "z"}
    cat = monoid_category(els, table, "1", name="idem-monoid")
    fun = fincat.identity_functor(cat)
    nat = fincat.validate_nat(
        NatTransformation(
            F=fincat.identity_functor(cat), G=fun, components={"*": "z"}, name="unit"
        )
    )
    return MonadCandidate(category=cat, functor=fun, unit=nat, name="idem-monoid-monad")


def parallel_pair_category() -> FinCategory:
    """Two objects with a parallel pair of arrows; the smallest non-thin shape."""
    mors = (
        ("id0", "0", "0"),
        ("id1", "1", "1"),
        ("a", "0", "1"),
        ("b", "0", "1"),
    )
    comp = {
        ("id0", "id0"): "id0",
        ("id1", "id1"): "id1",
        ("a", "id0"): "a",
        ("id1", "a"): "a",
        ("b", "id0"): "b",
        ("id1", "b"): "b",
    }
    return fincat.validate_category(
        FinCategory(
            objects=("0", "1"),
            morphisms=mors,
            identities={"0": "id0", "1": "id1"},
            composition=comp,
            name="parallel-pair",
        )
    )


def identity_comonad(cat: FinCategory) -> ComonadCandidate:
    fun = fincat.identity_functor(cat)
    return ComonadCandidate(
        category=cat, functor=fun, counit=fincat.identity_nat(fun), name=f"{cat.name}-id-comonad"
    )


def identity_monad(cat: FinCategory) -> MonadCandidate:
    fun = fincat.identity_functor(cat)
    return MonadCandidate(
        category=cat, functor=fun, unit=fincat.identity_nat(fun), name=f"{cat.name}-id-monad"
    )


# ---------------------------------------------------------------------------
# standard poset operators


def chain3_interior() -> dict[str, str]:
    return {"0": "0", "1": "0", "2": "2"}


def chain3_closure() -> dict[str, str]:
    return {"0": "0", "1": "2", "2": "2"}


def chain2_setup() -> MaxNorSetup:
    return make_setup(chain(2), {"0": "0", "1": "0"}, {"0": "1", "1": "1"}, name="chain2")


def chain3_setup() -> MaxNorSetup:
    return make_setup(chain(3), chain3_interior(), chain3_closure(), name="chain3")


def identity_setup(cat: FinCategory, name: str = "") -> MaxNorSetup:
    return MaxNorSetup(
        category=cat,
        comonad=identity_comonad(cat),
        monad=identity_monad(cat),
        name=name or f"{cat.name}-identity",
    )


# ---------------------------------------------------------------------------
# operator enumeration for the corpus


def enumerate_closures(poset: Poset) -> list[dict[str, str]]:
    """All monotone inflationary idempotent self-maps, by filtered search."""
    els = poset.elements
    out = []
    uppers = {a: [b for b in els if poset.leq(a, b)] for a in els}
    for choice in product(*(uppers[a] for a in els)):
        c = dict(zip(els, choice))
        if any(c[c[a]] != c[a] for a in els):
            continue
        if any(
            poset.leq(a, b) and not poset.leq(c[a], c[b]) for a in els for b in els
        ):
            continue
        out.append(c)
    return out


def enumerate_interiors(poset: Poset) -> list[dict[str, str]]:
    els = poset.elements
    out = []
    lowers = {a: [b for b in els if poset.leq(b, a)] for a in els}
    for choice in product(*(lowers[a] for a in els)):
        k = dict(zip(els, choice))
        if any(k[k[a]] != k[a] for a in els):
            continue
        if any(
            poset.leq(a, b) and not poset.leq(k[a], k[b]) for a in els for b in els
        ):
            continue
        out.append(k)
    return out


@dataclass
class CorpusEntry:
    fixture_id: str
    candidate: ComonadCandidate | MonadCandidate
    thin: bool


def monad_comonad_corpus(seed: int = 42) -> list[CorpusEntry]:
    """At least 100 candidates, at least 10 on non-thin categories.

    Thin entries enumerate interior/closure operators on chains, a grid,
    and a diamond; non-thin entries are conjugation structures on group
    categories, identity structures on a parallel-pair category, and a
    non-invertible monoid defect.
    """
    rng = np.random.default_rng(seed)
    entries: list[CorpusEntry] = []

    posets = [
        ("chain2", chain(2)),
        ("chain3", chain(3)),
        ("chain4", chain(4)),
        ("chain5", chain(5)),
        ("grid22", product_poset(chain(2), chain(2))),
        ("diamond2", diamond(2)),
    ]
    for pname, poset in posets:
        for idx, k in enumerate(enumerate_interiors(poset)):
            entries.append(
                CorpusEntry(f"{pname}-interior-{idx}", interior_to_comonad(poset, k), thin=True)
            )
        for idx, c in enumerate(enumerate_closures(poset)):
            entries.append(
                CorpusEntry(f"{pname}-closure-{idx}", closure_to_monad(poset, c), thin=True)
            )

    groups = [
        ("z2", *cyclic_group_table(2)),
        ("z3", *cyclic_group_table(3)),
        ("z4", *cyclic_group_table(4)),
        ("k4", *klein_group_table()),
        ("s3", *symmetric3_table()),
    ]
    for gname, els, table, unit in groups:
        for p in els:
            entries.append(
                CorpusEntry(
                    f"{gname}-comonad-{p}",
                    conjugation_comonad(els, table, unit, p, name=gname),
                    thin=False,
                )
            )
            entries.append(
                CorpusEntry(
                    f"{gname}-monad-{p}",
                    conjugation_monad(els, table, unit, p, name=gname),
                    thin=False,
                )
            )
    par = parallel_pair_category()
    entries.append(CorpusEntry("parallel-id-comonad", identity_comonad(par), thin=False))
    entries.append(CorpusEntry("parallel-id-monad", identity_monad(par), thin=False))
    entries.append(CorpusEntry("idem-monoid-monad", idempotent_monoid_monad(), thin=False))

    order = rng.permutation(len(entries))
    return [entries[i] for i in order]


def setup_corpus(seed: int = 42, minimum: int = 50) -> list[tuple[str, MaxNorSetup]]:
    """At least the requested number of joint setups, seeded and deterministic."""
    rng = np.random.default_rng(seed)
    out: list[tuple[str, MaxNorSetup]] = [
        ("chain2", chain2_setup()),
        ("chain3", chain3_setup()),
        ("chain2-identity", identity_setup(poset_to_category(chain(2)))),
    ]
    posets = [
        ("chain3", chain(3)),
        ("chain4", chain(4)),
        ("grid22", product_poset(chain(2), chain(2))),
        ("diamond2", diamond(2)),
    ]
    for pname, poset in posets:
        interiors = enumerate_interiors(poset)
        closures = enumerate_closures(poset)
        pairs = [(i, c) for i in range(len(interiors)) for c in range(len(closures))]
        take = rng.permutation(len(pairs))[: max(1, minimum // len(posets))]
        for t in take:
            i, c = pairs[int(t)]
            out.append(
                (
                    f"{pname}-setup-{i}-{c}",
                    make_setup(poset, interiors[i], closures[c], name=f"{pname}-{i}-{c}"),
                )
            )
    els, table, unit = symmetric3_table()
    for p in ("e", "r", "s"):
        for q in ("e", "rr", "sr"):
            cand_c = conjugation_comonad(els, table, unit, p, name="s3")
            cand_m = conjugation_monad(els, table, unit, q, name="s3")
            cand_m = MonadCandidate(
                category=cand_c.category,
                functor=FunctorData(
                    source=cand_c.category,
                    target=cand_c.category,
                    obj_map=cand_m.functor.obj_map,
                    mor_map=cand_m.functor.mor_map,
                ),
                unit=NatTransformation(
                    F=fincat.identity_functor(cand_c.category),
                    G=FunctorData(
                        source=cand_c.category,
                        target=cand_c.category,
                        obj_map=cand_m.functor.obj_map,
                        mor_map=cand_m.functor.mor_map,
                    ),
                    components=cand_m.unit.components,
                ),
            )
            out.append(
                (
                    f"s3-setup-{p}-{q}",
                    MaxNorSetup(category=cand_c.category, comonad=cand_c, monad=cand_m, name=f"s3-{p}-{q}"),
                )
            )
    f = {"0": "0", "1": "1"}
    out.append(("galois-chain2-id", galois_to_setup(chain(2), chain(2), f, f, name="galois-id")))
    out.append(
        (
            "galois-chain2-kc",
            galois_to_setup(
                chain(2),
                chain(2),
                {"0": "0", "1": "0"},
                {"0": "1", "1": "1"},
                name="galois-kc",
            ),
        )
    )
    out.append(
        (
            "galois-chain3-round",
            galois_to_setup(
                chain(3),
                chain(2),
                {"0": "0", "1": "1", "2": "1"},
                {"0": "0", "1": "2"},
                name="galois-round",
            ),
        )
    )
    return out


# ---------------------------------------------------------------------------
# groupoids and bundles


def group_groupoid(elements: list[str], table: dict[tuple[str, str], str], unit: str, name: str = "") -> FiniteGroupoid:
    inv = {}
    for x in elements:
        for y in elements:
            if table[(x, y)] == unit and table[(y, x)] == unit:
                inv[x] = y
    gpd = FiniteGroupoid(
        units=(unit,),
        arrows=tuple(elements),
        range_map={x: unit for x in elements},
        source_map={x: unit for x in elements},
        composition=dict(table),
        inverse=inv,
        name=name or "group",
    )
    return groupalg.validate_groupoid(gpd)


def pair_groupoid(points: list[str], name: str = "") -> FiniteGroupoid:
    arrows = [f"({i},{j})" for i in points for j in points]
    units = tuple(f"({i},{i})" for i in points)
    comp = {}
    for i in points:
        for j in points:
            for k in points:
                comp[(f"({i},{j})", f"({j},{k})")] = f"({i},{k})"
    gpd = FiniteGroupoid(
        units=units,
        arrows=tuple(arrows),
        range_map={f"({i},{j})": f"({i},{i})" for i in points for j in points},
        source_map={f"({i},{j})": f"({j},{j})" for i in points for j in points},
        composition=comp,
        inverse={f"({i},{j})": f"({j},{i})" for i in points for j in points},
        name=name or f"pair{len(points)}",
    )
    return groupalg.validate_groupoid(gpd)


def z2_bundle(dim: int = 1) -> MatrixFellBundle:
    els, table, unit = cyclic_group_table(2)
    gpd = group_groupoid(els, table, unit, name="z2")
    return groupalg.validate_bundle(
        MatrixFellBundle(groupoid=gpd, dims={unit: dim}, cocycle=None, name=f"z2-d{dim}")
    )


def pair_bundle(n_points: int = 2, dim: int = 1) -> MatrixFellBundle:
    points = [str(i + 1) for i in range(n_points)]
    gpd = pair_groupoid(points)
    return groupalg.validate_bundle(
        MatrixFellBundle(
            groupoid=gpd,
            dims={u: dim for u in gpd.units},
            cocycle=None,
            name=f"pair{n_points}-d{dim}",
        )
    )


def k4tw_bundle() -> MatrixFellBundle:
    """The Klein group with the anticommuting bicharacter twist.

    With elements written as bit pairs, the twist on a product is -1 raised
    to (second bit of the left factor) times (first bit of the right
    factor); the two single-bit generators then anticommute.
    """
    els, table, unit = klein_group_table()
    gpd = group_groupoid(els, table, unit, name="k4")
    bits = {"e": (0, 0), "a": (1, 0), "b": (0, 1), "ab": (1, 1)}
    vals = {
        (x, y): complex((-1) ** (bits[x][1] * bits[y][0]))
        for x in els
        for y in els
    }
    return groupalg.validate_bundle(
        MatrixFellBundle(groupoid=gpd, dims={unit: 1}, cocycle=Cocycle(vals), name="k4tw")
    )


# ---------------------------------------------------------------------------
# graded objects and diagrams


def fourier_z2_object() -> GradedObject:
    """The diagonal model of the order-two group bundle.

    The even/odd section basis maps to diag(s + t, s - t); the character
    transform is invertible, so this is a valid non-canonical grading.
    """
    bundle = z2_bundle(1)
    basis = [np.diag([1.0 + 0j, 0.0]), np.diag([0.0, 1.0 + 0j])]
    embedding = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex)
    return GradedObject(bundle=bundle, basis=basis, embedding=embedding, name="z2-fourier")


def sign_fiber_maps(bundle: MatrixFellBundle) -> dict[str, np.ndarray]:
    """Identity on the unit fiber, negation on the order-two arrow."""
    out = gradecat.identity_fiber_maps(bundle)
    out["g1"] = -out["g1"]
    return out


def standard_graded_diagram() -> Diagram:
    """The shipped diagram: canonical and diagonal-model objects over the
    order-two group, canonical pair-groupoid and twisted Klein objects, a
    sign automorphism, the character transform between the two models,
    and their declared composite."""
    z2 = z2_bundle(1)
    can = gradecat.canonical_object(z2, "full")
    can.name = "z2-canonical"
    fourier = fourier_z2_object()
    pair = gradecat.canonical_object(pair_bundle(2, 1), "full")
    pair.name = "pair2-canonical"
    k4 = gradecat.canonical_object(k4tw_bundle(), "full")
    k4.name = "k4tw-canonical"

    sign = sign_fiber_maps(z2)
    sign_sec = gradecat.induce_section_map(z2, z2, sign)
    sign_on_canonical = GradedMorphism(
        source=can,
        target=can,
        algebra_map=sign_sec,
        fiber_maps=sign,
        name="sign",
    )
    # the canonical-to-diagonal comparison: identity fiber maps, character
    # transform on the algebra side
    ident = gradecat.identity_fiber_maps(z2)
    transform = GradedMorphism(
        source=can,
        target=fourier,
        algebra_map=fourier.embedding @ np.eye(2, dtype=complex),
        fiber_maps=ident,
        name="transform",
    )
    transform_after_sign = GradedMorphism(
        source=can,
        target=fourier,
        algebra_map=transform.algebra_map @ sign_sec,
        fiber_maps=sign,
        name="transform-after-sign",
    )
    return Diagram(
        objects={
            "z2-canonical": can,
            "z2-fourier": fourier,
            "pair2-canonical": pair,
            "k4tw-canonical": k4,
        },
        morphisms={
            "sign": DiagramMorphism("z2-canonical", "z2-canonical", sign_on_canonical),
            "transform": DiagramMorphism("z2-canonical", "z2-fourier", transform),
            "transform-after-sign": DiagramMorphism(
                "z2-canonical", "z2-fourier", transform_after_sign
            ),
        },
        composites={("transform", "sign"): "transform-after-sign"},
        name="standard",
    )


def standard_bundles() -> list[MatrixFellBundle]:
    return [z2_bundle(1), z2_bundle(2), pair_bundle(2, 1), k4tw_bundle()]
