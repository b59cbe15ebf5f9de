"""Joint comonad/monad setups and the equivalence of their fixed subcategories.

A setup pairs an idempotent semicomonad (M, counit) with an idempotent
semimonad (N, unit) on the same finite category.  The module decides the
four comma-category conditions (a, b, c, c'), builds the adjoint
equivalence between the two fixed subcategories from the explicit
unit/counit formulas, checks the associated-pair criterion, and exposes an
implication oracle tying all the verdicts together.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import fincat, monadics
from .fincat import FinCategory, FunctorData, NatTransformation
from .monadics import ComonadCandidate, MonadCandidate
from .reporting import PASS, FAIL, Check, Failure, Verdict


class NotSemicomonad(Exception):
    pass


class NotSemimonad(Exception):
    pass


class PreconditionCFails(Exception):
    """build_equivalence requires condition c' to hold."""

    def __init__(self, witnesses: tuple[str, ...]):
        super().__init__(f"condition c' fails at {witnesses!r}")
        self.witnesses = witnesses


@dataclass
class MaxNorSetup:
    category: FinCategory
    comonad: ComonadCandidate
    monad: MonadCandidate
    name: str = ""


@dataclass
class SetupData:
    """Validated setup together with its two fixed subcategories."""

    setup: MaxNorSetup
    co_class: monadics.Classification
    mo_class: monadics.Classification
    co_fixed: FinCategory
    mo_fixed: FinCategory

    @property
    def co_objects(self) -> tuple[str, ...]:
        return self.co_fixed.objects

    @property
    def mo_objects(self) -> tuple[str, ...]:
        return self.mo_fixed.objects


def validate_setup(s: MaxNorSetup) -> SetupData:
    """Both candidates must classify at least semi; extract the fixed parts."""
    if s.comonad.category != s.category or s.monad.category != s.category:
        raise fincat.ShapeMismatch("setup candidates live on different categories")
    monadics.validate_candidate(s.comonad)
    monadics.validate_candidate(s.monad)
    co_class = monadics.classify_comonad(s.comonad)
    if not co_class.is_semi:
        raise NotSemicomonad(
            f"whiskers not iso at {tuple(co_class.left_not_iso + co_class.right_not_iso)!r}"
        )
    mo_class = monadics.classify_monad(s.monad)
    if not mo_class.is_semi:
        raise NotSemimonad(
            f"whiskers not iso at {tuple(mo_class.left_not_iso + mo_class.right_not_iso)!r}"
        )
    return SetupData(
        setup=s,
        co_class=co_class,
        mo_class=mo_class,
        co_fixed=monadics.fixed_subcategory(s.comonad),
        mo_fixed=monadics.fixed_subcategory(s.monad),
    )


def condition_a(d: SetupData) -> Verdict:
    """(x, counit_x) is initial in (Mx -> monad-fixed part) for fixed-monad x."""
    s = d.setup
    failures: list[Failure] = []
    for x in d.mo_objects:
        comma = fincat.comma_category(x, s.comonad.functor, d.mo_objects)
        tag = s.comonad.counit.at(x)
        if not fincat.is_initial(comma.category, tag):
            failures.append(Failure("NotInitial", (x,), f"counit tag at {x!r} not initial"))
    return Verdict.from_failures("condition-a", failures)


def condition_b(d: SetupData) -> Verdict:
    """(x, unit_x) is final in (comonad-fixed part -> Nx) for fixed-comonad x."""
    s = d.setup
    failures: list[Failure] = []
    for x in d.co_objects:
        comma = fincat.comma_category_into(d.co_objects, s.monad.functor, x)
        tag = s.monad.unit.at(x)
        if not fincat.is_final(comma.category, tag):
            failures.append(Failure("NotFinal", (x,), f"unit tag at {x!r} not final"))
    return Verdict.from_failures("condition-b", failures)


def condition_c(d: SetupData) -> Verdict:
    """The composite unit_x after counit_x tags an initial and a final object.

    For every object x: (Nx, unit_x . counit_x) must be initial in
    (Mx -> monad-fixed part) and (Mx, unit_x . counit_x) final in
    (comonad-fixed part -> Nx).
    """
    s = d.setup
    cat = s.category
    failures: list[Failure] = []
    for x in cat.objects:
        tag = cat.compose(s.monad.unit.at(x), s.comonad.counit.at(x))
        comma_i = fincat.comma_category(x, s.comonad.functor, d.mo_objects)
        if tag not in comma_i.obj_tags or not fincat.is_initial(comma_i.category, tag):
            failures.append(Failure("NotInitial", (x,), f"composite tag at {x!r} not initial"))
        comma_f = fincat.comma_category_into(d.co_objects, s.monad.functor, x)
        if tag not in comma_f.obj_tags or not fincat.is_final(comma_f.category, tag):
            failures.append(Failure("NotFinal", (x,), f"composite tag at {x!r} not final"))
    return Verdict.from_failures("condition-c", failures)


def _cross_whiskers(s: MaxNorSetup) -> tuple[NatTransformation, NatTransformation]:
    m_unit = fincat.whisker_left(s.comonad.functor, s.monad.unit)  # M -> M.N
    n_counit = fincat.whisker_left(s.monad.functor, s.comonad.counit)  # N.M -> N
    return m_unit, n_counit


def condition_c_prime(d: SetupData) -> Verdict:
    """Both cross whiskers (M on unit, N on counit) are isomorphisms."""
    s = d.setup
    cat = s.category
    m_unit, n_counit = _cross_whiskers(s)
    failures: list[Failure] = []
    for x in cat.objects:
        if not fincat.is_iso(cat, m_unit.at(x)):
            failures.append(Failure("NotIso", ("M.unit", x), f"M on unit not iso at {x!r}"))
        if not fincat.is_iso(cat, n_counit.at(x)):
            failures.append(Failure("NotIso", ("N.counit", x), f"N on counit not iso at {x!r}"))
    return Verdict.from_failures("condition-c-prime", failures)


@dataclass
class Equivalence:
    """The constructed adjunction between the two fixed subcategories."""

    F: FunctorData
    G: FunctorData
    unit: NatTransformation
    counit: NatTransformation
    verdict: Verdict
    composite_checks: list[Check]


def _restrict_functor(fun: FunctorData, src: FinCategory, tgt: FinCategory, name: str) -> FunctorData:
    return FunctorData(
        source=src,
        target=tgt,
        obj_map={x: fun.on_obj(x) for x in src.objects},
        mor_map={m: fun.on_mor(m) for m in src.morphism_ids},
        name=name,
    )


def adjunction_equivalence(d: SetupData) -> Equivalence:
    """Build the composite adjunction between the fixed parts and verify it.

    F sends a comonad-fixed object to its monad image; G is the dual.  The
    unit at x is M(unit_x) after the inverse counit at x; the counit at y is
    the inverse unit at y after N(counit_y).  No condition beyond the setup
    invariants is assumed; the returned verdict records whether this
    adjunction is an adjoint equivalence.
    """
    s = d.setup
    cat = s.category
    M, N = s.comonad.functor, s.monad.functor
    Msub = _restrict_functor(M, d.mo_fixed, d.co_fixed, "M|")
    Nsub = _restrict_functor(N, d.co_fixed, d.mo_fixed, "N|")
    F, G = Nsub, Msub

    unit_comps: dict[str, str] = {}
    for x in d.co_objects:
        inv = fincat.inverse_morphism(cat, s.comonad.counit.at(x))
        assert inv is not None  # x is comonad-fixed
        unit_comps[x] = cat.compose(M.on_mor(s.monad.unit.at(x)), inv)
    counit_comps: dict[str, str] = {}
    for y in d.mo_objects:
        inv = fincat.inverse_morphism(cat, s.monad.unit.at(y))
        assert inv is not None  # y is monad-fixed
        counit_comps[y] = cat.compose(inv, N.on_mor(s.comonad.counit.at(y)))

    unit = NatTransformation(
        F=fincat.identity_functor(d.co_fixed),
        G=fincat.compose_functors(G, F),
        components=unit_comps,
        name="unit",
    )
    counit = NatTransformation(
        F=fincat.compose_functors(F, G),
        G=fincat.identity_functor(d.mo_fixed),
        components=counit_comps,
        name="counit",
    )
    verdict = fincat.check_equivalence(F, G, unit, counit)
    return Equivalence(F=F, G=G, unit=unit, counit=counit, verdict=verdict, composite_checks=[])


def build_equivalence(d: SetupData) -> Equivalence:
    """The adjoint equivalence, gated on condition c'.

    Beyond the equivalence verdict, also verifies the two composite-functor
    isomorphisms: the restricted N agrees with (N on the comonad-fixed part)
    after the restricted M, and dually, via the cross whiskers.
    """
    cp = condition_c_prime(d)
    if not cp.ok:
        raise PreconditionCFails(cp.witnesses())
    eq = adjunction_equivalence(d)
    s = d.setup
    cat = s.category
    m_unit, n_counit = _cross_whiskers(s)

    n_to_sub = _restrict_functor(s.monad.functor, cat, d.mo_fixed, "N^")
    m_to_sub = _restrict_functor(s.comonad.functor, cat, d.co_fixed, "M^")
    checks: list[Check] = []

    # N^ agrees with (F after M^) through the inverted N-counit whisker
    comps: dict[str, str] = {}
    ok = True
    for x in cat.objects:
        inv = fincat.inverse_morphism(cat, n_counit.at(x))
        if inv is None:
            ok = False
            break
        comps[x] = inv
    if ok:
        nat = NatTransformation(
            F=n_to_sub,
            G=fincat.compose_functors(eq.F, m_to_sub),
            components=comps,
            name="N-agrees",
        )
        try:
            fincat.validate_nat(nat)
        except fincat.CategoryError as e:
            ok = False
    checks.append(Check(name="monad-side-composite-iso", status=PASS if ok else FAIL))

    # M^ agrees with (G after N^) through the M-unit whisker
    nat2 = NatTransformation(
        F=m_to_sub,
        G=fincat.compose_functors(eq.G, n_to_sub),
        components={x: m_unit.at(x) for x in cat.objects},
        name="M-agrees",
    )
    ok2 = True
    try:
        fincat.validate_nat(nat2)
    except fincat.CategoryError:
        ok2 = False
    ok2 = ok2 and all(fincat.is_iso(cat, m_unit.at(x)) for x in cat.objects)
    checks.append(Check(name="comonad-side-composite-iso", status=PASS if ok2 else FAIL))

    eq.composite_checks = checks
    return eq


def search_equivalence(d: SetupData) -> Equivalence | None:
    """Diagnostic fallback: search for any adjoint equivalence between the parts.

    Enumerates natural isomorphism candidates componentwise (deterministic
    order) and returns the first pair passing check_equivalence, or None.
    Intended for small fixtures when the explicit formulas are unavailable.
    """
    s = d.setup
    cat = s.category
    Msub = _restrict_functor(s.comonad.functor, d.mo_fixed, d.co_fixed, "M|")
    Nsub = _restrict_functor(s.monad.functor, d.co_fixed, d.mo_fixed, "N|")
    F, G = Nsub, Msub
    gf = fincat.compose_functors(G, F)
    fg = fincat.compose_functors(F, G)

    def iso_choices(sub: FinCategory, src: str, tgt: str) -> list[str]:
        return [m for m in sub.hom(src, tgt) if fincat.is_iso(sub, m)]

    unit_opts = [iso_choices(d.co_fixed, x, gf.on_obj(x)) for x in d.co_objects]
    counit_opts = [iso_choices(d.mo_fixed, fg.on_obj(y), y) for y in d.mo_objects]
    if any(not o for o in unit_opts) or any(not o for o in counit_opts):
        return None
    for unit_pick in product(*unit_opts):
        for counit_pick in product(*counit_opts):
            unit = NatTransformation(
                F=fincat.identity_functor(d.co_fixed),
                G=gf,
                components=dict(zip(d.co_objects, unit_pick)),
            )
            counit = NatTransformation(
                F=fg,
                G=fincat.identity_functor(d.mo_fixed),
                components=dict(zip(d.mo_objects, counit_pick)),
            )
            verdict = fincat.check_equivalence(F, G, unit, counit)
            if verdict.ok:
                return Equivalence(F, G, unit, counit, verdict, [])
    return None


def associated_pair_check(d: SetupData) -> Verdict:
    """For every morphism f: M(f) is iso exactly when N(f) is iso."""
    s = d.setup
    cat = s.category
    failures: list[Failure] = []
    for f in cat.morphism_ids:
        mi = fincat.is_iso(cat, s.comonad.functor.on_mor(f))
        ni = fincat.is_iso(cat, s.monad.functor.on_mor(f))
        if mi != ni:
            failures.append(
                Failure("AssociatedPairFails", (f,), f"M iso={mi}, N iso={ni} at {f!r}")
            )
    return Verdict.from_failures("associated-pair", failures)


def implication_oracle(d: SetupData) -> list[Check]:
    """Evaluate a, b, c, c' and assert the implications between them.

    Any failing check is a falsification candidate; expected empty on every
    valid setup.
    """
    a = condition_a(d)
    b = condition_b(d)
    c = condition_c(d)
    cp = condition_c_prime(d)
    checks: list[Check] = []

    def emit(name: str, ok: bool, message: str = "") -> None:
        checks.append(Check(name=name, status=PASS if ok else FAIL, message=message))

    emit("c-iff-c-prime", c.ok == cp.ok, f"c={c.ok}, c'={cp.ok}")
    emit("c-implies-a-and-b", (not c.ok) or (a.ok and b.ok))
    if a.ok and b.ok:
        eq = adjunction_equivalence(d)
        emit("a-and-b-imply-equivalence", eq.verdict.ok)
    else:
        checks.append(Check(name="a-and-b-imply-equivalence", status="skip"))
    if cp.ok:
        emit("c-prime-implies-associated-pair", associated_pair_check(d).ok)
    else:
        checks.append(Check(name="c-prime-implies-associated-pair", status="skip"))
    return checks
