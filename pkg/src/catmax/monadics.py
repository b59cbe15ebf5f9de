"""Idempotent (semi)monads and (semi)comonads over explicit finite categories.

A comonad candidate is an endofunctor together with a transformation to the
identity functor; a monad candidate is the dual.  Classification, fixed
subcategories, universal factorizations, and coreflective/reflective
verdicts are all decided by brute force, and `theorem_oracles` cross-checks
the structural implications that must hold between them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import fincat
from .fincat import FinCategory, FunctorData, NatTransformation
from .reporting import PASS, FAIL, SKIP, Check, Failure, Verdict


class HypothesisFails(Exception):
    """A precondition of a universal-factorization operation is not met."""


class UniquenessViolated(Exception):
    """The brute-force scan contradicts a uniqueness claim.

    This firing on validated inputs would be a falsification of the theory
    the engine verifies; it must never happen.
    """


@dataclass
class ComonadCandidate:
    """(functor, counit) with counit: functor -> identity."""

    category: FinCategory
    functor: FunctorData
    counit: NatTransformation
    name: str = ""


@dataclass
class MonadCandidate:
    """(functor, unit) with unit: identity -> functor."""

    category: FinCategory
    functor: FunctorData
    unit: NatTransformation
    name: str = ""


Candidate = ComonadCandidate | MonadCandidate


def validate_candidate(cand: Candidate) -> Candidate:
    cat = cand.category
    fincat.validate_category(cat)
    fun = cand.functor
    if fun.source != cat or fun.target != cat:
        raise fincat.ShapeMismatch("candidate functor is not an endofunctor")
    fincat.validate_functor(fun)
    nat = cand.counit if isinstance(cand, ComonadCandidate) else cand.unit
    fincat.validate_nat(nat)
    ident = fincat.identity_functor(cat)
    if isinstance(cand, ComonadCandidate):
        if not nat.F.maps_equal(fun) or not nat.G.maps_equal(ident):
            raise fincat.ShapeMismatch("counit must run from the functor to the identity")
    else:
        if not nat.F.maps_equal(ident) or not nat.G.maps_equal(fun):
            raise fincat.ShapeMismatch("unit must run from the identity to the functor")
    return cand


@dataclass
class Classification:
    """Outcome of classifying a candidate, with per-object failure lists.

    ``kind`` is one of none/semicomonad/comonad (dually none/semimonad/monad).
    ``left`` is the functor-side whisker, ``right`` the object-side whisker;
    equality of the two is the extra law a full (co)monad satisfies.
    """

    kind: str
    left: NatTransformation
    right: NatTransformation
    left_not_iso: list[str] = field(default_factory=list)
    right_not_iso: list[str] = field(default_factory=list)
    unequal: list[str] = field(default_factory=list)

    @property
    def is_semi(self) -> bool:
        return not self.left_not_iso and not self.right_not_iso

    @property
    def is_full(self) -> bool:
        return self.is_semi and not self.unequal

    def to_check(self, name: str) -> Check:
        wit = tuple(self.left_not_iso) + tuple(self.right_not_iso) + tuple(self.unequal)
        return Check(name=name, status=PASS, subject=self.kind, witnesses=wit)


def _classify(cand: Candidate, semi_name: str, full_name: str) -> Classification:
    cat = cand.category
    fun = cand.functor
    if isinstance(cand, ComonadCandidate):
        left = fincat.whisker_left(fun, cand.counit)
        right = fincat.whisker_right(cand.counit, fun)
    else:
        left = fincat.whisker_left(fun, cand.unit)
        right = fincat.whisker_right(cand.unit, fun)
    cls = Classification(kind="none", left=left, right=right)
    for x in cat.objects:
        if not fincat.is_iso(cat, left.at(x)):
            cls.left_not_iso.append(x)
        if not fincat.is_iso(cat, right.at(x)):
            cls.right_not_iso.append(x)
        if left.at(x) != right.at(x):
            cls.unequal.append(x)
    if cls.is_full:
        cls.kind = full_name
    elif cls.is_semi:
        cls.kind = semi_name
    return cls


def classify_comonad(cand: ComonadCandidate) -> Classification:
    """semicomonad iff both whiskers are isomorphisms; comonad iff they agree.

    Equality is compared by morphism id, not up to isomorphism.
    """
    return _classify(cand, "semicomonad", "comonad")


def classify_monad(cand: MonadCandidate) -> Classification:
    return _classify(cand, "semimonad", "monad")


def _component(cand: Candidate, x: str) -> str:
    return (cand.counit if isinstance(cand, ComonadCandidate) else cand.unit).at(x)


def fixed_objects(cand: Candidate) -> list[str]:
    cat = cand.category
    return [x for x in cat.objects if fincat.is_iso(cat, _component(cand, x))]


def fixed_subcategory(cand: Candidate) -> FinCategory:
    """The full subcategory of objects whose component is an isomorphism."""
    return fincat.full_subcategory(cand.category, fixed_objects(cand))


def universal_factorization(cand: ComonadCandidate, f: str) -> str:
    """Factor f: y -> x through the counit at x, for y in the fixed part.

    Returns the unique mediating morphism y -> Mx, built as M(f) after the
    inverse of the counit at y, then re-verified and checked unique by a
    brute-force scan of hom(y, Mx).
    """
    cat, fun = cand.category, cand.functor
    y, x = cat.dom(f), cat.cod(f)
    cls = classify_comonad(cand)
    if cls.left_not_iso:
        raise HypothesisFails(
            f"functor-side whisker is not an isomorphism at {cls.left_not_iso[0]!r}"
        )
    inv_y = fincat.inverse_morphism(cat, cand.counit.at(y))
    if inv_y is None:
        raise HypothesisFails(f"object {y!r} is not in the fixed subcategory")
    mediating = cat.compose(fun.on_mor(f), inv_y)
    solutions = [
        h for h in cat.hom(y, fun.on_obj(x)) if cat.compose(cand.counit.at(x), h) == f
    ]
    if solutions != [mediating]:
        raise UniquenessViolated(
            f"expected exactly [{mediating!r}] factoring {f!r}, found {solutions!r}"
        )
    return mediating


def couniversal_factorization(cand: MonadCandidate, g: str) -> str:
    """Factor g: x -> y through the unit at x, for y in the fixed part.

    Dual of :func:`universal_factorization`: returns the unique morphism
    Nx -> y whose precomposition with the unit at x recovers g.
    """
    cat, fun = cand.category, cand.functor
    x, y = cat.dom(g), cat.cod(g)
    cls = classify_monad(cand)
    if cls.left_not_iso:
        raise HypothesisFails(
            f"functor-side whisker is not an isomorphism at {cls.left_not_iso[0]!r}"
        )
    inv_y = fincat.inverse_morphism(cat, cand.unit.at(y))
    if inv_y is None:
        raise HypothesisFails(f"object {y!r} is not in the fixed subcategory")
    mediating = cat.compose(inv_y, fun.on_mor(g))
    solutions = [
        h for h in cat.hom(fun.on_obj(x), y) if cat.compose(h, cand.unit.at(x)) == g
    ]
    if solutions != [mediating]:
        raise UniquenessViolated(
            f"expected exactly [{mediating!r}] factoring {g!r}, found {solutions!r}"
        )
    return mediating


def coreflective_verdict(cand: ComonadCandidate) -> Verdict:
    """Check that (Mx, counit_x) is universal from the fixed part to each x.

    For every object x, every fixed y, and every f: y -> x there must be
    exactly one h: y -> Mx with counit_x after h equal to f.
    """
    cls = classify_comonad(cand)
    if not cls.is_semi:
        raise HypothesisFails("candidate is not an idempotent semicomonad")
    cat, fun = cand.category, cand.functor
    fixed = fixed_objects(cand)
    failures: list[Failure] = []
    for x in cat.objects:
        mx = fun.on_obj(x)
        for y in fixed:
            for f in cat.hom(y, x):
                n = sum(
                    1 for h in cat.hom(y, mx) if cat.compose(cand.counit.at(x), h) == f
                )
                if n != 1:
                    failures.append(
                        Failure("NotUniversal", (x, y, f), f"{n} factorizations of {f!r}")
                    )
    return Verdict.from_failures("coreflective", failures)


def reflective_verdict(cand: MonadCandidate) -> Verdict:
    """Dual of :func:`coreflective_verdict`."""
    cls = classify_monad(cand)
    if not cls.is_semi:
        raise HypothesisFails("candidate is not an idempotent semimonad")
    cat, fun = cand.category, cand.functor
    fixed = fixed_objects(cand)
    failures: list[Failure] = []
    for x in cat.objects:
        nx = fun.on_obj(x)
        for y in fixed:
            for g in cat.hom(x, y):
                n = sum(1 for h in cat.hom(nx, y) if cat.compose(h, cand.unit.at(x)) == g)
                if n != 1:
                    failures.append(
                        Failure("NotUniversal", (x, y, g), f"{n} factorizations of {g!r}")
                    )
    return Verdict.from_failures("reflective", failures)


def _iso_to_image_exists(cand: Candidate, x: str) -> bool:
    cat = cand.category
    return any(fincat.is_iso(cat, m) for m in cat.hom(x, cand.functor.on_obj(x)))


def theorem_oracles(cand: Candidate) -> list[Check]:
    """Cross-check the structural implications on one candidate.

    Each check either passes, fails with witnesses (a falsification
    candidate, expected never on valid inputs), or is skipped because its
    hypothesis does not hold on this instance.
    """
    if isinstance(cand, ComonadCandidate):
        return _oracles(
            cand,
            classify_comonad(cand),
            coreflective_verdict,
            prefix="semicomonad",
            adjective="coreflection",
        )
    return _oracles(
        cand,
        classify_monad(cand),
        reflective_verdict,
        prefix="semimonad",
        adjective="reflection",
    )


def _oracles(cand, cls, universal_verdict, prefix: str, adjective: str) -> list[Check]:
    cat = cand.category
    nat = cand.counit if isinstance(cand, ComonadCandidate) else cand.unit
    cancel_ok = fincat.is_mono if isinstance(cand, ComonadCandidate) else fincat.is_epi
    cancel_dual = fincat.is_epi if isinstance(cand, ComonadCandidate) else fincat.is_mono
    checks: list[Check] = []

    def emit(name: str, hypothesis: bool, witnesses: tuple[str, ...]) -> None:
        if not hypothesis:
            checks.append(Check(name=name, status=SKIP, message="hypothesis not met"))
        else:
            checks.append(
                Check(name=name, status=PASS if not witnesses else FAIL, witnesses=witnesses)
            )

    # semi structure forces the two whiskers to agree
    emit(f"{prefix}-implies-equal-whiskers", cls.is_semi, tuple(cls.unequal))

    # componentwise cancellability on one side forces the same agreement
    all_cancel = all(cancel_ok(cat, nat.at(x)) for x in cat.objects)
    emit("cancellable-components-imply-equal-whiskers", all_cancel, tuple(cls.unequal))

    # universal property plus dual cancellability forces cancellability
    universal = cls.is_semi and universal_verdict(cand).ok
    if universal and all(cancel_dual(cat, nat.at(x)) for x in cat.objects):
        bad = tuple(x for x in cat.objects if not cancel_ok(cat, nat.at(x)))
        emit("universal-plus-dual-cancel-implies-cancel", True, bad)
    else:
        emit("universal-plus-dual-cancel-implies-cancel", False, ())

    # when the adjunction onto the fixed part exists, the four equivalent
    # conditions of an idempotent (co)reflection must all hold
    if universal:
        conds = {
            "full": cls.is_full,
            "fixed-components-iso": all(
                fincat.is_iso(cat, nat.at(y)) for y in fixed_objects(cand)
            ),
            "left-whisker-iso": not cls.left_not_iso,
            "right-whisker-iso": not cls.right_not_iso,
        }
        bad = tuple(k for k, v in conds.items() if not v)
        emit(f"{adjective}-conditions-agree", True, bad)
    else:
        emit(f"{adjective}-conditions-agree", False, ())

    # fixed objects are exactly those isomorphic to their image
    if cls.is_full:
        bad = tuple(
            x
            for x in cat.objects
            if fincat.is_iso(cat, nat.at(x)) != _iso_to_image_exists(cand, x)
        )
        emit("fixed-iff-isomorphic-to-image", True, bad)
    else:
        emit("fixed-iff-isomorphic-to-image", False, ())
    return checks


def oracle_falsifications(checks: list[Check]) -> list[Check]:
    return [c for c in checks if c.status == FAIL]
