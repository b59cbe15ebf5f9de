"""Finite groupoids, twisted matrix bundles, and their convolution algebras.

A bundle assigns to each arrow g the full space of d_r(g) x d_s(g) complex
matrices, with the product of fibers over composable (g, h) twisted by a
unit-modulus 2-cocycle.  Sections (one matrix per arrow) form a *-algebra
under convolution

    (f1 * f2)(g) = sum over h with range r(g) of sigma(h, h"g) f1(h) f2(h"g)

where h" is the inverse arrow, and the involution

    f*(g) = conj(sigma(g, g")) f(g")^dagger.

The involution constant is forced by f** = f and (f1*f2)* = f2* * f1*; the
bundle validator confirms both laws on a spanning set instead of trusting
the formula.  The trivial cocycle recovers untwisted convolution exactly.

Norms: the restriction of a section to units lands in a direct sum of
matrix algebras, measured in the sup of fiber operator norms; the full
algebra norm is the operator norm of the (faithful) left regular
representation on the trace inner-product space with one orthonormal
matrix-unit basis vector per arrow entry.  In finite dimension this single
norm is the unique C*-norm, so no separate "reduced" norm exists and the
canonical comparison map between the two completions is the identity.

Operator norms and eigenvalues come from a cyclic Jacobi eigensolver for
Hermitian complex matrices implemented here; nothing in this module calls
an external eigenroutine.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# numeric comparisons are relative at this scale unless a caller overrides
REL_TOL = 1e-9
# off-diagonal Frobenius mass threshold for Jacobi convergence
JACOBI_TOL = 1e-12
_MAX_SWEEPS = 100


class GroupoidError(Exception):
    """Structural defect in a groupoid, cocycle, bundle, or section."""


class NotAssociative(GroupoidError):
    pass


class InverseLawFails(GroupoidError):
    pass


class CocycleIdentityFails(GroupoidError):
    pass


class ShapeMismatch(GroupoidError):
    pass


class NotHermitian(GroupoidError):
    pass


@dataclass
class FiniteGroupoid:
    """Explicit finite groupoid; unit arrows appear in ``arrows`` by their id."""

    units: tuple[str, ...]
    arrows: tuple[str, ...]
    range_map: dict[str, str]
    source_map: dict[str, str]
    composition: dict[tuple[str, str], str]
    inverse: dict[str, str]
    name: str = ""

    def __post_init__(self) -> None:
        self.units = tuple(self.units)
        self.arrows = tuple(self.arrows)
        self._with_range: dict[str, list[str]] = {}
        self._with_source: dict[str, list[str]] = {}
        for g in self.arrows:
            self._with_range.setdefault(self.range_map[g], []).append(g)
            self._with_source.setdefault(self.source_map[g], []).append(g)

    def r(self, g: str) -> str:
        return self.range_map[g]

    def s(self, g: str) -> str:
        return self.source_map[g]

    def inv(self, g: str) -> str:
        return self.inverse[g]

    def composable(self, g: str, h: str) -> bool:
        return self.s(g) == self.r(h)

    def compose(self, g: str, h: str) -> str:
        return self.composition[(g, h)]

    def with_range(self, x: str) -> tuple[str, ...]:
        """G^x, the arrows with range x."""
        return tuple(self._with_range.get(x, ()))

    def with_source(self, x: str) -> tuple[str, ...]:
        """G_x, the arrows with source x."""
        return tuple(self._with_source.get(x, ()))

    def is_unit(self, g: str) -> bool:
        return g in set(self.units)


def validate_groupoid(gpd: FiniteGroupoid) -> FiniteGroupoid:
    arrows = set(gpd.arrows)
    if len(arrows) != len(gpd.arrows):
        raise GroupoidError("duplicate arrow ids")
    for x in gpd.units:
        if x not in arrows:
            raise GroupoidError(f"unit {x!r} is not listed among the arrows")
        if gpd.r(x) != x or gpd.s(x) != x:
            raise GroupoidError(f"unit {x!r} must have itself as range and source")
    units = set(gpd.units)
    for g in gpd.arrows:
        if gpd.r(g) not in units or gpd.s(g) not in units:
            raise GroupoidError(f"arrow {g!r} has a non-unit endpoint")
    for (g, h), gh in gpd.composition.items():
        if g not in arrows or h not in arrows or gh not in arrows:
            raise GroupoidError(f"composition mentions unknown arrow in ({g!r}, {h!r})")
        if not gpd.composable(g, h):
            raise GroupoidError(f"composition defined on non-composable ({g!r}, {h!r})")
        if gpd.r(gh) != gpd.r(g) or gpd.s(gh) != gpd.s(h):
            raise GroupoidError(f"composite of ({g!r}, {h!r}) has wrong endpoints")
    for g in gpd.arrows:
        for h in gpd.with_range(gpd.s(g)):
            if (g, h) not in gpd.composition:
                raise GroupoidError(f"composite of composable ({g!r}, {h!r}) missing")
    for g in gpd.arrows:
        if gpd.compose(gpd.r(g), g) != g or gpd.compose(g, gpd.s(g)) != g:
            raise GroupoidError(f"unit law fails at {g!r}")
    for g in gpd.arrows:
        gi = gpd.inverse.get(g)
        if gi is None or gi not in arrows:
            raise InverseLawFails(f"arrow {g!r} has no inverse")
        if gpd.r(gi) != gpd.s(g) or gpd.s(gi) != gpd.r(g):
            raise InverseLawFails(f"inverse of {g!r} has wrong endpoints")
        if gpd.compose(g, gi) != gpd.r(g) or gpd.compose(gi, g) != gpd.s(g):
            raise InverseLawFails(f"inverse law fails at {g!r}")
    for g in gpd.arrows:
        for h in gpd.with_range(gpd.s(g)):
            gh = gpd.compose(g, h)
            for k in gpd.with_range(gpd.s(h)):
                if gpd.compose(gh, k) != gpd.compose(g, gpd.compose(h, k)):
                    raise NotAssociative(f"associativity fails on ({g!r}, {h!r}, {k!r})")
    return gpd


@dataclass
class Cocycle:
    """Unit-modulus scalar twist on composable pairs; trivial by default."""

    values: dict[tuple[str, str], complex]

    def sigma(self, g: str, h: str) -> complex:
        return self.values[(g, h)]

    @classmethod
    def trivial(cls, gpd: FiniteGroupoid) -> "Cocycle":
        vals = {
            (g, h): 1.0 + 0.0j
            for g in gpd.arrows
            for h in gpd.with_range(gpd.s(g))
        }
        return cls(values=vals)


@dataclass
class MatrixFellBundle:
    """A finite groupoid with a fiber dimension per unit and a scalar twist.

    The fiber over g is the full space of d_r(g) x d_s(g) matrices, so the
    product/involution inclusions hold by shape and the unit fibers are
    square matrix *-algebras by construction.
    """

    groupoid: FiniteGroupoid
    dims: dict[str, int]
    cocycle: Cocycle = None  # type: ignore[assignment]
    name: str = ""

    def __post_init__(self) -> None:
        if self.cocycle is None:
            self.cocycle = Cocycle.trivial(self.groupoid)
        self._basis: list[tuple[str, int, int]] = []
        self._basis_index: dict[tuple[str, int, int], int] = {}
        for g in self.groupoid.arrows:
            rows, cols = self.fiber_shape(g)
            for i in range(rows):
                for j in range(cols):
                    self._basis_index[(g, i, j)] = len(self._basis)
                    self._basis.append((g, i, j))

    def fiber_shape(self, g: str) -> tuple[int, int]:
        return (self.dims[self.groupoid.r(g)], self.dims[self.groupoid.s(g)])

    @property
    def section_dim(self) -> int:
        """Total dimension of the section space, one entry per matrix slot."""
        return len(self._basis)

    @property
    def section_basis(self) -> list[tuple[str, int, int]]:
        return list(self._basis)

    def basis_index(self, g: str, i: int, j: int) -> int:
        return self._basis_index[(g, i, j)]


@dataclass
class Section:
    """A map arrow -> matrix of the fiber shape; all arrows materialized."""

    bundle: MatrixFellBundle
    values: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self) -> None:
        out: dict[str, np.ndarray] = {}
        for g in self.bundle.groupoid.arrows:
            shape = self.bundle.fiber_shape(g)
            if g in self.values:
                m = np.asarray(self.values[g], dtype=complex)
                if m.shape != shape:
                    raise ShapeMismatch(
                        f"value at {g!r} has shape {m.shape}, expected {shape}"
                    )
                out[g] = m
            else:
                out[g] = np.zeros(shape, dtype=complex)
        self.values = out

    def __getitem__(self, g: str) -> np.ndarray:
        return self.values[g]

    def __add__(self, other: "Section") -> "Section":
        return Section(self.bundle, {g: self[g] + other[g] for g in self.values})

    def __sub__(self, other: "Section") -> "Section":
        return Section(self.bundle, {g: self[g] - other[g] for g in self.values})

    def __rmul__(self, scalar: complex) -> "Section":
        return Section(self.bundle, {g: scalar * self[g] for g in self.values})

    def to_vector(self) -> np.ndarray:
        """Coordinates in the arrow-major matrix-unit basis."""
        v = np.zeros(self.bundle.section_dim, dtype=complex)
        for k, (g, i, j) in enumerate(self.bundle.section_basis):
            v[k] = self.values[g][i, j]
        return v

    def max_abs(self) -> float:
        return max(float(np.max(np.abs(m))) if m.size else 0.0 for m in self.values.values())

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.max_abs() <= tol


def zero_section(bundle: MatrixFellBundle) -> Section:
    return Section(bundle, {})


def delta(bundle: MatrixFellBundle, g: str, matrix: np.ndarray | None = None) -> Section:
    """The section supported at g; defaults to the identity on square fibers."""
    shape = bundle.fiber_shape(g)
    if matrix is None:
        if shape[0] != shape[1]:
            raise ShapeMismatch(f"fiber at {g!r} is not square; pass a matrix")
        matrix = np.eye(shape[0], dtype=complex)
    return Section(bundle, {g: np.asarray(matrix, dtype=complex)})


def section_from_vector(bundle: MatrixFellBundle, vec: np.ndarray) -> Section:
    vec = np.asarray(vec, dtype=complex)
    if vec.shape != (bundle.section_dim,):
        raise ShapeMismatch("coordinate vector has wrong length")
    out = zero_section(bundle)
    for k, (g, i, j) in enumerate(bundle.section_basis):
        out.values[g][i, j] = vec[k]
    return out


def random_section(bundle: MatrixFellBundle, rng: np.random.Generator) -> Section:
    vec = rng.standard_normal(bundle.section_dim) + 1j * rng.standard_normal(bundle.section_dim)
    return section_from_vector(bundle, vec)


def convolve(bundle: MatrixFellBundle, f1: Section, f2: Section) -> Section:
    """Twisted convolution, summed exactly over arrows with matching range."""
    gpd = bundle.groupoid
    out = zero_section(bundle)
    for g in gpd.arrows:
        acc = out.values[g]
        for h in gpd.with_range(gpd.r(g)):
            k = gpd.compose(gpd.inv(h), g)
            acc += bundle.cocycle.sigma(h, k) * (f1[h] @ f2[k])
    return out


def involute(bundle: MatrixFellBundle, f: Section) -> Section:
    gpd = bundle.groupoid
    vals = {}
    for g in gpd.arrows:
        gi = gpd.inv(g)
        vals[g] = np.conj(bundle.cocycle.sigma(g, gi)) * f[gi].conj().T
    return Section(bundle, vals)


def restrict(bundle: MatrixFellBundle, f: Section) -> Section:
    """The expectation onto unit-supported sections: zero out non-unit arrows."""
    gpd = bundle.groupoid
    return Section(bundle, {x: f[x] for x in gpd.units})


def inner_product(bundle: MatrixFellBundle, f1: Section, f2: Section) -> Section:
    """Unit-supported section with value sum over G_x of f1(k)^dagger f2(k).

    Agrees with restricting the convolution of the involute of f1 with f2;
    the twist cancels so the direct sum below is exact either way.
    """
    gpd = bundle.groupoid
    out = zero_section(bundle)
    for x in gpd.units:
        acc = out.values[x]
        for k in gpd.with_source(x):
            acc += f1[k].conj().T @ f2[k]
    return out


def _require_unit_supported(bundle: MatrixFellBundle, xi: Section) -> None:
    gpd = bundle.groupoid
    for g in gpd.arrows:
        if not gpd.is_unit(g) and np.any(xi[g] != 0):
            raise ShapeMismatch(f"section has support off the units at {g!r}")


def norm_inf(bundle: MatrixFellBundle, xi: Section) -> float:
    """Sup over units of the fiber operator norm; xi must be unit-supported."""
    _require_unit_supported(bundle, xi)
    return max(op_norm(xi[x]) for x in bundle.groupoid.units)


def norm_l2(bundle: MatrixFellBundle, f: Section) -> float:
    return float(np.sqrt(norm_inf(bundle, inner_product(bundle, f, f))))


def regular_rep_matrix(bundle: MatrixFellBundle, f: Section) -> np.ndarray:
    """Matrix of left convolution by f on the trace inner-product space.

    The orthonormal basis has one vector per matrix unit per arrow, so the
    matrix is square of size section_dim.  The representation is faithful
    and a *-homomorphism; the bundle validator re-verifies both on a
    spanning set.
    """
    d = bundle.section_dim
    out = np.zeros((d, d), dtype=complex)
    for col, (g, i, j) in enumerate(bundle.section_basis):
        basis_mat = np.zeros(bundle.fiber_shape(g), dtype=complex)
        basis_mat[i, j] = 1.0
        image = convolve(bundle, f, delta(bundle, g, basis_mat))
        out[:, col] = image.to_vector()
    return out


def cstar_norm(bundle: MatrixFellBundle, f: Section) -> float:
    """Operator norm of the regular representation.

    The section algebra is finite dimensional with a faithful
    *-representation, so this is its unique C*-norm.
    """
    return op_norm(regular_rep_matrix(bundle, f))


def hermitian_eig(m: np.ndarray, tol: float = JACOBI_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and eigenvectors of a Hermitian matrix.

    Cyclic Jacobi with a deterministic row-major sweep order; each rotation
    annihilates one off-diagonal entry through a phased plane rotation.
    Convergence: off-diagonal Frobenius mass below tol times the Frobenius
    norm of the input.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeMismatch("eigensolver requires a square matrix")
    n = a.shape[0]
    scale = max(1.0, float(np.abs(a).max()) if a.size else 0.0)
    if float(np.abs(a - a.conj().T).max()) > 1e-12 * scale:
        raise NotHermitian("matrix is not Hermitian within 1e-12")
    a = (a + a.conj().T) / 2.0
    vecs = np.eye(n, dtype=complex)
    norm = float(np.linalg.norm(a))
    if norm == 0.0 or n == 1:
        vals = np.real(np.diag(a)).copy()
        order = np.argsort(-vals, kind="stable")
        return vals[order], vecs[:, order]
    skip_below = tol * norm / (n * n)
    for _ in range(_MAX_SWEEPS):
        off = float(np.sqrt(np.sum(np.abs(a - np.diag(np.diag(a))) ** 2)))
        if off <= tol * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip_below:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                phase = apq / abs(apq)
                tau = (aqq - app) / (2.0 * abs(apq))
                sign = 1.0 if tau >= 0 else -1.0
                t = sign / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                sv = t * c
                # plane rotation: columns p/q mixed with the phase carried on q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - sv * np.conj(phase) * col_q
                a[:, q] = sv * col_p + c * np.conj(phase) * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - sv * phase * row_q
                a[q, :] = sv * row_p + c * phase * row_q
                vcol_p = vecs[:, p].copy()
                vcol_q = vecs[:, q].copy()
                vecs[:, p] = c * vcol_p - sv * np.conj(phase) * vcol_q
                vecs[:, q] = sv * vcol_p + c * np.conj(phase) * vcol_q
                a[p, q] = 0.0
                a[q, p] = 0.0
    else:
        raise ArithmeticError("Jacobi sweep limit exceeded")
    vals = np.real(np.diag(a)).copy()
    order = np.argsort(-vals, kind="stable")
    return vals[order], vecs[:, order]


def op_norm(m: np.ndarray) -> float:
    """Largest singular value, via the eigensolver on m^dagger m."""
    m = np.asarray(m, dtype=complex)
    if m.size == 0:
        return 0.0
    gram = m.conj().T @ m
    vals, _ = hermitian_eig(gram)
    return float(np.sqrt(max(float(vals[0]), 0.0)))


def _validate_cocycle(bundle: MatrixFellBundle) -> None:
    gpd = bundle.groupoid
    coc = bundle.cocycle
    for g in gpd.arrows:
        for h in gpd.with_range(gpd.s(g)):
            if (g, h) not in coc.values:
                raise CocycleIdentityFails(f"cocycle missing composable pair ({g!r}, {h!r})")
            if abs(abs(coc.sigma(g, h)) - 1.0) > 1e-12:
                raise CocycleIdentityFails(f"cocycle at ({g!r}, {h!r}) is not unit modulus")
    for g in gpd.arrows:
        if abs(coc.sigma(gpd.r(g), g) - 1.0) > 1e-12 or abs(coc.sigma(g, gpd.s(g)) - 1.0) > 1e-12:
            raise CocycleIdentityFails(f"cocycle not normalized at {g!r}")
    for g in gpd.arrows:
        for h in gpd.with_range(gpd.s(g)):
            gh = gpd.compose(g, h)
            for k in gpd.with_range(gpd.s(h)):
                lhs = coc.sigma(g, h) * coc.sigma(gh, k)
                rhs = coc.sigma(g, gpd.compose(h, k)) * coc.sigma(h, k)
                if abs(lhs - rhs) > 1e-12:
                    raise CocycleIdentityFails(
                        f"cocycle identity fails on ({g!r}, {h!r}, {k!r})"
                    )


def validate_bundle(bundle: MatrixFellBundle) -> MatrixFellBundle:
    """Groupoid axioms, cocycle laws, then *-algebra laws on a spanning set.

    Associativity of the twisted product is brute-forced over all composable
    arrow triples with seeded generic fiber matrices, plus full-support
    section triples; the involution laws are checked on arrow deltas.
    """
    gpd = validate_groupoid(bundle.groupoid)
    for x in gpd.units:
        dx = bundle.dims.get(x)
        if not isinstance(dx, int) or dx < 1:
            raise GroupoidError(f"fiber dimension at unit {x!r} must be a positive integer")
    _validate_cocycle(bundle)

    rng = np.random.default_rng(0)

    def rand_delta(g: str) -> Section:
        shape = bundle.fiber_shape(g)
        mat = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        return delta(bundle, g, mat)

    tol = 1e-12

    def close(f1: Section, f2: Section, scale: float) -> bool:
        return (f1 - f2).max_abs() <= tol * max(1.0, scale)

    for g in gpd.arrows:
        for h in gpd.with_range(gpd.s(g)):
            for k in gpd.with_range(gpd.s(h)):
                fg, fh, fk = rand_delta(g), rand_delta(h), rand_delta(k)
                left = convolve(bundle, convolve(bundle, fg, fh), fk)
                right = convolve(bundle, fg, convolve(bundle, fh, fk))
                if not close(left, right, left.max_abs()):
                    raise NotAssociative(
                        f"twisted product not associative on ({g!r}, {h!r}, {k!r})"
                    )
    for _ in range(3):
        f1, f2, f3 = (random_section(bundle, rng) for _ in range(3))
        left = convolve(bundle, convolve(bundle, f1, f2), f3)
        right = convolve(bundle, f1, convolve(bundle, f2, f3))
        if not close(left, right, left.max_abs()):
            raise NotAssociative("twisted product not associative on random sections")

    for g in gpd.arrows:
        fg = rand_delta(g)
        if not close(involute(bundle, involute(bundle, fg)), fg, fg.max_abs()):
            raise GroupoidError(f"involution is not involutive at {g!r}")
        for h in gpd.arrows:
            fh = rand_delta(h)
            lhs = involute(bundle, convolve(bundle, fg, fh))
            rhs = convolve(bundle, involute(bundle, fh), involute(bundle, fg))
            if not close(lhs, rhs, max(lhs.max_abs(), 1.0)):
                raise GroupoidError(f"involution is not antimultiplicative on ({g!r}, {h!r})")

    # the two inner-product routes must agree and the representation must be
    # a faithful *-homomorphism on a spanning pair sample
    for _ in range(2):
        f1, f2 = random_section(bundle, rng), random_section(bundle, rng)
        direct = inner_product(bundle, f1, f2)
        via_conv = restrict(bundle, convolve(bundle, involute(bundle, f1), f2))
        if not close(direct, via_conv, direct.max_abs()):
            raise GroupoidError("inner product routes disagree")
        lam1 = regular_rep_matrix(bundle, f1)
        lam2 = regular_rep_matrix(bundle, f2)
        lam12 = regular_rep_matrix(bundle, convolve(bundle, f1, f2))
        if float(np.abs(lam12 - lam1 @ lam2).max()) > 1e-9 * max(1.0, float(np.abs(lam12).max())):
            raise GroupoidError("regular representation is not multiplicative")
        lam_star = regular_rep_matrix(bundle, involute(bundle, f1))
        if float(np.abs(lam_star - lam1.conj().T).max()) > 1e-9 * max(
            1.0, float(np.abs(lam_star).max())
        ):
            raise GroupoidError("regular representation is not adjoint-preserving")
    return bundle


def expectation_faithful_witness(bundle: MatrixFellBundle, f: Section) -> bool:
    """True when restrict(f* conv f) = 0 forces f = 0 on this input.

    The value at unit x is the positive sum of f(k)^dagger f(k) over G_x,
    so a vanishing restriction annihilates every fiber of f exactly.
    """
    rho = inner_product(bundle, f, f)
    if not rho.is_zero():
        return True
    return f.is_zero()
