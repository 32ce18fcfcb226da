"""
The dot action on splines and the degree-one characters.

The group acts on a spline by (w . rho)(v) = w(rho(w^{-1} v)), where w
acts on polynomials by permuting and signing the variables.  Quotienting
the degree-one spline space by the span of the constant family t_1..t_n
(left) or of the window family r_1..r_n (right) yields two W_n-modules;
their characters are computed two ways:

  * computed_char: exact traces of the dot action on a certified basis,
    one trace per conjugacy class representative;
  * formula_char:  the closed-form expression read off the classification
    of the t-set, a combination of the named characters

        1 (trivial),  delta(w) = (-1)^{|Neg(w)|},
        chi(w) = #{w(i)=i} - #{w(i)=-i}   (the defining character),
        h_i(w) = #{unbalanced A, |A| = i, w(A) = A},
        s(w)   = #{k in [n] : |w(k)| = k}.

The two routes are cross-checked; disagreements are reported by the
verification suites, never silently resolved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .group import SignedPerm, conjugacy_classes, group_table
from .hessenberg import (
    HessenbergSpace,
    classify,
    dim_degree_one,
    realize_tset,
    t_set,
)
from .linalg import RankDeficientError
from .roots import LieType, positive_roots
from .splines import (
    BasisBundle,
    Spline,
    bundle_pivot_data,
    is_spline,
    label_matrix,
    labels_pairwise_independent,
    left_basis,
    permutohedral_basis,
    spline_space_basis,
    unbalanced_sets,
    _rows_proportional,
)


def poly_action_matrix(w: SignedPerm) -> np.ndarray:
    """Matrix sending a coefficient row of p to the row of w applied to p."""
    n = w.n
    mat = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n + 1):
        img = w(i)
        mat[abs(img) - 1, i - 1] = 1 if img > 0 else -1
    return mat


def dot_action(w: SignedPerm, rho: Spline) -> Spline:
    """(w . rho)(v) = w(rho(w^{-1} v))."""
    if w.n != rho.n:
        raise ValueError("rank mismatch")
    table = rho.table
    src = table.left_mult_indices(w.inverse())
    return Spline(table, rho.num[src] @ poly_action_matrix(w).T, rho.den)


# ---------------------------------------------------------------------------
# Class functions and named characters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassFunction:
    """Rational values indexed by the conjugacy classes of W_n."""

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != len(conjugacy_classes(self.n)):
            raise ValueError("wrong number of class values")

    @classmethod
    def from_callable(cls, n: int, fn) -> "ClassFunction":
        return cls(n, tuple(Fraction(fn(c.rep)) for c in conjugacy_classes(n)))

    def dimension(self) -> Fraction:
        for c, v in zip(conjugacy_classes(self.n), self.values):
            if c.rep == SignedPerm.identity(self.n):
                return v
        raise AssertionError("identity class missing")

    def __add__(self, other):
        return ClassFunction(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        return ClassFunction(self.n, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "ClassFunction":
        c = Fraction(c)
        return ClassFunction(self.n, tuple(c * v for v in self.values))

    def items(self):
        return zip(conjugacy_classes(self.n), self.values)


def defining_char_value(w: SignedPerm) -> int:
    return sum(1 for i in range(1, w.n + 1) if w(i) == i) - sum(
        1 for i in range(1, w.n + 1) if w(i) == -i
    )


def named_char(kind: str, n: int, i: int | None = None) -> ClassFunction:
    """One of the building blocks: trivial, delta, defining, h_i, s."""
    if kind == "h_i":
        if i is None:
            raise ValueError("h_i needs an index")
        sets = unbalanced_sets(i, n)

        def h_val(w):
            return sum(1 for a in sets if w.image(a) == frozenset(a))

        return ClassFunction.from_callable(n, h_val)
    if i is not None:
        raise ValueError(f"{kind} takes no index")
    if kind == "trivial":
        return ClassFunction.from_callable(n, lambda w: 1)
    if kind == "delta":
        return ClassFunction.from_callable(n, lambda w: (-1) ** len(w.neg_set()))
    if kind == "defining":
        return ClassFunction.from_callable(n, defining_char_value)
    if kind == "s":
        return ClassFunction.from_callable(
            n, lambda w: sum(1 for k in range(1, n + 1) if abs(w(k)) == k)
        )
    raise ValueError(f"unknown character {kind!r}")


# ---------------------------------------------------------------------------
# Closed-form character expressions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CharacterExpression:
    """a*1 + sum_{i in I} h_i + b*h_1 + c*s + d*delta + chi*defining - offset*1.

    I is a multiset (b contributes extra copies of h_1 separately, so an
    uncovered index 1 and the surrounded count coexist without collapsing).
    """

    n: int
    a: int = 0
    h_indices: tuple[int, ...] = ()
    b: int = 0
    c: int = 0
    d: int = 0
    chi: int = 0
    one_offset: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or self.c not in (0, 1) or self.d not in (0, 1):
            raise ValueError("coefficients out of range")
        if self.c and self.d:
            raise ValueError("c and d are never simultaneously 1")

    def h_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.h_indices + (1,) * self.b))

    def dimension(self) -> int:
        n = self.n
        total = self.a - self.one_offset + self.chi * n + self.c * n + self.d
        for i in self.h_multiset():
            total += 2**i * _binom(n, i)
        return total

    def evaluate(self) -> ClassFunction:
        n = self.n
        out = named_char("trivial", n).scale(self.a - self.one_offset)
        for i in self.h_multiset():
            out = out + named_char("h_i", n, i)
        if self.c:
            out = out + named_char("s", n)
        if self.d:
            out = out + named_char("delta", n)
        if self.chi:
            out = out + named_char("defining", n).scale(self.chi)
        return out

    def canonical_str(self) -> str:
        terms: list[str] = []

        def coeff(mult: int, name: str) -> str:
            return name if mult == 1 else f"{mult}*{name}"

        if self.chi > 0:
            terms.append(coeff(self.chi, "chi"))
        if self.a:
            terms.append(coeff(self.a, "1"))
        counts: dict[int, int] = {}
        for i in self.h_multiset():
            counts[i] = counts.get(i, 0) + 1
        for i in sorted(counts):
            terms.append(coeff(counts[i], f"h{i}"))
        if self.c:
            terms.append("s")
        if self.d:
            terms.append("delta")
        expr = " + ".join(terms) if terms else "0"
        if self.one_offset:
            expr += f" - {coeff(self.one_offset, '1')}"
        if self.chi < 0:
            expr += f" - {coeff(-self.chi, 'chi')}"
        return expr

    def to_json_dict(self) -> dict:
        return {
            "one": self.a,
            "h": {str(i): self.h_multiset().count(i) for i in sorted(set(self.h_multiset()))},
            "s": self.c,
            "delta": self.d,
            "chi": self.chi,
            "one_offset": self.one_offset,
            "dim": self.dimension(),
        }


def _binom(n: int, k: int) -> int:
    out = 1
    for j in range(k):
        out = out * (n - j) // (j + 1)
    return out


def evaluate(expr: CharacterExpression) -> ClassFunction:
    """Evaluate a character expression as an exact class function."""
    return expr.evaluate()


def formula_char(tset, n: int, side: str) -> CharacterExpression:
    """The closed-form degree-one character of the left or right quotient.

    The empty t-set is the standard-parabolic case with its own formula
    (sum of all h_i minus the defining character on the left, minus n
    trivial on the right); every other t-set goes through the index
    classification.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    tset = frozenset(tset)
    if not tset:
        allh = tuple(range(1, n + 1))
        if side == "left":
            return CharacterExpression(n, h_indices=allh, chi=-1)
        return CharacterExpression(n, h_indices=allh, one_offset=n)
    cls = classify(tset, n)
    uncovered = tuple(sorted(cls.uncovered))
    b = len(cls.surrounded)
    if side == "left":
        return CharacterExpression(
            n, a=len(cls.shaded), h_indices=uncovered, b=b, c=cls.c, d=cls.d
        )
    return CharacterExpression(
        n,
        h_indices=uncovered,
        b=b,
        c=cls.c,
        d=cls.d,
        chi=1,
        one_offset=len(uncovered) + b + cls.c,
    )


# ---------------------------------------------------------------------------
# Trace-based characters
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _label_equivariant(window: tuple, n: int, lie_type: LieType) -> bool:
    """g applied to the label at g^{-1}v is the label at v, for every root."""
    g = SignedPerm(window)
    table = group_table(n)
    src = table.left_mult_indices(g.inverse())
    smat = poly_action_matrix(g).T
    for root in positive_roots(lie_type, n):
        lab = label_matrix(n, root)
        moved = lab[src] @ smat
        if not _rows_proportional(moved, lab).all():
            return False
    return True


@dataclass(frozen=True)
class _TraceData:
    tset: frozenset
    n: int
    bundle: BasisBundle
    traces: tuple[Fraction, ...]  # per conjugacy class, trace on the full space
    fallback: bool  # closed-form bundle was rank-deficient


@lru_cache(maxsize=None)
def _trace_data(tset: frozenset, n: int) -> _TraceData:
    space = realize_tset(tset, n, LieType.B)
    fallback = False
    if not tset:
        bundle = permutohedral_basis(n)
    else:
        try:
            bundle = left_basis(space)
        except RankDeficientError:
            bundle = spline_space_basis(space)
            fallback = True
    if not labels_pairwise_independent(space.lie_type, n):
        raise AssertionError("edge labels are not pairwise independent")
    for s in bundle.splines:
        if not is_spline(s, space):
            raise AssertionError("bundle element fails the spline predicate")
    if len(bundle) != dim_degree_one(space):
        raise RankDeficientError("bundle size does not match the space dimension")
    mat, cols, inv = bundle_pivot_data(bundle)
    m = len(bundle)
    tensor = np.stack([s.num for s in bundle.splines])  # (m, N, n)
    piv_rows = [c // n for c in cols]
    piv_slots = [c % n for c in cols]
    table = group_table(n)
    traces = []
    for cl in conjugacy_classes(n):
        g = cl.rep
        if not _label_equivariant(g.window, n, space.lie_type):
            raise AssertionError("dot action does not preserve the edge ideals")
        src = table.left_mult_indices(g.inverse())
        smat = poly_action_matrix(g).T
        imgs = tensor[:, src, :] @ smat  # (m, N, n)
        pv = imgs[:, piv_rows, piv_slots]  # (m, m): images at pivot coordinates
        tr = Fraction(0)
        for j in range(m):
            row = pv[j]
            tr += sum(int(row[c]) * inv[c][j] for c in range(m))
        traces.append(tr)
    return _TraceData(tset, n, bundle, tuple(traces), fallback)


@lru_cache(maxsize=None)
def _space_bundle_check(space: HessenbergSpace) -> bool:
    data = _trace_data(t_set(space), space.n)
    if len(data.bundle) != dim_degree_one(space):
        raise RankDeficientError("bundle does not span for this space")
    for s in data.bundle.splines:
        if not is_spline(s, space):
            raise AssertionError("bundle element violates an edge condition")
    if not labels_pairwise_independent(space.lie_type, space.n):
        raise AssertionError("edge labels are not pairwise independent")
    return True


def computed_char(space: HessenbergSpace, side: str) -> ClassFunction:
    """Trace of the dot action on a certified basis, minus the invariant part.

    The span of t_1..t_n carries the defining character and the span of
    r_1..r_n the n-fold trivial character, so the quotient characters are
    trace - chi and trace - n respectively.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    n = space.n
    data = _trace_data(t_set(space), n)
    _space_bundle_check(space)
    values = []
    for cl, tr in zip(conjugacy_classes(n), data.traces):
        if side == "left":
            values.append(tr - defining_char_value(cl.rep))
        else:
            values.append(tr - n)
    return ClassFunction(n, tuple(values))


def used_fallback_basis(tset, n: int) -> bool:
    """Whether the closed-form bundles failed to span for this t-set."""
    return _trace_data(frozenset(tset), n).fallback
