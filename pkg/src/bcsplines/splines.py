"""
Degree-one splines on W_n.

A spline assigns to every group element a homogeneous linear polynomial
so that along each edge (w, w s_alpha) with alpha in H the difference of
values is a scalar multiple of the edge label w(alpha).  Values are kept
as an integer matrix over a common positive denominator, so everything is
exact; the identification x_{-i} = -x_i is applied when polynomials are
built, never stored.

The named families:

    t_i(w) = x_i                      r_i(w) = x_{w(i)}

    f_i^A(w) = x_{w(i)} - x_{w(i+1)}  on the coset w([i]) = A  (x_{w(n)} if i = n)
    y_{i,k}(w) = x_k - x_{w(i+1)}     when w^{-1}(k) in [i]
    g_k(w) = x_k                      when w^{-1}(k) < 0
    h(w) = x_{w(n)}                   when |Neg(w)| is odd

with A ranging over unbalanced subsets (no pair {a, -a}) of size i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .group import GroupTable, SignedPerm, group_table, order_key, successor
from .hessenberg import (
    HessenbergSpace,
    classify,
    dim_degree_one,
    h_descent_formula,
    t_set,
)
from .linalg import RankDeficientError, invert_fraction, pivots, sparse_kernel_basis
from .roots import Root, act, positive_roots, root_to_reflection


@dataclass(frozen=True)
class LinearPoly:
    """A homogeneous linear polynomial with rational coefficients."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def zero(cls, n: int) -> "LinearPoly":
        return cls((Fraction(0),) * n)

    @classmethod
    def variable(cls, k: int, n: int) -> "LinearPoly":
        """x_k, with x_{-i} = -x_i."""
        if k == 0 or abs(k) > n:
            raise ValueError(f"variable index {k} out of range")
        c = [Fraction(0)] * n
        c[abs(k) - 1] = Fraction(1 if k > 0 else -1)
        return cls(tuple(c))

    @classmethod
    def from_ints(cls, vec) -> "LinearPoly":
        return cls(tuple(Fraction(int(v)) for v in vec))

    def __add__(self, other):
        return LinearPoly(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return LinearPoly(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return LinearPoly(tuple(-a for a in self.coeffs))

    def scale(self, c) -> "LinearPoly":
        c = Fraction(c)
        return LinearPoly(tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def proportional_to(self, other: "LinearPoly") -> bool:
        """True iff one is a rational multiple of the other."""
        for (a, b) in combinations(range(len(self.coeffs)), 2):
            if self.coeffs[a] * other.coeffs[b] != self.coeffs[b] * other.coeffs[a]:
                return False
        # a zero polynomial is proportional to anything; otherwise supports match
        if self.is_zero() or other.is_zero():
            return True
        return all((a == 0) == (b == 0) for a, b in zip(self.coeffs, other.coeffs))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            mag = f"{abs(c)}*x{i}"
            if not terms:
                terms.append(mag if c > 0 else f"-{mag}")
            else:
                terms.append(f"+ {mag}" if c > 0 else f"- {mag}")
        return " ".join(terms) if terms else "0"


class Spline:
    """A map from W_n to linear polynomials, dense over the group table."""

    __slots__ = ("table", "num", "den")

    def __init__(self, table: GroupTable, num: np.ndarray, den: int = 1):
        num = np.asarray(num, dtype=np.int64)
        if num.shape != (table.size, table.n):
            raise ValueError("value matrix has wrong shape")
        if den == 0:
            raise ValueError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = int(np.gcd.reduce(np.abs(num), axis=None))
        g = math.gcd(g, den)
        if g > 1:
            num, den = num // g, den // g
        num.setflags(write=False)
        self.table = table
        self.num = num
        self.den = den

    @property
    def n(self) -> int:
        return self.table.n

    @classmethod
    def zero(cls, n: int) -> "Spline":
        table = group_table(n)
        return cls(table, np.zeros((table.size, table.n), dtype=np.int64))

    @classmethod
    def from_values(cls, n: int, values: dict) -> "Spline":
        """Build from a mapping of windows (or SignedPerms) to coefficient rows."""
        table = group_table(n)
        num = np.zeros((table.size, n), dtype=np.int64)
        for key, coeffs in values.items():
            win = key.window if isinstance(key, SignedPerm) else tuple(key)
            num[table.index[win]] = coeffs
        return cls(table, num)

    def value_at(self, w) -> LinearPoly:
        idx = w if isinstance(w, int) else self.table.index_of(w)
        return LinearPoly(tuple(Fraction(int(v), self.den) for v in self.num[idx]))

    def support(self) -> frozenset[SignedPerm]:
        rows = np.flatnonzero(np.any(self.num, axis=1))
        return frozenset(self.table.elements[int(k)] for k in rows)

    def is_zero(self) -> bool:
        return not self.num.any()

    def __add__(self, other: "Spline") -> "Spline":
        self._check(other)
        den = self.den * other.den // math.gcd(self.den, other.den)
        return Spline(
            self.table,
            self.num * (den // self.den) + other.num * (den // other.den),
            den,
        )

    def __sub__(self, other: "Spline") -> "Spline":
        return self + other.scale(-1)

    def scale(self, c) -> "Spline":
        c = Fraction(c)
        return Spline(self.table, self.num * c.numerator, self.den * c.denominator)

    def __eq__(self, other):
        return (
            isinstance(other, Spline)
            and self.n == other.n
            and self.den == other.den
            and np.array_equal(self.num, other.num)
        )

    def __hash__(self):
        return hash((self.n, self.den, self.num.tobytes()))

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("rank mismatch")

    def flat_fractions(self) -> list[Fraction]:
        return [Fraction(int(v), self.den) for v in self.num.ravel()]

    def dump(self) -> str:
        """One line per group element: "window TAB polynomial"."""
        lines = []
        for idx, win in enumerate(self.table.windows):
            lines.append(
                ",".join(map(str, win)) + "\t" + str(self.value_at(idx))
            )
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Edge labels and the spline predicate
# ---------------------------------------------------------------------------


def edge_label(w: SignedPerm, root: Root) -> LinearPoly:
    """Label of the edge (w, w s_alpha): the image w(alpha) read as a polynomial."""
    return LinearPoly.from_ints(act(w, root))


@lru_cache(maxsize=None)
def label_matrix(n: int, root: Root) -> np.ndarray:
    """Stacked edge labels act(w, root) for every w, as an integer matrix."""
    table = group_table(n)
    win = table.windows_array
    rows = np.arange(table.size)
    out = np.zeros((table.size, n), dtype=np.int64)
    for pos, c in enumerate(root.evector()):
        if c:
            col = win[:, pos]
            out[rows, np.abs(col) - 1] += c * np.sign(col)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def reflection_perm(n: int, root: Root) -> np.ndarray:
    """Index permutation w -> w * s_alpha over the group table."""
    table = group_table(n)
    perm = table.right_mult_indices(root_to_reflection(root))
    perm.setflags(write=False)
    return perm


def _rows_proportional(d: np.ndarray, lab: np.ndarray) -> np.ndarray:
    """Rowwise test that d is a scalar multiple of lab (lab rows nonzero)."""
    outer = d[:, :, None] * lab[:, None, :]
    minors_ok = np.all(outer == outer.transpose(0, 2, 1), axis=(1, 2))
    support_ok = np.all((d != 0) <= (lab != 0), axis=1)
    return minors_ok & support_ok


def is_spline(rho: Spline, space: HessenbergSpace, witness: bool = False):
    """Check the edge conditions of rho for every root of H.

    With witness=True returns (ok, offending (element, root) or None).
    """
    if rho.n != space.n:
        raise ValueError("rank mismatch")
    for root in sorted(space.roots):
        perm = reflection_perm(rho.n, root)
        d = rho.num - rho.num[perm]
        ok = _rows_proportional(d, label_matrix(rho.n, root))
        if not ok.all():
            if witness:
                bad = int(np.flatnonzero(~ok)[0])
                return False, (rho.table.elements[bad], root)
            return False
    return (True, None) if witness else True


@lru_cache(maxsize=None)
def labels_pairwise_independent(lie_type, n: int) -> bool:
    """No two distinct positive roots have proportional labels at any w.

    This is what makes a value at a support-minimal element with two or
    more H-inversions vanish, which in turn bounds the dimension of the
    degree-one spline space by n plus the number of elements with exactly
    one H-inversion.
    """
    roots = positive_roots(lie_type, n)
    for a, b in combinations(roots, 2):
        la, lb = label_matrix(n, a), label_matrix(n, b)
        outer = la[:, :, None] * lb[:, None, :]
        if np.any(np.all(outer == outer.transpose(0, 2, 1), axis=(1, 2))):
            return False
    return True


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


def unbalanced_sets(i: int, n: int) -> tuple[tuple[int, ...], ...]:
    """All unbalanced subsets of {±1,...,±n} of size i, in lexicographic order.

    Sets are returned as tuples sorted by the global order
    -n < ... < -1 < 1 < ... < n, and the enumeration is lexicographic on
    those tuples; there are 2^i * binomial(n, i) of them.
    """
    out = []
    for support in combinations(range(1, n + 1), i):
        for signs in product((1, -1), repeat=i):
            out.append(
                tuple(
                    sorted(
                        (s * a for a, s in zip(support, signs)),
                        key=lambda k: order_key(k, n),
                    )
                )
            )
    out.sort(key=lambda t: tuple(order_key(k, n) for k in t))
    return tuple(out)


def t_spline(k: int, n: int) -> Spline:
    """Constant family: every element is sent to x_k (k may be negative)."""
    table = group_table(n)
    num = np.zeros((table.size, n), dtype=np.int64)
    num[:, abs(k) - 1] = 1 if k > 0 else -1
    return Spline(table, num)


def r_spline(i: int, n: int) -> Spline:
    """Window family: w is sent to x_{w(i)}."""
    table = group_table(n)
    col = table.windows_array[:, i - 1]
    num = np.zeros((table.size, n), dtype=np.int64)
    num[np.arange(table.size), np.abs(col) - 1] = np.sign(col)
    return Spline(table, num)


def _coset_mask(table: GroupTable, i: int, elements_of_a) -> np.ndarray:
    target = frozenset(elements_of_a)
    return np.array(
        [frozenset(win[:i]) == target for win in table.windows], dtype=bool
    )


def f_spline(i: int, a, n: int) -> Spline:
    """Coset family: supported where w([i]) = A."""
    a = tuple(a)
    if len(a) != i or len({abs(x) for x in a}) != i:
        raise ValueError(f"need an unbalanced set of size {i}, got {a}")
    table = group_table(n)
    mask = _coset_mask(table, i, a)
    win = table.windows_array
    num = np.zeros((table.size, n), dtype=np.int64)
    rows = np.flatnonzero(mask)
    ci = win[rows, i - 1]
    num[rows, np.abs(ci) - 1] += np.sign(ci)
    if i < n:
        cj = win[rows, i]
        num[rows, np.abs(cj) - 1] -= np.sign(cj)
    return Spline(table, num)


def y_spline(i: int, k: int, n: int) -> Spline:
    """Value x_k - x_{w(i+1)} on the elements with w^{-1}(k) in [i]."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} out of range [1,{n-1}]")
    if k == 0 or abs(k) > n:
        raise ValueError(f"value index {k} out of range")
    table = group_table(n)
    win = table.windows_array
    mask = np.any(win[:, :i] == k, axis=1)
    num = np.zeros((table.size, n), dtype=np.int64)
    rows = np.flatnonzero(mask)
    num[rows, abs(k) - 1] += 1 if k > 0 else -1
    cj = win[rows, i]
    num[rows, np.abs(cj) - 1] -= np.sign(cj)
    return Spline(table, num)


def g_spline(k: int, n: int) -> Spline:
    """Value x_k on the elements with w^{-1}(k) < 0."""
    if k == 0 or abs(k) > n:
        raise ValueError(f"value index {k} out of range")
    table = group_table(n)
    mask = np.any(table.windows_array == -k, axis=1)
    num = np.zeros((table.size, n), dtype=np.int64)
    num[np.flatnonzero(mask), abs(k) - 1] = 1 if k > 0 else -1
    return Spline(table, num)


def h_spline(n: int) -> Spline:
    """Value x_{w(n)} on the elements with an odd number of negative entries."""
    if n < 2:
        raise ValueError("need n >= 2")
    table = group_table(n)
    win = table.windows_array
    mask = (np.sum(win < 0, axis=1) % 2) == 1
    num = np.zeros((table.size, n), dtype=np.int64)
    rows = np.flatnonzero(mask)
    cn = win[rows, n - 1]
    num[rows, np.abs(cn) - 1] = np.sign(cn)
    return Spline(table, num)


def r_minus_t_partial(k: int, n: int) -> Spline:
    """The combination sum_{j<=k} (r_j - t_j); its lowest support element is s_k."""
    out = Spline.zero(n)
    for j in range(1, k + 1):
        out = out + r_spline(j, n) - t_spline(j, n)
    return out


def f_tail_sum(p: int, m: int, k: int, n: int) -> Spline:
    """sum over p < i <= m of the coset splines f_i^A with k in A."""
    out = Spline.zero(n)
    for i in range(p + 1, m + 1):
        for a in unbalanced_sets(i, n):
            if k in a:
                out = out + f_spline(i, a, n)
    return out


def telescoping_identity(p: int, m: int, k: int, n: int) -> bool:
    """y_{p,k} + sum_{p<i<=m} sum_{A∋k} f_i^A = y_{m,k}; p = 0 reads y_0 = 0."""
    lhs = y_spline(p, k, n) if p else Spline.zero(n)
    return lhs + f_tail_sum(p, m, k, n) == y_spline(m, k, n)


def y_f_g_identity(p: int, k: int, n: int) -> bool:
    """y_{p,k} + sum_{p<i<=n} sum_{A∋k} f_i^A + g_{-k} = 0; p = 0 reads y_0 = 0."""
    lhs = y_spline(p, k, n) if p else Spline.zero(n)
    total = lhs + f_tail_sum(p, n, k, n) + g_spline(-k, n)
    return total.is_zero()


def shortest_support(rho: Spline) -> frozenset[SignedPerm]:
    """Support elements of minimal Coxeter length."""
    if rho.is_zero():
        raise ValueError("zero spline has no support")
    rows = np.flatnonzero(np.any(rho.num, axis=1))
    lens = rho.table.lengths[rows]
    best = rows[lens == lens.min()]
    return frozenset(rho.table.elements[int(r)] for r in best)


# ---------------------------------------------------------------------------
# Bundles: generating sets and bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BasisBundle:
    """An ordered set of splines with provenance tags."""

    n: int
    role: str  # generating | left | right | permutohedral | kernel
    splines: tuple[Spline, ...]
    labels: tuple[str, ...]

    def __len__(self):
        return len(self.splines)

    def matrix(self) -> np.ndarray:
        """Stacked flattened values; rows are integral (denominator one)."""
        for s in self.splines:
            if s.den != 1:
                raise ValueError("bundle splines must have integral values")
        return np.stack([s.num.ravel() for s in self.splines])


def _family_splines(tset, n: int):
    """The T/R/F/Y/G families determined by a t-set, with labels."""
    cls = classify(tset, n)
    t_part = [(t_spline(i, n), f"t{i}") for i in range(1, n + 1)]
    r_part = [(r_spline(i, n), f"r{i}") for i in range(1, n + 1)]
    f_part = [
        (f_spline(i, a, n), f"f{i}^{{{','.join(map(str, a))}}}")
        for i in sorted(cls.uncovered)
        for a in unbalanced_sets(i, n)
    ]
    y_part = [
        (y_spline(i, k, n), f"y{i},{k}")
        for i in sorted(cls.surrounded)
        for k in [x for x in range(-n, n + 1) if x != 0]
    ]
    if cls.c:
        g_part = [(g_spline(i, n), f"g{i}") for i in range(1, n + 1)]
    elif cls.d:
        g_part = [(h_spline(n), "h")]
    else:
        g_part = []
    return cls, t_part, r_part, f_part, y_part, g_part


def generating_set(space: HessenbergSpace) -> BasisBundle:
    """T ∪ R ∪ F ∪ Y ∪ G as dictated by the t-set of H."""
    _, t_part, r_part, f_part, y_part, g_part = _family_splines(t_set(space), space.n)
    items = t_part + r_part + f_part + y_part + g_part
    return BasisBundle(
        space.n, "generating", tuple(s for s, _ in items), tuple(l for _, l in items)
    )


def _sized_bundle(space: HessenbergSpace, role: str, items) -> BasisBundle:
    bundle = BasisBundle(
        space.n, role, tuple(s for s, _ in items), tuple(l for _, l in items)
    )
    dim = dim_degree_one(space)
    if len(bundle) != dim:
        raise RankDeficientError(
            f"{role} set has {len(bundle)} elements but the degree-one space "
            f"has dimension {dim} (t-set {{{','.join('t%d' % i for i in sorted(t_set(space)))}}}); "
            "the closed-form construction does not span here"
        )
    return bundle


def left_basis(space: HessenbergSpace) -> BasisBundle:
    """T ∪ {r_i : i shaded} ∪ F ∪ Y ∪ G; needs a nonempty t-set."""
    tset = t_set(space)
    if not tset:
        raise ValueError("left basis needs a space strictly larger than the simples")
    cls, t_part, r_part, f_part, y_part, g_part = _family_splines(tset, space.n)
    r_shaded = [r_part[i - 1] for i in sorted(cls.shaded)]
    return _sized_bundle(space, "left", t_part + r_shaded + f_part + y_part + g_part)


def right_basis(space: HessenbergSpace) -> BasisBundle:
    """T ∪ R ∪ consecutive differences of the F/Y/G families."""
    tset = t_set(space)
    if not tset:
        raise ValueError("right basis needs a space strictly larger than the simples")
    n = space.n
    cls, t_part, r_part, f_part, y_part, g_part = _family_splines(tset, n)
    items = list(t_part + r_part)
    for i in sorted(cls.uncovered):
        sets = unbalanced_sets(i, n)
        for m in range(len(sets) - 1):
            items.append(
                (
                    f_spline(i, sets[m], n) - f_spline(i, sets[m + 1], n),
                    f"f{i}^{{{','.join(map(str, sets[m]))}}}-next",
                )
            )
    for i in sorted(cls.surrounded):
        k = -n
        while k != n:
            nxt = successor(k, n)
            items.append((y_spline(i, k, n) - y_spline(i, nxt, n), f"y{i},{k}-y{i},{nxt}"))
            k = nxt
    if cls.c:
        for i in range(1, n):
            items.append((g_spline(i, n) - g_spline(i + 1, n), f"g{i}-g{i+1}"))
    elif cls.d:
        items.append((h_spline(n), "h"))
    return _sized_bundle(space, "right", items)


def permutohedral_basis(n: int) -> BasisBundle:
    """The full coset family F over every index; a basis when H is the simples."""
    items = [
        (f_spline(i, a, n), f"f{i}^{{{','.join(map(str, a))}}}")
        for i in range(1, n + 1)
        for a in unbalanced_sets(i, n)
    ]
    return BasisBundle(n, "permutohedral", tuple(s for s, _ in items), tuple(l for _, l in items))


# ---------------------------------------------------------------------------
# Exact expansion and the generic kernel basis
# ---------------------------------------------------------------------------


def bundle_pivot_data(bundle: BasisBundle):
    """Pivot columns and the exact inverse of the pivot submatrix.

    Raises RankDeficientError when the bundle is not linearly independent.
    """
    mat = bundle.matrix()
    _, cols = pivots(mat)
    if len(cols) != len(bundle):
        raise RankDeficientError(
            f"{bundle.role} bundle of size {len(bundle)} has rank {len(cols)}"
        )
    sub = [[int(mat[r, c]) for c in cols] for r in range(len(bundle))]
    return mat, cols, invert_fraction(sub)


def bundle_rank(bundle: BasisBundle) -> int:
    """Certified rank of the bundle (pivot count with an exact certificate)."""
    mat = bundle.matrix()
    rows, cols = pivots(mat)
    sub = [[int(mat[r, c]) for c in cols] for r in rows]
    invert_fraction(sub)  # exactness certificate; raises if singular
    return len(cols)


def expand(rho: Spline, bundle: BasisBundle) -> tuple[Fraction, ...]:
    """Exact coefficients of rho in the bundle; raises if not in the span.

    The full residual is checked, so a successful return is a proof of
    membership.
    """
    mat, cols, inv = bundle_pivot_data(bundle)
    target = rho.flat_fractions()
    coeffs = tuple(
        sum((target[c] * inv[j][k] for j, c in enumerate(cols)), Fraction(0))
        for k in range(len(bundle))
    )
    den = math.lcm(rho.den, *(c.denominator for c in coeffs))
    int_coeffs = np.array([int(c * den) for c in coeffs], dtype=object)
    resid = int_coeffs @ mat.astype(object) - (den // rho.den) * rho.num.ravel().astype(object)
    if any(resid):
        raise ValueError("spline is not in the span of the bundle")
    return coeffs


def reconstruct(coeffs, bundle: BasisBundle) -> Spline:
    out = Spline.zero(bundle.n)
    for c, s in zip(coeffs, bundle.splines):
        if c:
            out = out + s.scale(c)
    return out


def spline_space_basis(space: HessenbergSpace) -> BasisBundle:
    """A basis of the degree-one spline space from the edge conditions alone.

    Solves the proportionality constraints exactly and certifies the result
    (every vector passes the spline predicate; the count matches the scan
    dimension; independence has a modular-pivot certificate).  This is the
    fallback when the closed-form bundles do not span.
    """
    return _kernel_basis_cached(space)


@lru_cache(maxsize=None)
def _kernel_basis_cached(space: HessenbergSpace) -> BasisBundle:
    n = space.n
    table = group_table(n)
    rows: list[dict[int, int]] = []
    for root in sorted(space.roots):
        perm = reflection_perm(n, root)
        lab = label_matrix(n, root)
        for widx in range(table.size):
            wsidx = int(perm[widx])
            if wsidx < widx:
                continue
            lw = lab[widx]
            for p, q in combinations(range(n), 2):
                if lw[p] == 0 and lw[q] == 0:
                    continue
                row: dict[int, int] = {}
                for col, v in (
                    (widx * n + p, int(lw[q])),
                    (wsidx * n + p, -int(lw[q])),
                    (widx * n + q, -int(lw[p])),
                    (wsidx * n + q, int(lw[p])),
                ):
                    row[col] = row.get(col, 0) + v
                row = {c: v for c, v in row.items() if v}
                if row:
                    rows.append(row)
    vectors = sparse_kernel_basis(rows, table.size * n)
    splines = []
    for vec in vectors:
        # scale to integer values; a scalar multiple spans the same line
        den = math.lcm(1, *(v.denominator for v in vec.values()))
        num = np.zeros((table.size, n), dtype=np.int64)
        for col, v in vec.items():
            num[divmod(col, n)] = int(v * den)
        splines.append(Spline(table, num))
    for s in splines:
        if not is_spline(s, space):
            raise RankDeficientError("kernel vector fails the spline predicate")
    if len(splines) != dim_degree_one(space):
        raise RankDeficientError(
            f"kernel dimension {len(splines)} does not match the scan dimension"
        )
    bundle = BasisBundle(
        n,
        "kernel",
        tuple(splines),
        tuple(f"k{j}" for j in range(len(splines))),
    )
    bundle_pivot_data(bundle)  # independence certificate
    return bundle


# ---------------------------------------------------------------------------
# Support-minimal witnesses
# ---------------------------------------------------------------------------


def support_minimal_witnesses(space: HessenbergSpace) -> dict[SignedPerm, Spline]:
    """For each element of the closed-form descent sets, a spline whose
    shortest support is that element.

    Together with the constant family these witness the lower bound in the
    dimension count; tests check singleton shortest support and that the
    value there is projectively the label of the unique inversion.
    """
    n = space.n
    tset = t_set(space)
    out: dict[SignedPerm, Spline] = {}

    def asc(j, i):
        return SignedPerm.from_word(range(j, i + 1), n)

    def desc(j, i):
        return SignedPerm.from_word(range(j, i - 1, -1), n)

    def over(j, i):
        return SignedPerm.from_word(list(range(j, n + 1)) + list(range(n - 1, i - 1, -1)), n)

    h_combo = None
    if n >= 2:
        h_combo = h_spline(n) - r_minus_t_partial(n, n).scale(Fraction(1, 2))

    for i in range(1, n + 1):
        formula = h_descent_formula(tset, n, i)
        if i <= n - 2:
            pair = tset & {i - 1, i}
            if pair == {i - 1, i}:
                out[SignedPerm.simple(i, n)] = r_minus_t_partial(i, n)
            elif pair == {i}:
                out[SignedPerm.simple(i, n)] = r_minus_t_partial(i, n)
                for j in range(1, i):
                    out[asc(j, i)] = (
                        t_spline(j, n) - r_spline(i, n) - y_spline(i - 1, j, n)
                    )
            elif pair == {i - 1}:
                for j in range(i, n):
                    out[desc(j, i)] = y_spline(i, j + 1, n)
                out[desc(n, i)] = y_spline(i, -n, n)
                for j in range(1, n):
                    out[over(j, i)] = y_spline(i, -j, n)
            else:
                for w in formula:
                    out[w] = f_spline(i, w.window[:i], n)
        elif i == n - 1:
            pair = tset & {n - 2, n - 1}
            trip = tset & {n - 2, n - 1, n}
            if pair == {n - 2, n - 1}:
                out[SignedPerm.simple(n - 1, n)] = r_minus_t_partial(n - 1, n)
            elif pair == {n - 1}:
                out[SignedPerm.simple(n - 1, n)] = r_minus_t_partial(n - 1, n)
                for j in range(1, n - 1):
                    out[asc(j, n - 1)] = (
                        t_spline(j, n) - r_spline(n - 1, n) - y_spline(n - 2, j, n)
                    )
            elif trip == {n - 2, n}:
                out[SignedPerm.simple(n - 1, n)] = r_minus_t_partial(n - 1, n)
                out[SignedPerm.from_word([n, n - 1], n)] = h_combo
            elif trip == {n - 2}:
                out[SignedPerm.simple(n - 1, n)] = r_minus_t_partial(n - 1, n)
                for j in range(1, n + 1):
                    w = SignedPerm.from_word(list(range(j, n + 1)) + [n - 1], n)
                    out[w] = y_spline(n - 1, -j, n)
            elif trip == {n}:
                out[SignedPerm.from_word([n, n - 1], n)] = h_combo
                out[SignedPerm.simple(n - 1, n)] = r_minus_t_partial(n - 1, n)
                for j in range(1, n - 1):
                    out[asc(j, n - 1)] = (
                        t_spline(j, n) - r_spline(n - 1, n) - y_spline(n - 2, j, n)
                    )
            else:
                for w in formula:
                    out[w] = f_spline(n - 1, w.window[: n - 1], n)
        else:
            if n in tset:
                out[SignedPerm.simple(n, n)] = r_minus_t_partial(n, n)
            elif (n - 1) in tset:
                for j in range(1, n + 1):
                    out[asc(j, n)] = g_spline(j, n)
            else:
                for w in formula:
                    out[w] = f_spline(n, w.window, n)
    return out
