"""
Hessenberg spaces: lower order ideals of positive roots containing the
simple roots, and the combinatorics they induce on W_n.

For degree-one computations everything is governed by which of the
transpositions

    t_i = s_i s_{i+1} s_i = (i, i+2)          i in [n-2]
    t_{n-1} = s_{n-1} s_n s_{n-1} = (n-1, -(n-1))
    t_n = s_n s_{n-1} s_n = (n-1, -n)

lie in S(H); this module computes that "t-set", classifies indices as
uncovered / surrounded / shaded, and produces the sets D_H(i) of group
elements whose unique H-inversion is the simple root alpha_i — both by a
brute-force scan of W_n and by the closed-form case analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .group import SignedPerm, group_table
from .roots import (
    LieType,
    Root,
    act,
    is_positive,
    parse_root,
    poset_leq,
    positive_roots,
    root_to_reflection,
    simple_root,
    simple_roots,
)


@dataclass(frozen=True)
class HessenbergSpace:
    """A lower order ideal of positive roots containing all simple roots."""

    lie_type: LieType
    n: int
    roots: frozenset[Root]

    def __post_init__(self):
        pos = set(positive_roots(self.lie_type, self.n))
        for r in self.roots:
            if r not in pos:
                raise ValueError(f"{r} is not a positive root of {self.lie_type}_{self.n}")
        for alpha in simple_roots(self.lie_type, self.n):
            if alpha not in self.roots:
                raise ValueError(f"missing simple root {alpha}")
        for r in self.roots:
            for below in pos:
                if poset_leq(below, r) and below not in self.roots:
                    raise ValueError(f"not downward closed: {below} < {r} is missing")

    @classmethod
    def from_generators(cls, gens, lie_type: LieType, n: int) -> "HessenbergSpace":
        """Downward closure of the given roots together with the simple roots."""
        pos = positive_roots(lie_type, n)
        want = set(simple_roots(lie_type, n))
        for g in gens:
            want.update(r for r in pos if poset_leq(r, g))
        return cls(lie_type, n, frozenset(want))

    @classmethod
    def from_root_strings(cls, strings, lie_type: LieType, n: int) -> "HessenbergSpace":
        roots = frozenset(parse_root(s, lie_type) for s in strings)
        return cls(lie_type, n, roots | set(simple_roots(lie_type, n)))

    def serialize(self) -> str:
        return ";".join(str(r) for r in sorted(self.roots))

    @classmethod
    def parse(cls, s: str, lie_type: LieType, n: int) -> "HessenbergSpace":
        return cls.from_root_strings([p for p in s.split(";") if p], lie_type, n)


def enumerate_hessenberg(lie_type: LieType, n: int) -> tuple[HessenbergSpace, ...]:
    """All Hessenberg spaces of the given type and rank, each exactly once."""
    if n < 2:
        raise ValueError("need n >= 2")
    return _enumerate_cached(lie_type, n)


@lru_cache(maxsize=None)
def _enumerate_cached(lie_type: LieType, n: int) -> tuple[HessenbergSpace, ...]:
    delta = set(simple_roots(lie_type, n))
    upper = sorted(
        (r for r in positive_roots(lie_type, n) if r not in delta),
        key=lambda r: (sum(r.coords), r.coords),
    )
    below = {
        r: [s for s in upper if s != r and poset_leq(s, r)] for r in upper
    }
    ideals: list[frozenset[Root]] = []

    def rec(idx: int, chosen: set[Root]):
        if idx == len(upper):
            ideals.append(frozenset(chosen))
            return
        rec(idx + 1, chosen)
        r = upper[idx]
        if all(b in chosen for b in below[r]):
            chosen.add(r)
            rec(idx + 1, chosen)
            chosen.remove(r)

    rec(0, set())
    ideals.sort(key=lambda s: (len(s), sorted(r.coords for r in s)))
    return tuple(HessenbergSpace(lie_type, n, ideal | delta) for ideal in ideals)


def reflections(space: HessenbergSpace) -> frozenset[SignedPerm]:
    """S(H): the reflections of the roots in H."""
    return frozenset(root_to_reflection(r) for r in space.roots)


def t_root(i: int, n: int, lie_type: LieType) -> Root:
    """The root corresponding to t_i in the given type (n >= 2)."""
    if n < 2 or not 1 <= i <= n:
        raise ValueError(f"t-index {i} out of range for n={n}")
    coords = [0] * n
    if i <= n - 2:
        coords[i - 1] = coords[i] = 1
    elif i == n - 1:
        coords[n - 2] = 1 if lie_type is LieType.B else 2
        coords[n - 1] = 1
    else:
        coords[n - 2] = 1
        coords[n - 1] = 2 if lie_type is LieType.B else 1
    return Root(tuple(coords), lie_type)


def t_element(i: int, n: int) -> SignedPerm:
    """The transposition t_i itself: (i, i+2), (n-1, -(n-1)) or (n-1, -n)."""
    if i <= n - 2:
        return SignedPerm.transposition(i, i + 2, n)
    if i == n - 1:
        return SignedPerm.transposition(n - 1, -(n - 1), n)
    return SignedPerm.transposition(n - 1, -n, n)


def t_set(space: HessenbergSpace) -> frozenset[int]:
    """{i : t_i in S(H)}, read off from the type-correct roots."""
    return frozenset(
        i
        for i in range(1, space.n + 1)
        if t_root(i, space.n, space.lie_type) in space.roots
    )


def tset_str(tset) -> str:
    return ",".join(f"t{i}" for i in sorted(tset))


def parse_tset(s: str) -> frozenset[int]:
    out = set()
    for part in s.split(","):
        part = part.strip()
        if not part:
            continue
        if not part.startswith("t") or not part[1:].isdigit():
            raise ValueError(f"malformed t-set entry {part!r}; expected e.g. \"t1,t4\"")
        out.add(int(part[1:]))
    return frozenset(out)


def realizable_tsets(lie_type: LieType, n: int) -> frozenset[frozenset[int]]:
    """The t-subsets of [n] realizable by an ideal of the given type.

    In type B any ideal containing the t_n root contains the t_{n-1} root;
    in type C the implication is reversed.  All other t-roots are pairwise
    incomparable, so these implications are the only constraints.
    """
    out = []
    for mask in range(2 ** n):
        sub = frozenset(i + 1 for i in range(n) if mask >> i & 1)
        if lie_type is LieType.B and n in sub and n - 1 not in sub:
            continue
        if lie_type is LieType.C and n - 1 in sub and n not in sub:
            continue
        out.append(sub)
    return frozenset(out)


def from_tset(tset, n: int, lie_type: LieType) -> HessenbergSpace:
    """Smallest ideal of the given type whose t-set is exactly `tset`."""
    tset = frozenset(tset)
    space = HessenbergSpace.from_generators(
        [t_root(i, n, lie_type) for i in sorted(tset)], lie_type, n
    )
    if t_set(space) != tset:
        raise ValueError(
            f"t-set {{{tset_str(tset)}}} is not realizable in type {lie_type} at n={n}"
        )
    return space


def realize_tset(tset, n: int, preferred: LieType = LieType.B) -> HessenbergSpace:
    """Realize a t-set as an ideal, preferring the given type.

    Every subset of {t_1,...,t_n} is realizable in at least one of the two
    types.
    """
    other = LieType.C if preferred is LieType.B else LieType.B
    try:
        return from_tset(tset, n, preferred)
    except ValueError:
        return from_tset(tset, n, other)


def maximal_ideal_for_tset(tset, n: int, lie_type: LieType) -> HessenbergSpace:
    """Largest ideal of the given type whose t-set is exactly `tset`."""
    tset = frozenset(tset)
    missing = [t_root(i, n, lie_type) for i in range(1, n + 1) if i not in tset]
    keep = [
        r
        for r in positive_roots(lie_type, n)
        if not any(poset_leq(m, r) for m in missing)
    ]
    space = HessenbergSpace(lie_type, n, frozenset(keep) | set(simple_roots(lie_type, n)))
    if t_set(space) != tset:
        raise ValueError(
            f"t-set {{{tset_str(tset)}}} is not realizable in type {lie_type} at n={n}"
        )
    return space


def essential_reduction(space: HessenbergSpace) -> HessenbergSpace:
    """Intersect H with the simple roots and the t-roots.

    The degree-one spline space is unchanged by this reduction.
    """
    keep = set(simple_roots(space.lie_type, space.n))
    for i in range(1, space.n + 1):
        r = t_root(i, space.n, space.lie_type)
        if r in space.roots:
            keep.add(r)
    return HessenbergSpace(space.lie_type, space.n, frozenset(keep))


# ---------------------------------------------------------------------------
# H-inversions and the brute-force descent oracle
# ---------------------------------------------------------------------------


def h_inversions(w: SignedPerm, space: HessenbergSpace) -> frozenset[Root]:
    """Roots alpha in H with w(alpha) negative."""
    return frozenset(r for r in space.roots if not is_positive(act(w, r)))


@lru_cache(maxsize=None)
def _root_negativity(lie_type: LieType, n: int) -> dict[Root, np.ndarray]:
    """For each positive root, the boolean vector over W_n of 'w sends it negative'."""
    table = group_table(n)
    win = table.windows_array
    rows = np.arange(table.size)
    out = {}
    for root in positive_roots(lie_type, n):
        imgs = np.zeros((table.size, n), dtype=np.int64)
        for pos, c in enumerate(root.evector()):
            if c:
                col = win[:, pos]
                imgs[rows, np.abs(col) - 1] += c * np.sign(col)
        first = np.argmax(imgs != 0, axis=1)
        neg = imgs[rows, first] < 0
        neg.setflags(write=False)
        out[root] = neg
    return out


def h_descent_oracle(space: HessenbergSpace, i: int) -> frozenset[SignedPerm]:
    """Brute-force scan: elements whose unique H-inversion is alpha_i."""
    if not 1 <= i <= space.n:
        raise ValueError(f"index {i} out of range")
    table = group_table(space.n)
    neg = _root_negativity(space.lie_type, space.n)
    counts = np.zeros(table.size, dtype=np.int64)
    for r in space.roots:
        counts += neg[r]
    hits = (counts == 1) & neg[simple_root(i, space.lie_type, space.n)]
    return frozenset(table.elements[k] for k in np.flatnonzero(hits))


def dim_degree_one(space: HessenbergSpace) -> int:
    """n plus the number of elements with exactly one H-inversion."""
    return _dim_degree_one_cached(space)


@lru_cache(maxsize=None)
def _dim_degree_one_cached(space: HessenbergSpace) -> int:
    table = group_table(space.n)
    neg = _root_negativity(space.lie_type, space.n)
    counts = np.zeros(table.size, dtype=np.int64)
    for r in space.roots:
        counts += neg[r]
    return space.n + int(np.count_nonzero(counts == 1))


# ---------------------------------------------------------------------------
# Closed-form descent sets
# ---------------------------------------------------------------------------


def _word_elt(word, n: int) -> SignedPerm:
    return SignedPerm.from_word(word, n)


def _ascending(j: int, i: int, n: int) -> SignedPerm:
    """s_j s_{j+1} ... s_i (j <= i)."""
    return _word_elt(range(j, i + 1), n)


def _descending(j: int, i: int, n: int) -> SignedPerm:
    """s_j s_{j-1} ... s_i (j >= i)."""
    return _word_elt(range(j, i - 1, -1), n)


def _over_top(j: int, i: int, n: int) -> SignedPerm:
    """s_j ... s_n s_{n-1} ... s_i (ascend to n, then descend to i)."""
    return _word_elt(list(range(j, n + 1)) + list(range(n - 1, i - 1, -1)), n)


def h_descent_formula(tset, n: int, i: int) -> frozenset[SignedPerm]:
    """The case-split value of D_H(i) as a function of the t-set alone.

    t_0 is treated as absent from every t-set.
    """
    if n < 2 or not 1 <= i <= n:
        raise ValueError(f"index {i} out of range for n={n}")
    tset = frozenset(tset)

    def coset_reps_minus_identity(idx: int) -> frozenset[SignedPerm]:
        from .group import min_coset_reps

        e = SignedPerm.identity(n)
        return frozenset(w for w in min_coset_reps(n, idx) if w != e)

    if i <= n - 2:
        pair = tset & {i - 1, i}
        if pair == {i - 1, i}:
            return frozenset({SignedPerm.simple(i, n)})
        if pair == {i}:
            return frozenset(_ascending(j, i, n) for j in range(1, i + 1))
        if pair == {i - 1}:
            down = {_descending(j, i, n) for j in range(i, n + 1)}
            over = {_over_top(j, i, n) for j in range(1, n)}
            return frozenset(down | over)
        return coset_reps_minus_identity(i)

    if i == n - 1:
        pair = tset & {n - 2, n - 1}
        trip = tset & {n - 2, n - 1, n}
        if pair == {n - 2, n - 1}:
            return frozenset({SignedPerm.simple(n - 1, n)})
        if pair == {n - 1}:
            return frozenset(_ascending(j, n - 1, n) for j in range(1, n))
        if trip == {n - 2, n}:
            return frozenset(
                {SignedPerm.from_word([n, n - 1], n), SignedPerm.simple(n - 1, n)}
            )
        if trip == {n - 2}:
            ups = {
                _word_elt(list(range(j, n + 1)) + [n - 1], n) for j in range(1, n + 1)
            }
            return frozenset(ups | {SignedPerm.simple(n - 1, n)})
        if trip == {n}:
            asc = {_ascending(j, n - 1, n) for j in range(1, n)}
            return frozenset(asc | {SignedPerm.from_word([n, n - 1], n)})
        return coset_reps_minus_identity(n - 1)

    # i == n
    if n in tset:
        return frozenset({SignedPerm.simple(n, n)})
    if (n - 1) in tset:
        return frozenset(_ascending(j, n, n) for j in range(1, n + 1))
    return coset_reps_minus_identity(n)


def dim_degree_one_formula(tset, n: int) -> int:
    """n plus the sizes of the closed-form descent sets."""
    return n + sum(len(h_descent_formula(tset, n, i)) for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# Index classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IndexClassification:
    """Uncovered / surrounded / shaded indices of a t-set, plus the two flags.

    c = 1 iff t_n is absent (the standard-coset family contributes);
    d = 1 iff the t-set meets {t_{n-1}, t_n} in exactly {t_n} (the signed
    one-dimensional family contributes).  Never both.
    """

    n: int
    uncovered: frozenset[int]
    surrounded: frozenset[int]
    shaded: frozenset[int]
    c: int
    d: int


def classify(tset, n: int) -> IndexClassification:
    if n < 2:
        raise ValueError("need n >= 2")
    tset = frozenset(tset)
    if not tset <= set(range(1, n + 1)):
        raise ValueError(f"t-set entries out of range: {sorted(tset)}")
    uncovered, surrounded, shaded = set(), set(), set()
    for i in range(1, n + 1):
        if i == n - 1:
            if not tset & {n - 2, n - 1, n}:
                uncovered.add(i)
        elif not tset & {i - 1, i}:
            uncovered.add(i)
        if i <= n - 2 and tset & {i - 1, i} == {i - 1} and any(m > i for m in tset):
            surrounded.add(i)
        if i in tset or (i == n - 1 and n in tset):
            shaded.add(i)
    c = 1 if n not in tset else 0
    d = 1 if tset & {n - 1, n} == {n} else 0
    return IndexClassification(
        n, frozenset(uncovered), frozenset(surrounded), frozenset(shaded), c, d
    )
