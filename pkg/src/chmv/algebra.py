"""Finite-index products of Lukasiewicz chains.

An algebra is an ordered list of labelled factors; its elements are
coordinate tuples.  Ideals of such products are supported-coordinate
ideals I_D, and two brute-force oracles (subset scan for ideals, filtered
map enumeration for homomorphisms) certify the structural shortcuts used
elsewhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

from .chain import (
    ChainSize,
    ChainValue,
    FRAC_OPS,
    check_member,
    frac_neg,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)

DEFAULT_ENUM_BOUND = 10 ** 6
IDEAL_SCAN_LIMIT = 16


class AlgebraError(ValueError):
    """Base class for product-algebra errors."""


class DuplicateLabelError(AlgebraError):
    pass


class UnknownLabelError(AlgebraError):
    pass


class AlgebraMismatchError(AlgebraError):
    pass


class NotMaximalError(AlgebraError):
    pass


class EnumerationError(AlgebraError):
    """Enumeration impossible: infinite factor present or bound exceeded."""


@dataclass(frozen=True)
class ProductAlgebra:
    """A product of chains, one labelled factor per coordinate."""

    factors: tuple[tuple[str, ChainSize], ...]

    def __post_init__(self) -> None:
        labels = [lbl for lbl, _ in self.factors]
        if len(set(labels)) != len(labels):
            raise DuplicateLabelError(f"duplicate factor labels in {labels}")

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple(lbl for lbl, _ in self.factors)

    @cached_property
    def chains(self) -> dict[str, ChainSize]:
        return dict(self.factors)

    @cached_property
    def positions(self) -> dict[str, int]:
        return {lbl: i for i, lbl in enumerate(self.labels)}

    @cached_property
    def size(self) -> int | None:
        """Number of elements, or None when an infinite factor is present."""
        total = 1
        for _, c in self.factors:
            if not c.is_finite:
                return None
            total *= c.n
        return total

    @property
    def all_finite(self) -> bool:
        return self.size is not None

    def chain(self, label: str) -> ChainSize:
        try:
            return self.chains[label]
        except KeyError:
            raise UnknownLabelError(f"no factor labelled {label!r}") from None


def make_algebra(spec: Iterable[tuple[str, ChainSize]]) -> ProductAlgebra:
    """Validate a (label, chain) list into an algebra; [] gives the one-element algebra."""
    return ProductAlgebra(tuple(spec))


@dataclass(frozen=True)
class Element:
    """A coordinate tuple, aligned with the factor order of its algebra."""

    algebra: ProductAlgebra
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != len(self.algebra.factors):
            raise AlgebraError(
                f"expected {len(self.algebra.factors)} coordinates, got {len(self.coords)}"
            )
        for (_, c), v in zip(self.algebra.factors, self.coords):
            check_member(v, c)

    def coord(self, label: str) -> ChainValue:
        pos = self.algebra.positions.get(label)
        if pos is None:
            raise UnknownLabelError(f"no factor labelled {label!r}")
        return ChainValue(self.algebra.chains[label], self.coords[pos])

    def support(self) -> frozenset[str]:
        return frozenset(
            lbl for lbl, v in zip(self.algebra.labels, self.coords) if v != _ZERO
        )

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.coords) + ")"


def make_element(A: ProductAlgebra, coords: Iterable) -> Element:
    return Element(A, tuple(Fraction(v) for v in coords))


def zero(A: ProductAlgebra) -> Element:
    return Element(A, (_ZERO,) * len(A.factors))


def unit(A: ProductAlgebra) -> Element:
    return Element(A, (_ONE,) * len(A.factors))


def characteristic(A: ProductAlgebra, S: Iterable[str]) -> Element:
    """The {0,1}-valued element equal to 1 exactly on S."""
    S = set(S)
    for lbl in S:
        if lbl not in A.positions:
            raise UnknownLabelError(f"no factor labelled {lbl!r}")
    return Element(A, tuple(_ONE if lbl in S else _ZERO for lbl in A.labels))


def _same_algebra(f: Element, g: Element) -> None:
    if f.algebra != g.algebra:
        raise AlgebraMismatchError("elements belong to different algebras")


def pointwise_op(kind: str, f: Element, g: Element | None = None) -> Element:
    """Coordinatewise MV operation; results stay in the algebra by chain closure."""
    if kind == "neg":
        if g is not None:
            raise AlgebraError("neg takes a single operand")
        return Element(f.algebra, tuple(frac_neg(v) for v in f.coords))
    if kind not in FRAC_OPS:
        raise AlgebraError(f"unknown operation {kind!r}")
    if g is None:
        raise AlgebraError(f"{kind} needs two operands")
    _same_algebra(f, g)
    op = FRAC_OPS[kind]
    return Element(f.algebra, tuple(op(a, b) for a, b in zip(f.coords, g.coords)))


def leq_elem(f: Element, g: Element) -> bool:
    """Pointwise order."""
    _same_algebra(f, g)
    return all(a <= b for a, b in zip(f.coords, g.coords))


def boolean_center_contains(f: Element) -> bool:
    """Idempotents of the truncated sum: every coordinate is 0 or 1."""
    return all(v == _ZERO or v == _ONE for v in f.coords)


def enumerate_elements(
    A: ProductAlgebra, bound: int = DEFAULT_ENUM_BOUND
) -> Iterator[Element]:
    """Yield every element of an all-finite algebra exactly once."""
    if not A.all_finite:
        raise EnumerationError("cannot enumerate an algebra with an infinite factor")
    if A.size > bound:
        raise EnumerationError(f"algebra has {A.size} elements, bound is {bound}")
    ranges = [c.values() for _, c in A.factors]
    for coords in itertools.product(*ranges):
        yield Element(A, coords)


@dataclass(frozen=True)
class SupportIdeal:
    """The ideal I_D of elements vanishing outside the free coordinate set D."""

    algebra: ProductAlgebra
    free: frozenset[str]

    def __post_init__(self) -> None:
        unknown = self.free - set(self.algebra.labels)
        if unknown:
            raise UnknownLabelError(f"labels {sorted(unknown)} not in the algebra")


def principal_ideal(a: Element) -> SupportIdeal:
    """The ideal generated by a.

    Each nonzero coordinate of a generates its whole simple factor under
    n-fold sums, so the ideal is supported exactly on supp(a).
    """
    return SupportIdeal(a.algebra, a.support())


def ideal_membership(f: Element, I: SupportIdeal) -> bool:
    if f.algebra != I.algebra:
        raise AlgebraMismatchError("element and ideal belong to different algebras")
    return all(
        v == _ZERO for lbl, v in zip(f.algebra.labels, f.coords) if lbl not in I.free
    )


def ideal_sup(I: SupportIdeal) -> Element:
    """Supremum of I_D: the characteristic element of D."""
    return characteristic(I.algebra, I.free)


def maximal_ideals(A: ProductAlgebra) -> list[SupportIdeal]:
    """The projection kernels, one per coordinate."""
    labels = set(A.labels)
    return [SupportIdeal(A, frozenset(labels - {x})) for x in A.labels]


@dataclass(frozen=True)
class Prop21Report:
    """Independent evaluations of the four principality conditions for a maximal ideal."""

    principal: bool
    projection_kernel: bool
    omits_direct_sum: bool
    sup_in_center: bool
    generator: Element
    point: str

    @property
    def all_agree(self) -> bool:
        return self.principal == self.projection_kernel == self.omits_direct_sum == self.sup_in_center

    @property
    def all_hold(self) -> bool:
        return self.all_agree and self.principal


def prop21_report(M: SupportIdeal) -> Prop21Report:
    """Evaluate the four equivalent principality conditions on a maximal ideal."""
    A = M.algebra
    missing = [x for x in A.labels if x not in M.free]
    if len(missing) != 1:
        raise NotMaximalError(
            f"ideal frees {len(M.free)} of {len(A.labels)} coordinates; not maximal"
        )
    point = missing[0]
    gen = characteristic(A, M.free)
    # (1) the witness generator generates exactly M
    principal = principal_ideal(gen) == M and ideal_membership(gen, M)
    # (2) M is the kernel of exactly one projection
    projection_kernel = sum(1 for x in A.labels if M.free == frozenset(set(A.labels) - {x})) == 1
    # (3) the direct-sum ideal (all of A at finite index, i.e. I_X) is not inside M
    omits_direct_sum = not set(A.labels) <= M.free
    # (4) the sup of M lies in M and in the Boolean center
    sup = ideal_sup(M)
    sup_in_center = ideal_membership(sup, M) and boolean_center_contains(sup)
    return Prop21Report(
        principal=principal,
        projection_kernel=projection_kernel,
        omits_direct_sum=omits_direct_sum,
        sup_in_center=sup_in_center,
        generator=gen,
        point=point,
    )


def quotient_by_maximal(A: ProductAlgebra, x: str) -> ChainSize:
    """The simple quotient at a projection kernel is the factor chain itself."""
    return A.chain(x)


def split_fin_inf(A: ProductAlgebra) -> tuple[ProductAlgebra, ProductAlgebra]:
    """Partition the factors into the finite-chain part and the interval part."""
    fin = tuple((lbl, c) for lbl, c in A.factors if c.is_finite)
    inf = tuple((lbl, c) for lbl, c in A.factors if not c.is_finite)
    return ProductAlgebra(fin), ProductAlgebra(inf)


def archimedean_rank(a: Element) -> int:
    """Least n >= 1 with the n-fold and (n+1)-fold truncated sums of a equal.

    Coordinatewise the rank is 1 at zero and ceil(1/v) otherwise.
    """
    rank = 1
    for v in a.coords:
        if v != _ZERO:
            rank = max(rank, -(-v.denominator // v.numerator))
    return rank


# --- brute-force oracles -------------------------------------------------

def _op_tables(elems: list[Element]) -> tuple[list[list[int]], list[int], int]:
    """Cayley tables for truncated sum and negation over an element list."""
    index = {e.coords: i for i, e in enumerate(elems)}
    n = len(elems)
    opl = [[0] * n for _ in range(n)]
    neg = [0] * n
    for i, e in enumerate(elems):
        neg[i] = index[tuple(frac_neg(v) for v in e.coords)]
        for j in range(i, n):
            k = index[tuple(min(a + b, _ONE) for a, b in zip(e.coords, elems[j].coords))]
            opl[i][j] = opl[j][i] = k
    zero_idx = index[(_ZERO,) * len(elems[0].coords)] if elems else 0
    return opl, neg, zero_idx


def brute_force_ideals(A: ProductAlgebra) -> list[frozenset[Element]]:
    """All ideals of a small all-finite algebra, found by scanning subsets.

    An ideal is a subset containing 0, downward closed, and closed under
    the truncated sum.  The scan also certifies that every ideal found is
    a support ideal I_D.
    """
    elems = list(enumerate_elements(A))
    n = len(elems)
    if n > IDEAL_SCAN_LIMIT:
        raise EnumerationError(f"{n} elements exceed the subset-scan limit {IDEAL_SCAN_LIMIT}")
    opl, _, zero_idx = _op_tables(elems)
    # bitmask of elements below each element
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if all(b <= a for a, b in zip(elems[i].coords, elems[j].coords)):
                down[i] |= 1 << j
    full = (1 << n) - 1
    found = []
    for mask in range(1 << n):
        if not mask >> zero_idx & 1:
            continue
        members = [i for i in range(n) if mask >> i & 1]
        if any(down[i] & ~mask & full for i in members):
            continue
        if any(not mask >> opl[i][j] & 1 for i in members for j in members):
            continue
        found.append(frozenset(elems[i] for i in members))
    supports = {
        frozenset(
            e for e in elems if all(v == _ZERO for lbl, v in zip(A.labels, e.coords) if lbl not in D)
        )
        for D in map(frozenset, _powerset(A.labels))
    }
    for ideal in found:
        if ideal not in supports:
            raise RuntimeError("oracle found an ideal that is not a support ideal")
    return found


def _powerset(items):
    items = list(items)
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)


def ideal_elements(I: SupportIdeal) -> frozenset[Element]:
    """Materialize a support ideal of an all-finite algebra as an element set."""
    return frozenset(
        e for e in enumerate_elements(I.algebra) if ideal_membership(e, I)
    )


def brute_force_homs(
    A: ProductAlgebra, B: ProductAlgebra, bound: int = DEFAULT_ENUM_BOUND
) -> list[dict[Element, Element]]:
    """All MV-homomorphisms A -> B as full element tables.

    A map is a homomorphism when it preserves 0, negation, and the
    truncated sum; the search backtracks over images with the constraints
    checked as soon as all participating elements are assigned.
    """
    ea = list(enumerate_elements(A))
    eb = list(enumerate_elements(B))
    n, m = len(ea), len(eb)
    if m ** n > bound:
        raise EnumerationError(f"{m}^{n} candidate maps exceed the bound {bound}")
    opl_a, neg_a, zero_a = _op_tables(ea)
    opl_b, neg_b, zero_b = _op_tables(eb)
    # constraints that become checkable when index i is the last one assigned
    sum_with = [
        [(j, opl_a[i][j]) for j in range(i + 1) if opl_a[i][j] <= i] for i in range(n)
    ]
    sum_into = [
        [(p, q) for p in range(i) for q in range(p, i) if opl_a[p][q] == i]
        for i in range(n)
    ]
    h = [-1] * n
    homs: list[dict[Element, Element]] = []

    def admissible(i: int, v: int) -> bool:
        if i == zero_a and v != zero_b:
            return False
        k = neg_a[i]
        if k <= i and neg_b[v] != (v if k == i else h[k]):
            return False
        for j, k2 in sum_with[i]:
            if opl_b[v][v if j == i else h[j]] != (v if k2 == i else h[k2]):
                return False
        for p, q in sum_into[i]:
            if opl_b[h[p]][h[q]] != v:
                return False
        return True

    def search(i: int) -> None:
        if i == n:
            homs.append({ea[j]: eb[h[j]] for j in range(n)})
            return
        for v in range(m):
            if admissible(i, v):
                h[i] = v
                search(i + 1)
        h[i] = -1

    if n == 0:
        return [{}]
    search(0)
    return homs
