"""Classification predicates, separation, surjectivity, and lifting.

The predicates act on profiles so that algebras over infinite index sets
can be classified symbolically; concrete finite algebras route through
the profile of their dual multiset.  The lifting construction for
projective algebras is the deterministic one that sends every coordinate
missed by the surjection to a fixed two-element factor.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Element, ProductAlgebra, leq_elem
from .chain import ChainSize
from .duality import ContinuousHom, HomError, projection
from .multiset import EMultiset, INF, OMEGA, Profile

_ONE = Fraction(1)
_ZERO = Fraction(0)


class StructureError(ValueError):
    """Precondition failure in a structural construction."""


def is_hyperarchimedean(P: Profile) -> bool:
    """Finitely many interval factors; the finite-multiplicity fibers of a
    representable profile are always finitely many."""
    return P.cardinality(INF) != OMEGA


def is_stone(P: Profile) -> bool:
    """No interval factor at all."""
    return P.cardinality(INF) == 0


def is_extremally_disconnected(P: Profile) -> bool:
    """The whole algebra is finite: finite multiplicities, finite fibers."""
    return all(m != INF and c != OMEGA for m, c in P.entries)


def urysohn_strauss_holds(P: Profile) -> bool:
    """Separation by homs into the interval works only for powerset algebras."""
    return all(m == 1 for m, _ in P.entries)


def is_projective(P: Profile) -> bool:
    """A two-element factor is present."""
    return P.cardinality(1) != 0


def injective_in_EM(X: EMultiset) -> bool:
    """Some point has multiplicity 1."""
    return any(m == 1 for _, m in X.points)


def separate(f: Element, g: Element) -> ContinuousHom:
    """A projection sending f to 1 and g to 0, in a powerset algebra.

    Returns the least-index witness coordinate.
    """
    A = f.algebra
    if any(c != ChainSize(2) for _, c in A.factors):
        raise StructureError("separation requires a Boolean (all two-element) algebra")
    if leq_elem(f, g):
        raise StructureError("nothing to separate: f lies below g")
    for lbl, a, b in zip(A.labels, f.coords, g.coords):
        if a == _ONE and b == _ZERO:
            return projection(A, lbl)
    raise AssertionError("unreachable: f above g at some Boolean coordinate")


def is_surjective_hom(h: ContinuousHom) -> bool:
    """Surjective exactly when the index map is injective and chain-exact."""
    sources = [x for _, x in h.index_map]
    if len(set(sources)) != len(sources):
        return False
    return all(h.source.chain(x) == h.target.chain(y) for y, x in h.index_map)


def lift(phi: ContinuousHom, psi: ContinuousHom, s0: str) -> ContinuousHom:
    """Lift phi: A -> B along a surjection psi: C -> B using a two-element factor.

    Coordinates of C hit by psi's index map copy phi's assignment; every
    other coordinate reads the fixed factor s0 of A.
    """
    A, B, C = phi.source, phi.target, psi.source
    if psi.target != B:
        raise HomError("phi and psi must share their target algebra")
    if A.chain(s0) != ChainSize(2):
        raise StructureError(f"coordinate {s0!r} is not a two-element factor")
    if not is_surjective_hom(psi):
        raise StructureError("psi is not surjective")
    hit = {x: phi.map[y] for y, x in psi.index_map}
    index_map = tuple((x, hit.get(x, s0)) for x in C.labels)
    return ContinuousHom(A, C, index_map)
