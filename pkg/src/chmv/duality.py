"""The duality between product algebras and extended multisets.

Continuous homomorphisms between products of chains are carried entirely
by index maps: a hom A -> B is a map from B's coordinates into A's with a
chain inclusion at every coordinate, acting by precomposition.  The two
functors exchange a multiset point of multiplicity s with a chain factor
of size s + 1; the unit and counit are the identity reindexings, and the
naturality squares are checked executably.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Mapping

from .algebra import (
    AlgebraMismatchError,
    AlgebraError,
    Element,
    ProductAlgebra,
    enumerate_elements,
)
from .chain import ChainSize, LINF, chain_subset
from .multiset import EMMorphism, EMultiset, INF

DEFAULT_SAMPLES = 100
DEFAULT_SEED = 0
SAMPLE_MAX_DENOMINATOR = 6


class HomError(AlgebraError):
    """Invalid continuous homomorphism or composition."""


@dataclass(frozen=True)
class ContinuousHom:
    """A continuous homomorphism in index-map normal form.

    index_map sends each target coordinate y to a source coordinate x with
    the chain at x included in the chain at y; the hom acts on elements by
    f |-> f o index_map.
    """

    source: ProductAlgebra
    target: ProductAlgebra
    index_map: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        as_dict = dict(self.index_map)
        if set(as_dict) != set(self.target.labels) or len(as_dict) != len(self.index_map):
            raise HomError("index map must be total on the target coordinates")
        for y, x in self.index_map:
            if x not in self.source.positions:
                raise HomError(f"index map hits unknown source coordinate {x!r}")
            if not chain_subset(self.source.chain(x), self.target.chain(y)):
                raise HomError(
                    f"{self.source.chain(x)} is not a subchain of {self.target.chain(y)}"
                )

    @cached_property
    def map(self) -> dict[str, str]:
        return dict(self.index_map)

    @cached_property
    def source_positions(self) -> tuple[int, ...]:
        """For each target coordinate, the position of its source coordinate."""
        pos = self.source.positions
        return tuple(pos[self.map[y]] for y in self.target.labels)


def make_hom(
    source: ProductAlgebra, target: ProductAlgebra, index_map: Mapping[str, str]
) -> ContinuousHom:
    return ContinuousHom(
        source, target, tuple((y, index_map[y]) for y in target.labels if y in index_map)
    )


def identity_hom(A: ProductAlgebra) -> ContinuousHom:
    return ContinuousHom(A, A, tuple((x, x) for x in A.labels))


def projection(A: ProductAlgebra, label: str) -> ContinuousHom:
    """The hom onto the one-factor algebra at a coordinate."""
    target = ProductAlgebra(((label, A.chain(label)),))
    return ContinuousHom(A, target, ((label, label),))


def apply_hom(h: ContinuousHom, f: Element) -> Element:
    if f.algebra != h.source:
        raise AlgebraMismatchError("element does not belong to the hom's source")
    return Element(h.target, tuple(f.coords[i] for i in h.source_positions))


def compose_homs(g: ContinuousHom, h: ContinuousHom) -> ContinuousHom:
    """h then g on elements; index maps compose the other way around."""
    if h.target != g.source:
        raise HomError("target of the first hom differs from source of the second")
    return ContinuousHom(
        h.source, g.target, tuple((z, h.map[x]) for z, x in g.index_map)
    )


def enumerate_continuous_homs(
    A: ProductAlgebra, B: ProductAlgebra
) -> Iterator[ContinuousHom]:
    """All continuous homs A -> B: every admissible index map, each once."""
    choices = [
        [x for x in A.labels if chain_subset(A.chain(x), B.chain(y))]
        for y in B.labels
    ]
    for sources in itertools.product(*choices):
        yield ContinuousHom(A, B, tuple(zip(B.labels, sources)))


def continuous_hom_count(A: ProductAlgebra, B: ProductAlgebra) -> int:
    total = 1
    for y in B.labels:
        total *= sum(1 for x in A.labels if chain_subset(A.chain(x), B.chain(y)))
    return total


def element_map(h: ContinuousHom) -> dict[Element, Element]:
    """Full element table of a hom over an all-finite source."""
    return {f: apply_hom(h, f) for f in enumerate_elements(h.source)}


# --- the two functors ------------------------------------------------------

def F_obj(X: EMultiset) -> ProductAlgebra:
    """Multiset point of multiplicity s becomes a chain factor of size s + 1."""
    return ProductAlgebra(
        tuple(
            (lbl, LINF if m == INF else ChainSize(m + 1)) for lbl, m in X.points
        )
    )


def F_mor(phi: EMMorphism) -> ContinuousHom:
    """A multiset map X -> Y induces precomposition F(Y) -> F(X)."""
    return ContinuousHom(
        F_obj(phi.target), F_obj(phi.source), tuple(phi.mapping)
    )


def H_obj(A: ProductAlgebra) -> EMultiset:
    """A chain factor of size n becomes a point of multiplicity n - 1."""
    return EMultiset(
        tuple((lbl, INF if not c.is_finite else c.n - 1) for lbl, c in A.factors)
    )


def H_mor(psi: ContinuousHom) -> EMMorphism:
    """A hom B -> A induces the point map H(A) -> H(B) carried by its index map."""
    return EMMorphism(H_obj(psi.target), H_obj(psi.source), tuple(psi.index_map))


def eta(X: EMultiset) -> EMMorphism:
    """The unit X -> H(F(X)): each point goes to its own projection point."""
    return EMMorphism(X, H_obj(F_obj(X)), tuple((x, x) for x in X.labels))


def epsilon(A: ProductAlgebra) -> ContinuousHom:
    """The counit A -> F(H(A)): the canonical coordinate bijection."""
    return ContinuousHom(A, F_obj(H_obj(A)), tuple((x, x) for x in A.labels))


# --- naturality checks -----------------------------------------------------

def check_naturality_eq1(phi: EMMorphism) -> bool:
    """Does H(F(phi)) after the unit equal the unit after phi, as point maps?"""
    from .multiset import compose_morphisms

    lhs = compose_morphisms(H_mor(F_mor(phi)), eta(phi.source))
    rhs = compose_morphisms(eta(phi.target), phi)
    return lhs.source == rhs.source and lhs.target == rhs.target and lhs.map == rhs.map


@lru_cache(maxsize=4096)
def _raw_elements(A: ProductAlgebra) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(e.coords for e in enumerate_elements(A))


def sample_elements(
    A: ProductAlgebra,
    count: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    max_denominator: int = SAMPLE_MAX_DENOMINATOR,
) -> list[Element]:
    """Deterministic rational samples; infinite factors draw small denominators."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        coords = []
        for _, c in A.factors:
            if c.is_finite:
                coords.append(Fraction(rng.randrange(c.n), c.n - 1))
            else:
                q = rng.randint(1, max_denominator)
                coords.append(Fraction(rng.randint(0, q), q))
        out.append(Element(A, tuple(coords)))
    return out


def check_naturality_eq2(
    psi: ContinuousHom,
    bound: int = 10 ** 6,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> bool:
    """Does F(H(psi)) after the counit equal the counit after psi, on elements?

    Checked exhaustively over the source when it is all-finite within the
    bound, otherwise on seeded rational samples.
    """
    B, A = psi.source, psi.target
    lhs = compose_homs(F_mor(H_mor(psi)), epsilon(B))
    rhs = compose_homs(epsilon(A), psi)
    if lhs.target != rhs.target:
        return False
    p1, p2 = lhs.source_positions, rhs.source_positions
    diff = [(i, j) for i, j in zip(p1, p2) if i != j]
    if B.all_finite and B.size <= bound:
        elems: Iterator[tuple[Fraction, ...]] = iter(_raw_elements(B))
    else:
        elems = (e.coords for e in sample_elements(B, samples, seed))
    return all(all(f[i] == f[j] for i, j in diff) for f in elems)


# --- JSON encodings ---------------------------------------------------------

def algebra_to_json(A: ProductAlgebra) -> dict:
    return {"factors": [{"label": lbl, "chain": str(c)} for lbl, c in A.factors]}


def element_to_json(f: Element) -> dict:
    return {
        "coords": {lbl: str(v) for lbl, v in zip(f.algebra.labels, f.coords)}
    }


def ideal_to_json(I) -> dict:
    return {"free": sorted(I.free)}


def hom_to_json(h: ContinuousHom) -> dict:
    return {
        "source": algebra_to_json(h.source),
        "target": algebra_to_json(h.target),
        "index_map": {y: x for y, x in h.index_map},
    }
