"""Extended multisets and their divisibility-constrained morphisms.

A multiset is a finite labelled point set with multiplicities in the
positive integers extended by infinity.  A map of multisets must send a
point of finite multiplicity s to a point whose multiplicity is a finite
divisor of s; infinite multiplicities are unconstrained.  Profiles
summarize a multiset as a multiplicity -> cardinality table, which is the
invariant classifying product algebras up to isomorphism.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

INF = float("inf")
OMEGA = float("inf")

Mult = int | float  # positive int, or INF


class MultisetError(ValueError):
    """Base class for multiset errors."""


class MorphismError(MultisetError):
    """Invalid candidate morphism: non-total, or divisibility violated."""


def _check_mult(m: Mult, what: str = "multiplicity") -> None:
    if m == INF:
        return
    if not isinstance(m, int) or m < 1:
        raise MultisetError(f"{what} must be a positive integer or inf, got {m!r}")


def mult_divides(m: Mult, s: Mult) -> bool:
    """The morphism condition at one point: target multiplicity m against source s."""
    if s == INF:
        return True
    return m != INF and s % m == 0


@dataclass(frozen=True)
class EMultiset:
    """A finite labelled multiset with multiplicities in {1, 2, ...} or inf."""

    points: tuple[tuple[str, Mult], ...]

    def __post_init__(self) -> None:
        labels = [lbl for lbl, _ in self.points]
        if len(set(labels)) != len(labels):
            raise MultisetError(f"duplicate point labels in {labels}")
        for _, m in self.points:
            _check_mult(m)

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple(lbl for lbl, _ in self.points)

    @cached_property
    def mults(self) -> dict[str, Mult]:
        return dict(self.points)

    def mult(self, label: str) -> Mult:
        try:
            return self.mults[label]
        except KeyError:
            raise MultisetError(f"no point labelled {label!r}") from None


def make_multiset(points: Iterable[tuple[str, Mult]]) -> EMultiset:
    return EMultiset(tuple(points))


@dataclass(frozen=True)
class EMMorphism:
    """A point map whose target multiplicities divide the finite source ones."""

    source: EMultiset
    target: EMultiset
    mapping: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        as_dict = dict(self.mapping)
        if set(as_dict) != set(self.source.labels) or len(as_dict) != len(self.mapping):
            raise MorphismError("map must be total on the source points")
        for x, y in self.mapping:
            if y not in self.target.mults:
                raise MorphismError(f"image point {y!r} not in the target")
            if not mult_divides(self.target.mults[y], self.source.mults[x]):
                raise MorphismError(
                    f"multiplicity {self.target.mults[y]} of {y!r} does not divide "
                    f"{self.source.mults[x]} of {x!r}"
                )

    @cached_property
    def map(self) -> dict[str, str]:
        return dict(self.mapping)

    def __call__(self, label: str) -> str:
        return self.map[label]


def validate_morphism(
    source: EMultiset, target: EMultiset, mapping: Mapping[str, str]
) -> EMMorphism:
    """Check a candidate point map and wrap it as a morphism."""
    ordered = tuple((x, mapping[x]) for x in source.labels if x in mapping)
    if len(ordered) != len(mapping):
        raise MorphismError("map assigns points outside the source")
    return EMMorphism(source, target, ordered)


def identity_morphism(X: EMultiset) -> EMMorphism:
    return EMMorphism(X, X, tuple((x, x) for x in X.labels))


def compose_morphisms(psi: EMMorphism, phi: EMMorphism) -> EMMorphism:
    """phi then psi; divisibility transits through the middle multiset."""
    if phi.target != psi.source:
        raise MorphismError("target of the first map differs from source of the second")
    return EMMorphism(
        phi.source, psi.target, tuple((x, psi.map[y]) for x, y in phi.mapping)
    )


def enumerate_morphisms(X: EMultiset, Y: EMultiset) -> Iterator[EMMorphism]:
    """All morphisms X -> Y, one choice of admissible image per point."""
    choices = [
        [y for y in Y.labels if mult_divides(Y.mults[y], X.mults[x])]
        for x in X.labels
    ]
    for images in itertools.product(*choices):
        yield EMMorphism(X, Y, tuple(zip(X.labels, images)))


def morphism_count(X: EMultiset, Y: EMultiset) -> int:
    """Product of per-point admissible-image counts."""
    total = 1
    for x in X.labels:
        total *= sum(1 for y in Y.labels if mult_divides(Y.mults[y], X.mults[x]))
    return total


@dataclass(frozen=True)
class Profile:
    """Fiber summary of a multiset: multiplicity -> cardinality (or omega).

    Equality of profiles is isomorphism of the underlying multisets, i.e.
    existence of a multiplicity-preserving bijection.
    """

    entries: tuple[tuple[Mult, Mult], ...]

    def __post_init__(self) -> None:
        mults = [m for m, _ in self.entries]
        if len(set(mults)) != len(mults):
            raise MultisetError("profile lists a multiplicity twice")
        for m, c in self.entries:
            _check_mult(m)
            _check_mult(c, "cardinality")

    @cached_property
    def table(self) -> dict[Mult, Mult]:
        return dict(self.entries)

    def cardinality(self, mult: Mult) -> Mult:
        """Fiber size at a multiplicity; 0 when absent."""
        return self.table.get(mult, 0)


def make_profile(entries: Mapping[Mult, Mult]) -> Profile:
    ordered = tuple(sorted(entries.items(), key=lambda kv: (kv[0] == INF, kv[0])))
    return Profile(ordered)


def profile_of(X: EMultiset) -> Profile:
    return make_profile(Counter(m for _, m in X.points))


def is_isomorphic(P: Profile, Q: Profile) -> bool:
    return P.table == Q.table


# --- JSON encodings -------------------------------------------------------

def _mult_str(m: Mult) -> str:
    return "inf" if m == INF else str(m)


def _card_str(c: Mult) -> str:
    return "omega" if c == OMEGA else str(c)


def multiset_to_json(X: EMultiset) -> dict:
    return {"points": [{"label": lbl, "mult": _mult_str(m)} for lbl, m in X.points]}


def profile_to_json(P: Profile) -> dict:
    return {
        "entries": [{"mult": _mult_str(m), "card": _card_str(c)} for m, c in P.entries]
    }
