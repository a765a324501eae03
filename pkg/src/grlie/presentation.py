"""Graded presentations and the degree-by-degree relation ideal."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .intlinalg import AbelianInvariants, IntegerLattice
from .lyndon import (
    AlphabetMismatch,
    LieElement,
    WeightedAlphabet,
    Word,
    basis_index,
    bracket,
    is_lyndon,
)

log = logging.getLogger(__name__)

Relation = Union[LieElement, Mapping[Word, int]]


class InhomogeneousRelation(ValueError):
    def __init__(self, label: str, degrees: Sequence[int]):
        self.label = label
        self.degrees = sorted(set(degrees))
        super().__init__(f"relation {label!r} mixes weighted degrees {self.degrees}")


class CacheDepthError(RuntimeError):
    """A lower-degree ideal component needed by the request is missing."""


@dataclass(frozen=True)
class FamilyParams:
    family: str
    genus: int = 0
    strands: int = 0
    punctures: int = 0

    def as_dict(self) -> Dict[str, int]:
        return {"genus": self.genus, "strands": self.strands, "punctures": self.punctures}


@dataclass(frozen=True, eq=False)
class GradedPresentation:
    """Weighted alphabet plus homogeneous relations.

    ``relations`` normally holds :class:`LieElement` values.  Plain mappings
    from Lyndon words to integers are accepted too, so that hand-built
    relations can be checked by :func:`validate`.
    """

    alphabet: WeightedAlphabet
    relations: Tuple[Relation, ...] = ()
    labels: Tuple[str, ...] = ()
    params: FamilyParams = field(default_factory=lambda: FamilyParams("custom"))

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        labels = tuple(self.labels) or tuple(f"r{i}" for i in range(len(self.relations)))
        if len(labels) != len(self.relations):
            raise ValueError("one label per relation required")
        object.__setattr__(self, "labels", labels)

    @property
    def name(self) -> str:
        return self.params.family

    def generators(self) -> List[LieElement]:
        return [LieElement.generator(self.alphabet, s) for s in self.alphabet.symbols]


def _coerce(p: GradedPresentation, label: str, r: Relation) -> LieElement:
    if isinstance(r, LieElement):
        if r.alphabet != p.alphabet:
            raise AlphabetMismatch(f"relation {label!r} is over a different alphabet")
        return r
    terms = {tuple(w): c for w, c in r.items() if c}
    n = len(p.alphabet)
    for w in terms:
        if not w or any(not 0 <= i < n for i in w):
            raise AlphabetMismatch(f"relation {label!r} uses letters outside the alphabet")
        if not is_lyndon(w):
            raise ValueError(f"relation {label!r}: {w} is not a Lyndon word")
    degrees = [p.alphabet.weight(w) for w in terms]
    if len(set(degrees)) > 1:
        raise InhomogeneousRelation(label, degrees)
    if not terms:
        raise ValueError(f"relation {label!r} is zero and carries no degree")
    return LieElement(p.alphabet, degrees[0], terms)


def validate(p: GradedPresentation) -> None:
    """Raise if some relation is inhomogeneous or over a foreign alphabet."""
    for label, r in zip(p.labels, p.relations):
        _coerce(p, label, r)


def relation_elements(p: GradedPresentation) -> List[LieElement]:
    return [_coerce(p, label, r) for label, r in zip(p.labels, p.relations)]


class IdealCache:
    """Components ``I_1, I_2, ...`` of the ideal generated by the relations.

    ``I_d`` lives in ``Z^{N_d}`` with ``N_d`` the number of Lyndon words of
    weighted degree ``d``.  ``history[d]`` records how many relation rows and
    bracket rows were fed into ``I_d``.
    """

    def __init__(self, presentation: GradedPresentation, threads: int = 0):
        validate(presentation)
        self.presentation = presentation
        self.threads = threads
        self.lattices: Dict[int, IntegerLattice] = {}
        self.history: Dict[int, Dict[str, int]] = {}
        self._relations: Dict[int, List[LieElement]] = {}
        for r in relation_elements(presentation):
            self._relations.setdefault(r.degree, []).append(r)

    @property
    def depth(self) -> int:
        d = 0
        while d + 1 in self.lattices:
            d += 1
        return d

    def fill(self, max_degree: int) -> "IdealCache":
        for d in range(self.depth + 1, max_degree + 1):
            ideal_component(self.presentation, d, self)
        return self

    def __getitem__(self, d: int) -> IntegerLattice:
        return self.lattices[d]

    def basis_elements(self, d: int) -> List[LieElement]:
        alphabet = self.presentation.alphabet
        words = list(basis_index(alphabet, d))
        out = []
        for row in self.lattices[d].sparse_basis():
            out.append(LieElement._raw(alphabet, d, {words[c]: x for c, x in row.items()}))
        return out


def _sparse_coords(e: LieElement) -> Dict[int, int]:
    idx = basis_index(e.alphabet, e.degree)
    return {idx[w]: c for w, c in e.coeffs.items()}


def ideal_component(
    p: GradedPresentation, d: int, cache: IdealCache
) -> IntegerLattice:
    """Compute (or fetch) ``I_d`` from the relations and lower components."""
    if cache.presentation is not p:
        raise ValueError("cache belongs to a different presentation")
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if d in cache.lattices:
        return cache.lattices[d]
    missing = [e for e in range(1, d) if e not in cache.lattices]
    if missing:
        raise CacheDepthError(f"ideal components {missing} must be computed before degree {d}")

    alphabet = p.alphabet
    lattice = IntegerLattice(len(basis_index(alphabet, d)))
    rels = cache._relations.get(d, [])
    for r in rels:
        lattice.add(_sparse_coords(r))

    jobs = []
    for g in p.generators():
        e = d - g.degree
        if e >= 1:
            jobs.extend((g, v) for v in cache.basis_elements(e))

    def image(job):
        g, v = job
        return _sparse_coords(bracket(g, v))

    if cache.threads and cache.threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=cache.threads) as pool:
            images = list(pool.map(image, jobs))
    else:
        images = map(image, jobs)
    for vec in images:
        lattice.add(vec)

    cache.lattices[d] = lattice
    cache.history[d] = {"relations": len(rels), "brackets": len(jobs)}
    log.debug(
        "%s: I_%d rank %d in Z^%d (%d relation rows, %d bracket rows)",
        p.name, d, lattice.rank, lattice.ambient_rank, len(rels), len(jobs),
    )
    return lattice


def quotient_component(
    p: GradedPresentation, d: int, cache: Optional[IdealCache] = None
) -> AbelianInvariants:
    """The degree-``d`` piece of the presented Lie algebra as an abelian group."""
    if cache is None:
        cache = IdealCache(p).fill(d - 1)
    return ideal_component(p, d, cache).cokernel()


def element_in_ideal(p: GradedPresentation, e: LieElement, cache: IdealCache) -> bool:
    if e.alphabet != p.alphabet:
        raise AlphabetMismatch("element is over a different alphabet")
    if e.degree not in cache.lattices:
        raise CacheDepthError(f"ideal component of degree {e.degree} has not been computed")
    return _sparse_coords(e) in cache.lattices[e.degree]
