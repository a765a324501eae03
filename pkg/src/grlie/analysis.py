"""Hilbert tables and checks built on top of the ideal closure."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .families import bezrukavnikov, surface_group
from .intlinalg import AbelianInvariants
from .lyndon import LieElement, WeightedAlphabet, bracket
from .presentation import (
    CacheDepthError,
    GradedPresentation,
    IdealCache,
    element_in_ideal,
    quotient_component,
)


class NonIntegralRank(ArithmeticError):
    pass


@dataclass(frozen=True)
class HilbertTable:
    family: str
    params: Dict[str, int]
    alphabet_order: Tuple[str, ...]
    rows: Tuple[AbelianInvariants, ...]

    @property
    def free_ranks(self) -> List[int]:
        return [r.free_rank for r in self.rows]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": {k: self.params[k] for k in ("genus", "strands", "punctures")},
            "alphabet_order": list(self.alphabet_order),
            "degrees": [
                {"d": d, "free_rank": r.free_rank, "torsion": list(r.torsion)}
                for d, r in enumerate(self.rows, start=1)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HilbertTable":
        degrees = data["degrees"]
        if [row["d"] for row in degrees] != list(range(1, len(degrees) + 1)):
            raise ValueError("table rows must cover degrees 1..D contiguously")
        return cls(
            data["family"],
            dict(data["params"]),
            tuple(data["alphabet_order"]),
            tuple(AbelianInvariants(r["free_rank"], tuple(r["torsion"])) for r in degrees),
        )


def hilbert_table(
    p: GradedPresentation, max_degree: int, cache: Optional[IdealCache] = None,
    threads: int = 0,
) -> HilbertTable:
    if max_degree < 1:
        raise ValueError(f"max degree must be >= 1, got {max_degree}")
    cache = cache or IdealCache(p, threads=threads)
    rows = tuple(quotient_component(p, d, cache) for d in range(1, max_degree + 1))
    return HilbertTable(p.name, p.params.as_dict(), p.alphabet.symbols, rows)


def witt_ranks(alphabet: WeightedAlphabet, max_degree: int) -> List[int]:
    """Ranks of the free Lie algebra from the generating function identity.

    With ``f(t) = sum_g t^weight(g)``, the coefficients ``c_n`` of
    ``-log(1 - f)`` satisfy ``n c_n = sum_{d | n} d r_d``; solve for ``r_d``.
    """
    if max_degree < 1:
        raise ValueError(f"max degree must be >= 1, got {max_degree}")
    D = max_degree
    f = [0] * (D + 1)
    for w in alphabet.weights:
        if w <= D:
            f[w] += 1
    # c = sum_k f^k / k, truncated at t^D
    c = [Fraction(0)] * (D + 1)
    power = [1] + [0] * D
    for k in range(1, D + 1):
        power = [
            sum(power[i] * f[n - i] for i in range(n + 1)) for n in range(D + 1)
        ]
        if not any(power):
            break
        for n in range(D + 1):
            c[n] += Fraction(power[n], k)
    ranks: List[int] = []
    for d in range(1, D + 1):
        total = d * c[d] - sum(e * ranks[e - 1] for e in range(1, d) if d % e == 0)
        r = total / d
        if r.denominator != 1:
            raise NonIntegralRank(f"rank in degree {d} came out as {r}")
        ranks.append(int(r))
    return ranks


def is_central(
    e: LieElement, p: GradedPresentation, max_degree: int,
    cache: Optional[IdealCache] = None,
) -> bool:
    """True iff ``[e, g]`` lies in the ideal for every generator ``g``."""
    top = e.degree + max(p.alphabet.weights)
    if top > max_degree:
        raise CacheDepthError(
            f"degree {e.degree} element needs ideal components up to {top}, "
            f"max degree is {max_degree}"
        )
    cache = cache or IdealCache(p)
    cache.fill(top)
    return all(element_in_ideal(p, bracket(e, g), cache) for g in p.generators())


@dataclass(frozen=True)
class ExactnessRow:
    d: int
    total: int
    base: int
    fiber: int
    torsion: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]

    @property
    def defect(self) -> int:
        return self.total - self.base - self.fiber


@dataclass(frozen=True)
class ExactnessReport:
    genus: int
    strands: int
    rows: Tuple[ExactnessRow, ...] = field(default_factory=tuple)

    @property
    def defects(self) -> List[int]:
        return [r.defect for r in self.rows]

    def exact(self) -> bool:
        return not any(self.defects)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "strands": self.strands,
            "degrees": [
                {
                    "d": r.d,
                    "total": r.total,
                    "base": r.base,
                    "fiber": r.fiber,
                    "defect": r.defect,
                    "torsion": {
                        "total": list(r.torsion[0]),
                        "base": list(r.torsion[1]),
                        "fiber": list(r.torsion[2]),
                    },
                }
                for r in self.rows
            ],
        }


def exactness_check(g: int, n: int, max_degree: int, threads: int = 0) -> ExactnessReport:
    """Compare ranks across fiber -> P_n -> P_{n-1} in each degree."""
    if n < 2:
        raise ValueError(f"exactness check needs n >= 2, got {n}")
    total = hilbert_table(bezrukavnikov(g, n), max_degree, threads=threads)
    base = hilbert_table(bezrukavnikov(g, n - 1), max_degree, threads=threads)
    fiber = hilbert_table(surface_group(g, n - 1), max_degree, threads=threads)
    rows = tuple(
        ExactnessRow(
            d, t.free_rank, b.free_rank, f.free_rank, (t.torsion, b.torsion, f.torsion)
        )
        for d, (t, b, f) in enumerate(zip(total.rows, base.rows, fiber.rows), start=1)
    )
    return ExactnessReport(g, n, rows)


@dataclass(frozen=True)
class ComparisonRow:
    d: int
    left: AbelianInvariants
    right: AbelianInvariants

    @property
    def ranks_equal(self) -> bool:
        return self.left.free_rank == self.right.free_rank

    @property
    def torsion_equal(self) -> bool:
        return self.left.torsion == self.right.torsion


@dataclass(frozen=True)
class Comparison:
    left: HilbertTable
    right: HilbertTable
    rows: Tuple[ComparisonRow, ...]

    def ranks_equal(self) -> bool:
        return all(r.ranks_equal for r in self.rows)

    def torsion_equal(self) -> bool:
        return all(r.torsion_equal for r in self.rows)

    def to_json(self) -> dict:
        return {
            "left": {"family": self.left.family, "params": self.left.params},
            "right": {"family": self.right.family, "params": self.right.params},
            "degrees": [
                {
                    "d": r.d,
                    "free_rank": [r.left.free_rank, r.right.free_rank],
                    "free_rank_equal": r.ranks_equal,
                    "torsion": [list(r.left.torsion), list(r.right.torsion)],
                    "torsion_equal": r.torsion_equal,
                }
                for r in self.rows
            ],
        }


def compare_presentations(
    p1: GradedPresentation, p2: GradedPresentation, max_degree: int
) -> Comparison:
    """Degree-by-degree comparison; mismatches are reported, never raised."""
    t1 = hilbert_table(p1, max_degree)
    t2 = t1 if p2 is p1 else hilbert_table(p2, max_degree)
    rows = tuple(
        ComparisonRow(d, a, b) for d, (a, b) in enumerate(zip(t1.rows, t2.rows), start=1)
    )
    return Comparison(t1, t2, rows)
