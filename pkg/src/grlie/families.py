"""Constructors for the braid-type presentations.

Generator names double as the surface syntax of the expression parser:
``A[1,2]``, ``B[1,2]``, ``a[l,i]``, ``b[l,i]``, ``a[m]``, ``c[m]``, ``u[i]``.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, List, Sequence, Tuple

from .lyndon import LieElement, WeightedAlphabet, bracket
from .presentation import FamilyParams, GradedPresentation

FAMILIES = (
    "free",
    "drinfeld_kohno",
    "ihara_sphere",
    "kv_sphere",
    "bezrukavnikov",
    "surface_group",
)


class _Builder:
    def __init__(self, symbols: Sequence[str], weights: Sequence[int] = ()):
        self.alphabet = WeightedAlphabet(tuple(symbols), tuple(weights))
        self.relations: List[LieElement] = []
        self.labels: List[str] = []

    def __call__(self, name: str) -> LieElement:
        return LieElement.generator(self.alphabet, name)

    def relate(self, label: str, e: LieElement) -> None:
        if e:
            self.relations.append(e)
            self.labels.append(label)

    def build(self, params: FamilyParams) -> GradedPresentation:
        return GradedPresentation(
            self.alphabet, tuple(self.relations), tuple(self.labels), params
        )


def free_lie(names: Iterable[str], weights: Sequence[int] = ()) -> GradedPresentation:
    names = tuple(names)
    if not names:
        raise ValueError("a free Lie algebra needs at least one generator")
    return _Builder(names, weights).build(FamilyParams("free"))


def _pairs(n: int) -> List[Tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def _disjoint(B: _Builder, pairs, name: str) -> None:
    for (i, j), (s, t) in combinations(pairs, 2):
        if not {i, j} & {s, t}:
            B.relate(
                f"disjoint[{i}{j},{s}{t}]",
                bracket(B(f"{name}[{i},{j}]"), B(f"{name}[{s},{t}]")),
            )


def _infinitesimal_braid(B: _Builder, n: int) -> None:
    _disjoint(B, _pairs(n), "A")
    A = lambda a, b: B(f"A[{a},{b}]")  # noqa: E731
    for i, j, k in combinations(range(1, n + 1), 3):
        B.relate(f"4T[{i}{j}{k}]a", bracket(A(i, j), A(i, k) + A(j, k)))
        B.relate(f"4T[{i}{j}{k}]b", bracket(A(i, k), A(i, j) + A(j, k)))


def drinfeld_kohno(n: int) -> GradedPresentation:
    """Infinitesimal pure braid relations on ``A[i,j]``, ``1 <= i < j <= n``."""
    if n < 2:
        raise ValueError(f"drinfeld_kohno needs n >= 2, got {n}")
    B = _Builder([f"A[{i},{j}]" for i, j in _pairs(n)])
    _infinitesimal_braid(B, n)
    return B.build(FamilyParams("drinfeld_kohno", strands=n))


def ihara_sphere(n: int) -> GradedPresentation:
    """Sphere presentation on ``B[i,j]``, ``i < j``, with star sums killed.

    The symmetry ``B[j,i] = B[i,j]`` and ``B[i,i] = 0`` are built into the
    indexing rather than emitted as relations.
    """
    if n < 2:
        raise ValueError(f"ihara_sphere needs n >= 2, got {n}")
    pairs = _pairs(n)
    B = _Builder([f"B[{i},{j}]" for i, j in pairs])
    _disjoint(B, pairs, "B")
    for i in range(1, n + 1):
        star = LieElement.zero(B.alphabet, 1)
        for j in range(1, n + 1):
            if j != i:
                star = star + B(f"B[{min(i, j)},{max(i, j)}]")
        B.relate(f"star[{i}]", star)
    return B.build(FamilyParams("ihara_sphere", strands=n))


def kv_sphere(n: int, braid_relations: bool = True) -> GradedPresentation:
    """Sphere presentation on ``A[i,j]``, ``i < j <= n-1``, with ``2*sum = 0``.

    By default the infinitesimal braid relations on ``n-1`` strands are
    included, which makes the sum central.  With ``braid_relations=False``
    only the disjoint commutators and the torsion relation are emitted; that
    algebra carries extra 2-torsion from degree 2 on and the sum is not
    central in it.
    """
    if n < 3:
        raise ValueError(f"kv_sphere needs n >= 3 (no generators otherwise), got {n}")
    pairs = _pairs(n - 1)
    B = _Builder([f"A[{i},{j}]" for i, j in pairs])
    if braid_relations:
        _infinitesimal_braid(B, n - 1)
    else:
        _disjoint(B, pairs, "A")
    total = LieElement.zero(B.alphabet, 1)
    for i, j in pairs:
        total = total + B(f"A[{i},{j}]")
    B.relate("torsion", 2 * total)
    return B.build(FamilyParams("kv_sphere", strands=n))


def bezrukavnikov(g: int, n: int, representative: int = 1) -> GradedPresentation:
    """Closed-surface pure braid presentation on ``a[l,i]``, ``b[l,i]``.

    ``s_{i,j}`` is expanded as ``[a[r,i], b[r,j]]`` with ``r = representative``
    (1 by default); any choice gives the same ideal.
    """
    if g < 1:
        raise ValueError(
            f"bezrukavnikov needs genus >= 1, got {g}; "
            "the genus-0 (sphere) case is ihara_sphere(n)"
        )
    if n < 1:
        raise ValueError(f"bezrukavnikov needs n >= 1, got {n}")
    if not 1 <= representative <= g:
        raise ValueError(f"representative genus index must lie in 1..{g}")
    G, N = range(1, g + 1), range(1, n + 1)
    B = _Builder([f"{x}[{l},{i}]" for i in N for l in G for x in "ab"])
    a = lambda l, i: B(f"a[{l},{i}]")  # noqa: E731
    b = lambda l, i: B(f"b[{l},{i}]")  # noqa: E731
    r = representative

    def s(i, j):
        return bracket(a(r, i), b(r, j))

    for i, j in permutations(N, 2):
        for l in G:
            for k in G:
                if l != k:
                    B.relate(f"R1[l={l},i={i},k={k},j={j}]", bracket(a(l, i), b(k, j)))
    for i, j in combinations(N, 2):
        for l in G:
            for k in G:
                B.relate(f"R2[l={l},i={i},k={k},j={j}]", bracket(a(l, i), a(k, j)))
                B.relate(f"R3[l={l},i={i},k={k},j={j}]", bracket(b(l, i), b(k, j)))
    for i, j in permutations(N, 2):
        for l in G:
            B.relate(f"R4[l={l},i={i},j={j}]", bracket(a(l, i), b(l, j)) - s(i, j))
            B.relate(f"R4'[k={l},i={i},j={j}]", bracket(a(l, j), b(l, i)) - s(i, j))
    for i in N:
        total = LieElement.zero(B.alphabet, 2)
        for l in G:
            total = total + bracket(a(l, i), b(l, i))
        for j in N:
            if j != i:
                total = total + s(i, j)
        B.relate(f"R5[i={i}]", total)
    for i, j, k in permutations(N, 3):
        sjk = s(j, k)
        for l in G:
            B.relate(f"R6[l={l},i={i},j={j},k={k}]", bracket(a(l, i), sjk))
            B.relate(f"R7[l={l},i={i},j={j},k={k}]", bracket(b(l, i), sjk))
    return B.build(FamilyParams("bezrukavnikov", genus=g, strands=n))


def surface_group(g: int, k: int) -> GradedPresentation:
    """Weight-graded punctured surface group: ``a[m], c[m]`` weight 1, ``u[i]`` weight 2."""
    if g < 1:
        raise ValueError(f"surface_group needs genus >= 1, got {g}")
    if k < 0:
        raise ValueError(f"surface_group needs punctures >= 0, got {k}")
    symbols = [f"{x}[{m}]" for m in range(1, g + 1) for x in "ac"]
    symbols += [f"u[{i}]" for i in range(1, k + 1)]
    B = _Builder(symbols, [1] * (2 * g) + [2] * k)
    rel = LieElement.zero(B.alphabet, 2)
    for i in range(1, k + 1):
        rel = rel + B(f"u[{i}]")
    for m in range(1, g + 1):
        rel = rel + bracket(B(f"a[{m}]"), B(f"c[{m}]"))
    B.relate("surface", rel)
    return B.build(FamilyParams("surface_group", genus=g, punctures=k))


def parse_generators(text: str) -> Tuple[List[str], List[int]]:
    """``"x,y,u:2"`` -> (["x", "y", "u"], [1, 1, 2])."""
    names, weights = [], []
    for item in filter(None, (t.strip() for t in text.split(","))):
        name, _, w = item.partition(":")
        names.append(name)
        weights.append(int(w) if w else 1)
    return names, weights


def build(
    family: str,
    genus: int = 0,
    strands: int = 0,
    punctures: int = 0,
    generators: str = "x,y",
) -> GradedPresentation:
    """Dispatch on a family name; parameters not used by the family are ignored."""
    if family == "free":
        return free_lie(*parse_generators(generators))
    if family == "drinfeld_kohno":
        return drinfeld_kohno(strands)
    if family == "ihara_sphere":
        return ihara_sphere(strands)
    if family == "kv_sphere":
        return kv_sphere(strands)
    if family == "bezrukavnikov":
        return bezrukavnikov(genus, strands)
    if family == "surface_group":
        return surface_group(genus, punctures)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
