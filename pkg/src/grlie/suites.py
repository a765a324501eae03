"""Self-checks run by ``grlie verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from .analysis import exactness_check, hilbert_table, witt_ranks
from .families import free_lie
from .intlinalg import snf_invariants
from .lyndon import (
    LieElement,
    WeightedAlphabet,
    bracket,
    lyndon_words,
    rho_expand,
    to_lyndon_coords,
)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)


def random_element(
    rng: random.Random, alphabet: WeightedAlphabet, degree: int, bound: int = 3
) -> LieElement:
    words = lyndon_words(alphabet, degree)
    k = rng.randint(1, min(4, len(words))) if words else 0
    coeffs = {w: rng.randint(-bound, bound) for w in rng.sample(words, k)}
    return LieElement(alphabet, degree, coeffs)


def witt_suite(alphabet: WeightedAlphabet, max_degree: int, **_) -> SuiteResult:
    res = SuiteResult("witt")
    oracle = witt_ranks(alphabet, max_degree)
    table = hilbert_table(free_lie(alphabet.symbols, alphabet.weights), max_degree)
    for d in range(1, max_degree + 1):
        n = len(lyndon_words(alphabet, d))
        res.check(n == oracle[d - 1], f"d={d}: {n} Lyndon words, Witt rank {oracle[d - 1]}")
        row = table.rows[d - 1]
        res.check(
            row.free_rank == n and not row.torsion,
            f"d={d}: free algebra piece {tuple(row)} but {n} Lyndon words",
        )
    return res


def roundtrip_suite(alphabet: WeightedAlphabet, max_degree: int, **_) -> SuiteResult:
    res = SuiteResult("roundtrip")
    for d in range(1, max_degree + 1):
        for w in lyndon_words(alphabet, d):
            p = rho_expand(w)
            back = to_lyndon_coords(p, alphabet)
            res.check(dict(back.coeffs) == {w: 1}, f"{w}: round trip gave {back}")
            res.check(
                p.coeffs.get(w) == 1 and min(p.coeffs) == w,
                f"{w}: leading term of its bracketing is not w with coefficient 1",
            )
    return res


def jacobi_suite(
    alphabet: WeightedAlphabet, max_degree: int, seed: int = 0, samples: int = 100, **_
) -> SuiteResult:
    res = SuiteResult("jacobi")
    rng = random.Random(seed)
    degrees = [d for d in range(1, max_degree + 1) if lyndon_words(alphabet, d)]
    for _ in range(samples):
        d1, d2 = rng.choice(degrees), rng.choice(degrees)
        e1 = random_element(rng, alphabet, d1)
        e2 = random_element(rng, alphabet, d2)
        res.check(
            bracket(e1, e2) == -bracket(e2, e1), f"antisymmetry fails for {e1}, {e2}"
        )
    triples = [
        (a, b, c) for a in degrees for b in degrees for c in degrees
        if a + b + c <= max_degree
    ]
    for _ in range(samples if triples else 0):
        ds = rng.choice(triples)
        e1, e2, e3 = (random_element(rng, alphabet, d) for d in ds)
        jac = (
            bracket(e1, bracket(e2, e3))
            + bracket(e2, bracket(e3, e1))
            + bracket(e3, bracket(e1, e2))
        )
        res.check(jac.is_zero(), f"Jacobi fails for {e1}, {e2}, {e3}")
    return res


def bareiss_det(rows: List[List[int]]) -> int:
    a = [list(r) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


def snf_suite(seed: int = 0, samples: int = 200, **_) -> SuiteResult:
    res = SuiteResult("snf")
    rng = random.Random(seed)
    done = 0
    while done < samples:
        n = rng.randint(1, 6)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        det = bareiss_det(m)
        if not det:
            continue
        done += 1
        factors = snf_invariants(m)
        prod = 1
        for f in factors:
            prod *= f
        res.check(prod == abs(det), f"{m}: SNF product {prod} but |det| {abs(det)}")
        res.check(
            all(b % a == 0 for a, b in zip(factors, factors[1:])),
            f"{m}: invariant factors {factors} do not form a divisibility chain",
        )
    return res


def exactness_suite(genus: int, strands: int, max_degree: int, **kw) -> SuiteResult:
    res = SuiteResult("exactness")
    report = exactness_check(genus, strands, max_degree, threads=kw.get("threads", 0))
    for row in report.rows:
        res.check(
            row.defect == 0,
            f"d={row.d}: total {row.total} != base {row.base} + fiber {row.fiber}",
        )
    return res


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "witt": witt_suite,
    "jacobi": jacobi_suite,
    "roundtrip": roundtrip_suite,
    "exactness": exactness_suite,
    "snf": snf_suite,
}
