import json
import random

import pytest

from grlie.analysis import (
    HilbertTable,
    NonIntegralRank,
    compare_presentations,
    exactness_check,
    hilbert_table,
    is_central,
    witt_ranks,
)
from grlie.families import (
    bezrukavnikov,
    drinfeld_kohno,
    free_lie,
    ihara_sphere,
    kv_sphere,
    surface_group,
)
from grlie.lyndon import LieElement, WeightedAlphabet, bracket, lyndon_words
from grlie.presentation import CacheDepthError, IdealCache


def rows(table):
    return [tuple(r) for r in table.rows]


def alphabet(n1, n2=0):
    names = [f"x{i}" for i in range(n1)] + [f"u{i}" for i in range(n2)]
    return WeightedAlphabet(tuple(names), (1,) * n1 + (2,) * n2)


# -- hilbert_table ----------------------------------------------------------


def test_hilbert_table_examples():
    assert rows(hilbert_table(bezrukavnikov(1, 1), 4)) == [(2, []), (0, []), (0, []), (0, [])]
    t = hilbert_table(free_lie(["x", "y"]), 6)
    assert t.free_ranks == [2, 1, 2, 3, 6, 9] and all(not r.torsion for r in t.rows)
    assert rows(hilbert_table(kv_sphere(3), 2)) == [(0, [2]), (0, [])]
    with pytest.raises(ValueError):
        hilbert_table(free_lie(["x"]), 0)


def test_hilbert_table_json_round_trip():
    t = hilbert_table(kv_sphere(4), 3)
    data = json.loads(json.dumps(t.to_json()))
    assert HilbertTable.from_json(data) == t
    assert list(data) == ["family", "params", "alphabet_order", "degrees"]
    assert list(data["params"]) == ["genus", "strands", "punctures"]


def test_hilbert_table_from_json_requires_contiguous_rows():
    data = hilbert_table(free_lie(["x", "y"]), 2).to_json()
    data["degrees"] = data["degrees"][1:]
    with pytest.raises(ValueError):
        HilbertTable.from_json(data)


# -- witt_ranks -------------------------------------------------------------


def test_witt_examples():
    assert witt_ranks(alphabet(2), 6) == [2, 1, 2, 3, 6, 9]
    assert witt_ranks(alphabet(1), 3) == [1, 0, 0]
    # frozen from the Lyndon-word count oracle
    assert [len(lyndon_words(alphabet(2, 1), d)) for d in (1, 2, 3)] == [2, 2, 4]
    assert witt_ranks(alphabet(2, 1), 3) == [2, 2, 4]


@pytest.mark.parametrize(
    "alph",
    [alphabet(1), alphabet(2), alphabet(3), alphabet(0, 1), alphabet(1, 1),
     alphabet(2, 1), alphabet(1, 2), alphabet(0, 3)],
    ids=lambda a: f"{a.weights}",
)
def test_witt_matches_lyndon_counts(alph):
    assert witt_ranks(alph, 6) == [len(lyndon_words(alph, d)) for d in range(1, 7)]


def test_non_integral_rank_is_an_arithmetic_error():
    assert issubclass(NonIntegralRank, ArithmeticError)


# -- is_central -------------------------------------------------------------


def kv_sum(p):
    return sum(
        (LieElement.generator(p.alphabet, s) for s in p.alphabet.symbols),
        LieElement.zero(p.alphabet, 1),
    )


def test_is_central_examples():
    kv4 = kv_sphere(4)
    assert is_central(kv_sum(kv4), kv4, 4)
    f = free_lie(["x", "y"])
    assert not is_central(LieElement.generator(f.alphabet, "x"), f, 2)
    b = bezrukavnikov(1, 1)
    assert is_central(LieElement.generator(b.alphabet, "a[1,1]"), b, 2)


def test_kv_sum_not_central_without_braid_relations():
    # the literal two-type relation list leaves [sum, A12] outside the ideal
    p = kv_sphere(4, braid_relations=False)
    assert not is_central(kv_sum(p), p, 2)


def test_is_central_needs_depth():
    kv4 = kv_sphere(4)
    with pytest.raises(CacheDepthError):
        is_central(kv_sum(kv4), kv4, 1)


@pytest.mark.parametrize(
    "p, central",
    [(kv_sphere(4), True), (ihara_sphere(4), False), (bezrukavnikov(1, 2), False)],
    ids=["kv4", "ihara4", "bez12"],
)
def test_centrality_stable_under_ideal_perturbation(p, central):
    rng = random.Random(2024)
    cache = IdealCache(p).fill(3)
    e = kv_sum(p) if central else p.generators()[0]
    assert is_central(e, p, 3, cache) is central
    ideal = cache.basis_elements(1)
    for _ in range(10):
        pert = e
        for v in ideal:
            pert = pert + v * rng.randint(-3, 3)
        assert is_central(pert, p, 3, cache) is central


def test_centrality_stable_under_relation_perturbation():
    rng = random.Random(7)
    p = bezrukavnikov(1, 2)
    cache = IdealCache(p).fill(3)
    a, b = p.generators()[:2]
    base = bracket(a, b)
    verdict = is_central(base, p, 3, cache)
    for _ in range(10):
        pert = base
        for r in p.relations:
            pert = pert + r * rng.randint(-2, 2)
        assert is_central(pert, p, 3, cache) is verdict


# -- exactness --------------------------------------------------------------


def test_exactness_12():
    rep = exactness_check(1, 2, 4)
    assert rep.defects == [0, 0, 0, 0]
    # frozen after the first verified run; base (2,0,0,0) plus fiber (2,1,2,3)
    assert [r.total for r in rep.rows] == [4, 1, 2, 3]
    assert [r.base for r in rep.rows] == [2, 0, 0, 0]
    assert [r.fiber for r in rep.rows] == [2, 1, 2, 3]


@pytest.mark.parametrize("g, n", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_exactness_degree_one(g, n):
    rep = exactness_check(g, n, 1)
    (row,) = rep.rows
    assert (row.total, row.base, row.fiber) == (2 * g * n, 2 * g * (n - 1), 2 * g)


def test_exactness_22():
    rep = exactness_check(2, 2, 3)
    assert rep.exact()
    assert rep.to_json()["degrees"][0]["defect"] == 0


def test_exactness_rejects_one_strand():
    with pytest.raises(ValueError):
        exactness_check(1, 1, 2)


# -- surface-group elimination and Kohno decomposition ----------------------


@pytest.mark.parametrize("g", [1, 2])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_surface_group_elimination(g, k):
    D = 5 if g == 1 else 4
    t = hilbert_table(surface_group(g, k), D)
    assert t.free_ranks == witt_ranks(alphabet(2 * g, k - 1), D)
    assert all(not r.torsion for r in t.rows)


@pytest.mark.parametrize("n, D", [(2, 5), (3, 5), (4, 5)])
def test_kohno_decomposition(n, D):
    expected = [sum(witt_ranks(alphabet(j), D)[d] for j in range(1, n)) for d in range(D)]
    assert hilbert_table(drinfeld_kohno(n), D).free_ranks == expected


@pytest.mark.parametrize("g, n", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)])
def test_degree_one_law(g, n):
    first = hilbert_table(bezrukavnikov(g, n), 1).rows[0]
    assert first.free_rank == 2 * g * n and first.torsion == ()


# -- compare ----------------------------------------------------------------


def test_compare_examples():
    c = compare_presentations(ihara_sphere(3), kv_sphere(3), 1)
    (row,) = c.rows
    assert tuple(row.left) == tuple(row.right) == (0, [2])
    assert c.ranks_equal() and c.torsion_equal()

    c = compare_presentations(ihara_sphere(4), kv_sphere(4), 1)
    assert c.rows[0].left.free_rank == c.rows[0].right.free_rank == 2

    p = bezrukavnikov(1, 2)
    c = compare_presentations(p, p, 3)
    assert c.ranks_equal() and c.torsion_equal()


def test_compare_reports_instead_of_raising():
    c = compare_presentations(kv_sphere(4), kv_sphere(4, braid_relations=False), 2)
    assert c.ranks_equal()
    assert not c.torsion_equal()
    d2 = c.to_json()["degrees"][1]
    assert d2["torsion"] == [[], [2, 2]] and d2["torsion_equal"] is False
