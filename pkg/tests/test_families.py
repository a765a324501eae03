import pytest

from grlie.analysis import hilbert_table
from grlie.families import (
    bezrukavnikov,
    build,
    drinfeld_kohno,
    free_lie,
    ihara_sphere,
    kv_sphere,
    parse_generators,
    surface_group,
)
from grlie.intlinalg import AbelianInvariants
from grlie.presentation import IdealCache, quotient_component, validate


def labels(p, prefix):
    return [lab for lab in p.labels if lab.startswith(prefix)]


def test_free_lie():
    p = free_lie(["x", "y"])
    assert p.relations == () and len(p.alphabet) == 2
    w = free_lie(["a", "c", "u"], [1, 1, 2])
    assert w.alphabet.weights == (1, 1, 2)
    with pytest.raises(ValueError):
        free_lie([])
    with pytest.raises(ValueError):
        free_lie(["x", "x"])


def test_drinfeld_kohno_counts():
    assert len(drinfeld_kohno(2).alphabet) == 1 and drinfeld_kohno(2).relations == ()
    p3 = drinfeld_kohno(3)
    assert len(p3.alphabet) == 3
    assert labels(p3, "disjoint") == [] and len(labels(p3, "4T")) == 2
    p4 = drinfeld_kohno(4)
    assert len(p4.alphabet) == 6
    assert len(labels(p4, "disjoint")) == 3 and len(labels(p4, "4T")) == 8
    with pytest.raises(ValueError):
        drinfeld_kohno(1)


def test_ihara_sphere():
    p2 = ihara_sphere(2)
    assert p2.alphabet.symbols == ("B[1,2]",)
    assert [tuple(r) for r in hilbert_table(p2, 3).rows] == [(0, [])] * 3
    assert quotient_component(ihara_sphere(3), 1) == AbelianInvariants(0, (2,))
    p4 = ihara_sphere(4)
    assert len(p4.alphabet) == 6
    assert len(labels(p4, "star")) == 4 and len(labels(p4, "disjoint")) == 3
    with pytest.raises(ValueError):
        ihara_sphere(1)


def test_kv_sphere():
    p3 = kv_sphere(3)
    assert p3.alphabet.symbols == ("A[1,2]",)
    assert quotient_component(p3, 1) == AbelianInvariants(0, (2,))
    assert quotient_component(kv_sphere(4), 1) == AbelianInvariants(2, (2,))
    with pytest.raises(ValueError):
        kv_sphere(2)


def test_kv_sphere_relation_variants():
    literal = kv_sphere(5, braid_relations=False)
    assert len(literal.alphabet) == 6
    assert len(labels(literal, "disjoint")) == 3 and labels(literal, "torsion") == ["torsion"]
    assert labels(literal, "4T") == []
    full = kv_sphere(5)
    assert len(labels(full, "disjoint")) == 3 and len(labels(full, "4T")) == 8
    # the extra relations only start in degree 2
    assert quotient_component(literal, 1) == quotient_component(full, 1) == AbelianInvariants(5, (2,))


def test_bezrukavnikov_small_cases():
    p = bezrukavnikov(1, 1)
    assert len(p.alphabet) == 2 and p.labels == ("R5[i=1]",)
    p12 = bezrukavnikov(1, 2)
    assert len(p12.alphabet) == 4
    assert quotient_component(p12, 1) == AbelianInvariants(4)
    assert all(r.degree == 2 for r in p12.relations)
    p21 = bezrukavnikov(2, 1)
    assert p21.labels == ("R5[i=1]",)
    g = {s: i for i, s in enumerate(p21.alphabet.symbols)}
    (rel,) = p21.relations
    assert rel.coeffs == {
        (g["a[1,1]"], g["b[1,1]"]): 1,
        (g["a[2,1]"], g["b[2,1]"]): 1,
    }


def test_bezrukavnikov_alphabet_order():
    assert bezrukavnikov(2, 2).alphabet.symbols == (
        "a[1,1]", "b[1,1]", "a[2,1]", "b[2,1]", "a[1,2]", "b[1,2]", "a[2,2]", "b[2,2]",
    )


def test_bezrukavnikov_genus_zero_points_to_ihara():
    with pytest.raises(ValueError, match="ihara_sphere"):
        bezrukavnikov(0, 3)


def test_surface_group():
    p = surface_group(1, 0)
    assert [tuple(r) for r in hilbert_table(p, 3).rows] == [(2, []), (0, []), (0, [])]
    p11 = surface_group(1, 1)
    assert [tuple(r) for r in hilbert_table(p11, 5).rows] == [
        (2, []), (1, []), (2, []), (3, []), (6, []),
    ]
    p12 = surface_group(1, 2)
    assert p12.alphabet.symbols == ("a[1]", "c[1]", "u[1]", "u[2]")
    cache = IdealCache(p12).fill(2)
    assert cache[2].ambient_rank == 3 and cache[2].rank == 1
    assert quotient_component(p12, 2, cache) == AbelianInvariants(2)
    with pytest.raises(ValueError):
        surface_group(0, 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_generator_counts_braid_families(n):
    assert len(drinfeld_kohno(n).alphabet) == n * (n - 1) // 2
    assert len(ihara_sphere(n).alphabet) == n * (n - 1) // 2
    if n >= 3:
        assert len(kv_sphere(n).alphabet) == (n - 1) * (n - 2) // 2


@pytest.mark.parametrize("g", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 7))
def test_generator_counts_surface_families(g, n):
    assert len(bezrukavnikov(g, n).alphabet) == 2 * g * n
    assert len(surface_group(g, n).alphabet) == 2 * g + n


@pytest.mark.parametrize(
    "p",
    [drinfeld_kohno(5), ihara_sphere(5), kv_sphere(5), kv_sphere(5, False),
     bezrukavnikov(2, 3), bezrukavnikov(3, 2), surface_group(3, 3)],
    ids=lambda p: p.name,
)
def test_constructors_validate(p):
    validate(p)


@pytest.mark.parametrize("g, n", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_representative_choice_does_not_matter(g, n):
    tables = [
        hilbert_table(bezrukavnikov(g, n, representative=r), 4).rows for r in range(1, g + 1)
    ]
    assert all(t == tables[0] for t in tables)


def test_build_dispatch():
    assert build("bezrukavnikov", genus=1, strands=2).params.strands == 2
    assert build("free", generators="x,u:2").alphabet.weights == (1, 2)
    assert parse_generators("x, y ,u:2") == (["x", "y", "u"], [1, 1, 2])
    with pytest.raises(ValueError):
        build("nonsense")
