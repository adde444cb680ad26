import itertools

import networkx as nx
import pytest

from helpers import oracle_distributive, oracle_glb, oracle_lub
from lattice_hahn import (
    ComplementMap,
    FiniteLattice,
    SizeTooLargeForExhaustive,
    check_axioms,
    enumerate_lattices,
    hahn_decompose,
    search_models,
    stress_theorem,
)
from lattice_hahn.modelio import model_verdicts, parse_model
from lattice_hahn.search import (
    MODEL_FOUND,
    NO_MODEL_EXISTS,
    VALID_MEASURE_FOUND,
    SearchSpec,
    check_decomposition,
    enumerate_complements,
    lattice_code,
)

# Per-size counts of lattices and of distributive lattices (OEIS A006966, A006982).
LATTICES_BY_SIZE = [1, 1, 1, 2, 5, 15, 53, 222]
DISTRIBUTIVE_BY_SIZE = [1, 1, 1, 2, 3, 5, 8, 15]


def brute_force_classes(n, distributive):
    """Iso classes of bounded lattices of size n: all order matrices, then quotient by relabelling."""
    if n == 1:
        return 1
    k = n - 2
    inner_pairs = [(i, j) for i in range(k) for j in range(k) if i != j]
    keys = set()
    for bits in itertools.product([False, True], repeat=len(inner_pairs)):
        rel = {p for p, b in zip(inner_pairs, bits) if b}
        if any((j, i) in rel for i, j in rel):
            continue
        if any((i, j) in rel and (j, l) in rel and (i, l) not in rel
               for i, j, l in itertools.permutations(range(k), 3)):
            continue
        leq = [[False] * n for _ in range(n)]
        for i in range(n):
            leq[0][i] = leq[i][n - 1] = leq[i][i] = True
        for i, j in rel:
            leq[i + 1][j + 1] = True
        if any(len(oracle_glb(leq, x, y)) != 1 or len(oracle_lub(leq, x, y)) != 1
               for x in range(n) for y in range(n)):
            continue
        if distributive and not oracle_distributive(leq):
            continue
        keys.add(min(
            tuple((pi[i], pi[j]) in {(a, b) for a, b in rel} for i, j in inner_pairs)
            for pi in (dict(zip(range(k), perm)) for perm in itertools.permutations(range(k)))
        ))
    return len(keys)


def test_trivial_counts():
    assert len(list(enumerate_lattices(1))) == 1
    only_two = list(enumerate_lattices(2, min_size=2))
    assert len(only_two) == 1 and only_two[0].size == 2


@pytest.mark.parametrize("distributive", [False, True])
def test_counts_match_brute_force(distributive):
    lattices = list(enumerate_lattices(5, distributive))
    expected = sum(brute_force_classes(n, distributive) for n in range(1, 6))
    assert len(lattices) == expected
    assert expected == sum((DISTRIBUTIVE_BY_SIZE if distributive else LATTICES_BY_SIZE)[:5])


def test_counts_up_to_eight():
    sizes = [l.size for l in enumerate_lattices(8)]
    assert [sizes.count(n) for n in range(1, 9)] == LATTICES_BY_SIZE
    sizes = [l.size for l in enumerate_lattices(8, True)]
    assert [sizes.count(n) for n in range(1, 9)] == DISTRIBUTIVE_BY_SIZE


def test_no_isomorphic_pairs():
    lattices = list(enumerate_lattices(6))
    graphs = [nx.DiGraph(lat.covers()) for lat in lattices]
    for g, lat in zip(graphs, lattices):
        g.add_nodes_from(lat.elements())
    for (i, a), (j, b) in itertools.combinations(enumerate(lattices), 2):
        if a.size == b.size:
            assert not nx.is_isomorphic(graphs[i], graphs[j])
            assert lattice_code(a) != lattice_code(b)


def test_canonical_code_is_relabelling_invariant():
    for lat in enumerate_lattices(6, min_size=4):
        inner = list(range(1, lat.size - 1))
        for perm in itertools.islice(itertools.permutations(inner), 6):
            relabel = {0: 0, lat.size - 1: lat.size - 1, **dict(zip(inner, perm))}
            leq = [[False] * lat.size for _ in lat.elements()]
            for x, y in itertools.product(lat.elements(), repeat=2):
                leq[relabel[x]][relabel[y]] = lat.le(x, y)
            other = FiniteLattice.from_leq(lat.names, leq)
            assert lattice_code(other) == lattice_code(lat)


def test_too_large():
    with pytest.raises(SizeTooLargeForExhaustive):
        list(enumerate_lattices(9))


def test_boolean_profile_finds_the_four_element_algebra():
    findings = search_models(SearchSpec(4, {"L5", "L6", "L7", "L8"}))
    assert {f.kind for f in findings} == {MODEL_FOUND}
    four = [f for f in findings if len(f.model["names"]) == 4]
    assert len(four) == 1
    m = parse_model(four[0].model)
    assert m.complement.table == (3, 2, 1, 0)
    assert m.lattice.covers() == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_profile_without_non_contradiction_has_no_model():
    findings = search_models(SearchSpec(6, {"L5", "L7", "L8"}, {"L6"}))
    assert [f.kind for f in findings] == [NO_MODEL_EXISTS]
    bounds = findings[0].verdicts["bounds"]
    assert bounds["max_lattice_size"] == 6 and bounds["forbidden"] == ["L6"]


def test_pool_search_findings_revalidate():
    findings = search_models(SearchSpec(4, {"L5", "L7", "L8"}, measure_value_pool=(-1, 0, 1, 2)))
    measures = [f for f in findings if f.kind == VALID_MEASURE_FOUND]
    assert measures
    for f in findings:
        model = parse_model(f.model)
        assert model_verdicts(model) == f.verdicts
    for f in measures:
        assert all(f.verdicts["measure"].values())
        assert check_decomposition(parse_model(f.model).measure) == []


def test_stress_zero_pool():
    assert stress_theorem(SearchSpec(6, {"L5", "L7", "L8"}, measure_value_pool=(0,))) == []


def test_stress_nonnegative_pool_on_power_sets():
    spec = SearchSpec(8, {"L5", "L6", "L7", "L8"}, measure_value_pool=(0, 1, 2), require_distributive=True)
    assert stress_theorem(spec) == []
    found = [f for f in search_models(spec) if f.kind == VALID_MEASURE_FOUND]
    assert {len(f.model["names"]) for f in found} == {1, 2, 4, 8}
    for f in found:
        m = parse_model(f.model).measure
        assert hahn_decompose(m).lambda_value == m(m.lattice.top)


def test_search_is_deterministic():
    spec = SearchSpec(5, {"L8"}, measure_value_pool=(-1, 0, 1))
    assert search_models(spec) == search_models(spec)


def test_limit_truncates_without_absence_claim():
    findings = search_models(SearchSpec(5, limit=3))
    assert len(findings) == 3
    assert NO_MODEL_EXISTS not in {f.kind for f in findings}


def test_sampled_phase_is_seeded():
    spec = SearchSpec(9, {"L5", "L6", "L7", "L8"}, require_distributive=True, samples=300, seed=5)
    a = search_models(spec)
    assert a == search_models(spec)
    assert all(f.kind == MODEL_FOUND for f in a)


def test_pruned_complement_search_matches_brute_force():
    for lat in enumerate_lattices(5):
        for req, forb in (({"L8"}, set()), ({"L5", "L7"}, {"L6"}), ({"L7", "L8"}, set())):
            got = [c.table for c in enumerate_complements(lat, req, forb)]
            want = []
            for t in itertools.product(lat.elements(), repeat=lat.size):
                r = check_axioms(ComplementMap(lat, t))
                if all(r.holds(a) for a in req) and not any(r.holds(a) for a in forb):
                    want.append(t)
            assert got == want


def test_spec_rejects_overlap():
    with pytest.raises(ValueError):
        SearchSpec(4, {"L6"}, {"L6"})
    with pytest.raises(ValueError):
        SearchSpec(4, {"L9"})
