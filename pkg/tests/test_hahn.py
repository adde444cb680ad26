import itertools
from fractions import Fraction

import pytest

from helpers import atom_measure, powerset_algebra
from lattice_hahn import (
    InvalidMeasure,
    NotAMember,
    PreconditionViolated,
    SignedMeasure,
    build_powerset,
    classify_polarity,
    extract_positive,
    generate,
    hahn_decompose,
    oracle_decompose,
    union_positive,
)
from lattice_hahn.complement import set_complement
from lattice_hahn.hahn import HahnDecomposition, threshold_rank
from lattice_hahn.search import SearchSpec, search_models, VALID_MEASURE_FOUND
from lattice_hahn.modelio import parse_model


def zero_measure(labels="pq"):
    alg = powerset_algebra(list(labels))
    return SignedMeasure(alg, {x: 0 for x in alg.members})


def test_bottom_is_both():
    for m in (zero_measure(), atom_measure([2, 3]), atom_measure([-2, -3])):
        cert = classify_polarity(m, m.lattice.bottom)
        assert cert.positive and cert.negative
        assert cert.checked == (m.lattice.bottom,)


def test_top_polarity():
    m = atom_measure([2, 3])
    cert = classify_polarity(m, m.lattice.top)
    assert cert.polarity == "positive"
    assert cert.checked == (0, 1, 2, 3)
    assert cert.negative_witness == 1

    assert classify_polarity(zero_measure(), 3).polarity == "both"


def test_not_a_member():
    lat = build_powerset(["p", "q"])
    alg = generate(lat, set_complement(lat), [])
    m = SignedMeasure(alg, {0: 0, 3: 0})
    with pytest.raises(NotAMember):
        classify_polarity(m, 1)


def test_union_positive_examples():
    m = atom_measure([2, 3])
    assert union_positive(m, [0]).element == 0
    cert = union_positive(m, [1, 2])
    assert cert.element == 3 and cert.positive and not cert.violations
    empty = union_positive(m, [])
    assert empty.element == m.lattice.bottom and empty.positive


def test_union_positive_precondition():
    m = atom_measure([-1, 2])
    with pytest.raises(PreconditionViolated):
        union_positive(m, [1])


def test_union_positive_reports_violation():
    # not a valid signed measure, but it exercises the reporting path:
    # {p} and {q} are positive, their join is not
    alg = powerset_algebra(["p", "q"])
    m = SignedMeasure(alg, {0: 0, 1: 1, 2: 1, 3: -1})
    cert = union_positive(m, [1, 2])
    assert not cert.positive
    assert cert.violations and cert.violations[0].data["witness"] == 3


def test_threshold_rank():
    assert threshold_rank(Fraction(-2)) == 1
    assert threshold_rank(Fraction(-1)) == 2  # -1 < -1/2, not < -1/1
    assert threshold_rank(Fraction(-1, 3)) == 4
    for v in (Fraction(-5, 7), Fraction(-1, 10), Fraction(-3)):
        n = threshold_rank(v)
        assert v < Fraction(-1, n)
        assert n == 1 or not v < Fraction(-1, n - 1)


def test_extract_already_positive():
    m = atom_measure([2, 3])
    trace = extract_positive(m, 3)
    assert trace.result == 3 and trace.steps == ()


def test_extract_precondition():
    with pytest.raises(PreconditionViolated):
        extract_positive(zero_measure(), 3)
    with pytest.raises(PreconditionViolated):
        extract_positive(atom_measure([-1, -1]), 3)


def test_extract_removes_negative_parts():
    # a modular valuation whose monotonicity clauses fail: extraction does not require them
    m = atom_measure([3, -1, 2, -2], labels="pqrs")
    trace = extract_positive(m, m.lattice.top)
    assert [s.removed for s in trace.steps] == [0b1010]  # {q,s}, value -3
    assert trace.steps[0].threshold_rank == 1
    assert trace.result == 0b0101
    assert trace.certificate.positive and m(trace.result) == 5
    values = [m(r) for r in trace.remainders]
    assert values == sorted(values)


def test_hahn_examples():
    hd = hahn_decompose(zero_measure())
    assert (hd.a, hd.b, hd.lambda_value, hd.overlap_value, hd.cover_ok) == (0, 3, 0, 0, True)
    assert hd.ok

    hd = hahn_decompose(atom_measure([2, 3]))
    assert (hd.a, hd.b, hd.lambda_value) == (3, 0, 5)
    assert hd.ok

    hd = hahn_decompose(atom_measure([-2, -3]))
    assert (hd.a, hd.b, hd.lambda_value) == (0, 3, 0)
    assert hd.b_certificate.negative
    assert hd.ok


def test_oracle_examples():
    od = oracle_decompose(zero_measure())
    assert isinstance(od, HahnDecomposition) and (od.a, od.b) == (0, 3)
    od = oracle_decompose(atom_measure([2, 3]))
    assert (od.a, od.b) == (3, 0)
    with pytest.raises(InvalidMeasure):
        oracle_decompose(atom_measure([1, -2]))
    with pytest.raises(InvalidMeasure) as info:
        hahn_decompose(atom_measure([1, -2]))
    assert info.value.report.clauses["2b"].witness == (2, 3)


def _corpus():
    out = []
    for k in range(4):
        for ws in itertools.product(range(0, 3), repeat=k):
            out.append(atom_measure(list(ws), labels="pqr"[:k]))
            out.append(atom_measure([-w for w in ws], labels="pqr"[:k]))
    spec = SearchSpec(6, {"L5", "L7", "L8"}, measure_value_pool=(-2, -1, 0, 1, 2))
    out += [parse_model(f.model).measure for f in search_models(spec) if f.kind == VALID_MEASURE_FOUND]
    return out


CORPUS = _corpus()


def test_corpus_decompositions():
    for m in CORPUS:
        hd = hahn_decompose(m)
        assert hd.ok, hd.violations
        od = oracle_decompose(m)
        assert isinstance(od, HahnDecomposition)
        assert hd.lambda_value == od.lambda_value == m(hd.a)
        assert hd.a == od.a or m(hd.a) == m(od.a)


def test_corpus_lemmas():
    for m in CORPUS:
        certs = {x: classify_polarity(m, x) for x in m.algebra.members}
        positives = [x for x, c in certs.items() if c.positive]
        for x in positives:
            for e in m.algebra.below(x):
                assert certs[e].positive
        for r in (2, 3):
            for combo in itertools.combinations(positives, r):
                cert = union_positive(m, combo)
                assert cert.positive and not cert.violations
        for e in m.algebra.members:
            if m(e) > 0:
                trace = extract_positive(m, e)
                assert not trace.violations
                assert len(trace.steps) <= len(m.algebra)
                vals = [m(r) for r in trace.remainders]
                assert vals == sorted(vals)
