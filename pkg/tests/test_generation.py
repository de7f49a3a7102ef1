import pytest
from hypothesis import given, strategies as st

from multigroup import catalog
from multigroup.config import Limits
from multigroup.errors import DomainError
from multigroup.generation import (GeneratingSet, is_finitely_generated,
                                   span_closure, span_once)

from oracles import brute_span_closure

SPACES = {
    "gf3": catalog.gf3(),
    "z2z3": catalog.z2_z3(),
    "z2z2": catalog.z2_z2(),
    "trivial": catalog.trivial_space(),
    "s3": catalog.single(catalog.symmetric_3()),
}


def seeds(ms, elements):
    return GeneratingSet.of(ms, elements)


def test_span_once_is_the_literal_product_set(gf3):
    assert span_once(gf3, seeds(gf3, ["1"])) == ("1", "2")
    assert span_once(gf3, seeds(gf3, ["0"])) == ("0",)
    assert span_once(gf3, seeds(gf3, gf3.universe)) == gf3.universe


def test_span_once_need_not_contain_the_seeds(gf3):
    # 2+2=1 and 2*2=1: the seed itself drops out of the one-step span
    assert span_once(gf3, seeds(gf3, ["2"])) == ("1",)


def test_span_closure_examples(gf3, z2z3):
    assert span_closure(gf3, seeds(gf3, ["1"])) == ("0", "1", "2")
    assert span_closure(z2z3, seeds(z2z3, ["a1", "b1"])) == z2z3.universe
    assert span_closure(z2z3, seeds(z2z3, ["a0"])) == ("a0",)


@pytest.mark.parametrize("name", sorted(SPACES))
def test_span_closure_matches_oracle(name):
    ms = SPACES[name]
    for e in ms.universe:
        got = set(span_closure(ms, seeds(ms, [e])))
        assert got == set(brute_span_closure(ms, [e]))


def test_generating_set_construction(gf3):
    with pytest.raises(DomainError):
        GeneratingSet.of(gf3, [])
    with pytest.raises(DomainError):
        GeneratingSet.of(gf3, ["9"])


def test_minimal_witnesses():
    assert is_finitely_generated(SPACES["gf3"]).generators == ("1",)
    w = is_finitely_generated(SPACES["z2z3"])
    assert w.size == 2 and w.minimal
    assert is_finitely_generated(SPACES["trivial"]).generators == ("e0",)


def test_single_elements_cannot_generate_disjoint_union(z2z3):
    for e in z2z3.universe:
        assert set(span_closure(z2z3, seeds(z2z3, [e]))) != set(z2z3.universe)


def test_budget_exhaustion_returns_flagged_universe(z2z3):
    w = is_finitely_generated(z2z3, Limits(max_generator_candidates=2))
    assert w.generators == z2z3.universe
    assert not w.minimal


@given(st.sampled_from(sorted(SPACES)), st.data())
def test_span_closure_is_idempotent(name, data):
    ms = SPACES[name]
    subset = data.draw(st.sets(st.sampled_from(list(ms.universe)), min_size=1))
    once = span_closure(ms, seeds(ms, subset))
    again = span_closure(ms, seeds(ms, once))
    assert once == again


@given(st.sampled_from(sorted(SPACES)), st.data())
def test_span_closure_is_monotone(name, data):
    ms = SPACES[name]
    big = data.draw(st.sets(st.sampled_from(list(ms.universe)), min_size=1))
    small = data.draw(st.sets(st.sampled_from(sorted(big)), min_size=1))
    inner = set(span_closure(ms, seeds(ms, small)))
    outer = set(span_closure(ms, seeds(ms, big)))
    assert inner <= outer


@given(st.sampled_from(sorted(SPACES)), st.data())
def test_span_closure_is_complete_per_carrier(name, data):
    ms = SPACES[name]
    subset = data.draw(st.sets(st.sampled_from(list(ms.universe)), min_size=1))
    closed = set(span_closure(ms, seeds(ms, subset)))
    for g in ms.groups:
        inside = [e for e in closed if e in g]
        for a in inside:
            for b in inside:
                assert g.mul(a, b) in closed
