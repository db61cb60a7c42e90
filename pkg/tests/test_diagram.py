from __future__ import annotations

import pytest
from hypothesis import given, settings

from pretzel_braid.braid import closure_components, word_from_seq
from pretzel_braid.diagram import (
    PlanarDiagram, closure_pd, complexity, components, pretzel_pd, seifert,
)
from pretzel_braid.pretzel import Pretzel, synthesize

from conftest import braid_words, naive_seifert_count, pretzels

P = Pretzel.of


def test_pretzel_pd_structure():
    pd = pretzel_pd(P(1, 1, 1))
    assert pd.n_crossings == 3
    assert pd.euler_characteristics() == [2]
    pd = pretzel_pd(P(2, -3))
    signs = sorted(pd.crossing_sign(x) for x in range(5))
    assert pd.n_crossings == 5
    # 2-component link: orientation choice decides the signs of the first column only
    assert {signs.count(1), signs.count(-1)} in ({2, 3}, {5, 0})
    assert pretzel_pd(P(9, 5, 7, 11, 13)).n_crossings == 45


def test_pretzel_column_sign_depends_on_parity():
    # in a knot the sign of a column follows from the strands' direction in it
    pd = pretzel_pd(P(3, 3, 3))
    assert all(pd.crossing_sign(x) == -1 for x in range(9))


def test_closure_pd():
    pd = closure_pd(word_from_seq((1, 1, 1), 2))
    assert pd.n_crossings == 3
    assert len(seifert(pd)) == 2
    pd = closure_pd(word_from_seq((), 4))
    assert (pd.n_crossings, pd.free_loops, components(pd)) == (0, 4, 4)
    pd = closure_pd(synthesize(P(1, 2, 1)).word)
    assert pd.n_crossings == 4 and len(seifert(pd)) == 3


def test_components_rule_examples():
    assert components(pretzel_pd(P(2, 2))) == 2
    assert components(pretzel_pd(P(1, 1, 1, 1))) == 2
    assert components(pretzel_pd(P(1, 2, 3))) == 1


def test_seifert_examples():
    sd = seifert(closure_pd(word_from_seq((1, 1, 1), 2)))
    assert len(sd) == 2 and sd.nested(0, 1) and sd.senses[0] == sd.senses[1]
    sd = seifert(closure_pd(word_from_seq((), 3)))
    assert len(sd) == 3
    unoriented = PlanarDiagram(pretzel_pd(P(1, 1, 1)).crossings, outer_face=0)
    with pytest.raises(ValueError):
        seifert(unoriented)


def test_seifert_circle_count_oracle():
    pd = pretzel_pd(P(3, 3, 3))
    assert len(seifert(pd)) == naive_seifert_count(pd.crossings, pd.orientation) == 8


def test_complexity_values():
    # worked by hand: four circles of each sense side by side, none nested,
    # so every equal-sense pair is incompatible: 2 * C(4, 2)
    assert complexity(pretzel_pd(P(3, 3, 3))) == 12
    assert complexity(pretzel_pd(P(1, 1, 1))) == 0
    assert complexity(closure_pd(word_from_seq((), 1))) == 0


@pytest.mark.parametrize("pd, value", [
    (pretzel_pd(P(3, 3, 3)), 12),
    (pretzel_pd(P(2, -3, 5)), 0),
    (closure_pd(word_from_seq((1, -2, 1, -2), 3)), 0),
])
def test_complexity_independent_of_outer_face(pd, value):
    for f in range(pd.n_faces):
        moved = PlanarDiagram(pd.crossings, pd.free_loops, pd.glue, f, pd.orientation)
        assert complexity(moved) == value


def test_orientation_inconsistent_rejected():
    pd = pretzel_pd(P(1, 1))
    bad = list(pd.orientation)
    bad[0] = not bad[0]
    with pytest.raises(ValueError):
        PlanarDiagram(pd.crossings, pd.free_loops, pd.glue, pd.outer_face, tuple(bad))


def test_json_round_trip():
    for pd in (pretzel_pd(P(2, -3, 5)), closure_pd(word_from_seq((1, -3), 5))):
        back = PlanarDiagram.from_json(pd.to_json())
        assert back == pd and back.orientation == pd.orientation


@settings(deadline=None)
@given(braid_words())
def test_closure_properties(w):
    pd = closure_pd(w)
    sd = seifert(pd)
    assert len(sd) == w.strands
    assert all(sd.nested(i, j) for i in range(len(sd)) for j in range(i))
    assert len(set(sd.senses)) == 1
    assert complexity(pd) == 0
    assert components(pd) == closure_components(w)
    assert all(chi == 2 for chi in pd.euler_characteristics())
    assert [pd.crossing_sign(x) for x in range(len(w))] == [1 if m > 0 else -1 for m in w.letters]
    assert len(sd) - pd.free_loops == naive_seifert_count(pd.crossings, pd.orientation)


@settings(deadline=None)
@given(pretzels(max_n=5))
def test_pretzel_properties(p):
    pd = pretzel_pd(p)
    assert pd.n_crossings == sum(abs(a) for a in p.entries)
    assert pd.euler_characteristics() == [2]
    assert components(pd) == closure_components(synthesize(p).word)
    assert len(seifert(pd)) == naive_seifert_count(pd.crossings, pd.orientation)
