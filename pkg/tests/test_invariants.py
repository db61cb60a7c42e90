from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pretzel_braid import _pykernels, kernels
from pretzel_braid.braid import word_from_seq, writhe
from pretzel_braid.diagram import PlanarDiagram, closure_pd, pretzel_pd
from pretzel_braid.invariants import (
    CapExceededError, Caps, bracket_braid, bracket_histogram, bracket_pd, certify,
    framing_ratio,
)
from pretzel_braid.laurent import LOOP, A, LaurentPoly, framing_unit
from pretzel_braid.pretzel import Pretzel, synthesize

from conftest import braid_words, naive_bracket

P = Pretzel.of
L = LaurentPoly


# -- Laurent arithmetic --------------------------------------------------------

def test_laurent_basics():
    p = L({3: -1, -1: 1})
    assert str(p) == "-A^3 + A^-1"
    assert p - p == 0 and (p - p).is_zero()
    assert (A ** -2) * (A ** 2) == 1
    assert (-A) ** -3 == L({-3: -1})
    assert LOOP == -(A ** 2) - A ** -2
    assert p.mirror() == L({-3: -1, 1: 1})
    assert framing_unit(2) == A ** 6
    assert L({1: 0}).is_zero()
    with pytest.raises(ValueError):
        (A + 1) ** -1


@given(st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=4),
       st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=4))
def test_laurent_ring_laws(a, b):
    x, y = L(a), L(b)
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    assert (x * y).mirror() == x.mirror() * y.mirror()


# -- bracket values ------------------------------------------------------------

def test_bracket_small_values():
    # crossingless circle
    assert bracket_pd(closure_pd(word_from_seq((), 1))) == 1
    # single kink: A-smoothing leaves two loops, B one: A*d + A^-1 = -A^3
    one = closure_pd(word_from_seq((1,), 2))
    assert bracket_pd(one) == bracket_braid(word_from_seq((1,), 2)) == L({3: -1})
    assert bracket_braid(word_from_seq((), 3)) == LOOP * LOOP
    w = word_from_seq((1, 1, 1), 2)
    assert bracket_braid(w) == bracket_pd(closure_pd(w)) == naive_bracket(closure_pd(w).crossings)


def test_known_links():
    # tabulated Jones polynomials, with t = A^-4
    trefoil = bracket_braid(word_from_seq((1, 1, 1), 2))
    jones = framing_unit(-writhe(word_from_seq((1, 1, 1), 2))) * trefoil
    assert jones == L({-4: 1, -12: 1, -16: -1})           # right trefoil: t + t^3 - t^4
    assert bracket_braid(word_from_seq((1, 1), 2)) == L({4: -1, -4: -1})   # Hopf link
    eight = L({8: 1, 4: -1, 0: 1, -4: -1, -8: 1})          # figure-eight, amphichiral
    assert framing_ratio(bracket_pd(pretzel_pd(P(1, 2, 1))), eight) == 0
    # a positive pretzel column pattern gives the mirror of sigma_1^3
    assert framing_ratio(bracket_pd(pretzel_pd(P(1, 1, 1))), trefoil.mirror()) is not None


def test_pretzel_trefoil_against_naive():
    pd = pretzel_pd(P(1, 1, 1))
    b = bracket_pd(pd)
    assert len(b.terms) == 3
    assert b == naive_bracket(pd.crossings)


def test_framing_ratio():
    p = L({5: -1, -3: -1, -7: 1})
    assert framing_ratio(p, p) == 0
    assert framing_ratio(L({3: -1}) * p, p) == 1
    assert framing_ratio(A, L({0: 1})) is None
    assert framing_ratio(L({0: 2}), L({0: 1})) is None
    with pytest.raises(ValueError):
        framing_ratio(L(), p)


@given(st.integers(-6, 6), st.dictionaries(st.integers(-8, 8), st.integers(-4, 4), min_size=1, max_size=3))
def test_framing_ratio_antisymmetric(k, terms):
    q = L(terms)
    if q.is_zero():
        return
    p = framing_unit(k) * q
    assert framing_ratio(p, q) == k
    assert framing_ratio(q, p) == -k


def test_split_multiplicativity():
    w = word_from_seq((1, -2, 1, -2), 3)
    grown = word_from_seq(w.letters, 4)          # one extra untouched strand
    assert bracket_braid(grown) == LOOP * bracket_braid(w)
    assert bracket_pd(closure_pd(grown)) == LOOP * bracket_pd(closure_pd(w))


# -- oracle agreement ----------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(braid_words(max_strands=6, max_len=12))
def test_braid_vs_pd(w):
    pd = closure_pd(w)
    b = bracket_braid(w)
    assert b == bracket_pd(pd, method="states") == bracket_pd(pd, method="contract")
    if len(w) <= 8:
        assert b == naive_bracket(pd.crossings, pd.free_loops)


@settings(max_examples=80, deadline=None)
@given(braid_words(max_strands=5, max_len=10))
def test_mirror_braid(w):
    assert bracket_braid(w.mirror()) == bracket_braid(w).mirror()


def test_histogram_backends_agree():
    rng = np.random.default_rng(7)
    for _ in range(30):
        s = int(rng.integers(2, 6))
        letters = [int(g) * int(rng.choice([-1, 1])) for g in rng.integers(1, s, size=int(rng.integers(1, 11)))]
        pd = closure_pd(word_from_seq(letters, s))
        ref = _pykernels.state_histogram(pd.crossings, pd.n_edges)
        assert np.array_equal(ref, kernels.state_histogram(pd.crossings, pd.n_edges))
        assert np.array_equal(ref, bracket_histogram(pd, "contract"))


def test_tl_backends_agree():
    from pretzel_braid.temperley_lieb import tl_basis
    basis = tl_basis(4)
    rng = np.random.default_rng(3)
    V = rng.integers(-50, 50, size=(len(basis), 5)).astype(np.int64)
    for i in range(1, 4):
        for positive in (True, False):
            ref = _pykernels.tl_apply(V, basis.targets[i], basis.loops[i], positive)
            got = kernels.tl_apply(V, basis.targets[i], basis.loops[i], positive)
            big = _pykernels.tl_apply(V.astype(object), basis.targets[i], basis.loops[i], positive)
            assert np.array_equal(ref, got)
            assert np.array_equal(ref, big.astype(np.int64))


def _at_one(poly: LaurentPoly) -> int:
    return sum(poly.terms.values())


@pytest.mark.parametrize("letters, s", [((1, 2, 3) * 40, 4), ((1, -2, 3, 3, -4) * 25, 5), ((2, 1) * 60, 3)])
def test_long_words_exact(letters, s):
    # at A = 1 the bracket is (-1)^writhe (-2)^(components - 1) for every diagram
    from pretzel_braid.braid import closure_components
    w = word_from_seq(letters, s)
    b = bracket_braid(w)
    assert _at_one(b) == (-1) ** writhe(w) * (-2) ** (closure_components(w) - 1)
    assert bracket_braid(w.mirror()) == b.mirror()


def test_unknown_method():
    with pytest.raises(ValueError):
        bracket_histogram(closure_pd(word_from_seq((1,), 2)), "magic")


# -- caps and certification ----------------------------------------------------

def test_caps(monkeypatch):
    monkeypatch.setenv("PRETZEL_BRAID_CAPS", "5,3")
    assert Caps.from_env() == Caps(5, 3)
    with pytest.raises(CapExceededError, match="5"):
        bracket_pd(pretzel_pd(P(3, 3)))
    with pytest.raises(CapExceededError):
        bracket_braid(word_from_seq((), 4))
    assert certify(P(3, 3)).status == "skipped"
    monkeypatch.setenv("PRETZEL_BRAID_CAPS", "garbage")
    with pytest.raises(ValueError):
        Caps.from_env()
    monkeypatch.delenv("PRETZEL_BRAID_CAPS")
    assert Caps.from_env() == Caps(22, 10)


@pytest.mark.parametrize("p, comps", [(P(1, 2, 1), 1), (P(1, 1, 1), 1), (P(2, 2), 2)])
def test_certify_examples(p, comps):
    rep = certify(p)
    assert rep.status == "pass" and rep.passed and rep.counts_match
    assert rep.pd_components == rep.braid_components == comps
    d = rep.to_dict()
    assert set(d) >= {"pretzel", "case", "word", "strands", "crossings", "components", "verified", "framing_k"}
    assert d["verified"] is True


def test_certify_skips_large():
    rep = certify(P(9, 5, 7, 11, 13))
    assert rep.status == "skipped" and rep.framing_k is None
    assert rep.to_dict()["verified"] is None
    assert rep.counts_match


def test_cross_case_333():
    from pretzel_braid.pretzel import synth_odd_n_all_odd
    a = bracket_braid(synthesize(P(3, 3, 3)).word)
    b = bracket_braid(synth_odd_n_all_odd(P(3, 3, 3)))
    assert framing_ratio(a, b) is not None
    assert framing_ratio(bracket_pd(closure_pd(synthesize(P(3, 3, 3)).word)), b) is not None


def test_pd_free_loop_diagram_bracket():
    pd = PlanarDiagram((), free_loops=2, glue=((1, 2),), outer_face=1)
    assert bracket_pd(pd) == LOOP


def test_overflow_switches_to_exact_ints():
    from pretzel_braid.invariants import _apply
    from pretzel_braid.temperley_lieb import tl_basis
    basis = tl_basis(3)
    V = np.full((len(basis), 2), 3 * 2 ** 61, dtype=np.int64)
    out = _apply(V, basis.targets[1], basis.loops[1], True, fanin=2)
    assert out.dtype == object
    exact = _pykernels.tl_apply(V.astype(object), basis.targets[1], basis.loops[1], True)
    assert np.array_equal(out, exact)
    assert max(abs(int(v)) for v in out.ravel()) > np.iinfo(np.int64).max


def test_pure_backend_subprocess():
    import os
    import subprocess
    import sys
    code = ("from pretzel_braid import kernels, certify, Pretzel;"
            "print(kernels.BACKEND, certify(Pretzel.of(3, -2, 5)).status)")
    env = dict(os.environ, PRETZEL_BRAID_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "pass"]
