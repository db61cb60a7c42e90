"""Braid words for pretzel links, checked against link-invariant oracles."""
from .braid import BraidWord, closure_components, free_reduce, inverse, word_from_seq, writhe
from .diagram import PlanarDiagram, closure_pd, complexity, components, pretzel_pd, seifert
from .invariants import Caps, CapExceededError, bracket_braid, bracket_pd, certify, framing_ratio
from .kernels import BACKEND
from .laurent import LaurentPoly
from .pretzel import CaseTag, CountPrediction, Pretzel, synthesize

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BraidWord", "CapExceededError", "Caps", "CaseTag", "CountPrediction",
    "LaurentPoly", "PlanarDiagram", "Pretzel", "bracket_braid", "bracket_pd", "certify",
    "closure_components", "closure_pd", "complexity", "components", "framing_ratio",
    "free_reduce", "inverse", "pretzel_pd", "seifert", "synthesize", "word_from_seq", "writhe",
]
