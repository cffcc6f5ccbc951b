from .params import AlgebraParams
from .parser import parse_scalar, referenced_symbols, word_parse_free
from .pbw import PBWMonomial, PBWPoly, pbw_add
from .render import render_affine, render_pbw, render_unipoly
from .rewrite import (
    ReductionCache,
    Reducer,
    embed,
    normal_form,
    overlap_obstruction,
    pbw_mul,
    pbw_pow,
    rewrite_pair,
)
from .words import FORBIDDEN, FreeExpr, Word, inversions

__all__ = [
    "AlgebraParams",
    "FORBIDDEN",
    "FreeExpr",
    "PBWMonomial",
    "PBWPoly",
    "ReductionCache",
    "Reducer",
    "Word",
    "embed",
    "inversions",
    "normal_form",
    "overlap_obstruction",
    "parse_scalar",
    "pbw_add",
    "pbw_mul",
    "pbw_pow",
    "referenced_symbols",
    "render_affine",
    "render_pbw",
    "render_unipoly",
    "rewrite_pair",
    "word_parse_free",
]
