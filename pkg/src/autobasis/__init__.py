"""Decide whether a k-automatic set is an additive basis of the naturals."""

from .automaton import Dfa, Nfa, determinize, minimize
from .basis import BasisReport, Reason, decide_basis, exceptions_relative
from .cantor import cantor_params
from .corpus import corpus
from .errors import (
    AutobasisError,
    InputError,
    ParseError,
    PreconditionError,
    ResourceError,
    StateLimitError,
)
from .gcd import gcd_of_set
from .growth import GrowthReport, classify
from .numeral import decode, encode
from .sumset import SumSpec, count_representations, sum_automaton
from .textformat import parse_automaton, render_automaton

__version__ = "0.1.0"

__all__ = [
    "AutobasisError",
    "BasisReport",
    "Dfa",
    "GrowthReport",
    "InputError",
    "Nfa",
    "ParseError",
    "PreconditionError",
    "Reason",
    "ResourceError",
    "StateLimitError",
    "SumSpec",
    "cantor_params",
    "classify",
    "corpus",
    "count_representations",
    "decide_basis",
    "decode",
    "determinize",
    "encode",
    "exceptions_relative",
    "gcd_of_set",
    "minimize",
    "parse_automaton",
    "render_automaton",
    "sum_automaton",
]
