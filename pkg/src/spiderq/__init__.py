"""Colored HOMFLY-PT invariants through the exterior-power spider."""

from __future__ import annotations

from .scalar import ONE, ZERO, QExponent, Scalar, qbinom, qfactorial, qint, qpow, specialize
from .tangle import TangleDiagram, TangleParseError, close, parse_braid, parse_text, unknot
from .spider import braiding, colored_eval, functor_Q, reduced_eval, twist
from .howe import apply_ladder, rt_eval
from .dschur import DSElement, generator, lusztig_T, phi

__all__ = [
    "ONE",
    "ZERO",
    "QExponent",
    "Scalar",
    "qbinom",
    "qfactorial",
    "qint",
    "qpow",
    "specialize",
    "TangleDiagram",
    "TangleParseError",
    "close",
    "parse_braid",
    "parse_text",
    "unknot",
    "braiding",
    "colored_eval",
    "functor_Q",
    "reduced_eval",
    "twist",
    "apply_ladder",
    "rt_eval",
    "DSElement",
    "generator",
    "lusztig_T",
    "phi",
]

__version__ = "0.1.0"
