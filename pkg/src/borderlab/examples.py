"""Named example ideals with their expected invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import monomials as mon
from .deformations import DOUBLE_PRIME, PRIME
from .ideals import DistinguishedIdeal, build_distinguished_ideal, ideal_from_generators
from .order_ideals import ShapeParams, lex_segment_complement, order_ideal_from_shape
from .polynomials import parse_polynomial


def _mons(text: str, n: int):
    return [mon.parse_monomial(s, n) for s in text.split(",")]


D5223_GENERATORS = [
    "x1^2 - x4^3 - x4^2*x5 + x4*x5^2 + x5^3",
    "x1*x2 - x4^3 + x4^2*x5 + x4*x5^2 + x5^3",
    "x1*x3 - x4^2*x5 + x5^3",
    "x1*x4 + x4^3 + x4^2*x5 - x5^3",
    "x1*x5 + x4^2*x5 - x5^3",
    "x2^2 + x4^3 + x4^2*x5 + x4*x5^2 - x5^3",
    "x2*x3 - x4^3 - x4^2*x5",
    "x2*x4 + x4^3 - x4^2*x5",
    "x2*x5 - x4^2*x5",
    "x3^2 + x4^3 + x4^2*x5 + x4*x5^2 - x5^3",
    "x3*x4 + x4^3 - x4^2*x5",
    "x3*x5 - x4^2*x5 - x4*x5^2",
]

RUNNING_GENERATORS = [
    "x1^2 + x2*x3 + x3^2",
    "x1*x2 + x2*x3",
    "x1*x3 + x2*x3 + x3^2",
    "x2^2",
]

RUNNING_GROEBNER = [
    "x1^2 + x2*x3 + x3^2",
    "x1*x2 + x2*x3",
    "x1*x3 + x2*x3 + x3^2",
    "x2^2",
    "x2*x3^2",
    "x3^3",
]


def running_data():
    O = lex_segment_complement(3, (1, 3, 2, 0))
    return O, _mons("x1^2,x1*x2,x1*x3,x2^2", 3), _mons("x2*x3,x3^2", 3)


def iarrobino_emsalem_data():
    O = lex_segment_complement(4, (1, 4, 3, 0))
    lm = _mons("x1^2,x1*x2,x1*x3,x1*x4,x2^2,x2*x3,x2*x4", 4)
    tm = _mons("x3^2,x3*x4,x4^2", 4)
    return O, lm, tm


_FRONT_PAIRS = "x1^2,x1*x2,x1*x3,x1*x4,x1*x5,x1*x6,x2^2,x2*x3,x2*x4,x2*x5,x2*x6"

H6_CASES = {
    "first": (
        _FRONT_PAIRS + ",x3^3,x3^2*x4,x3^2*x5,x3^2*x6,x3*x4^2,x3*x4*x5,x3*x4*x6,"
        "x3*x5^2,x3*x5*x6,x3*x6^2",
        "x4^3,x4^2*x5,x4^2*x6,x4*x5^2,x4*x5*x6,x4*x6^2,x5^4,x5^3*x6,x5^2*x6^2,x5*x6^3,x6^4",
    ),
    "second": (
        _FRONT_PAIRS + ",x4^4,x4^3*x5,x4^3*x6,x4^2*x5^2,x4^2*x5*x6,x4^2*x6^2,x4*x5^3,"
        "x4*x5^2*x6,x4*x5*x6^2,x4*x6^3",
        "x3^2,x3*x4,x3*x5,x3*x6,x5^4,x5^3*x6,x5^2*x6^2,x5*x6^3,x6^4",
    ),
    "third": (
        _FRONT_PAIRS + ",x5^5,x5^4*x6,x5^3*x6^2,x5^2*x6^3,x5*x6^4,x6^5",
        "x3^2,x3*x4,x3*x5,x3*x6,x4^3,x4^2*x5,x4^2*x6,x4*x5^2,x4*x5*x6,x4*x6^2",
    ),
}


def h6_data(case: str):
    O = lex_segment_complement(6, (1, 6, 10, 10, 5, 0))
    lm_text, tm_text = H6_CASES[case]
    return O, _mons(lm_text, 6), _mons(tm_text, 6)


@dataclass
class NamedExample:
    name: str
    description: str
    build: Callable[[], DistinguishedIdeal]
    variant: str = PRIME
    extended: bool = False
    expected: dict = field(default_factory=dict)
    default_field: str | None = None


def _shape(shape: tuple, seed: int):
    def build():
        O, lm, tm = order_ideal_from_shape(ShapeParams(*shape))
        return build_distinguished_ideal(O, lm, tm, seed=seed)
    return build


def _seeded(data: Callable, seed: int):
    def build():
        O, lm, tm = data()
        return build_distinguished_ideal(O, lm, tm, seed=seed)
    return build


def _d5223():
    O, lm, tm = order_ideal_from_shape(ShapeParams(5, 2, 2, 3))
    return ideal_from_generators(O, lm, tm, [parse_polynomial(g, 5) for g in D5223_GENERATORS])


def _running():
    O, lm, tm = running_data()
    return ideal_from_generators(O, lm, tm, [parse_polynomial(g, 3) for g in RUNNING_GENERATORS])


def _running_monomial():
    O, lm, tm = running_data()
    return build_distinguished_ideal(O, lm, tm, coefficients={})


SEEDS = {
    "iarrobino-emsalem": 1,
    "d-5-2-2-5": 1,
    "d-6-3-2-3": 1,
    "d-5-2-2-6": 1,
    "d-6-3-3-4": 1,
    "h-1-6-10-10-5-first": 1,
    "h-1-6-10-10-5-second": 1,
    "h-1-6-10-10-5-third": 1,
}

EXAMPLES: dict[str, NamedExample] = {
    e.name: e
    for e in [
        NamedExample(
            "d-5-2-2-3", "shape (5,2,2,3), twelve fixed generators", _d5223,
            expected={"dimension": 59, "L": 59, "verdict": "generic", "principal": 65},
        ),
        NamedExample(
            "running-3-2-1", "n=3, h=(1,3,2,0), efficient ideal with fixed generators", _running,
            expected={"dimension": 18, "verdict": "notShapeGeneric", "theta": (12, 10)},
        ),
        NamedExample(
            "running-3-2-1-monomial", "n=3, h=(1,3,2,0), all coefficients zero", _running_monomial,
        ),
        NamedExample(
            "iarrobino-emsalem", "n=4, h=(1,4,3,0), seeded coefficients",
            _seeded(iarrobino_emsalem_data, SEEDS["iarrobino-emsalem"]),
            expected={"dimension": 25, "L": 25, "verdict": "generic"},
        ),
        NamedExample(
            "d-5-2-2-5", "shape (5,2,2,5), seeded", _shape((5, 2, 2, 5), SEEDS["d-5-2-2-5"]),
            expected={"dimension": 104, "L": 104, "verdict": "generic"},
        ),
        NamedExample(
            "d-6-3-2-3", "shape (6,3,2,3), seeded", _shape((6, 3, 2, 3), SEEDS["d-6-3-2-3"]),
            expected={"dimension": 165, "L": 165, "verdict": "generic", "principal": 138,
                      "theta": (90, 91)},
        ),
        NamedExample(
            "d-5-2-2-6", "shape (5,2,2,6), seeded; exact rank over Q",
            _shape((5, 2, 2, 6), SEEDS["d-5-2-2-6"]), default_field="Q",
            expected={"dimension": 139, "L": 131, "verdict": "notShapeGeneric"},
        ),
        NamedExample(
            "d-6-3-3-4", "shape (6,3,3,4), seeded; rank taken mod 32713",
            _shape((6, 3, 3, 4), SEEDS["d-6-3-3-4"]), extended=True,
            expected={"dimension": 705, "L": 705, "rank": 6821, "verdict": "generic"},
        ),
        NamedExample(
            "h-1-6-10-10-5-first", "n=6, h=(1,6,10,10,5,0), first LM/TM choice",
            _seeded(lambda: h6_data("first"), SEEDS["h-1-6-10-10-5-first"]), extended=True,
            expected={"dimension": 255, "L": 255, "verdict": "generic"},
        ),
        NamedExample(
            "h-1-6-10-10-5-second", "n=6, h=(1,6,10,10,5,0), second LM/TM choice",
            _seeded(lambda: h6_data("second"), SEEDS["h-1-6-10-10-5-second"]),
            variant=DOUBLE_PRIME, extended=True,
            expected={"dimension": 222, "L": 222, "verdict": "generic"},
        ),
        NamedExample(
            "h-1-6-10-10-5-third", "n=6, h=(1,6,10,10,5,0), third LM/TM choice",
            _seeded(lambda: h6_data("third"), SEEDS["h-1-6-10-10-5-third"]),
            variant=DOUBLE_PRIME, extended=True,
            expected={"dimension": 211, "L": 211, "verdict": "generic"},
        ),
    ]
}


def get_example(name: str) -> NamedExample:
    try:
        return EXAMPLES[name]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}") from None
