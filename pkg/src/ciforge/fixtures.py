"""Built-in example interpretations used throughout the test-suite and CLI."""

from __future__ import annotations

from .concepts import Interpretation, make_interpretation
from .errors import ValidationError


def _fig3() -> Interpretation:
    # Two cities; one reaches only an acyclic region part, the other sits on a
    # partof/capital cycle with its region.
    return make_interpretation(
        domain=["x1", "x2", "x3", "x4", "x5", "x6", "x7"],
        concept_ext={
            "City": ["x1", "x2"],
            "Party": ["x3", "x4"],
            "Liberal": ["x3"],
            "Organization": ["x4"],
            "Region": ["x5", "x7"],
        },
        role_ext={
            "government": [("x1", "x3"), ("x2", "x4")],
            "partof": [("x1", "x5"), ("x2", "x7")],
            "capital": [("x5", "x6"), ("x7", "x2")],
        },
    )


def _fig4i() -> Interpretation:
    # One A-element feeding an r-loop: valid CIs of unbounded role depth.
    return make_interpretation(
        domain=["v1", "v2"],
        concept_ext={"A": ["v1"]},
        role_ext={"r": [("v1", "v2"), ("v2", "v2")]},
    )


def _fig4ii() -> Interpretation:
    # Unbounded-depth left-hand sides: ∃s.∃r^n.B ⊑ A holds for every n.
    return make_interpretation(
        domain=["x1", "x2", "x3", "x4"],
        concept_ext={"A": ["x1"], "B": ["x2"]},
        role_ext={
            "r": [("x2", "x2"), ("x4", "x4"), ("x3", "x2")],
            "s": [("x1", "x2"), ("x3", "x4")],
        },
    )


def _fig5() -> Interpretation:
    # Three B-hubs on r-cycles of coprime lengths 2, 3, 5; A sits on the
    # predecessor of each hub, so hub i satisfies ∃r^(k·p_i − 1).A.  x4 has a
    # bare self-loop, x5 a self-loop with A and B.
    domain = ["x1", "y11", "x2", "y21", "y22", "x3", "y31", "y32", "y33", "y34", "x4", "x5"]
    edges = [
        ("x1", "y11"), ("y11", "x1"),
        ("x2", "y21"), ("y21", "y22"), ("y22", "x2"),
        ("x3", "y31"), ("y31", "y32"), ("y32", "y33"), ("y33", "y34"), ("y34", "x3"),
        ("x4", "x4"),
        ("x5", "x5"),
    ]
    return make_interpretation(
        domain=domain,
        concept_ext={
            "B": ["x1", "x2", "x3", "x4", "x5"],
            "A": ["y11", "y22", "y34", "x5"],
        },
        role_ext={"r": edges},
    )


def _fig7() -> Interpretation:
    # A two-element partof/capital cycle between a city and its region.
    return make_interpretation(
        domain=["a", "b"],
        concept_ext={"City": ["a"], "Region": ["b"]},
        role_ext={"partof": [("a", "b")], "capital": [("b", "a")]},
    )


_FIXTURES = {
    "fig3": _fig3,
    "fig4i": _fig4i,
    "fig4ii": _fig4ii,
    "fig5": _fig5,
    "fig7": _fig7,
}

FIXTURE_NAMES = tuple(sorted(_FIXTURES))


def builtin_fixture(name: str) -> Interpretation:
    try:
        build = _FIXTURES[name]
    except KeyError:
        raise ValidationError(
            f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}"
        ) from None
    return build()
