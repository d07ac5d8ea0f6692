"""Concept AST, canonical form, parsing, rendering, and validation."""

import pytest
from hypothesis import given

from ciforge.concepts import (
    And,
    Atom,
    BOTTOM,
    ConceptInclusion,
    Exists,
    Signature,
    TOP,
    active_signature,
    canonicalize,
    conjuncts_of,
    exists_chain,
    is_canonical,
    make_interpretation,
    node_count,
    parse_concept,
    render_concept,
    role_depth,
    signature_of,
)
from ciforge.errors import ConceptSyntaxError, ValidationError
from ciforge.simulation import semantic_extension

from conftest import concepts, interpretations


# -- canonical form ---------------------------------------------------------


@given(concepts())
def test_canonicalize_is_idempotent(c):
    once = canonicalize(c)
    assert canonicalize(once) == once
    assert is_canonical(once)


@given(concepts(), interpretations())
def test_canonicalize_preserves_extensions(c, i):
    assert semantic_extension(c, i) == semantic_extension(canonicalize(c), i)


def test_canonicalize_flattens_sorts_and_dedups():
    c = And((Atom("B"), And((Atom("A"), Atom("B"))), TOP))
    assert canonicalize(c) == And((Atom("A"), Atom("B")))


def test_bottom_absorbs_through_conjunction_and_fillers():
    assert canonicalize(And((Atom("A"), BOTTOM))) == BOTTOM
    assert canonicalize(Exists("r", BOTTOM)) == BOTTOM
    assert canonicalize(Exists("r", And((Atom("A"), BOTTOM)))) == BOTTOM


def test_empty_and_singleton_conjunctions_collapse():
    assert canonicalize(And((TOP, TOP))) == TOP
    assert canonicalize(And((Atom("A"),))) == Atom("A")


# -- rendering and parsing --------------------------------------------------


@given(concepts())
def test_parse_inverts_render_on_canonical_concepts(c):
    c = canonicalize(c)
    assert parse_concept(render_concept(c)) == c


def test_parse_examples():
    assert parse_concept("City and (some partof.Region)") == And(
        (Atom("City"), Exists("partof", Atom("Region")))
    )
    assert parse_concept("Bottom") == BOTTOM
    assert parse_concept("Top") == TOP


def test_render_parenthesizes_composite_fillers():
    c = Exists("r", And((Atom("A"), Atom("B"))))
    assert render_concept(c) == "some r.(A and B)"
    nested = Exists("r", Exists("s", Atom("A")))
    assert render_concept(nested) == "some r.(some s.A)"


def test_unparenthesized_filler_is_greedy():
    assert parse_concept("some r.A and B") == Exists(
        "r", And((Atom("A"), Atom("B")))
    )
    assert parse_concept("(some r.A) and B") == And(
        (Atom("B"), Exists("r", Atom("A")))
    )


def test_parse_errors_carry_positions():
    with pytest.raises(ConceptSyntaxError) as exc:
        parse_concept("A and ⊥")
    assert exc.value.position == 6
    with pytest.raises(ConceptSyntaxError):
        parse_concept("some some.A")  # keyword cannot be a role name
    with pytest.raises(ConceptSyntaxError):
        parse_concept("A B")  # trailing input
    with pytest.raises(ConceptSyntaxError):
        parse_concept("(A")  # unclosed paren
    with pytest.raises(ConceptSyntaxError):
        parse_concept("and A")


# -- measures ---------------------------------------------------------------


def test_role_depth_and_node_count():
    c = And((Atom("A"), Exists("r", Exists("s", Atom("B")))))
    assert role_depth(c) == 2
    assert node_count(c) == 5
    assert role_depth(TOP) == 0
    assert node_count(BOTTOM) == 1


def test_exists_chain_builds_nested_restrictions():
    assert exists_chain("r", 0, Atom("A")) == Atom("A")
    assert exists_chain("r", 2, TOP) == Exists("r", Exists("r", TOP))
    assert role_depth(exists_chain("r", 7, TOP)) == 7


def test_conjuncts_of_canonical_concepts():
    assert conjuncts_of(TOP) == ()
    assert conjuncts_of(Atom("A")) == (Atom("A"),)
    c = canonicalize(And((Atom("A"), Exists("r", TOP))))
    assert len(conjuncts_of(c)) == 2


# -- signatures, inclusions, interpretations --------------------------------


def test_signature_rejects_shared_concept_and_role_names():
    with pytest.raises(ValidationError):
        Signature(frozenset({"x"}), frozenset({"x"}))


def test_signature_of_collects_atoms_and_roles():
    c = And((Atom("A"), Exists("r", Atom("B"))))
    sig = signature_of(c)
    assert sig.concept_names == {"A", "B"}
    assert sig.role_names == {"r"}


def test_inclusion_renders_as_axiom_line():
    ci = ConceptInclusion(Atom("A"), Exists("r", TOP))
    assert str(ci) == "A SubClassOf some r.Top"


def test_interpretation_validation():
    with pytest.raises(ValidationError):
        make_interpretation([])
    with pytest.raises(ValidationError):
        make_interpretation(["a"], concept_ext={"A": ["b"]})
    with pytest.raises(ValidationError):
        make_interpretation(["a"], role_ext={"r": [("a", "b")]})


def test_active_signature_ignores_empty_extensions():
    i = make_interpretation(
        ["a"], concept_ext={"A": ["a"], "B": []}, role_ext={"r": [], "s": [("a", "a")]}
    )
    sig = active_signature(i)
    assert sig.concept_names == {"A"}
    assert sig.role_names == {"s"}
