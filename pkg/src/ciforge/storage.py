"""File formats: interpretation JSON documents and TBox text files."""

from __future__ import annotations

import json

from .concepts import (
    ConceptInclusion,
    Interpretation,
    make_interpretation,
    parse_concept,
    render_concept,
)
from .errors import CiforgeError, ValidationError


def load_interpretation(path) -> Interpretation:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CiforgeError(
                f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}"
            ) from exc
    return interpretation_from_document(doc, origin=str(path))


def interpretation_from_document(doc, origin="<document>") -> Interpretation:
    if not isinstance(doc, dict):
        raise ValidationError(f"{origin}: expected an object at top level")
    try:
        domain = doc["domain"]
    except KeyError:
        raise ValidationError(f"{origin}: missing 'domain'") from None
    concepts = doc.get("concepts", {})
    roles = doc.get("roles", {})
    if not isinstance(domain, list) or not all(isinstance(x, str) for x in domain):
        raise ValidationError(f"{origin}: 'domain' must be a list of strings")
    try:
        return make_interpretation(domain, concepts, roles)
    except (ValidationError, TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"{origin}: malformed extensions ({exc})") from exc


def interpretation_to_document(i: Interpretation) -> dict:
    return {
        "domain": sorted(i.domain),
        "concepts": {name: sorted(ext) for name, ext in sorted(i.concept_ext.items())},
        "roles": {
            name: sorted([list(p) for p in pairs])
            for name, pairs in sorted(i.role_ext.items())
        },
    }


def save_interpretation(i: Interpretation, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(interpretation_to_document(i), fh, indent=2, sort_keys=True)
        fh.write("\n")


def parse_inclusion(line: str) -> list[ConceptInclusion]:
    """One axiom line: `C SubClassOf D` or `C EquivalentTo D` (the latter
    expands to both inclusions)."""
    for keyword in (" SubClassOf ", " EquivalentTo "):
        if keyword in line:
            lhs_text, rhs_text = line.split(keyword, 1)
            lhs = parse_concept(lhs_text.strip())
            rhs = parse_concept(rhs_text.strip())
            if keyword == " SubClassOf ":
                return [ConceptInclusion(lhs, rhs)]
            return [ConceptInclusion(lhs, rhs), ConceptInclusion(rhs, lhs)]
    raise CiforgeError(f"axiom line needs SubClassOf or EquivalentTo: {line!r}")


def load_tbox(path) -> frozenset:
    axioms = set()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                axioms.update(parse_inclusion(line))
            except CiforgeError as exc:
                raise CiforgeError(f"{path}:{lineno}: {exc}") from exc
    return frozenset(axioms)


def tbox_lines(tbox) -> list[str]:
    """Deterministic rendering; mutual inclusion pairs merge into a single
    EquivalentTo line."""
    axioms = set(tbox)
    lines = []
    for ci in sorted(axioms, key=str):
        if ci not in axioms:
            continue
        reverse = ConceptInclusion(ci.rhs, ci.lhs)
        if reverse in axioms and reverse != ci:
            axioms.discard(ci)
            axioms.discard(reverse)
            first, second = sorted(
                [render_concept(ci.lhs), render_concept(ci.rhs)]
            )
            lines.append(f"{first} EquivalentTo {second}")
        elif ci in axioms:
            axioms.discard(ci)
            lines.append(str(ci))
    return sorted(lines)


def save_tbox(tbox, path, report=None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if report is not None:
            for line in report.summary_lines():
                fh.write(f"# {line}\n")
        for line in tbox_lines(tbox):
            fh.write(line + "\n")
