"""Mining a sound and complete TBox ("base") from a finite interpretation.

Attributes are ⊥, the active concept names, and one existential ∃r.mmsc(X)
per active role and non-empty X ⊆ Δ (deduplicated).  Conjunctions of
attributes are enumerated either by closing attribute extensions under
intersection ("naive") or by NextClosure over closed attribute sets
("intents"); each representative is tied to the MMSC of its extension.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .concepts import (
    And,
    Atom,
    BOTTOM,
    Concept,
    ConceptInclusion,
    Exists,
    Interpretation,
    TOP,
    active_signature,
    canonicalize,
    concept_sort_key,
    render_concept,
    role_depth,
)
from .errors import CiforgeError, ResourceCapError
from .graphs import DEFAULT_NODE_CAP
from .mmsc import DepthReport, adaptable_depth, mmsc_adaptive
from .oracles import enumerate_concepts
from .reasoner import Reasoner
from .simulation import equivalent_empty, semantic_extension

DEFAULT_DOMAIN_CAP = 12


@dataclass(frozen=True)
class AttributeSet:
    attributes: tuple  # of Concept, deduplicated, deterministic order
    ext: tuple  # attribute index -> frozenset of elements
    depth_reports: tuple  # of (X tuple, DepthReport) summaries

    def __len__(self):
        return len(self.attributes)


@dataclass(frozen=True)
class IntentLattice:
    intents: tuple  # of (frozenset of attribute indices, extension), lectic order


@dataclass(frozen=True)
class MiningReport:
    attribute_count: int
    intent_count: int
    axiom_count: int
    max_role_depth: int
    depth_reports: tuple  # of (X tuple, DepthReport)

    def summary_lines(self):
        yield f"attributes: {self.attribute_count}"
        yield f"intents: {self.intent_count}"
        yield f"axioms: {self.axiom_count}"
        yield f"max role depth: {self.max_role_depth}"
        for elements, report in self.depth_reports:
            yield (
                f"depth {','.join(elements)}: branch={report.branch} "
                f"product_mvf={report.product_mvf} chosen={report.chosen_depth}"
            )


def attribute_set(
    i: Interpretation,
    domain_cap: int = DEFAULT_DOMAIN_CAP,
    node_cap: int = DEFAULT_NODE_CAP,
) -> AttributeSet:
    if len(i.domain) > domain_cap:
        raise ResourceCapError(
            f"attribute mining enumerates 2^|domain| subsets; {len(i.domain)} "
            f"elements exceed the cap of {domain_cap}"
        )
    sig = active_signature(i)
    memo: dict = {}
    candidates: list[Concept] = [BOTTOM]
    candidates.extend(Atom(name) for name in sorted(sig.concept_names))
    depth_reports = []
    elements = sorted(i.domain)
    mmsc_by_set = {}
    for n in range(1, len(elements) + 1):
        for combo in itertools.combinations(elements, n):
            report = adaptable_depth(i, combo, node_cap=node_cap)
            depth_reports.append((combo, report))
            mmsc_by_set[combo] = mmsc_adaptive(i, combo, node_cap=node_cap)
    for role in sorted(sig.role_names):
        for combo, concept in mmsc_by_set.items():
            # mmsc output is canonical and never Bottom for non-empty sets,
            # so the restriction is canonical as built.
            candidates.append(Exists(role, concept))
    # Dedup: drop an attribute only when an earlier one has both the same
    # extension and mutual empty-TBox subsumption (adaptable depths differ
    # per X, so equal extensions alone are not enough).  Identical rendered
    # forms short-circuit the simulation check.
    kept: list[Concept] = []
    kept_ext: list[frozenset] = []
    groups: dict = {}  # extension -> [(rendered, concept)]
    for c in candidates:
        c_ext = semantic_extension(c, i, memo)
        rendered = render_concept(c)
        group = groups.setdefault(c_ext, [])
        duplicate = False
        for other_rendered, other in group:
            if other_rendered == rendered or equivalent_empty(c, other):
                duplicate = True
                break
        if not duplicate:
            group.append((rendered, c))
            kept.append(c)
            kept_ext.append(c_ext)
    order = sorted(range(len(kept)), key=lambda k: concept_sort_key(kept[k]))
    return AttributeSet(
        attributes=tuple(kept[k] for k in order),
        ext=tuple(kept_ext[k] for k in order),
        depth_reports=tuple(depth_reports),
    )


def intent_closure(a: AttributeSet, U, i: Interpretation) -> frozenset:
    """{m | extension(⊓U) ⊆ extension(m)} over attribute indices."""
    common = i.domain
    for idx in U:
        common = common & a.ext[idx]
    return frozenset(idx for idx in range(len(a)) if common <= a.ext[idx])


def enumerate_intents(a: AttributeSet, i: Interpretation) -> IntentLattice:
    """All closed attribute subsets in lectic order (NextClosure)."""
    n = len(a)

    def closure(indices):
        return intent_closure(a, indices, i)

    def extent(indices):
        common = i.domain
        for idx in indices:
            common = common & a.ext[idx]
        return common

    intents = []
    current = closure(frozenset())
    while True:
        intents.append((current, extent(current)))
        nxt = None
        for m in reversed(range(n)):
            if m in current:
                continue
            candidate = closure(frozenset(idx for idx in current if idx < m) | {m})
            # lectic successor test: the closure adds nothing below m.
            if not any(idx < m and idx not in current for idx in candidate):
                nxt = candidate
                break
        if nxt is None:
            break
        current = nxt
    return IntentLattice(tuple(intents))


def _conj_of(a: AttributeSet, indices) -> Concept:
    # Attributes are stored in canonical sort order, pairwise distinct, and
    # never Top, so conjoining by ascending index is already the canonical
    # form — no deep re-canonicalization of the (possibly large) fillers.
    parts = tuple(a.attributes[idx] for idx in sorted(indices))
    if not parts:
        return TOP
    if BOTTOM in parts:
        return BOTTOM
    if len(parts) == 1:
        return parts[0]
    return And(parts)


def build_base(
    i: Interpretation,
    mode: str = "intents",
    domain_cap: int = DEFAULT_DOMAIN_CAP,
    node_cap: int = DEFAULT_NODE_CAP,
):
    """Returns (TBox, MiningReport).

    Both modes emit, per extension-distinct representative R (the conjunction
    of all attributes valid on R's extension): R ≡ mmsc(extension(R)), plus
    one equivalence per single attribute, the Top equivalence, and inclusion
    axioms between representatives (all comparable pairs in naive mode,
    lattice cover edges plus pairwise meets in intents mode).
    """
    if mode not in ("naive", "intents"):
        raise CiforgeError(f"unknown mining mode {mode!r}")
    attrs = attribute_set(i, domain_cap=domain_cap, node_cap=node_cap)
    memo: dict = {}
    lattice = enumerate_intents(attrs, i)

    axioms: set[ConceptInclusion] = set()

    def emit_equiv(c: Concept, d: Concept):
        if c != d:
            axioms.add(ConceptInclusion(c, d))
            axioms.add(ConceptInclusion(d, c))

    mmsc_cache: dict = {}

    def mmsc_of(ext: frozenset) -> Concept:
        cached = mmsc_cache.get(ext)
        if cached is None:
            cached = mmsc_adaptive(i, ext, node_cap=node_cap)
            mmsc_cache[ext] = cached
        return cached

    # (1) one equivalence per attribute (the singleton conjunctions) and for
    # the empty conjunction Top.
    for idx in range(len(attrs)):
        emit_equiv(attrs.attributes[idx], mmsc_of(attrs.ext[idx]))
    emit_equiv(TOP, mmsc_of(i.domain))

    # (2) one equivalence per closed set: representative tied to the MMSC of
    # its extension.
    reps = {}  # extension -> representative concept
    rep_indices = {}  # extension -> closed attribute index set
    for indices, ext in lattice.intents:
        rep = _conj_of(attrs, indices)
        reps[ext] = rep
        rep_indices[ext] = indices
        emit_equiv(rep, mmsc_of(ext))

    ordered = sorted(reps.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))

    # (3) inclusions between representatives.
    if mode == "naive":
        for (ext1, rep1), (ext2, rep2) in itertools.permutations(ordered, 2):
            if ext1 < ext2:
                axioms.add(ConceptInclusion(rep1, rep2))
    else:
        # cover edges of the closed-extension lattice
        extents = [ext for ext, _ in ordered]
        for ext1 in extents:
            uppers = [e for e in extents if ext1 < e]
            for ext2 in uppers:
                if not any(ext1 < mid < ext2 for mid in uppers):
                    axioms.add(ConceptInclusion(reps[ext1], reps[ext2]))
    # (4) meet axioms: R1 ⊓ R2 ⊑ representative of the meet extension.  The
    # attribute equivalences route any conjunction of attributes through the
    # closed representatives, and the meets close the lattice downwards; both
    # are needed so that e.g. a pair of attributes with disjoint extensions is
    # entailed to be below Bottom.
    for (ext1, rep1), (ext2, rep2) in itertools.combinations(ordered, 2):
        meet_ext = ext1 & ext2
        if meet_ext in reps and meet_ext not in (ext1, ext2):
            meet = _conj_of(attrs, rep_indices[ext1] | rep_indices[ext2])
            axioms.add(ConceptInclusion(meet, reps[meet_ext]))

    # soundness self-check before returning
    for ci in axioms:
        lhs_ext = semantic_extension(ci.lhs, i, memo)
        rhs_ext = semantic_extension(ci.rhs, i, memo)
        if not lhs_ext <= rhs_ext:
            raise CiforgeError(
                f"internal soundness violation: {ci} "
                f"({sorted(lhs_ext)} ⊄ {sorted(rhs_ext)})"
            )

    tbox = frozenset(axioms)
    # Every axiom side is built from the attributes and the cached MMSCs, so
    # the maximum role depth is the maximum over those building blocks.
    depth = max(
        itertools.chain(
            (role_depth(c) for c in attrs.attributes),
            (role_depth(c) for c in mmsc_cache.values()),
        ),
        default=0,
    )
    report = MiningReport(
        attribute_count=len(attrs),
        intent_count=len(lattice.intents),
        axiom_count=len(tbox),
        max_role_depth=depth,
        depth_reports=attrs.depth_reports,
    )
    return tbox, report


def check_base_sound(i: Interpretation, tbox) -> bool:
    memo: dict = {}
    return all(
        semantic_extension(ci.lhs, i, memo) <= semantic_extension(ci.rhs, i, memo)
        for ci in tbox
    )


@dataclass(frozen=True)
class CompletenessReport:
    checked: int
    counterexamples: tuple  # of ConceptInclusion

    @property
    def complete(self):
        return not self.counterexamples


def check_base_complete(
    i: Interpretation, tbox, depth: int, size_cap: int
) -> CompletenessReport:
    """Enumerates canonical concepts over the active signature up to the given
    role depth and node count; every valid inclusion among them must be
    entailed by the TBox.

    Fast path: for each C it suffices that T ⊨ C ⊑ mmsc(extension(C)) at the
    enumeration depth, since that MMSC is below every valid right-hand side
    of the fragment; on failure the literal pair scan produces concrete
    counterexamples.
    """
    sig = active_signature(i)
    concepts = list(enumerate_concepts(sig, depth, size_cap))
    memo: dict = {}
    by_ext: dict = {}
    for c in concepts:
        by_ext.setdefault(semantic_extension(c, i, memo), []).append(c)

    mmsc_by_ext = {
        ext: canonicalize(mmsc_at_depth_for_check(i, ext, depth)) for ext in by_ext
    }
    reasoner = Reasoner(tbox, rhs_concepts=mmsc_by_ext.values())

    counterexamples = []
    checked = 0
    suspects = []
    for ext, cs in by_ext.items():
        target = mmsc_by_ext[ext]
        for c in cs:
            checked += 1
            if not reasoner.entails_registered(c, target):
                suspects.append((c, ext))
    if suspects:
        # Literal fallback: scan all enumerated D with a superset extension.
        # One fresh reasoner with every needed right-hand side registered up
        # front, so the saturation runs once instead of per pair.
        needed_exts = {ext for _, ext in suspects}
        rhs_pool = [
            d
            for other_ext, ds in by_ext.items()
            if any(ext <= other_ext for ext in needed_exts)
            for d in ds
        ]
        fallback = Reasoner(tbox, rhs_concepts=rhs_pool)
        for c, ext in suspects:
            for other_ext, ds in by_ext.items():
                if not ext <= other_ext:
                    continue
                for d in ds:
                    if not fallback.entails_registered(c, d):
                        counterexamples.append(ConceptInclusion(c, d))
    return CompletenessReport(checked, tuple(counterexamples))


def mmsc_at_depth_for_check(i: Interpretation, ext: frozenset, depth: int) -> Concept:
    from .mmsc import mmsc_at_depth

    return mmsc_at_depth(i, ext, depth)
