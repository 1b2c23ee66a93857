"""The per-instance property suite used by the command-line runner.

Given one precontact algebra it re-verifies every structural law the
package promises: Stone representation, the round trip through the dual
triple, axiom/relation correspondences, interdefinability, closure
behaviour and, when the dual space fits the point budget, the
complete-contact and mereocompactness specializations.
"""

from __future__ import annotations

from .adjacency import stone_representation_report
from .config import point_limit
from .duality import algebra_roundtrip_iso, specialization_report
from .precontact import (
    clan_supports,
    contact_closure,
    contact_from_well_inside,
    largest_contact,
    smallest_contact,
    well_inside_pairs,
)
from .report import ReportBuilder
from .serialize import decode, encode
from .topology import is_connected


def instance_suite(pca, deep=None):
    """Run every applicable law on one instance; failures carry
    witnesses.  ``deep`` forces or forbids the enumeration-heavy
    specializations (default: run them when the dual fits the point
    budget)."""
    report = ReportBuilder(f"instance suite on {pca.algebra.atom_count} atoms")

    representation = stone_representation_report(pca)
    report.add(
        "stone representation",
        representation.ok,
        witness="; ".join(f"{c.name}: {c.witness}" for c in representation.failures),
    )

    roundtrip = algebra_roundtrip_iso(pca)
    report.add(
        "algebra round trip",
        roundtrip.report.ok,
        witness="; ".join(f"{c.name}: {c.witness}" for c in roundtrip.report.failures),
    )
    triple = roundtrip.space

    flags = pca.axioms
    kernel = pca.kernel
    report.add("(Cref) iff reflexive kernel", flags.cref == kernel.is_reflexive)
    report.add("(Csym) iff symmetric kernel", flags.csym == kernel.is_symmetric)
    report.add("(Ctr) iff transitive kernel", flags.ctr == kernel.is_transitive)
    report.add(
        "(Ccon) iff connected dual space",
        flags.ccon == is_connected(triple.space),
    )

    rebuilt = contact_from_well_inside(pca.algebra, well_inside_pairs(pca))
    report.add("interdefinability round trip", rebuilt.pairs == kernel.pairs)

    closed = contact_closure(pca)
    report.add("contact closure is a contact relation", closed.axioms.is_contact)
    report.add(
        "contact closure is idempotent",
        contact_closure(closed).kernel.pairs == closed.kernel.pairs,
    )
    report.add(
        "clans agree with the closure's clans",
        clan_supports(pca) == clan_supports(closed),
    )
    diagonal = smallest_contact(pca.algebra).kernel.pairs
    everything = largest_contact(pca.algebra).kernel.pairs
    report.add(
        "closure sits between the extremal contacts",
        diagonal <= closed.kernel.pairs <= everything,
    )

    report.add(
        "serialization round trip",
        decode(encode(pca)) == pca,
    )

    if deep is None:
        deep = triple.space.point_count <= point_limit()
    if deep:
        special = specialization_report(pca)
        report.add(
            "specialization suite",
            special.ok,
            witness="; ".join(f"{c.name}: {c.witness}" for c in special.failures),
        )
    return report.done()
