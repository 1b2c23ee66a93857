"""Composite space structures: 2-precontact spaces, 2-contact spaces,
Stone 2-spaces, mereotopological pairs and their validators.

Validators return witness-bearing reports rather than booleans; a failed
axiom never raises, it is recorded with a concrete counterexample.
Canonical constructions index their points by clan support in
(size, atoms) order, which keeps serialization and isomorphism checks
stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .adjacency import is_closed_relation
from .boolean import FiniteBooleanAlgebra, bit_indices, mask_of
from .errors import DomainMismatchError, PreconditionError, ValidationError
from .precontact import PrecontactAlgebra, RelationKernel, clan_supports
from .report import Check
from .topology import (
    FiniteSpace,
    MereotopologicalPair,
    TopologicalPair,
    closure,
    clopens_of_subset,
    is_closed_base,
    is_stone,
    is_t0,
    point_trace,
    rc_members_of_subset,
    space_from_closed_base,
    subspace,
    u_point_of_pair,
)

# ---------------------------------------------------------------------------
# shared helpers for the clopen algebra of a subspace


def _minimal_nonzero(masks):
    nonzero = [m for m in masks if m]
    return [
        m for m in nonzero if not any(o != m and o | m == m for o in nonzero)
    ]


def _family_algebra(members, kernel_pairs_of_atoms):
    """Abstract precontact algebra of a finite set family, with the given
    relation evaluated on its minimal nonzero members."""
    atoms = sorted(_minimal_nonzero(members))
    algebra = FiniteBooleanAlgebra(len(atoms))
    pairs = frozenset(
        (i, j)
        for i in range(len(atoms))
        for j in range(len(atoms))
        if kernel_pairs_of_atoms(atoms[i], atoms[j])
    )
    return PrecontactAlgebra(algebra, RelationKernel(algebra, pairs)), atoms


def _clan_element_sets(pca, atoms, members):
    """Element sets of all clans of the family algebra, as member masks."""
    out = []
    for support in clan_supports(pca):
        chosen = [atoms[i] for i in bit_indices(support)]
        out.append(
            frozenset(m for m in members if any(a | m == m for a in chosen))
        )
    return out


def _grill_element_sets(atoms, members):
    out = []
    for support in range(1, 1 << len(atoms)):
        chosen = [atoms[i] for i in bit_indices(support)]
        out.append(
            frozenset(m for m in members if any(a | m == m for a in chosen))
        )
    return out


def _relation_out_masks(space, relation):
    succ = [0] * space.point_count
    for x, y in relation:
        succ[x] |= 1 << y
    return succ


# ---------------------------------------------------------------------------
# 2-precontact spaces


@dataclass(frozen=True)
class TwoPrecontactSpace:
    """A space, a subset of its points and a relation on the subset,
    together with the cached validation verdicts for (PCS1)..(PCS5)."""

    space: FiniteSpace
    subset: int
    relation: frozenset
    checks: tuple = field(default=(), compare=False)

    @property
    def is_valid(self):
        return all(c.passed for c in self.checks)

    @property
    def pair(self):
        return TopologicalPair(self.space, self.subset)

    def failures(self):
        return tuple(c for c in self.checks if not c.passed)


def _check_relation_span(space, subset, relation):
    for x, y in relation:
        if not (0 <= x < space.point_count and 0 <= y < space.point_count):
            raise DomainMismatchError(f"relation pair ({x}, {y}) out of range")
        if not (subset >> x & 1 and subset >> y & 1):
            raise DomainMismatchError(
                f"relation pair ({x}, {y}) leaves the chosen subset"
            )


def pcs_contact_masks(space, subset, relation, f_mask, g_mask):
    """The canonical relation of the triple on arbitrary point sets:
    related points of the subset, one inside each set."""
    succ = _relation_out_masks(space, relation)
    g_inside = g_mask & subset
    return any(succ[x] & g_inside for x in bit_indices(f_mask & subset))


def validate_pcs(space, subset, relation):
    """Check (PCS1)..(PCS5) and return the triple with its report.

    Failures carry witnesses; precondition breaches (relation leaving the
    subset) raise instead.
    """
    relation = frozenset(relation)
    _check_relation_span(space, subset, relation)
    checks = []

    dense = closure(space, subset) == space.full_mask
    t0 = is_t0(space)
    checks.append(
        Check(
            "(PCS1)",
            dense and t0,
            None
            if dense and t0
            else f"dense={dense}, T0={t0}",
        )
    )

    sub = subspace(space, subset)
    local = frozenset(
        (
            _local_index(subset, x),
            _local_index(subset, y),
        )
        for x, y in relation
    )
    stone = is_stone(sub)
    closed_rel = is_closed_relation(local, sub)
    checks.append(
        Check(
            "(PCS2)",
            stone and closed_rel,
            None if stone and closed_rel else f"stone={stone}, closed relation={closed_rel}",
        )
    )

    rc_members = rc_members_of_subset(space, subset)
    base_ok = is_closed_base(space, rc_members)
    checks.append(
        Check(
            "(PCS3)",
            base_ok,
            None if base_ok else "the pair's regular closed sets are not a closed base",
        )
    )

    clopens = clopens_of_subset(space, subset)
    succ = _relation_out_masks(space, relation)

    def contact(f, g):
        return any(succ[x] & g for x in bit_indices(f))

    def contact_sharp(f, g):
        return contact(f, g) or contact(g, f) or bool(f & g)

    pcs4_ok, pcs4_witness = True, None
    for f in clopens:
        for g in clopens:
            if closure(space, f) & closure(space, g) and not contact_sharp(f, g):
                pcs4_ok = False
                pcs4_witness = f"({space.name_set(f)},{space.name_set(g)})"
                break
        if not pcs4_ok:
            break
    checks.append(Check("(PCS4)", pcs4_ok, pcs4_witness))

    co_pca, co_atoms = _family_algebra(clopens, contact)
    clan_sets = _clan_element_sets(co_pca, co_atoms, clopens)
    traces = {
        frozenset(
            f for f in clopens if closure(space, f) >> x & 1
        )
        for x in range(space.point_count)
    }
    pcs5_ok, pcs5_witness = True, None
    for clan_set in clan_sets:
        if clan_set not in traces:
            pcs5_ok = False
            pcs5_witness = (
                "unrealized clan {"
                + ",".join(space.name_set(f) for f in sorted(clan_set))
                + "}"
            )
            break
    checks.append(Check("(PCS5)", pcs5_ok, pcs5_witness))

    return TwoPrecontactSpace(space, subset, relation, tuple(checks))


def _local_index(subset, x):
    return sum(1 for y in bit_indices(subset) if y < x)


# ---------------------------------------------------------------------------
# canonical constructions


def clan_point_name(support_mask):
    return "c" + "-".join(str(i) for i in bit_indices(support_mask))


def canonical_pcs_of_pca(pca):
    """Points are the clans (by support), the closed base is the family
    of clan sets of the elements, the dense subset is the ultrafilter
    clans and the relation is the kernel on them."""
    algebra = pca.algebra
    if algebra.is_degenerate:
        raise PreconditionError("duality rejects the degenerate algebra")
    supports = clan_supports(pca)
    names = tuple(clan_point_name(s) for s in supports)
    base = []
    for a in range(algebra.size):
        base.append(mask_of(i for i, s in enumerate(supports) if s & a))
    space = space_from_closed_base(names, base)
    position = {s: i for i, s in enumerate(supports)}
    x0 = mask_of(position[1 << p] for p in range(algebra.atom_count))
    relation = frozenset(
        (position[1 << p], position[1 << q]) for p, q in pca.kernel.pairs
    )
    return validate_pcs(space, x0, relation)


def element_point_mask(pca, element_mask):
    """The point set of an element in the canonical space: the clans that
    contain it."""
    supports = clan_supports(pca)
    return mask_of(i for i, s in enumerate(supports) if s & element_mask)


@dataclass(frozen=True)
class PcsAlgebra:
    """The canonical precontact algebra of a 2-precontact space, together
    with the correspondence between abstract elements and point sets."""

    source: TwoPrecontactSpace
    pca: PrecontactAlgebra
    atom_masks: tuple
    members: tuple

    @cached_property
    def _member_index(self):
        return {self.to_point_mask(m): m for m in range(self.pca.algebra.size)}

    def to_point_mask(self, element_mask):
        out = 0
        for i in bit_indices(element_mask):
            out |= self.atom_masks[i]
        return out

    def from_point_mask(self, point_mask):
        return self._member_index[point_mask]


def pcs_algebra(pcs):
    """Build the canonical algebra of a valid triple: the pair's regular
    closed sets under the existential relation of the triple."""
    if not pcs.is_valid:
        raise ValidationError(
            "not a 2-precontact space: "
            + "; ".join(f"{c.name} {c.witness}" for c in pcs.failures())
        )
    space, subset, relation = pcs.space, pcs.subset, pcs.relation
    members = rc_members_of_subset(space, subset)
    succ = _relation_out_masks(space, relation)

    def contact(f, g):
        g_inside = g & subset
        return any(succ[x] & g_inside for x in bit_indices(f & subset))

    pca, atoms = _family_algebra(members, contact)
    return PcsAlgebra(pcs, pca, tuple(atoms), tuple(members))


def canonical_pca_of_pcs(pcs):
    return pcs_algebra(pcs).pca


# ---------------------------------------------------------------------------
# 2-contact spaces and Stone 2-spaces


@dataclass(frozen=True)
class TwoContactSpace:
    space: FiniteSpace
    subset: int
    checks: tuple = field(default=(), compare=False)

    @property
    def is_valid(self):
        return all(c.passed for c in self.checks)

    @property
    def pair(self):
        return TopologicalPair(self.space, self.subset)

    def failures(self):
        return tuple(c for c in self.checks if not c.passed)


@dataclass(frozen=True)
class StoneTwoSpace:
    space: FiniteSpace
    subset: int
    checks: tuple = field(default=(), compare=False)

    @property
    def is_valid(self):
        return all(c.passed for c in self.checks)

    @property
    def pair(self):
        return TopologicalPair(self.space, self.subset)

    def failures(self):
        return tuple(c for c in self.checks if not c.passed)


def _pair_axiom_checks(space, subset):
    """The shared axioms: density precondition, (CS1) T0, (CS2) Stone
    dense part, (CS3) closed base."""
    checks = []
    dense = closure(space, subset) == space.full_mask
    checks.append(
        Check(
            "(CS-precondition)",
            dense,
            None if dense else f"closure of the subset is {space.name_set(closure(space, subset))}",
        )
    )
    t0 = is_t0(space)
    checks.append(Check("(CS1)", t0, None if t0 else "space is not T0"))
    stone = is_stone(subspace(space, subset))
    checks.append(Check("(CS2)", stone, None if stone else "dense part is not a Stone space"))
    base_ok = is_closed_base(space, rc_members_of_subset(space, subset))
    checks.append(
        Check(
            "(CS3)",
            base_ok,
            None if base_ok else "the pair's regular closed sets are not a closed base",
        )
    )
    return checks


def _realization_check(space, subset, name, element_sets, clopens):
    traces = {
        frozenset(f for f in clopens if closure(space, f) >> x & 1)
        for x in range(space.point_count)
    }
    for es in element_sets:
        if es not in traces:
            witness = (
                "unrealized {"
                + ",".join(space.name_set(f) for f in sorted(es))
                + "}"
            )
            return Check(name, False, witness)
    return Check(name, True)


def validate_cs(space, subset):
    """Check the 2-contact axioms: the clans of the proximity of the
    dense part's clopens must all be closure traces of points."""
    checks = _pair_axiom_checks(space, subset)
    clopens = clopens_of_subset(space, subset)

    def delta(f, g):
        return bool(closure(space, f) & closure(space, g))

    co_pca, co_atoms = _family_algebra(clopens, delta)
    clan_sets = _clan_element_sets(co_pca, co_atoms, clopens)
    checks.append(_realization_check(space, subset, "(CS4)", clan_sets, clopens))
    return TwoContactSpace(space, subset, tuple(checks))


def validate_s2s(space, subset):
    """Stone 2-space: like a 2-contact space but every grill of the
    clopen algebra must be a closure trace."""
    checks = _pair_axiom_checks(space, subset)
    clopens = clopens_of_subset(space, subset)
    atoms = sorted(_minimal_nonzero(clopens))
    grill_sets = _grill_element_sets(atoms, clopens)
    checks.append(_realization_check(space, subset, "(S2S4)", grill_sets, clopens))
    return StoneTwoSpace(space, subset, tuple(checks))


def canonical_cs_of_ca(pca):
    """Drop the relation from the canonical triple of a contact algebra."""
    if not pca.axioms.is_contact:
        raise PreconditionError("the relation is not a contact relation")
    triple = canonical_pcs_of_pca(pca)
    return validate_cs(triple.space, triple.subset)


def contact_relation_of_pair(cs):
    """The unique reflexive and symmetric relation turning a 2-contact
    pair into a 2-precontact triple: points of the dense part are related
    when every pair of clopen neighbourhoods has meeting closures."""
    if not cs.is_valid:
        raise ValidationError("not a 2-contact space")
    space, subset = cs.space, cs.subset
    clopens = clopens_of_subset(space, subset)
    points = list(bit_indices(subset))
    out = set()
    for x in points:
        ux = [f for f in clopens if f >> x & 1]
        for y in points:
            uy = [g for g in clopens if g >> y & 1]
            if all(
                closure(space, f) & closure(space, g) for f in ux for g in uy
            ):
                out.add((x, y))
    return frozenset(out)


# ---------------------------------------------------------------------------
# mereotopology


@dataclass(frozen=True)
class MereocompactReport:
    """Verdicts for one mereotopological pair.

    ``u_set`` is the point set of u-points; ``uniqueness_witness`` names
    a second dense Stone subspace reproducing the member algebra, when
    one exists (there should be none for mereocompact T0 pairs).
    """

    pair: MereotopologicalPair
    is_space: bool
    is_t0: bool
    is_mereocompact: bool
    u_set: int
    uniqueness_witness: int | None
    checks: tuple

    @property
    def ok(self):
        return all(c.passed for c in self.checks)


def sigma_clan_sets(mereo):
    """Clans of the member algebra under ambient contact, as member sets."""

    def overlap(f, g):
        return bool(f & g)

    pca, atoms = _family_algebra(mereo.members, overlap)
    return _clan_element_sets(pca, atoms, mereo.members)


def mereocompactness_report(mereo):
    space, members = mereo.space, mereo.members
    checks = []

    space_ok = is_closed_base(space, members)
    checks.append(
        Check(
            "members form a closed base",
            space_ok,
            None if space_ok else "not a mereotopological space",
        )
    )
    t0 = is_t0(space)
    checks.append(Check("space is T0", t0, None if t0 else "not T0"))

    traces = {
        x: frozenset(point_trace(members, x)) for x in range(space.point_count)
    }
    trace_sets = set(traces.values())
    clan_sets = sigma_clan_sets(mereo)
    unrealized = [cs for cs in clan_sets if cs not in trace_sets]
    mereocompact = not unrealized
    checks.append(
        Check(
            "every clan is a point trace",
            mereocompact,
            None
            if mereocompact
            else "unrealized clan {"
            + ",".join(space.name_set(f) for f in sorted(unrealized[0]))
            + "}",
        )
    )

    u_set = mask_of(
        x for x in range(space.point_count) if u_point_of_pair(mereo, x)
    )
    uniqueness_witness = None

    if space_ok and t0 and mereocompact:
        atoms = sorted(_minimal_nonzero(members))
        ultra_points = mask_of(
            x
            for x in range(space.point_count)
            if sum(1 for a in atoms if a >> x & 1) == 1
        )
        agree = u_set == ultra_points
        checks.append(
            Check(
                "u-points are exactly the ultrafilter traces",
                agree,
                None
                if agree
                else f"u-points {space.name_set(u_set)}, ultrafilter traces {space.name_set(ultra_points)}",
            )
        )
        dense = closure(space, u_set) == space.full_mask
        checks.append(
            Check("u-point set is dense", dense, None if dense else space.name_set(u_set))
        )
        stone = is_stone(subspace(space, u_set)) if u_set else False
        checks.append(
            Check("u-point set is a Stone subspace", stone, None if stone else space.name_set(u_set))
        )
        member_set = frozenset(members)
        reproduced = (
            frozenset(rc_members_of_subset(space, u_set)) == member_set
            if dense
            else False
        )
        checks.append(
            Check(
                "closures of u-point clopens reproduce the members",
                reproduced,
                None if reproduced else space.name_set(u_set),
            )
        )
        for candidate in range(1, space.full_mask + 1):
            if candidate == u_set:
                continue
            if closure(space, candidate) != space.full_mask:
                continue
            if any(
                space.point_closures[x] & candidate != 1 << x
                for x in bit_indices(candidate)
            ):
                continue
            if frozenset(rc_members_of_subset(space, candidate)) == member_set:
                uniqueness_witness = candidate
                break
        checks.append(
            Check(
                "no other dense Stone subspace reproduces the members",
                uniqueness_witness is None,
                None
                if uniqueness_witness is None
                else space.name_set(uniqueness_witness),
            )
        )
        cs = validate_cs(space, u_set) if dense else None
        cs_ok = cs is not None and cs.is_valid
        checks.append(
            Check(
                "the pair with its u-points is a 2-contact space",
                cs_ok,
                None
                if cs_ok
                else (
                    "; ".join(f"{c.name} {c.witness}" for c in cs.failures())
                    if cs is not None
                    else "u-point set not dense"
                ),
            )
        )

    return MereocompactReport(
        pair=mereo,
        is_space=space_ok,
        is_t0=t0,
        is_mereocompact=mereocompact,
        u_set=u_set,
        uniqueness_witness=uniqueness_witness,
        checks=tuple(checks),
    )
