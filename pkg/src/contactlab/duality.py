"""The duality between precontact algebras and 2-precontact triples.

Objects travel through ``dual_space`` and ``dual_algebra``; morphisms
through ``dual_space_map`` (clan preimages) and ``dual_algebra_map``
(closures of preimages of dense clopens).  The two round-trip
isomorphisms send an element to its clan set and a point to its trace
in the pair's regular closed sets.  Everything here returns explicit
witness maps or witness-bearing reports, never bare booleans.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .adjacency import AdjacencySpace, contact_from_adjacency, is_closed_relation
from .boolean import BooleanHom, bit_indices, mask_of
from .errors import (
    CapacityError,
    ClassificationError,
    DomainMismatchError,
    PreconditionError,
)
from .precontact import (
    PcaMorphism,
    PrecontactAlgebra,
    clan_supports,
    contact_closure,
    largest_contact,
    smallest_contact,
)
from .report import Check, ReportBuilder
from .structures import (
    TwoPrecontactSpace,
    canonical_pcs_of_pca,
    contact_relation_of_pair,
    mereocompactness_report,
    pcs_algebra,
    pcs_contact_masks,
    validate_cs,
)
from .topology import (
    MereotopologicalPair,
    closure,
    clopens_of_subset,
    interior,
    is_c_semiregular,
    is_connected,
    is_discrete,
    is_extremally_disconnected,
    is_stone,
    rc_members,
    rc_members_of_subset,
    subspace,
)

ENUMERATION_POINT_CAP = 6
ISOMORPHISM_POINT_CAP = 8


# ---------------------------------------------------------------------------
# morphisms on the space side


def _is_valid_pcs_map(source, target, point_map):
    sp, tp = source.space, target.space
    if len(point_map) != sp.point_count:
        return False
    if any(not 0 <= i < tp.point_count for i in point_map):
        return False
    for x in range(sp.point_count):
        image_closure = mask_of(point_map[y] for y in bit_indices(sp.point_closures[x]))
        if image_closure | tp.point_closures[point_map[x]] != tp.point_closures[point_map[x]]:
            return False
    for x in bit_indices(source.subset):
        if not target.subset >> point_map[x] & 1:
            return False
    for x, y in source.relation:
        if (point_map[x], point_map[y]) not in target.relation:
            return False
    # trace coherence: the map is determined by its dense restriction.
    # Landing in the closure of a dense clopen must force membership in
    # the closure of that clopen's preimage (the converse is continuity).
    for clopen in clopens_of_subset(tp, target.subset):
        target_closure = closure(tp, clopen)
        pre = mask_of(
            x for x in bit_indices(source.subset) if clopen >> point_map[x] & 1
        )
        source_closure = closure(sp, pre)
        for x in range(sp.point_count):
            if target_closure >> point_map[x] & 1 and not source_closure >> x & 1:
                return False
    return True


@dataclass(frozen=True)
class PcsMorphism:
    """A continuous point map respecting the dense parts and their
    relations, and determined by its dense restriction.

    On top of continuity, f(X0) <= X0' and relation preservation, a
    morphism must be trace coherent: a point may only land in the
    closure of a dense clopen of the target when it already lies in the
    closure of that clopen's preimage.  Without this condition a map
    into a non-discrete space can move points of X \\ X0 independently
    of its dense restriction, which breaks faithfulness, the naturality
    squares and the hom-set bijection with the algebra side.  On
    discrete spaces the condition is vacuous.
    """

    source: TwoPrecontactSpace
    target: TwoPrecontactSpace
    point_map: tuple

    def __post_init__(self):
        if not _is_valid_pcs_map(self.source, self.target, self.point_map):
            raise PreconditionError("not a morphism of 2-precontact spaces")

    def apply(self, x):
        return self.point_map[x]

    def preimage_mask(self, target_mask):
        return mask_of(
            x
            for x in range(self.source.space.point_count)
            if target_mask >> self.point_map[x] & 1
        )


def identity_pcs_morphism(pcs):
    return PcsMorphism(pcs, pcs, tuple(range(pcs.space.point_count)))


def compose_pcs_morphisms(outer, inner):
    if inner.target != outer.source:
        raise DomainMismatchError("morphisms do not compose")
    return PcsMorphism(
        inner.source,
        outer.target,
        tuple(outer.point_map[i] for i in inner.point_map),
    )


def pcs_iso_report(morphism):
    """Is the morphism an isomorphism of triples: a homeomorphism that
    matches the dense parts and the relations in both directions?"""
    report = ReportBuilder("2-precontact space isomorphism")
    src, dst, pm = morphism.source, morphism.target, morphism.point_map
    bijective = (
        len(set(pm)) == len(pm) and dst.space.point_count == src.space.point_count
    )
    report.add("bijective", bijective, witness=f"map {pm}")
    if not bijective:
        return report.done()
    homeo = all(
        mask_of(pm[y] for y in bit_indices(src.space.point_closures[x]))
        == dst.space.point_closures[pm[x]]
        for x in range(src.space.point_count)
    )
    report.add("homeomorphism", homeo, witness="a singleton closure does not transfer")
    iso1 = mask_of(pm[x] for x in bit_indices(src.subset)) == dst.subset
    report.add("dense parts correspond", iso1, witness="image of the dense part differs")
    forward = all((pm[x], pm[y]) in dst.relation for x, y in src.relation)
    backward = all(
        (x, y) in src.relation
        for x in bit_indices(src.subset)
        for y in bit_indices(src.subset)
        if (pm[x], pm[y]) in dst.relation
    )
    report.add("relation preserved and reflected", forward and backward)
    return report.done()


# ---------------------------------------------------------------------------
# the two functors


def dual_space(pca):
    """Algebra to space: the canonical 2-precontact triple on the clans."""
    return canonical_pcs_of_pca(pca)


def dual_algebra(pcs):
    """Space to algebra: the canonical precontact algebra of the triple."""
    return pcs_algebra(pcs).pca


def dual_space_map(morphism):
    """A PCA-morphism induces the clan-preimage map between the dual
    triples, in the reverse direction."""
    source_pca, target_pca = morphism.source, morphism.target
    amap = morphism.hom.atom_map
    dual_of_target = dual_space(target_pca)
    dual_of_source = dual_space(source_pca)
    source_positions = {s: i for i, s in enumerate(clan_supports(source_pca))}
    point_map = []
    for support in clan_supports(target_pca):
        image = mask_of(amap[q] for q in bit_indices(support))
        if image not in source_positions:
            raise AssertionError("preimage of a clan must be a clan")
        point_map.append(source_positions[image])
    return PcsMorphism(dual_of_target, dual_of_source, tuple(point_map))


def _pointwise_dual_hom(f):
    """The point-set action of the algebra map of a space morphism:
    a member of the target pair goes to the closure of the preimage of
    its dense trace."""
    source = f.source

    def action(member_mask):
        trace = member_mask & f.target.subset
        pre = f.preimage_mask(trace) & source.subset
        return closure(source.space, pre)

    return action


def dual_algebra_map(f):
    """A PCS-morphism induces a PCA-morphism between the canonical
    algebras, in the reverse direction."""
    source_alg = pcs_algebra(f.source)
    target_alg = pcs_algebra(f.target)
    action = _pointwise_dual_hom(f)
    images = {m: action(target_alg.to_point_mask(m)) for m in range(target_alg.pca.algebra.size)}
    member_set = set(source_alg.members)
    for m, img in images.items():
        if img not in member_set:
            raise AssertionError("image leaves the pair's regular closed sets")
    atom_map = []
    for q, atom_mask in enumerate(source_alg.atom_masks):
        hits = [
            p
            for p in range(target_alg.pca.algebra.atom_count)
            if atom_mask | images[1 << p] == images[1 << p]
        ]
        if len(hits) != 1:
            raise AssertionError("the dual map is not a Boolean homomorphism")
        atom_map.append(hits[0])
    hom = BooleanHom(target_alg.pca.algebra, source_alg.pca.algebra, tuple(atom_map))
    for m in range(target_alg.pca.algebra.size):
        if source_alg.to_point_mask(hom.apply_mask(m)) != images[m]:
            raise AssertionError("atom map does not reproduce the dual action")
    return PcaMorphism(hom, target_alg.pca, source_alg.pca)


# ---------------------------------------------------------------------------
# the natural isomorphisms


def space_roundtrip_iso(pcs):
    """The triple against the dual of its dual: a point goes to its
    trace in the pair's regular closed sets, read as a clan."""
    alg = pcs_algebra(pcs)
    rebuilt = dual_space(alg.pca)
    positions = {s: i for i, s in enumerate(clan_supports(alg.pca))}
    point_map = []
    for x in range(pcs.space.point_count):
        support = mask_of(
            i for i, atom in enumerate(alg.atom_masks) if atom >> x & 1
        )
        if support not in positions:
            raise AssertionError("a point trace must be a clan of the dual algebra")
        point_map.append(positions[support])
    return PcsMorphism(pcs, rebuilt, tuple(point_map))


@dataclass(frozen=True)
class AlgebraRoundTrip:
    """The clan-set map from an algebra onto the canonical algebra of its
    dual triple, with the verification report."""

    source: PrecontactAlgebra
    space: TwoPrecontactSpace
    canonical: object
    images: tuple
    report: object

    def image_of(self, element_mask):
        return self.images[element_mask]


def algebra_roundtrip_iso(pca):
    """Verify that sending an element to the set of clans containing it
    is an isomorphism onto the canonical algebra of the dual triple, both
    for the raw relation and, through the contact closure, for the
    pair's proximity."""
    report = ReportBuilder(f"algebra round trip on {pca.algebra.atom_count} atoms")
    triple = dual_space(pca)
    report.add(
        "canonical triple validates",
        triple.is_valid,
        witness="; ".join(f"{c.name} {c.witness}" for c in triple.failures()),
    )
    alg = pcs_algebra(triple)
    space = triple.space
    supports = clan_supports(pca)
    atom_clans = [
        mask_of(i for i, s in enumerate(supports) if s >> p & 1)
        for p in range(pca.algebra.atom_count)
    ]
    size = pca.algebra.size
    images = [0] * size
    for m in range(1, size):
        low = m & -m
        images[m] = images[m ^ low] | atom_clans[low.bit_length() - 1]
    images = tuple(images)

    report.add(
        "bijective onto the pair's regular closed sets",
        len(set(images)) == size and set(images) == set(alg.members),
        witness=f"images {sorted(set(images))} vs members {sorted(alg.members)}",
    )

    join_ok = all(
        images[a | b] == (images[a] | images[b]) for a in range(size) for b in range(size)
    )
    report.add("preserves joins", join_ok)

    meet_ok, meet_witness = True, None
    for a in range(size):
        for b in range(size):
            expected = closure(space, interior(space, images[a] & images[b]))
            if images[a & b] != expected:
                meet_ok, meet_witness = False, f"(a, b) = ({a}, {b})"
                break
        if not meet_ok:
            break
    report.add("preserves meets", meet_ok, meet_witness)

    full = pca.algebra.full_mask
    comp_ok = all(
        images[full ^ a] == closure(space, space.full_mask ^ images[a])
        for a in range(size)
    )
    report.add("preserves complements", comp_ok)

    relation_ok, relation_witness = True, None
    for a in range(size):
        for b in range(size):
            left = pca.holds_masks(a, b)
            right = pcs_contact_masks(
                space, triple.subset, triple.relation, images[a], images[b]
            )
            if left != right:
                relation_ok, relation_witness = False, f"(a, b) = ({a}, {b})"
                break
        if not relation_ok:
            break
    report.add("preserves and reflects the relation", relation_ok, relation_witness)

    sharp = contact_closure(pca)
    proximity_ok, proximity_witness = True, None
    for a in range(size):
        for b in range(size):
            left = sharp.holds_masks(a, b)
            right = bool(images[a] & images[b])
            if left != right:
                proximity_ok, proximity_witness = False, f"(a, b) = ({a}, {b})"
                break
        if not proximity_ok:
            break
    report.add(
        "contact closure matches the pair's proximity",
        proximity_ok,
        proximity_witness,
    )

    closure_kernel_ok = contact_closure(alg.pca).kernel.pairs == frozenset(
        (i, j)
        for i in range(len(alg.atom_masks))
        for j in range(len(alg.atom_masks))
        if alg.atom_masks[i] & alg.atom_masks[j]
    )
    report.add(
        "closed canonical relation coincides with the pair's proximity",
        closure_kernel_ok,
    )

    return AlgebraRoundTrip(pca, triple, alg, images, report.done())


# ---------------------------------------------------------------------------
# naturality


def check_naturality(morphism):
    if isinstance(morphism, PcaMorphism):
        return _check_algebra_square(morphism)
    if isinstance(morphism, PcsMorphism):
        return _check_space_square(morphism)
    raise DomainMismatchError("expected a PCA- or PCS-morphism")


def _check_algebra_square(phi):
    """g_target o phi must equal the double dual of phi after g_source."""
    report = ReportBuilder("naturality of the algebra round trip")
    a_trip = algebra_roundtrip_iso(phi.source)
    b_trip = algebra_roundtrip_iso(phi.target)
    f = dual_space_map(phi)
    psi = dual_algebra_map(f)
    a_alg = pcs_algebra(a_trip.space)
    b_alg = pcs_algebra(b_trip.space)

    basic_ok, basic_witness = True, None
    for a in range(phi.source.algebra.size):
        pre = f.preimage_mask(a_trip.images[a])
        if pre != b_trip.images[phi.hom.apply_mask(a)]:
            basic_ok, basic_witness = False, f"element mask {a}"
            break
    report.add(
        "preimages of basic closed sets match the hom images",
        basic_ok,
        basic_witness,
    )

    square_ok, square_witness = True, None
    for a in range(phi.source.algebra.size):
        left = b_trip.images[phi.hom.apply_mask(a)]
        element = a_alg.from_point_mask(a_trip.images[a])
        right = b_alg.to_point_mask(psi.hom.apply_mask(element))
        if left != right:
            square_ok, square_witness = False, f"element mask {a}"
            break
    report.add("the square commutes", square_ok, square_witness)
    return report.done()


def _check_space_square(f):
    """The double dual of f must match f through the point traces."""
    report = ReportBuilder("naturality of the space round trip")
    t_src = space_roundtrip_iso(f.source)
    t_dst = space_roundtrip_iso(f.target)
    psi = dual_algebra_map(f)
    f_sharp = dual_space_map(psi)
    ok, witness = True, None
    for x in range(f.source.space.point_count):
        left = f_sharp.point_map[t_src.point_map[x]]
        right = t_dst.point_map[f.point_map[x]]
        if left != right:
            ok, witness = False, f"point {f.source.space.point_names[x]}"
            break
    report.add("the square commutes", ok, witness)
    return report.done()


def gt_preimage_check(f, member_mask):
    """The algebra map of a space morphism acts as plain preimage on the
    pair's regular closed sets."""
    target_alg = pcs_algebra(f.target)
    source_alg = pcs_algebra(f.source)
    psi = dual_algebra_map(f)
    element = target_alg.from_point_mask(member_mask)
    through_hom = source_alg.to_point_mask(psi.hom.apply_mask(element))
    plain = f.preimage_mask(member_mask)
    passed = through_hom == plain
    return Check(
        "algebra map acts as preimage",
        passed,
        None
        if passed
        else f"member {f.target.space.name_set(member_mask)}",
    )


# ---------------------------------------------------------------------------
# the adjacency reduct and reconstruction


def dense_part(pcs):
    """Forget down to the dense part with its relation: a Stone adjacency
    space at finite scale."""
    sub = subspace(pcs.space, pcs.subset)
    indices = list(bit_indices(pcs.subset))
    position = {x: i for i, x in enumerate(indices)}
    local = frozenset((position[x], position[y]) for x, y in pcs.relation)
    return AdjacencySpace(sub.point_names, local, sub)


def dense_part_map(f):
    """Restriction of a PCS-morphism to the dense parts, as a cell map."""
    src = list(bit_indices(f.source.subset))
    dst = {x: i for i, x in enumerate(bit_indices(f.target.subset))}
    return tuple(dst[f.point_map[x]] for x in src)


def pcs_from_stone_adjacency(adjacency, candidate=None):
    """The unique triple extending a Stone adjacency space, built through
    the region algebra of the cells; optionally verified isomorphic to a
    supplied candidate."""
    topo = adjacency.topology
    if topo is not None and not (
        is_stone(topo) and is_closed_relation(adjacency.pairs, topo)
    ):
        raise PreconditionError("not a Stone adjacency space")
    pca = contact_from_adjacency(adjacency)
    triple = dual_space(pca)
    report = ReportBuilder("reconstruction from a Stone adjacency space")
    report.add("triple validates", triple.is_valid)
    reduct = dense_part(triple)
    report.add(
        "dense part reproduces the input cells",
        reduct.cell_count == adjacency.cell_count
        and reduct.pairs == adjacency.pairs,
        witness=f"reduct relation {sorted(reduct.pairs)}",
    )
    if candidate is not None:
        witness_map = pcs_isomorphic(triple, candidate)
        report.add(
            "isomorphic to the supplied candidate",
            witness_map is not None,
            witness="no isomorphism found",
        )
    return triple, report.done()


def pcs_isomorphic(first, second):
    """Brute-force search for a triple isomorphism; None when there is
    none."""
    n = first.space.point_count
    if n != second.space.point_count or first.subset.bit_count() != second.subset.bit_count():
        return None
    if n > ISOMORPHISM_POINT_CAP:
        raise CapacityError(f"isomorphism search capped at {ISOMORPHISM_POINT_CAP} points")
    for pm in permutations(range(n)):
        if mask_of(pm[x] for x in bit_indices(first.subset)) != second.subset:
            continue
        if any(
            mask_of(pm[y] for y in bit_indices(first.space.point_closures[x]))
            != second.space.point_closures[pm[x]]
            for x in range(n)
        ):
            continue
        if frozenset((pm[x], pm[y]) for x, y in first.relation) != second.relation:
            continue
        return pm
    return None


def canonical_kernel_form(pca):
    """Lexicographically minimal kernel under atom permutations."""
    n = pca.algebra.atom_count
    if n > ISOMORPHISM_POINT_CAP:
        raise CapacityError(f"canonical form capped at {ISOMORPHISM_POINT_CAP} atoms")
    best = None
    for pm in permutations(range(n)):
        remapped = tuple(sorted((pm[p], pm[q]) for p, q in pca.kernel.pairs))
        if best is None or remapped < best:
            best = remapped
    return best


def pca_isomorphic(first, second):
    """An atom permutation carrying one kernel onto the other, or None."""
    n = first.algebra.atom_count
    if n != second.algebra.atom_count:
        return None
    if n > ISOMORPHISM_POINT_CAP:
        raise CapacityError(f"isomorphism search capped at {ISOMORPHISM_POINT_CAP} atoms")
    target = second.kernel.pairs
    for pm in permutations(range(n)):
        if frozenset((pm[p], pm[q]) for p, q in first.kernel.pairs) == target:
            return pm
    return None


# ---------------------------------------------------------------------------
# morphism enumeration (hom-set experiments)


def enumerate_boolean_homs(source, target):
    maps = product(range(source.atom_count), repeat=target.atom_count)
    return [BooleanHom(source, target, tuple(m)) for m in maps]


def enumerate_pca_morphisms(source_pca, target_pca):
    from .precontact import is_pca_morphism

    out = []
    for hom in enumerate_boolean_homs(source_pca.algebra, target_pca.algebra):
        if is_pca_morphism(hom, source_pca, target_pca):
            out.append(PcaMorphism(hom, source_pca, target_pca))
    return out


def enumerate_pcs_morphisms(source, target):
    if source.space.point_count > ENUMERATION_POINT_CAP:
        raise CapacityError(
            f"morphism enumeration capped at {ENUMERATION_POINT_CAP} points"
        )
    out = []
    for pm in product(range(target.space.point_count), repeat=source.space.point_count):
        if _is_valid_pcs_map(source, target, pm):
            out.append(PcsMorphism(source, target, pm))
    return out


# ---------------------------------------------------------------------------
# specializations of the duality


def _diagonal(indices):
    return frozenset((i, i) for i in indices)


def specialization_report(pca, which=None):
    """Run the subcategory specializations that apply to the algebra.

    ``which`` restricts to one named specialization and raises
    ClassificationError when the object is not in that subcategory.
    Names: stone, connected-stone, contact, complete-contact,
    mereocompact, connected.
    """
    known = (
        "stone",
        "connected-stone",
        "contact",
        "complete-contact",
        "mereocompact",
        "connected",
    )
    if which is not None and which not in known:
        raise ClassificationError(f"unknown specialization {which!r}")
    report = ReportBuilder(f"specializations on {pca.algebra.atom_count} atoms")
    flags = pca.axioms

    is_stone_object = pca.kernel.pairs == smallest_contact(pca.algebra).kernel.pairs
    is_connected_stone_object = (
        pca.kernel.pairs == largest_contact(pca.algebra).kernel.pairs
    )
    memberships = {
        "stone": is_stone_object,
        "connected-stone": is_connected_stone_object,
        "contact": flags.is_contact,
        "complete-contact": flags.is_contact,
        "mereocompact": flags.is_contact,
        "connected": flags.ccon,
    }
    if which is not None and not memberships[which]:
        raise ClassificationError(
            f"object is not in the {which} subcategory"
        )

    selected = [which] if which is not None else [k for k in known if memberships[k]]
    if which is None:
        selected.append("connected-correspondence")

    triple = dual_space(pca)
    supports = clan_supports(pca)
    n = pca.algebra.atom_count

    for name in selected:
        if name == "stone":
            report.add(
                "clans are exactly the ultrafilters",
                supports == [1 << p for p in range(n)],
            )
            report.add(
                "dual triple is the whole space with the diagonal",
                triple.subset == triple.space.full_mask
                and triple.relation == _diagonal(range(triple.space.point_count))
                and is_discrete(triple.space),
            )
        elif name == "connected-stone":
            report.add(
                "clans are exactly the grills",
                sorted(supports) == list(range(1, pca.algebra.size)),
            )
            x0 = list(bit_indices(triple.subset))
            report.add(
                "dual relation is total on the dense part",
                triple.relation == frozenset((x, y) for x in x0 for y in x0),
            )
            if n >= 2:
                report.add("dual space is connected", is_connected(triple.space))
        elif name == "contact":
            cs = validate_cs(triple.space, triple.subset)
            report.add(
                "dual pair is a 2-contact space",
                cs.is_valid,
                witness="; ".join(f"{c.name} {c.witness}" for c in cs.failures()),
            )
            if cs.is_valid:
                report.add(
                    "the pair determines the relation",
                    contact_relation_of_pair(cs) == triple.relation,
                )
        elif name == "complete-contact":
            report.add(
                "regular closed sets of the dual all come from the pair",
                frozenset(rc_members(triple.space))
                == frozenset(rc_members_of_subset(triple.space, triple.subset)),
            )
            report.add("dual space is C-semiregular", is_c_semiregular(triple.space))
            report.add(
                "dense part is extremally disconnected",
                is_extremally_disconnected(subspace(triple.space, triple.subset)),
            )
        elif name == "mereocompact":
            members = rc_members_of_subset(triple.space, triple.subset)
            mereo = MereotopologicalPair(triple.space, tuple(members))
            result = mereocompactness_report(mereo)
            report.add(
                "dual pair's member algebra is mereocompact",
                result.is_space and result.is_t0 and result.is_mereocompact,
            )
            report.add(
                "u-points recover the dense part",
                result.u_set == triple.subset,
                witness=triple.space.name_set(result.u_set),
            )
        elif name == "connected":
            report.add("dual space is connected", is_connected(triple.space))
        elif name == "connected-correspondence":
            report.add(
                "connectedness axiom matches the dual space",
                flags.ccon == is_connected(triple.space),
                witness=f"Ccon={flags.ccon}",
            )
    return report.done()


def gmcs_hom_check(source_cs, target_cs, point_map):
    """For a continuous map of 2-contact pairs, taking plain preimages of
    the target pair's regular closed sets must give a Boolean
    homomorphism into the source pair's."""
    report = ReportBuilder("preimage homomorphism of a pair map")
    if not (source_cs.is_valid and target_cs.is_valid):
        raise PreconditionError("both pairs must be valid 2-contact spaces")
    src_space = source_cs.space
    src_members = set(rc_members_of_subset(src_space, source_cs.subset))
    dst_members = rc_members_of_subset(target_cs.space, target_cs.subset)

    def pre(mask):
        return mask_of(
            x for x in range(src_space.point_count) if mask >> point_map[x] & 1
        )

    images = {h: pre(h) for h in dst_members}
    report.add(
        "preimages stay inside the source pair's regular closed sets",
        all(v in src_members for v in images.values()),
        witness=str(sorted(v for v in images.values() if v not in src_members)),
    )
    report.add(
        "preserves bounds",
        images[0] == 0 and images[target_cs.space.full_mask] == src_space.full_mask,
    )
    join_ok = all(
        images[h | k] == (images[h] | images[k]) for h in dst_members for k in dst_members
    )
    report.add("preserves joins", join_ok)
    meet_ok = all(
        images[
            closure(
                target_cs.space, interior(target_cs.space, h & k)
            )
        ]
        == closure(src_space, interior(src_space, images[h] & images[k]))
        for h in dst_members
        for k in dst_members
    )
    report.add("preserves meets", meet_ok)
    comp_ok = all(
        images[closure(target_cs.space, target_cs.space.full_mask ^ h)]
        == closure(src_space, src_space.full_mask ^ images[h])
        for h in dst_members
    )
    report.add("preserves complements", comp_ok)
    return report.done()
