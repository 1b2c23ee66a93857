"""Precontact relations on finite Boolean algebras.

A relation satisfying (C0) and (C+) on a finite powerset algebra is
completely determined by its restriction to atom pairs, so relations are
stored canonically as atom-pair kernels and the element-level relation
is always derived:

    a C b  iff  some kernel pair (p, q) has p in a and q in b.

Axiom checks quantify exhaustively over the carrier, never by sampling;
they are the ground truth the rest of the package is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .boolean import BooleanHom, Element, FiniteBooleanAlgebra, bit_indices, mask_of
from .config import require_enum_width
from .errors import AxiomViolationError, DomainMismatchError, PreconditionError


@dataclass(frozen=True)
class RelationKernel:
    """Atom-pair kernel of a precontact relation; satisfies (C0) and (C+)
    by construction."""

    algebra: FiniteBooleanAlgebra
    pairs: frozenset

    def __post_init__(self):
        n = self.algebra.atom_count
        for p, q in self.pairs:
            if not (0 <= p < n and 0 <= q < n):
                raise DomainMismatchError(f"kernel pair ({p}, {q}) out of range")

    @cached_property
    def _succ(self):
        # _succ[p] = mask of atoms q with (p, q) in the kernel
        out = [0] * self.algebra.atom_count
        for p, q in self.pairs:
            out[p] |= 1 << q
        return tuple(out)

    def holds_masks(self, a_mask, b_mask):
        succ = self._succ
        return any(succ[p] & b_mask for p in bit_indices(a_mask))

    def forward_table(self):
        """table[a] = mask of atoms q reachable from the atoms of a; then
        a C b iff table[a] & b != 0.  Size 2**n."""
        n = self.algebra.atom_count
        succ = self._succ
        table = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            table[m] = table[m ^ low] | succ[low.bit_length() - 1]
        return table

    @property
    def is_symmetric(self):
        return all((q, p) in self.pairs for p, q in self.pairs)

    @property
    def is_reflexive(self):
        return all((p, p) in self.pairs for p in range(self.algebra.atom_count))

    @property
    def is_transitive(self):
        return all(
            (p, r) in self.pairs
            for p, q in self.pairs
            for q2, r in self.pairs
            if q2 == q
        )

    def transpose(self):
        return RelationKernel(self.algebra, frozenset((q, p) for p, q in self.pairs))


@dataclass(frozen=True)
class RawRelation:
    """An unvalidated element-level relation: ordered pairs of element masks."""

    algebra: FiniteBooleanAlgebra
    pairs: frozenset


@dataclass(frozen=True)
class RelationAxioms:
    """Exhaustively computed axiom flags for one precontact algebra."""

    cref: bool
    csym: bool
    ctr: bool
    ctr_sharp: bool
    ccon: bool
    c6: bool

    @property
    def is_contact(self):
        return self.cref and self.csym

    @property
    def is_normal_contact(self):
        return self.is_contact and self.ctr_sharp and self.c6

    def as_dict(self):
        return {
            "Cref": self.cref,
            "Csym": self.csym,
            "Ctr": self.ctr,
            "Ctr#": self.ctr_sharp,
            "Ccon": self.ccon,
            "C6": self.c6,
            "is_contact": self.is_contact,
            "is_normal_contact": self.is_normal_contact,
        }


@dataclass(frozen=True)
class PrecontactAlgebra:
    """A finite Boolean algebra with a precontact relation kernel."""

    algebra: FiniteBooleanAlgebra
    kernel: RelationKernel

    def __post_init__(self):
        if self.kernel.algebra != self.algebra:
            raise DomainMismatchError("kernel belongs to a different algebra")

    @cached_property
    def axioms(self):
        return axiom_report(self)

    def contact(self, a, b):
        if a.algebra != self.algebra or b.algebra != self.algebra:
            raise DomainMismatchError("elements from a different algebra")
        return self.kernel.holds_masks(a.mask, b.mask)

    def holds_masks(self, a_mask, b_mask):
        return self.kernel.holds_masks(a_mask, b_mask)


def pca_from_pairs(atom_count, pairs):
    algebra = FiniteBooleanAlgebra(atom_count)
    return PrecontactAlgebra(algebra, RelationKernel(algebra, frozenset(pairs)))


def holds(pca, a, b):
    return pca.contact(a, b)


def normalize_relation(raw):
    """Validate (C0) and (C+) on the full carrier and return the unique
    kernel reproducing the relation.

    Raises AxiomViolationError with a concrete witness pair for (C0) or a
    witness triple (a, b, c) for (C+).
    """
    algebra = raw.algebra
    require_enum_width(algebra.atom_count)
    rel = raw.pairs
    size = algebra.size
    for a, b in rel:
        if a == 0 or b == 0:
            raise AxiomViolationError("(C0)", (a, b))
    for a in range(size):
        for b in range(size):
            ab = (a, b) in rel
            for c in range(size):
                if ((a, b | c) in rel) != (ab or (a, c) in rel):
                    raise AxiomViolationError("(C+)", (a, b, c))
                if ((b | c, a) in rel) != ((b, a) in rel or (c, a) in rel):
                    raise AxiomViolationError("(C+)", (a, b, c))
    kernel = RelationKernel(
        algebra,
        frozenset(
            (p, q)
            for p in range(algebra.atom_count)
            for q in range(algebra.atom_count)
            if (1 << p, 1 << q) in rel
        ),
    )
    table = kernel.forward_table()
    for a in range(size):
        row = table[a]
        for b in range(size):
            assert ((a, b) in rel) == bool(row & b), "kernel round trip failed"
    return kernel


def expand_kernel(kernel):
    """The full element-level relation of a kernel, as a RawRelation."""
    algebra = kernel.algebra
    require_enum_width(algebra.atom_count)
    table = kernel.forward_table()
    pairs = frozenset(
        (a, b)
        for a in range(algebra.size)
        for b in range(algebra.size)
        if table[a] & b
    )
    return RawRelation(algebra, pairs)


def contact_closure(pca):
    """The smallest contact relation containing the given precontact one:
    symmetrize the kernel and add the diagonal (overlap) pairs."""
    kernel = pca.kernel
    n = pca.algebra.atom_count
    closed = set(kernel.pairs)
    closed.update((q, p) for p, q in kernel.pairs)
    closed.update((p, p) for p in range(n))
    return PrecontactAlgebra(pca.algebra, RelationKernel(pca.algebra, frozenset(closed)))


def smallest_contact(algebra):
    """Overlap contact: a C b iff a.b != 0; kernel is the atom diagonal."""
    pairs = frozenset((p, p) for p in range(algebra.atom_count))
    return PrecontactAlgebra(algebra, RelationKernel(algebra, pairs))


def largest_contact(algebra):
    """a C b iff both are nonzero; kernel is every atom pair."""
    n = algebra.atom_count
    pairs = frozenset((p, q) for p in range(n) for q in range(n))
    return PrecontactAlgebra(algebra, RelationKernel(algebra, pairs))


def well_inside(pca, a, b):
    """Non-tangential inclusion: a is well inside b iff a is not in
    contact with the complement of b."""
    if a.algebra != pca.algebra or b.algebra != pca.algebra:
        raise DomainMismatchError("elements from a different algebra")
    return not pca.kernel.holds_masks(a.mask, pca.algebra.full_mask ^ b.mask)


def well_inside_pairs(pca):
    """All mask pairs (a, b) with a well inside b."""
    algebra = pca.algebra
    require_enum_width(algebra.atom_count)
    table = pca.kernel.forward_table()
    full = algebra.full_mask
    return frozenset(
        (a, b)
        for a in range(algebra.size)
        for b in range(algebra.size)
        if not table[a] & (full ^ b)
    )


@dataclass(frozen=True)
class WellInsideAxioms:
    """Axioms of the well-inside relation, each quantified exhaustively.

    Tags (<<1)..(<<7) plus the derived forms (<<2') and (<<4').  The set
    {(<<2), (<<2'), (<<3), (<<4), (<<4')} characterises the relations
    whose induced contact is a precontact relation.
    """

    ax1: bool
    ax2: bool
    ax2_prime: bool
    ax3: bool
    ax4: bool
    ax4_prime: bool
    ax5: bool
    ax6: bool
    ax7: bool

    @property
    def defines_precontact(self):
        return self.ax2 and self.ax2_prime and self.ax3 and self.ax4 and self.ax4_prime

    def as_dict(self):
        return {
            "<<1": self.ax1,
            "<<2": self.ax2,
            "<<2'": self.ax2_prime,
            "<<3": self.ax3,
            "<<4": self.ax4,
            "<<4'": self.ax4_prime,
            "<<5": self.ax5,
            "<<6": self.ax6,
            "<<7": self.ax7,
            "defines_precontact": self.defines_precontact,
        }


def well_inside_axiom_report(algebra, pairs):
    require_enum_width(algebra.atom_count)
    size = algebra.size
    full = algebra.full_mask
    rel = frozenset(pairs)
    below = {a: frozenset(b for x, b in rel if x == a) for a in range(size)}
    above = {c: frozenset(a for a, y in rel if y == c) for c in range(size)}

    ax1 = all(a | b == b for a, b in rel)
    ax2 = (0, 0) in rel
    ax2_prime = (full, full) in rel

    def _ax3():
        for b, c in rel:
            sub = b
            while True:
                rest = full ^ c
                extra = rest
                while True:
                    if (sub, c | extra) not in rel:
                        return False
                    if extra == 0:
                        break
                    extra = (extra - 1) & rest
                if sub == 0:
                    break
                sub = (sub - 1) & b
        return True

    ax3 = _ax3()
    ax4 = all(
        (a, b & c) in rel for a in range(size) for b in below[a] for c in below[a]
    )
    ax4_prime = all(
        (a | b, c) in rel for c in range(size) for a in above[c] for b in above[c]
    )
    ax5 = all(any((a, b) in rel and (b, c) in rel for b in range(size)) for a, c in rel)
    ax6 = all(
        any(b != 0 and (b, a) in rel for b in range(size)) for a in range(1, size)
    )
    ax7 = all((full ^ b, full ^ a) in rel for a, b in rel)
    return WellInsideAxioms(ax1, ax2, ax2_prime, ax3, ax4, ax4_prime, ax5, ax6, ax7)


def contact_from_well_inside(algebra, pairs):
    """Invert interdefinability: a C b iff a is not well inside b*.

    The pairs must satisfy the precontact-defining well-inside axioms;
    the round trip through ``well_inside_pairs`` is the identity.
    """
    report = well_inside_axiom_report(algebra, pairs)
    for tag, okay in (
        ("(<<2)", report.ax2),
        ("(<<2')", report.ax2_prime),
        ("(<<3)", report.ax3),
        ("(<<4)", report.ax4),
        ("(<<4')", report.ax4_prime),
    ):
        if not okay:
            raise AxiomViolationError(tag)
    rel = frozenset(pairs)
    full = algebra.full_mask
    contact = frozenset(
        (a, b)
        for a in range(algebra.size)
        for b in range(algebra.size)
        if (a, full ^ b) not in rel
    )
    return normalize_relation(RawRelation(algebra, contact))


def axiom_report(pca):
    """Flags for (Cref), (Csym), (Ctr), (Ctr#), (Ccon), (C6), all computed
    by quantifying over the whole carrier.

    (Ctr) and (Ctr#) interpolate through the well-inside relation of C
    and of its contact closure; the witness search runs smallest bitmask
    first.
    """
    algebra = pca.algebra
    require_enum_width(algebra.atom_count)
    size = algebra.size
    full = algebra.full_mask
    table = pca.kernel.forward_table()
    sharp_table = contact_closure(pca).kernel.forward_table()

    cref = all(table[a] & a for a in range(1, size))
    csym = all(
        not (table[a] & b) or (table[b] & a) for a in range(size) for b in range(size)
    )

    def interpolates(tab):
        def ll(x, y):
            return not tab[x] & (full ^ y)

        for a in range(size):
            for c in range(size):
                if ll(a, c) and not any(
                    ll(a, b) and ll(b, c) for b in range(size)
                ):
                    return False
        return True

    ctr = interpolates(table)
    ctr_sharp = interpolates(sharp_table)
    ccon = all(
        table[a] & (full ^ a) or table[full ^ a] & a for a in range(1, full)
    )
    c6 = all(
        any(b != 0 and not (table[b] & a) for b in range(size))
        for a in range(size)
        if a != full
    )
    return RelationAxioms(cref, csym, ctr, ctr_sharp, ccon, c6)


@dataclass(frozen=True)
class Clan:
    """A clan stored by its atom support; the member set is the upward
    closure of the support's atoms."""

    algebra: FiniteBooleanAlgebra
    support: frozenset

    def __post_init__(self):
        if not self.support:
            raise PreconditionError("a clan has a nonempty atom support")
        for p in self.support:
            if not 0 <= p < self.algebra.atom_count:
                raise DomainMismatchError(f"atom index {p} out of range")

    @property
    def support_mask(self):
        return mask_of(self.support)

    def contains_mask(self, mask):
        return bool(mask & self.support_mask)

    def member_masks(self):
        smask = self.support_mask
        return frozenset(m for m in range(self.algebra.size) if m & smask)


def clan_supports(pca):
    """Supports of all clans: nonempty atom sets pairwise related under
    the contact-closure kernel, in (size, atoms) order."""
    algebra = pca.algebra
    require_enum_width(algebra.atom_count)
    sharp = contact_closure(pca).kernel.pairs
    out = []
    for m in range(1, algebra.size):
        atoms = tuple(bit_indices(m))
        if all((p, q) in sharp for p in atoms for q in atoms):
            out.append(m)
    out.sort(key=lambda m: (m.bit_count(), tuple(bit_indices(m))))
    return out


def clans(pca):
    return [Clan(pca.algebra, frozenset(bit_indices(m))) for m in clan_supports(pca)]


def is_clan(pca, members):
    """Literal check of the four clan conditions on an explicit element set."""
    algebra = pca.algebra
    require_enum_width(algebra.atom_count)
    masks = frozenset(e.mask if isinstance(e, Element) else e for e in members)
    if not masks or 0 in masks:
        return False
    size = algebra.size
    for m in masks:
        rest = algebra.full_mask ^ m
        extra = rest
        while True:
            if (m | extra) not in masks:
                return False
            if extra == 0:
                break
            extra = (extra - 1) & rest
    for a in range(size):
        for b in range(size):
            if (a | b) in masks and a not in masks and b not in masks:
                return False
    sharp = contact_closure(pca)
    return all(sharp.holds_masks(a, b) for a in masks for b in masks)


def restrict_relation(pca, blocks):
    """The subalgebra generated by a partition of the atoms, with the
    relation cut down to it.  Blocks become the atoms of the result."""
    n = pca.algebra.atom_count
    block_masks = []
    seen = 0
    for block in blocks:
        m = mask_of(block)
        if m == 0 or (m & seen) or m > pca.algebra.full_mask:
            raise DomainMismatchError("blocks must be nonempty, disjoint atom sets")
        seen |= m
        block_masks.append(m)
    if seen != pca.algebra.full_mask:
        raise DomainMismatchError("blocks must cover every atom")
    k = len(block_masks)
    pairs = frozenset(
        (i, j)
        for i in range(k)
        for j in range(k)
        if pca.kernel.holds_masks(block_masks[i], block_masks[j])
    )
    sub = FiniteBooleanAlgebra(k)
    return PrecontactAlgebra(sub, RelationKernel(sub, pairs))


def restrict_clan_support(blocks, support_mask):
    """Image of a clan support under a partition restriction."""
    return frozenset(
        i for i, block in enumerate(blocks) if mask_of(block) & support_mask
    )


@dataclass(frozen=True)
class PcaMorphism:
    """A Boolean hom h with: h(a) C' h(b) implies a C b, for all a, b."""

    hom: BooleanHom
    source: PrecontactAlgebra
    target: PrecontactAlgebra

    def __post_init__(self):
        if self.hom.source != self.source.algebra or self.hom.target != self.target.algebra:
            raise DomainMismatchError("hom does not match the given algebras")
        if not is_pca_morphism(self.hom, self.source, self.target):
            raise PreconditionError("the hom does not reflect the contact relation")


def is_pca_morphism(hom, source_pca, target_pca):
    """Exhaustive check of the reflection condition over all element pairs."""
    if hom.source != source_pca.algebra or hom.target != target_pca.algebra:
        raise DomainMismatchError("hom does not match the given algebras")
    require_enum_width(source_pca.algebra.atom_count)
    size = source_pca.algebra.size
    src_table = source_pca.kernel.forward_table()
    dst_table = target_pca.kernel.forward_table()
    images = [hom.apply_mask(a) for a in range(size)]
    for a in range(size):
        ia = images[a]
        for b in range(size):
            if dst_table[ia] & images[b] and not src_table[a] & b:
                return False
    return True


def is_pca_morphism_on_kernel(hom, source_pca, target_pca):
    """Equivalent kernel-level form: every target kernel pair pulls back
    into the source kernel along the atom map."""
    amap = hom.atom_map
    src = source_pca.kernel.pairs
    return all((amap[p], amap[q]) in src for p, q in target_pca.kernel.pairs)


def pca_morphism(hom, source_pca, target_pca):
    return PcaMorphism(hom, source_pca, target_pca)
