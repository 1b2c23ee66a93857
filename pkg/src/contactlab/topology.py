"""Finite topological spaces, regular closed algebras and point traces.

A finite topology is determined by its singleton closures: a set is
closed exactly when it contains the closure of each of its points.  A
space is therefore stored as the tuple of point-closure masks, which
keeps closure, interior, subspaces and products polynomial; the full
closed-set family is only enumerated on demand, under the point budget.

Point sets are integer bitmasks over the point index, matching the
element encoding of the Boolean side.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .boolean import FiniteBooleanAlgebra, bit_indices
from .config import require_point_budget
from .errors import (
    CapacityError,
    DomainMismatchError,
    PreconditionError,
)

UNION_CLOSURE_CAP = 200_000


@dataclass(frozen=True)
class FiniteSpace:
    """A finite space given by its points and their singleton closures."""

    point_names: tuple
    point_closures: tuple

    def __post_init__(self):
        n = len(self.point_names)
        if len(set(self.point_names)) != n:
            raise PreconditionError("point names must be distinct")
        if len(self.point_closures) != n:
            raise PreconditionError("one closure mask per point required")
        full = (1 << n) - 1
        for x, cl in enumerate(self.point_closures):
            if not 0 <= cl <= full:
                raise DomainMismatchError(f"closure mask of point {x} out of range")
            if not cl >> x & 1:
                raise PreconditionError(f"point {x} missing from its own closure")
        for x in range(n):
            for y in bit_indices(self.point_closures[x]):
                if self.point_closures[y] | self.point_closures[x] != self.point_closures[x]:
                    raise PreconditionError("singleton closures are not transitive")

    @property
    def point_count(self):
        return len(self.point_names)

    @property
    def full_mask(self):
        return (1 << self.point_count) - 1

    def name_set(self, mask):
        return "{" + ",".join(self.point_names[i] for i in bit_indices(mask)) + "}"

    def index_of(self, name):
        return self.point_names.index(name)


def _union_closure(masks):
    family = set(masks)
    frontier = list(family)
    while frontier:
        m = frontier.pop()
        for other in tuple(family):
            u = m | other
            if u not in family:
                family.add(u)
                frontier.append(u)
                if len(family) > UNION_CLOSURE_CAP:
                    raise CapacityError("union closure of the base exploded")
    return family


def space_from_closed_base(point_names, base_masks):
    """Build the space whose closed sets are all intersections of finite
    unions of the base members, plus the empty set and the whole space."""
    names = tuple(point_names)
    n = len(names)
    united = _union_closure(set(base_masks) | {0})
    full = (1 << n) - 1
    closures = []
    for x in range(n):
        acc = full
        for m in united:
            if m >> x & 1:
                acc &= m
        closures.append(acc)
    return FiniteSpace(names, tuple(closures))


def discrete_space(point_names):
    names = tuple(point_names)
    return FiniteSpace(names, tuple(1 << i for i in range(len(names))))


def indiscrete_space(point_names):
    names = tuple(point_names)
    full = (1 << len(names)) - 1
    return FiniteSpace(names, tuple(full for _ in names))


def closure(space, mask):
    out = 0
    for x in bit_indices(mask):
        out |= space.point_closures[x]
    return out


def is_closed(space, mask):
    return closure(space, mask) == mask


def interior(space, mask):
    full = space.full_mask
    return full ^ closure(space, full ^ mask)


def is_open(space, mask):
    return is_closed(space, space.full_mask ^ mask)


def minimal_open(space, x):
    """Smallest open set containing the point: everyone whose closure
    reaches x."""
    return sum(
        1 << y for y in range(space.point_count) if space.point_closures[y] >> x & 1
    )


@lru_cache(maxsize=512)
def closed_sets(space):
    """All closed sets, ascending as masks.  Point-budget bound."""
    require_point_budget(space.point_count)
    out = tuple(
        m for m in range(space.full_mask + 1) if is_closed(space, m)
    )
    return out


def open_sets(space):
    full = space.full_mask
    return tuple(sorted(full ^ m for m in closed_sets(space)))


def clopen_sets(space):
    closed = set(closed_sets(space))
    full = space.full_mask
    return tuple(sorted(m for m in closed if (full ^ m) in closed))


def is_t0(space):
    return len(set(space.point_closures)) == space.point_count


def is_t1(space):
    return all(cl == 1 << x for x, cl in enumerate(space.point_closures))


def is_hausdorff(space):
    # at finite scale Hausdorff collapses to T1 (and then to discrete)
    return is_t1(space)


def is_discrete(space):
    return is_t1(space)


def is_compact(space):
    return True


def is_connected(space):
    """No proper nonempty clopen set; equivalently the undirected
    specialization graph is connected."""
    n = space.point_count
    if n == 0:
        return True
    adj = [0] * n
    for x in range(n):
        for y in bit_indices(space.point_closures[x]):
            adj[x] |= 1 << y
            adj[y] |= 1 << x
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for x in bit_indices(frontier):
            nxt |= adj[x]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == space.full_mask


def is_zero_dimensional(space):
    """Every open set a union of clopens; for finite spaces this means
    every minimal open neighbourhood is clopen."""
    return all(
        is_closed(space, minimal_open(space, x)) for x in range(space.point_count)
    )


def is_stone(space):
    return is_compact(space) and is_hausdorff(space) and is_zero_dimensional(space)


def is_extremally_disconnected(space):
    """Closures of open sets are open.  Enumerates all opens."""
    return all(is_open(space, closure(space, u)) for u in open_sets(space))


def is_closed_base(space, members):
    """Is the family a closed base, i.e. is every closed set an
    intersection of finite unions of members?

    Checked on singleton closures: with the union closure of the family,
    the hull of each cl{x} (and of the empty set) must be exact.
    """
    members = set(members)
    if any(not is_closed(space, m) for m in members):
        return False
    united = _union_closure(members | {0})
    full = space.full_mask
    hull_empty = full
    for m in united:
        hull_empty &= m
    if hull_empty != 0:
        return False
    for x in range(space.point_count):
        target = space.point_closures[x]
        acc = full
        for m in united:
            if target | m == m:
                acc &= m
        if acc != target:
            return False
    return True


@dataclass(frozen=True)
class SpacePredicates:
    is_t0: bool
    is_semiregular: bool
    is_connected: bool
    is_compact: bool
    is_hausdorff: bool
    is_zero_dimensional: bool
    is_stone: bool
    is_extremally_disconnected: bool

    def as_dict(self):
        return {
            "is_T0": self.is_t0,
            "is_semiregular": self.is_semiregular,
            "is_connected": self.is_connected,
            "is_compact": self.is_compact,
            "is_hausdorff": self.is_hausdorff,
            "is_zero_dimensional": self.is_zero_dimensional,
            "is_stone": self.is_stone,
            "is_extremally_disconnected": self.is_extremally_disconnected,
        }


def space_predicates(space):
    return SpacePredicates(
        is_t0=is_t0(space),
        is_semiregular=is_semiregular(space),
        is_connected=is_connected(space),
        is_compact=is_compact(space),
        is_hausdorff=is_hausdorff(space),
        is_zero_dimensional=is_zero_dimensional(space),
        is_stone=is_stone(space),
        is_extremally_disconnected=is_extremally_disconnected(space),
    )


@dataclass(frozen=True)
class RegularClosedAlgebra:
    """The regular closed sets of a space (or a subalgebra of them) with
    the standard operations:

        F + G = F u G,   F . G = cl(int(F n G)),   F* = cl(X \\ F),
        F C G  iff  F n G is nonempty.
    """

    space: FiniteSpace
    members: tuple

    def __post_init__(self):
        for m in self.members:
            if closure(self.space, interior(self.space, m)) != m:
                raise DomainMismatchError(
                    f"{self.space.name_set(m)} is not regular closed"
                )

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return self.space.full_mask

    def join(self, f, g):
        return f | g

    def meet(self, f, g):
        return closure(self.space, interior(self.space, f & g))

    def complement(self, f):
        return closure(self.space, self.space.full_mask ^ f)

    def contact(self, f, g):
        return bool(f & g)

    def atom_masks(self):
        nonzero = [m for m in self.members if m]
        return tuple(
            sorted(
                m
                for m in nonzero
                if not any(other != m and other | m == m for other in nonzero)
            )
        )

    def as_boolean(self):
        """View the member family as an abstract finite Boolean algebra.

        Returns (algebra, atoms, to_member) where atoms[i] is the point
        mask of abstract atom i and to_member sends an element mask to
        its point mask.
        """
        atoms = self.atom_masks()
        if 1 << len(atoms) != len(set(self.members)):
            raise DomainMismatchError("member family is not a Boolean algebra")
        algebra = FiniteBooleanAlgebra(len(atoms))

        def to_member(element_mask):
            out = 0
            for i in bit_indices(element_mask):
                out |= atoms[i]
            return out

        members = set(self.members)
        for m in range(algebra.size):
            if to_member(m) not in members:
                raise DomainMismatchError("member family is not atom-generated")
        return algebra, atoms, to_member


@lru_cache(maxsize=512)
def rc_members(space):
    """All regular closed sets: closures of open sets, deduplicated."""
    return tuple(sorted({closure(space, u) for u in open_sets(space)}))


def rc_algebra(space):
    return RegularClosedAlgebra(space, rc_members(space))


def is_semiregular(space):
    return is_closed_base(space, rc_members(space))


def subspace(space, mask):
    """Trace topology: singleton closures intersected with the subset."""
    indices = list(bit_indices(mask))
    position = {x: i for i, x in enumerate(indices)}
    names = tuple(space.point_names[x] for x in indices)
    closures = []
    for x in indices:
        local = 0
        for y in bit_indices(space.point_closures[x] & mask):
            local |= 1 << position[y]
        closures.append(local)
    return FiniteSpace(names, tuple(closures))


def embed_subspace_mask(space, subset_mask, local_mask):
    indices = list(bit_indices(subset_mask))
    out = 0
    for i in bit_indices(local_mask):
        out |= 1 << indices[i]
    return out


def restrict_to_subspace_mask(subset_mask, global_mask):
    out = 0
    for i, x in enumerate(bit_indices(subset_mask)):
        if global_mask >> x & 1:
            out |= 1 << i
    return out


@dataclass(frozen=True)
class TopologicalPair:
    """A space with a dense subset of its points."""

    space: FiniteSpace
    subset: int

    def __post_init__(self):
        if not 0 <= self.subset <= self.space.full_mask:
            raise DomainMismatchError("subset mask out of range")
        if closure(self.space, self.subset) != self.space.full_mask:
            raise PreconditionError("the subset is not dense")

    @property
    def dense_part(self):
        return subspace(self.space, self.subset)


@lru_cache(maxsize=1024)
def clopens_of_subset(space, subset):
    """Clopen subsets of the subspace on ``subset``, kept in the ambient
    point indexing.  Enumerates 2**|subset| candidates."""
    require_point_budget(subset.bit_count())
    out = []
    members = [0]
    for x in bit_indices(subset):
        members = members + [m | (1 << x) for m in members]
    for m in members:
        if closure(space, m) & subset != m:
            continue
        rest = subset ^ m
        if closure(space, rest) & subset != rest:
            continue
        out.append(m)
    return tuple(sorted(out))


def rc_members_of_subset(space, subset):
    return tuple(sorted({closure(space, f) for f in clopens_of_subset(space, subset)}))


def pair_clopens(pair):
    return clopens_of_subset(pair.space, pair.subset)


def rc_pair_members(pair):
    """Closures of the clopens of the dense part: the pair's regular
    closed algebra."""
    return rc_members_of_subset(pair.space, pair.subset)


def rc_pair_algebra(pair):
    return RegularClosedAlgebra(pair.space, rc_pair_members(pair))


def delta_contact(pair, f, g):
    """Proximity of clopens of the dense part: closures meet in the
    ambient space."""
    return bool(closure(pair.space, f) & closure(pair.space, g))


def restrict_regular_closed(pair, f):
    """RC(X) -> RC(X0), F |-> F n X0; inverse of extend_regular_closed."""
    if closure(pair.space, interior(pair.space, f)) != f:
        raise DomainMismatchError("input is not regular closed in the space")
    return f & pair.subset


def extend_regular_closed(pair, g):
    """RC(X0) -> RC(X), G |-> cl(G) taken in the ambient space."""
    sub = pair.dense_part
    local = restrict_to_subspace_mask(pair.subset, g)
    if g & ~pair.subset:
        raise DomainMismatchError("input is not a subset of the dense part")
    if closure(sub, interior(sub, local)) != local:
        raise DomainMismatchError("input is not regular closed in the dense part")
    return closure(pair.space, g)


def point_trace(members, x):
    """The members containing the point (sigma trace)."""
    return frozenset(m for m in members if m >> x & 1)


def interior_trace(space, members, x):
    """The members whose interior contains the point (nu trace); always a
    filter inside the sigma trace."""
    return frozenset(m for m in members if interior(space, m) >> x & 1)


def closure_trace(pair, x):
    """The clopens of the dense part whose ambient closure contains the
    point (the Gamma trace)."""
    return frozenset(
        f
        for f in clopens_of_subset(pair.space, pair.subset)
        if closure(pair.space, f) >> x & 1
    )


def is_u_point(space, x):
    """Membership in two closures of opens forces membership in the
    closure of their intersection.  Quantifies over all open pairs."""
    opens = open_sets(space)
    reaching = [u for u in opens if closure(space, u) >> x & 1]
    for u in reaching:
        for v in reaching:
            if not closure(space, u & v) >> x & 1:
                return False
    return True


@dataclass(frozen=True)
class MereotopologicalPair:
    """A space with a chosen Boolean subalgebra of its regular closed sets."""

    space: FiniteSpace
    members: tuple

    def __post_init__(self):
        rc = RegularClosedAlgebra(self.space, self.members)  # validates regularity
        family = set(self.members)
        if 0 not in family or self.space.full_mask not in family:
            raise PreconditionError("the subalgebra must contain 0 and 1")
        for f in self.members:
            if rc.complement(f) not in family:
                raise PreconditionError("subalgebra not closed under complement")
            for g in self.members:
                if (f | g) not in family or rc.meet(f, g) not in family:
                    raise PreconditionError("subalgebra not closed under join/meet")

    @property
    def algebra(self):
        return RegularClosedAlgebra(self.space, self.members)


def u_point_of_pair(mereo, x):
    """u-point of (X, B): x in F n G forces x in cl(int(F n G)) for all
    members F, G."""
    space = mereo.space
    for f in mereo.members:
        if not f >> x & 1:
            continue
        for g in mereo.members:
            if g >> x & 1 and not closure(space, interior(space, f & g)) >> x & 1:
                return False
    return True


def is_c_semiregular(space):
    """Semiregular T0 space where every clan of the regular closed
    contact algebra is the sigma trace of a point."""
    from .precontact import PrecontactAlgebra, RelationKernel, clans

    if not is_t0(space) or not is_semiregular(space):
        return False
    rc = rc_algebra(space)
    algebra, atoms, _ = rc.as_boolean()
    if algebra.is_degenerate:
        return space.point_count == 0
    pairs = frozenset(
        (i, j)
        for i in range(len(atoms))
        for j in range(len(atoms))
        if atoms[i] & atoms[j]
    )
    pca = PrecontactAlgebra(algebra, RelationKernel(algebra, pairs))
    traces = {
        frozenset(point_trace(rc.members, x)) for x in range(space.point_count)
    }
    for clan in clans(pca):
        realized = frozenset(
            m for m in rc.members if any(atoms[i] | m == m for i in clan.support)
        )
        if realized not in traces:
            return False
    return True
