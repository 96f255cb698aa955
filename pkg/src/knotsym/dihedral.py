"""Products of two odd dihedral groups and classification of their subgroups.

The product acts on 2m points: the left factor on 1..m, the right factor on
m+1..2m (1-indexed).  Classification follows the reflection-parity
homomorphism into Z2 x Z2: branch on the image and on the kernel's shape,
recovering one of ten abstract family tags with odd parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import DomainError, VerificationError
from .groups import PermGroup, enumerate_subgroups, isomorphic
from .perms import Permutation


class Family(str, Enum):
    TRIVIAL = "TRIVIAL"
    Z2 = "Z2"
    ZR = "Zr"
    Z2R = "Z2r"
    D2 = "D2"
    DR = "Dr"
    D2R = "D2r"
    ZRXZS = "ZrxZs"
    DRXZS = "DrxZs"
    DRXDS = "DrxDs"
    SEMIDIRECT = "SemidirectZrZsZ2"


LEMMA_FAMILIES = (
    Family.Z2,
    Family.ZR,
    Family.Z2R,
    Family.D2,
    Family.DR,
    Family.D2R,
    Family.ZRXZS,
    Family.DRXZS,
    Family.DRXDS,
    Family.SEMIDIRECT,
)


def _family_order(family: Family, r: int | None, s: int | None) -> int:
    return {
        Family.TRIVIAL: 1,
        Family.Z2: 2,
        Family.ZR: r,
        Family.Z2R: 2 * r if r else None,
        Family.D2: 4,
        Family.DR: 2 * r if r else None,
        Family.D2R: 4 * r if r else None,
        Family.ZRXZS: r * s if r and s else None,
        Family.DRXZS: 2 * r * s if r and s else None,
        Family.DRXDS: 4 * r * s if r and s else None,
        Family.SEMIDIRECT: 2 * r * s if r and s else None,
    }[family]


@dataclass(frozen=True)
class GroupClassification:
    family: Family
    r: int | None
    s: int | None
    order: int
    swapped_factors: bool

    def __post_init__(self):
        expected = _family_order(self.family, self.r, self.s)
        if expected != self.order:
            raise VerificationError(
                f"family {self.family.value} with r={self.r}, s={self.s} has order {expected}, got {self.order}"
            )


def _block_cycle(points: list[int], degree: int) -> Permutation:
    images = list(range(degree))
    for a, b in zip(points, points[1:] + points[:1]):
        images[a] = b
    return Permutation(tuple(images))


def _block_reflection(points: list[int], degree: int) -> Permutation:
    # Fixes points[0]; reverses the rest of the cycle.
    k = len(points)
    images = list(range(degree))
    for i, p in enumerate(points):
        images[p] = points[(k - i) % k]
    return Permutation(tuple(images))


def dihedral_group(k: int, offset: int = 0, degree: int | None = None) -> PermGroup:
    """D_k acting naturally on the k points offset..offset+k-1."""
    if k < 3:
        raise DomainError("bad_parameter", f"dihedral group needs k >= 3, got {k}")
    if degree is None:
        degree = offset + k
    points = list(range(offset, offset + k))
    return PermGroup.generate(
        [_block_cycle(points, degree), _block_reflection(points, degree)], degree=degree
    )


def cyclic_group(k: int, offset: int = 0, degree: int | None = None) -> PermGroup:
    if k < 1:
        raise DomainError("bad_parameter", f"cyclic group needs k >= 1, got {k}")
    if degree is None:
        degree = max(offset + k, 1)
    if k == 1:
        return PermGroup.trivial(degree)
    points = list(range(offset, offset + k))
    return PermGroup.generate([_block_cycle(points, degree)], degree=degree)


@dataclass(frozen=True)
class DihedralProduct:
    m: int
    group: PermGroup

    @property
    def degree(self) -> int:
        return 2 * self.m

    def left_part(self, p: Permutation) -> tuple[int, ...]:
        return p.images[: self.m]

    def right_part(self, p: Permutation) -> tuple[int, ...]:
        return tuple(x - self.m for x in p.images[self.m :])

    def generators_named(self) -> dict[str, Permutation]:
        lrot = _block_cycle(list(range(self.m)), self.degree)
        lref = _block_reflection(list(range(self.m)), self.degree)
        rrot = _block_cycle(list(range(self.m, self.degree)), self.degree)
        rref = _block_reflection(list(range(self.m, self.degree)), self.degree)
        return {"left_rotation": lrot, "left_reflection": lref, "right_rotation": rrot, "right_reflection": rref}

    def swap_blocks(self, p: Permutation) -> Permutation:
        """Conjugate by the block interchange, swapping the two factors."""
        m = self.m
        images = [0] * self.degree
        for x in range(self.degree):
            y = p.images[(x + m) % self.degree]
            images[x] = (y + m) % self.degree
        return Permutation(tuple(images))


def build_dihedral_product(m: int, cap: int = 1_000_000) -> DihedralProduct:
    if m < 3 or m % 2 == 0:
        raise DomainError("bad_parameter", f"m must be odd and at least 3, got {m}")
    if 4 * m * m > cap:
        raise DomainError("cap_exceeded", f"order 4m^2 = {4 * m * m} exceeds cap {cap}")
    degree = 2 * m
    gens = [
        _block_cycle(list(range(m)), degree),
        _block_reflection(list(range(m)), degree),
        _block_cycle(list(range(m, degree)), degree),
        _block_reflection(list(range(m, degree)), degree),
    ]
    group = PermGroup.generate(gens, degree=degree, cap=cap)
    if group.order != 4 * m * m:
        raise VerificationError(f"dihedral product of m={m} has order {group.order}, expected {4 * m * m}")
    return DihedralProduct(m, group)


@lru_cache(maxsize=None)
def _rotation_images(m: int) -> frozenset[tuple[int, ...]]:
    return frozenset(tuple((x + shift) % m for x in range(m)) for shift in range(m))


def sigma(dp: DihedralProduct, p: Permutation) -> tuple[int, int]:
    """Reflection-parity of each coordinate: 1 for a reflection, 0 for a rotation."""
    if p not in dp.group:
        raise DomainError("not_in_group", "permutation is not in the dihedral product")
    rotations = _rotation_images(dp.m)
    left = 0 if dp.left_part(p) in rotations else 1
    right = 0 if dp.right_part(p) in rotations else 1
    return (left, right)


def _kernel_sides(dp: DihedralProduct, kernel: list[Permutation]) -> tuple[int, int]:
    """Orders of the left-only and right-only parts of a split kernel."""
    ident_left = tuple(range(dp.m))
    ident_right = tuple(range(dp.m))
    left_only = [h for h in kernel if dp.right_part(h) == ident_right]
    right_only = [h for h in kernel if dp.left_part(h) == ident_left]
    if len(left_only) * len(right_only) != len(kernel):
        raise VerificationError("kernel does not split coordinate-wise as the proof requires")
    return len(left_only), len(right_only)


def _kernel_rank(kernel: list[Permutation]) -> int:
    if len(kernel) == 1:
        return 0
    target = set(kernel)
    for h in kernel:
        powers = {h}
        x = h
        while not x.is_identity():
            x = x * h
            powers.add(x)
        if powers == target:
            return 1
    return 2


def _invariant_factors(kernel: list[Permutation]) -> tuple[int, int]:
    order = len(kernel)
    exponent = max(h.order() for h in kernel)
    return exponent, order // exponent


def classify_subgroup(dp: DihedralProduct, g: PermGroup) -> GroupClassification:
    """Classify a subgroup of the product into its abstract family tag."""
    if not g.is_subgroup_of(dp.group):
        raise DomainError("not_subgroup", "g is not a subgroup of the dihedral product")
    signature = {sigma(dp, p) for p in g.elements}
    swapped = False
    if signature == {(0, 0), (0, 1)}:
        # Normalize to the proof's form: the reflection factor on the left.
        swapped = True
        g = PermGroup.from_elements(dp.degree, frozenset(dp.swap_blocks(p) for p in g.elements))
        signature = {(0, 0), (1, 0)}
    kernel = [p for p in g.elements if sigma(dp, p) == (0, 0)]
    korder = len(kernel)

    if signature == {(0, 0)}:
        rank = _kernel_rank(kernel)
        if rank == 0:
            return GroupClassification(Family.TRIVIAL, None, None, g.order, swapped)
        if rank == 1:
            return GroupClassification(Family.ZR, korder, None, g.order, swapped)
        r, s = _invariant_factors(kernel)
        return GroupClassification(Family.ZRXZS, r, s, g.order, swapped)

    if signature == {(0, 0), (1, 1)}:
        rank = _kernel_rank(kernel)
        if rank == 0:
            return GroupClassification(Family.Z2, None, None, g.order, swapped)
        if rank == 1:
            return GroupClassification(Family.DR, korder, None, g.order, swapped)
        r, s = _invariant_factors(kernel)
        return GroupClassification(Family.SEMIDIRECT, r, s, g.order, swapped)

    if signature == {(0, 0), (1, 0)}:
        if korder == 1:
            return GroupClassification(Family.Z2, None, None, g.order, swapped)
        left, right = _kernel_sides(dp, kernel)
        if left == 1:
            return GroupClassification(Family.Z2R, right, None, g.order, swapped)
        if right == 1:
            return GroupClassification(Family.DR, left, None, g.order, swapped)
        return GroupClassification(Family.DRXZS, left, right, g.order, swapped)

    # Full image: reflections on both coordinates independently.
    if korder == 1:
        return GroupClassification(Family.D2, None, None, g.order, swapped)
    left, right = _kernel_sides(dp, kernel)
    if left == 1 or right == 1:
        return GroupClassification(Family.D2R, max(left, right), None, g.order, swapped)
    if left < right:
        left, right = right, left
        swapped = True
    return GroupClassification(Family.DRXDS, left, right, g.order, swapped)


def reference_group(family: Family, r: int | None = None, s: int | None = None) -> PermGroup:
    """A concrete permutation group of the named abstract type."""
    if family is Family.TRIVIAL:
        return PermGroup.trivial(1)
    if family is Family.Z2:
        return cyclic_group(2)
    if family is Family.ZR:
        return cyclic_group(r)
    if family is Family.Z2R:
        return cyclic_group(2 * r)
    if family is Family.D2:
        return PermGroup.generate(
            [Permutation((1, 0, 2, 3)), Permutation((0, 1, 3, 2))], degree=4
        )
    if family is Family.DR:
        return dihedral_group(r)
    if family is Family.D2R:
        return dihedral_group(2 * r)
    degree = r + s
    left_rot = _block_cycle(list(range(r)), degree)
    right_rot = _block_cycle(list(range(r, degree)), degree)
    if family is Family.ZRXZS:
        return PermGroup.generate([left_rot, right_rot], degree=degree)
    if family is Family.DRXZS:
        left_ref = _block_reflection(list(range(r)), degree)
        return PermGroup.generate([left_rot, left_ref, right_rot], degree=degree)
    if family is Family.DRXDS:
        left_ref = _block_reflection(list(range(r)), degree)
        right_ref = _block_reflection(list(range(r, degree)), degree)
        return PermGroup.generate([left_rot, left_ref, right_rot, right_ref], degree=degree)
    if family is Family.SEMIDIRECT:
        both_ref = _block_reflection(list(range(r)), degree) * _block_reflection(list(range(r, degree)), degree)
        return PermGroup.generate([left_rot, right_rot, both_ref], degree=degree)
    raise DomainError("bad_family", f"unknown family {family}")


@dataclass(frozen=True)
class ClassificationReport:
    m: int
    subgroup_count: int
    census: tuple[tuple[str, int], ...]
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_classification(dp: DihedralProduct, cap: int = 2000) -> ClassificationReport:
    """Sweep every subgroup: classify, rebuild the family as a reference group,
    and demand oracle isomorphism.  The census counts family tags."""
    subs = enumerate_subgroups(dp.group, cap=cap)
    census: dict[str, int] = {}
    mismatches: list[str] = []
    for sub in subs:
        cls = classify_subgroup(dp, sub)
        census[cls.family.value] = census.get(cls.family.value, 0) + 1
        ref = reference_group(cls.family, cls.r, cls.s)
        if not isomorphic(sub, ref, cap=cap):
            gens = ", ".join(p.cycle_string() for p in sub.small_generating_set())
            mismatches.append(f"subgroup <{gens}> of order {sub.order} misclassified as {cls.family.value}")
        if sub.order > 1 and cls.family not in LEMMA_FAMILIES:
            mismatches.append(f"non-trivial subgroup tagged outside the ten families: {cls.family.value}")
        for param in (cls.r, cls.s):
            if param is not None and (param < 3 or param % 2 == 0):
                mismatches.append(f"parameter {param} not odd >= 3 for family {cls.family.value}")
    return ClassificationReport(dp.m, len(subs), tuple(sorted(census.items())), tuple(mismatches))
