"""Maps between carriers and proximal continuity checks."""
from __future__ import annotations

from dataclasses import dataclass

from .axioms import AxiomReport
from .relations import ProximityRelation
from .spaces import FiniteSpace, bits

PCONT_SCAN_CAP = 8


@dataclass(frozen=True)
class SpaceMap:
    """A function between carriers given by its element images."""

    domain: FiniteSpace
    codomain: FiniteSpace
    images: tuple[int, ...]
    name: str = ""

    def __post_init__(self) -> None:
        if len(self.images) != self.domain.size:
            raise ValueError(
                f"map needs {self.domain.size} images, got {len(self.images)}"
            )
        for i, img in enumerate(self.images):
            if not 0 <= img < self.codomain.size:
                raise ValueError(f"image of element {i} out of range: {img}")

    def apply(self, i: int) -> int:
        return self.images[i]

    def image_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= 1 << self.images[i]
        return out

    def is_bijective(self) -> bool:
        return self.domain.size == self.codomain.size and len(set(self.images)) == len(
            self.images
        )

    def inverse(self) -> "SpaceMap":
        if not self.is_bijective():
            raise ValueError("only bijections can be inverted")
        inv = [0] * self.codomain.size
        for i, img in enumerate(self.images):
            inv[img] = i
        return SpaceMap(self.codomain, self.domain, tuple(inv), f"{self.name}^-1")


def identity_map(space: FiniteSpace, name: str = "id") -> SpaceMap:
    return SpaceMap(space, space, tuple(range(space.size)), name)


def constant_map(domain: FiniteSpace, codomain: FiniteSpace, target: int) -> SpaceMap:
    return SpaceMap(domain, codomain, (target,) * domain.size, f"const_{target}")


def compose(f: SpaceMap, g: SpaceMap) -> SpaceMap:
    """Apply f first, then g."""
    if f.codomain != g.domain:
        raise ValueError(
            f"cannot compose: codomain {f.codomain.labels} != domain {g.domain.labels}"
        )
    images = tuple(g.images[i] for i in f.images)
    return SpaceMap(f.domain, g.codomain, images, f"{g.name}.{f.name}")


def all_image_masks(f: SpaceMap) -> list[int]:
    """Image mask of every subset of the domain, indexed by subset mask."""
    m = f.domain.n_subsets
    out = [0] * m
    for mask in range(1, m):
        low = mask & -mask
        out[mask] = out[mask ^ low] | (1 << f.images[low.bit_length() - 1])
    return out


def check_pcont(
    f: SpaceMap,
    rel1: ProximityRelation,
    rel2: ProximityRelation,
    *,
    max_size: int = PCONT_SCAN_CAP,
    key: str = "pcont",
) -> AxiomReport:
    """Pass iff every near pair maps to a near pair of images."""
    if f.domain != rel1.space or f.codomain != rel2.space:
        raise ValueError("map endpoints do not match the relation carriers")
    if f.domain.size > max_size:
        raise ValueError(
            f"pcont scan on a {f.domain.size}-element carrier exceeds the cap"
            f" {max_size}; pass max_size={f.domain.size} to run it anyway"
        )
    img = all_image_masks(f)
    for a, row in enumerate(rel1.rows):
        for b in bits(row):
            if not rel2.near(img[a], img[b]):
                return AxiomReport({key: False}, {key: (a, b)})
    return AxiomReport({key: True})


def check_proximal_isomorphism(
    f: SpaceMap,
    rel1: ProximityRelation,
    rel2: ProximityRelation,
    *,
    max_size: int = PCONT_SCAN_CAP,
) -> AxiomReport:
    """Bijective, proximally continuous, with proximally continuous inverse.

    A non-bijective map is reported through the ``bijective`` verdict; the
    ``inverse_pcont`` verdict is omitted since no inverse exists to test.
    """
    verdicts: dict[str, bool] = {}
    witnesses: dict[str, tuple[int, ...]] = {}
    bijective = f.is_bijective()
    verdicts["bijective"] = bijective
    if not bijective:
        seen: dict[int, int] = {}
        for i, img in enumerate(f.images):
            if img in seen:
                witnesses["bijective"] = (1 << seen[img], 1 << i)
                break
            seen[img] = i

    forward = check_pcont(f, rel1, rel2, max_size=max_size)
    verdicts["pcont"] = forward.verdicts["pcont"]
    if "pcont" in forward.witnesses:
        witnesses["pcont"] = forward.witnesses["pcont"]

    if bijective:
        backward = check_pcont(f.inverse(), rel2, rel1, max_size=max_size)
        verdicts["inverse_pcont"] = backward.verdicts["pcont"]
        if "pcont" in backward.witnesses:
            witnesses["inverse_pcont"] = backward.witnesses["pcont"]

    return AxiomReport(verdicts, witnesses)
