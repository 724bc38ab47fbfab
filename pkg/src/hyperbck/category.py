"""Concrete categorical constructions: terminal object, products, equalizers,
coequalizers via regular congruences, and pullbacks.

Every construction returns the built object together with its legs, and
*verifies* the guarantees it is supposed to satisfy (legs are fuzzy
homomorphisms, agreement sets are closed, the meet of congruences is
regular).  A failed guarantee raises :class:`ClaimViolation` with a
witness instead of returning a silently wrong object: at desk scale these
checks double as an instrument for finding counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iter_product
from typing import Iterator, Sequence

from .core import (
    Carrier,
    ClaimViolation,
    HyperBCK,
    InputError,
    hk_axioms_hold_raw,
    iter_bits,
    trivial_algebra,
)
from .fuzzy import FuzzyHyperBCK
from .morphisms import Hom, is_fuzzy_hom, is_hom

DEFAULT_CONGRUENCE_BOUND = 5


@dataclass(frozen=True, slots=True)
class Congruence:
    """An equivalence partition of a carrier, in canonical block order.

    Blocks are sorted tuples of indices, ordered by least element.
    Regularity (the quotient hyperoperation is representative-independent
    and the quotient satisfies the axioms) is checked, never assumed.
    """

    base: HyperBCK
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen = sorted(i for block in self.blocks for i in block)
        if seen != list(range(len(self.base.carrier))):
            raise InputError("blocks must partition the carrier")
        if any(tuple(sorted(b)) != b for b in self.blocks) or list(self.blocks) != sorted(
            self.blocks, key=lambda b: b[0]
        ):
            raise InputError("blocks must be sorted and ordered by least element")

    @classmethod
    def from_blocks(cls, base: HyperBCK, blocks: Sequence[Sequence[int]]) -> Congruence:
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        return cls(base, canon)

    @classmethod
    def from_label_blocks(cls, base: HyperBCK, blocks: Sequence[Sequence[str]]) -> Congruence:
        return cls.from_blocks(
            base, [[base.carrier.index(lab) for lab in block] for block in blocks]
        )

    def block_of(self, i: int) -> int:
        for b, block in enumerate(self.blocks):
            if i in block:
                return b
        raise InputError(f"element index {i} out of range")

    def relates(self, i: int, j: int) -> bool:
        return self.block_of(i) == self.block_of(j)

    def label_blocks(self) -> tuple[frozenset[str], ...]:
        labels = self.base.carrier.labels
        return tuple(frozenset(labels[i] for i in block) for block in self.blocks)


def _element_to_block(cong: Congruence) -> list[int]:
    out = [0] * len(cong.base.carrier)
    for b, block in enumerate(cong.blocks):
        for i in block:
            out[i] = b
    return out


def _quotient_cells(cong: Congruence) -> tuple[tuple[int, ...], list[int]] | None:
    """Block-level table, or None if it depends on representatives."""
    alg = cong.base
    n = len(alg.carrier)
    to_block = _element_to_block(cong)
    m = len(cong.blocks)
    cells = [0] * (m * m)
    for bi, bx in enumerate(cong.blocks):
        for bj, by in enumerate(cong.blocks):
            value: int | None = None
            for x in bx:
                for y in by:
                    mask = 0
                    for t in iter_bits(alg.cell(x, y)):
                        mask |= 1 << to_block[t]
                    if value is None:
                        value = mask
                    elif value != mask:
                        return None
            cells[bi * m + bj] = value  # type: ignore[assignment]
    return tuple(cells), to_block


def is_regular_congruence(cong: Congruence) -> bool:
    """Representative-independent quotient that again satisfies the axioms."""
    built = _quotient_cells(cong)
    if built is None:
        return False
    cells, to_block = built
    return hk_axioms_hold_raw(len(cong.blocks), to_block[cong.base.zero], cells)


def quotient(cong: Congruence) -> tuple[HyperBCK, Hom]:
    """The quotient algebra and its canonical surjection.

    Block labels are the bracketed label of the least member, e.g. ``[O]``.
    """
    built = _quotient_cells(cong)
    if built is None:
        raise InputError("congruence is not regular: quotient cells are ambiguous")
    cells, to_block = built
    base_labels = cong.base.carrier.labels
    labels = tuple(f"[{base_labels[block[0]]}]" for block in cong.blocks)
    alg = HyperBCK(Carrier(labels, to_block[cong.base.zero]), cells)
    return alg, Hom(cong.base, alg, tuple(to_block))


def _partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All set partitions of range(n) via restricted growth strings, in order."""
    rgs = [0] * n

    def rec(i: int, maxval: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(maxval + 1)]
            for elem, b in enumerate(rgs):
                blocks[b].append(elem)
            yield tuple(tuple(b) for b in blocks)
            return
        for v in range(maxval + 2):
            rgs[i] = v
            yield from rec(i + 1, max(maxval, v))

    if n:
        yield from rec(1, 0)


@lru_cache(maxsize=None)
def enumerate_regular_congruences(
    alg: HyperBCK, max_size: int = DEFAULT_CONGRUENCE_BOUND
) -> tuple[Congruence, ...]:
    """All regular congruences of a small algebra, in partition order."""
    n = len(alg.carrier)
    if n > max_size:
        raise InputError(
            f"carrier size {n} exceeds the congruence enumeration bound {max_size}; "
            f"partition counts grow too fast beyond it"
        )
    out = []
    for blocks in _partitions(n):
        cong = Congruence(alg, blocks)
        if is_regular_congruence(cong):
            out.append(cong)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class ConstructionResult:
    """A constructed object with named legs and provenance.

    For coequalizers the congruence that was quotiented by is attached.
    """

    object: FuzzyHyperBCK
    legs: dict[str, Hom]
    kind: str
    inputs: tuple
    congruence: Congruence | None = None


def terminal() -> FuzzyHyperBCK:
    """The one-element structure with membership zero."""
    return FuzzyHyperBCK(trivial_algebra("O"), (Fraction(0),))


def terminal_map(src: HyperBCK) -> Hom:
    """The unique map into the one-element algebra (always a homomorphism)."""
    return Hom(src, terminal().alg, (0,) * len(src.carrier))


def _verify_leg(
    name: str, leg: Hom, src: FuzzyHyperBCK, dst: FuzzyHyperBCK, kind: str
) -> None:
    if not is_hom(leg) or not is_fuzzy_hom(leg, src, dst):
        raise ClaimViolation(
            f"{kind}-leg-fuzzy-hom", leg.as_label_map(), f"leg {name} of {kind} is not a fuzzy hom"
        )


def product(factors: Sequence[FuzzyHyperBCK]) -> ConstructionResult:
    """Finite product: tuple carrier, componentwise cells, min membership.

    The cell of two tuples is the full componentwise set
    ``{t : t_i in x_i * y_i}``, the choice under which every projection is
    a homomorphism.  Membership of a tuple is the minimum over components.
    """
    if not factors:
        raise InputError("product needs at least one factor; see terminal()")
    algs = [f.alg for f in factors]
    sizes = [len(a.carrier) for a in algs]
    tuples = list(iter_product(*(range(s) for s in sizes)))
    index_of = {t: i for i, t in enumerate(tuples)}
    labels = tuple("|".join(a.carrier.labels[c] for a, c in zip(algs, t)) for t in tuples)
    zero = index_of[tuple(a.zero for a in algs)]
    n = len(tuples)
    table = [0] * (n * n)
    for xi, xt in enumerate(tuples):
        for yi, yt in enumerate(tuples):
            component_cells = [
                list(iter_bits(a.cell(xc, yc))) for a, xc, yc in zip(algs, xt, yt)
            ]
            mask = 0
            for combo in iter_product(*component_cells):
                mask |= 1 << index_of[combo]
            table[xi * n + yi] = mask
    alg = HyperBCK(Carrier(labels, zero), tuple(table))
    mu = tuple(min(f.mu[c] for f, c in zip(factors, t)) for t in tuples)
    obj = FuzzyHyperBCK(alg, mu)
    legs = {}
    for i, factor in enumerate(factors):
        leg = Hom(alg, factor.alg, tuple(t[i] for t in tuples))
        _verify_leg(f"p{i}", leg, obj, factor, "product")
        legs[f"p{i}"] = leg
    return ConstructionResult(obj, legs, "product", tuple(factors))


def mediate_product(
    result: ConstructionResult, source: FuzzyHyperBCK, cone: Sequence[Hom]
) -> Hom:
    """The tupling map induced by a cone, verified to be the mediating hom.

    The tupling is the only map satisfying the projection equations, so
    uniqueness is structural; what can fail is the map being a
    homomorphism at all, which is surfaced as a claim violation.
    """
    if result.kind != "product":
        raise InputError("mediate_product needs a product construction result")
    factors: tuple[FuzzyHyperBCK, ...] = result.inputs
    if len(cone) != len(factors):
        raise InputError("cone must have one leg per factor")
    for q, factor in zip(cone, factors):
        if q.source != source.alg or q.target != factor.alg:
            raise InputError("cone leg endpoints do not match")
        if not is_fuzzy_hom(q, source, factor):
            raise InputError("cone legs must be fuzzy homomorphisms")

    prod_alg = result.object.alg
    sizes = [len(f.alg.carrier) for f in factors]
    strides = [1] * len(sizes)
    for i in range(len(sizes) - 2, -1, -1):
        strides[i] = strides[i + 1] * sizes[i + 1]
    mapping = tuple(
        sum(q.mapping[x] * s for q, s in zip(cone, strides))
        for x in range(len(source.alg.carrier))
    )
    phi = Hom(source.alg, prod_alg, mapping)
    for i, q in enumerate(cone):
        if phi.then(result.legs[f"p{i}"]) != q:
            raise ClaimViolation("product-mediator-equations", phi.as_label_map())
    if not is_hom(phi):
        raise ClaimViolation(
            "product-mediator-hom",
            phi.as_label_map(),
            "the tupling map of the cone is not a homomorphism, "
            "so no mediating morphism exists for this cone",
        )
    if not is_fuzzy_hom(phi, source, result.object):
        raise ClaimViolation("product-mediator-fuzzy", phi.as_label_map())
    return phi


def equalizer(
    f: Hom, g: Hom, src: FuzzyHyperBCK, dst: FuzzyHyperBCK
) -> ConstructionResult:
    """The agreement subalgebra with its inclusion leg.

    Raises a claim violation when the agreement set is not closed under
    the operation; such instances exist and refute the construction.
    """
    _check_parallel(f, g, src, dst)
    n = len(src.alg.carrier)
    k_mask = 0
    for i in range(n):
        if f.mapping[i] == g.mapping[i]:
            k_mask |= 1 << i
    labels = src.alg.carrier.labels
    for x in iter_bits(k_mask):
        for y in iter_bits(k_mask):
            stray = src.alg.cell(x, y) & ~k_mask
            if stray:
                t = next(iter_bits(stray))
                raise ClaimViolation(
                    "equalizer-closed",
                    (labels[x], labels[y], labels[t]),
                    "agreement set of the parallel pair is not closed: "
                    f"{labels[t]} in {labels[x]}*{labels[y]} escapes it",
                )
    obj = src.restrict_mask(k_mask)
    include = Hom(obj.alg, src.alg, tuple(iter_bits(k_mask)))
    _verify_leg("include", include, obj, src, "equalizer")
    if include.then(f) != include.then(g):
        raise ClaimViolation("equalizer-commutes", include.as_label_map())
    return ConstructionResult(obj, {"include": include}, "equalizer", (f, g, src, dst))


def _check_parallel(f: Hom, g: Hom, src: FuzzyHyperBCK, dst: FuzzyHyperBCK) -> None:
    if f.source != src.alg or g.source != src.alg or f.target != dst.alg or g.target != dst.alg:
        raise InputError("maps are not a parallel pair on the given structures")
    for h in (f, g):
        if not is_fuzzy_hom(h, src, dst):
            raise InputError("both maps must be fuzzy homomorphisms")


def partition_meet(congs: Sequence[Congruence]) -> Congruence:
    """Blockwise intersection: relates x,y iff every congruence does."""
    if not congs:
        raise InputError("meet of an empty family is undefined")
    base = congs[0].base
    n = len(base.carrier)
    keys: dict[tuple[int, ...], list[int]] = {}
    for i in range(n):
        key = tuple(c.block_of(i) for c in congs)
        keys.setdefault(key, []).append(i)
    return Congruence.from_blocks(base, list(keys.values()))


def coequalizer(
    f: Hom,
    g: Hom,
    src: FuzzyHyperBCK,
    dst: FuzzyHyperBCK,
    max_congruence_size: int = DEFAULT_CONGRUENCE_BOUND,
) -> ConstructionResult:
    """Quotient of the target by the meet of all coequalizing regular congruences.

    Membership of a block is the maximum over its members.  The meet is
    verified to be regular; a failure is a claim violation with the
    partition as witness.
    """
    _check_parallel(f, g, src, dst)
    regs = enumerate_regular_congruences(dst.alg, max_congruence_size)
    family = [
        theta
        for theta in regs
        if all(theta.relates(f.mapping[i], g.mapping[i]) for i in range(len(f.mapping)))
    ]
    if not family:  # the total congruence always qualifies
        raise ClaimViolation("coequalizer-family-empty", (f.as_label_map(), g.as_label_map()))
    rho = partition_meet(family)
    if not is_regular_congruence(rho):
        raise ClaimViolation(
            "congruence-meet-regular",
            rho.label_blocks(),
            "meet of the coequalizing regular congruences is not regular",
        )
    q_alg, project = quotient(rho)
    mu = tuple(max(dst.mu[i] for i in block) for block in rho.blocks)
    obj = FuzzyHyperBCK(q_alg, mu)
    _verify_leg("project", project, dst, obj, "coequalizer")
    if f.then(project) != g.then(project):
        raise ClaimViolation("coequalizer-commutes", project.as_label_map())
    return ConstructionResult(
        obj, {"project": project}, "coequalizer", (f, g, src, dst), congruence=rho
    )


def mediate_coequalizer(
    result: ConstructionResult, target: FuzzyHyperBCK, phi: Hom
) -> Hom:
    """Factor a coequalizing map through the canonical surjection.

    Well-definedness on blocks is exactly the universal property; when it
    fails (the map separates elements the quotient merged) the failure is
    surfaced as a claim violation with the offending block.
    """
    if result.kind != "coequalizer" or result.congruence is None:
        raise InputError("mediate_coequalizer needs a coequalizer construction result")
    f, g, _src, dst = result.inputs
    if phi.source != dst.alg or phi.target != target.alg:
        raise InputError("map endpoints do not match the coequalizer")
    if not is_fuzzy_hom(phi, dst, target):
        raise InputError("map must be a fuzzy homomorphism")
    if f.then(phi) != g.then(phi):
        raise InputError("map does not coequalize the parallel pair")

    rho = result.congruence
    mapping = []
    for block in rho.blocks:
        images = {phi.mapping[i] for i in block}
        if len(images) > 1:
            raise ClaimViolation(
                "coequalizer-factors",
                tuple(sorted(dst.alg.carrier.labels[i] for i in block)),
                "a coequalizing map separates a block of the quotient; "
                "it cannot factor through the canonical surjection",
            )
        mapping.append(images.pop())
    psi = Hom(result.object.alg, target.alg, tuple(mapping))
    project = result.legs["project"]
    if project.then(psi) != phi:
        raise ClaimViolation("coequalizer-mediator-equation", psi.as_label_map())
    if not is_hom(psi):
        raise ClaimViolation("coequalizer-mediator-hom", psi.as_label_map())
    if not is_fuzzy_hom(psi, result.object, target):
        raise ClaimViolation("coequalizer-mediator-fuzzy", psi.as_label_map())
    return psi


def pullback(
    f: Hom, g: Hom, a: FuzzyHyperBCK, b: FuzzyHyperBCK, c: FuzzyHyperBCK
) -> ConstructionResult:
    """Pullback of a cospan, built as an equalizer inside the product.

    Inherits the equalizer's failure mode: the agreement set of the two
    composites need not be closed, and then no subset-style pullback
    exists; the claim violation propagates.
    """
    if f.source != a.alg or g.source != b.alg or f.target != c.alg or g.target != c.alg:
        raise InputError("maps are not a cospan on the given structures")
    for h, s in ((f, a), (g, b)):
        if not is_fuzzy_hom(h, s, c):
            raise InputError("cospan maps must be fuzzy homomorphisms")
    prod = product([a, b])
    eq = equalizer(
        prod.legs["p0"].then(f), prod.legs["p1"].then(g), prod.object, c
    )
    include = eq.legs["include"]
    to_a = include.then(prod.legs["p0"])
    to_b = include.then(prod.legs["p1"])
    obj = eq.object
    _verify_leg("to_a", to_a, obj, a, "pullback")
    _verify_leg("to_b", to_b, obj, b, "pullback")
    if to_a.then(f) != to_b.then(g):
        raise ClaimViolation("pullback-commutes", to_a.as_label_map())
    return ConstructionResult(obj, {"to_a": to_a, "to_b": to_b}, "pullback", (f, g, a, b, c))
