"""Finite hyper BCK-algebras: carriers, hyperoperation tables, axiom checking.

A hyperoperation sends each ordered pair of elements to a *non-empty subset*
of the carrier.  Subsets are stored as bitmasks over carrier indices, which
keeps the heavy triple loops of the axiom validator exact and fast; the
public API speaks element labels and frozensets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class InputError(ValueError):
    """Raised when an operation is handed structurally invalid input."""


class ClaimViolation(RuntimeError):
    """A documented guarantee of a construction failed on a concrete instance.

    Carries the claim identifier and a witness so the instance can be
    reported rather than silently miscomputed.
    """

    def __init__(self, claim: str, witness: object, message: str = ""):
        self.claim = claim
        self.witness = witness
        super().__init__(message or f"{claim}: witness {witness!r}")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Carrier:
    """An ordered finite set of distinct element labels with a designated zero."""

    labels: tuple[str, ...]
    zero_index: int

    def __post_init__(self) -> None:
        if not self.labels:
            raise InputError("carrier must be non-empty")
        if len(set(self.labels)) != len(self.labels):
            raise InputError("carrier labels must be pairwise distinct")
        if not 0 <= self.zero_index < len(self.labels):
            raise InputError(f"zero index {self.zero_index} out of range")

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def zero_label(self) -> str:
        return self.labels[self.zero_index]

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown element label {label!r}") from None

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return mask

    def labels_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.labels[i] for i in iter_bits(mask))


@dataclass(frozen=True, slots=True)
class HyperBCK:
    """A finite carrier with a total subset-valued operation table.

    ``table`` is row-major over carrier indices: the cell for ``(x, y)`` sits
    at ``x * n + y`` and is a non-empty bitmask.  Construction checks only
    this structural shape; the axioms are the validator's job.
    """

    carrier: Carrier
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.carrier)
        if len(self.table) != n * n:
            raise InputError(f"table must have {n * n} cells, got {len(self.table)}")
        full = self.carrier.full_mask
        for pos, cell in enumerate(self.table):
            if cell == 0:
                x, y = divmod(pos, n)
                raise InputError(
                    f"empty hyperoperation cell at "
                    f"({self.carrier.labels[x]},{self.carrier.labels[y]})"
                )
            if cell & ~full:
                raise InputError(f"table cell at position {pos} out of range")

    @classmethod
    def from_sets(
        cls,
        labels: Iterable[str],
        zero: str,
        cells: dict[tuple[str, str], Iterable[str]],
    ) -> HyperBCK:
        """Build from a ``(x, y) -> subset`` mapping given with labels."""
        carrier = Carrier(tuple(labels), tuple(labels).index(zero))
        n = len(carrier)
        table = [0] * (n * n)
        for (x, y), subset in cells.items():
            table[carrier.index(x) * n + carrier.index(y)] = carrier.mask_of(subset)
        return cls(carrier, tuple(table))

    @property
    def size(self) -> int:
        return len(self.carrier)

    @property
    def zero(self) -> int:
        return self.carrier.zero_index

    def cell(self, x: int, y: int) -> int:
        return self.table[x * len(self.carrier) + y]

    # -- label-level operations ------------------------------------------

    def star(self, x: str, y: str) -> frozenset[str]:
        """The hyperoperation value ``x * y`` as a set of labels."""
        c = self.carrier
        return c.labels_of(self.cell(c.index(x), c.index(y)))

    def set_star(self, a: Iterable[str], b: Iterable[str]) -> frozenset[str]:
        """Union of ``x * y`` over ``x in a``, ``y in b`` (both non-empty)."""
        c = self.carrier
        return c.labels_of(self.set_star_masks(c.mask_of(a), c.mask_of(b)))

    def hyper_order(self, x: str, y: str) -> bool:
        """``x < y`` in the hyperorder: the zero element belongs to ``x * y``."""
        c = self.carrier
        return bool(self.cell(c.index(x), c.index(y)) >> self.zero & 1)

    def set_order(self, a: Iterable[str], b: Iterable[str]) -> bool:
        """``A < B``: every element of A is below some element of B."""
        c = self.carrier
        return self.set_order_masks(c.mask_of(a), c.mask_of(b))

    def is_subalgebra(self, subset: Iterable[str]) -> bool:
        """True iff the subset contains zero and is closed under the operation."""
        mask = self.carrier.mask_of(subset)
        return self.is_subalgebra_mask(mask)

    def restrict(self, subset: Iterable[str]) -> HyperBCK:
        """The subalgebra on ``subset`` with the inherited table and label order."""
        mask = self.carrier.mask_of(subset)
        if not self.is_subalgebra_mask(mask):
            raise InputError(f"{sorted(subset)!r} is not a subalgebra")
        return self.restrict_mask(mask)

    # -- index/mask-level operations (used by the validators and oracles) --

    def set_star_masks(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            raise InputError("set arguments of the hyperoperation must be non-empty")
        n = len(self.carrier)
        acc = 0
        for x in iter_bits(a):
            row = x * n
            for y in iter_bits(b):
                acc |= self.table[row + y]
        return acc

    def set_order_masks(self, a: int, b: int) -> bool:
        if a == 0 or b == 0:
            raise InputError("set arguments of the hyperorder must be non-empty")
        n = len(self.carrier)
        zbit = 1 << self.zero
        for x in iter_bits(a):
            row = x * n
            if not any(self.table[row + y] & zbit for y in iter_bits(b)):
                return False
        return True

    def is_subalgebra_mask(self, mask: int) -> bool:
        if mask == 0:
            raise InputError("a subalgebra candidate must be non-empty")
        if not mask >> self.zero & 1:
            return False
        n = len(self.carrier)
        for x in iter_bits(mask):
            row = x * n
            for y in iter_bits(mask):
                if self.table[row + y] & ~mask:
                    return False
        return True

    def restrict_mask(self, mask: int) -> HyperBCK:
        old = list(iter_bits(mask))
        remap = {o: i for i, o in enumerate(old)}
        labels = tuple(self.carrier.labels[o] for o in old)
        carrier = Carrier(labels, remap[self.zero])
        m = len(old)
        table = [0] * (m * m)
        for i, x in enumerate(old):
            for j, y in enumerate(old):
                table[i * m + j] = sum(1 << remap[t] for t in iter_bits(self.cell(x, y)))
        return HyperBCK(carrier, tuple(table))

    def encode(self) -> tuple[int, int, tuple[int, ...]]:
        """A hashable exact encoding (size, zero index, cell masks)."""
        return (len(self.carrier), self.zero, self.table)


@dataclass(frozen=True, slots=True)
class Violation:
    """One falsified axiom instance: axiom id plus the witnessing elements."""

    axiom: str
    witness: tuple[str, ...]
    detail: str = ""


@dataclass(frozen=True, slots=True)
class InfoCheck:
    """An informational (non-verdict) check carried along in a report."""

    check: str
    holds: bool
    detail: str = ""


@dataclass(frozen=True, slots=True)
class ValidationReport:
    passed: bool
    violations: tuple[Violation, ...]
    info: tuple[InfoCheck, ...] = ()

    def __post_init__(self) -> None:
        if self.passed != (not self.violations):
            raise InputError("report invariant: passed iff no violations")

    def witnesses(self, axiom: str) -> list[tuple[str, ...]]:
        return [v.witness for v in self.violations if v.axiom == axiom]


def _labels(alg: HyperBCK, *indices: int) -> tuple[str, ...]:
    return tuple(alg.carrier.labels[i] for i in indices)


def validate_hyper_bck(alg: HyperBCK, strict_antisymmetry: bool = False) -> ValidationReport:
    """Check the hyper BCK axioms on every element triple, collecting all witnesses.

    HK1: (x*z)*(y*z) < (x*y)   (hyperorder on subsets)
    HK2: (x*y)*z = (x*z)*y     (exact set equality)
    HK3: x*H < {x}

    ``strict_antisymmetry`` additionally checks HK4: x<y and y<x imply x=y,
    which some formulations include and this one omits by default.
    """
    n = len(alg.carrier)
    zbit = 1 << alg.zero
    violations: list[Violation] = []

    for x in range(n):
        for y in range(n):
            cxy = alg.cell(x, y)
            for z in range(n):
                if y != z:
                    lhs = alg.set_star_masks(cxy, 1 << z)
                    rhs = alg.set_star_masks(alg.cell(x, z), 1 << y)
                    if lhs != rhs:
                        violations.append(
                            Violation(
                                "HK2",
                                _labels(alg, x, y, z),
                                f"(x*y)*z = {sorted(alg.carrier.labels_of(lhs))} but "
                                f"(x*z)*y = {sorted(alg.carrier.labels_of(rhs))}",
                            )
                        )
                lhs1 = alg.set_star_masks(alg.cell(x, z), alg.cell(y, z))
                if not alg.set_order_masks(lhs1, cxy):
                    violations.append(
                        Violation(
                            "HK1",
                            _labels(alg, x, y, z),
                            f"(x*z)*(y*z) = {sorted(alg.carrier.labels_of(lhs1))} "
                            f"is not below x*y = {sorted(alg.carrier.labels_of(cxy))}",
                        )
                    )

    for x in range(n):
        reach = alg.set_star_masks(1 << x, alg.carrier.full_mask)
        for t in iter_bits(reach):
            if not alg.cell(t, x) & zbit:
                violations.append(
                    Violation(
                        "HK3",
                        _labels(alg, x),
                        f"{alg.carrier.labels[t]} in x*H but not below x",
                    )
                )
                break

    if strict_antisymmetry:
        for x in range(n):
            for y in range(x + 1, n):
                if alg.cell(x, y) & zbit and alg.cell(y, x) & zbit:
                    violations.append(
                        Violation("HK4", _labels(alg, x, y), "x<y and y<x with x != y")
                    )

    return ValidationReport(not violations, tuple(violations))


def _raw_set_star(table: tuple[int, ...], n: int, a: int, b: int) -> int:
    acc = 0
    for x in iter_bits(a):
        row = x * n
        for y in iter_bits(b):
            acc |= table[row + y]
    return acc


def hk_axioms_hold_raw(
    n: int, zero: int, table: tuple[int, ...], strict_antisymmetry: bool = False
) -> bool:
    """Fail-fast axiom check on a raw cell-mask table (enumeration inner loop)."""
    zbit = 1 << zero

    # HK3 first: pairwise-local, so it rejects bad tables cheapest.
    for x in range(n):
        row = x * n
        reach = 0
        for y in range(n):
            reach |= table[row + y]
        for t in iter_bits(reach):
            if not table[t * n + x] & zbit:
                return False

    for x in range(n):
        row = x * n
        for y in range(n):
            cxy = table[row + y]
            for z in range(y + 1, n):
                if _raw_set_star(table, n, cxy, 1 << z) != _raw_set_star(
                    table, n, table[row + z], 1 << y
                ):
                    return False
            for z in range(n):
                lhs = _raw_set_star(table, n, table[row + z], table[y * n + z])
                for u in iter_bits(lhs):
                    urow = u * n
                    if not any(table[urow + v] & zbit for v in iter_bits(cxy)):
                        return False

    if strict_antisymmetry:
        for x in range(n):
            for y in range(x + 1, n):
                if table[x * n + y] & zbit and table[y * n + x] & zbit:
                    return False
    return True


def hk_axioms_hold(alg: HyperBCK, strict_antisymmetry: bool = False) -> bool:
    """Fail-fast boolean form of the validator."""
    return hk_axioms_hold_raw(len(alg.carrier), alg.zero, alg.table, strict_antisymmetry)


def trivial_algebra(label: str = "O") -> HyperBCK:
    """The one-element algebra: O*O = {O}."""
    return HyperBCK(Carrier((label,), 0), (1,))


def all_subsets(alg: HyperBCK) -> Iterator[frozenset[str]]:
    """All non-empty subsets of the carrier, smallest mask first."""
    for mask in range(1, alg.carrier.full_mask + 1):
        yield alg.carrier.labels_of(mask)


def subalgebra_masks(alg: HyperBCK) -> list[int]:
    """Masks of all subalgebras, in increasing mask order."""
    return [m for m in range(1, alg.carrier.full_mask + 1) if alg.is_subalgebra_mask(m)]
