"""Brute-force model generators: the ground truth for every property suite.

``enumerate_hyper_bck`` walks every total table over a small carrier and
keeps the ones satisfying the axioms.  The walk assigns cells depth-first
and prunes with the pairwise-local part of HK3 (every t in x*y must be
below x), which is sound: a partial violation can never be repaired by
later cells.  Survivor tables get the full fail-fast check at the leaves,
so the pruning affects speed only, never the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence

from .core import Carrier, HyperBCK, InputError, hk_axioms_hold_raw, iter_bits
from .fuzzy import FuzzyHyperBCK, fuzzy_value

MAX_EXHAUSTIVE_SIZE = 3

_CORPUS_LABELS = ("O", "a", "b")


@dataclass(frozen=True, slots=True)
class ModelCorpus:
    size: int
    models: tuple[HyperBCK, ...]
    up_to_iso: bool

    def __len__(self) -> int:
        return len(self.models)

    def __iter__(self):
        return iter(self.models)


def _search_tables(n: int) -> list[tuple[int, ...]]:
    """All axiom-satisfying tables on carrier 0..n-1 with zero 0, in order."""
    size = n * n
    full = (1 << n) - 1
    cells = [0] * size
    found: list[tuple[int, ...]] = []

    def hk3_partial_ok(pos: int, m: int) -> bool:
        x, y = divmod(pos, n)
        # Each t in the new cell (x,y) must already satisfy O in t*x.
        for t in iter_bits(m):
            q = t * n + x
            c = m if q == pos else cells[q]
            if c and not c & 1:
                return False
        if not m & 1:
            # The new cell is t*x for pairs (x=y here as source row): any
            # assigned cell (y,b) containing x forces O into cell (x,y).
            row = y * n
            for b in range(n):
                q = row + b
                c = m if q == pos else cells[q]
                if c and c >> x & 1:
                    return False
        return True

    def dfs(pos: int) -> None:
        if pos == size:
            table = tuple(cells)
            if hk_axioms_hold_raw(n, 0, table):
                found.append(table)
            return
        for m in range(1, full + 1):
            if hk3_partial_ok(pos, m):
                cells[pos] = m
                dfs(pos + 1)
                cells[pos] = 0

    dfs(0)
    return found


def relabel_table(n: int, table: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    """Apply an element relabeling ``perm`` (old index -> new index) to a table."""
    out = [0] * (n * n)
    for x in range(n):
        for y in range(n):
            mask = 0
            for t in iter_bits(table[x * n + y]):
                mask |= 1 << perm[t]
            out[perm[x] * n + perm[y]] = mask
    return tuple(out)


def canonical_table(n: int, zero: int, table: Sequence[int]) -> tuple[int, ...]:
    """The least relabeling of ``table`` over all zero-fixing permutations."""
    rest = [i for i in range(n) if i != zero]
    best: tuple[int, ...] | None = None
    for images in permutations(rest):
        perm = list(range(n))
        for old, new in zip(rest, images):
            perm[old] = new
        cand = relabel_table(n, table, perm)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def canonical_form(alg: HyperBCK) -> tuple[int, int, tuple[int, ...]]:
    """Encoding of the canonical zero-fixing relabeling (iso-class invariant)."""
    n = len(alg.carrier)
    return (n, alg.zero, canonical_table(n, alg.zero, alg.table))


@lru_cache(maxsize=None)
def enumerate_hyper_bck(n: int, up_to_iso: bool = False) -> ModelCorpus:
    """Every hyper BCK-algebra on an ``n``-element carrier with fixed zero.

    Labels are O, a, b; zero is O.  With ``up_to_iso`` only canonical
    representatives of zero-fixing relabeling classes are kept.  Refuses
    sizes beyond the exhaustive range.
    """
    if not 1 <= n <= MAX_EXHAUSTIVE_SIZE:
        raise InputError(
            f"exhaustive enumeration is limited to sizes 1..{MAX_EXHAUSTIVE_SIZE}"
        )
    carrier = Carrier(_CORPUS_LABELS[:n], 0)
    tables = _search_tables(n)
    if up_to_iso:
        tables = [t for t in tables if canonical_table(n, 0, t) == t]
    return ModelCorpus(n, tuple(HyperBCK(carrier, t) for t in tables), up_to_iso)


def chain_example(k: int) -> FuzzyHyperBCK:
    """The graded chain on {1, .., k} with zero 1 and mu(x) = 1/x.

    The operation follows the worked bounded-interval family:
    x*y is {1..x} when x <= y, {2..y} when x > y != 1, and {x} when y = 1.
    """
    if k < 1:
        raise InputError("chain length must be at least 1")
    labels = tuple(str(i) for i in range(1, k + 1))
    carrier = Carrier(labels, 0)
    table = [0] * (k * k)
    for x in range(1, k + 1):
        for y in range(1, k + 1):
            if y == 1:
                mask = 1 << (x - 1)
            elif x <= y:
                mask = (1 << x) - 1
            else:
                mask = ((1 << y) - 1) & ~1
            table[(x - 1) * k + (y - 1)] = mask
    alg = HyperBCK(carrier, tuple(table))
    return FuzzyHyperBCK(alg, tuple(Fraction(1, x) for x in range(1, k + 1)))


def enumerate_fuzzy_assignments(
    alg: HyperBCK, grid: Iterable[int | str | Fraction]
) -> list[FuzzyHyperBCK]:
    """All membership maps into ``grid`` satisfying the fuzzy inequality.

    Deterministic: assignments are produced in lexicographic order of the
    grid as given, element by element in carrier order.  The inner filter
    compares value *ranks* (the inequality only ever compares degrees), so
    the hot loop stays on small integers; survivors carry exact rationals.
    """
    values = [fuzzy_value(v) for v in grid]
    if not values:
        raise InputError("value grid must be non-empty")
    rank_of = {v: r for r, v in enumerate(sorted(set(values)))}
    ranks = tuple(rank_of[v] for v in values)
    n = len(alg.carrier)
    # singleton cells {x} or {y} can never violate the bound min(mu x, mu y)
    pairs = [
        (x, y, cell)
        for x, y, cell in (
            (x, y, tuple(iter_bits(alg.cell(x, y)))) for x in range(n) for y in range(n)
        )
        if not (len(cell) == 1 and cell[0] in (x, y))
    ]
    out = []
    for combo in product(range(len(values)), repeat=n):
        mu_r = tuple(ranks[i] for i in combo)
        ok = True
        for x, y, cell in pairs:
            bound = mu_r[x] if mu_r[x] <= mu_r[y] else mu_r[y]
            for t in cell:
                if mu_r[t] < bound:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(FuzzyHyperBCK(alg, tuple(values[i] for i in combo)))
    return out
