"""Bounded picture enumeration and exact language-equivalence oracles.

Everything here decides statements about automaton languages restricted to a
finite set of sizes, either by streaming every picture (the enumeration
oracle) or by a per-size product check over frontier-set pairs (the exact
per-size oracle).  The two agree wherever both run; every language-level
claim in the test suite is accepted only when one of these oracles confirms
it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .hexgrid import (
    HexPicture,
    HexSize,
    cell_count,
    picture_from_cells,
    row_widths,
    serialize_picture,
)
from .symmetry import apply_op, check_op, transform_size
from .automata import HexAutomaton, _indexed, _step_border, _step_value, require_valid, run
from .scan import BOUSTROPHEDON, DirectionMode, scan_lines


@dataclass(frozen=True)
class SizeBound:
    """A finite, explicit set of picture sizes."""

    sizes: frozenset[HexSize]

    def __post_init__(self) -> None:
        if not self.sizes:
            raise ValueError("size bound must be non-empty")

    @classmethod
    def max_side(cls, k: int) -> "SizeBound":
        """All sizes with every side at most k."""
        if k < 1:
            raise ValueError("max side must be at least 1")
        r = range(1, k + 1)
        return cls(frozenset(HexSize(l, m, n) for l in r for m in r for n in r))

    def sorted_sizes(self) -> list[HexSize]:
        return sorted(self.sizes, key=lambda s: (cell_count(s), s.as_tuple()))

    def image(self, op: str) -> "SizeBound":
        return SizeBound(frozenset(transform_size(op, s) for s in self.sizes))


@dataclass(frozen=True)
class LanguageSample:
    """The accepted subset of all pictures over an alphabet within a bound."""

    alphabet: frozenset[str]
    bound: SizeBound
    members: frozenset[HexPicture]


def picture_sort_key(picture: HexPicture) -> tuple[int, str]:
    """Deterministic reporting order: cell count, then serialized text."""
    return cell_count(picture.size), serialize_picture(picture)


def enumerate_pictures(alphabet: Iterable[str], bound: SizeBound) -> Iterator[HexPicture]:
    """Every picture over the alphabet with size in the bound, exactly once.

    Pictures stream in `picture_sort_key` order: sizes by cell count, and
    within a size row-major assignments over the sorted alphabet.
    """
    symbols = sorted(set(alphabet))
    if not symbols:
        raise ValueError("alphabet must be non-empty")
    for size in bound.sorted_sizes():
        widths = row_widths(size)
        total = sum(widths)
        for flat in itertools.product(symbols, repeat=total):
            rows = []
            at = 0
            for w in widths:
                rows.append(tuple(flat[at:at + w]))
                at += w
            yield HexPicture(size, tuple(rows))


def _consumption_cells(a_kind: str, plan) -> list:
    cells = []
    for i, line in enumerate(plan.lines):
        if a_kind == BOUSTROPHEDON and i % 2 == 1:
            cells.extend(reversed(line))
        else:
            cells.extend(line)
    return cells


def _accepted_words(
    a: HexAutomaton, size: HexSize, d: DirectionMode, symbols: tuple[str, ...]
) -> tuple[list, list[tuple[str, ...]]]:
    """All symbol words (in consumption order) the automaton accepts at a size.

    Walks the assignment tree sharing frontier work across common prefixes,
    memoizing on (position, frontier); dead frontiers prune whole subtrees.
    Returns (cells in consumption order, accepted words).
    """
    idx = _indexed(a)
    plan = scan_lines(size, d)
    steps: list[str] = []
    for line in plan.lines:
        steps.extend("v" * len(line))
        steps.append("#")
    memo: dict[tuple[int, int], tuple[tuple[str, ...], ...]] = {}

    def walk(i: int, frontier: int) -> tuple[tuple[str, ...], ...]:
        if i == len(steps):
            return ((),) if frontier & idx.finals_mask else ()
        key = (i, frontier)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if steps[i] == "#":
            out = walk(i + 1, _step_border(idx, frontier))
        else:
            acc: list[tuple[str, ...]] = []
            for sym in symbols:
                nxt = _step_value(idx, frontier, sym)
                if not nxt:
                    continue
                acc.extend((sym,) + tail for tail in walk(i + 1, nxt))
            out = tuple(acc)
        memo[key] = out
        return out

    return _consumption_cells(a.kind, plan), list(walk(0, idx.start_mask))


def accepted_set(
    a: HexAutomaton,
    d: DirectionMode,
    alphabet: Iterable[str],
    bound: SizeBound,
) -> LanguageSample:
    require_valid(a)
    if d.kind != a.kind:
        raise ValueError(f"mode kind {d.kind} does not match automaton kind {a.kind}")
    alphabet = frozenset(alphabet)
    missing = alphabet - a.alphabet
    if missing:
        raise ValueError(f"alphabet symbols {sorted(missing)} outside automaton alphabet")
    symbols = tuple(sorted(alphabet))
    members: set[HexPicture] = set()
    for size in bound.sorted_sizes():
        order, words = _accepted_words(a, size, d, symbols)
        for word in words:
            members.add(picture_from_cells(size, dict(zip(order, word))))
    return LanguageSample(alphabet=alphabet, bound=bound, members=frozenset(members))


def image_set(sample: LanguageSample, op: str) -> LanguageSample:
    check_op(op)
    return LanguageSample(
        alphabet=sample.alphabet,
        bound=sample.bound.image(op),
        members=frozenset(apply_op(op, p) for p in sample.members),
    )


def bounded_equivalent(
    a1: HexAutomaton,
    d1: DirectionMode,
    a2: HexAutomaton,
    d2: DirectionMode,
    alphabet: Iterable[str],
    bound: SizeBound,
    op: str = "R0",
) -> HexPicture | None:
    """None iff a2's accepted set equals the op-image of a1's.

    Otherwise the smallest picture (by cell count, then serialized text) in
    the symmetric difference is returned.
    """
    alphabet = frozenset(alphabet)
    image = image_set(accepted_set(a1, d1, alphabet, bound), op)
    other = accepted_set(a2, d2, alphabet, bound.image(op))
    diff = image.members ^ other.members
    if not diff:
        return None
    return min(diff, key=picture_sort_key)


def _block_step(idx, frontier: int, word: tuple[str, ...], reverse: bool) -> int:
    """Advance a frontier over one scan line's cells plus its border read."""
    for sym in (reversed(word) if reverse else word):
        frontier = _step_value(idx, frontier, sym)
        if not frontier:
            break
    return _step_border(idx, frontier)


def exact_equivalent_for_size(
    a1: HexAutomaton,
    d1: DirectionMode,
    a2: HexAutomaton,
    d2: DirectionMode,
    size: HexSize,
    alphabet: Iterable[str] | None = None,
) -> HexPicture | None:
    """Decide per-size language equality without enumerating all pictures.

    Each run is a string acceptor over the fixed linearization shape
    a^w1 # a^w2 # ... # a^wK #, so reachable frontier-set pairs are advanced
    line by line (each automaton consuming the line in its own orientation)
    and the two acceptance verdicts are compared on every reachable pair.
    Directions must share the same plan geometry (equal elements); kinds may
    differ.  Returns None when equal, else the smallest counterexample.
    """
    require_valid(a1)
    require_valid(a2)
    if d1.element != d2.element:
        raise ValueError(
            "exact per-size comparison requires directions with the same element; "
            f"got {d1.code} vs {d2.code}"
        )
    if d1.kind != a1.kind or d2.kind != a2.kind:
        raise ValueError("direction kinds must match the automata kinds")
    if alphabet is None:
        alphabet = a1.alphabet & a2.alphabet
    symbols = tuple(sorted(set(alphabet)))
    if not symbols:
        raise ValueError("alphabet must be non-empty")
    for a in (a1, a2):
        missing = set(symbols) - a.alphabet
        if missing:
            raise ValueError(f"alphabet symbols {sorted(missing)} outside automaton alphabet")

    plan = scan_lines(size, d1)
    idx1 = _indexed(a1)
    idx2 = _indexed(a2)
    pairs: set[tuple[int, int]] = {(idx1.start_mask, idx2.start_mask)}
    for i, line in enumerate(plan.lines):
        rev1 = a1.kind == BOUSTROPHEDON and i % 2 == 1
        rev2 = a2.kind == BOUSTROPHEDON and i % 2 == 1
        nxt: set[tuple[int, int]] = set()
        words = list(itertools.product(symbols, repeat=len(line)))
        cache1: dict[tuple[int, tuple[str, ...]], int] = {}
        cache2: dict[tuple[int, tuple[str, ...]], int] = {}
        for f1, f2 in pairs:
            for word in words:
                k1 = (f1, word)
                if k1 not in cache1:
                    cache1[k1] = _block_step(idx1, f1, word, rev1)
                k2 = (f2, word)
                if k2 not in cache2:
                    cache2[k2] = _block_step(idx2, f2, word, rev2)
                nxt.add((cache1[k1], cache2[k2]))
        pairs = nxt
    for f1, f2 in pairs:
        if bool(f1 & idx1.finals_mask) != bool(f2 & idx2.finals_mask):
            break
    else:
        return None
    # unequal: report the canonical smallest witness
    single = SizeBound(frozenset({size}))
    for p in enumerate_pictures(symbols, single):
        if run(a1, p, d1) != run(a2, p, d2):
            return p
    raise AssertionError("pair search found a mismatch but enumeration did not")
