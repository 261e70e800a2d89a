"""Overpartitions, constrained (k, overpartition) pair families and signed counts.

A pair ``(k, pi)`` lives in one of two kinds of family:

* ``General(m, r)``: every part is ``r (mod m)`` and at most ``m*k + r``;
  overlined parts are at most ``m*(k-1) + r``.  ``General(2, 1)`` is the
  family behind the ``f(q^4)`` identity.
* ``FQ3Prime``: parts of any parity up to ``2k + 1``; overlined parts must be
  odd and at most ``2k - 1``.  This is the family behind ``f(q^3)``.

Each pair is counted with sign ``(-1)**nu`` where ``nu`` is the number of parts.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import (
    DuplicateOverline,
    InvalidFamily,
    InvalidPair,
    NonPositivePart,
    NotApplicable,
    ZWeightUndefined,
)

INFINITE = math.inf


@dataclass(frozen=True)
class Run:
    size: int
    multiplicity: int
    overlined: bool = False


@dataclass(frozen=True)
class Overpartition:
    """Run-length overpartition; an overlined run has its first occurrence overlined."""

    runs: tuple[Run, ...] = ()

    def __post_init__(self):
        prev = None
        for run in self.runs:
            if run.size < 1:
                raise NonPositivePart(f"part size {run.size} is not positive")
            if run.multiplicity < 1:
                raise ValueError(f"run {run} has non-positive multiplicity")
            if prev is not None and run.size >= prev:
                raise ValueError("run sizes must be strictly decreasing")
            prev = run.size

    @property
    def total(self) -> int:
        return sum(run.size * run.multiplicity for run in self.runs)

    @property
    def nu(self) -> int:
        return sum(run.multiplicity for run in self.runs)

    @property
    def smallest(self) -> Union[int, float]:
        return self.runs[-1].size if self.runs else INFINITE

    @property
    def nu_s(self) -> int:
        return self.runs[-1].multiplicity if self.runs else 0

    def multiplicity(self, size: int) -> int:
        for run in self.runs:
            if run.size == size:
                return run.multiplicity
        return 0

    def overlined_sizes(self) -> frozenset[int]:
        return frozenset(run.size for run in self.runs if run.overlined)

    def parts(self) -> list[tuple[int, bool]]:
        """Expanded parts, largest first, as ``(size, overlined)``."""
        out = []
        for run in self.runs:
            out.append((run.size, run.overlined))
            out.extend((run.size, False) for _ in range(run.multiplicity - 1))
        return out

    def __len__(self) -> int:
        return self.nu

    def __str__(self) -> str:
        return ",".join(f"{s}o" if o else str(s) for s, o in self.parts())


EMPTY = Overpartition()


def make_overpartition(entries: Iterable[Union[int, tuple[int, bool]]]) -> Overpartition:
    """Build the canonical form from ``(size, overlined)`` entries in any order.

    Bare integers are accepted as non-overlined parts.

    >>> str(make_overpartition([(5, True), 5, 3]))
    '5o,5,3'
    """
    counts: Counter[int] = Counter()
    flagged: Counter[int] = Counter()
    for entry in entries:
        size, over = (entry, False) if isinstance(entry, int) else entry
        if size < 1:
            raise NonPositivePart(f"part size {size} is not positive")
        counts[size] += 1
        if over:
            flagged[size] += 1
            if flagged[size] > 1:
                raise DuplicateOverline(f"size {size} overlined more than once")
    return Overpartition(
        tuple(Run(s, counts[s], bool(flagged[s])) for s in sorted(counts, reverse=True))
    )


def parse_parts(text: str) -> Overpartition:
    """Parse the CLI syntax ``"7,5o,5,3o"`` (``o`` marks an overline)."""
    text = text.strip()
    if not text:
        return EMPTY
    entries = []
    for token in text.split(","):
        token = token.strip()
        over = token.endswith("o")
        digits = token[:-1] if over else token
        if not digits.lstrip("-").isdigit():
            raise ValueError(f"malformed part {token!r}")
        entries.append((int(digits), over))
    return make_overpartition(entries)


# --------------------------------------------------------------------------- families


@dataclass(frozen=True)
class General:
    m: int = 2
    r: int = 1

    def __post_init__(self):
        if self.m < 2:
            raise InvalidFamily(f"m must be >= 2, got {self.m}")
        # r = 0 would admit parts of size 0
        if not 1 <= self.r < self.m:
            raise InvalidFamily(f"need 1 <= r < m, got r={self.r}, m={self.m}")

    def __str__(self) -> str:
        return f"General({self.m},{self.r})"


@dataclass(frozen=True)
class FQ3Prime:
    def __str__(self) -> str:
        return "FQ3Prime"


Family = Union[General, FQ3Prime]

FQ4 = General(2, 1)
FQ3P = FQ3Prime()


def max_part(k: int, family: Family) -> int:
    if isinstance(family, General):
        return family.m * k + family.r
    return 2 * k + 1


def max_overlined(k: int, family: Family) -> int:
    if isinstance(family, General):
        return family.m * (k - 1) + family.r
    return 2 * k - 1


def _allowed_sizes(k: int, family: Family) -> list[int]:
    """Admissible part sizes for this k, largest first."""
    if isinstance(family, General):
        return [family.m * j + family.r for j in range(k, -1, -1)]
    return list(range(2 * k + 1, 0, -1))


def _can_overline(size: int, k: int, family: Family) -> bool:
    if size > max_overlined(k, family):
        return False
    return isinstance(family, General) or size % 2 == 1


@dataclass(frozen=True)
class BoxedPair:
    k: int
    pi: Overpartition
    family: Family = FQ4

    def __post_init__(self):
        if self.k < 0:
            raise InvalidPair(f"k={self.k} is negative")
        top = max_part(self.k, self.family)
        for run in self.pi.runs:
            if run.size > top:
                raise InvalidPair(f"part {run.size} exceeds {top} in {self}")
            if isinstance(self.family, General) and run.size % self.family.m != self.family.r:
                raise InvalidPair(
                    f"part {run.size} is not {self.family.r} mod {self.family.m}"
                )
            if run.overlined and not _can_overline(run.size, self.k, self.family):
                raise InvalidPair(f"part {run.size} may not be overlined in {self}")

    def __str__(self) -> str:
        return f"({self.k}, [{self.pi}])"


def pair(k: int, parts: Union[str, Iterable], family: Family = FQ4) -> BoxedPair:
    """Convenience constructor: ``pair(3, "7,5o,5")`` or ``pair(3, [(7, False), 5])``."""
    pi = parse_parts(parts) if isinstance(parts, str) else make_overpartition(parts)
    return BoxedPair(k, pi, family)


class PairStats(NamedTuple):
    nu: int
    smallest: Union[int, float]
    nu_s: int
    nu_ell: int


def stats(p: BoxedPair) -> PairStats:
    pi = p.pi
    return PairStats(pi.nu, pi.smallest, pi.nu_s, pi.multiplicity(max_part(p.k, p.family)))


def q_weight(p: BoxedPair) -> int:
    if isinstance(p.family, General):
        return p.family.r * p.k + p.pi.total
    return p.k + p.pi.total


def z_weight(p: BoxedPair) -> int:
    """Number of cells labelled r in the boxed diagram, ``k + nu``."""
    if not isinstance(p.family, General):
        raise ZWeightUndefined("z-weight is only defined for General families")
    return p.k + p.pi.nu


def sign(p: BoxedPair) -> int:
    return -1 if p.pi.nu % 2 else 1


# --------------------------------------------------------------------------- enumeration


def _overpartitions(
    target: int, sizes: Sequence[int], overlinable: Sequence[bool], i: int = 0
) -> Iterator[tuple[Run, ...]]:
    if target == 0:
        yield ()
        return
    if i == len(sizes):
        return
    size = sizes[i]
    for mult in range(target // size, -1, -1):
        rest = target - mult * size
        for tail in _overpartitions(rest, sizes, overlinable, i + 1):
            if mult == 0:
                yield tail
                continue
            yield (Run(size, mult, False),) + tail
            if overlinable[i]:
                yield (Run(size, mult, True),) + tail


def _sort_key(p: BoxedPair):
    return p.k, tuple((run.size, run.multiplicity, run.overlined) for run in p.pi.runs)


def enumerate_pairs(n: int, family: Family = FQ4) -> list[BoxedPair]:
    """All pairs of the family with q-weight ``n``, ordered by k then by runs."""
    if n < 0:
        return []
    r = family.r if isinstance(family, General) else 1
    out = []
    for k in range(n // r + 1):
        target = n - r * k
        sizes = _allowed_sizes(k, family)
        over = [_can_overline(s, k, family) for s in sizes]
        for runs in _overpartitions(target, sizes, over):
            out.append(BoxedPair(k, Overpartition(runs), family))
    out.sort(key=_sort_key)
    return out


def parity_counts(n: int, family: Family = FQ4) -> tuple[int, int]:
    """``(even, odd)`` counts by parity of the number of parts."""
    even = odd = 0
    for p in enumerate_pairs(n, family):
        if p.pi.nu % 2:
            odd += 1
        else:
            even += 1
    return even, odd


def signed_count(n: int, family: Family = FQ4) -> int:
    even, odd = parity_counts(n, family)
    return even - odd


def signed_bivariate(n: int, family: Family = FQ4) -> dict[int, int]:
    """Signed count refined by z-weight: ``{z_degree: coefficient}``, zeros dropped."""
    if not isinstance(family, General):
        raise NotApplicable("signed_bivariate needs a General family")
    acc: defaultdict[int, int] = defaultdict(int)
    for p in enumerate_pairs(n, family):
        acc[z_weight(p)] += sign(p)
    return {z: c for z, c in sorted(acc.items()) if c}


def predicted_index(n: int, family: Family = FQ4) -> Union[int, None]:
    """The j with ``n = j(mj + 2r)`` (or ``3j(j+1)/2``), if any."""
    j = 0
    while True:
        if isinstance(family, General):
            val = j * (family.m * j + 2 * family.r)
        else:
            val = 3 * j * (j + 1) // 2
        if val == n:
            return j
        if val > n:
            return None
        j += 1


def predicted_count(n: int, family: Family = FQ4) -> int:
    j = predicted_index(n, family)
    if j is None:
        return 0
    return -1 if j % 2 else 1
