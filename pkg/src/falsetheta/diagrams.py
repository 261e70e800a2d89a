"""Boxed m-modular diagrams and the sign-reversing maps on them.

In the boxed diagram of ``(k, pi)`` for ``General(m, r)`` the top row is one
``0`` cell followed by ``k`` cells labelled ``r``; a part ``m*j + r`` is a row
of one ``r`` cell and ``j`` cells labelled ``m``.  Everything here works on the
"level" ``j`` of each part, so one code path covers every ``(m, r)``.
"""

from __future__ import annotations

import enum

from .errors import InternalInconsistency, InvalidPair, NotApplicable, NotDefined
from .partitions import (
    EMPTY,
    FQ3P,
    BoxedPair,
    Family,
    General,
    Overpartition,
    Run,
    make_overpartition,
    max_overlined,
    max_part,
    predicted_index,
    stats,
)


class PairClass(enum.Enum):
    CONJ_ODD = "ConjOdd"
    PHI_S_SINGLE = "PhiSSingle"
    PHI_S_MULTI = "PhiSMulti"
    PHI_R = "PhiR"
    CASE1_PLAIN = "Case1Plain"
    CASE1_OVERLINED = "Case1Overlined"
    CASE2 = "Case2"
    CASE3 = "Case3"
    CASE4_FIXED = "Case4Fixed"

    def __str__(self) -> str:
        return self.value


# class of a pair -> class of its involution partner
PARTNER_CLASS = {
    PairClass.CONJ_ODD: PairClass.CONJ_ODD,
    PairClass.PHI_S_SINGLE: PairClass.PHI_S_SINGLE,
    PairClass.PHI_S_MULTI: PairClass.PHI_S_MULTI,
    PairClass.PHI_R: PairClass.PHI_R,
    PairClass.CASE1_PLAIN: PairClass.CASE2,
    PairClass.CASE2: PairClass.CASE1_PLAIN,
    PairClass.CASE1_OVERLINED: PairClass.CASE3,
    PairClass.CASE3: PairClass.CASE1_OVERLINED,
}


def _general(p: BoxedPair) -> General:
    if not isinstance(p.family, General):
        raise NotApplicable(f"diagram maps are not defined for {p.family}")
    return p.family


def _rebuild(k: int, levels: list[int], over_levels: set[int], family: General) -> BoxedPair:
    m, r = family.m, family.r
    entries = []
    seen = set()
    for j in levels:
        first = j not in seen
        seen.add(j)
        entries.append((m * j + r, first and j in over_levels))
    return BoxedPair(k, make_overpartition(entries), family)


def conjugate(p: BoxedPair) -> BoxedPair:
    """Reflect the boxed diagram; ``k`` and the number of parts swap.

    An overlined part at level ``j`` moves its overline to part ``j + 1`` of
    the conjugate.
    """
    fam = _general(p)
    m, r = fam.m, fam.r
    levels = [(size - r) // m for size, _ in p.pi.parts()]
    over = [(size - r) // m for size in p.pi.overlined_sizes()]
    new_levels = [sum(1 for j in levels if j >= i) for i in range(1, p.k + 1)]
    new_over = {new_levels[j] for j in over}
    return _rebuild(len(levels), new_levels, new_over, fam)


def _drop_last(pi: Overpartition) -> tuple[Overpartition, int, bool]:
    """Remove one copy of the smallest part; it carries the overline only if unique."""
    *head, last = pi.runs
    if last.multiplicity == 1:
        return Overpartition(tuple(head)), last.size, last.overlined
    shrunk = Run(last.size, last.multiplicity - 1, last.overlined)
    return Overpartition(tuple(head) + (shrunk,)), last.size, False


def _append(pi: Overpartition, size: int, overlined: bool) -> Overpartition:
    if not pi.runs:
        return Overpartition((Run(size, 1, overlined),))
    last = pi.runs[-1]
    if size > last.size:
        raise NotDefined(f"row of size {size} is longer than the row above it")
    if size < last.size:
        return Overpartition(pi.runs + (Run(size, 1, overlined),))
    if overlined:
        raise NotDefined(f"size {size} would be overlined on a non-first occurrence")
    return Overpartition(pi.runs[:-1] + (Run(size, last.multiplicity + 1, last.overlined),))


def phi_s(p: BoxedPair) -> BoxedPair:
    """Hold the bottom row fixed and conjugate the rest of the diagram."""
    fam = _general(p)
    if not p.pi.runs:
        raise NotDefined("phi_s needs a non-empty overpartition")
    rest, size, over = _drop_last(p.pi)
    top = conjugate(BoxedPair(p.k, rest, fam))
    if size > max_part(top.k, fam):
        raise NotDefined(f"bottom row {size} is wider than the new top row")
    try:
        return BoxedPair(top.k, _append(top.pi, size, over), fam)
    except InvalidPair as exc:
        raise NotDefined(str(exc)) from exc


def phi_r(p: BoxedPair) -> BoxedPair:
    """Hold the rightmost column fixed: ``conj . phi_s . conj``."""
    return conjugate(phi_s(conjugate(p)))


def unoverline_smallest(p: BoxedPair) -> BoxedPair:
    *head, last = p.pi.runs
    return BoxedPair(p.k, Overpartition(tuple(head) + (Run(last.size, last.multiplicity),)), p.family)


def overline_smallest(p: BoxedPair) -> BoxedPair:
    *head, last = p.pi.runs
    return BoxedPair(
        p.k, Overpartition(tuple(head) + (Run(last.size, last.multiplicity, True),)), p.family
    )


def classify(p: BoxedPair) -> PairClass:
    fam = _general(p)
    m, r = fam.m, fam.r
    nu, s, nu_s, nu_ell = stats(p)
    if (p.k + nu) % 2:
        return PairClass.CONJ_ODD
    if not p.pi.runs and p.k == 0:
        return PairClass.CASE4_FIXED
    balance = m * nu_ell + r
    if s < balance:
        return PairClass.PHI_S_SINGLE if nu_s == 1 else PairClass.CASE2
    if s == balance:
        if s == max_part(p.k, fam):
            return PairClass.CASE4_FIXED
        if nu_s > 1:
            return PairClass.PHI_S_MULTI
        return PairClass.CASE1_OVERLINED if p.pi.runs[-1].overlined else PairClass.CASE1_PLAIN
    if p.k >= 1 and p.pi.multiplicity(max_overlined(p.k, fam)):
        return PairClass.PHI_R
    return PairClass.CASE3


def _dispatch(p: BoxedPair, cls: PairClass) -> BoxedPair:
    if cls is PairClass.CONJ_ODD:
        return conjugate(p)
    if cls in (PairClass.PHI_S_SINGLE, PairClass.PHI_S_MULTI, PairClass.CASE1_PLAIN, PairClass.CASE2):
        return phi_s(p)
    if cls is PairClass.PHI_R:
        return phi_r(p)
    if cls is PairClass.CASE1_OVERLINED:
        return conjugate(phi_s(unoverline_smallest(p)))
    if cls is PairClass.CASE3:
        return overline_smallest(phi_s(conjugate(p)))
    raise AssertionError(cls)


def involution_partner(p: BoxedPair) -> tuple[BoxedPair, bool]:
    """Partner of ``p`` under the global involution and whether ``p`` is fixed."""
    cls = classify(p)
    if cls is PairClass.CASE4_FIXED:
        return p, True
    try:
        return _dispatch(p, cls), False
    except (NotDefined, InvalidPair, IndexError, ValueError) as exc:
        raise InternalInconsistency(f"{cls} dispatch failed on {p}: {exc}") from exc


def fixed_points(n: int, family: Family) -> list[BoxedPair]:
    if not isinstance(family, General):
        raise NotApplicable("no involution is known for FQ3Prime")
    j = predicted_index(n, family)
    if j is None:
        return []
    size = family.m * j + family.r
    return [BoxedPair(j, make_overpartition([size] * j), family)]


def fq3_conjectured_fixed_point(k: int) -> BoxedPair:
    """The candidate ``(k, (2k, 2k-1, ..., k+1))`` in the FQ3Prime family."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return BoxedPair(k, make_overpartition(range(2 * k, k, -1)) if k else EMPTY, FQ3P)


def render(p: BoxedPair) -> str:
    """Text boxed diagram; the last cell of an overlined part gets a ``*``."""
    fam = _general(p)
    m, r = fam.m, fam.r
    lines = [" ".join(["0"] + [str(r)] * p.k)]
    for size, over in p.pi.parts():
        cells = [str(r)] + [str(m)] * ((size - r) // m)
        if over:
            cells[-1] += "*"
        lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"

