import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cached_pairs, general_pairs
from falsetheta import diagrams as dg
from falsetheta import partitions as pt
from falsetheta.diagrams import PairClass as C
from falsetheta.errors import NotApplicable, NotDefined
from oracles import transpose_cells

# families and sizes for the exhaustive per-class checks
SWEEP = [(pt.FQ4, 22), (pt.General(3, 1), 16), (pt.General(3, 2), 16), (pt.General(4, 1), 16)]


def sweep(family, n_max):
    for n in range(n_max + 1):
        yield from cached_pairs(n, family)


def by_class(family, n_max, cls):
    return [p for p in sweep(family, n_max) if dg.classify(p) is cls]


sweep_ids = [str(f) for f, _ in SWEEP]


# --------------------------------------------------------------------------- worked examples


def test_conjugate_plain_example():
    assert dg.conjugate(pt.pair(4, "9,9,7,7,5,5,3")) == pt.pair(7, "15,13,9,5")


def test_conjugate_overlined_example():
    assert dg.conjugate(pt.pair(3, "7,5o,5,5,3o,1,1,1")) == pt.pair(8, "11,9o,3o")


def test_conjugate_empty():
    assert dg.conjugate(pt.pair(3, "")) == pt.pair(0, "1,1,1")
    assert dg.conjugate(pt.pair(0, "")) == pt.pair(0, "")


def test_phi_s_example():
    assert dg.phi_s(pt.pair(4, "9,9,9,7o,7,5o")) == pt.pair(5, "11,11,11,7o,5o")


def test_phi_s_small():
    assert dg.phi_s(pt.pair(0, "1,1")) == pt.pair(1, "1")


@pytest.mark.parametrize("p", [pt.pair(1, "3"), pt.pair(2, "")])
def test_phi_s_not_defined(p):
    with pytest.raises(NotDefined):
        dg.phi_s(p)


def test_phi_s_rejects_overline_clash():
    # bottom 1o re-appended under a conjugated remainder ending in 1
    with pytest.raises(NotDefined):
        dg.phi_s(pt.pair(2, "3,1o"))


def test_phi_r_example():
    assert dg.phi_r(pt.pair(5, "11,11,9,9,7o,7,7")) == pt.pair(8, "17,17,15,9o")


def test_phi_r_not_defined():
    with pytest.raises(NotDefined):
        dg.phi_r(pt.pair(1, "3"))


@pytest.mark.parametrize("p, cls", [
    (pt.pair(1, "3"), C.CASE4_FIXED),
    (pt.pair(0, ""), C.CASE4_FIXED),
    (pt.pair(3, "3,3"), C.CONJ_ODD),
    (pt.pair(0, "1,1,1,1"), C.CASE2),
    (pt.pair(2, ""), C.CASE3),
    (pt.pair(3, ""), C.CONJ_ODD),
    (pt.pair(3, "1o"), C.CASE1_OVERLINED),
    (pt.pair(3, "1"), C.CASE1_PLAIN),
])
def test_classify_examples(p, cls):
    assert dg.classify(p) is cls


def test_involution_partner_conj_odd():
    p = pt.pair(3, "3,3")
    partner, fixed = dg.involution_partner(p)
    assert not fixed
    assert partner == pt.pair(2, "5,1,1")
    assert pt.sign(partner) == -pt.sign(p)
    assert pt.q_weight(partner) == pt.q_weight(p) == 9


def test_involution_partner_fixed():
    assert dg.involution_partner(pt.pair(1, "3")) == (pt.pair(1, "3"), True)


def test_involution_partner_case2():
    p = pt.pair(0, "1,1,1,1")
    partner, fixed = dg.involution_partner(p)
    assert not fixed
    assert dg.classify(partner) is C.CASE1_PLAIN
    assert (pt.sign(p), pt.sign(partner)) == (1, -1)


@pytest.mark.parametrize("n, family, want", [
    (4, pt.FQ4, [pt.pair(1, "3")]),
    (12, pt.FQ4, [pt.pair(2, "5,5")]),
    (5, pt.General(3, 1), [pt.pair(1, "4", pt.General(3, 1))]),
    (0, pt.FQ4, [pt.pair(0, "")]),
    (5, pt.FQ4, []),
])
def test_fixed_points(n, family, want):
    assert dg.fixed_points(n, family) == want


@pytest.mark.parametrize("k, parts, n, s", [(0, "", 0, 1), (1, "2", 3, -1), (3, "6,5,4", 18, -1)])
def test_fq3_conjectured_fixed_point(k, parts, n, s):
    p = dg.fq3_conjectured_fixed_point(k)
    assert p == pt.pair(k, parts, pt.FQ3P)
    assert pt.q_weight(p) == n
    assert pt.sign(p) == s


def test_fq3_conjectured_fixed_points_are_valid():
    for k in range(13):
        p = dg.fq3_conjectured_fixed_point(k)
        n = 3 * k * (k + 1) // 2
        assert pt.q_weight(p) == n
        assert pt.sign(p) == pt.predicted_count(n, pt.FQ3P) == (-1) ** k
        if n <= 18:
            assert p in cached_pairs(n, pt.FQ3P)


def test_render_overlined_example():
    lines = dg.render(pt.pair(3, "7,5o,5,5,3o,1,1,1")).splitlines()
    assert len(lines) == 9
    assert lines[0] == "0 1 1 1"
    assert lines[1] == "1 2 2 2"
    assert lines[2] == "1 2 2*"
    assert lines[5] == "1 2*"


def test_render_empty_and_general():
    assert dg.render(pt.pair(0, "")) == "0\n"
    assert dg.render(pt.pair(1, "4", pt.General(3, 1))) == "0 1\n1 3\n"


@pytest.mark.parametrize("fn", [dg.conjugate, dg.phi_s, dg.phi_r, dg.classify,
                                dg.involution_partner, dg.render])
def test_fq3_family_not_applicable(fn):
    with pytest.raises(NotApplicable):
        fn(pt.pair(1, "2", pt.FQ3P))


def test_fixed_points_not_applicable_for_fq3():
    with pytest.raises(NotApplicable):
        dg.fixed_points(3, pt.FQ3P)


# --------------------------------------------------------------------------- conjugation


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_conjugate_matches_cell_transpose(data):
    family = data.draw(st.sampled_from([pt.FQ4, pt.General(3, 1), pt.General(5, 2)]))
    p = data.draw(general_pairs(family))
    c = dg.conjugate(p)
    sizes = tuple(s for s, _ in p.pi.parts())
    assert (c.k, tuple(s for s, _ in c.pi.parts())) == transpose_cells(p.k, sizes, family.m, family.r)


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_conjugate_is_weight_preserving_involution(data):
    family = data.draw(st.sampled_from([pt.FQ4, pt.General(3, 2), pt.General(4, 1)]))
    p = data.draw(general_pairs(family))
    c = dg.conjugate(p)
    assert dg.conjugate(c) == p
    assert (c.k, c.pi.nu) == (p.pi.nu, p.k)
    assert pt.q_weight(c) == pt.q_weight(p)
    assert pt.z_weight(c) == pt.z_weight(p)
    assert len(c.pi.overlined_sizes()) == len(p.pi.overlined_sizes())


@pytest.mark.parametrize("family, n_max", SWEEP, ids=sweep_ids)
def test_conjugation_sign_reverses_exactly_on_odd(family, n_max):
    for p in sweep(family, n_max):
        c = dg.conjugate(p)
        odd = (p.k + p.pi.nu) % 2 == 1
        assert (pt.sign(c) == -pt.sign(p)) == odd


@pytest.mark.parametrize("family, n_max", SWEEP, ids=sweep_ids)
def test_subset_counts_symmetric(family, n_max):
    # |S_{n,k,l}| = |S_{n,l,k}|
    for n in range(n_max + 1):
        counts = {}
        for p in cached_pairs(n, family):
            key = (p.k, p.pi.nu)
            counts[key] = counts.get(key, 0) + 1
        for (k, nu), c in counts.items():
            assert counts.get((nu, k), 0) == c


# --------------------------------------------------------------------------- per-class involutions


def _assert_closed_involution(pairs, fn, cls, target):
    members = set(pairs)
    for p in pairs:
        q = fn(p)
        assert dg.classify(q) is target, (p, q)
        assert pt.sign(q) == -pt.sign(p)
        assert pt.q_weight(q) == pt.q_weight(p)
        assert pt.z_weight(q) == pt.z_weight(p)
        if cls is target:
            assert q in members and fn(q) == p


@pytest.mark.parametrize("family, n_max", SWEEP, ids=sweep_ids)
@pytest.mark.parametrize("cls, fn", [
    (C.PHI_S_SINGLE, dg.phi_s),
    (C.PHI_S_MULTI, dg.phi_s),
    (C.PHI_R, dg.phi_r),
], ids=["phi_s-single", "phi_s-multi", "phi_r"])
def test_class_closed_involutions(family, n_max, cls, fn):
    pairs = by_class(family, n_max, cls)
    assert pairs
    _assert_closed_involution(pairs, fn, cls, cls)


@pytest.mark.parametrize("family, n_max", SWEEP, ids=sweep_ids)
def test_case1_plain_bijects_with_case2(family, n_max):
    plain = by_class(family, n_max, C.CASE1_PLAIN)
    case2 = by_class(family, n_max, C.CASE2)
    _assert_closed_involution(plain, dg.phi_s, C.CASE1_PLAIN, C.CASE2)
    _assert_closed_involution(case2, dg.phi_s, C.CASE2, C.CASE1_PLAIN)
    assert {dg.phi_s(p) for p in plain} == set(case2)


@pytest.mark.parametrize("family, n_max", SWEEP, ids=sweep_ids)
def test_case1_overlined_bijects_with_case3(family, n_max):
    forward = lambda p: dg.conjugate(dg.phi_s(dg.unoverline_smallest(p)))
    backward = lambda p: dg.overline_smallest(dg.phi_s(dg.conjugate(p)))
    over = by_class(family, n_max, C.CASE1_OVERLINED)
    case3 = by_class(family, n_max, C.CASE3)
    _assert_closed_involution(over, forward, C.CASE1_OVERLINED, C.CASE3)
    assert {forward(p) for p in over} == set(case3)
    assert all(forward(backward(p)) == p for p in case3)


@pytest.mark.parametrize("family, n_max", SWEEP, ids=sweep_ids)
def test_conjugation_maps_case2_to_case3(family, n_max):
    # conjugation is a sign-preserving bijection between Case 2 and Case 3
    case2 = by_class(family, n_max, C.CASE2)
    assert {dg.conjugate(p) for p in case2} == set(by_class(family, n_max, C.CASE3))
    assert all(pt.sign(dg.conjugate(p)) == pt.sign(p) for p in case2)


@pytest.mark.parametrize("family, n_max", SWEEP, ids=sweep_ids)
def test_phi_s_sufficient_conditions(family, n_max):
    # (s-r)/m < nu_ell, or equality with s < mk+r and an unoverlined last part, implies phi_s defined
    m, r = family.m, family.r
    checked = 0
    for p in sweep(family, n_max):
        if not p.pi.runs:
            continue
        nu, s, nu_s, nu_ell = pt.stats(p)
        level = (s - r) // m
        ok = level < nu_ell or (
            level == nu_ell and s < pt.max_part(p.k, family) and not (p.pi.runs[-1].overlined and nu_s == 1)
        )
        if ok:
            q = dg.phi_s(p)
            assert (q.k, q.pi.nu) == (nu - 1, p.k + 1)
            checked += 1
    assert checked


@pytest.mark.parametrize("family, n_max", SWEEP, ids=sweep_ids)
def test_phi_r_defined_when_last_row_longer(family, n_max):
    m, r = family.m, family.r
    for p in sweep(family, n_max):
        if p.pi.runs and (p.pi.smallest - r) // m > pt.stats(p).nu_ell:
            dg.phi_r(p)


# --------------------------------------------------------------------------- global involution


@pytest.mark.parametrize("family, n_max", SWEEP, ids=sweep_ids)
def test_classify_total_and_partner_table(family, n_max):
    seen = set()
    for n in range(n_max + 1):
        members = set(cached_pairs(n, family))
        fixed = []
        for p in cached_pairs(n, family):
            cls = dg.classify(p)
            seen.add(cls)
            partner, is_fixed = dg.involution_partner(p)
            if is_fixed:
                assert cls is C.CASE4_FIXED
                fixed.append(p)
                continue
            assert partner != p and partner in members
            assert pt.sign(partner) == -pt.sign(p)
            assert dg.classify(partner) is dg.PARTNER_CLASS[cls]
            assert dg.involution_partner(partner) == (p, False)
        assert fixed == dg.fixed_points(n, family)
        assert sum(pt.sign(p) for p in fixed) == pt.predicted_count(n, family)
    if family == pt.FQ4:
        assert seen == set(C)


@pytest.mark.parametrize("k", range(0, 9))
def test_empty_pair_conventions(k):
    p = pt.pair(k, "")
    cls = dg.classify(p)
    if k == 0:
        assert cls is C.CASE4_FIXED
    elif k % 2:
        assert cls is C.CONJ_ODD
    else:
        assert cls is C.CASE3
        assert dg.classify(dg.involution_partner(p)[0]) is C.CASE1_OVERLINED
