import random
from fractions import Fraction

import pytest

from skewmori import geometry
from skewmori.chambers import (
    blowup_one_decomposition,
    chamber_of,
    configuration_for,
    conjecture_counts,
    conjecture_label_sets,
    decomposition_for,
    dictionary_label,
    describe_signature,
    first_blowup_intervals,
    forced_groups,
    gkz_chambers,
    group_is_forced,
    sbl_regions,
)
from skewmori.cones import Cone
from skewmori.linalg import dot


A6_CHAMBERS = [
    {(1, 0, 0), (2, -1, 0), (3, -2, -1)},   # nef
    {(1, 0, 0), (2, -1, 0), (0, 0, 1)},
    {(2, -1, 0), (3, -2, -1), (0, 0, 1)},
    {(1, 0, 0), (0, 1, 0), (0, 0, 1)},
    {(1, 0, 0), (0, 1, 0), (3, -2, -1)},
]

A7_CHAMBERS = [
    {(1, 0, 0), (2, -1, 0), (3, -2, -1)},   # nef
    {(1, 0, 0), (2, -1, 0), (0, 0, 1)},
    {(2, -1, 0), (3, -2, -1), (0, 0, 1)},
    {(1, 0, 0), (0, 1, 0), (0, 0, 1)},
    {(3, -2, -1), (4, -3, -2), (0, 0, 1)},
    {(1, 0, 0), (3, -2, -1), (6, -3, -2)},  # second movable chamber
    {(0, 1, 0), (1, 0, 0), (6, -3, -2)},
    {(4, -3, -2), (3, -2, -1), (6, -3, -2)},
    {(0, 1, 0), (4, -3, -2), (6, -3, -2)},
]


def test_chamber_counts():
    for n, expected in [(4, 2), (5, 3), (6, 5), (7, 9), (8, 15)]:
        assert len(decomposition_for(n).chambers) == expected, n


def test_unit_vectors_single_chamber():
    from skewmori.chambers import GeneratorGroup, VectorConfiguration
    config = VectorConfiguration(
        2, [GeneratorGroup("A", (1, 0), 1), GeneratorGroup("B", (0, 1), 1)], (1, 1))
    assert len(gkz_chambers(config).chambers) == 1


def test_a6_chamber_rays():
    got = [set(ch.rays) for ch in decomposition_for(6).chambers]
    assert len(got) == 5
    for want in A6_CHAMBERS:
        assert want in got


def test_a7_chamber_rays_and_emergent_ray():
    got = [set(ch.rays) for ch in decomposition_for(7).chambers]
    assert len(got) == 9
    for want in A7_CHAMBERS:
        assert want in got
    assert any((6, -3, -2) in rays for rays in got)


def test_chamber_of_nef_interior_a8():
    config = configuration_for(8)
    w = tuple(sum(c) for c in zip(*(g.coeffs for g in geometry.nef_generators(8))))
    ch = chamber_of(config, w)
    assert ch.is_maximal()
    assert set(ch.rays) == {(1, 0, 0, 0), (4, -3, -2, -1), (2, -1, 0, 0), (3, -2, -1, 0)}
    assert ch.forced == frozenset()


def test_chamber_of_boundary_ray_is_face():
    config = configuration_for(6)
    ch = chamber_of(config, (2, -1, 0))  # a nef generator ray
    assert not ch.is_maximal()
    assert ch.rays == ((2, -1, 0),)


def test_chamber_of_exceptional_side():
    # a class heavy on E_1 with a little H sits in the <D_2, E_1, E_2> chamber
    config = configuration_for(6)
    ch = chamber_of(config, (1, 3, 1))
    assert set(ch.rays) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert ch.forced == frozenset({"S1", "S2"})


def test_chamber_of_outside_effective():
    with pytest.raises(ValueError):
        chamber_of(configuration_for(6), (-1, 0, 0))


def test_forced_groups_a6_examples():
    config = configuration_for(6)
    # interior of <D_2, D_4, E_2>
    assert forced_groups(config, (3, -1, 1)) == frozenset({"S2"})
    # interior of the nef cone
    assert forced_groups(config, (6, -3, -1)) == frozenset()
    # interior of <D_2, E_1, E_2>
    assert forced_groups(config, (1, 1, 1)) == frozenset({"S1", "S2"})


def test_forced_raw_rule_vs_filtered():
    # on <D_4, D_6, E_2> the raw monomial test also forces the T6 family, but
    # its zero locus is empty in the ambient toric model, so the stable base
    # locus keeps only E_2 and the two E_2 chambers merge
    config = configuration_for(6)
    w = (5, -3, 0)
    assert group_is_forced(config, {"T6"}, w)
    assert forced_groups(config, w) == frozenset({"S2"})
    assert group_is_forced(config, {"S2"}, w)


def test_sbl_region_counts_and_merge():
    assert len(decomposition_for(6).regions) == 4
    assert len(decomposition_for(7).regions) == 8
    dec8 = decomposition_for(8)
    assert len(dec8.regions) == 9
    assert sorted(len(r.chambers) for r in dec8.regions) == [1, 1, 1, 1, 1, 2, 2, 3, 3]


def test_a7_wall_removal():
    # the two chambers <D_2,D_4,E_2> and <D_4,D_6,E_2> form one region
    dec = decomposition_for(7)
    pair = [{(1, 0, 0), (2, -1, 0), (0, 0, 1)}, {(2, -1, 0), (3, -2, -1), (0, 0, 1)}]
    idxs = {i for i, ch in enumerate(dec.chambers) if set(ch.rays) in pair}
    region = next(r for r in dec.regions if idxs <= set(r.chambers))
    assert set(region.chambers) == idxs
    assert region.labels == frozenset({"S2"})


def test_movable_chambers_are_separate_regions():
    # both movable chambers have no divisorial base locus, but only the nef
    # one has an empty stable base locus
    dec = decomposition_for(7)
    nef_idx = next(i for i, ch in enumerate(dec.chambers)
                   if set(ch.rays) == A7_CHAMBERS[0])
    flop_idx = next(i for i, ch in enumerate(dec.chambers)
                    if set(ch.rays) == A7_CHAMBERS[5])
    nef_ch, flop_ch = dec.chambers[nef_idx], dec.chambers[flop_idx]
    assert nef_ch.forced == flop_ch.forced == frozenset()
    assert nef_ch.signature == frozenset()
    assert flop_ch.signature == frozenset({frozenset({"S1", "S3"})})
    assert describe_signature(flop_ch.signature) == "E1&E3"
    regions = {next(k for k, r in enumerate(dec.regions) if i in r.chambers)
               for i in (nef_idx, flop_idx)}
    assert len(regions) == 2


def test_refinement_invariant():
    for n in (6, 7, 8):
        dec = decomposition_for(n)
        nef = geometry.nef_cone(n)
        mov = geometry.movable_cone(n)
        eff = geometry.eff_cone(n)
        for ch in dec.chambers:
            w = ch.representative
            assert eff.contains(w)
            inside = sum([nef.contains(w), mov.contains(w), eff.contains(w)])
            assert inside >= 1
            if nef.contains(w):
                assert ch.forced == frozenset()
            # chamber interiors never straddle the nef or movable boundary
            for cone in (nef, mov):
                assert cone.contains(w) == all(cone.contains(r) for r in ch.rays)


def test_coverage_and_disjointness():
    rng = random.Random(13)
    for n in (6, 7):
        dec = decomposition_for(n)
        eff_rays = [g.coeffs for g in geometry.eff_generators(n)]
        for _ in range(40):
            coeffs = [Fraction(rng.randint(0, 9)) for _ in eff_rays]
            if not any(coeffs):
                continue
            w = tuple(sum(c * Fraction(r[i]) for c, r in zip(coeffs, eff_rays))
                      for i in range(len(eff_rays[0])))
            holding = [ch for ch in dec.chambers if ch.cone.contains(w)]
            strict = [ch for ch in dec.chambers if ch.cone.interior_contains(w)]
            assert len(holding) >= 1
            assert len(strict) <= 1


def test_walls_between_chambers():
    dec = decomposition_for(6)
    assert all(len(rays) >= 1 for _, _, rays in dec.walls)
    # nef shares a wall with both adjacent movable-boundary chambers
    nef_idx = next(i for i, ch in enumerate(dec.chambers) if set(ch.rays) == A6_CHAMBERS[0])
    assert any(nef_idx in (i, j) for i, j, _ in dec.walls)


def test_determinism_fresh_recomputation():
    first = gkz_chambers(configuration_for(6))
    second = gkz_chambers(configuration_for(6))
    assert [ch.rays for ch in first.chambers] == [ch.rays for ch in second.chambers]
    assert [r.chambers for r in first.regions] == [r.chambers for r in second.regions]
    assert [ch.forced for ch in first.chambers] == [ch.forced for ch in second.chambers]


def test_conjecture_counts_and_labels():
    for n, expected in [(6, 3), (7, 6), (8, 7)]:
        computed, predicted = conjecture_counts(n)
        assert computed == expected and predicted == expected
        comp, pred = conjecture_label_sets(n)
        assert comp == pred


def test_rank_guard():
    with pytest.raises(ValueError):
        decomposition_for(14)


def test_blowup_one_counts():
    for n, expected in [(4, 2), (5, 3), (6, 3), (7, 4), (8, 4), (9, 5)]:
        assert len(blowup_one_decomposition(n).chambers) == expected, n


def test_blowup_one_intervals_n5():
    iv = first_blowup_intervals(5)
    assert [(r["left"], r["right"]) for r in iv] == [
        ((0, 1), (1, 0)), ((1, 0), (2, -1)), ((2, -1), (3, -2))]
    assert [(r["closed_left"], r["closed_right"]) for r in iv] == [
        (True, False), (True, True), (False, True)]
    assert [sorted(r["forced"]) for r in iv] == [["S1"], [], ["T6"]]


def test_blowup_one_walls_n6():
    iv = first_blowup_intervals(6)
    assert [r["right"] for r in iv] == [(1, 0), (2, -1), (3, -2)]


def test_blowup_one_sec_labels():
    # (D_{2h}, D_{2h+2}] carries the stable base locus of the rank-2h
    # degeneracy locus: the jointly forced tail of Pfaffian families
    # T_{2h+2}, ..., whose common zero locus is exactly that stratum
    for n in (7, 8):
        iv = first_blowup_intervals(n)
        top = (n - 1) // 2
        for idx, row in enumerate(iv[2:], start=2):
            tail = frozenset(f"T{2 * k + 2}" for k in range(idx, top + 1))
            assert row["signature"] == frozenset({tail})
            assert describe_signature(row["signature"]) == f"sec{idx}"
    assert dictionary_label("T6") == "sec2"
    assert dictionary_label("S2") == "E2"


def test_blowup_one_mcd_equals_sbl():
    for n in (5, 6, 7, 8):
        dec = blowup_one_decomposition(n)
        assert len(dec.regions) == len(dec.chambers)


def test_label_monotonicity_along_rank_two_ray():
    # from D_2 toward E_1 the base locus grows (empty into E_1); from D_2
    # downward the base loci are nested secants of increasing index
    iv = first_blowup_intervals(8)
    assert sorted(iv[0]["forced"]) == ["S1"] and iv[1]["forced"] == frozenset()
    sec_indices = [int(describe_signature(r["signature"])[3:]) for r in iv[2:]]
    assert sec_indices == sorted(sec_indices)
    assert all(i >= 2 for i in sec_indices)


def test_region_listing_order_stable():
    dec = decomposition_for(6)
    regions = sbl_regions(dec)
    assert regions == sbl_regions(dec)
    assert sum(len(r.chambers) for r in regions) == len(dec.chambers)
