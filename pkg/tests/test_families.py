"""Family builders: hand-checked color values, degree spectra, component
counts, hypothesis gates, and the full verification grid."""

from __future__ import annotations

from collections import Counter

import pytest

from antimagic.families import (
    ACCEPTANCE_GRID,
    FAMILIES,
    ParameterError,
    build_df_variant,
    build_dfr,
    build_family,
    build_fb,
    build_fb1,
    build_fb2,
    build_fb_units,
    build_g1,
    build_g2,
    build_h,
    build_kd82,
    build_nc482,
    build_oddk_h,
    build_rdf,
    build_rfb,
    build_rg82,
)
from antimagic.verify import check_expected, induced_coloring


def sums_of(g):
    return induced_coloring(g).sums


def test_fb_units_k1_hub_sums():
    built = build_fb_units(1)
    s = sums_of(built.graph)
    assert s["x_1"] == 22 and s["x_2"] == 16
    assert s["u_1"] == s["v_1"] == s["u_2"] == s["v_2"] == 11
    assert s["w_1"] == s["w_2"] == 14
    assert sorted(built.graph.labels()) == list(range(1, 11))


def test_fb_units_k6_center_sum():
    built = build_fb_units(6)
    s = sums_of(built.graph)
    assert all(s[f"w_{i}"] == 79 for i in range(1, 13))


def test_fb_merge_of_twelve_units():
    built = build_fb(6)
    g = built.graph
    assert g.degree("x") == 36
    assert sums_of(g)["x"] == 1248 == 6 * (34 * 6 + 4)


def test_fb_k1_colors():
    built = build_fb(1)
    assert sorted(set(sums_of(built.graph).values())) == [11, 14, 38]


def test_fb_three_distinct_colors_always():
    for k in (1, 2, 5, 9):
        rep = induced_coloring(build_fb(k).graph)
        assert rep.color_count == 3


def test_rfb_merge_sets_match_worked_example():
    # 6FB(2) at k=6 fuses {x_i, x_13-i}; 3FB(4) fuses consecutive pairs with
    # their mirrors
    b62 = build_rfb(6, 2)
    assert len(b62.graph.components()) == 6
    s = sums_of(b62.graph)
    assert all(s[f"x_{j}"] == 208 for j in range(1, 7))

    b34 = build_rfb(3, 4)
    assert len(b34.graph.components()) == 3
    s = sums_of(b34.graph)
    assert all(s[f"x_{j}"] == 4 * (17 * 6 + 2) for j in range(1, 4))


def test_rfb_rejects_odd_s():
    with pytest.raises(ParameterError):
        build_rfb(2, 3)


def test_fb1_fb2_colors():
    b = build_fb1(2, 2)  # k = 2
    assert sorted(set(sums_of(b.graph).values())) == [27, 42, 72]
    assert not b.warnings
    b = build_fb2(3, 2)  # k = 3
    assert sorted(set(sums_of(b.graph).values())) == [31, 106, 120]


def test_fb1_fb2_hypothesis_warnings():
    b = build_fb2(2, 2)  # rs = 4 divisible by 4
    assert b.warnings and not b.chi_la_is_three
    rep = induced_coloring(b.graph)
    assert rep.local_antimagic  # graph still produced and labeled
    b = build_fb1(4, 2)  # r divisible by 4
    assert b.warnings and not b.chi_la_is_three


def test_rdf_example_colors_and_structure():
    b = build_rdf(3, 2)
    g = b.graph
    assert len(g.components()) == 3
    rep = induced_coloring(g)
    assert sorted(rep.color_classes) == [61, 79, 208]
    assert [len(rep.color_classes[v]) for v in (61, 79, 208)] == [24, 12, 6]
    deg = Counter(g.degrees().values())
    # per diamond fan: 4s degree-2, 2s degree-3, 2 hubs of degree 3s
    assert deg == {2: 24, 3: 12, 6: 6}
    assert all(g.degree(f"y_{j}") == 6 and g.degree(f"z_{j}") == 6
               for j in (1, 2, 3))


def test_rdf_size_formula():
    b = build_rdf(1, 2)
    assert b.graph.size == 20
    assert len(b.graph.components()) == 1


def test_dfr_component_count_and_size():
    b = build_dfr(1, 2)
    assert b.graph.size == 30
    assert len(b.graph.components()) == 2  # one diamond fan + the fan
    b = build_dfr(1, 4)
    assert len(b.graph.components()) == 2
    rep = induced_coloring(b.graph)
    assert rep.local_antimagic
    b = build_dfr(3, 2)
    assert len(b.graph.components()) == 4


def test_df_variant_colors():
    b = build_df_variant(3, 2, 1)  # k = 2
    assert sorted(set(sums_of(b.graph).values())) == [21, 27, 72]
    b = build_df_variant(1, 2, 2)  # alpha degree 3r
    assert all(b.graph.degree(f"alpha_{i}_{a}") == 6
               for i in (1, 2) for a in (1, 2))


def test_df3_equals_df4_at_r2():
    g3 = build_df_variant(3, 2, 2).graph
    g4 = build_df_variant(4, 2, 2).graph
    assert g3.size == g4.size
    assert sorted(g3.degrees().values()) == sorted(g4.degrees().values())
    assert Counter(sums_of(g3).values()) == Counter(sums_of(g4).values())


def test_df4_requires_even_r():
    with pytest.raises(ParameterError):
        build_df_variant(4, 3, 2)


def test_df12_warnings_on_hypothesis_violation():
    assert build_df_variant(1, 2, 2).warnings   # rs = 4 divisible by 4
    assert build_df_variant(2, 4, 2).warnings   # r divisible by 4
    assert not build_df_variant(1, 3, 2).warnings
    assert not build_df_variant(2, 3, 2).warnings


def test_nc482_sums():
    b = build_nc482(1)
    s = sums_of(b.graph)
    assert s["u_1_2"] == 31  # 30n+1 at n=1
    assert all(s[f"u_1_{i}"] == 21 for i in (1, 3, 5, 7))
    assert all(s[f"v_1_{i}"] == 21 for i in (1, 3, 5, 7))
    b6 = build_nc482(6)
    rep = induced_coloring(b6.graph)
    assert rep.local_antimagic
    assert sorted(rep.color_classes) == [121, 181, 182]


def test_nc482_adjacent_degree3_pairs_alternate():
    g = build_nc482(2).graph
    s = sums_of(g)
    for a in (1, 2):
        for i in (2, 4, 6, 8):
            assert {s[f"u_{a}_{i}"], s[f"v_{a}_{i}"]} == {61, 62}


def test_g1_g2_colors():
    b = build_g1(1, 2)  # n = 2
    s = sums_of(b.graph)
    assert all(s[f"U_1_{j}"] == 82 for j in range(1, 5))
    assert b.graph.degree("U_1_1") == 4

    b = build_g2(3, 2)  # n = 6: fused vertices carry s*(30n+1)
    s = sums_of(b.graph)
    assert all(s[f"U_{bk}_{j}"] == 2 * 181 for bk in (1, 2, 3) for j in (1, 4))
    assert all(s[f"V_{bk}_{j}"] == 2 * 181 for bk in (1, 2, 3) for j in (2, 3))
    assert len(b.graph.components()) == 3


def test_h_families():
    for m in (1, 2, 3):
        b = build_h(m, 1)
        s = sums_of(b.graph)
        assert s["x_1_1"] == 42
        rep = induced_coloring(b.graph)
        assert rep.local_antimagic and rep.color_count == 3
    # aligned-corner variant folds each component into a triangular bracelet:
    # 6 triangles around the four degree-4 vertices
    g = build_h(3, 2).graph
    assert len(g.components()) == 2
    deg = Counter(g.degrees().values())
    assert deg == {3: 16, 4: 8}


def test_hm_rs():
    b = build_family("Hm_rs", m=2, r=2, s=3)  # n = 6
    s = sums_of(b.graph)
    assert all(s[f"X_{bk}_{j}"] == 3 * 242 for bk in (1, 2) for j in (1, 2))
    rep = induced_coloring(b.graph)
    assert rep.local_antimagic and rep.color_count == 3


def test_c8_units_k4_sums():
    b = build_family("C8_units", k=4)
    s = sums_of(b.graph)
    assert s["u_1_2"] == 53          # 1 + 24 + 28
    assert s["u_1_4"] == 26          # 17 + 9
    assert s["u_1_8"] == 73          # 33 + 40
    assert s["x_1"] == 41
    rep = induced_coloring(b.graph)
    assert rep.local_antimagic and rep.color_count == 4


def test_bk_and_kc82():
    b = build_family("Bk", k=2)
    s = sums_of(b.graph)
    assert all(s[f"b_{i}"] == 24 * 2 + 3 for i in (1, 2))
    b = build_family("kC82", k=2)
    s = sums_of(b.graph)
    assert all(s[f"z_{i}"] == 28 * 2 + 2 for i in (1, 2))
    assert b.graph.degree("z_1") == 4


def test_kd82_fused_value_is_34k_plus_4():
    for k in (1, 4):
        b = build_kd82(k)
        s = sums_of(b.graph)
        assert all(s[f"w_{i}"] == 34 * k + 4 for i in range(1, k + 1))
        assert all(s[f"w_{i}"] != 34 * k + 2 for i in range(1, k + 1))
        assert b.graph.degree("w_1") == 6
    assert build_kd82(4).expected.values.count(140) == 1


def test_rg82_small():
    b = build_rg82(1, 2)  # k = 2
    s = sums_of(b.graph)
    assert s["p_1"] == 72 and s["q_1"] == 72
    assert b.graph.degree("p_1") == 6
    assert len(b.graph.components()) == 1
    b = build_rg82(2, 2)  # the two-component case
    assert len(b.graph.components()) == 2
    rep = induced_coloring(b.graph)
    assert rep.local_antimagic and rep.color_count == 3


def test_oddk_h_matches_its_claim():
    b = build_oddk_h(1, 3)  # k = 3
    rep = induced_coloring(b.graph)
    assert rep.local_antimagic
    assert sorted(rep.color_classes) == sorted([31, 40, 2 * 53 + 55, 2 * 53 + 20])
    assert any("match" in note for note in b.notes)
    # merges never change labels, so the bijection survives
    assert sorted(b.graph.labels()) == list(range(1, 31))
    b = build_oddk_h(3, 1)  # s = 1 degenerates to the plain units
    rep = induced_coloring(b.graph)
    assert rep.local_antimagic
    assert sorted(rep.color_classes) == [20, 31, 40, 55]


def test_oddk_h_rejects_even_k():
    with pytest.raises(ParameterError):
        build_oddk_h(2, 3)


def test_parameter_errors():
    with pytest.raises(ParameterError):
        build_family("FB", k=0)
    with pytest.raises(ParameterError):
        build_family("rDF", r=1, s=1)  # rs < 2
    with pytest.raises(ParameterError):
        build_family("DFr", r=1, s=3)  # odd s
    with pytest.raises(ParameterError):
        build_family("rG82", r=2, s=3)  # odd s
    with pytest.raises(ParameterError):
        build_family("nope", k=1)
    with pytest.raises(ParameterError):
        build_family("FB", n=1)  # wrong parameter name


@pytest.mark.parametrize("tag", sorted(ACCEPTANCE_GRID))
def test_family_grid_verifies(tag):
    for params in ACCEPTANCE_GRID[tag]:
        built = build_family(tag, **params)
        assert sorted(built.graph.labels()) == list(range(1, built.graph.size + 1))
        rep = induced_coloring(built.graph)
        assert rep.local_antimagic, (tag, params, rep.conflicts[:3])
        chk = check_expected(built.graph, built.expected)
        assert chk.passed, (tag, params, chk.diffs)


def test_registry_covers_grid():
    assert set(ACCEPTANCE_GRID) == set(FAMILIES)


def test_c482_is_balanced_bipartite():
    from antimagic.graph import is_bipartite

    bip = is_bipartite(build_nc482(1).graph)
    assert bip is not None and bip.part_sizes == (8, 8)


def test_dfr_shape_equals_rdf_plus_fan():
    # structurally, DF_1(4) is the disjoint union of 1DF(4) and FB(2)
    from antimagic.graph import disjoint_union

    combined = disjoint_union(build_rdf(1, 2).graph, build_fb(1).graph)
    direct = build_dfr(1, 2).graph
    assert sorted(combined.degrees().values()) == sorted(direct.degrees().values())
    assert combined.size == direct.size
    assert len(combined.components()) == len(direct.components()) == 2
