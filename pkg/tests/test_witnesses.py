import pytest

from tokengraphs import formulas as F
from tokengraphs import witnesses as W
from tokengraphs.graphs import cycle, fan, path, wheel
from tokengraphs.mis import alpha, is_independent
from tokengraphs.operators import (
    double_vertex,
    indices_of,
    multiset_token,
    pair_graph,
    subset_token,
)
from tokengraphs.verify import alpha_after_deleting_tokens


def tokens_of(structured):
    return [t.elements for t in structured.members]


# ---------------------------------------------------------------------------
# structured slices


def test_l_set_diagonal_slice():
    assert tokens_of(W.l_set(4, 4)) == [(1, 1), (2, 2), (3, 3), (4, 4)]


def test_l_set_middle_slice():
    assert tokens_of(W.l_set(5, 3)) == [(1, 3), (2, 4), (3, 5)]


def test_l_set_first_slice():
    assert tokens_of(W.l_set(4, 1)) == [(1, 4)]


def test_l_set_sizes_and_domain():
    for m in range(3, 10):
        for q in range(1, m + 1):
            assert len(W.l_set(m, q)) == q
    with pytest.raises(ValueError):
        W.l_set(4, 0)
    with pytest.raises(ValueError):
        W.l_set(4, 5)
    with pytest.raises(ValueError):
        W.l_set(2, 1)


@pytest.mark.parametrize("m", range(3, 16))
def test_l_sets_partition_pair_cycle_vertices(m):
    dg = pair_graph(cycle(m))
    seen = []
    for q in range(1, m + 1):
        seen.extend(W.l_set(m, q).members)
    assert len(seen) == len(set(seen)) == dg.graph.order
    assert set(seen) == set(dg.labels)


@pytest.mark.parametrize("m", range(3, 16))
def test_l_set_independence_dichotomy(m):
    dg = pair_graph(cycle(m))
    for q in range(1, m + 1):
        actual = is_independent(dg.graph, indices_of(dg, W.l_set(m, q).members))
        assert actual == W.l_is_independent_expected(m, q), (m, q)


def test_l_is_independent_expected_pattern():
    assert not W.l_is_independent_expected(5, 3)  # m = 2q-1
    assert W.l_is_independent_expected(4, 2)
    for m in range(3, 12):
        assert W.l_is_independent_expected(m, 1)
        assert W.l_is_independent_expected(m, m)


# ---------------------------------------------------------------------------
# linking


def test_linked_consecutive_slices():
    dg = pair_graph(cycle(5))
    a = indices_of(dg, W.l_set(5, 2).members)
    b = indices_of(dg, W.l_set(5, 3).members)
    assert W.linked(dg.graph, a, b)


def test_not_linked_distant_slices():
    dg = pair_graph(cycle(6))
    a = indices_of(dg, W.l_set(6, 1).members)
    b = indices_of(dg, W.l_set(6, 3).members)
    assert not W.linked(dg.graph, a, b)


def test_linked_self_of_independent_set_is_false():
    g = path(4)
    assert not W.linked(g, {1, 3}, {1, 3})


def test_linking_profile_m4():
    assert W.linking_profile(4) == frozenset({(1, 2), (2, 3), (3, 4), (1, 4)})


def test_linking_profile_m5_includes_mirror_pair():
    profile = W.linking_profile(5)
    assert (1, 5) in profile
    assert (3, 3) in profile  # the dependent middle slice links to itself


@pytest.mark.parametrize("m", range(4, 13))
def test_linking_profile_matches_prediction(m):
    assert W.linking_profile(m) == W.predicted_linking_profile(m)


def test_no_unexpected_distant_links():
    for m in (6, 8):
        for i, j in W.linking_profile(m):
            assert j - i <= 1 or i + j == m + 1


# ---------------------------------------------------------------------------
# r sets


def test_r_set_dv_matches_listing():
    assert tokens_of(W.r_set_dv(4, 2)) == [(1, 2), (2, 3), (2, 4)]


def test_r_set_pair_matches_listing():
    assert tokens_of(W.r_set_pair(4, 2)) == [(1, 2), (2, 2), (2, 3), (2, 4)]


def test_r_set_sizes():
    for m in range(2, 9):
        for q in range(1, m + 1):
            assert len(W.r_set_dv(m, q)) == m - 1
            assert len(W.r_set_pair(m, q)) == m


def test_b_sets():
    assert tokens_of(W.b_set_dv(4)) == [(1, 5), (2, 5), (3, 5), (4, 5)]
    assert tokens_of(W.b_set_pair(3)) == [(1, 4), (2, 4), (3, 4), (4, 4)]


# ---------------------------------------------------------------------------
# witnesses


@pytest.mark.parametrize("m", range(3, 13))
def test_pair_cycle_witness(m):
    w = W.pair_cycle_witness(m)
    dg = pair_graph(cycle(m))
    assert is_independent(dg.graph, w.members)
    assert len(w) == F.pair_cycle(m)


def test_pair_cycle_witness_slice_selection():
    # even: all even slices; odd k: skip the middle slice upward
    assert len(W.pair_cycle_witness_tokens(4)) == 6  # slices 2 and 4
    toks7 = W.pair_cycle_witness_tokens(7)  # k=3 odd: slices 2, 5, 7
    assert len(toks7) == 2 + 5 + 7
    toks9 = W.pair_cycle_witness_tokens(9)  # k=4 even: slices 2, 4, 7, 9
    assert len(toks9) == 2 + 4 + 7 + 9
    assert len(W.pair_cycle_witness_tokens(3)) == 3  # degenerate diagonal slice


@pytest.mark.parametrize("m", range(2, 12))
def test_dv_path_witness(m):
    w = W.dv_path_witness(m)
    dg = double_vertex(path(m))
    assert is_independent(dg.graph, w.members)
    assert len(w) == F.dv_path(m)


def test_dv_path_witness_m4_listing():
    assert [t.elements for t in W.dv_path_witness_tokens(4)] == [(1, 2), (1, 4), (2, 3), (3, 4)]


def test_dv_path_witness_m2():
    assert [t.elements for t in W.dv_path_witness_tokens(2)] == [(1, 2)]


@pytest.mark.parametrize("m", range(1, 12))
def test_dv_fan_witness(m):
    w = W.dv_fan_witness(m)
    dg = double_vertex(fan(m))
    assert is_independent(dg.graph, w.members)
    assert len(w) == F.dv_fan(m)


@pytest.mark.parametrize("m", range(2, 11))
def test_pair_path_witness(m):
    w = W.pair_path_witness(m)
    dg = pair_graph(path(m))
    assert is_independent(dg.graph, w.members)
    assert len(w) == F.pair_path(m)


@pytest.mark.parametrize("m", range(2, 11))
def test_pair_fan_witness(m):
    w = W.pair_fan_witness(m)
    dg = pair_graph(fan(m))
    assert is_independent(dg.graph, w.members)
    assert len(w) == F.pair_fan(m)


def test_pair_fan_witness_contains_apex_diagonal():
    assert multiset_token(4, 4) in W.pair_fan_witness_tokens(3)


@pytest.mark.parametrize("m", range(3, 11))
def test_pair_wheel_witness(m):
    w = W.pair_wheel_witness(m)
    dg = pair_graph(wheel(m))
    assert is_independent(dg.graph, w.members)
    assert len(w) == F.pair_wheel(m)


def test_pair_wheel_witness_m4_composition():
    toks = W.pair_wheel_witness_tokens(4)
    assert multiset_token(5, 5) in toks
    assert len(toks) == 7


@pytest.mark.parametrize("m", range(4, 11))
def test_dv_wheel_witness(m):
    w = W.dv_wheel_witness(m)
    dg = double_vertex(wheel(m))
    assert is_independent(dg.graph, w.members)
    assert len(w) == F.dv_wheel(m)
    # solver-backed witness avoids the apex tokens by construction
    apex = indices_of(dg, W.b_set_dv(m).members)
    assert not (w.members & apex)


def test_dv_wheel_witness_m3_special_case():
    # the apex-free part of the m=3 wheel double vertex graph is a
    # triangle, so the construction stops at 1 while the graph reaches 2
    w = W.dv_wheel_witness(3)
    dg = double_vertex(wheel(3))
    assert len(w) == 1
    assert is_independent(dg.graph, w.members)
    assert alpha(dg.graph).alpha == 2


# ---------------------------------------------------------------------------
# the shift isomorphism


def test_phi_examples():
    assert W.phi(multiset_token(1, 1)).elements == (1, 2)
    assert W.phi(multiset_token(2, 5)).elements == (2, 6)


def test_phi_kind_checks():
    with pytest.raises(ValueError):
        W.phi(subset_token(1, 2))
    with pytest.raises(ValueError):
        W.phi_inverse(multiset_token(1, 2))


def test_phi_round_trip():
    dg = pair_graph(path(5))
    for tok in dg.labels:
        assert W.phi_inverse(W.phi(tok)) == tok


@pytest.mark.parametrize("m", range(3, 11))
def test_phi_edge_image_equality(m):
    image, target = W.phi_edge_image(m)
    assert image == target


# ---------------------------------------------------------------------------
# solver-backed deletion identities


@pytest.mark.parametrize("m", [4, 5, 6])
def test_dv_slice_deletion_drops_to_shorter_path_value(m):
    dg = double_vertex(path(m))
    for i in range(1, m + 1):
        got = alpha_after_deleting_tokens(dg, W.r_set_dv(m, i).members)
        assert got == (m - 1) ** 2 // 4


@pytest.mark.parametrize("m", [5, 6])
def test_dv_double_slice_deletion_is_strict(m):
    dg = double_vertex(path(m))
    for i in range(1, m + 1):
        for j in range(i + 2, m + 1):
            tokens = set(W.r_set_dv(m, i).members) | set(W.r_set_dv(m, j).members)
            assert alpha_after_deleting_tokens(dg, tokens) < (m - 1) ** 2 // 4


@pytest.mark.parametrize("m", [4, 5, 6])
def test_pair_slice_deletion_bound(m):
    dg = pair_graph(path(m))
    for i in range(1, m + 1):
        got = alpha_after_deleting_tokens(dg, W.r_set_pair(m, i).members)
        assert got <= m * m // 4 + 1
