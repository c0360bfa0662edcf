from __future__ import annotations

import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cogmap import (
    CognitiveMap,
    ValidationError,
    dumps_map,
    load_map,
    max_abs_weight,
    reachability_closure,
    save_map,
    scale_map,
    sparsify,
)
from conftest import cognitive_maps

from oracles import brute_force_paths


class TestLoadCsv:
    def test_four_vertex_map(self, fixture_maps):
        m = fixture_maps["four_stable"]
        assert m.n == 4
        assert m.weights[0, 1] == 0.391
        assert m.weights[0, 2] == -0.121
        assert m.weights[1, 3] == 1
        assert m.weights[2, 3] == -1
        assert m.weights[3, 0] == 1
        assert np.count_nonzero(m.weights) == 5

    def test_single_vertex(self):
        m = load_map("0\n", "csv")
        assert m.n == 1
        assert max_abs_weight(m) == 0.0

    def test_non_square_names_row(self):
        with pytest.raises(ValidationError, match="row 1"):
            load_map("1,2,3,0\n0,0,1,0\n0,0,0,1\n", "csv")

    def test_non_numeric_cell_names_position(self):
        with pytest.raises(ValidationError, match="row 2, column 1"):
            load_map("0,1\nx,0\n", "csv")

    def test_nan_cell_rejected(self):
        with pytest.raises(ValidationError, match="row 1, column 2"):
            load_map("0,nan\n0,0\n", "csv")

    def test_inf_cell_rejected(self):
        with pytest.raises(ValidationError, match="row 2, column 1"):
            load_map("0,1\ninf,0\n", "csv")

    def test_nonzero_diagonal_rejected(self):
        with pytest.raises(ValidationError, match="vertex 2"):
            load_map("0,1\n0,0.5\n", "csv")

    def test_empty_input(self):
        with pytest.raises(ValidationError, match="empty"):
            load_map("", "csv")

    def test_header_labels(self):
        m = load_map("a,b\n0,1\n-1,0\n", "csv")
        assert m.labels == ("a", "b")

    def test_decimal_comma(self):
        m = load_map("0;0,391\n-0,5;0\n", "csv", decimal_comma=True)
        assert m.weights[0, 1] == 0.391
        assert m.weights[1, 0] == -0.5


class TestLoadJson:
    def test_labels_round(self):
        m = load_map('{"labels": ["x", "y"], "weights": [[0, 1], [2, 0]]}', "json")
        assert m.labels == ("x", "y")
        assert m.weights[1, 0] == 2

    def test_non_square_names_row(self):
        with pytest.raises(ValidationError, match="row 2"):
            load_map('{"weights": [[0, 1], [2, 0, 3]]}', "json")

    def test_bad_json(self):
        with pytest.raises(ValidationError, match="invalid JSON"):
            load_map("{", "json")

    def test_non_numeric_cell(self):
        with pytest.raises(ValidationError, match="row 1, column 2"):
            load_map('{"weights": [[0, "x"], [1, 0]]}', "json")

    def test_label_count_mismatch(self):
        with pytest.raises(ValidationError, match="labels"):
            load_map('{"labels": ["a"], "weights": [[0, 1], [1, 0]]}', "json")

    def test_unknown_format(self):
        with pytest.raises(ValueError, match="unknown format"):
            load_map("0", "xml")


class TestRoundTrip:
    @pytest.mark.parametrize("fmt", ["csv", "json"])
    def test_fixtures_round_trip_both_formats(self, fmt, fixture_maps):
        for m in fixture_maps.values():
            assert load_map(dumps_map(m, fmt), fmt) == m

    @pytest.mark.parametrize("fmt", ["csv", "json"])
    @settings(max_examples=60)
    @given(m=cognitive_maps())
    def test_random_maps_round_trip(self, fmt, m):
        assert load_map(dumps_map(m, fmt), fmt) == m

    def test_save_to_stream(self, fixture_maps):
        buf = io.StringIO()
        save_map(fixture_maps["sanitation"], buf, "csv")
        assert load_map(buf.getvalue(), "csv") == fixture_maps["sanitation"]


class TestMaxAbsWeight:
    def test_fixture_values(self, fixture_maps):
        assert max_abs_weight(fixture_maps["four_stable"]) == 1.0
        assert max_abs_weight(fixture_maps["four_heavy"]) == 9.0

    def test_zero_map(self):
        assert max_abs_weight(CognitiveMap(np.zeros((3, 3)))) == 0.0

    @given(m=cognitive_maps(), eta=st.floats(0.01, 100))
    @settings(max_examples=40)
    def test_scales_with_eta(self, m, eta):
        assert max_abs_weight(scale_map(m, eta)) == pytest.approx(
            eta * max_abs_weight(m), rel=1e-12
        )


class TestReachability:
    def test_no_outgoing_edges(self, fixture_maps):
        reach = reachability_closure(fixture_maps["four_heavy"])
        assert not reach[0].any()

    def test_strongly_connected_matches_bfs(self, fixture_maps):
        m = fixture_maps["four_unstable"]
        reach = reachability_closure(m)
        for i in range(m.n):
            for j in range(m.n):
                has_path = bool(brute_force_paths(m.weights, i, j)) if i != j else None
                if i != j:
                    assert reach[i, j] == has_path
        assert all(reach[i, j] for i in range(4) for j in range(4) if i != j)

    def test_edgeless(self):
        reach = reachability_closure(CognitiveMap(np.zeros((3, 3))))
        assert not reach.any()

    @given(m=cognitive_maps())
    @settings(max_examples=50)
    def test_closure_unchanged_by_sparsify(self, m):
        reach = reachability_closure(m)
        assert np.array_equal(reachability_closure(sparsify(m, reach)), reach)

    @given(m=cognitive_maps())
    @settings(max_examples=50)
    def test_edges_imply_reachability(self, m):
        reach = reachability_closure(m)
        assert np.all(reach[m.weights != 0.0])


class TestSparsify:
    def test_identity_on_fixtures(self, fixture_maps):
        for name in ("four_stable", "four_heavy"):
            m = fixture_maps[name]
            assert sparsify(m, reachability_closure(m)) == m

    def test_edgeless_stays_zero(self):
        m = CognitiveMap(np.zeros((3, 3)))
        assert sparsify(m, reachability_closure(m)) == m


class TestScaleMap:
    def test_doubling_matches_bundled_fixture(self, fixture_maps):
        doubled = scale_map(fixture_maps["sanitation"], 2)
        assert np.allclose(
            doubled.weights, fixture_maps["sanitation_doubled"].weights, atol=1e-12
        )

    def test_identity(self, fixture_maps):
        m = fixture_maps["four_stable"]
        assert scale_map(m, 1) == m

    def test_elementwise(self, fixture_maps):
        m = fixture_maps["sanitation"]
        scaled = scale_map(m, 0.1)
        assert np.allclose(scaled.weights, m.weights * 0.1, rtol=1e-15)

    @pytest.mark.parametrize("eta", [0, -1, math.inf, math.nan])
    def test_bad_eta(self, eta, fixture_maps):
        with pytest.raises(ValueError):
            scale_map(fixture_maps["four_stable"], eta)

    @given(m=cognitive_maps(), a=st.floats(0.1, 10), b=st.floats(0.1, 10))
    @settings(max_examples=40)
    def test_composition(self, m, a, b):
        twice = scale_map(scale_map(m, a), b)
        once = scale_map(m, a * b)
        assert np.allclose(twice.weights, once.weights, rtol=1e-12, atol=0)


class TestCognitiveMapValidation:
    def test_weights_are_frozen(self, fixture_maps):
        with pytest.raises(ValueError):
            fixture_maps["four_stable"].weights[0, 0] = 5.0

    def test_rejects_non_square(self):
        with pytest.raises(ValidationError, match="square"):
            CognitiveMap(np.zeros((2, 3)))

    def test_rejects_nan(self):
        w = np.zeros((2, 2))
        w[0, 1] = np.nan
        with pytest.raises(ValidationError, match="row 1, column 2"):
            CognitiveMap(w)
