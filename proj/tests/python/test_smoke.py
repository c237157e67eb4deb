# Copyright 2026 The Multiplicity Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import pytest

import multiplicity as mp


def test_version():
    assert mp.__version__


def test_counts_on_convex_sets():
    assert mp.catalan(10) == 16796
    assert mp.count(mp.PointSet.convex(12), "triangulation") == 16796
    assert mp.count(mp.convex_polygon(8), "perfect-matching") == 14
    assert len(mp.enumerate(mp.PointSet.convex(6), "triangulation")) == 14


def test_point_set_round_trip():
    ps = mp.PointSet.exact([(0, 0), (4, 0), ("1/2", 3)])
    again = mp.PointSet.from_json(ps.to_json())
    assert again.coordinates() == ps.coordinates()
    assert len(again) == 3 and again.is_exact


def test_extremal_and_tours():
    rep = mp.extremal(mp.s4_matching_gadget(8), "perfect-matching", "max")
    assert rep["multiplicity"] == 4
    tours = mp.longest_convex_tours(mp.PointSet.convex(10))
    assert len(tours) == 5


def test_bounds():
    assert mp.entropy(0.5) == pytest.approx(1.0)
    assert mp.tri_growth_rate(1) == pytest.approx(2 * math.sqrt(3))
    assert mp.evaluate_bound("tri", 1, [2 / 3, 1 / 3]) == pytest.approx(6 * math.sqrt(2))
    sc = mp.minimize_sc_upper_rate()
    assert sc["a"] == pytest.approx(0.466908, abs=1e-5)
    rep = mp.optimize("st", 2, restarts=2)
    assert abs(rep["base"] - 11.611) < 0.005


def test_limit_exceeded():
    with pytest.raises(mp.LimitExceeded):
        mp.count(mp.PointSet.convex(30), "spanning-tree")


def test_cli_entry_point():
    code, out, _ = mp.run_cli(["gen", "convex", "--n", "6"])
    assert code == 0
    assert len(json.loads(out)["points"]) == 6
    code, _, err = mp.run_cli(["count", "/nonexistent.json", "--class", "triangulation"])
    assert code == 2 and err
