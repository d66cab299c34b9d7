# -*- coding: utf-8 -*-

"""
healsim
Architectural self-healing simulator
----------------------------------------------------------------------------
(C) direct Netware Group - All rights reserved

The following license agreement remains valid unless any additions or
changes are being made by direct Netware Group in a written form.

This program is free software; you can redistribute it and/or modify it
under the terms of the GNU General Public License as published by the
Free Software Foundation; either version 2 of the License, or (at your
option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT
ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
FITNESS FOR A PARTICULAR PURPOSE. See the GNU General Public License for
more details.

You should have received a copy of the GNU General Public License along with
this program; if not, write to the Free Software Foundation, Inc.,
51 Franklin Street, Fifth Floor, Boston, MA 02110-1301, USA.
----------------------------------------------------------------------------
https://www.direct-netware.de/redirect?licenses;gpl
----------------------------------------------------------------------------
"""

from os import path
from time import sleep

import numpy
import pytest

from dNG.data.traced_exception import TracedException
from dNG.runtime.value_exception import ValueException

from healsim.data.experiments.experiment_spec import ExperimentSpec
from healsim.data.experiments.result_row import ResultRow
from healsim.data.experiments.trend_fit import TrendFit
from healsim.data.failure_profiles.failure_profiles import FailureProfiles
from healsim.data.failure_profiles.trace_generator import TraceGenerator
from healsim.simulation.simulation_config import SimulationConfig
from healsim.tasks.abstract_cell import AbstractCell
from healsim.tasks.cell_pool import CellPool
from healsim.tasks.reward_cell import RewardCell
from healsim.tasks.scalability_cell import ScalabilityCell

class DelayedCell(AbstractCell):
    """
Cell returning a single row after the given delay.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: tests
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self, number, delay):
        AbstractCell.__init__(self)

        self.delay = delay
        self.number = number
        self.context_id = "healsim.tests.DelayedCell.{0:d}".format(number)
    #

    def _run(self):
        sleep(self.delay)
        return [ ResultRow("test", "static", 18, "delayed", "number", self.number) ]
    #
#

def _create_reward_config(planner_id, seed = 0, likelihood = 1.0):
    return SimulationConfig(100,
                            planner_id,
                            rule_success_likelihood = likelihood,
                            seed = seed,
                            planning_time_mode = SimulationConfig.MODE_CALIBRATED
                           )
#

def _get_mean_reward(planner_id, trace_name, seeds, likelihood = 1.0):
    rewards = [ ]

    for seed in seeds:
        cell = RewardCell(_create_reward_config(planner_id, seed, likelihood), FailureProfiles.generate(trace_name, seed))
        rewards += [ row.value for row in cell.run() if row.metric == "reward" ]
    #

    return numpy.mean(rewards)
#

@pytest.mark.parametrize("workers", [ 1, 4 ])
def test_cell_pool_keeps_cell_order(workers):
    cells = [ DelayedCell(number, 0.01 * (5 - number)) for number in range(5) ]
    rows = CellPool(workers).run(cells)

    assert [ row.value for row in rows ] == [ 0.0, 1.0, 2.0, 3.0, 4.0 ]
#

def test_cell_pool_requires_workers():
    with pytest.raises(ValueException): CellPool(0)
#

def test_abstract_cell_is_not_implemented():
    with pytest.raises(TracedException): AbstractCell().run()
#

def test_result_row_values():
    with pytest.raises(ValueException): ResultRow("reward", "static", 18, "t", "reward", float("nan"))
    with pytest.raises(ValueException): ResultRow("reward", "static", 18, "t", "reward", 1.0, float("inf"))

    row = ResultRow("reward", "u-driven", 1800, "grid5000-short-s0", "reward", 12, 0.5)

    assert row.value == 12.0
    assert ResultRow.export([ row ]) == ("experiment,planner,size,trace,metric,value,stddev\n"
                                         "reward,u-driven,1800,grid5000-short-s0,reward,12.0,0.5\n"
                                        )
#

def test_result_row_csv_file(tmp_path):
    file_path_name = str(tmp_path / "results.csv")
    ResultRow.write_csv([ ResultRow("scalability", "static", 18, "synthetic-fgs1", "issues", 1) ], file_path_name)

    with open(file_path_name, "r", encoding = "utf-8") as file_obj: lines = file_obj.read().splitlines()
    assert lines == [ "experiment,planner,size,trace,metric,value,stddev", "scalability,static,18,synthetic-fgs1,issues,1.0,0.0" ]
#

def test_experiment_spec_validation():
    with pytest.raises(ValueException): ExperimentSpec("PLOT")
    with pytest.raises(ValueException): ExperimentSpec(ExperimentSpec.REWARD, repetitions = 0)
    with pytest.raises(ValueException): ExperimentSpec(ExperimentSpec.REWARD, shops = ( 1, 0 ))
    with pytest.raises(ValueException): ExperimentSpec(ExperimentSpec.REWARD, planner_ids = ( "random", ))
    with pytest.raises(ValueException): ExperimentSpec(ExperimentSpec.SCALABILITY, fgs_values = ( 0, ))
    with pytest.raises(ValueException): ExperimentSpec(ExperimentSpec.LIKELIHOOD, likelihoods = ( 1.0, 0.0 ))
    with pytest.raises(ValueException): ExperimentSpec(ExperimentSpec.LIKELIHOOD, likelihoods = ( 1.25, ))
#

def test_scalability_grid():
    spec = ExperimentSpec(ExperimentSpec.SCALABILITY, shops = ( 1, 10, 100 ), fgs_values = ( 1, 10, 100, 1000 ))
    populated, skipped = spec.get_scalability_grid()

    assert len(populated) + len(skipped) == 36
    assert sorted(set(( shops, fgs ) for _, shops, fgs in skipped)) == [ ( 1, 100 ), ( 1, 1000 ), ( 10, 1000 ) ]
    assert ( "oracle", 100, 1000 ) in populated

    assert ExperimentSpec.get_component_count(1) == 18
    assert ExperimentSpec.get_component_count(100) == 1800
#

def test_trend_fit():
    fgs_values = [ 1, 10, 100, 1000 ]

    linear = TrendFit(fgs_values, [ 0.5 + 0.25 * fgs for fgs in fgs_values ])
    assert linear.linear_r2 == pytest.approx(1.0)
    assert linear.linear_slope == pytest.approx(0.25)

    quadratic = TrendFit(fgs_values, [ fgs ** 2 for fgs in fgs_values ])
    assert quadratic.exponent == pytest.approx(2.0)
#

def test_trend_fit_requirements():
    with pytest.raises(ValueException): TrendFit([ 1, 10 ], [ 1.0, 2.0 ])
    with pytest.raises(ValueException): TrendFit([ 1, 10, 100 ], [ 1.0, 2.0 ])
    with pytest.raises(ValueException): TrendFit([ 1, 10, 100 ], [ 1.0, 0.0, 2.0 ])
#

def test_reward_cell_rows(tmp_path):
    config = SimulationConfig(1, "u-driven", planning_time_mode = SimulationConfig.MODE_CALIBRATED, planning_time_scale = 0.0)
    trace = TraceGenerator.generate_synthetic(3, 2, 50.0, 1)

    cell = RewardCell(config, trace, "synthetic-fgs3-s1", output_dir = str(tmp_path))
    rows = cell.run()

    assert [ row.metric for row in rows ] == [ "reward", "final_utility", "mape_runs", "rules_ok", "rules_failed", "likelihood" ]
    assert { row.size for row in rows } == { 18 }
    assert { row.trace_id for row in rows } == { "synthetic-fgs3-s1" }

    values = { row.metric: row.value for row in rows }

    assert values['reward'] == pytest.approx(cell.timeline.reward(0.0, 100.0))
    assert values['mape_runs'] >= 2
    assert values['rules_failed'] == 0.0
    assert values['likelihood'] == 1.0

    assert cell.get_file_prefix() == "reward_synthetic-fgs3-s1_u-driven_p100"
    assert path.isfile(str(tmp_path / "reward_synthetic-fgs3-s1_u-driven_p100_utility.csv"))
    assert path.isfile(str(tmp_path / "reward_synthetic-fgs3-s1_u-driven_p100_runs.csv"))
#

def test_scalability_cell_rows():
    cell = ScalabilityCell("u-driven", 1, 5, 3)
    model, annotations = cell.prepare()
    rows = cell.run()

    assert [ row.metric for row in rows ] == [ "planning_time_ms", "repetitions", "issues" ]
    assert { row.trace_id for row in rows } == { "synthetic-fgs5" }
    assert rows[0].value > 0
    assert 1 <= rows[1].value <= 3
    assert rows[2].value == len(annotations)
#

def test_scalability_cell_skips_oracle_above_limit():
    assert ScalabilityCell("oracle", 1, 10, 3, exhaustive_limit = 1).run() == [ ]
#

@pytest.mark.slow
def test_planning_time_trend():
    fgs_values = ( 1, 10, 100, 1000 )
    times = { }

    for planner_id in ( "static", "u-driven" ):
        cells = [ ScalabilityCell(planner_id, 100, fgs, 30, max_seconds = 30.0) for fgs in fgs_values ]
        times[planner_id] = [ rows[0].value for rows in ( cell.run() for cell in cells ) ]

        assert TrendFit(fgs_values, times[planner_id]).linear_r2 > 0.95
    #

    assert times['u-driven'][-1] < 3 * times['static'][-1]

    oracle_rows = ScalabilityCell("oracle", 100, 100, 3, max_seconds = 120.0).run()
    assert oracle_rows[0].value >= 10 * max(times['static'][2], times['u-driven'][2])
#

@pytest.mark.slow
def test_reward_ordering_on_grid5000():
    seeds = range(10)
    udriven = _get_mean_reward("u-driven", "grid5000", seeds)

    assert udriven > _get_mean_reward("static", "grid5000", seeds)
    assert udriven > _get_mean_reward("oracle", "grid5000", seeds)
#

@pytest.mark.slow
def test_reward_ordering_on_single_failures():
    seeds = range(3)

    udriven = _get_mean_reward("u-driven", "single", seeds)
    oracle = _get_mean_reward("oracle", "single", seeds)

    assert oracle == pytest.approx(udriven, rel = 0.01)
    assert min(udriven, oracle) > _get_mean_reward("static", "single", seeds)
#

@pytest.mark.slow
@pytest.mark.parametrize("planner_id", [ "static", "u-driven", "oracle" ])
def test_reward_decreases_with_likelihood(planner_id):
    rewards = [ _get_mean_reward(planner_id, "grid5000", range(3), likelihood) for likelihood in ( 1.0, 0.75, 0.5, 0.25 ) ]
    assert all(previous > reward for previous, reward in zip(rewards, rewards[1:]))
#
