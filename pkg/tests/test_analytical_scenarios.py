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

import pytest

from dNG.runtime.value_exception import ValueException

from healsim.data.utility.utility_engine import UtilityEngine
from healsim.simulation.analytical_scenarios import AnalyticalScenarios

@pytest.fixture(scope = "module")
def baseline():
    return AnalyticalScenarios.run("baseline")
#

def _get_template_ids(timeline):
    return [ template_id for record in timeline.records for template_id in record.get_template_ids() ]
#

def test_baseline_plans(baseline):
    initial = UtilityEngine.total_utility(AnalyticalScenarios.create_model("baseline"))

    assert _get_template_ids(baseline['u-driven']) == [ "REPLACE(1)", "RESTART", "RESTART" ]
    assert _get_template_ids(baseline['static']) == [ "HW_REDEPLOY", "LW_REDEPLOY", "RESTART" ]
    assert _get_template_ids(baseline['oracle']) == _get_template_ids(baseline['u-driven'])

    assert baseline['u-driven'].get_final_utility() == pytest.approx(initial + 12.5)
    assert baseline['static'].get_final_utility() == pytest.approx(initial)
#

def test_baseline_failures_drop_utility_at_once(baseline):
    for timeline in baseline.values():
        assert timeline.breakpoints[0][0] == 0.0
        assert timeline.breakpoints[0][1] == pytest.approx(timeline.initial_utility - 35.0 - 6.4 - 2.1)
        assert timeline.end_time == AnalyticalScenarios.HORIZON
    #
#

def test_utility_increases_with_every_repair(baseline):
    for timeline in baseline.values():
        utilities = [ utility for _, utility in timeline.breakpoints ]
        assert utilities == sorted(utilities)
    #
#

def test_oracle_is_delayed(baseline):
    udriven_times = [ time for time, _ in baseline['u-driven'].breakpoints[1:] ]
    oracle_times = [ time for time, _ in baseline['oracle'].breakpoints[1:] ]

    assert len(udriven_times) == len(oracle_times) == 3

    for udriven_time, oracle_time in zip(udriven_times, oracle_times): assert oracle_time > udriven_time
    assert baseline['oracle'].reward() < baseline['u-driven'].reward()
#

def test_adverse_order_favours_udriven():
    timelines = AnalyticalScenarios.run("adverse-order", [ "static", "u-driven" ])

    assert _get_template_ids(timelines['u-driven']) == [ "RESTART", "RESTART", "LW_REDEPLOY" ]
    assert _get_template_ids(timelines['static']) == [ "HW_REDEPLOY", "LW_REDEPLOY", "RESTART" ]
    assert timelines['u-driven'].reward() > timelines['static'].reward()
#

def test_second_group_is_missed_by_busy_oracle():
    timelines = AnalyticalScenarios.run("second-group", [ "u-driven", "oracle" ])

    udriven_records = timelines['u-driven'].records
    oracle_records = timelines['oracle'].records

    assert udriven_records[0].get_end_time() == pytest.approx(14.59, abs = 0.01)
    assert oracle_records[0].get_end_time() == pytest.approx(17.17, abs = 0.01)

    assert udriven_records[1].trigger_time == AnalyticalScenarios.SECOND_GROUP_TIME
    assert oracle_records[1].trigger_time == pytest.approx(oracle_records[0].get_end_time())
    assert oracle_records[1].trigger_time > AnalyticalScenarios.SECOND_GROUP_TIME
#

def test_unreliable_rules_need_more_attempts():
    reliable = AnalyticalScenarios.run("reliable-rules", [ "u-driven" ])['u-driven']
    unreliable = AnalyticalScenarios.run("unreliable-rules", [ "u-driven" ])['u-driven']

    assert sum(record.rules_ok for record in reliable.records) == 3
    assert sum(record.rules_ok for record in unreliable.records) == 3
    assert sum(record.rules_failed for record in reliable.records) == 0
    assert unreliable.get_final_utility() == pytest.approx(reliable.get_final_utility())
    assert AnalyticalScenarios.create_config("unreliable-rules", "u-driven").rule_success_likelihood == 0.5
#

def test_unknown_scenario():
    with pytest.raises(ValueException): AnalyticalScenarios.run("unknown-scenario")
#

def test_scenario_aliases(baseline):
    assert AnalyticalScenarios.resolve("fig10a") == "baseline"
    assert AnalyticalScenarios.resolve("fig17b") == "unreliable-rules"
    assert AnalyticalScenarios.resolve("second-group") == "second-group"
    assert set(AnalyticalScenarios.ALIASES.values()) == set(AnalyticalScenarios.IDS)

    timelines = AnalyticalScenarios.run("fig10a", [ "u-driven" ])
    assert timelines['u-driven'].breakpoints == baseline['u-driven'].breakpoints
#
